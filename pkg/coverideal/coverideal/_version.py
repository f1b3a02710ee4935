# This is where the version number is set and read by setup.py

__version__ = '0.3.0'
codename = 'Chordless'
