# Copyright (C) 2026: The coverideal developers
#
# This file is part of coverideal.
#
# coverideal is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# coverideal is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with coverideal.  If not, see <http://www.gnu.org/licenses/>.

from contextlib import contextmanager
import codecs
from shutil import get_terminal_size
import sys
from time import perf_counter

from colorama import init
from colorama import Fore
from colorama import Style
init()

# Set to True (e.g. by the --quiet command line flag) to silence warnings
quiet = False


def get_terminal_width():
    """Get/set width of terminal being used.

    Returns:
        terminalwidth (int): Terminal width
    """

    terminalwidth = get_terminal_size()[0]
    if terminalwidth == 0:
        terminalwidth = 100

    return terminalwidth


def banner(text, fill='='):
    """Pads a heading line with a fill character to the terminal width.

    Args:
        text (str): Heading text.
        fill (str): Fill character.

    Returns:
        (str): Padded heading.
    """

    return '{} {}'.format(text, fill * max(get_terminal_width() - 1 - len(text), 0))


def warn(message):
    """Prints a warning in red on standard error.

    Args:
        message (str): Warning text.
    """

    if not quiet:
        print(Fore.RED + 'WARNING: {}'.format(message) + Style.RESET_ALL, file=sys.stderr)


def error(message):
    """Prints an error diagnostic in red on standard error.

    Args:
        message (str): Error text.
    """

    print(Fore.RED + 'ERROR: {}'.format(message) + Style.RESET_ALL, file=sys.stderr)


@contextmanager
def open_path_file(path_or_file):
    """
    Accepts either a path as a string or a file object and returns a file
    object (http://stackoverflow.com/a/6783680).

    Args:
        path_or_file: path as a string or a file object.

    Returns:
        f (object): File object.
    """

    if isinstance(path_or_file, str):
        f = file_to_close = codecs.open(path_or_file, 'r', encoding='utf-8')
    else:
        f = path_or_file
        file_to_close = None

    try:
        yield f
    finally:
        if file_to_close:
            file_to_close.close()


def popcount(mask):
    """Number of set bits of a non-negative integer."""
    return bin(mask).count('1')


def iter_bits(mask):
    """Yields the indices of the set bits of mask in increasing order.

    Args:
        mask (int): Bitmask.
    """

    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_from_indices(indices):
    """Builds a bitmask from an iterable of indices.

    Args:
        indices (iterable): Non-negative integers.

    Returns:
        mask (int): Bitmask with exactly those bits set.
    """

    mask = 0
    for i in indices:
        mask |= 1 << i

    return mask


def timer():
    """Function to return the current process wide time in fractional seconds."""
    return perf_counter()
