"""coverideal.__main__: executed when coverideal directory is called as script."""

import sys

import coverideal.cli

if __name__ == '__main__':
    sys.exit(coverideal.cli.main())
