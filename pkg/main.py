"""
grc entry point: ``python main.py <command> ...``
"""

import sys

from grc.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
