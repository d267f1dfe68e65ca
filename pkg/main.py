"""Main entry point for the cooploc command-line interface."""

import sys

from cooploc.cli import main

if __name__ == "__main__":
    sys.exit(main())
