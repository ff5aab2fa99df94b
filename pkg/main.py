"""Entry point to run the bettilab command line (when executed directly)."""

import sys

from cli import main

if __name__ == "__main__":
    sys.exit(main())
