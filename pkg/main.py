"""CLI entrypoint."""

import sys

from xiprime.app import main


if __name__ == "__main__":
    sys.exit(main())
