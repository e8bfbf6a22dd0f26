"""Allow ``python -m mmideal`` as an alias for the console script."""

import sys

from mmideal.cli import main

if __name__ == "__main__":
    sys.exit(main())
