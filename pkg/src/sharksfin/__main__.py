import sys

from sharksfin.cli import main

sys.exit(main())
