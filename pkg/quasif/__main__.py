import sys

from quasif.cli import main

sys.exit(main())
