import sys

from gtzlab.cli import main

sys.exit(main())
