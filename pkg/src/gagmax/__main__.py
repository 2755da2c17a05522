import sys

from gagmax.cli import main

sys.exit(main())
