import sys

from fibalg.cli import main

sys.exit(main())
