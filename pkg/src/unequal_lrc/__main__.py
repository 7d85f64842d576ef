import sys

from unequal_lrc.cli import main

sys.exit(main())
