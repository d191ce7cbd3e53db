import sys

from finalg.cli import main

sys.exit(main())
