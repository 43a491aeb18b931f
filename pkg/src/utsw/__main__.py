import sys

from utsw.cli import main

sys.exit(main())
