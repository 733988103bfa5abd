import sys

from divpart.cli import main

sys.exit(main())
