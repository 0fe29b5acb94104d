import sys

from gencartan.cli import main

sys.exit(main())
