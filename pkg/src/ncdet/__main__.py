import sys

from ncdet.cli import main

sys.exit(main())
