import sys

from conetile.cli.main import main

sys.exit(main())
