import sys

from bicliques.cli import main

sys.exit(main())
