"""Allow ``python -m depthkit``."""

import sys

from depthkit.cli.main import main

sys.exit(main())
