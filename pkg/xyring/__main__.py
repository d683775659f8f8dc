# -*- coding: UTF-8 -*-
"""Run the command line as ``python -m xyring``."""

import sys

from xyring.cli import main

if __name__ == "__main__":
    sys.exit(main())
