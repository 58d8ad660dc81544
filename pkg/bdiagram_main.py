#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import sys
from pathlib import Path

# Add project root to path to enable imports
project_root = Path(__file__).resolve().parent
sys.path.insert(0, str(project_root))

from cli import main

if __name__ == "__main__":
    sys.exit(main())
