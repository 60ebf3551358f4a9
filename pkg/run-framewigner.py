#!/usr/bin/env python3
"""
framewigner launcher
Run the command-line tools from the project root without installing the package
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from framewigner.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
