#!/usr/bin/env python3
"""twistcdc command line. Run from the repository root: python cli.py --help"""
import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
