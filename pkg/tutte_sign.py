#!/usr/bin/env python3
"""
Tutte sign toolkit launcher

Usage: python tutte_sign.py <command> [options]   (see --help)
"""
import sys
from pathlib import Path

# Project root on the path so `config` and `src` resolve
sys.path.insert(0, str(Path(__file__).parent))

from src.interfaces.cli import main

if __name__ == "__main__":
    sys.exit(main())
