#!/usr/bin/env python3
"""
Launcher for the theorem check.

Runs the default verification grid and writes data/processed/theorem_check.tsv
relative to the current directory. Extra arguments are passed through, e.g.
`python run_theorem_check.py --family C --max-rank 4`.
"""

import sys
import os

# Add src directory to Python path
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)  # Go up one level from launchers
src_dir = os.path.join(project_root, 'src')
sys.path.insert(0, src_dir)

from main import main

if __name__ == "__main__":
    sys.exit(main(['theorem-check', *sys.argv[1:]]))
