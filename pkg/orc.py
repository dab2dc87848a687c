#!/usr/bin/env python3
"""
Oriented cut calculator

Runs a command script, reads commands from a pipe, or opens an interactive
prompt. Flags and ORC_* environment variables set fuel, grid, corpus,
output format and worker count; run with --help for the list.
"""

import sys

from orientedcut.cli import main

if __name__ == "__main__":
    sys.exit(main())
