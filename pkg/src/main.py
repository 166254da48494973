#!/usr/bin/env python3
"""
Hermann Flow - Main Application Entry Point

Command-line tool for the mean curvature flow of Hermann action orbits:
catalog inspection, equilibrium solving, flow integration, field sampling
and verification against printed reference values.
"""

import sys
from pathlib import Path

# Add the src directory to the Python path
sys.path.insert(0, str(Path(__file__).parent))

from ui.cli import run_command


def main():
    """Main application entry point."""
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
