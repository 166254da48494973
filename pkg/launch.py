#!/usr/bin/env python3
"""
Launch script for Hermann Flow

Checks the interpreter and the numeric dependencies, then runs the command
line with the given arguments.
"""

import sys
from pathlib import Path

REQUIRED = ("numpy", "scipy", "colorlog", "tabulate", "yaml", "dotenv")


def check_python_version():
    """Check if Python version is compatible."""
    if sys.version_info < (3, 8):
        print("Error: Python 3.8 or higher is required.", file=sys.stderr)
        print(f"Current version: {sys.version}", file=sys.stderr)
        return False
    return True


def check_dependencies():
    """Check if required dependencies are installed."""
    missing = []
    for name in REQUIRED:
        try:
            __import__(name)
        except ImportError:
            missing.append(name)
    if missing:
        print(f"✗ Missing packages: {', '.join(missing)}. Please install dependencies:", file=sys.stderr)
        print("  pip install -r requirements.txt", file=sys.stderr)
        return False
    return True


def main():
    """Main launch function."""
    if not check_python_version():
        sys.exit(1)

    if not check_dependencies():
        sys.exit(1)

    try:
        src_path = Path(__file__).parent / "src"
        sys.path.insert(0, str(src_path))

        from ui.cli import run_command
        sys.exit(run_command(sys.argv[1:]))

    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        sys.exit(130)


if __name__ == "__main__":
    main()
