"""Command line interface for direct package execution.

Usage:
    python -m partverify
"""
from .cli import main

if __name__ == "__main__":
    main()
