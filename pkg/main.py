"""
covspec - Main Entry Point
Covering spectra of flat tori and Heisenberg manifolds, and Gassmann,
Kronecker, order and jump equivalence of subgroup pairs.

Usage:
    python main.py <verb> [options]
    python main.py catalog list --format table

Requirements:
    - sympy >= 1.12
    - numpy
    - pydantic >= 2
"""

import sys
import os

# Project root
PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, PROJECT_ROOT)


def print_banner():
    """Banner on stderr, only for interactive terminals; stdout carries the report."""
    if not sys.stderr.isatty():
        return
    from i18n import t
    print("=" * 60, file=sys.stderr)
    print(f"  {t('app_title')} - {t('app_subtitle')}", file=sys.stderr)
    print("=" * 60, file=sys.stderr)


def main() -> int:
    """Main application entry point."""
    from cli import run

    print_banner()
    try:
        return run(sys.argv[1:])
    except KeyboardInterrupt:
        print("\n[Main] Interrupted by user", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
