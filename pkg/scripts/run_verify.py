#!/usr/bin/env python3
"""Run the full default identity sweep and write reports.

Equivalent to `hybridseq verify --out reports`; kept as a script so the
sweep is one command from a fresh checkout.
"""

import sys

from hybridseq.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", *sys.argv[1:]]))
