#!/usr/bin/env python3
"""Run the full reduction pipeline and print the report.

Equivalent to `symreduce reduce`, kept as a script so the pipeline can be
run straight from a checkout without installing entry points.
"""

import sys

sys.path.insert(0, "src")

from symreduce.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main(["reduce", *sys.argv[1:]]))
