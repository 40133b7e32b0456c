"""
Clustered Hadwiger command-line entry point.

    python app.py partition --t 3 --capacity 1 sample_data/path20.graph
"""

import sys

from clustered_hadwiger.api.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
