# main.py
import os
import sys
import logging

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from cli.app import main  # noqa: E402

logging.basicConfig(level=os.getenv("LOG_LEVEL", "WARNING"), stream=sys.stderr)

if __name__ == "__main__":
    sys.exit(main())
