import sys
from pathlib import Path

# tests import the workbench as the top-level package `scripts`
sys.path.insert(0, str(Path(__file__).resolve().parent))
