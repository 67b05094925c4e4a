import sys
from pathlib import Path

# let the suite run from a fresh checkout without installing the package
sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
