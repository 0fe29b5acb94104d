"""Write structure-constant tables for the presets to a directory.

    python3 scripts/export_structure_constants.py out/
"""

import argparse
import io
from pathlib import Path

from gencartan.cli import main as cli

TABLES = {
    "example-2.txt": ["preset:example-2", "--window", "-1..1/1"],
    "example-4-k2.txt": ["preset:example-4:k=2", "--window", "-1..1,-1..1,0..0,0..0"],
    "example-5.txt": ["preset:example-5", "--window", "-1..1"],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", type=Path)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for fname, argv in TABLES.items():
        buf = io.StringIO()
        code = cli(["structure-constants", *argv], out=buf)
        if code:
            raise SystemExit(code)
        (args.outdir / fname).write_text(buf.getvalue())
        print(f"{fname}: {buf.getvalue().count(chr(10))} records")


if __name__ == "__main__":
    main()
