"""Regenerate the four bound tables as CSV and list divergences from the
reference optima.

    python3 scripts/reproduce_tables.py --out results/
"""

import argparse
from pathlib import Path

from laguerre_spread.cli import TABLE_HEADER, table_divergences, table_rows, write_csv


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("results"))
    parser.add_argument("--tables", type=int, nargs="+", default=[1, 2, 3, 4])
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for which in args.tables:
        rows = table_rows(which)
        path = args.out / f"table{which}.csv"
        with path.open("w", newline="\n") as fh:
            write_csv(TABLE_HEADER, rows, fh)
        notes = table_divergences(which, rows)
        print(f"table {which}: wrote {path}, {len(notes)} divergence(s)")
        for note in notes:
            print(f"  {note}")


if __name__ == "__main__":
    main()
