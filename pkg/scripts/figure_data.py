"""Write the data series behind the five figures to CSV files."""

import argparse
from pathlib import Path

from laguerre_spread.cli import figure_rows, write_csv


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("results"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for which in range(1, 6):
        header, rows = figure_rows(which)
        path = args.out / f"figure{which}.csv"
        with path.open("w", newline="\n") as fh:
            write_csv(header, rows, fh)
        print(f"figure {which}: {len(rows)} rows -> {path}")


if __name__ == "__main__":
    main()
