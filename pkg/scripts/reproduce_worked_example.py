"""Print every intermediate of the modified RS algorithm on the standard 8-entry example."""

from __future__ import annotations

import argparse

from slinf.grammar import parse_values
from slinf.tableaux import class_split, corank, f_plus, modified_rs, rank, rs_tableaux


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("values", nargs="?", default="r2-1, 5, 9, r2+3, 5, r2+4, 7, 7")
    args = ap.parse_args()
    f = parse_values(args.values)
    g = f_plus(f)
    print("f      =", ", ".join(map(str, f)))
    print("f+     =", ", ".join(map(str, g)))
    for i, (seq, tab) in enumerate(zip(class_split(g), rs_tableaux(f)), 1):
        print(f"seq{i}   =", ", ".join(map(str, seq)))
        for row in tab.rows:
            print("         " + "  ".join(str(e) for e in row))
        print(f"shape{i} =", tab.shape)
    p = modified_rs(f)
    print(f"p(f)   = {p}  corank={corank(p)} rank={rank(p)}")


if __name__ == "__main__":
    main()
