"""Test candidate multiplication rules for the infinite factors against level sets."""

from __future__ import annotations

import argparse

from slinf.cls import Linf, Rinf
from slinf.levels import cls_level, set_mul


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=6)
    ap.add_argument("--max-level", type=int, default=4)
    args = ap.parse_args()
    for make in (Linf, Rinf):
        for a in range(1, args.max_level + 1):
            for b in range(a, args.max_level + 1):
                for n in (3, 4, 5):
                    prod = set_mul(cls_level(make(a), n, args.cap), cls_level(make(b), n, args.cap))
                    add = cls_level(make(a + b), n, args.cap)
                    mx = cls_level(make(max(a, b)), n, args.cap)
                    print(
                        f"{make(a)} * {make(b)} n={n}: "
                        f"max rule {'ok' if prod.weights == mx.weights else 'FAILS'}, "
                        f"additive rule {'ok' if prod.weights == add.weights else 'FAILS'}"
                    )


if __name__ == "__main__":
    main()
