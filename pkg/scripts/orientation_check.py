"""Compare the closed-form c.l.s. of dominant functions with direct branching.

For random dominant integral functions on ideal orders, the level sets of
``cls_of_dominant(f)`` are compared with the constituents obtained by
restricting a large finite window of the highest weight ``f`` down to rank n.
Also reports how the opposite (left/right swapped) reading fares.
"""

from __future__ import annotations

import argparse
import random
from fractions import Fraction

from slinf.cls import ClsCanonical, cls_of_dominant
from slinf.levels import cls_level, highest_weight_level
from slinf.orders import Fin, FunctionSpec, Omega, OmegaStar
from slinf.scalars import ScalarValue


def random_dominant(rng: random.Random) -> FunctionSpec:
    # a non-increasing sequence of levels split into head / tail / middle / tail / top
    vals = sorted((rng.randint(0, 4) for _ in range(rng.randint(2, 9))), reverse=True)
    v = [ScalarValue("", Fraction(x)) for x in vals]
    i = rng.randint(0, len(v) - 1)
    j = rng.randint(i, len(v) - 1)
    head, first, middle, last, top = v[:i], v[i], v[i + 1:j], v[j], v[j + 1:]
    segs = [Omega(first, tuple(head))]
    if middle:
        segs.append(Fin(tuple(middle)))
    segs.append(OmegaStar(last, tuple(reversed(top))))
    return FunctionSpec(tuple(segs))


def swapped(q: ClsCanonical) -> ClsCanonical:
    return ClsCanonical(left=q.right, m=q.m, right=q.left)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    agree = agree_swapped = 0
    for _ in range(args.trials):
        f = random_dominant(rng)
        q = cls_of_dominant(f)
        ok = ok_sw = True
        for n in (3, 4):
            truth = highest_weight_level(f, n, n + 2).weights
            ok &= cls_level(q, n).weights == truth
            ok_sw &= cls_level(swapped(q), n).weights == truth
        agree += ok
        agree_swapped += ok_sw
        if not ok:
            print("mismatch:", f, "->", q)
    print(f"trials={args.trials} closed-form agrees={agree} swapped reading agrees={agree_swapped}")


if __name__ == "__main__":
    main()
