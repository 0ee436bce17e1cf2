"""Level sets of c.l.s.: finite sets of sl(n) dominant weights.

Weights are stored normalized: ``n`` weakly decreasing integers whose last
entry is 0.  Infinite level sets are truncated by the *degree*

    deg(lam) = sum_{i <= n/2} (lam_i - lam_{n+1-i}),

the least possible ``sum |lam_i - c|`` over integer shifts ``c``.  The degree
is additive under Cartan products, invariant under duality, and does not grow
under branching, so truncations of products and restrictions are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .cls import ClsCanonical, cls_is_finite_type
from .errors import EInfinityNotEnumerable, NonIntegralInput, NotDominant, RankMismatch
from .orders import FunctionSpec, is_dominant, is_integral

DEFAULT_CAP = 6


@dataclass(frozen=True, order=True)
class DominantWeight:
    coords: tuple[int, ...]

    def __post_init__(self):
        c = tuple(self.coords)
        if len(c) < 2:
            raise ValueError("rank must be at least 2")
        if any(a < b for a, b in zip(c, c[1:])):
            raise ValueError(f"not dominant: {c}")
        object.__setattr__(self, "coords", tuple(x - c[-1] for x in c))

    @classmethod
    def of(cls, parts: Sequence[int], n: int) -> "DominantWeight":
        """Pad a partition (or gl weight) to rank ``n`` and normalize."""
        parts = list(parts)
        if len(parts) > n:
            raise ValueError(f"{parts} has more than {n} entries")
        return cls(tuple(parts) + (0,) * (n - len(parts)) if parts else (0,) * n)

    @classmethod
    def trivial(cls, n: int) -> "DominantWeight":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coords[:-1])) + ")"


def degree(w: DominantWeight) -> int:
    c = w.coords
    n = len(c)
    return sum(c[i] - c[n - 1 - i] for i in range(n // 2))


def dual(w: DominantWeight) -> DominantWeight:
    top = w.coords[0]
    return DominantWeight(tuple(top - x for x in reversed(w.coords)))


@dataclass(frozen=True)
class WeightSet:
    n: int
    weights: frozenset[DominantWeight] = field(default_factory=frozenset)
    cap: int | None = None  # None: the set is exact, otherwise all weights of degree <= cap

    def __post_init__(self):
        ws = frozenset(self.weights)
        if any(w.n != self.n for w in ws):
            raise RankMismatch(f"weights of mixed rank in a rank-{self.n} set")
        if self.cap is not None:
            ws = frozenset(w for w in ws if degree(w) <= self.cap)
        object.__setattr__(self, "weights", ws)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[DominantWeight]:
        return iter(sorted(self.weights))

    def __contains__(self, w) -> bool:
        return w in self.weights

    def truncate(self, cap: int) -> "WeightSet":
        return WeightSet(self.n, self.weights, cap if self.cap is None else min(cap, self.cap))

    def __str__(self) -> str:
        return "{" + ", ".join(str(w) for w in self) + "}"


def _min_cap(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def cartan_mul(a: DominantWeight, b: DominantWeight) -> DominantWeight:
    if a.n != b.n:
        raise RankMismatch(f"ranks {a.n} and {b.n} differ")
    return DominantWeight(tuple(x + y for x, y in zip(a.coords, b.coords)))


def set_mul(a: WeightSet, b: WeightSet) -> WeightSet:
    if a.n != b.n:
        raise RankMismatch(f"ranks {a.n} and {b.n} differ")
    cap = _min_cap(a.cap, b.cap)
    out = set()
    for x in a.weights:
        dx = degree(x)
        for y in b.weights:
            if cap is None or dx + degree(y) <= cap:
                out.add(cartan_mul(x, y))
    return WeightSet(a.n, frozenset(out), cap)


def trivial_set(n: int) -> WeightSet:
    return WeightSet(n, frozenset([DominantWeight.trivial(n)]))


def _column(j: int, n: int) -> DominantWeight:
    return DominantWeight.of([1] * j, n) if j < n else DominantWeight.trivial(n)


def partitions_in_box(rows: int, width: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of length ``rows`` with entries in ``0..width``."""
    if rows == 0:
        yield ()
        return
    for first in range(width, -1, -1):
        for rest in partitions_in_box(rows - 1, first):
            yield (first,) + rest


def _rows_bounded(rows: int, n: int, cap: int) -> WeightSet:
    rows = min(rows, n - 1)
    ws = {DominantWeight.of(p, n) for p in partitions_in_box(rows, cap)}
    return WeightSet(n, frozenset(ws), cap)


def basic_level(kind: str, index: int, n: int, cap: int | None = DEFAULT_CAP) -> WeightSet:
    """Level-``n`` set of a basic c.l.s.

    ``kind`` is one of ``E``, ``L``, ``R``, ``Linf``, ``Rinf``; ``index`` is
    ignored for ``E``.  ``cap`` only applies to the infinite kinds.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    if kind == "E":
        return WeightSet(n, frozenset(_column(j, n) for j in range(n)))
    if kind == "L":
        return WeightSet(n, frozenset(_column(j, n) for j in range(min(index, n) + 1)))
    if kind == "R":
        return WeightSet(n, frozenset(dual(_column(j, n)) for j in range(min(index, n) + 1)))
    if kind in ("Linf", "Rinf"):
        if cap is None:
            raise ValueError(f"{kind}({index}) has infinite level sets; a degree cap is required")
        ws = _rows_bounded(index, n, cap)
        if kind == "Rinf":
            ws = WeightSet(n, frozenset(dual(w) for w in ws.weights), cap)
        return ws
    if kind == "Einf":
        raise EInfinityNotEnumerable("Einf contains every weight")
    raise ValueError(f"unknown basic c.l.s. {kind!r}")


def cls_level(q: ClsCanonical, n: int, cap: int | None = DEFAULT_CAP) -> WeightSet:
    """Level-``n`` set of ``q``: exact for finite type, degree-truncated otherwise."""
    if q.e_infinity:
        raise EInfinityNotEnumerable("Einf contains every weight")
    if cls_is_finite_type(q):
        cap = None
    elif cap is None:
        raise ValueError(f"{q} has infinite level sets; a degree cap is required")
    out = trivial_set(n) if cap is None else trivial_set(n).truncate(cap)
    for kind, index in q.factors():
        out = set_mul(out, basic_level(kind, index, n, cap))
    return out


def branch_patterns(w: DominantWeight) -> Iterator[tuple[int, ...]]:
    """gl(n-1) highest weights interlacing ``w`` (with multiplicity one each)."""
    c = w.coords
    ranges = [range(c[i + 1], c[i] + 1) for i in range(len(c) - 1)]
    yield from itertools.product(*ranges)


def branch(w: DominantWeight) -> WeightSet:
    if w.n < 3:
        raise ValueError("branching needs rank at least 3")
    return WeightSet(w.n - 1, frozenset(DominantWeight(mu) for mu in branch_patterns(w)))


def branch_set(ws: WeightSet) -> WeightSet:
    out: set[DominantWeight] = set()
    for w in ws.weights:
        out |= branch(w).weights
    return WeightSet(ws.n - 1, frozenset(out), ws.cap)


def weyl_dimension(w: DominantWeight) -> int:
    c = w.coords
    n = len(c)
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= c[i] - c[j] + j - i
            den *= j - i
    return num // den


@dataclass(frozen=True)
class CoherenceReport:
    n: int
    cap: int | None
    coherent: bool
    missing: frozenset[DominantWeight]  # in the level n-1 set but not reached by branching
    extra: frozenset[DominantWeight]  # reached by branching but absent at level n-1

    @property
    def exact(self) -> bool:
        return self.cap is None

    def __str__(self) -> str:
        verdict = "coherent" if self.coherent else "incoherent"
        cap = "exact" if self.cap is None else f"cap={self.cap}"
        return f"{verdict} n={self.n} {cap} missing={len(self.missing)} extra={len(self.extra)}"


def compare_levels(upper: WeightSet, lower: WeightSet) -> CoherenceReport:
    """Check that branching ``upper`` (rank n) reproduces ``lower`` (rank n-1).

    For truncated sets every branched weight must lie in ``lower``, and every
    weight of ``lower`` of degree at most ``cap // 2`` must be reached: a lift
    of such a weight to rank n has degree at most twice its own.
    """
    if upper.n < 3 or lower.n != upper.n - 1:
        raise RankMismatch(f"cannot compare ranks {upper.n} and {lower.n}")
    cap = _min_cap(upper.cap, lower.cap)
    reached = branch_set(upper)
    if cap is not None:
        reached = reached.truncate(cap)
    extra = reached.weights - lower.weights
    if cap is None:
        missing = lower.weights - reached.weights
    else:
        missing = frozenset(w for w in lower.weights if degree(w) <= cap // 2) - reached.weights
    return CoherenceReport(upper.n, cap, not extra and not missing, frozenset(missing), frozenset(extra))


def coherence_check(q: ClsCanonical, n: int, cap: int | None = DEFAULT_CAP) -> CoherenceReport:
    """Branching check of the level sets of ``q`` at ranks ``n`` and ``n-1``."""
    if n < 3:
        raise ValueError("coherence needs rank at least 3")
    return compare_levels(cls_level(q, n, cap), cls_level(q, n - 1, cap))


def highest_weight_level(f: FunctionSpec, n: int, k: int) -> WeightSet:
    """Level-``n`` constituents of the module with dominant highest weight ``f``.

    The function is restricted to a finite window (``k`` positions inside each
    infinite block beyond its finite head/top); the resulting finite-rank
    highest weight is branched down to rank ``n``.  This follows the definition
    of the c.l.s. of a module directly and shares no code with the closed form
    in :mod:`slinf.cls`.
    """
    if not is_integral(f):
        raise NonIntegralInput(f"{f} is not integral")
    if not is_dominant(f):
        raise NotDominant(f"{f} is not dominant")
    vals = f.materialize(k)
    lo = min(v.offset for v in vals)
    coords = tuple(int(v.offset - lo) for v in vals)
    if len(coords) < n:
        raise ValueError(f"window of size {len(coords)} is smaller than rank {n}")
    level = WeightSet(len(coords), frozenset([DominantWeight(coords)]))
    while level.n > n:
        level = branch_set(level)
    return level


def union(sets: Iterable[WeightSet]) -> WeightSet:
    sets = list(sets)
    n = sets[0].n
    caps = [s.cap for s in sets if s.cap is not None]
    return WeightSet(n, frozenset().union(*(s.weights for s in sets)), min(caps) if caps else None)
