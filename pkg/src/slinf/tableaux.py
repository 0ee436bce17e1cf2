"""Modified Robinson-Schensted algorithm for primitive ideals of sl(n).

Pipeline for a finite weight ``f``:

1. ``f_plus``: subtract ``i - 1`` from the ``i``-th entry;
2. ``class_split``: group positions into integrality classes;
3. within a class, order entries by value and break ties so that a later
   position is the larger one;
4. Schensted-insert each class against the *reversed* order, so rows are
   strictly decreasing and the first row has the length of a longest strictly
   decreasing subsequence;
5. take the multiset union of the class shapes.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalars import ScalarValue, shift


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class TaggedEntry:
    """An entry of ``f_plus`` remembering its original (0-based) position."""

    value: ScalarValue
    position: int

    def key(self) -> tuple[Fraction, int]:
        return (self.value.offset, self.position)

    def __str__(self) -> str:
        return f"{self.value}@{self.position + 1}"


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[TaggedEntry, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def values(self) -> list[list[ScalarValue]]:
        return [[e.value for e in row] for row in self.rows]


def f_plus(f: Sequence[ScalarValue]) -> list[ScalarValue]:
    return [shift(v, -i) for i, v in enumerate(f)]


def f_sharp(f: Sequence[ScalarValue]) -> list[ScalarValue]:
    return [shift(v, i) for i, v in enumerate(f)]


def class_split_positions(g: Sequence[ScalarValue]) -> list[list[int]]:
    """Positions grouped by integrality class, classes in order of first occurrence."""
    classes: dict[tuple, list[int]] = {}
    for i, v in enumerate(g):
        classes.setdefault(v.class_key(), []).append(i)
    return list(classes.values())


def class_split(g: Sequence[ScalarValue]) -> list[list[ScalarValue]]:
    return [[g[i] for i in idx] for idx in class_split_positions(g)]


def _neg_key(e: TaggedEntry) -> tuple[Fraction, int]:
    v, p = e.key()
    return (-v, -p)


def insert_decreasing(entries: Sequence[TaggedEntry]) -> Tableau:
    """Schensted insertion with rows strictly decreasing in ``TaggedEntry.key``."""
    rows: list[list[TaggedEntry]] = []
    for x in entries:
        for row in rows:
            # leftmost entry smaller than x gets bumped
            j = bisect.bisect_right(row, _neg_key(x), key=_neg_key)
            if j == len(row):
                row.append(x)
                x = None
                break
            row[j], x = x, row[j]
        if x is not None:
            rows.append([x])
    return Tableau(tuple(tuple(r) for r in rows))


def rs_tableaux(f: Sequence[ScalarValue]) -> list[Tableau]:
    """One insertion tableau per integrality class of ``f_plus(f)``."""
    g = f_plus(f)
    return [insert_decreasing([TaggedEntry(g[i], i) for i in idx]) for idx in class_split_positions(g)]


def modified_rs(f: Sequence[ScalarValue]) -> Partition:
    parts: list[int] = []
    for t in rs_tableaux(f):
        parts.extend(t.shape.parts)
    return Partition.from_parts(parts)


def corank(p: Partition) -> int:
    return p.parts[0] if p.parts else 0


def rank(p: Partition) -> int:
    return p.size - corank(p)


def lds_oracle(f: Sequence[ScalarValue]) -> int:
    """Longest strictly decreasing run of ``f_plus`` inside one integrality class (O(n^2) DP)."""
    g = f_plus(f)
    best = [1] * len(g)
    for j in range(len(g)):
        for i in range(j):
            if g[i].label == g[j].label and g[i].class_key() == g[j].class_key() and g[i].offset > g[j].offset:
                best[j] = max(best[j], best[i] + 1)
    return max(best, default=0)


def class_rearrange(f: Sequence[ScalarValue]) -> list[ScalarValue]:
    g = f_plus(f)
    return f_sharp([v for cls in class_split(g) for v in cls])
