"""Finitely presented linear orders and weight functions on them.

A weight function is a concatenation of segments, read in the order of the
underlying linear order (written ``<`` below):

* ``Fin``: finitely many values;
* ``Omega``: an omega-ordered block, optional finite head, then a constant tail;
* ``OmegaStar``: an omega*-ordered block, constant tail, then a finite top whose
  first entry sits at the greatest position;
* ``OmegaArith`` / ``OmegaStarArith``: arithmetic progressions along an omega
  block (from its start) or an omega* block (from its top).

The arithmetic segments are the only way to express functions that are not
locally constant, or not almost integral along an infinite block.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import NonIntegralInput, NotLocallyConstant
from .grammar import Scanner
from .scalars import ScalarValue, int_congruent


def _values(vs) -> tuple[ScalarValue, ...]:
    return tuple(vs)


def _fmt(vs) -> str:
    return "[" + ", ".join(str(v) for v in vs) + "]"


@dataclass(frozen=True)
class Fin:
    values: tuple[ScalarValue, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", _values(self.values))
        if not self.values:
            raise ValueError("a finite segment needs at least one value")

    def __str__(self) -> str:
        return _fmt(self.values)


@dataclass(frozen=True)
class Omega:
    tail: ScalarValue
    head: tuple[ScalarValue, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "head", _values(self.head))

    def __str__(self) -> str:
        if self.head:
            return f"omega({self.tail}; head={_fmt(self.head)})"
        return f"omega({self.tail})"


@dataclass(frozen=True)
class OmegaStar:
    tail: ScalarValue
    top: tuple[ScalarValue, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "top", _values(self.top))

    def __str__(self) -> str:
        if self.top:
            return f"omega*({self.tail}; top={_fmt(self.top)})"
        return f"omega*({self.tail})"


@dataclass(frozen=True)
class OmegaArith:
    base: ScalarValue
    step: Fraction

    def __post_init__(self):
        object.__setattr__(self, "step", Fraction(self.step))

    def __str__(self) -> str:
        return f"omega({self.base}, step={self.step})"


@dataclass(frozen=True)
class OmegaStarArith:
    base: ScalarValue
    step: Fraction

    def __post_init__(self):
        object.__setattr__(self, "step", Fraction(self.step))

    def __str__(self) -> str:
        return f"omega*({self.base}, step={self.step})"


Segment = Union[Fin, Omega, OmegaStar, OmegaArith, OmegaStarArith]
ARITH = (OmegaArith, OmegaStarArith)


def _strip(seg: Segment) -> Segment:
    # head/top entries adjacent to the tail and equal to it belong to the tail
    if isinstance(seg, Omega):
        head = list(seg.head)
        while head and head[-1] == seg.tail:
            head.pop()
        return Omega(seg.tail, tuple(head))
    if isinstance(seg, OmegaStar):
        top = list(seg.top)
        while top and top[-1] == seg.tail:
            top.pop()
        return OmegaStar(seg.tail, tuple(top))
    if isinstance(seg, OmegaArith) and seg.step == 0:
        return Omega(seg.base)
    if isinstance(seg, OmegaStarArith) and seg.step == 0:
        return OmegaStar(seg.base)
    return seg


def _normalize_segments(segments) -> tuple[Segment, ...]:
    segs = [_strip(s) for s in segments]
    changed = True
    while changed:
        changed = False
        out: list[Segment] = []
        for s in segs:
            prev = out[-1] if out else None
            if isinstance(prev, Fin) and isinstance(s, Fin):
                out[-1] = Fin(prev.values + s.values)
            elif isinstance(prev, Fin) and isinstance(s, Omega):
                out[-1] = _strip(Omega(s.tail, prev.values + s.head))
            elif isinstance(prev, OmegaStar) and isinstance(s, Fin):
                out[-1] = _strip(OmegaStar(prev.tail, tuple(reversed(s.values)) + prev.top))
            else:
                out.append(s)
                continue
            changed = True
        segs = out
    return tuple(segs)


@dataclass(frozen=True)
class Block:
    kind: str  # "fin", "omega" or "omega*"
    size: int = 0

    def __post_init__(self):
        if self.kind not in ("fin", "omega", "omega*"):
            raise ValueError(f"unknown block kind {self.kind!r}")
        if self.kind == "fin" and self.size < 1:
            raise ValueError("finite blocks are nonempty")

    def __str__(self) -> str:
        return f"fin({self.size})" if self.kind == "fin" else self.kind


OMEGA = Block("omega")
OMEGA_STAR = Block("omega*")


def fin(k: int) -> Block:
    return Block("fin", k)


def _normalize_blocks(blocks) -> tuple[Block, ...]:
    out: list[Block] = []
    for b in blocks:
        prev = out[-1] if out else None
        if prev is not None and prev.kind == "fin" and b.kind == "fin":
            out[-1] = fin(prev.size + b.size)
        elif prev is not None and prev.kind == "fin" and b.kind == "omega":
            # fin + omega is again omega
            out[-1] = b
        elif prev is not None and prev.kind == "omega*" and b.kind == "fin":
            pass
        else:
            out.append(b)
    return tuple(out)


@dataclass(frozen=True)
class BorelOrder:
    """Order type of a finite block sequence; normalized on construction."""

    blocks: tuple[Block, ...]

    def __post_init__(self):
        blocks = _normalize_blocks(self.blocks)
        if not blocks:
            raise ValueError("an order needs at least one block")
        object.__setattr__(self, "blocks", blocks)

    def __str__(self) -> str:
        return "; ".join(str(b) for b in self.blocks)

    @classmethod
    def parse(cls, text: str) -> "BorelOrder":
        return parse_order(text)


@dataclass(frozen=True)
class FunctionSpec:
    segments: tuple[Segment, ...]

    def __post_init__(self):
        segs = _normalize_segments(self.segments)
        if not segs:
            raise ValueError("a function needs at least one segment")
        object.__setattr__(self, "segments", segs)

    def __str__(self) -> str:
        return "; ".join(str(s) for s in self.segments)

    @classmethod
    def parse(cls, text: str) -> "FunctionSpec":
        return parse_function(text)

    def order(self) -> BorelOrder:
        blocks = []
        for s in self.segments:
            if isinstance(s, Fin):
                blocks.append(fin(len(s.values)))
            elif isinstance(s, (Omega, OmegaArith)):
                blocks.append(OMEGA)
            else:
                blocks.append(OMEGA_STAR)
        return BorelOrder(tuple(blocks))

    def is_finite(self) -> bool:
        return all(isinstance(s, Fin) for s in self.segments)

    def materialize(self, k: int) -> list[ScalarValue]:
        """Values on a finite subset, listed in increasing order.

        Every infinite block contributes its finite head/top plus ``k`` further
        positions adjacent to them.
        """
        out: list[ScalarValue] = []
        for s in self.segments:
            if isinstance(s, Fin):
                out.extend(s.values)
            elif isinstance(s, Omega):
                out.extend(s.head)
                out.extend([s.tail] * k)
            elif isinstance(s, OmegaStar):
                out.extend([s.tail] * k)
                out.extend(reversed(s.top))
            elif isinstance(s, OmegaArith):
                out.extend(ScalarValue(s.base.label, s.base.offset + j * s.step) for j in range(k))
            else:
                out.extend(ScalarValue(s.base.label, s.base.offset + j * s.step) for j in reversed(range(k)))
        return out


def function(*segments: Segment) -> FunctionSpec:
    return FunctionSpec(tuple(segments))


# ---------------------------------------------------------------- parsing

def _parse_segment(sc: Scanner) -> Segment:
    if sc.accept("["):
        vals = sc.value_list()
        sc.expect("]")
        return Fin(tuple(vals))
    if not sc.accept("omega"):
        sc.fail("expected a segment, found", ["'['", "'omega('", "'omega*('"])
    star = sc.accept("*")
    sc.expect("(")
    first = sc.value()
    if sc.accept(","):
        sc.expect("step")
        sc.expect("=")
        step = sc.rational()
        sc.expect(")")
        return OmegaStarArith(first, step) if star else OmegaArith(first, step)
    extra: list[ScalarValue] = []
    if sc.accept(";"):
        sc.expect("top" if star else "head")
        sc.expect("=")
        sc.expect("[")
        extra = sc.value_list()
        sc.expect("]")
    sc.expect(")")
    return OmegaStar(first, tuple(extra)) if star else Omega(first, tuple(extra))


def parse_function(text: str) -> FunctionSpec:
    sc = Scanner(text)
    segs = [_parse_segment(sc)]
    while sc.accept(";"):
        segs.append(_parse_segment(sc))
    sc.expect_end()
    return FunctionSpec(tuple(segs))


def _parse_block(sc: Scanner) -> Block:
    if sc.accept("fin"):
        sc.expect("(")
        k = sc.uint()
        sc.expect(")")
        return fin(k)
    if sc.accept("omega") or sc.accept("ω"):
        return OMEGA_STAR if sc.accept("*") else OMEGA
    sc.fail("expected a block, found", ["'fin('", "'omega'", "'omega*'"])


def parse_order(text: str) -> BorelOrder:
    sc = Scanner(text)
    bracket = sc.accept("[")
    blocks = [_parse_block(sc)]
    while sc.accept(";") or sc.accept(","):
        blocks.append(_parse_block(sc))
    if bracket:
        sc.expect("]")
    sc.expect_end()
    return BorelOrder(tuple(blocks))


# ---------------------------------------------------------------- predicates

def _infinite_representatives(f: FunctionSpec) -> list[ScalarValue]:
    reps = []
    for s in f.segments:
        if isinstance(s, (Omega, OmegaStar)):
            reps.append(s.tail)
        elif isinstance(s, ARITH):
            reps.append(s.base)
    return reps


def _finite_entries(f: FunctionSpec) -> list[tuple["Position", ScalarValue]]:
    out = []
    for i, s in enumerate(f.segments):
        if isinstance(s, Fin):
            vals = s.values
        elif isinstance(s, Omega):
            vals = s.head
        elif isinstance(s, OmegaStar):
            vals = s.top
        else:
            vals = ()
        out.extend((Position(i, j + 1), v) for j, v in enumerate(vals))
    return out


def _arith_integral(f: FunctionSpec) -> bool:
    return all(s.step.denominator == 1 for s in f.segments if isinstance(s, ARITH))


def _pairwise_congruent(values) -> bool:
    values = list(values)
    return all(int_congruent(values[0], v) for v in values[1:])


def is_integral(f: FunctionSpec) -> bool:
    vals = _infinite_representatives(f) + [v for _, v in _finite_entries(f)]
    return _arith_integral(f) and _pairwise_congruent(vals)


def is_almost_integral(f: FunctionSpec) -> bool:
    reps = _infinite_representatives(f)
    if not reps:
        return True
    return _arith_integral(f) and _pairwise_congruent(reps)


def is_locally_constant(f: FunctionSpec) -> bool:
    return not any(isinstance(s, ARITH) for s in f.segments)


def annihilator_nonzero(f: FunctionSpec) -> bool:
    """Nonvanishing criterion for the annihilator of the simple highest weight module."""
    return is_almost_integral(f) and is_locally_constant(f)


def _segment_profile(s: Segment):
    """(first, last, monotone) offsets along the order; +-inf for unbounded ends."""
    if isinstance(s, Fin):
        seq = [v.offset for v in s.values]
    elif isinstance(s, Omega):
        seq = [v.offset for v in s.head] + [s.tail.offset]
    elif isinstance(s, OmegaStar):
        seq = [s.tail.offset] + [v.offset for v in reversed(s.top)]
    elif isinstance(s, OmegaArith):
        # base, base+step, ... heading to -inf when decreasing
        return s.base.offset, -math.inf, s.step < 0
    else:
        # ..., base+2*step, base+step, base coming from +inf when decreasing
        return math.inf, s.base.offset, s.step > 0
    ok = all(a >= b for a, b in zip(seq, seq[1:]))
    return seq[0], seq[-1], ok


def is_dominant(f: FunctionSpec) -> bool:
    """True iff the (integral) function is non-increasing along the order."""
    if not is_integral(f):
        raise NonIntegralInput(f"dominance is only defined for integral functions: {f}")
    profiles = [_segment_profile(s) for s in f.segments]
    if not all(ok for _, _, ok in profiles):
        return False
    return all(prev[1] >= nxt[0] for prev, nxt in zip(profiles, profiles[1:]))


class Position(NamedTuple):
    """A finitely presented position: segment index and 1-based local index.

    Local indices count from the least element for ``Fin`` segments and omega
    heads, and from the greatest element for omega* tops.
    """

    segment: int
    index: int

    def __str__(self) -> str:
        return f"{self.segment}:{self.index}"


@dataclass(frozen=True)
class Defect:
    size: int | float
    witness: tuple[Position, ...] | None

    @property
    def finite(self) -> bool:
        return self.size != math.inf


def finite_defect(values) -> int:
    """Least number of deletions leaving pairwise integer-congruent values."""
    values = list(values)
    if not values:
        return 0
    counts = Counter(v.class_key() for v in values)
    return len(values) - max(counts.values())


def integrality_defect(f: FunctionSpec) -> Defect:
    reps = _infinite_representatives(f)
    if reps and not (_arith_integral(f) and _pairwise_congruent(reps)):
        return Defect(math.inf, None)
    entries = _finite_entries(f)
    if reps:
        key = reps[0].class_key()
    elif entries:
        counts = Counter(v.class_key() for _, v in entries)
        best = max(counts.values())
        # first class (in order) attaining the maximum
        key = next(v.class_key() for _, v in entries if counts[v.class_key()] == best)
    else:
        return Defect(0, ())
    witness = tuple(p for p, v in entries if v.class_key() != key)
    return Defect(len(witness), witness)


@dataclass(frozen=True)
class Piece:
    kind: str  # "fin", "omega", "omega*" or "infinite"
    size: int | None
    value: ScalarValue

    @property
    def infinite(self) -> bool:
        return self.kind != "fin"

    def __str__(self) -> str:
        if self.kind == "fin":
            return f"(fin {self.size}, {self.value})"
        return f"({self.kind}, {self.value})"


def _join_kinds(a: Piece, b: Piece) -> Piece:
    if a.kind == "fin" and b.kind == "fin":
        return Piece("fin", a.size + b.size, a.value)
    if a.kind == "fin" and b.kind == "omega":
        return Piece("omega", None, a.value)
    if a.kind == "omega*" and b.kind == "fin":
        return Piece("omega*", None, a.value)
    return Piece("infinite", None, a.value)


def coarsest_constant_partition(f: FunctionSpec) -> list[Piece]:
    if not is_locally_constant(f):
        raise NotLocallyConstant(f"no finite compatible partition makes {f} piecewise constant")
    raw: list[Piece] = []
    for s in f.segments:
        if isinstance(s, Fin):
            raw.extend(Piece("fin", 1, v) for v in s.values)
        elif isinstance(s, Omega):
            raw.extend(Piece("fin", 1, v) for v in s.head)
            raw.append(Piece("omega", None, s.tail))
        else:
            raw.append(Piece("omega*", None, s.tail))
            raw.extend(Piece("fin", 1, v) for v in reversed(s.top))
    pieces: list[Piece] = []
    for p in raw:
        if pieces and pieces[-1].value == p.value:
            pieces[-1] = _join_kinds(pieces[-1], p)
        else:
            pieces.append(p)
    return pieces


def is_ideal_order(o: BorelOrder) -> bool:
    return len(o.blocks) >= 2 and o.blocks[0].kind == "omega" and o.blocks[-1].kind == "omega*"
