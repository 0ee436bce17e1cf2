"""Irreducible coherent local systems (c.l.s.) in canonical factored form.

An irreducible c.l.s. is either the absorbing element ``Einf`` or a product

    Linf(v) L(a1)^x1 ... L(ak)^xk  E^m  Rinf(w) R(b1)^z1 ... R(bl)^zl

with every ``ai > v`` and every ``bj > w``.  Multiplication is level-wise
Cartan multiplication; the rules implemented by :func:`cls_mul` are checked
against explicit level sets in :mod:`slinf.levels`.

Orientation.  Functions are dominant when they are non-increasing along the
order.  With that convention the largest values of a dominant function that
occur finitely often sit at the start of the order and produce ``L`` factors,
the smallest finitely-occurring values sit at the end and produce ``R``
factors.  For example ``[1,1]; omega(0)`` is the highest weight of the second
exterior power of the natural module and has c.l.s. ``L(2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import (
    CriterionFails,
    InfinitelyManyValues,
    MalformedFactorList,
    NotDominant,
    NotFiniteType,
    NotIdealOrder,
    NotIntegral,
)
from .grammar import Scanner
from .orders import (
    ARITH,
    BorelOrder,
    Fin,
    FunctionSpec,
    Omega,
    OmegaStar,
    annihilator_nonzero,
    coarsest_constant_partition,
    is_dominant,
    is_ideal_order,
    is_integral,
)
from .scalars import ScalarValue, difference


def _exponents(items) -> tuple[tuple[int, int], ...]:
    if isinstance(items, Mapping):
        items = items.items()
    acc: dict[int, int] = {}
    for idx, exp in items:
        if exp < 0 or idx < 0:
            raise ValueError(f"negative index or exponent in factor ({idx}, {exp})")
        acc[idx] = acc.get(idx, 0) + exp
    return tuple(sorted((i, e) for i, e in acc.items() if e > 0))


@dataclass(frozen=True)
class ClsCanonical:
    e_infinity: bool = False
    v: int = 0
    left: tuple[tuple[int, int], ...] = ()
    m: int = 0
    w: int = 0
    right: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if min(self.v, self.m, self.w) < 0:
            raise ValueError("levels and exponents are nonnegative")
        if self.e_infinity:
            for name, empty in (("v", 0), ("left", ()), ("m", 0), ("w", 0), ("right", ())):
                object.__setattr__(self, name, empty)
            return
        # factors L(p) with p <= v are absorbed by Linf(v), dually on the right
        left = tuple((i, e) for i, e in _exponents(self.left) if i > self.v)
        right = tuple((i, e) for i, e in _exponents(self.right) if i > self.w)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def __str__(self) -> str:
        if self.e_infinity:
            return "Einf"
        terms = []
        if self.v:
            terms.append(f"Linf({self.v})")
        terms += [f"L({i})" + (f"^{e}" if e > 1 else "") for i, e in self.left]
        if self.m:
            terms.append("E" + (f"^{self.m}" if self.m > 1 else ""))
        if self.w:
            terms.append(f"Rinf({self.w})")
        terms += [f"R({i})" + (f"^{e}" if e > 1 else "") for i, e in self.right]
        return " ".join(terms) or "1"

    @classmethod
    def parse(cls, text: str) -> "ClsCanonical":
        return parse_cls(text)

    def __mul__(self, other: "ClsCanonical") -> "ClsCanonical":
        return cls_mul(self, other)

    def factors(self) -> list[tuple[str, int]]:
        """Basic factors with multiplicity, e.g. ``[("Linf", 2), ("L", 3), ("E", 0)]``."""
        if self.e_infinity:
            return [("Einf", 0)]
        out: list[tuple[str, int]] = []
        if self.v:
            out.append(("Linf", self.v))
        for i, e in self.left:
            out += [("L", i)] * e
        out += [("E", 0)] * self.m
        if self.w:
            out.append(("Rinf", self.w))
        for i, e in self.right:
            out += [("R", i)] * e
        return out


IDENTITY = ClsCanonical()
EINF = ClsCanonical(e_infinity=True)


def L(p: int, x: int = 1) -> ClsCanonical:
    return ClsCanonical(left=((p, x),))


def R(q: int, z: int = 1) -> ClsCanonical:
    return ClsCanonical(right=((q, z),))


def E(m: int = 1) -> ClsCanonical:
    return ClsCanonical(m=m)


def Linf(v: int) -> ClsCanonical:
    return ClsCanonical(v=v)


def Rinf(w: int) -> ClsCanonical:
    return ClsCanonical(w=w)


def cls_is_finite_type(q: ClsCanonical) -> bool:
    return not q.e_infinity and q.v == 0 and q.w == 0


def cls_mul(a: ClsCanonical, b: ClsCanonical) -> ClsCanonical:
    if a.e_infinity or b.e_infinity:
        return EINF
    # Cartan sums of weights with <= v and <= v' rows have <= max(v, v') rows
    return ClsCanonical(
        v=max(a.v, b.v),
        left=a.left + b.left,
        m=a.m + b.m,
        w=max(a.w, b.w),
        right=a.right + b.right,
    )


def cls_product(*qs: ClsCanonical) -> ClsCanonical:
    out = IDENTITY
    for q in qs:
        out = cls_mul(out, q)
    return out


# ---------------------------------------------------------------- parsing

def _parse_term(sc: Scanner) -> ClsCanonical:
    def power() -> int:
        return sc.uint() if sc.accept("^") else 1

    def index() -> int:
        sc.expect("(")
        n = sc.uint()
        sc.expect(")")
        return n

    if sc.accept("Linf"):
        return Linf(index())
    if sc.accept("Rinf"):
        return Rinf(index())
    if sc.accept("Einf"):
        return EINF
    if sc.accept("L"):
        i = index()
        return L(i, power())
    if sc.accept("R"):
        i = index()
        return R(i, power())
    if sc.accept("E"):
        return E(power())
    if sc.accept("1"):
        return IDENTITY
    sc.fail("expected a c.l.s. factor, found", ["'Linf('", "'L('", "'E'", "'Einf'", "'Rinf('", "'R('", "'1'"])


def parse_cls(text: str) -> ClsCanonical:
    sc = Scanner(text)
    q = _parse_term(sc)
    while not sc.at_end():
        sc.accept("*")
        q = cls_mul(q, _parse_term(sc))
    return q


# ---------------------------------------------------------------- profiles

@dataclass(frozen=True)
class ClsProfile:
    """Multiplicities ``d[c]`` of the value ``min + c``; ``math.inf`` marks infinite ones."""

    s: int
    d: tuple[int | float, ...]
    p: int
    q: int
    base: ScalarValue

    def __str__(self) -> str:
        ds = ",".join("inf" if x == math.inf else str(x) for x in self.d)
        return f"s={self.s} d=({ds}) p={self.p} q={self.q}"


def profile_of(f: FunctionSpec) -> ClsProfile:
    if not is_integral(f):
        raise NotIntegral(f"{f} is not integral")
    if not is_dominant(f):
        raise NotDominant(f"{f} is not dominant (non-increasing along the order)")
    if any(isinstance(s, ARITH) for s in f.segments):
        raise InfinitelyManyValues(f"{f} takes infinitely many values")
    counts: dict[Fraction, int | float] = {}

    def add(v: ScalarValue, k) -> None:
        counts[v.offset] = counts.get(v.offset, 0) + k

    label = ""
    for seg in f.segments:
        if isinstance(seg, Fin):
            finite, tail = seg.values, None
        elif isinstance(seg, Omega):
            finite, tail = seg.head, seg.tail
        else:
            finite, tail = seg.top, seg.tail
        for v in finite:
            add(v, 1)
            label = v.label
        if tail is not None:
            add(tail, math.inf)
            label = tail.label
    lo, hi = min(counts), max(counts)
    s = int(hi - lo)
    d = tuple(counts.get(lo + c, 0) for c in range(s + 1))
    infinite = [c for c, x in enumerate(d) if x == math.inf]
    p, q = (infinite[0], infinite[-1]) if infinite else (0, 0)
    return ClsProfile(s, d, p, q, ScalarValue(label, lo))


def _cumulative(parts) -> list[int]:
    out, acc = [], 0
    for x in parts:
        acc += x
        out.append(acc)
    return out


def cls_of_profile(pr: ClsProfile) -> ClsCanonical:
    # values above the top infinite multiplicity give L factors (cumulated from the top),
    # values below the bottom one give R factors (cumulated from the bottom)
    top = [pr.d[c] for c in range(pr.s, pr.q, -1)]
    bottom = [pr.d[c] for c in range(0, pr.p)]
    left = [(i, 1) for i in _cumulative(top)]
    right = [(i, 1) for i in _cumulative(bottom)]
    return ClsCanonical(left=tuple(left), m=pr.q - pr.p, right=tuple(right))


def cls_of_dominant(f: FunctionSpec) -> ClsCanonical:
    """c.l.s. of the integrable simple module with dominant highest weight ``f``."""
    try:
        pr = profile_of(f)
    except InfinitelyManyValues:
        return EINF
    return cls_of_profile(pr)


# ---------------------------------------------------------------- realization

def _expand(factors: tuple[tuple[int, int], ...]) -> list[int]:
    return [i for i, e in factors for _ in range(e)]


def _increments(indices: list[int], side: str) -> list[int]:
    if indices and indices[0] < 1:
        raise MalformedFactorList(f"{side} factor index {indices[0]} is not positive")
    incs = [b - a for a, b in zip([0] + indices, indices)]
    if any(x < 0 for x in incs):
        raise MalformedFactorList(f"{side} factor indices are not non-decreasing: {indices}")
    return incs


def duflo_function(q: ClsCanonical, order: BorelOrder) -> FunctionSpec:
    """A dominant function on an ideal order whose module has c.l.s. ``q``.

    Values are integers ``0..s``.  The first block carries the finitely
    occurring large values (one run per ``L`` factor) before its constant
    tail; the last block carries the finitely occurring small values at its
    top (one run per ``R`` factor); every middle block takes the first
    block's tail value.
    """
    if not cls_is_finite_type(q):
        raise NotFiniteType(f"{q} is not of finite type")
    if not is_ideal_order(order):
        raise NotIdealOrder(f"{order} is not an ideal order")
    top_runs = _increments(_expand(q.left), "L")
    bottom_runs = _increments(_expand(q.right), "R")
    p_top = len(top_runs)
    s = p_top + q.m + len(bottom_runs)

    def val(level: int) -> ScalarValue:
        # level 0 is the largest value
        return ScalarValue("", Fraction(s - level))

    head = [val(u) for u, k in enumerate(top_runs) for _ in range(k)]
    first_tail = val(p_top)
    last_tail = val(p_top + q.m)
    # top[0] is the greatest position, which carries the smallest value
    top_vals = [val(s - j) for j, k in enumerate(bottom_runs) for _ in range(k)]
    segments: list = [Omega(first_tail, tuple(head))]
    for block in order.blocks[1:-1]:
        if block.kind == "fin":
            segments.append(Fin((first_tail,) * block.size))
        elif block.kind == "omega":
            segments.append(Omega(first_tail))
        else:
            segments.append(OmegaStar(first_tail))
    segments.append(OmegaStar(last_tail, tuple(top_vals)))
    return FunctionSpec(tuple(segments))


# ---------------------------------------------------------------- bounds

@dataclass(frozen=True)
class BoundData:
    nint: int
    wid: int
    gamma: int

    def __str__(self) -> str:
        return f"nint={self.nint} wid={self.wid} gamma={self.gamma}"


def bound_data(f: FunctionSpec) -> BoundData:
    if not annihilator_nonzero(f):
        raise CriterionFails(f"{f} is not almost integral and locally constant; its annihilator is zero")
    pieces = coarsest_constant_partition(f)
    gamma = sum(p.size for p in pieces if not p.infinite)
    tails = [p.value for p in pieces if p.infinite]
    nint = wid = 0
    for a, b in zip(tails, tails[1:]):
        step = difference(b, a)
        assert step.denominator == 1, "almost integral tails differ by integers"
        nint += max(0, int(step))
        wid += max(0, -int(step))
    return BoundData(nint, wid, gamma)


def bound_cls(f: FunctionSpec) -> ClsCanonical:
    b = bound_data(f)
    return cls_mul(Linf(b.nint + b.gamma), E(b.wid))


def attach_infinite(q: ClsCanonical, l: int, r: int) -> ClsCanonical:
    if not cls_is_finite_type(q):
        raise NotFiniteType(f"{q} is not of finite type")
    return cls_product(q, Linf(l), Rinf(r))
