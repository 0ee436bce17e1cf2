from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from slinf.scalars import ScalarValue

labels = st.sampled_from(["", "a", "r2"])
offsets = st.builds(Fraction, st.integers(-6, 6), st.sampled_from([1, 2, 3]))
scalars = st.builds(ScalarValue, labels, offsets)


@st.composite
def finite_weights(draw, max_size=9):
    """Finite weights drawn from at most three integrality classes."""
    classes = draw(st.lists(st.tuples(labels, st.sampled_from([Fraction(0), Fraction(1, 2)])), min_size=1, max_size=3))
    n = draw(st.integers(1, max_size))
    out = []
    for _ in range(n):
        lab, frac = draw(st.sampled_from(classes))
        out.append(ScalarValue(lab, frac + draw(st.integers(-4, 4))))
    return out


from slinf.orders import Fin, FunctionSpec, Omega, OmegaArith, OmegaStar, OmegaStarArith  # noqa: E402

small = st.lists(scalars, max_size=3).map(tuple)
nonzero_steps = st.sampled_from([Fraction(-1), Fraction(1), Fraction(1, 2), Fraction(-2)])
segments = st.one_of(
    st.lists(scalars, min_size=1, max_size=3).map(lambda vs: Fin(tuple(vs))),
    st.builds(Omega, scalars, small),
    st.builds(OmegaStar, scalars, small),
    st.builds(OmegaArith, scalars, nonzero_steps),
    st.builds(OmegaStarArith, scalars, nonzero_steps),
)
functions = st.lists(segments, min_size=1, max_size=4).map(lambda segs: FunctionSpec(tuple(segs)))
locally_constant_functions = st.lists(
    st.one_of(
        st.lists(scalars, min_size=1, max_size=3).map(lambda vs: Fin(tuple(vs))),
        st.builds(Omega, scalars, small),
        st.builds(OmegaStar, scalars, small),
    ),
    min_size=1,
    max_size=4,
).map(lambda segs: FunctionSpec(tuple(segs)))
