"""Deterministic corpora shared by tests, scripts and ``slinf selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .scalars import ScalarValue

LABELS = ("", "a", "b")


@dataclass(frozen=True)
class CorpusConfig:
    trials: int = 10_000
    max_length: int = 10
    max_labels: int = 3
    offset_window: int = 4
    seed: int = 20240601


def random_finite_function(rng: random.Random, cfg: CorpusConfig = CorpusConfig()) -> list[ScalarValue]:
    """A finite weight with 1..max_labels integrality classes and small offsets.

    Each label also gets a random fractional part (0 or 1/2) so that two
    classes may share a label.
    """
    n = rng.randint(1, cfg.max_length)
    k = rng.randint(1, cfg.max_labels)
    classes = rng.sample([(lab, frac) for lab in LABELS for frac in (Fraction(0), Fraction(1, 2))], k)
    out = []
    for _ in range(n):
        lab, frac = rng.choice(classes)
        out.append(ScalarValue(lab, frac + rng.randint(-cfg.offset_window, cfg.offset_window)))
    return out


def random_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[list[ScalarValue]]:
    rng = random.Random(cfg.seed)
    return [random_finite_function(rng, cfg) for _ in range(cfg.trials)]


# (function text, integral, almost integral, locally constant, nonvanishing verdict),
# verdicts derived by hand from the presentation
CLASSIFY_CORPUS: tuple[tuple[str, bool, bool, bool, bool], ...] = (
    ("omega(0)", True, True, True, True),
    ("omega(2); [1]; omega*(0)", True, True, True, True),
    ("omega(0, step=-1)", True, True, False, False),
    ("omega(0); omega*(3, step=1)", True, True, False, False),
    ("[r2+3]; omega(0)", False, True, True, True),
    ("omega(0; head=[1/2, r2]); omega*(4)", False, True, True, True),
    ("[r2]; omega(0, step=1)", False, True, False, False),
    ("[1/2]; omega*(0, step=-1)", False, True, False, False),
    ("omega(r2); omega*(0)", False, False, True, False),
    ("omega(1/2); [3]; omega*(0)", False, False, True, False),
    ("omega(0, step=1/2)", False, False, False, False),
    ("omega(r2); omega*(0, step=1)", False, False, False, False),
)

# dominant integral functions used for coherence and round-trip checks
DOMINANT_CORPUS: tuple[str, ...] = (
    "omega(0)",
    "[1,1]; omega(0)",
    "omega(2); [1]; omega*(0)",
    "omega(1); omega*(0)",
    "[2,1]; omega(1); omega*(0)",
    "omega(0); omega*(0; top=[-1,-1])",
    "[3,1,1]; omega(0); omega*(-1; top=[-3,-2])",
    "omega(2; head=[3,3]); [1]; omega*(0; top=[-1])",
    "[5,3]; omega(2); [1,1]; omega*(0; top=[-2,-1,-1])",
    "[4,2,2]; omega(2); omega*(2)",
)
