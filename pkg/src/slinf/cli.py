"""Command-line interface: ``python -m slinf <command> ...``.

Exit status is 0 on success, 1 when a computation is refused (for example a
bound requested for a function whose annihilator vanishes) and 2 on malformed
input.  Any textual argument may be given as ``@path`` to read it from a file.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Callable, Sequence

from .cls import bound_data, bound_cls, cls_mul, cls_of_dominant, duflo_function, parse_cls
from .corpus import CorpusConfig, random_finite_function
from .errors import ParseError, SlinfError
from .grammar import parse_values
from .levels import DEFAULT_CAP, cls_level, coherence_check
from .orders import (
    annihilator_nonzero,
    is_almost_integral,
    is_dominant,
    is_integral,
    is_locally_constant,
    parse_function,
    parse_order,
)
from .tableaux import class_rearrange, corank, lds_oracle, modified_rs, rank


def _text(arg: str) -> str:
    if arg.startswith("@"):
        return Path(arg[1:]).read_text().strip()
    return arg


def _flag(b: bool) -> str:
    return "true" if b else "false"


def cmd_classify(args) -> str:
    f = parse_function(_text(args.function))
    integral = is_integral(f)
    dominant = _flag(is_dominant(f)) if integral else "n/a"
    verdict = "nonzero" if annihilator_nonzero(f) else "zero"
    return (
        f"integral={_flag(integral)} almost-integral={_flag(is_almost_integral(f))} "
        f"locally-constant={_flag(is_locally_constant(f))} dominant={dominant} annihilator={verdict}"
    )


def cmd_rs(args) -> str:
    p = modified_rs(parse_values(_text(args.values)))
    return f"{p} corank={corank(p)} rank={rank(p)}"


def cmd_cls_of(args) -> str:
    return str(cls_of_dominant(parse_function(_text(args.function))))


def cmd_duflo(args) -> str:
    return str(duflo_function(parse_cls(_text(args.cls)), parse_order(_text(args.order))))


def cmd_bound(args) -> str:
    f = parse_function(_text(args.function))
    return f"{bound_data(f)} cls={bound_cls(f)}"


def cmd_mul(args) -> str:
    return str(cls_mul(parse_cls(_text(args.a)), parse_cls(_text(args.b))))


def cmd_level(args) -> str:
    ws = cls_level(parse_cls(_text(args.cls)), args.n, args.cap)
    cap = "exact" if ws.cap is None else f"cap={ws.cap}"
    return f"n={ws.n} {cap} size={len(ws)} {ws}"


def cmd_coherence(args) -> str:
    return str(coherence_check(parse_cls(_text(args.cls)), args.n, args.cap))


def cmd_selftest(args) -> str:
    cfg = CorpusConfig(trials=args.trials, seed=args.seed)
    rng = random.Random(cfg.seed)
    failures = 0
    for _ in range(cfg.trials):
        f = random_finite_function(rng, cfg)
        p = modified_rs(f)
        if corank(p) != lds_oracle(f) or modified_rs(class_rearrange(f)) != p:
            failures += 1
    return f"trials={cfg.trials} failures={failures}"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="slinf", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, fn: Callable, help: str | None, *positionals: str) -> argparse.ArgumentParser:
        kw = {"help": help} if help else {}
        p = sub.add_parser(name, **kw)
        for pos in positionals:
            p.add_argument(pos)
        p.set_defaults(run=fn)
        return p

    add("classify", cmd_classify, "predicates and annihilator verdict of a function", "function")
    add("rs", cmd_rs, "modified Robinson-Schensted partition of a finite weight", "values")
    add("cls-of", cmd_cls_of, "c.l.s. of the integrable module with a dominant highest weight", "function")
    add("duflo", cmd_duflo, "dominant function realizing a finite-type c.l.s.", "cls").add_argument(
        "--order", required=True
    )
    add("bound", cmd_bound, "nint, wid, gamma and the bounding c.l.s.", "function")
    add("mul", cmd_mul, "product of two c.l.s.", "a", "b")
    for name, fn, help in (
        ("level", cmd_level, "level-n weight set of a c.l.s."),
        ("coherence", cmd_coherence, "branching check between levels n and n-1"),
    ):
        p = add(name, fn, help, "cls")
        p.add_argument("-n", type=int, required=True)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    st = sub.add_parser("selftest")
    st.add_argument("--trials", type=int, default=2000)
    st.add_argument("--seed", type=int, default=CorpusConfig.seed)
    st.set_defaults(run=cmd_selftest)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.run(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except (SlinfError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
