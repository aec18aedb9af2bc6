"""Command-line front end: one JSON document on stdout per invocation.

Exit status is 0 on success, 1 when the computation itself fails (limits,
poles, malformed morphisms, failed self-checks) and 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import semisimple, specialization
from .cache import LatticeCache
from .category import InterpCategory, gen
from .errors import InterpCatError
from .exact import Scalar, as_rational, format_poly, format_scalar
from .gfq import GF
from .jsonio import dumps, morphism_from_json, morphism_to_json
from .lattice import DEFAULT_MAX_VECTORS, delta_poly, delta_to_json, gram_unit_determinant, mobius_closed_form
from .specialization import DEFAULT_MAX_MODULE

log = logging.getLogger("interpcat")


class UsageError(Exception):
    """Raised for argument combinations argparse cannot express."""


@dataclass(frozen=True)
class RunConfig:
    q: int
    t: Fraction | None
    max_vectors: int = DEFAULT_MAX_VECTORS
    max_hom: int = 4096
    max_module: int = DEFAULT_MAX_MODULE
    cache_dir: Path | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        t = None if getattr(args, "symbolic", False) else getattr(args, "t", None)
        return cls(
            q=args.q,
            t=t,
            max_vectors=args.limit_vectors,
            max_hom=args.limit_hom,
            max_module=args.limit_module,
            cache_dir=args.cache_dir,
        )

    def category(self, t: Fraction | None | bool = False) -> InterpCategory:
        value = self.t if t is False else t
        return InterpCategory(self.q, value, max_vectors=self.max_vectors, max_hom=self.max_hom)

    def require_t(self) -> Fraction:
        if self.t is None:
            raise UsageError("this command needs a numeric --t")
        return self.t


# -- argument types


def _prime_power(text: str) -> int:
    try:
        q = int(text)
        GF(q)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a prime power") from None
    return q


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number a/b") from None


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        n = -1
    if n < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is not a non-negative integer")
    return n


def _positive(text: str) -> int:
    n = _nonneg(text)
    if n == 0:
        raise argparse.ArgumentTypeError("limits must be positive")
    return n


def _morphism_doc(text: str) -> dict:
    """Inline JSON, or @path to read it from a file."""
    try:
        raw = Path(text[1:]).read_text(encoding="utf-8") if text.startswith("@") else text
        return json.loads(raw)
    except (OSError, json.JSONDecodeError) as exc:
        raise argparse.ArgumentTypeError(f"cannot read morphism JSON: {exc}") from None


def _rat_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# -- commands


def cmd_lattice(cfg: RunConfig, args: argparse.Namespace) -> dict:
    L, hit = LatticeCache(cfg.cache_dir).get(cfg.q, args.n, cfg.max_vectors)
    log.info("lattice q=%d n=%d %s", cfg.q, args.n, "loaded from cache" if hit else "computed")
    top = L.subspaces[-1]
    out = {
        "q": cfg.q,
        "n": args.n,
        "count": len(L),
        "by_dim": L.count_by_dim(),
        "mobius_bottom_top": L.mobius(L.subspaces[0], top),
        "mobius_closed_form": mobius_closed_form(cfg.q, args.n),
    }
    if args.list:
        out["subspaces"] = [s.to_json() for s in L.subspaces]
    return out


def cmd_delta(cfg: RunConfig, args: argparse.Namespace) -> dict:
    out: dict = {"delta": delta_to_json(cfg.q, args.n)}
    if cfg.t is not None:
        out["value"] = _rat_str(delta_poly(cfg.q, args.n)(cfg.t))
    if args.verify:
        L, _ = LatticeCache(cfg.cache_dir).get(cfg.q, args.n, cfg.max_vectors)
        det = gram_unit_determinant(cfg.q, args.n, lattice=L, max_size=args.limit_gram)
        out["determinant"] = format_poly(det.num)
        out["verified"] = det.num == delta_poly(cfg.q, args.n)
    return out


def cmd_hom_dim(cfg: RunConfig, args: argparse.Namespace) -> dict:
    return {"dim": cfg.category(None).hom_dim(gen(args.dx), gen(args.dy))}


def _read_morphism(cat: InterpCategory, doc: dict):
    return morphism_from_json(cat, doc)


def cmd_compose(cfg: RunConfig, args: argparse.Namespace) -> dict:
    cat = cfg.category()
    F = _read_morphism(cat, args.first)
    G = _read_morphism(cat, args.second)
    return morphism_to_json(G @ F)


def cmd_tensor(cfg: RunConfig, args: argparse.Namespace) -> dict:
    cat = cfg.category()
    return morphism_to_json(cat.tensor(_read_morphism(cat, args.first), _read_morphism(cat, args.second)))


def cmd_trace(cfg: RunConfig, args: argparse.Namespace) -> dict:
    cat = cfg.category()
    if args.morphism is not None:
        F = _read_morphism(cat, args.morphism)
    elif args.dx is not None:
        F = cat.identity(gen(args.dx))
    else:
        raise UsageError("trace needs --morphism or --dx")
    return {"trace": format_scalar(cat.trace(F))}


def cmd_gram(cfg: RunConfig, args: argparse.Namespace) -> dict:
    cat = cfg.category()
    X, Y = gen(args.dx), gen(args.dy)
    mat = cat.gram_pairing(X, Y)
    out: dict = {"x": args.dx, "y": args.dy, "rows": len(mat), "cols": len(mat[0]) if mat else 0}
    if cat.t is not None:
        out["rank"] = semisimple.gram_rank(cat, X, Y)
        out["t"] = _rat_str(cat.t)
    if args.matrix:
        out["matrix"] = [[format_scalar(s) for s in row] for row in mat]
    return out


def cmd_radical(cfg: RunConfig, args: argparse.Namespace) -> dict:
    t = cfg.require_t()
    cat = cfg.category()
    X = gen(args.dx)
    status = semisimple.is_singular(t, cfg.q)
    out = {
        "object": str(X),
        "t": _rat_str(t),
        "singular": status.singular,
        "radical_dim": semisimple.radical_dim(cat, X),
        "center_dim": semisimple.center_dim(cat, X),
        "blocks_expected": semisimple.expected_blocks(args.dx, cfg.q),
    }
    if args.basis:
        out["radical"] = [morphism_to_json(F) for F in semisimple.radical(cat, X)]
    return out


def cmd_center(cfg: RunConfig, args: argparse.Namespace) -> dict:
    t = cfg.require_t()
    cat = cfg.category()
    return {
        "object": str(gen(args.dx)),
        "t": _rat_str(t),
        "center_dim": semisimple.center_dim(cat, gen(args.dx)),
        "blocks_expected": semisimple.expected_blocks(args.dx, cfg.q),
    }


def cmd_idempotents(cfg: RunConfig, args: argparse.Namespace) -> dict:
    cat = cfg.category()
    idem = cat.lattice_idempotents(args.dx)
    subs = idem.lattice.subspaces
    prim = idem.primitive
    entries = []
    for y in subs:
        tr = cat.trace(prim[y])
        expected = Scalar(idem.lattice.p_poly(y)) if cat.t is None else Scalar(idem.lattice.p_poly(y)(cat.t))
        entries.append({"y": y.to_json(), "trace": format_scalar(tr), "matches_p_y": tr == expected})
    idempotent = all(prim[y] @ prim[y] == prim[y] for y in subs)
    orthogonal = all((prim[y] @ prim[z]).is_zero() for y in subs for z in subs if y != z)
    total = cat.zero(gen(args.dx), gen(args.dx))
    for y in subs:
        total = total + prim[y]
    return {
        "x": args.dx,
        "idempotents": entries,
        "idempotent": idempotent,
        "orthogonal": orthogonal,
        "complete": total == cat.identity(gen(args.dx)),
    }


def cmd_specialize(cfg: RunConfig, args: argparse.Namespace) -> dict:
    r = args.r
    cat = cfg.category(Fraction(cfg.q**r))
    if args.morphism is None:
        module = specialization.s_object(cfg.q, args.dx, r, cfg.max_module)
        return {"q": cfg.q, "r": r, "x": args.dx, "dim": module.dim}
    F = _read_morphism(cat, args.morphism)
    M = specialization.s_morphism(F, r, cfg.max_module)
    return {"q": cfg.q, "r": r, "matrix": [[_rat_str(x) for x in row] for row in M]}


def cmd_quotient_check(cfg: RunConfig, args: argparse.Namespace) -> dict:
    report = specialization.quotient_check(cfg.q, args.dx, args.dy, args.r, pairs=args.pairs, seed=args.seed)
    return report.to_json()


def cmd_selftest(cfg: RunConfig, args: argparse.Namespace) -> dict:
    from .selftest import run_selftest

    return run_selftest(seed=args.seed)


# -- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=_prime_power, default=2, help="field size, a prime power (default 2)")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--t", type=_rational, help="numeric parameter, e.g. 3/2")
    mode.add_argument("--symbolic", action="store_true", help="keep t as an indeterminate (default)")
    common.add_argument("--cache-dir", type=Path, default=None, help="lattice cache directory")
    common.add_argument("--limit-vectors", type=_positive, default=DEFAULT_MAX_VECTORS, help="max q^n for enumerations")
    common.add_argument("--limit-hom", type=_positive, default=4096, help="max Hom-space dimension")
    common.add_argument("--limit-module", type=_positive, default=DEFAULT_MAX_MODULE, help="max permutation-module dimension")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(prog="interpcat", description="Exact computations in the interpolation category of F_q-vector spaces.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, func: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("lattice", cmd_lattice, "enumerate subspaces of F_q^n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--list", action="store_true", help="include every RREF basis")

    p = add("delta", cmd_delta, "factored determinant of the lattice Gram matrix")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--verify", action="store_true", help="also compute the determinant directly")
    p.add_argument("--limit-gram", type=_positive, default=256)

    p = add("hom-dim", cmd_hom_dim, "dimension of Hom([dx], [dy])")
    p.add_argument("--dx", type=_nonneg, required=True)
    p.add_argument("--dy", type=_nonneg, required=True)

    for name, func, text in (("compose", cmd_compose, "compose SECOND after FIRST"), ("tensor", cmd_tensor, "tensor product of two morphisms")):
        p = add(name, func, text)
        p.add_argument("--first", type=_morphism_doc, required=True, help="morphism JSON or @file")
        p.add_argument("--second", type=_morphism_doc, required=True, help="morphism JSON or @file")

    p = add("trace", cmd_trace, "categorical trace of an endomorphism")
    p.add_argument("--morphism", type=_morphism_doc, help="morphism JSON or @file")
    p.add_argument("--dx", type=_nonneg, help="use the identity of [dx]")

    p = add("gram", cmd_gram, "trace pairing between Hom([dx],[dy]) and Hom([dy],[dx])")
    p.add_argument("--dx", type=_nonneg, required=True)
    p.add_argument("--dy", type=_nonneg, required=True)
    p.add_argument("--matrix", action="store_true", help="include the matrix entries")

    p = add("radical", cmd_radical, "negligible endomorphisms of [dx] at numeric t")
    p.add_argument("--dx", type=_nonneg, required=True)
    p.add_argument("--basis", action="store_true", help="include a basis of the radical")

    p = add("center", cmd_center, "center dimension of End([dx]) modulo its radical")
    p.add_argument("--dx", type=_nonneg, required=True)

    p = add("idempotents", cmd_idempotents, "lattice idempotents on [dx]")
    p.add_argument("--dx", type=_nonneg, required=True)

    p = add("specialize", cmd_specialize, "the functor S at t = q^r")
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--dx", type=_nonneg, default=0)
    p.add_argument("--morphism", type=_morphism_doc, help="morphism JSON or @file")

    p = add("quotient-check", cmd_quotient_check, "compare T/N with GL(r, F_q)-representations")
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--dx", type=_nonneg, required=True)
    p.add_argument("--dy", type=_nonneg, required=True)
    p.add_argument("--pairs", type=_nonneg, default=20, help="random pairs for the functoriality check")
    p.add_argument("--seed", type=int, default=0)

    p = add("selftest", cmd_selftest, "run the property suite at reduced sizes")
    p.add_argument("--seed", type=int, default=0)

    return parser


def run_command(argv: Sequence[str] | None = None) -> tuple[int, dict | None]:
    """Parse and run; returns the exit status and the JSON document."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    cfg = RunConfig.from_args(args)
    try:
        doc = args.func(cfg, args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"interpcat: error: {exc}", file=sys.stderr)
        return 2, None
    except (InterpCatError, ZeroDivisionError) as exc:
        return 1, {"error": str(exc), "kind": type(exc).__name__}
    status = 1 if doc.get("failed") else 0
    return status, doc


def main(argv: Sequence[str] | None = None) -> int:
    status, doc = run_command(argv)
    if doc is not None:
        sys.stdout.write(dumps(doc) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
