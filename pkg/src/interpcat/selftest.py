"""Reduced-size versions of the package's correctness checks.

Every check compares two independently computed quantities.
"""

from __future__ import annotations

from typing import Callable

from .category import InterpCategory, gen
from .gfq import GF, all_subspaces
from .lattice import (
    complement_count,
    delta_poly,
    enumerate_subspaces,
    gaussian_binomial,
    gram_unit_determinant,
    mobius_closed_form,
    stanley_poly,
)
from .properties import run_axiom_suite
from .semisimple import center_dim, conj_class_count, expected_blocks, radical_dim
from .specialization import cut_object_dim, epimorphism_count, epimorphism_formula, quotient_check


def _delta() -> bool:
    return all(gram_unit_determinant(q, n).num == delta_poly(q, n) for q, n in [(2, 1), (2, 2), (3, 1)])


def _stanley() -> bool:
    for q in (2, 3):
        L = enumerate_subspaces(q, 3)
        if any(L.p_poly(y) != stanley_poly(q, y.dim) for y in L.subspaces):
            return False
    return all(complement_count(GF(2), d) == 2 ** (d - 1) for d in (1, 2, 3))


def _mobius() -> bool:
    for q in (2, 3):
        for k in range(4):
            L = enumerate_subspaces(q, k)
            if L.mobius(L.subspaces[0], L.subspaces[-1]) != mobius_closed_form(q, k):
                return False
    return True


def _hom_dims() -> bool:
    C = InterpCategory(2)
    expected = {n: sum(gaussian_binomial(n, k, 2) for k in range(n + 1)) for n in range(4)}
    return all(C.hom_dim(gen(a), gen(b)) == expected[a + b] for a in range(2) for b in range(3 - a))


def _axioms(seed: int = 0) -> bool:
    cats = [InterpCategory(2), InterpCategory(3), InterpCategory(2, "3/2")]
    return run_axiom_suite(cats, 30, seed).ok


def _semisimplicity() -> bool:
    regular = all(radical_dim(InterpCategory(2, t), gen(d)) == 0 for t in (0, -1, "3/2", 5) for d in (0, 1))
    return regular and radical_dim(InterpCategory(2, 2), gen(1)) == 1


def _idempotents() -> bool:
    C = InterpCategory(2)
    idem = C.lattice_idempotents(2)
    subs = idem.lattice.subspaces
    prim = idem.primitive
    traces = all(C.trace(prim[y]).num == stanley_poly(2, y.dim) for y in subs)
    ortho = all((prim[y] @ prim[z]).is_zero() for y in subs for z in subs if y != z)
    total = C.zero(gen(2), gen(2))
    for y in subs:
        total = total + prim[y]
    return traces and ortho and total == C.identity(gen(2))


def _center() -> bool:
    counts = [conj_class_count(m, 2) for m in range(3)] == [1, 1, 3]
    return counts and center_dim(InterpCategory(2, 5), gen(1)) == expected_blocks(1, 2)


def _specialization() -> bool:
    rep = quotient_check(2, 1, 1, 1, pairs=10)
    if not (rep.match and rep.radical_killed and rep.functorial and rep.gram_rank == 4):
        return False
    C = InterpCategory(2, 4)
    return all(cut_object_dim(C, d, 2) == epimorphism_count(2, d, 2) == epimorphism_formula(2, d, 2) for d in range(3))


def _iso_part() -> bool:
    C = InterpCategory(2)
    return [len(C.isom_split(n, n)[0]) for n in (1, 2)] == [1, 6] and len(all_subspaces(GF(2), 2)) == 5


CHECKS: dict[str, Callable[[], bool]] = {
    "determinant": _delta,
    "stanley": _stanley,
    "mobius": _mobius,
    "hom_dims": _hom_dims,
    "axioms": _axioms,
    "semisimplicity": _semisimplicity,
    "idempotents": _idempotents,
    "center": _center,
    "specialization": _specialization,
    "iso_part": _iso_part,
}


def run_selftest(seed: int = 0) -> dict:
    """Run every check; ``seed`` drives the randomized axiom draws."""
    results: dict[str, bool] = {}
    for name, check in CHECKS.items():
        try:
            results[name] = bool(check(seed) if name == "axioms" else check())
        except Exception:  # a crash is a failed check, not a failed run
            results[name] = False
    passed = sum(results.values())
    return {"checks": results, "passed": passed, "failed": len(results) - passed}
