"""Randomized identity checks for the tensor structure of T.

Each ``check_*`` function draws one random instance from ``rng`` and
returns whether the identity holds exactly.  ``run_axiom_suite`` tallies
failures over many draws; the CLI selftest and the acceptance tests both
use it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .category import InterpCategory, gen
from .gfq import FqMatrix, general_linear_group, matmul


def _dims(rng: random.Random, k: int, max_dim: int) -> list[int]:
    return [rng.randint(0, max_dim) for _ in range(k)]


def check_associativity(cat: InterpCategory, rng: random.Random, max_dim: int = 2) -> bool:
    a, b, c, d = _dims(rng, 4, max_dim)
    F = cat.random_morphism(gen(a), gen(b), rng)
    G = cat.random_morphism(gen(b), gen(c), rng)
    H = cat.random_morphism(gen(c), gen(d), rng)
    return (H @ G) @ F == H @ (G @ F)


def check_identity(cat: InterpCategory, rng: random.Random, max_dim: int = 2) -> bool:
    a, b = _dims(rng, 2, max_dim)
    F = cat.random_morphism(gen(a), gen(b), rng)
    return cat.identity(gen(b)) @ F == F and F @ cat.identity(gen(a)) == F


def check_interchange(cat: InterpCategory, rng: random.Random, max_dim: int = 1) -> bool:
    a, b, c, a2, b2, c2 = _dims(rng, 6, max_dim)
    F = cat.random_morphism(gen(a), gen(b), rng)
    G = cat.random_morphism(gen(b), gen(c), rng)
    F2 = cat.random_morphism(gen(a2), gen(b2), rng)
    G2 = cat.random_morphism(gen(b2), gen(c2), rng)
    return cat.tensor(G, G2) @ cat.tensor(F, F2) == cat.tensor(G @ F, G2 @ F2)


def check_braiding_naturality(cat: InterpCategory, rng: random.Random, max_dim: int = 1) -> bool:
    a, b, a2, b2 = _dims(rng, 4, max_dim)
    F = cat.random_morphism(gen(a), gen(b), rng)
    G = cat.random_morphism(gen(a2), gen(b2), rng)
    lhs = cat.braiding(gen(b), gen(b2)) @ cat.tensor(F, G)
    rhs = cat.tensor(G, F) @ cat.braiding(gen(a), gen(a2))
    return lhs == rhs


def check_snakes(cat: InterpCategory, rng: random.Random, max_dim: int = 2) -> bool:
    d = rng.randint(0, max_dim)
    one = cat.identity(gen(d))
    left = cat.tensor(one, cat.ev(d)) @ cat.tensor(cat.delta(d), one)
    right = cat.tensor(cat.ev(d), one) @ cat.tensor(one, cat.delta(d))
    return left == one and right == one


def _random_correspondence(cat: InterpCategory, rng: random.Random, c: int, x: int, y: int) -> tuple[FqMatrix, FqMatrix]:
    return FqMatrix.random(cat.field, x, c, rng), FqMatrix.random(cat.field, y, c, rng)


def check_representative_independence(cat: InterpCategory, rng: random.Random, max_dim: int = 2) -> bool:
    """Classes ignore automorphisms of the source, and composing classes
    agrees with composing correspondences through the fibre product."""
    x, y, z, c, d = _dims(rng, 5, max_dim)
    Fx, Fy = _random_correspondence(cat, rng, c, x, y)
    group = general_linear_group(cat.field, c)
    g = group[rng.randrange(len(group))]
    Fq = cat.field
    moved = cat.class_of_correspondence(matmul(Fq, Fx, g), matmul(Fq, Fy, g))
    if moved != cat.class_of_correspondence(Fx, Fy):
        return False
    Gy, Gz = _random_correspondence(cat, rng, d, y, z)
    Hx, Hz = cat.compose_correspondences((Fx, Fy), (Gy, Gz))
    composite = cat.class_of_correspondence(Gy, Gz) @ cat.class_of_correspondence(Fx, Fy)
    return composite == cat.class_of_correspondence(Hx, Hz)


AXIOMS: dict[str, Callable[[InterpCategory, random.Random], bool]] = {
    "associativity": check_associativity,
    "identity": check_identity,
    "interchange": check_interchange,
    "braiding_naturality": check_braiding_naturality,
    "snake": check_snakes,
    "representative_independence": check_representative_independence,
}


@dataclass
class AxiomTally:
    trials: dict[str, int] = field(default_factory=dict)
    failures: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())


def run_axiom_suite(cats: list[InterpCategory], trials: int, seed: int = 0) -> AxiomTally:
    """Run every axiom ``trials`` times, cycling through ``cats``."""
    rng = random.Random(seed)
    tally = AxiomTally()
    for name, check in AXIOMS.items():
        tally.trials[name] = trials
        tally.failures[name] = sum(not check(cats[k % len(cats)], rng) for k in range(trials))
    return tally
