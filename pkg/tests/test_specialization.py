from __future__ import annotations

import random
from fractions import Fraction

import pytest

from interpcat.category import UNIT, InterpCategory, SumObject, diagonal, gen
from interpcat.errors import LimitExceeded, ParameterError
from interpcat.exact import Scalar
from interpcat.gfq import GF, FqMatrix, Subspace, gl_order
from interpcat.specialization import (
    PermModule,
    action_permutation,
    cut_object_dim,
    epimorphism_count,
    epimorphism_formula,
    gl_group,
    is_equivariant,
    is_zero_matrix,
    kron,
    map_from_index,
    map_index,
    matmul,
    orbit_count,
    orbit_count_burnside,
    quotient_check,
    s_morphism,
    s_object,
    tensor_compatible,
    trace_compatible,
)

SETTINGS = [(2, 1), (2, 2), (3, 1)]


def identity_matrix(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def test_object_dimensions():
    assert s_object(2, 0, 3).dim == 1
    assert s_object(2, 1, 1).dim == 2
    assert s_object(2, 1, 2).dim == 4
    with pytest.raises(LimitExceeded):
        s_object(2, 4, 4)


def test_index_round_trip():
    for k in range(3**4):
        assert map_index(map_from_index(k, 2, 2, 3), 3) == k


def test_gl_group_order():
    for q, r in [(2, 1), (2, 2), (3, 2)]:
        assert gl_group(q, r).order == gl_order(r, q)


@pytest.mark.parametrize("q,r", SETTINGS)
def test_action_is_a_group_action(q, r):
    G = gl_group(q, r)
    module = PermModule(G.field, 2 if q**(2 * r) <= 81 else 1, r)
    perms = [module.action(g) for g in G.inverses]
    identity = list(range(module.dim))
    assert identity in perms
    for p in perms:
        assert sorted(p) == identity
    as_set = {tuple(p) for p in perms}
    for p1 in perms[:6]:
        for p2 in perms[:6]:
            assert tuple(p1[p2[k]] for k in identity) in as_set


def test_identity_and_counit_examples():
    C = InterpCategory(2, 4)
    for d in range(3):
        assert s_morphism(C.identity(gen(d)), 2) == identity_matrix(4**d)
    counit = C.class_of_correspondence(FqMatrix.zeros(0, 2), FqMatrix.zeros(0, 2))
    assert s_morphism(counit, 2) == [[Fraction(16)]]


def test_delta_lands_on_the_diagonal():
    q, r = 3, 1
    C = InterpCategory(q, q**r)
    M = s_morphism(C.delta(1), r)
    expected = [[Fraction(0)] for _ in range(9)]
    for b in range(3):
        expected[map_index([[b], [b]], q)] = [Fraction(1)]
    assert M == expected


def test_parameter_checks():
    with pytest.raises(ParameterError):
        s_morphism(InterpCategory(2).identity(gen(1)), 1)
    with pytest.raises(ParameterError):
        s_morphism(InterpCategory(2, 3).identity(gen(1)), 1)


@pytest.mark.parametrize("q,r", SETTINGS)
def test_functoriality(q, r):
    C = InterpCategory(q, q**r)
    rng = random.Random(q * 10 + r)
    for _ in range(60):
        a, b, c = (rng.randint(0, 2 if q**(2 * r) <= 16 else 1) for _ in range(3))
        F = C.random_morphism(gen(a), gen(b), rng)
        G = C.random_morphism(gen(b), gen(c), rng)
        assert s_morphism(G @ F, r) == matmul(s_morphism(G, r), s_morphism(F, r))


@pytest.mark.parametrize("q,r", SETTINGS)
def test_monoidal_and_trace(q, r):
    C = InterpCategory(q, q**r)
    rng = random.Random(r)
    for _ in range(30):
        a, b, c, d = (rng.randint(0, 1) for _ in range(4))
        F = C.random_morphism(gen(a), gen(b), rng)
        G = C.random_morphism(gen(c), gen(d), rng)
        assert tensor_compatible(F, G, r)
        assert trace_compatible(C.random_morphism(gen(a + c), gen(a + c), rng), r)


@pytest.mark.parametrize("q,r", SETTINGS)
def test_equivariance(q, r):
    C = InterpCategory(q, q**r)
    rng = random.Random(3)
    G = gl_group(q, r)
    for _ in range(10):
        a, b = rng.randint(0, 2 if q == 2 else 1), rng.randint(0, 1)
        F = s_morphism(C.random_morphism(gen(a), gen(b), rng), r)
        for g in G.inverses:
            assert is_equivariant(F, action_permutation(gen(a), q, r, g), action_permutation(gen(b), q, r, g))


def test_sum_objects_are_block_matrices():
    C = InterpCategory(2, 2)
    X = SumObject((0, 1))
    F = C.identity(X)
    assert s_morphism(F, 1) == identity_matrix(3)
    rng = random.Random(0)
    A = C.random_morphism(X, X, rng)
    B = C.random_morphism(X, X, rng)
    assert s_morphism(A @ B, 1) == matmul(s_morphism(A, 1), s_morphism(B, 1))


@pytest.mark.parametrize("q,r", SETTINGS)
@pytest.mark.parametrize("dx,dy", [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)])
def test_orbit_count_two_ways(q, r, dx, dy):
    if q ** ((dx + dy) * r) > 4096:
        pytest.skip("beyond the enumeration limit")
    assert orbit_count(q, dx, dy, r) == orbit_count_burnside(q, dx, dy, r)


def test_orbit_examples():
    assert orbit_count(2, 0, 0, 3) == 1
    assert orbit_count(2, 1, 1, 1) == 4
    assert orbit_count(2, 1, 0, 2) == 2


@pytest.mark.parametrize("q,r", SETTINGS)
def test_quotient_check(q, r):
    for dx in range(3):
        for dy in range(3):
            if q == 3 and dx + dy == 4:
                continue
            rep = quotient_check(q, dx, dy, r, pairs=3)
            assert rep.match and rep.radical_killed and rep.functorial, rep


def test_quotient_check_example():
    rep = quotient_check(2, 1, 1, 1)
    assert rep.to_json() == {
        "q": 2, "r": 1, "x": 1, "y": 1, "gram_rank": 4, "orbit_count": 4, "match": True,
        "radical_killed": True, "radical_dim": 1, "functorial": True, "pairs_checked": 20,
    }


@pytest.mark.parametrize("q,r", SETTINGS)
def test_cut_object_dimension(q, r):
    C = InterpCategory(q, q**r)
    for d in range(3):
        dim = cut_object_dim(C, d, r)
        assert dim == epimorphism_count(q, d, r) == epimorphism_formula(q, d, r)


def test_kron_and_zero_helpers():
    A = [[Fraction(1), Fraction(2)]]
    B = [[Fraction(3)], [Fraction(4)]]
    assert kron(A, B) == [[3, 6], [4, 8]]
    assert is_zero_matrix([[Fraction(0)]]) and not is_zero_matrix(A)


def test_relation_entries_are_lift_counts():
    """S(W)[gamma, alpha] counts maps beta: p -> W over (alpha, gamma)."""
    F = GF(2)
    C = InterpCategory(2, 4)
    W = Subspace.span(F, 3, [[1, 1, 0], [0, 0, 1]])
    M = s_morphism(C.relation(1, 2, W), 2)
    for a in range(4):
        alpha = map_from_index(a, 1, 2, 2)
        for g in range(16):
            gamma = map_from_index(g, 2, 2, 2)
            cols_ok = all(
                W.contains_vector(F, (alpha[0][c], gamma[0][c], gamma[1][c])) for c in range(2)
            )
            assert M[g][a] == int(cols_ok)


def test_unit_maps_to_scalars():
    C = InterpCategory(2, 2)
    s = C.scalar_endo(Scalar(5))
    assert s_morphism(s, 1) == [[Fraction(5)]]
    assert s_morphism(C.identity(UNIT), 1) == [[Fraction(1)]]
    assert s_morphism(C.relation(1, 1, diagonal(1)), 1) == identity_matrix(2)
