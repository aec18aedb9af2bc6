from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from interpcat.category import (
    UNIT,
    CutObject,
    InterpCategory,
    SumObject,
    compose_relations,
    core_dim,
    diagonal,
    gen,
    graph_relation,
)
from interpcat.errors import LimitExceeded, MismatchError
from interpcat.exact import Poly, Scalar
from interpcat.gfq import GF, FqMatrix, Subspace, all_subspaces, general_linear_group, intersect, matmul, vectors_of
from interpcat.lattice import stanley_poly
from oracles import compose_by_sets, graphs_of_gl, trace_by_sets, vector_set

t = Scalar.t()


@pytest.fixture(scope="module")
def C2():
    return InterpCategory(2)


def test_compose_matches_set_oracle_exhaustively():
    F = GF(2)
    for dx, dy, dz in itertools.product(range(2), repeat=3):
        for W in all_subspaces(F, dx + dy):
            for V in all_subspaces(F, dy + dz):
                k, U = compose_relations(F, W, V, dy)
                k2, U2 = compose_by_sets(F, W, V, dx, dy)
                assert k == k2 and vector_set(F, U) == U2


@pytest.mark.parametrize("q", [3, 4])
def test_compose_matches_set_oracle_randomly(q):
    F = GF(q)
    rng = random.Random(q)
    for _ in range(200):
        dx, dy, dz = (rng.randint(0, 2) for _ in range(3))
        W = rng.choice(all_subspaces(F, dx + dy))
        V = rng.choice(all_subspaces(F, dy + dz))
        k, U = compose_relations(F, W, V, dy)
        k2, U2 = compose_by_sets(F, W, V, dx, dy)
        assert k == k2 and vector_set(F, U) == U2


@pytest.mark.parametrize("q", [2, 3])
def test_trace_matches_set_oracle(q):
    C = InterpCategory(q)
    for d in range(3):
        for W in all_subspaces(C.field, 2 * d):
            F = C.relation(d, d, W)
            expected = t ** trace_by_sets(C.field, W, d)
            assert C.trace(F) == expected
            assert C.left_trace(F) == expected
            if d <= 1 or q == 2:
                assert C.trace_by_definition(F) == expected


def test_spec_composition_examples(C2):
    full = C2.relation(1, 1, Subspace.full(2))
    assert full @ full == t * full
    for d in range(3):
        assert C2.end1_value(C2.ev(d) @ C2.delta(d)) == t**d
    for W in all_subspaces(C2.field, 3):
        F = C2.relation(1, 2, W)
        assert C2.identity(gen(2)) @ F == F == F @ C2.identity(gen(1))


def test_braiding_examples(C2):
    for dx, dy in [(0, 1), (1, 1), (1, 2), (2, 0)]:
        s = C2.braiding(gen(dx), gen(dy))
        assert C2.braiding(gen(dy), gen(dx)) @ s == C2.identity(gen(dx + dy))
    assert C2.braiding(UNIT, gen(2)) == C2.identity(gen(2))


def test_tensor_examples(C2):
    assert C2.tensor(C2.identity(gen(1)), C2.identity(gen(2))) == C2.identity(gen(3))
    F = C2.relation(1, 2, Subspace.span(C2.field, 3, [[1, 1, 0]]))
    assert C2.tensor(C2.identity(UNIT), F) == F == C2.tensor(F, C2.identity(UNIT))


def test_tensor_with_sum_objects(C2):
    X = SumObject((0, 1))
    Y = SumObject((1,))
    assert C2.tensor_obj(X, Y) == SumObject((1, 2))
    rng = random.Random(5)
    F = C2.random_morphism(X, X, rng)
    G = C2.random_morphism(Y, Y, rng)
    assert C2.trace(C2.tensor(F, G)) == C2.trace(F) * C2.trace(G)


def test_gram_examples(C2):
    assert C2.gram_pairing(UNIT, gen(1)) == [[Scalar(1), Scalar(1)], [Scalar(1), t]]
    assert C2.gram_pairing(UNIT, UNIT) == [[Scalar(1)]]


def test_gram_entries_are_lattice_pairings(C2):
    """tr(G o F) for F: 1 -> [x], G: [x] -> 1 is t^dim(u cap v)."""
    F = C2.field
    for x in range(3):
        mat = C2.gram_pairing(UNIT, gen(x))
        subs = all_subspaces(F, x)
        for i, u in enumerate(subs):
            for j, v in enumerate(subs):
                assert mat[i][j] == t ** intersect(F, u, v).dim


def test_gram_is_symmetric_under_swapping_order(C2):
    rng = random.Random(2)
    for _ in range(50):
        dx, dy = rng.randint(0, 2), rng.randint(0, 1)
        F = C2.random_morphism(gen(dx), gen(dy), rng)
        G = C2.random_morphism(gen(dy), gen(dx), rng)
        assert C2.trace(G @ F) == C2.trace(F @ G)


def test_trace_multiplicative_and_scalar(C2):
    rng = random.Random(3)
    for _ in range(30):
        F = C2.random_morphism(gen(1), gen(1), rng)
        G = C2.random_morphism(gen(rng.randint(0, 1)), gen(0), rng)
        G = G @ C2.random_morphism(gen(0), G.source, rng)
        assert C2.trace(C2.tensor(F, G)) == C2.trace(F) * C2.trace(G)
    s = Scalar(Poly([3, 0, 1]))
    assert C2.trace(C2.scalar_endo(s)) == s


def test_hom_dimensions(C2):
    assert C2.hom_dim(gen(1), gen(1)) == 5
    assert C2.hom_dim(gen(1), gen(2)) == 16
    assert C2.hom_dim(gen(2), gen(2)) == 67
    assert InterpCategory(3).hom_dim(gen(1), gen(1)) == 6
    assert C2.hom_dim(SumObject((0, 1)), SumObject((1,))) == 2 + 5
    assert C2.hom_dim(SumObject(()), gen(2)) == 0


def test_hom_limit():
    with pytest.raises(LimitExceeded):
        InterpCategory(2, max_hom=4).hom_dim(gen(1), gen(1))


def test_coordinates_round_trip(C2):
    rng = random.Random(4)
    X, Y = SumObject((1, 0)), SumObject((1,))
    F = C2.random_morphism(X, Y, rng, terms=5)
    assert C2.from_coordinates(X, Y, C2.coordinates(F)) == F


def test_mismatch_errors(C2):
    F = C2.identity(gen(1))
    with pytest.raises(MismatchError):
        C2.identity(gen(2)) @ F
    with pytest.raises(MismatchError):
        C2.trace(C2.relation(1, 2, Subspace.zero(3)))
    with pytest.raises(MismatchError):
        C2.relation(1, 1, Subspace.zero(3))
    with pytest.raises(MismatchError):
        F + C2.identity(gen(2))


def test_embed_graph_is_functorial(C2):
    F = C2.field
    rng = random.Random(6)
    assert C2.embed_graph(FqMatrix.identity(2)) == C2.identity(gen(2))
    zero = FqMatrix.zeros(1, 2)
    assert C2.embed_graph(zero) == C2.relation(2, 1, Subspace.span(F, 3, [[1, 0, 0], [0, 1, 0]]))
    for _ in range(50):
        a, b, c = (rng.randint(0, 2) for _ in range(3))
        f = FqMatrix.random(F, b, a, rng)
        g = FqMatrix.random(F, c, b, rng)
        assert C2.embed_graph(matmul(F, g, f)) == C2.embed_graph(g) @ C2.embed_graph(f)


def test_class_of_correspondence_examples(C2):
    F = C2.field
    z = FqMatrix.zeros(0, 1)
    assert C2.class_of_correspondence(z, z) == C2.scalar_endo(t)
    eye = FqMatrix.identity(2)
    W = C2.class_of_correspondence(eye, FqMatrix.zeros(1, 2))
    assert W == C2.relation(2, 1, Subspace.span(F, 3, [[1, 0, 0], [0, 1, 0]]))
    with pytest.raises(MismatchError):
        C2.class_of_correspondence(eye, FqMatrix.zeros(1, 1))


def test_class_ignores_source_automorphisms():
    C = InterpCategory(3)
    F = C.field
    rng = random.Random(7)
    for _ in range(40):
        c, x, y = rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)
        Fx, Fy = FqMatrix.random(F, x, c, rng), FqMatrix.random(F, y, c, rng)
        base = C.class_of_correspondence(Fx, Fy)
        for g in general_linear_group(F, c)[:5]:
            assert C.class_of_correspondence(matmul(F, Fx, g), matmul(F, Fy, g)) == base


def test_core_examples(C2):
    F = C2.field
    assert core_dim(F, Subspace.zero(4), 2) == 0
    assert core_dim(F, Subspace.full(4), 2) == 0
    g = FqMatrix.from_rows([[0, 1], [1, 1]])
    assert core_dim(F, graph_relation(F, g), 2) == 2
    assert C2.core_and_length(graph_relation(F, g), 2) == (2, 2)


def test_isom_split(C2):
    F = C2.field
    iso1, low1 = C2.isom_split(1, 1)
    assert iso1 == [diagonal(1)] and len(low1) == 4
    iso2, _ = C2.isom_split(2, 2)
    assert {vector_set(F, W) for W in iso2} == graphs_of_gl(F, 2)
    assert C2.isom_split(1, 2)[0] == []


def test_core_factorization_recovers_relation():
    C = InterpCategory(3)
    F = C.field
    for dx, dy in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        for W in all_subspaces(F, dx + dy):
            A, B, c = C.core_factorization(W, dx)
            k, U = compose_relations(F, A, B, c)
            assert k == 0 and U == W
            assert c == core_dim(F, W, dx)


def test_lattice_idempotents(C2):
    for dx in range(3):
        idem = C2.lattice_idempotents(dx)
        L = idem.lattice
        F = C2.field
        for y in L.subspaces:
            assert C2.trace(idem.delta[y]) == t**y.dim
            assert C2.trace(idem.primitive[y]) == Scalar(stanley_poly(2, y.dim))
            for z in L.subspaces:
                assert idem.delta[y] @ idem.delta[z] == idem.delta[intersect(F, y, z)]
        total = C2.zero(gen(dx), gen(dx))
        for e in idem.primitive.values():
            total = total + e
        assert total == C2.identity(gen(dx))


def test_cut_object_requires_idempotent(C2):
    with pytest.raises(MismatchError):
        CutObject(gen(1), 2 * C2.identity(gen(1)))


def surjective_both_ways(F, W, dx):
    vs = vector_set(F, W)
    return len({v[:dx] for v in vs}) == F.q**dx and len({v[dx:] for v in vs}) == F.q ** (W.ambient - dx)


@pytest.mark.parametrize("dx,dy", [(0, 0), (1, 1), (1, 2), (2, 2)])
def test_cut_hom_dimension(C2, dx, dy):
    """Hom between the top summands [x]^* and [y]^* is spanned by the
    relations projecting onto both factors."""
    ex = C2.lattice_idempotents(dx)
    ey = C2.lattice_idempotents(dy)
    X = ex.cut_object(ex.lattice.subspaces[-1])
    Y = ey.cut_object(ey.lattice.subspaces[-1])
    F = C2.field
    expected = sum(surjective_both_ways(F, W, dx) for W in all_subspaces(F, dx + dy))
    basis = C2.cut_hom_basis(X, Y)
    assert len(basis) == expected
    for B in basis:
        assert Y.idempotent @ B @ X.idempotent == B


def test_evaluate(C2):
    F = C2.relation(1, 1, Subspace.full(2), t - 2)
    G = C2.evaluate(F, 2)
    assert G.is_zero()
    H = C2.evaluate(F, "5/2")
    assert H == H.cat.relation(1, 1, Subspace.full(2), Fraction(1, 2))


def test_numeric_category_evaluates_scalars():
    C = InterpCategory(2, 3)
    assert C.end1_value(C.ev(1) @ C.delta(1)) == 3
    full = C.relation(1, 1, Subspace.full(2))
    assert full @ full == 3 * full


def test_vectors_of_is_complete():
    F = GF(3)
    W = Subspace.span(F, 3, [[1, 2, 0], [0, 0, 1]])
    assert len(set(vectors_of(F, W))) == 9
