"""The interpolation category T(Mod(F_q), K).

Objects are formal direct sums ``[x_1] + ... + [x_s]`` of generators
``[x] = [F_q^dim x]``.  A morphism ``[x] -> [y]`` is a K-linear combination
of relations, i.e. subspaces ``W`` of ``x + y`` (x-coordinates first).  A
general correspondence ``c -> x + y`` with kernel of dimension k is
identified with ``t^k`` times the relation given by its image.

Composition of relations ``W: x -> y`` and ``V: y -> z`` is ``t^k U`` with

    U = {(a, c) : (a, b) in W and (b, c) in V for some b}
    k = dim {b : (0, b) in W and (b, 0) in V}

The tensor product is ``[x] (x) [y] = [x + y]`` with coordinates of
``(x + x') + (y + y')`` ordered as ``(x, x', y, y')``; the unit is ``[0]``.
Every ``[x]`` is selfdual via the diagonal relation ``x -> x + x``.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence, Union

from .errors import LimitExceeded, MismatchError
from .exact import Poly, Scalar, ScalarLike, as_rational
from .gfq import (
    FqField,
    FqMatrix,
    GF,
    Subspace,
    _matmul_rows,
    _null_rows,
    all_subspaces,
    intersect,
    pullback,
)
from .lattice import LatticeIndex, enumerate_subspaces, gaussian_binomial

DEFAULT_MAX_HOM = 4096


# --------------------------------------------------------------------------
# objects


@dataclass(frozen=True)
class SumObject:
    """Ordered direct sum of generators [F_q^d] for d in ``dims``.

    A single summand is a generator object; ``SumObject(())`` is the zero
    object (the empty sum), which is not the tensor unit ``[0]``.
    """

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if any(d < 0 for d in self.dims):
            raise ValueError(f"negative dimension in {self.dims}")

    @property
    def is_generator(self) -> bool:
        return len(self.dims) == 1

    def __len__(self) -> int:
        return len(self.dims)

    def __str__(self) -> str:
        if not self.dims:
            return "0"
        return "+".join(f"[{d}]" for d in self.dims)

    def __add__(self, other: "SumObject") -> "SumObject":
        return SumObject(self.dims + other.dims)


def gen(d: int) -> SumObject:
    """The generator object [F_q^d]."""
    return SumObject((d,))


UNIT = gen(0)


def as_object(X: Union[SumObject, int, Sequence[int]]) -> SumObject:
    if isinstance(X, SumObject):
        return X
    if isinstance(X, int):
        return gen(X)
    return SumObject(tuple(X))


def subspace_count(q: int, n: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


# --------------------------------------------------------------------------
# relations: basis-level operations (cached per field)


def diagonal(d: int, sub: Subspace | None = None) -> Subspace:
    """{(a, a) : a in sub} inside F^d + F^d (sub defaults to all of F^d)."""
    rows = sub.rows if sub is not None else tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
    return Subspace(2 * d, tuple(r + r for r in rows))


def swap_graph(dx: int, dy: int) -> Subspace:
    """Graph of (a, b) -> (b, a) inside (x + y) + (y + x)."""
    rows = []
    for i in range(dx):
        e = tuple(int(i == j) for j in range(dx))
        rows.append(e + (0,) * dy + (0,) * dy + e)
    for i in range(dy):
        e = tuple(int(i == j) for j in range(dy))
        rows.append((0,) * dx + e + e + (0,) * dx)
    return Subspace(2 * (dx + dy), tuple(rows))


@lru_cache(maxsize=1 << 18)
def compose_relations(F: FqField, W: Subspace, V: Subspace, dy: int) -> tuple[int, Subspace]:
    """Compose W in x + y with V in y + z: returns (k, U) with V o W = t^k U."""
    dx, dz = W.ambient - dy, V.ambient - dy
    if dx < 0 or dz < 0:
        raise MismatchError("relation does not fit the middle object")
    nw, nv = W.dim, V.dim
    neg = F.neg
    # fiber product over y, in coefficient coordinates (a, b): a.W_y = b.V_y
    eqs = [
        tuple(W.rows[i][dx + k] for i in range(nw)) + tuple(neg[V.rows[j][k]] for j in range(nv))
        for k in range(dy)
    ]
    P = _null_rows(F, eqs, nw + nv)
    left = _matmul_rows(F, [p[:nw] for p in P], [r[:dx] for r in W.rows], dx)
    right = _matmul_rows(F, [p[nw:] for p in P], [r[dy:] for r in V.rows], dz)
    U = Subspace.span(F, dx + dz, [a + b for a, b in zip(left, right)])
    return len(P) - U.dim, U


@lru_cache(maxsize=1 << 16)
def tensor_relations(F: FqField, W: Subspace, dx: int, V: Subspace, dx2: int) -> Subspace:
    """W (x) V inside (x + x') + (y + y') with coordinates (x, x', y, y')."""
    dy, dy2 = W.ambient - dx, V.ambient - dx2
    rows = [r[:dx] + (0,) * dx2 + r[dx:] + (0,) * dy2 for r in W.rows]
    rows += [(0,) * dx + r[:dx2] + (0,) * dy + r[dx2:] for r in V.rows]
    return Subspace.span(F, dx + dx2 + dy + dy2, rows)


@lru_cache(maxsize=1 << 16)
def trace_exponent(F: FqField, W: Subspace, d: int) -> int:
    """k with ev o (W (x) id) o delta = t^k, for W an endomorphism relation of [d]."""
    delta = diagonal(d)  # as a relation 0 -> d + d
    k1, U1 = compose_relations(F, delta, tensor_relations(F, W, d, diagonal(d), d), 2 * d)
    k2, _ = compose_relations(F, U1, delta, 2 * d)
    return k1 + k2


@lru_cache(maxsize=1 << 16)
def left_trace_exponent(F: FqField, W: Subspace, d: int) -> int:
    delta = diagonal(d)
    k1, U1 = compose_relations(F, delta, tensor_relations(F, diagonal(d), d, W, d), 2 * d)
    k2, _ = compose_relations(F, U1, delta, 2 * d)
    return k1 + k2


def graph_relation(F: FqField, f: FqMatrix) -> Subspace:
    """{(a, f a)} for f: x -> y given as a (dim y x dim x) matrix."""
    cols = f.T.entries
    rows = [tuple(int(i == j) for j in range(f.cols)) + cols[i] for i in range(f.cols)]
    return Subspace.span(F, f.cols + f.rows, rows)


def core_dim(F: FqField, W: Subspace, dx: int) -> int:
    """dim W - dim(ker pr_x|W + ker pr_y|W)."""
    dy = W.ambient - dx
    ker_x = intersect(F, W, Subspace(W.ambient, tuple(tuple(int(i == j) for j in range(W.ambient)) for i in range(dx, dx + dy))))
    ker_y = intersect(F, W, Subspace(W.ambient, tuple(tuple(int(i == j) for j in range(W.ambient)) for i in range(dx))))
    return W.dim - ker_x.dim - ker_y.dim


# --------------------------------------------------------------------------
# morphisms

Blocks = Mapping[tuple[int, int], Mapping[Subspace, Scalar]]


class Morphism:
    """K-linear combination of relations between two SumObjects.

    ``blocks[(i, j)]`` maps relations inside ``x_i + y_j`` to coefficients,
    where ``x_i`` is the i-th summand of the source and ``y_j`` the j-th
    summand of the target.  Treat instances as immutable.
    """

    __slots__ = ("cat", "source", "target", "blocks")

    def __init__(self, cat: "InterpCategory", source: SumObject, target: SumObject, blocks: Blocks) -> None:
        self.cat = cat
        self.source = source
        self.target = target
        clean: dict[tuple[int, int], dict[Subspace, Scalar]] = {}
        for (i, j), terms in blocks.items():
            amb = source.dims[i] + target.dims[j]
            kept = {}
            for W, c in terms.items():
                if W.ambient != amb:
                    raise MismatchError(f"relation of ambient {W.ambient} in block {(i, j)} of ambient {amb}")
                if not c.is_zero():
                    kept[W] = c
            if kept:
                clean[(i, j)] = kept
        self.blocks = clean

    def terms(self) -> Iterator[tuple[int, int, Subspace, Scalar]]:
        for (i, j), terms in sorted(self.blocks.items()):
            for W, c in sorted(terms.items(), key=lambda kv: kv[0].sort_key()):
                yield i, j, W, c

    def is_zero(self) -> bool:
        return not self.blocks

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return self.cat.compose(self, other)

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check_parallel(other)
        out: dict = {k: dict(v) for k, v in self.blocks.items()}
        for (ij, terms) in other.blocks.items():
            block = out.setdefault(ij, {})
            for W, c in terms.items():
                block[W] = block[W] + c if W in block else c
        return Morphism(self.cat, self.source, self.target, out)

    def __neg__(self) -> "Morphism":
        return Morphism(self.cat, self.source, self.target, {ij: {W: -c for W, c in t.items()} for ij, t in self.blocks.items()})

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def __rmul__(self, s: ScalarLike) -> "Morphism":
        s = self.cat.scalar(s)
        return Morphism(self.cat, self.source, self.target, {ij: {W: s * c for W, c in t.items()} for ij, t in self.blocks.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.blocks == other.blocks

    __hash__ = None  # type: ignore[assignment]

    def _check_parallel(self, other: "Morphism") -> None:
        if (self.source, self.target) != (other.source, other.target):
            raise MismatchError(f"morphisms {self.source}->{self.target} and {other.source}->{other.target} are not parallel")

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{list(map(list, W.rows))}@{i}{j}" for i, j, W, c in self.terms()) or "0"
        return f"<Morphism {self.source} -> {self.target}: {body}>"


@dataclass(frozen=True)
class CutObject:
    """Image of an idempotent endomorphism of a SumObject."""

    ambient: SumObject
    idempotent: Morphism

    def __post_init__(self) -> None:
        e = self.idempotent
        if e.source != self.ambient or e.target != self.ambient:
            raise MismatchError("idempotent must be an endomorphism of the ambient object")
        if e @ e != e:
            raise MismatchError("morphism is not idempotent")


# --------------------------------------------------------------------------


class InterpCategory:
    """T(Mod(F_q), K) with K = Q(t) (``t=None``) or K = Q with t fixed.

    >>> C = InterpCategory(2)
    >>> C.trace(C.identity(gen(1)))
    Scalar('t/1')
    """

    def __init__(
        self,
        q: int | FqField,
        t: Fraction | int | str | None = None,
        *,
        max_vectors: int = 4096,
        max_hom: int = DEFAULT_MAX_HOM,
    ) -> None:
        self.field = GF(q)
        self.t = None if t is None else as_rational(t)
        self.max_vectors = max_vectors
        self.max_hom = max_hom
        self._tpow: list[Scalar] = [Scalar(1)]

    def __repr__(self) -> str:
        mode = "t symbolic" if self.t is None else f"t = {self.t}"
        return f"InterpCategory(F_{self.q}, {mode})"

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def symbolic(self) -> bool:
        return self.t is None

    def with_parameter(self, t: Fraction | int | str | None) -> "InterpCategory":
        return InterpCategory(self.field, t, max_vectors=self.max_vectors, max_hom=self.max_hom)

    # -- scalars

    def scalar(self, value: ScalarLike) -> Scalar:
        s = Scalar.coerce(value)
        if self.t is not None and not s.is_constant():
            return Scalar(s.evaluate_at(self.t))
        return s

    def tpow(self, k: int) -> Scalar:
        while len(self._tpow) <= k:
            i = len(self._tpow)
            self._tpow.append(Scalar(Poly.monomial(i)) if self.t is None else Scalar(self.t**i))
        return self._tpow[k]

    # -- objects and Hom bases

    def tensor_obj(self, X: SumObject, Y: SumObject) -> SumObject:
        return SumObject(tuple(a + b for a in X.dims for b in Y.dims))

    def _relations(self, n: int) -> tuple[Subspace, ...]:
        if self.q**n > self.max_vectors:
            raise LimitExceeded(f"relations in F_{self.q}^{n} (q^n)", self.q**n, self.max_vectors)
        return all_subspaces(self.field, n)

    def hom_basis_terms(self, X: SumObject, Y: SumObject) -> list[tuple[int, int, Subspace]]:
        X, Y = as_object(X), as_object(Y)
        size = sum(subspace_count(self.q, dx + dy) for dx in X.dims for dy in Y.dims)
        if size > self.max_hom:
            raise LimitExceeded(f"Hom({X}, {Y})", size, self.max_hom)
        out = []
        for i, dx in enumerate(X.dims):
            for j, dy in enumerate(Y.dims):
                out.extend((i, j, W) for W in self._relations(dx + dy))
        return out

    def hom_basis(self, X: SumObject, Y: SumObject) -> list[Morphism]:
        X, Y = as_object(X), as_object(Y)
        one = Scalar(1)
        return [Morphism(self, X, Y, {(i, j): {W: one}}) for i, j, W in self.hom_basis_terms(X, Y)]

    def hom_dim(self, X: SumObject, Y: SumObject) -> int:
        return len(self.hom_basis_terms(X, Y))

    def coordinates(self, F: Morphism, basis_terms: Sequence[tuple[int, int, Subspace]] | None = None) -> list[Scalar]:
        """Coefficients of F in the standard basis of Hom(source, target)."""
        terms = basis_terms if basis_terms is not None else self.hom_basis_terms(F.source, F.target)
        zero = Scalar(0)
        return [F.blocks.get((i, j), {}).get(W, zero) for i, j, W in terms]

    def from_coordinates(self, X: SumObject, Y: SumObject, coords: Sequence[ScalarLike]) -> Morphism:
        blocks: dict = defaultdict(dict)
        for (i, j, W), c in zip(self.hom_basis_terms(X, Y), coords):
            blocks[(i, j)][W] = self.scalar(c)
        return Morphism(self, as_object(X), as_object(Y), blocks)

    # -- constructors

    def morphism(self, X: SumObject, Y: SumObject, blocks: Mapping[tuple[int, int], Mapping[Subspace, ScalarLike]]) -> Morphism:
        X, Y = as_object(X), as_object(Y)
        return Morphism(self, X, Y, {ij: {W: self.scalar(c) for W, c in t.items()} for ij, t in blocks.items()})

    def relation(self, dx: int, dy: int, W: Subspace, coeff: ScalarLike = 1) -> Morphism:
        """The basis morphism [dx] -> [dy] given by the relation W."""
        return self.morphism(gen(dx), gen(dy), {(0, 0): {W: coeff}})

    def zero(self, X: SumObject, Y: SumObject) -> Morphism:
        return Morphism(self, as_object(X), as_object(Y), {})

    def identity(self, X: SumObject) -> Morphism:
        X = as_object(X)
        one = Scalar(1)
        return Morphism(self, X, X, {(i, i): {diagonal(d): one} for i, d in enumerate(X.dims)})

    def scalar_endo(self, s: ScalarLike) -> Morphism:
        """s as an element of End(1)."""
        return self.morphism(UNIT, UNIT, {(0, 0): {Subspace.zero(0): s}})

    def end1_value(self, F: Morphism) -> Scalar:
        if F.source != UNIT or F.target != UNIT:
            raise MismatchError("not an endomorphism of the unit object")
        return F.blocks.get((0, 0), {}).get(Subspace.zero(0), Scalar(0))

    # -- composition and tensor product

    def compose(self, G: Morphism, F: Morphism) -> Morphism:
        """G o F for F: X -> Y and G: Y -> Z."""
        if F.target != G.source:
            raise MismatchError(f"cannot compose {G.source}->{G.target} after {F.source}->{F.target}")
        Fq = self.field
        ydims = F.target.dims
        g_by_source: dict[int, list] = defaultdict(list)
        for (j, k), terms in G.blocks.items():
            g_by_source[j].append((k, terms))
        acc: dict[tuple[int, int], dict[Subspace, Scalar]] = defaultdict(dict)
        for (i, j), fterms in F.blocks.items():
            dy = ydims[j]
            for k, gterms in g_by_source.get(j, ()):
                block = acc[(i, k)]
                for W, c in fterms.items():
                    for V, d in gterms.items():
                        e, U = compose_relations(Fq, W, V, dy)
                        val = c * d if e == 0 else c * d * self.tpow(e)
                        block[U] = block[U] + val if U in block else val
        return Morphism(self, F.source, G.target, acc)

    def tensor(self, F: Morphism, G: Morphism) -> Morphism:
        Fq = self.field
        X, Y = F.source, F.target
        X2, Y2 = G.source, G.target
        n_x2, n_y2 = len(X2), len(Y2)
        acc: dict[tuple[int, int], dict[Subspace, Scalar]] = defaultdict(dict)
        for (i, j), fterms in F.blocks.items():
            for (i2, j2), gterms in G.blocks.items():
                block = acc[(i * n_x2 + i2, j * n_y2 + j2)]
                for W, c in fterms.items():
                    for V, d in gterms.items():
                        U = tensor_relations(Fq, W, X.dims[i], V, X2.dims[i2])
                        val = c * d
                        block[U] = block[U] + val if U in block else val
        return Morphism(self, self.tensor_obj(X, X2), self.tensor_obj(Y, Y2), acc)

    # -- symmetric structure and duality

    def braiding(self, X: SumObject, Y: SumObject) -> Morphism:
        """sigma_{X,Y}: X (x) Y -> Y (x) X."""
        X, Y = as_object(X), as_object(Y)
        one = Scalar(1)
        blocks = {}
        for i, dx in enumerate(X.dims):
            for j, dy in enumerate(Y.dims):
                blocks[(i * len(Y) + j, j * len(X) + i)] = {swap_graph(dx, dy): one}
        return Morphism(self, self.tensor_obj(X, Y), self.tensor_obj(Y, X), blocks)

    def delta(self, d: int) -> Morphism:
        """delta_x: 1 -> [x] (x) [x]."""
        return self.morphism(UNIT, gen(2 * d), {(0, 0): {diagonal(d): 1}})

    def ev(self, d: int) -> Morphism:
        """ev_x: [x] (x) [x] -> 1."""
        return self.morphism(gen(2 * d), UNIT, {(0, 0): {diagonal(d): 1}})

    def structure_morphisms(self, dx: int, dy: int) -> dict[str, Morphism]:
        return {"braiding": self.braiding(gen(dx), gen(dy)), "delta": self.delta(dx), "ev": self.ev(dx)}

    # -- traces

    def trace(self, F: Morphism) -> Scalar:
        """Right trace ev o (F (x) id) o delta, summed over diagonal blocks."""
        if F.source != F.target:
            raise MismatchError("trace of a non-endomorphism")
        total = Scalar(0)
        for (i, j), terms in F.blocks.items():
            if i != j:
                continue
            d = F.source.dims[i]
            for W, c in terms.items():
                total = total + c * self.tpow(trace_exponent(self.field, W, d))
        return total

    def left_trace(self, F: Morphism) -> Scalar:
        """ev o (id (x) F) o delta."""
        if F.source != F.target:
            raise MismatchError("trace of a non-endomorphism")
        total = Scalar(0)
        for (i, j), terms in F.blocks.items():
            if i == j:
                d = F.source.dims[i]
                for W, c in terms.items():
                    total = total + c * self.tpow(left_trace_exponent(self.field, W, d))
        return total

    def trace_by_definition(self, F: Morphism) -> Scalar:
        """The right trace computed literally with compose/tensor (generators only)."""
        if not F.source.is_generator or F.source != F.target:
            raise MismatchError("trace_by_definition needs an endomorphism of a generator")
        d = F.source.dims[0]
        T = self.ev(d) @ self.tensor(F, self.identity(gen(d))) @ self.delta(d)
        return self.end1_value(T)

    def gram_exponents(self, X: SumObject, Y: SumObject) -> tuple[list, list, list[list[int | None]]]:
        """Basis terms of Hom(X,Y), Hom(Y,X) and k_ij with tr(G_j o F_i) = t^k_ij (None = 0)."""
        X, Y = as_object(X), as_object(Y)
        B1 = self.hom_basis_terms(X, Y)
        B2 = self.hom_basis_terms(Y, X)
        Fq = self.field
        mat: list[list[int | None]] = []
        for i1, j1, W in B1:
            row: list[int | None] = []
            dy = Y.dims[j1]
            dx = X.dims[i1]
            for j2, i2, V in B2:
                if j2 != j1 or i2 != i1:
                    row.append(None)
                    continue
                k, U = compose_relations(Fq, W, V, dy)
                row.append(k + trace_exponent(Fq, U, dx))
            mat.append(row)
        return B1, B2, mat

    def gram_pairing(self, X: SumObject, Y: SumObject) -> list[list[Scalar]]:
        """Matrix [tr(G_j o F_i)] over the bases of Hom(X,Y) and Hom(Y,X)."""
        zero = Scalar(0)
        _, _, mat = self.gram_exponents(X, Y)
        return [[zero if k is None else self.tpow(k) for k in row] for row in mat]

    # -- the embedding of Mod(F_q) and correspondences

    def embed_graph(self, f: FqMatrix) -> Morphism:
        """graph(f) for f: F_q^cols -> F_q^rows."""
        return self.relation(f.cols, f.rows, graph_relation(self.field, f))

    def class_of_correspondence(self, Fx: FqMatrix, Fy: FqMatrix) -> Morphism:
        """The class of c -> x + y, normalized to t^dim(ker) times its image."""
        if Fx.cols != Fy.cols:
            raise MismatchError(f"correspondence components have sources {Fx.cols} and {Fy.cols}")
        W = Subspace.span(self.field, Fx.rows + Fy.rows, Fx.vstack(Fy).T.entries)
        k = Fx.cols - W.dim
        return self.relation(Fx.rows, Fy.rows, W, self.tpow(k))

    def compose_correspondences(
        self, first: tuple[FqMatrix, FqMatrix], second: tuple[FqMatrix, FqMatrix]
    ) -> tuple[FqMatrix, FqMatrix]:
        """Composite correspondence c x_y d -> x + z of c -> x + y and d -> y + z."""
        Fx, Fy = first
        Gy, Gz = second
        P = pullback(self.field, Fy, Gy)
        c = Fx.cols
        Pc = FqMatrix(P.dim, c, tuple(r[:c] for r in P.rows))
        Pd = FqMatrix(P.dim, Gy.cols, tuple(r[c:] for r in P.rows))
        # columns of the composite: images of the basis of the fibre product
        Hx = FqMatrix(Fx.rows, P.dim, _transpose(_matmul_rows(self.field, Pc.entries, Fx.T.entries, Fx.rows), Fx.rows))
        Hz = FqMatrix(Gz.rows, P.dim, _transpose(_matmul_rows(self.field, Pd.entries, Gz.T.entries, Gz.rows), Gz.rows))
        return Hx, Hz

    # -- cores, lengths and the isomorphism part of Hom

    def core_and_length(self, W: Subspace, dx: int) -> tuple[int, int]:
        c = core_dim(self.field, W, dx)
        return c, c

    def core_factorization(self, W: Subspace, dx: int) -> tuple[Subspace, Subspace, int]:
        """Relations A: x -> core and B: core -> y with B o A = W."""
        Fq = self.field
        dy = W.ambient - dx
        n = W.dim
        # kernels of the two projections, in coordinates of W's basis
        eq_x = [tuple(W.rows[i][k] for i in range(n)) for k in range(dx)]
        eq_y = [tuple(W.rows[i][dx + k] for i in range(n)) for k in range(dy)]
        ker = _null_rows(Fq, eq_x, n) + _null_rows(Fq, eq_y, n)
        # rows of pi span the annihilator of ker; pi: F^n -> core has kernel ker
        pi = _null_rows(Fq, ker, n) if ker else [tuple(int(i == j) for j in range(n)) for i in range(n)]
        c = len(pi)
        pi_cols = _transpose(pi, n)  # n rows of length c: image of each basis vector of W
        A = Subspace.span(Fq, dx + c, [W.rows[i][:dx] + pi_cols[i] for i in range(n)])
        B = Subspace.span(Fq, c + dy, [pi_cols[i] + W.rows[i][dx:] for i in range(n)])
        return A, B, c

    def isom_split(self, dx: int, dy: int) -> tuple[list[Subspace], list[Subspace]]:
        """Split the relation basis of Hom([dx],[dy]) into graphs of isomorphisms and the rest."""
        iso, lower = [], []
        for W in self._relations(dx + dy):
            if dx == dy and core_dim(self.field, W, dx) == dx:
                iso.append(W)
            else:
                lower.append(W)
        return iso, lower

    # -- subobject idempotents

    def lattice_idempotents(self, dx: int) -> "LatticeIdempotents":
        L = enumerate_subspaces(self.field, dx, self.max_vectors)
        X = gen(dx)
        deltas = {y: self.relation(dx, dx, diagonal(dx, y)) for y in L.subspaces}
        prim = {}
        for y in L.subspaces:
            blocks: dict[Subspace, Scalar] = {}
            for u in L.below(y):
                blocks[diagonal(dx, u)] = Scalar(L.mobius(u, y))
            prim[y] = self.morphism(X, X, {(0, 0): blocks})
        return LatticeIdempotents(self, L, deltas, prim)

    # -- cut objects

    def cut_hom_basis(self, X: CutObject | SumObject, Y: CutObject | SumObject) -> list[Morphism]:
        """A basis of e_Y o Hom(X, Y) o e_X inside the ambient Hom-space."""
        from .qlinalg import rank_scalar

        eX = X.idempotent if isinstance(X, CutObject) else self.identity(X)
        eY = Y.idempotent if isinstance(Y, CutObject) else self.identity(Y)
        A, B = eX.source, eY.source
        terms = self.hom_basis_terms(A, B)
        chosen: list[Morphism] = []
        rows: list[list[Scalar]] = []
        for Fb in self.hom_basis(A, B):
            img = eY @ Fb @ eX
            coords = self.coordinates(img, terms)
            if rank_scalar(rows + [coords]) > len(rows):
                rows.append(coords)
                chosen.append(img)
        return chosen

    # -- parameter changes

    def evaluate(self, F: Morphism, t: Fraction | int | str) -> Morphism:
        """Image of F in the category with the parameter fixed to t."""
        target = self.with_parameter(t)
        t = target.t
        return Morphism(
            target,
            F.source,
            F.target,
            {ij: {W: Scalar(c.evaluate_at(t)) for W, c in terms.items()} for ij, terms in F.blocks.items()},
        )

    # -- randomness helpers for tests and selftests

    def random_relation(self, n: int, rng: random.Random) -> Subspace:
        subs = self._relations(n)
        return subs[rng.randrange(len(subs))]

    def random_morphism(self, X: SumObject, Y: SumObject, rng: random.Random, terms: int = 3) -> Morphism:
        X, Y = as_object(X), as_object(Y)
        basis = self.hom_basis_terms(X, Y)
        blocks: dict = defaultdict(dict)
        for _ in range(terms):
            i, j, W = basis[rng.randrange(len(basis))]
            c = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            blocks[(i, j)][W] = blocks[(i, j)].get(W, Scalar(0)) + Scalar(c)
        return Morphism(self, X, Y, blocks)


def _transpose(rows: Sequence[Sequence[int]], ncols: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(r[j] for r in rows) for j in range(ncols))


@dataclass
class LatticeIdempotents:
    """Delta_y and the Möbius-inverted idempotents e*_y for y inside [x]."""

    cat: InterpCategory
    lattice: LatticeIndex
    delta: dict[Subspace, Morphism]
    primitive: dict[Subspace, Morphism]

    def cut_object(self, y: Subspace) -> CutObject:
        """[y]^* as the image of e*_y on [x]."""
        return CutObject(gen(self.lattice.n), self.primitive[y])

    @property
    def cut_objects(self) -> dict[Subspace, CutObject]:
        return {y: self.cut_object(y) for y in self.lattice.subspaces}


__all__ = [
    "CutObject",
    "InterpCategory",
    "LatticeIdempotents",
    "Morphism",
    "SumObject",
    "UNIT",
    "as_object",
    "compose_relations",
    "core_dim",
    "diagonal",
    "gen",
    "graph_relation",
    "swap_graph",
    "tensor_relations",
    "trace_exponent",
]
