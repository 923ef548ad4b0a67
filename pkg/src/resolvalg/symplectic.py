"""Exact rational linear algebra for standard symplectic spaces.

The ambient space of dimension ``d`` (even) carries the ordered basis
``(p_1, q_1, ..., p_{d/2}, q_{d/2})`` with the standard form
``sigma(p_i, q_j) = delta_ij`` and ``sigma(p_i, p_j) = sigma(q_i, q_j) = 0``.
Everything in this module is computed over exact rationals: subspace
equality, chain inclusion and functional restriction are decided without
any floating point.

Subspaces are kept in reduced row-echelon form with pivots in coordinate
order, which makes the canonical basis (and hence subspace equality)
unique and deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exact import frac

Row = tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# vectors and the ambient space


@dataclass(frozen=True)
class SympVector:
    """Vector with exact rational coordinates in the standard basis."""

    coords: Row

    @staticmethod
    def make(values: Iterable) -> "SympVector":
        return SympVector(tuple(frac(v) for v in values))

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "SympVector") -> "SympVector":
        _same_dim(self, other)
        return SympVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "SympVector") -> "SympVector":
        _same_dim(self, other)
        return SympVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "SympVector":
        return SympVector(tuple(-a for a in self.coords))

    def scale(self, c) -> "SympVector":
        c = frac(c)
        return SympVector(tuple(c * a for a in self.coords))

    def __str__(self) -> str:
        return format_vector(self)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    @staticmethod
    def from_json(data: Sequence[str]) -> "SympVector":
        return SympVector.make(data)


@dataclass(frozen=True)
class SympSpace:
    """Standard symplectic space of even dimension ``dim``."""

    dim: int

    def __post_init__(self):
        if self.dim <= 0 or self.dim % 2 != 0:
            raise ValueError(f"dimension must be even and positive, got {self.dim}")

    @property
    def pairs(self) -> int:
        return self.dim // 2

    def zero(self) -> SympVector:
        return SympVector((Fraction(0),) * self.dim)

    def basis_vector(self, index: int) -> SympVector:
        coords = [Fraction(0)] * self.dim
        coords[index] = Fraction(1)
        return SympVector(tuple(coords))

    def p(self, k: int) -> SympVector:
        """k-th momentum-type basis vector, 1-based."""
        return self.basis_vector(2 * (k - 1))

    def q(self, k: int) -> SympVector:
        """k-th position-type basis vector, 1-based."""
        return self.basis_vector(2 * (k - 1) + 1)

    def basis(self) -> list[SympVector]:
        return [self.basis_vector(i) for i in range(self.dim)]

    def vector(self, values: Iterable) -> SympVector:
        v = SympVector.make(values)
        if v.dim != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {v.dim}")
        return v

    def to_json(self) -> dict:
        return {"dim": self.dim}

    @staticmethod
    def from_json(data: dict) -> "SympSpace":
        return SympSpace(int(data["dim"]))


def _same_dim(a: SympVector, b: SympVector) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def sigma(f: SympVector, g: SympVector) -> Fraction:
    """Standard symplectic form: sum over pairs of f_p*g_q - f_q*g_p."""
    _same_dim(f, g)
    total = Fraction(0)
    for i in range(0, f.dim, 2):
        total += f.coords[i] * g.coords[i + 1] - f.coords[i + 1] * g.coords[i]
    return total


# ---------------------------------------------------------------------------
# exact Gaussian elimination helpers


def rref(rows: Iterable[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form; returns nonzero rows and pivot columns."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for rr in range(r, len(mat)):
            if mat[rr][c] != 0:
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for rr in range(len(mat)):
            if rr != r and mat[rr][c] != 0:
                factor = mat[rr][c]
                mat[rr] = [x - factor * y for x, y in zip(mat[rr], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Row]:
    """Canonical basis of the solution set of the homogeneous system."""
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][fc]
        basis.append(tuple(vec))
    return basis


def solve_particular(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> Optional[list[Fraction]]:
    """One exact solution of ``rows * x = rhs`` with free variables set to 0.

    Pivots are taken in coordinate order, so the result is the
    lexicographically canonical solution.  Returns None if inconsistent.
    """
    aug = [list(r) + [frac(b)] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    reduced, pivots = rref(aug)
    sol = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None  # pivot in the augmented column: inconsistent
        sol[pc] = reduced[r][ncols]
    return sol


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """Subspace in canonical (reduced row-echelon) form.

    Two Subspace objects are equal iff they describe the same subspace.
    """

    ambient: int
    rows: tuple[Row, ...] = field(default=())

    @staticmethod
    def span(ambient: int, vectors: Iterable[SympVector]) -> "Subspace":
        rows = []
        for v in vectors:
            if v.dim != ambient:
                raise ValueError(f"vector dim {v.dim} does not match ambient {ambient}")
            rows.append(list(v.coords))
        reduced, _ = rref(rows)
        return Subspace(ambient, tuple(tuple(r) for r in reduced))

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient, ())

    @staticmethod
    def full(ambient: int) -> "Subspace":
        return Subspace.span(ambient, SympSpace(ambient).basis())

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def is_trivial(self) -> bool:
        return self.dim == 0

    def basis_vectors(self) -> list[SympVector]:
        return [SympVector(r) for r in self.rows]

    def coords_of(self, v: SympVector) -> Optional[list[Fraction]]:
        """Coefficients of v over the canonical basis, or None if outside."""
        if v.dim != self.ambient:
            raise ValueError("ambient dimension mismatch")
        if self.is_trivial:
            return [] if v.is_zero else None
        cols = [[self.rows[j][i] for j in range(self.dim)] for i in range(self.ambient)]
        return solve_particular(cols, list(v.coords))

    def contains(self, v: SympVector) -> bool:
        return self.coords_of(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis_vectors())

    def add(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(self.ambient, self.basis_vectors() + other.basis_vectors())

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        if self.is_trivial or other.is_trivial:
            return Subspace.zero(self.ambient)
        # coordinates r give equations sum_i a_i u_i[r] - sum_j b_j w_j[r] = 0
        k, l = self.dim, other.dim
        eqs = []
        for r in range(self.ambient):
            row = [self.rows[i][r] for i in range(k)]
            row += [-other.rows[j][r] for j in range(l)]
            eqs.append(row)
        vecs = []
        for sol in nullspace(eqs, k + l):
            coords = [Fraction(0)] * self.ambient
            for i in range(k):
                for r in range(self.ambient):
                    coords[r] += sol[i] * self.rows[i][r]
            vecs.append(SympVector(tuple(coords)))
        return Subspace.span(self.ambient, vecs)

    def complement(self) -> "Subspace":
        """Symplectic complement: all f with sigma(f, S) = 0."""
        space = SympSpace(self.ambient)
        eqs = []
        for b in self.basis_vectors():
            eqs.append([sigma(space.basis_vector(r), b) for r in range(self.ambient)])
        if not eqs:
            return Subspace.full(self.ambient)
        return Subspace.span(
            self.ambient, [SympVector(v) for v in nullspace(eqs, self.ambient)]
        )

    def radical(self) -> "Subspace":
        """Degenerate directions of the form restricted to the subspace."""
        return self.intersect(self.complement())

    def is_nondegenerate(self) -> bool:
        return self.radical().is_trivial

    def is_isotropic(self) -> bool:
        return self.complement().contains_subspace(self)

    def to_json(self) -> list[list[str]]:
        return [[str(c) for c in row] for row in self.rows]

    @staticmethod
    def from_json(ambient: int, data: Sequence[Sequence[str]]) -> "Subspace":
        return Subspace.span(ambient, [SympVector.make(row) for row in data])

    def __str__(self) -> str:
        if self.is_trivial:
            return "{0}"
        return "span{" + "; ".join(format_vector(b) for b in self.basis_vectors()) + "}"


# ---------------------------------------------------------------------------
# completions and decompositions


def symplectic_completion(Z: Subspace) -> Subspace:
    """Deterministic partner space for an isotropic subspace.

    Produces W with dim W = dim Z such that the pairing of the canonical
    basis of Z against the construction basis of W is the identity matrix
    and Z + W is nondegenerate.  See :func:`completion_pairs` for the
    witnesses.
    """
    _, ws = completion_pairs(Z)
    return Subspace.span(Z.ambient, ws)


def completion_pairs(Z: Subspace) -> tuple[list[SympVector], list[SympVector]]:
    """Dual pairs (z_i, w_j) with sigma(z_i, w_j) = delta_ij.

    The w_j are mutually sigma-orthogonal and each is the lexicographically
    canonical solution of its linear system (free coordinates set to zero).
    Raises ValueError if Z is not isotropic.
    """
    if not Z.is_isotropic():
        raise ValueError("completion requires an isotropic subspace")
    space = SympSpace(Z.ambient)
    zs = Z.basis_vectors()
    ws: list[SympVector] = []
    for j in range(len(zs)):
        rows = []
        rhs = []
        for i, z in enumerate(zs):
            rows.append([sigma(z, space.basis_vector(r)) for r in range(Z.ambient)])
            rhs.append(Fraction(1 if i == j else 0))
        for w in ws:
            rows.append([sigma(w, space.basis_vector(r)) for r in range(Z.ambient)])
            rhs.append(Fraction(0))
        sol = solve_particular(rows, rhs)
        assert sol is not None, "dual-vector system must be consistent"
        ws.append(SympVector(tuple(sol)))
    return zs, ws


@dataclass(frozen=True)
class Decomposition:
    """Splitting of the ambient space adapted to a regular subspace.

    Q is the nondegenerate hull of the radical, N the nondegenerate part of
    the regular subspace, Sperp the remaining singular block and Zt the
    partner of the radical inside Q.
    """

    space: SympSpace
    regular: Subspace  # the input subspace (X_R)
    isotropic: Subspace  # its radical (X_T)
    partner: Subspace  # completion of the radical (Zt)
    Q: Subspace
    N: Subspace
    Sperp: Subspace


def decompose(regular: Subspace) -> Decomposition:
    """Split the ambient space along a given regular subspace."""
    d = regular.ambient
    space = SympSpace(d)
    iso = regular.radical()
    partner = symplectic_completion(iso)
    Q = iso.add(partner)
    Qperp = Q.complement()
    N = Qperp.intersect(regular)
    Sperp = Qperp.intersect(regular.complement())

    assert Q.is_trivial or Q.is_nondegenerate(), "hull of the radical degenerate"
    assert N.is_trivial or N.is_nondegenerate(), "regular block degenerate"
    assert regular.contains_subspace(N)
    assert Q.dim + N.dim + Sperp.dim == d, "decomposition dimensions do not sum"
    for a, b in itertools.combinations((Q, N, Sperp), 2):
        for u in a.basis_vectors():
            for v in b.basis_vectors():
                assert sigma(u, v) == 0, "decomposition blocks not orthogonal"
    return Decomposition(space, regular, iso, partner, Q, N, Sperp)


def split(f: SympVector, dec: Decomposition) -> tuple[SympVector, SympVector]:
    """Unique splitting f = f_T + f_N over the radical and regular blocks.

    Raises ValueError when f lies outside their sum.
    """
    iso_basis = dec.isotropic.basis_vectors()
    n_basis = dec.N.basis_vectors()
    combined = iso_basis + n_basis
    if not combined:
        if f.is_zero:
            return dec.space.zero(), dec.space.zero()
        raise ValueError("vector outside the radical + regular sum")
    cols = [[b.coords[r] for b in combined] for r in range(f.dim)]
    sol = solve_particular(cols, list(f.coords))
    if sol is None:
        raise ValueError("vector outside the radical + regular sum")
    ft = dec.space.zero()
    for c, b in zip(sol[: len(iso_basis)], iso_basis):
        ft = ft + b.scale(c)
    fn = dec.space.zero()
    for c, b in zip(sol[len(iso_basis) :], n_basis):
        fn = fn + b.scale(c)
    return ft, fn


def standard_flag(space: SympSpace, depth: Optional[int] = None) -> list[Subspace]:
    """Strictly decreasing nondegenerate coordinate subspaces.

    Entry j drops the last j symplectic pairs; the full flag runs from the
    whole space down to {0} and has dim/2 + 1 entries.
    """
    n = space.pairs
    if depth is None:
        depth = n
    if not 0 <= depth <= n:
        raise ValueError(f"flag depth must lie in [0, {n}]")
    flags = []
    for j in range(depth + 1):
        vecs = []
        for k in range(1, n - j + 1):
            vecs.append(space.p(k))
            vecs.append(space.q(k))
        flags.append(Subspace.span(space.dim, vecs))
    return flags


def darboux_basis(S: Subspace) -> list[tuple[SympVector, SympVector]]:
    """Symplectic pairs (u_i, v_i) spanning a nondegenerate subspace.

    sigma(u_i, v_j) = delta_ij and distinct pairs are sigma-orthogonal.
    Deterministic: follows the canonical basis order of S.
    """
    if not (S.is_trivial or S.is_nondegenerate()):
        raise ValueError("darboux basis requires a nondegenerate subspace")
    basis = S.basis_vectors()
    pairs: list[tuple[SympVector, SympVector]] = []
    while basis:
        u = basis.pop(0)
        partner_idx = None
        for i, w in enumerate(basis):
            if sigma(u, w) != 0:
                partner_idx = i
                break
        assert partner_idx is not None, "nondegenerate subspace lacks a partner"
        v = basis.pop(partner_idx)
        v = v.scale(Fraction(1) / sigma(u, v))
        reduced = []
        for w in basis:
            w2 = w + u.scale(sigma(v, w)) - v.scale(sigma(u, w))
            if not w2.is_zero:
                reduced.append(w2)
        basis = reduced
        pairs.append((u, v))
    return pairs


# ---------------------------------------------------------------------------
# linear functionals


@dataclass(frozen=True)
class LinearFunctional:
    """Rational linear functional given by its values on the canonical basis."""

    domain: Subspace
    values: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if len(self.values) != self.domain.dim:
            raise ValueError("one value per canonical basis vector required")

    @staticmethod
    def zero(domain: Subspace) -> "LinearFunctional":
        return LinearFunctional(domain, (Fraction(0),) * domain.dim)

    @staticmethod
    def on_basis(domain: Subspace, values: Iterable) -> "LinearFunctional":
        return LinearFunctional(domain, tuple(frac(v) for v in values))

    @staticmethod
    def from_samples(
        vectors: Sequence[SympVector], values: Sequence
    ) -> "LinearFunctional":
        """Functional on span(vectors) matching the given exact samples.

        Raises ValueError when the samples are linearly inconsistent.
        """
        if not vectors:
            raise ValueError("at least one sample required")
        dom = Subspace.span(vectors[0].dim, vectors)
        vals = [frac(v) for v in values]
        cols = [[v.coords[r] for v in vectors] for r in range(vectors[0].dim)]
        basis_values = []
        for b in dom.basis_vectors():
            sol = solve_particular(cols, list(b.coords))
            assert sol is not None
            basis_values.append(sum((c * v for c, v in zip(sol, vals)), Fraction(0)))
        func = LinearFunctional(dom, tuple(basis_values))
        for vec, val in zip(vectors, vals):
            if func.evaluate(vec) != val:
                raise ValueError("inconsistent functional samples")
        return func

    def evaluate(self, v: SympVector) -> Fraction:
        coords = self.domain.coords_of(v)
        if coords is None:
            raise ValueError("vector outside the functional domain")
        return sum((c * w for c, w in zip(coords, self.values)), Fraction(0))

    def restrict(self, sub: Subspace) -> "LinearFunctional":
        if not self.domain.contains_subspace(sub):
            raise ValueError("restriction target is not contained in the domain")
        return LinearFunctional(
            sub, tuple(self.evaluate(b) for b in sub.basis_vectors())
        )

    def to_json(self) -> list[str]:
        return [str(v) for v in self.values]


# ---------------------------------------------------------------------------
# formatting


def format_vector(v: SympVector) -> str:
    """Render a vector as a combination of p/q basis symbols."""
    parts = []
    for i, c in enumerate(v.coords):
        if c == 0:
            continue
        name = ("p" if i % 2 == 0 else "q") + str(i // 2 + 1)
        if c == 1:
            term = name
        elif c == -1:
            term = f"-{name}"
        else:
            term = f"{c}*{name}"
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts) if parts else "0"
