"""Numerical and exact representations of the resolvent generators.

Matrix representations use the truncated number (Hermite) basis: the
ladder construction gives exact Hermitian tridiagonal position and
momentum matrices with no boundary artifacts, and the canonical
commutator holds exactly below the top truncation level.  Because of
that top level, defining relations can only be verified through
"compressed" residuals: matrix elements against a fixed block of
low-excitation basis states, which converge as the truncation grows.

One-dimensional (character) representations are evaluated in exact
rational-complex arithmetic; no tolerance is involved there.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .algebra import Term
from .config import RunConfig
from .exact import CQ, ComplexRational, frac
from .symplectic import (
    Decomposition,
    LinearFunctional,
    Subspace,
    SympSpace,
    SympVector,
    darboux_basis,
    decompose,
    sigma,
    solve_particular,
    split,
)

LambdaLike = Union[int, Fraction, ComplexRational]

COND_LIMIT = 1e12


class SingularVectorError(ValueError):
    """Raised when a generator is requested for a singular direction."""


# ---------------------------------------------------------------------------
# oscillator matrices


@functools.lru_cache(maxsize=None)
def _ladder(levels: int) -> np.ndarray:
    a = np.zeros((levels, levels), dtype=complex)
    for n in range(1, levels):
        a[n - 1, n] = np.sqrt(n)
    return a


@functools.lru_cache(maxsize=None)
def _single_mode_pq(levels: int) -> tuple[np.ndarray, np.ndarray]:
    a = _ladder(levels)
    ad = a.conj().T
    q = (a + ad) / np.sqrt(2)
    p = 1j * (ad - a) / np.sqrt(2)
    return p, q


@functools.lru_cache(maxsize=None)
def oscillator_matrices(
    modes: int, levels: int
) -> tuple[tuple[np.ndarray, ...], tuple[np.ndarray, ...]]:
    """Momentum and position matrices per mode, tensored to the full space.

    Q = (a + a^dag)/sqrt(2), P = i(a^dag - a)/sqrt(2), truncated to the
    given number of levels; both Hermitian.  [Q, P] = i exactly on matrix
    elements away from the top level.
    """
    if levels < 2:
        raise ValueError("at least two levels are required")
    p, q = _single_mode_pq(levels)
    eye = np.eye(levels)
    ps, qs = [], []
    for mode in range(modes):
        factors_p = [eye] * modes
        factors_q = [eye] * modes
        factors_p[mode] = p
        factors_q[mode] = q
        mp, mq = factors_p[0], factors_q[0]
        for fp, fq in zip(factors_p[1:], factors_q[1:]):
            mp = np.kron(mp, fp)
            mq = np.kron(mq, fq)
        ps.append(mp)
        qs.append(mq)
    return tuple(ps), tuple(qs)


@functools.lru_cache(maxsize=None)
def low_energy_block(modes: int, levels: int, k0: int) -> tuple[int, ...]:
    """Flat indices of the k0 lowest total-excitation basis states.

    Ties break by lexicographic mode occupation, matching the flattened
    tensor order, so the block is deterministic.
    """
    if modes == 0:
        return (0,)
    ranked = sorted(
        (sum(ns), flat)
        for flat, ns in enumerate(itertools.product(range(levels), repeat=modes))
    )
    return tuple(flat for _, flat in ranked[: min(k0, levels**modes)])


def compressed_max(matrix: np.ndarray, block: Sequence[int]) -> float:
    idx = np.asarray(block)
    return float(np.max(np.abs(matrix[np.ix_(idx, idx)])))


# ---------------------------------------------------------------------------
# labels


@dataclass(frozen=True)
class IrrepLabel:
    """Classification label: regular subspace plus functional on its radical.

    The functional determines the scalar character on the trivially
    regular directions through chi(R(lam, f)) = (i*lam - phi(f))^-1.
    """

    Y: Subspace
    phi: LinearFunctional

    def __post_init__(self):
        if self.phi.domain != self.Y.radical():
            raise ValueError("functional must live exactly on the radical")

    @staticmethod
    def regular(space: SympSpace) -> "IrrepLabel":
        Y = Subspace.full(space.dim)
        return IrrepLabel(Y, LinearFunctional.zero(Y.radical()))

    @staticmethod
    def build(Y: Subspace, phi_values: Sequence = ()) -> "IrrepLabel":
        radical = Y.radical()
        if not phi_values:
            return IrrepLabel(Y, LinearFunctional.zero(radical))
        return IrrepLabel(Y, LinearFunctional.on_basis(radical, phi_values))

    @property
    def ambient(self) -> int:
        return self.Y.ambient

    def chi(self, lam: LambdaLike, f: SympVector) -> ComplexRational:
        """Exact character value on a radical direction."""
        lam = ComplexRational.coerce(lam) if not isinstance(lam, ComplexRational) else lam
        return (CQ(0, 1) * lam - CQ(self.phi.evaluate(f))).inverse()

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient,
            "subspace": self.Y.to_json(),
            "phi": self.phi.to_json(),
        }

    @staticmethod
    def from_json(data: dict) -> "IrrepLabel":
        Y = Subspace.from_json(data["ambient"], data["subspace"])
        return IrrepLabel.build(Y, [frac(v) for v in data["phi"]])


# ---------------------------------------------------------------------------
# one-dimensional representations (exact)


@dataclass(frozen=True)
class CharacterRep:
    """One-dimensional representation determined by an isotropic subspace Z
    and a real functional on it: directions in Z map to nonzero scalars,
    all others to zero."""

    Z: Subspace
    phi: LinearFunctional

    def __post_init__(self):
        if not self.Z.is_isotropic():
            raise ValueError("character support must be isotropic")
        if self.phi.domain != self.Z:
            raise ValueError("functional must live exactly on the support")

    kind = "character"
    exact = True
    modes = 0
    levels = 0

    @staticmethod
    def build(Z: Subspace, phi_values: Sequence = ()) -> "CharacterRep":
        if not phi_values:
            return CharacterRep(Z, LinearFunctional.zero(Z))
        return CharacterRep(Z, LinearFunctional.on_basis(Z, phi_values))

    def resolvent_value(self, lam: LambdaLike, f: SympVector) -> ComplexRational:
        lam = ComplexRational.coerce(lam)
        if not self.Z.contains(f):
            return CQ()
        return (CQ(0, 1) * lam - CQ(self.phi.evaluate(f))).inverse()

    # matrix-compatible spelling: scalars stand in for multiples of 1
    def resolvent_matrix(self, lam: LambdaLike, f: SympVector) -> ComplexRational:
        return self.resolvent_value(lam, f)

    def evaluate(self, term: Term) -> ComplexRational:
        total = CQ()
        for word, coeff in term.monomials():
            value = coeff
            for g in word:
                value = value * self.resolvent_value(g.lam, g.f)
                if value.is_zero:
                    break
            total = total + value
        return total


def sharp_value_rep(lam, f: SympVector, rho: ComplexRational) -> CharacterRep:
    """Character realizing a sharp spectral value of one resolvent.

    For rho on the spectral circle with rho != 0 this is the character on
    span{f} taking the real field value r with rho = (i*lam - r)^-1; every
    direction outside span{f} (in particular anything not commuting with
    f) maps to zero.  For rho = 0 the direction is singular and the
    character annihilates every nonzero direction.
    """
    lam = frac(lam)
    rho = ComplexRational.coerce(rho)
    if f.is_zero:
        raise ValueError("sharp values require a nonzero direction")
    if rho.is_zero:
        return CharacterRep.build(Subspace.zero(f.dim))
    r = CQ(0, lam) - rho.inverse()
    if r.im != 0:
        raise ValueError("rho is not on the spectral circle of the resolvent")
    Z = Subspace.span(f.dim, [f])
    phi = LinearFunctional.from_samples([f], [r.re])
    return CharacterRep(Z, phi)


# ---------------------------------------------------------------------------
# matrix representations


class LabeledRep:
    """Truncated matrix model built from a classification label.

    The regular subspace splits into its radical and a nondegenerate
    block; the block carries a tensor-product oscillator model (one mode
    per symplectic pair) and the radical contributes a scalar shift
    through the functional.  Directions outside the label's subspace map
    to zero.  Requires a nontrivial nondegenerate block; purely isotropic
    labels are exact characters (see :func:`build_representation`).
    """

    kind = "labeled"
    exact = False

    def __init__(self, label: IrrepLabel, levels: int):
        self.label = label
        self.levels = levels
        self.space = SympSpace(label.ambient)
        self.decomposition: Decomposition = decompose(label.Y)
        self.pairs = darboux_basis(self.decomposition.N)
        self.modes = len(self.pairs)
        if self.modes == 0:
            raise ValueError("label has no regular block; use a character")
        self._ps, self._qs = oscillator_matrices(self.modes, levels)
        self._dim = levels**self.modes
        self._eye = np.eye(self._dim, dtype=complex)
        self._res_cache: dict = {}

    @property
    def hilbert_dim(self) -> int:
        return self._dim

    def identity(self) -> np.ndarray:
        return self._eye

    def block(self, k0: int) -> tuple[int, ...]:
        return low_energy_block(self.modes, self.levels, k0)

    def contains(self, f: SympVector) -> bool:
        return self.label.Y.contains(f)

    def generator_matrix(self, f: SympVector) -> np.ndarray:
        """Hermitian field matrix for a direction inside the label subspace.

        The nondegenerate component expands over the symplectic pairs
        (pair-first coordinates couple to Q, pair-second to P, which gives
        the canonical commutator its positive sign); the radical component
        adds phi(f_T) times the identity.
        """
        if not self.contains(f):
            raise SingularVectorError(f"direction {f} is singular for this label")
        f_t, f_n = split(f, self.decomposition)
        mat = np.zeros((self._dim, self._dim), dtype=complex)
        for mode, (u, v) in enumerate(self.pairs):
            a = sigma(f_n, v)  # coefficient along u
            b = sigma(u, f_n)  # coefficient along v
            if a != 0:
                mat = mat + float(a) * self._qs[mode]
            if b != 0:
                mat = mat + float(b) * self._ps[mode]
        shift = self.label.phi.evaluate(f_t)
        if shift != 0:
            mat = mat + float(shift) * self._eye
        return mat

    def resolvent_matrix(self, lam: LambdaLike, f: SympVector) -> np.ndarray:
        """Solve (i*lam*1 - Phi(f)) X = 1; zero matrix off the label subspace.

        lam may be complex with nonzero real part (analytic continuation);
        the solve is then still well posed because the skew part of the
        matrix stays definite, and a cheap condition bound guards against
        loss of precision.
        """
        lam = ComplexRational.coerce(lam) if not isinstance(lam, ComplexRational) else lam
        if lam.re == 0:
            raise ValueError("resolvent parameter must have nonzero real part")
        key = ((lam.re, lam.im), tuple(f.coords))
        hit = self._res_cache.get(key)
        if hit is not None:
            return hit
        if not self.contains(f):
            out = np.zeros((self._dim, self._dim), dtype=complex)
        else:
            phi = self.generator_matrix(f)
            m = 1j * complex(lam) * self._eye - phi
            bound = float(np.linalg.norm(m, "fro")) / abs(float(lam.re))
            if bound > COND_LIMIT:
                raise ArithmeticError(
                    f"resolvent solve refused: condition bound {bound:.2e}"
                )
            out = np.linalg.solve(m, self._eye)
        self._res_cache[key] = out
        return out

    def evaluate(self, term: Term) -> np.ndarray:
        total = np.zeros((self._dim, self._dim), dtype=complex)
        for word, coeff in term.monomials():
            mat = self._eye
            for g in word:
                mat = mat @ self.resolvent_matrix(g.lam, g.f)
            total = total + complex(coeff) * mat
        return total


Representation = Union[LabeledRep, CharacterRep]


def build_representation(label: IrrepLabel, levels: int) -> Representation:
    """Concrete model for a label: a matrix model when the label has a
    nondegenerate block, otherwise the exact character on the (isotropic)
    subspace itself."""
    if label.Y.is_isotropic():
        return CharacterRep(label.Y, label.phi)
    return LabeledRep(label, levels)


def regular_representation(space: SympSpace, levels: int) -> LabeledRep:
    return LabeledRep(IrrepLabel.regular(space), levels)


# ---------------------------------------------------------------------------
# representation families (rebuildable across a truncation schedule)


@dataclass(frozen=True)
class RepFamily:
    """A representation considered across truncation levels.

    Exact families (characters, sharp values) ignore the level argument.
    """

    name: str
    label: Optional[IrrepLabel] = None
    character: Optional[CharacterRep] = None

    @staticmethod
    def regular(space: SympSpace) -> "RepFamily":
        return RepFamily("regular", label=IrrepLabel.regular(space))

    @staticmethod
    def labeled(label: IrrepLabel, name: str = "labeled") -> "RepFamily":
        if label.Y.is_isotropic():
            return RepFamily(name, character=CharacterRep(label.Y, label.phi))
        return RepFamily(name, label=label)

    @staticmethod
    def from_character(char: CharacterRep, name: str = "character") -> "RepFamily":
        return RepFamily(name, character=char)

    @staticmethod
    def sharp(lam, f: SympVector, rho, name: str = "sharp") -> "RepFamily":
        return RepFamily(name, character=sharp_value_rep(lam, f, rho))

    @property
    def exact(self) -> bool:
        return self.character is not None

    @property
    def modes(self) -> int:
        if self.character is not None:
            return 0
        return len(darboux_basis(decompose(self.label.Y).N))

    def at(self, levels: int) -> Representation:
        if self.character is not None:
            return self.character
        return LabeledRep(self.label, levels)

    def residuals(
        self, term: Term, cfg: RunConfig, schedule: Optional[Sequence[int]] = None
    ) -> tuple[list[float], list[int]]:
        """Compressed residual of a term across the truncation schedule."""
        if self.exact:
            value = self.character.evaluate(term)
            return [abs(value)], [0]
        levels = list(schedule) if schedule else list(cfg.schedule_for_modes(self.modes))
        out = []
        for n in levels:
            rep = self.at(n)
            out.append(compressed_max(rep.evaluate(term), rep.block(cfg.k0)))
        return out, levels


# ---------------------------------------------------------------------------
# vector classification and label extraction


@dataclass(frozen=True)
class VectorClass:
    """Outcome of probing one direction in a representation family."""

    tag: str  # regular | trivial | singular | inconclusive
    scalar: Optional[complex] = None
    singular_norms: tuple[float, ...] = ()
    trivial_norms: tuple[float, ...] = ()
    levels: tuple[int, ...] = ()


def classify_vector(
    family: RepFamily,
    f: SympVector,
    cfg: RunConfig,
    schedule: Optional[Sequence[int]] = None,
    lam: int = 1,
) -> VectorClass:
    """Decide whether a direction acts regularly, trivially or singularly.

    Exact families classify by exact scalar values.  Matrix families use
    compressed norms of the resolvent across the schedule: uniformly tiny
    norms mean singular, uniformly scalar-like means trivial, uniformly
    neither means regular, and mixed evidence is reported as inconclusive
    rather than guessed.
    """
    if family.exact:
        value = family.character.resolvent_value(frac(lam), f)
        if value.is_zero:
            return VectorClass("singular")
        return VectorClass("trivial", scalar=complex(value))

    levels = list(schedule) if schedule else list(cfg.schedule_for_modes(family.modes))
    singular_norms = []
    trivial_norms = []
    scalar = None
    for n in levels:
        rep = family.at(n)
        mat = rep.resolvent_matrix(lam, f)
        block = np.asarray(rep.block(cfg.k0))
        sub = mat[np.ix_(block, block)]
        singular_norms.append(float(np.max(np.abs(sub))))
        c = complex(np.mean(np.diag(sub)))
        trivial_norms.append(float(np.max(np.abs(sub - c * np.eye(len(block))))))
        scalar = c
    s_all = all(x < cfg.tol_in for x in singular_norms)
    t_all = all(x < cfg.tol_in for x in trivial_norms)
    evidence = dict(
        singular_norms=tuple(singular_norms),
        trivial_norms=tuple(trivial_norms),
        levels=tuple(levels),
    )
    if s_all:
        return VectorClass("singular", **evidence)
    if t_all:
        return VectorClass("trivial", scalar=scalar, **evidence)
    s_any = any(x < cfg.tol_in for x in singular_norms)
    t_any = any(x < cfg.tol_in for x in trivial_norms)
    if s_any or t_any:
        return VectorClass("inconclusive", **evidence)
    return VectorClass("regular", **evidence)


@dataclass(frozen=True)
class ExtractedLabel:
    """Probe-relative reconstruction of a label from a representation."""

    Y: Subspace
    radical: Subspace
    phi_values: tuple[float, ...]  # on the canonical radical basis
    probe_tags: tuple[str, ...]
    inconclusive: tuple[int, ...]


def extract_label(
    family: RepFamily,
    probes: Sequence[SympVector],
    cfg: RunConfig,
    schedule: Optional[Sequence[int]] = None,
    lam: int = 1,
) -> ExtractedLabel:
    """Reconstruct the label visible on a probe set.

    The regular subspace estimate is the span of probes that act
    regularly or trivially; functional values are read off trivial
    scalars via phi(g) = Re(i*lam - 1/c) and transported to the canonical
    radical basis by exact rational changes of basis over the probes.
    """
    ambient = probes[0].dim
    tags = []
    trivial_vecs: list[SympVector] = []
    trivial_vals: list[float] = []
    keep: list[SympVector] = []
    inconclusive: list[int] = []
    for idx, probe in enumerate(probes):
        result = classify_vector(family, probe, cfg, schedule=schedule, lam=lam)
        tags.append(result.tag)
        if result.tag in ("regular", "trivial"):
            keep.append(probe)
        if result.tag == "trivial":
            trivial_vecs.append(probe)
            trivial_vals.append((complex(0, lam) - 1 / result.scalar).real)
        if result.tag == "inconclusive":
            inconclusive.append(idx)
    y_est = Subspace.span(ambient, keep)
    radical = y_est.radical()
    phi_values = []
    for b in radical.basis_vectors():
        coords = None
        if trivial_vecs:
            span = Subspace.span(ambient, trivial_vecs)
            if span.contains(b):
                cols = [
                    [v.coords[r] for v in trivial_vecs] for r in range(ambient)
                ]
                coords = solve_particular(cols, list(b.coords))
        if coords is None:
            inconclusive.append(-1)
            phi_values.append(float("nan"))
            continue
        phi_values.append(
            float(sum(float(c) * v for c, v in zip(coords, trivial_vals)))
        )
    return ExtractedLabel(
        Y=y_est,
        radical=radical,
        phi_values=tuple(phi_values),
        probe_tags=tuple(tags),
        inconclusive=tuple(inconclusive),
    )
