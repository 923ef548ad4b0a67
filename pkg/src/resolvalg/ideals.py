"""Ideal-structure computations: kernel membership, the primitive-ideal
order and chains, principal-ideal elements and identities, maximal ideals
through characters, and commutator-ideal checks.

Membership testing is oracle based: primitive and maximal ideals are
kernels of concrete representations, so evaluating there is sound and
complete (exact for one-dimensional representations, residual-decay
evidence for matrix models).  For general principal ideals only
sufficient checks run and outcomes are three-valued.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import SpectralPoint, Term, commutator, spec_contains
from .config import RunConfig
from .exact import CQ, ComplexRational, frac
from .representations import (
    CharacterRep,
    IrrepLabel,
    RepFamily,
    sharp_value_rep,
)
from .symplectic import (
    LinearFunctional,
    Subspace,
    SympSpace,
    SympVector,
    sigma,
    standard_flag,
)

PrimLabel = IrrepLabel  # a primitive ideal is named by its label


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class Verdict:
    """Three-valued membership outcome with residual-decay evidence."""

    status: str  # in_kernel | not_in_kernel | inconclusive
    residuals: tuple[float, ...]
    levels: tuple[int, ...]
    witness: str = ""

    @property
    def in_kernel(self) -> bool:
        return self.status == "in_kernel"


def verdict_for(
    family: RepFamily,
    term: Term,
    cfg: RunConfig,
    schedule: Optional[Sequence[int]] = None,
) -> Verdict:
    """Evaluate a term in a representation family and judge membership.

    Exact (one-dimensional) families decide by exact arithmetic.  Matrix
    families require non-increasing residuals ending under tol_in for
    membership and residuals stably above tol_out for non-membership;
    anything else is inconclusive.
    """
    if family.exact:
        value = family.character.evaluate(term)
        status = "in_kernel" if value.is_zero else "not_in_kernel"
        return Verdict(status, (abs(value),), (0,), family.name)
    residuals, levels = family.residuals(term, cfg, schedule)
    rs = tuple(residuals)
    if all(r <= cfg.exact_zero for r in rs):
        status = "in_kernel"
    elif len(rs) >= 2 and cfg.non_increasing(rs) and rs[-1] < cfg.tol_in:
        status = "in_kernel"
    elif len(rs) >= 2 and all(r > cfg.tol_out for r in rs):
        status = "not_in_kernel"
    else:
        status = "inconclusive"
    return Verdict(status, rs, tuple(levels), family.name)


def kernel_membership(
    label: IrrepLabel,
    term: Term,
    cfg: RunConfig,
    schedule: Optional[Sequence[int]] = None,
) -> Verdict:
    """Membership of a term in the primitive ideal named by a label."""
    return verdict_for(RepFamily.labeled(label), term, cfg, schedule)


# ---------------------------------------------------------------------------
# the partial order of primitive-ideal labels


def label_leq(a: IrrepLabel, b: IrrepLabel) -> bool:
    """Kernel inclusion in terms of labels.

    Ker(a) is contained in Ker(b) iff the regular subspace shrinks, the
    radical grows, and the functional of b restricts to that of a.  All
    comparisons are exact.
    """
    if a.ambient != b.ambient:
        raise ValueError("labels live over different ambient dimensions")
    if not a.Y.contains_subspace(b.Y):
        return False
    rad_a = a.phi.domain
    rad_b = b.phi.domain
    if not rad_b.contains_subspace(rad_a):
        return False
    return b.phi.restrict(rad_a) == a.phi


def label_strictly_less(a: IrrepLabel, b: IrrepLabel) -> bool:
    return a != b and label_leq(a, b)


def build_chain(space: SympSpace) -> list[IrrepLabel]:
    """Maximal strictly increasing chain of labels over the standard flag.

    The flag members are nondegenerate, so every radical is trivial and
    the functionals are empty; the chain has dim/2 + 1 entries.
    """
    return [IrrepLabel.build(flag) for flag in standard_flag(space)]


def max_chain_length(labels: Sequence[IrrepLabel]) -> int:
    """Longest strictly increasing chain within a finite label set."""
    n = len(labels)
    if n == 0:
        return 0
    less = [
        [label_strictly_less(labels[i], labels[j]) for j in range(n)] for i in range(n)
    ]
    depth: dict[int, int] = {}

    def chase(i: int) -> int:
        if i in depth:
            return depth[i]
        best = 1
        for j in range(n):
            if less[i][j]:
                best = max(best, 1 + chase(j))
        depth[i] = best
        return best

    return max(chase(i) for i in range(n))


def enumerate_coordinate_labels(
    space: SympSpace, phi_values: Sequence = (0, 1)
) -> list[IrrepLabel]:
    """All labels with coordinate regular subspaces and functionals drawn
    from a finite value set on each radical basis vector."""
    basis = space.basis()
    labels = []
    for take in itertools.product((False, True), repeat=space.dim):
        vecs = [b for b, keep in zip(basis, take) if keep]
        Y = Subspace.span(space.dim, vecs)
        radical = Y.radical()
        for assignment in itertools.product(phi_values, repeat=radical.dim):
            labels.append(
                IrrepLabel(Y, LinearFunctional.on_basis(radical, assignment))
            )
    return labels


def chain_strictness_witnesses(
    chain: Sequence[IrrepLabel], cfg: RunConfig
) -> list[dict]:
    """Witness terms separating consecutive chain members.

    For a direction in the regular subspace of one label but not the
    next, the resolvent lies in the larger kernel and outside the smaller
    one.
    """
    out = []
    for n in range(len(chain) - 1):
        small, big = chain[n], chain[n + 1]
        witness_vec = None
        for b in small.Y.basis_vectors():
            if not big.Y.contains(b):
                witness_vec = b
                break
        assert witness_vec is not None, "chain is not strictly decreasing"
        term = Term.resolvent(1, witness_vec)
        v_small = kernel_membership(small, term, cfg)
        v_big = kernel_membership(big, term, cfg)
        out.append(
            {
                "witness": str(witness_vec),
                "lower": v_small.status,
                "upper": v_big.status,
                "ok": v_small.status == "not_in_kernel" and v_big.in_kernel,
            }
        )
    return out


# ---------------------------------------------------------------------------
# principal ideals


@dataclass(frozen=True)
class PrincipalIdealSpec:
    """Data naming the principal ideal of a centered resolvent."""

    point: SpectralPoint

    @property
    def lam(self) -> Fraction:
        return self.point.lam

    @property
    def f(self) -> SympVector:
        return self.point.f

    @property
    def rho(self) -> ComplexRational:
        return self.point.rho


def principal_element(point: SpectralPoint) -> Term:
    """The generating element R(lam, f) - rho * 1 of a principal ideal."""
    return Term.resolvent(point.lam, point.f) - Term.scalar(point.rho)


def shifted_spectral_point(point: SpectralPoint, mu) -> SpectralPoint:
    """Transport a circle point to another resolvent parameter.

    rho' = rho / (1 + i(mu - lam) rho) lies on the circle for mu; this is
    the spectral value of R(mu, f) in the same sharp-value state.
    """
    mu = frac(mu)
    denom = CQ(1) + CQ(0, mu - point.lam) * point.rho
    if denom.is_zero:
        raise ZeroDivisionError("degenerate parameter shift")
    return SpectralPoint(mu, point.f, point.rho / denom)


def principal_identity_check(
    point: SpectralPoint,
    mu,
    family: RepFamily,
    cfg: RunConfig,
    schedule: Optional[Sequence[int]] = None,
) -> dict:
    """Operator identity behind parameter shifts inside a principal ideal.

    Checks (1 + i(mu-lam)rho) R(mu,f) - rho 1
         = (1 + i(lam-mu) R(mu,f)) (R(lam,f) - rho 1)
    as a compressed residual in the given family, plus two exact facts:
    the shifted value rho' stays on the circle for mu, and the centered
    element R(mu,f) - rho' 1 is annihilated by the sharp-value character
    of (lam, f, rho).
    """
    mu = frac(mu)
    if mu == 0:
        raise ValueError("shift parameter must be nonzero")
    lam, f, rho = point.lam, point.f, point.rho
    c1 = CQ(1) + CQ(0, mu - lam) * rho
    if c1.is_zero:
        raise ZeroDivisionError("degenerate parameter shift")
    r_mu = Term.resolvent(mu, f)
    lhs = r_mu.scale(c1) - Term.scalar(rho)
    rhs = (Term.one() + r_mu.scale(CQ(0, lam - mu))) * (
        Term.resolvent(lam, f) - Term.scalar(rho)
    )
    diff = lhs - rhs
    shifted = shifted_spectral_point(point, mu)
    centered = r_mu - Term.scalar(shifted.rho)
    sharp = sharp_value_rep(lam, f, rho)
    result = {
        "exact_zero": diff.is_zero,
        "shifted_rho": str(shifted.rho),
        "shifted_on_circle": spec_contains(mu, f, shifted.rho),
        "sharp_annihilates_shift": sharp.evaluate(centered).is_zero,
    }
    if diff.is_zero:
        result["residuals"] = [0.0]
        result["levels"] = [0]
    else:
        residuals, levels = family.residuals(diff, cfg, schedule)
        result["residuals"] = residuals
        result["levels"] = levels
    return result


def intersection_element(points: Sequence[SpectralPoint]) -> Term:
    """Product of centered resolvents generating the ideal intersection.

    Any factor order generates the same ideal; callers comparing orders
    should compare verdicts, which is the finitely checkable statement.
    """
    if not points:
        raise ValueError("at least one spectral point required")
    out = Term.one()
    for point in points:
        out = out * principal_element(point)
    return out


# ---------------------------------------------------------------------------
# maximal ideals and the commutator ideal


def maximal_ideal_membership(
    Z: Subspace, phi: LinearFunctional, term: Term
) -> bool:
    """Exact membership in the maximal ideal of a character.

    The maximal ideal is precisely the kernel of the one-dimensional
    representation given by (Z, phi), so evaluation decides membership
    with no tolerance.
    """
    return CharacterRep(Z, phi).evaluate(term).is_zero


def sample_characters(space: SympSpace, phi_values: Sequence = (0, 1)) -> list[CharacterRep]:
    """Deterministic family of characters on coordinate isotropic subspaces."""
    chars = [CharacterRep.build(Subspace.zero(space.dim))]
    seen = {Subspace.zero(space.dim)}
    for take in itertools.product((False, True), repeat=space.pairs):
        vecs = [space.p(k + 1) for k, keep in enumerate(take) if keep]
        Z = Subspace.span(space.dim, vecs)
        if Z in seen or Z.is_trivial:
            continue
        seen.add(Z)
        for assignment in itertools.product(phi_values, repeat=Z.dim):
            chars.append(CharacterRep.build(Z, assignment))
    # one non-coordinate support to keep the family honest
    mix = space.p(1) + (space.p(2) if space.pairs >= 2 else space.q(1))
    if space.pairs >= 2:
        Zmix = Subspace.span(space.dim, [mix])
        if Zmix not in seen and Zmix.is_isotropic():
            chars.append(CharacterRep.build(Zmix, (1,)))
    return chars


def commutator_ideal_checks(
    space: SympSpace,
    cfg: RunConfig,
    samples: int = 8,
    seed: int = 0,
) -> dict:
    """Exact and oracle checks for the commutator ideal.

    (a) every sampled character annihilates sampled generator
        commutators exactly;
    (b) every sampled character annihilates products R(a,f)R(b,g) with
        sigma(f,g) != 0 exactly (an isotropic support cannot contain both
        directions);
    (c) the two generating shapes R(a,f)R(b,g) and R(a,f)R(b,g)^2 R(a,f)
        receive matching kernel verdicts across a representation suite,
        in both directions.
    """
    rng = random.Random(seed)
    chars = sample_characters(space)
    pairs = []
    while len(pairs) < samples:
        f = _random_vector(rng, space.dim)
        g = _random_vector(rng, space.dim)
        lam = _random_param(rng)
        mu = _random_param(rng)
        if f.is_zero or g.is_zero:
            continue
        pairs.append((lam, f, mu, g))

    char_kills_commutators = True
    char_kills_products = True
    cross_results = []
    for lam, f, mu, g in pairs:
        rf = Term.resolvent(lam, f)
        rg = Term.resolvent(mu, g)
        comm = commutator(rf, rg)
        for char in chars:
            if not char.evaluate(comm).is_zero:
                char_kills_commutators = False
        if sigma(f, g) != 0:
            prod = rf * rg
            quad = rf * rg * rg * rf
            for char in chars:
                if not char.evaluate(prod).is_zero:
                    char_kills_products = False
            families = _cross_membership_suite(space, lam, f, mu, g)
            agree = True
            for fam in families:
                v_prod = verdict_for(fam, prod, cfg)
                v_quad = verdict_for(fam, quad, cfg)
                if v_prod.in_kernel != v_quad.in_kernel:
                    agree = False
            cross_results.append(agree)

    return {
        "characters": len(chars),
        "pairs": len(pairs),
        "char_kills_commutators": char_kills_commutators,
        "char_kills_products": char_kills_products,
        "cross_membership_agrees": all(cross_results) if cross_results else True,
        "cross_cases": len(cross_results),
    }


def _cross_membership_suite(space, lam, f, mu, g) -> list[RepFamily]:
    """Representations whose kernels contain one factor of the product."""
    fams = [
        RepFamily.sharp(lam, f, CQ(), name="sharp-first"),
        RepFamily.sharp(mu, g, CQ(), name="sharp-second"),
    ]
    # labels singular on f resp. g: take the symplectic complement line
    for name, vec in (("labeled-kills-first", f), ("labeled-kills-second", g)):
        comp = Subspace.span(space.dim, [vec]).complement()
        if not comp.contains(vec):
            label = IrrepLabel.build(comp)
            fams.append(RepFamily.labeled(label, name=name))
    return fams


def _random_vector(rng: random.Random, dim: int) -> SympVector:
    coords = [
        Fraction(rng.choice((0, 1, -1)), rng.choice((2, 3))) for _ in range(dim)
    ]
    if all(c == 0 for c in coords):
        coords[rng.randrange(dim)] = Fraction(1, 2)
    return SympVector(tuple(coords))


def _random_param(rng: random.Random) -> Fraction:
    return Fraction(rng.choice((1, -1, 2, -2, 3, -3)))


# ---------------------------------------------------------------------------
# symplectic isomorphisms


@dataclass(frozen=True)
class SymplecticMap:
    """Linear map between standard spaces given by exact matrix rows."""

    source: SympSpace
    target: SympSpace
    rows: tuple[tuple[Fraction, ...], ...]

    def apply(self, v: SympVector) -> SympVector:
        if v.dim != self.source.dim:
            raise ValueError("vector does not live in the source space")
        return SympVector(
            tuple(
                sum((r * c for r, c in zip(row, v.coords)), Fraction(0))
                for row in self.rows
            )
        )

    def apply_term(self, term: Term) -> Term:
        out = Term.zero()
        for word, coeff in term.monomials():
            piece = Term.scalar(coeff)
            for gen in word:
                piece = piece * Term.resolvent(gen.lam, self.apply(gen.f))
            out = out + piece
        return out

    def preserves_form(self) -> bool:
        basis = self.source.basis()
        for i, u in enumerate(basis):
            for v in basis[i + 1 :]:
                if sigma(self.apply(u), self.apply(v)) != sigma(u, v):
                    return False
        return True


def symplectic_isomorphism(
    source: SympSpace,
    target: SympSpace,
    pair_permutation: Optional[Sequence[int]] = None,
) -> SymplecticMap:
    """Identity-on-coordinates map, optionally permuting symplectic pairs.

    Pair permutations preserve the form; the induced generator map sends
    R(lam, f) to R(lam, mapped f).  Raises on dimension mismatch.
    """
    if source.dim != target.dim:
        raise ValueError("symplectic spaces of different dimension")
    n = source.pairs
    perm = list(pair_permutation) if pair_permutation is not None else list(range(n))
    if sorted(perm) != list(range(n)):
        raise ValueError("pair permutation must permute 0..pairs-1")
    # columns: the basis vectors of pair k map to pair perm[k]
    mat = [[Fraction(0)] * source.dim for _ in range(source.dim)]
    for k in range(n):
        for offset in (0, 1):
            src_col = 2 * k + offset
            dst_row = 2 * perm[k] + offset
            mat[dst_row][src_col] = Fraction(1)
    return SymplecticMap(source, target, tuple(tuple(r) for r in mat))
