import random
from fractions import Fraction

import pytest

from resolvalg.algebra import (
    Generator,
    SpectralPoint,
    Term,
    adjoint,
    commutator,
    normalize_generator,
    primitive_generators,
    simplify,
    spec_contains,
)
from resolvalg.exact import CQ, cq
from resolvalg.symplectic import LinearFunctional, Subspace, SympSpace


def gen(lam, vec) -> Generator:
    return Generator(CQ.coerce(lam), tuple(Fraction(c) for c in vec))


# ---------------------------------------------------------------------------
# generator normalization (scaling and zero-direction rules)


def test_normalize_canonical_is_fixed(space2):
    coeff, g = normalize_generator(1, space2.p(1))
    assert coeff == cq(1)
    assert g == gen(1, [1, 0])


def test_normalize_scales_leading_coordinate(space2):
    # n R(n a, n f) = R(a, f) with n = 1/2 gives R(1, 2 p1) = (1/2) R(1/2, p1)
    coeff, g = normalize_generator(1, space2.p(1).scale(2))
    assert coeff == cq("1/2")
    assert g == gen("1/2", [1, 0])


def test_normalize_zero_direction(space2):
    coeff, g = normalize_generator(3, space2.zero())
    assert g is None
    assert coeff == cq(0, "-1/3")


def test_normalize_idempotent(space2):
    rng = random.Random(2)
    for _ in range(20):
        vec = space2.vector(
            [Fraction(rng.randint(-4, 4), rng.choice((1, 2, 3))) for _ in range(2)]
        )
        lam = Fraction(rng.choice((1, -1, 2, -2)))
        if vec.is_zero:
            continue
        coeff, g = normalize_generator(lam, vec)
        coeff2, g2 = normalize_generator(g.lam, g.f)
        assert coeff2 == cq(1) and g2 == g


def test_rejects_imaginary_parameter(space2):
    with pytest.raises(ValueError):
        normalize_generator(cq(0, 1), space2.p(1))
    with pytest.raises(ValueError):
        Term.resolvent(0, space2.p(1))


# ---------------------------------------------------------------------------
# terms and the adjoint


def test_term_arithmetic_exact(space2):
    r = Term.resolvent(1, space2.p(1))
    s = Term.resolvent(2, space2.p(1))
    t = r.scale(cq("1/3")) + s - s
    assert t == r.scale(cq("1/3"))
    assert (r - r).is_zero
    assert (Term.one() * r) == r


def test_adjoint_flips_parameter(space2):
    t = Term.resolvent(1, space2.p(1))
    assert adjoint(t) == Term.resolvent(-1, space2.p(1))


def test_adjoint_involution_and_antihomomorphism(space2):
    rng = random.Random(5)

    def rand_term():
        total = Term.zero()
        for _ in range(rng.randint(1, 3)):
            word = Term.scalar(cq(rng.randint(-2, 2), rng.randint(-2, 2)) + cq(1))
            for _ in range(rng.randint(0, 2)):
                vec = SympSpace(2).vector(
                    [Fraction(rng.randint(-2, 2), 2) for _ in range(2)]
                )
                if vec.is_zero:
                    continue
                word = word * Term.resolvent(rng.choice((1, -1, 2)), vec)
            total = total + word
        return total

    for _ in range(15):
        t, s = rand_term(), rand_term()
        assert adjoint(adjoint(t)) == t
        assert adjoint(t * s) == adjoint(s) * adjoint(t)
        c = cq(2, -3)
        assert adjoint(t.scale(c)) == adjoint(t).scale(c.conjugate())


def test_adjoint_of_scalar():
    assert adjoint(Term.scalar(cq(0, 1))) == Term.scalar(cq(0, -1))


def test_adjoint_conjugates_continued_parameter(space2):
    t = Term.resolvent(cq(2, 5), space2.p(1))
    assert adjoint(t) == Term.resolvent(cq(-2, 5), space2.p(1))


# ---------------------------------------------------------------------------
# rewriting


def test_simplify_merges_same_direction(space2):
    t = Term.resolvent(1, space2.p(1)) * Term.resolvent(2, space2.p(1))
    result = simplify(t)
    expected = (
        Term.resolvent(1, space2.p(1)) - Term.resolvent(2, space2.p(1))
    ).scale(cq(0, -1))
    assert result.complete
    assert result.term == expected


def test_simplify_identity_untouched():
    result = simplify(Term.one())
    assert result.term == Term.one()
    assert result.steps == 0 and result.complete


def test_simplify_square_is_kept(space2):
    t = Term.resolvent(1, space2.p(1)) * Term.resolvent(1, space2.p(1))
    result = simplify(t)
    assert result.term == t


def test_simplify_swaps_commuting_generators(space4):
    a = Term.resolvent(1, space4.p(1))
    b = Term.resolvent(1, space4.p(2))
    result = simplify(a * b)
    assert result.complete
    assert result.term == b * a  # p2 sorts before p1 in coordinate order


def test_simplify_reorders_with_commutator_correction(space2):
    a = Term.resolvent(1, space2.p(1))
    b = Term.resolvent(1, space2.q(1))
    result = simplify(a * b, degree_cap=4)
    # R_a R_b = R_b R_a + i s(a,b) R_a R_b^2 R_a with s(p1, q1) = 1; the
    # correction word is blocked from further reordering by the degree cap
    swapped = b * a
    correction = (a * b * b * a).scale(cq(0, 1))
    assert result.term == swapped + correction
    assert result.capped and not result.complete


def test_simplify_contracts_additive_pattern(space4):
    a = Term.resolvent(1, space4.p(1))
    b = Term.resolvent(1, space4.p(2))
    c = Term.resolvent(2, space4.p(1) + space4.p(2))
    result = simplify(c * a + c * b)
    assert result.complete
    assert result.term == b * a


def test_simplify_budget_exhaustion(space2):
    t = Term.resolvent(1, space2.p(1)) * Term.resolvent(2, space2.p(1))
    result = simplify(t, budget=0)
    assert not result.complete
    assert result.term == t


# ---------------------------------------------------------------------------
# commutator


def test_commutator_basics(space2):
    r = Term.resolvent(1, space2.p(1))
    s = Term.resolvent(1, space2.q(1))
    assert commutator(r, r).is_zero
    assert commutator(Term.one(), r).is_zero
    assert not commutator(r, s).is_zero


# ---------------------------------------------------------------------------
# spectral circle


def test_spec_contains_examples(space2):
    f = space2.p(1)
    assert spec_contains(1, f, cq(0, -1))  # conj(rho) - rho = 2i = 2i|rho|^2
    assert spec_contains(1, f, cq(0))
    assert not spec_contains(1, f, cq(1))


def test_spec_contains_oracle(space2):
    f = space2.p(1)
    for lam in (1, -1, 2, -2):
        for r in range(-10, 11):
            rho = (cq(0, lam) - cq(r)).inverse()
            assert spec_contains(lam, f, rho)


def test_spec_contains_involution_symmetry(space2):
    rng = random.Random(9)
    f = space2.p(1)
    for _ in range(30):
        lam = Fraction(rng.choice((1, -1, 2, -2, 3)))
        rho = cq(Fraction(rng.randint(-4, 4), 3), Fraction(rng.randint(-4, 4), 3))
        assert spec_contains(lam, f, rho) == spec_contains(-lam, f, rho.conjugate())


def test_spec_contains_rejects_degenerate(space2):
    with pytest.raises(ValueError):
        spec_contains(0, space2.p(1), cq(0))
    with pytest.raises(ValueError):
        spec_contains(1, space2.zero(), cq(0))


def test_spectral_point_construction(space2):
    pt = SpectralPoint.from_sharp_value(1, space2.p(1), 3)
    assert pt.sharp_value == 3
    assert spec_contains(1, space2.p(1), pt.rho)
    with pytest.raises(ValueError):
        SpectralPoint(Fraction(1), space2.p(1), cq(1))


# ---------------------------------------------------------------------------
# kernel generating sets


def test_primitive_generators_full_space(space2):
    Y = Subspace.full(2)
    phi = LinearFunctional.zero(Y.radical())
    assert primitive_generators(Y, phi, 1, 1) == []


def test_primitive_generators_isotropic_line(space2):
    Y = Subspace.span(2, [space2.p(1)])
    phi = LinearFunctional.zero(Y.radical())
    terms = primitive_generators(Y, phi, 1, 1)
    # probes q1 and q1 + p1 are singular; p1 is centered by its character
    assert Term.resolvent(1, space2.q(1)) in terms
    assert Term.resolvent(1, space2.q(1) + space2.p(1)) in terms
    centered = Term.resolvent(1, space2.p(1)) + Term.scalar(cq(0, 1))
    assert centered in terms


def test_primitive_generators_all_singular(space2):
    Y = Subspace.zero(2)
    phi = LinearFunctional.zero(Y)
    terms = primitive_generators(Y, phi, 1, 1)
    assert terms == [
        Term.resolvent(1, space2.p(1)),
        Term.resolvent(1, space2.q(1)),
    ]
