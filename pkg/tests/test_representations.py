import random
from fractions import Fraction

import numpy as np
import pytest

from resolvalg.algebra import Term, adjoint
from resolvalg.config import RunConfig
from resolvalg.dsl import parse
from resolvalg.exact import CQ, cq
from resolvalg.representations import (
    CharacterRep,
    IrrepLabel,
    LabeledRep,
    RepFamily,
    SingularVectorError,
    build_representation,
    classify_vector,
    compressed_max,
    extract_label,
    low_energy_block,
    oscillator_matrices,
    regular_representation,
    sharp_value_rep,
)
from resolvalg.symplectic import LinearFunctional, Subspace, SympSpace


# ---------------------------------------------------------------------------
# oscillator matrices


def test_ladder_matrix_elements():
    (p,), (q,) = oscillator_matrices(1, 2)
    assert abs(q[0, 1] - 1 / np.sqrt(2)) < 1e-14


@pytest.mark.parametrize("modes,levels", [(1, 8), (2, 4)])
def test_pq_hermitian(modes, levels):
    ps, qs = oscillator_matrices(modes, levels)
    for m in list(ps) + list(qs):
        assert np.allclose(m, m.conj().T)


def test_canonical_commutator_below_top_level():
    (p,), (q,) = oscillator_matrices(1, 12)
    comm = q @ p - p @ q
    # exact i on matrix elements away from the truncation edge
    assert abs(comm[0, 0] - 1j) < 1e-14
    sub = comm[:10, :10]
    assert np.max(np.abs(sub - 1j * np.eye(10))) < 1e-13


def test_low_energy_block_ordering():
    assert low_energy_block(1, 16, 8) == tuple(range(8))
    block = low_energy_block(2, 8, 8)
    # lowest total excitation first: (0,0), (0,1), (1,0), ...
    assert block[0] == 0
    assert set(block[1:3]) == {1, 8}
    assert len(block) == 8


# ---------------------------------------------------------------------------
# generator and resolvent matrices


def test_generator_zero_vector(space2):
    rep = regular_representation(space2, 8)
    assert np.allclose(rep.generator_matrix(space2.zero()), 0)


def test_generator_respects_commutation_sign(space2):
    rep = regular_representation(space2, 24)
    a = rep.generator_matrix(space2.p(1))
    b = rep.generator_matrix(space2.q(1))
    comm = a @ b - b @ a
    # [Phi(p1), Phi(q1)] = i sigma(p1, q1) = i on the compressed block
    block = rep.block(8)
    idx = np.ix_(block, block)
    assert np.max(np.abs((comm - 1j * rep.identity())[idx])) < 1e-12


def test_generator_hermitian_random(space4):
    rng = random.Random(3)
    rep = regular_representation(space4, 6)
    for _ in range(5):
        f = space4.vector([Fraction(rng.randint(-2, 2), 2) for _ in range(4)])
        m = rep.generator_matrix(f)
        assert np.allclose(m, m.conj().T)


def test_labeled_shift_gives_scalar():
    space = SympSpace(4)
    Y = Subspace.span(4, [space.p(1), space.q(1), space.p(2)])
    label = IrrepLabel.build(Y, [3])
    rep = build_representation(label, 6)
    assert isinstance(rep, LabeledRep)
    mat = rep.generator_matrix(space.p(2))
    assert np.allclose(mat, 3 * rep.identity())


def test_generator_outside_label_raises():
    space = SympSpace(4)
    Y = Subspace.span(4, [space.p(1), space.q(1), space.p(2)])
    rep = build_representation(IrrepLabel.build(Y, [0]), 6)
    with pytest.raises(SingularVectorError):
        rep.generator_matrix(space.q(2))


def test_resolvent_zero_direction(space2):
    rep = regular_representation(space2, 8)
    mat = rep.resolvent_matrix(2, space2.zero())
    assert np.allclose(mat, (-1j / 2) * rep.identity())


def test_resolvent_zero_branch_off_label(space2):
    label = IrrepLabel.build(Subspace.span(2, [space2.p(1)]), [0])
    rep = build_representation(label, 8)
    assert isinstance(rep, CharacterRep)
    assert rep.resolvent_value(1, space2.q(1)).is_zero


def test_labeled_matrix_zero_branch():
    space = SympSpace(4)
    Y = Subspace.span(4, [space.p(1), space.q(1)])
    rep = build_representation(IrrepLabel.build(Y), 6)
    assert isinstance(rep, LabeledRep)
    assert np.allclose(rep.resolvent_matrix(1, space.p(2)), 0)


def test_character_resolvent_value(space2):
    char = CharacterRep.build(Subspace.span(2, [space2.p(1)]), [3])
    value = char.resolvent_value(2, space2.p(1))
    assert value == cq("-3/13", "-2/13")  # (2i - 3)^-1


def test_resolvent_norm_bound(space2):
    rng = random.Random(4)
    rep = regular_representation(space2, 24)
    for _ in range(6):
        lam = Fraction(rng.choice((1, -1, 2, -2, 3)))
        f = space2.vector([Fraction(rng.randint(-2, 2), 2) for _ in range(2)])
        mat = rep.resolvent_matrix(lam, f)
        assert np.linalg.norm(mat, 2) <= 1 / abs(float(lam)) + 1e-10


def test_resolvent_complex_parameter_shift():
    # shifting the parameter into the complex plane equals adding a scalar
    # to the generator: R(a + ic, f) at phi = 0 vs generator shifted by c
    space = SympSpace(4)
    Y = Subspace.span(4, [space.p(1), space.q(1), space.p(2)])
    rep_shifted = build_representation(IrrepLabel.build(Y, [5]), 8)
    rep_plain = build_representation(IrrepLabel.build(Y, [0]), 8)
    f = space.p(1) + space.p(2)
    direct = rep_shifted.resolvent_matrix(1, f)
    continued = rep_plain.resolvent_matrix(CQ(Fraction(1), Fraction(5)), space.p(1))
    assert np.max(np.abs(direct - continued)) < 1e-12


def test_condition_guard_refuses():
    space = SympSpace(2)
    rep = regular_representation(space, 8)
    with pytest.raises(ValueError):
        rep.resolvent_matrix(CQ(Fraction(0), Fraction(1)), space.p(1))


# ---------------------------------------------------------------------------
# evaluation


def test_eval_identity(space2):
    rep = regular_representation(space2, 8)
    assert np.allclose(rep.evaluate(Term.one()), rep.identity())


def test_eval_star_property(space2):
    rng = random.Random(8)
    rep = regular_representation(space2, 12)
    for _ in range(6):
        t = Term.zero()
        for _ in range(rng.randint(1, 3)):
            word = Term.scalar(cq(rng.randint(-2, 2), rng.randint(-2, 2)) + cq(1))
            for _ in range(rng.randint(0, 2)):
                f = space2.vector([Fraction(rng.randint(-1, 1), 2) for _ in range(2)])
                if f.is_zero:
                    continue
                word = word * Term.resolvent(rng.choice((1, -1, 2)), f)
            t = t + word
        lhs = rep.evaluate(adjoint(t))
        rhs = rep.evaluate(t).conj().T
        assert np.max(np.abs(lhs - rhs)) < 1e-10


def test_eval_relation_residual_decays(space2, cfg):
    t = parse("R(1,p1)*R(1,q1) - R(1,q1)*R(1,p1) - i*R(1,p1)*R(1,q1)*R(1,q1)*R(1,p1)")
    family = RepFamily.regular(space2)
    residuals, levels = family.residuals(t, cfg)
    assert levels == [16, 32, 64]
    assert residuals[0] > residuals[-1]
    assert residuals[-1] < 1e-6


def test_character_evaluation_multiplicative(space2):
    char = CharacterRep.build(Subspace.span(2, [space2.p(1)]), ["1/2"])
    t = parse("R(1,p1) + 2*i")
    s = parse("R(2,p1)*R(1,p1) - 1")
    assert char.evaluate(t * s) == char.evaluate(t) * char.evaluate(s)


def test_simplify_preserves_evaluation(space2, cfg):
    t = parse("R(1,q1)*R(1,p1)*R(2,p1)")
    from resolvalg.algebra import simplify

    result = simplify(t)
    rep = regular_representation(space2, 32)
    diff = rep.evaluate(t - result.term)
    assert compressed_max(diff, rep.block(cfg.k0)) < 1e-4
    rep64 = regular_representation(space2, 64)
    assert compressed_max(rep64.evaluate(t - result.term), rep64.block(cfg.k0)) < 1e-7


# ---------------------------------------------------------------------------
# sharp values


def test_sharp_value_rep_reproduces_rho(space2):
    rho = (cq(0, 1) - cq(3)).inverse()
    rep = sharp_value_rep(1, space2.p(1), rho)
    assert rep.resolvent_value(1, space2.p(1)) == rho
    # directions that fail to commute with f are annihilated
    assert rep.resolvent_value(1, space2.q(1)).is_zero


def test_sharp_value_zero_kills_everything(space2):
    rep = sharp_value_rep(1, space2.p(1), cq(0))
    assert rep.resolvent_value(1, space2.p(1)).is_zero
    assert rep.resolvent_value(2, space2.q(1)).is_zero
    assert rep.evaluate(Term.one()) == cq(1)


def test_sharp_value_rejects_off_circle(space2):
    with pytest.raises(ValueError):
        sharp_value_rep(1, space2.p(1), cq(1))


# ---------------------------------------------------------------------------
# classification and extraction


def test_classify_examples(space2, cfg):
    label = IrrepLabel.build(Subspace.span(2, [space2.p(1)]), [0])
    family = RepFamily.labeled(label)
    assert classify_vector(family, space2.q(1), cfg).tag == "singular"
    trivial = classify_vector(family, space2.p(1), cfg)
    assert trivial.tag == "trivial"
    assert abs(trivial.scalar - (-1j)) < 1e-12  # (i*1 - 0)^-1
    regular = RepFamily.regular(space2)
    assert classify_vector(regular, space2.p(1), cfg).tag == "regular"


def test_classify_matrix_label(cfg):
    space = SympSpace(4)
    label = IrrepLabel.build(
        Subspace.span(4, [space.p(1), space.q(1), space.p(2)]), [3]
    )
    family = RepFamily.labeled(label)
    assert classify_vector(family, space.p(1), cfg).tag == "regular"
    trivial = classify_vector(family, space.p(2), cfg)
    assert trivial.tag == "trivial"
    assert abs(trivial.scalar - 1 / (1j - 3)) < 1e-10
    assert classify_vector(family, space.q(2), cfg).tag == "singular"


def test_extract_label_regular(space2, cfg):
    family = RepFamily.regular(space2)
    extracted = extract_label(family, space2.basis(), cfg)
    assert extracted.Y == Subspace.full(2)
    assert extracted.phi_values == ()


def test_extract_label_with_functional(space2, cfg):
    label = IrrepLabel.build(Subspace.span(2, [space2.p(1)]), [3])
    extracted = extract_label(RepFamily.labeled(label), space2.basis(), cfg)
    assert extracted.Y == label.Y
    assert len(extracted.phi_values) == 1
    assert abs(extracted.phi_values[0] - 3.0) < 1e-6


def test_extract_label_character(space2, cfg):
    char = CharacterRep.build(Subspace.span(2, [space2.p(1)]), [2])
    extracted = extract_label(RepFamily.from_character(char), space2.basis(), cfg)
    assert extracted.Y == char.Z
    assert abs(extracted.phi_values[0] - 2.0) < 1e-12
