"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line so the gate can be read off the
pytest -s output directly.  Tolerances are pinned here and match the
shipping configuration defaults.
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from resolvalg.algebra import SpectralPoint, Term, adjoint, commutator
from resolvalg.checks import (
    random_param,
    random_vector,
    relation_suite,
)
from resolvalg.config import RunConfig
from resolvalg.dsl import parse
from resolvalg.exact import CQ, cq
from resolvalg.ideals import (
    build_chain,
    chain_strictness_witnesses,
    commutator_ideal_checks,
    enumerate_coordinate_labels,
    intersection_element,
    label_strictly_less,
    max_chain_length,
    principal_identity_check,
    sample_characters,
    verdict_for,
)
from resolvalg.representations import (
    CharacterRep,
    IrrepLabel,
    RepFamily,
    extract_label,
    sharp_value_rep,
)
from resolvalg.symplectic import Subspace, SympSpace
from resolvalg.algebra import spec_contains

CFG = RunConfig()


def announce(criterion: str, ok: bool, detail: str = "") -> None:
    marker = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"{marker}: {criterion}{suffix}")


# ---------------------------------------------------------------------------
# 1. relation residual suite


def test_criterion_1_relation_suite_one_mode():
    started = time.monotonic()
    reports = relation_suite(CFG, dim=2, seed=0, instances=20, schedule=[16, 32, 64])
    elapsed = time.monotonic() - started
    ok = all(r["status"] == "pass" for r in reports)
    finals = {r["check"]: r["residuals"][-1] for r in reports}
    ok = ok and all(v < 1e-6 for v in finals.values()) and elapsed < 60.0
    announce(
        "relation suite d=2, N in {16,32,64}, 20 instances, residuals < 1e-6",
        ok,
        f"worst final {max(finals.values()):.2e}, {elapsed:.1f}s",
    )
    assert ok


def test_criterion_1_relation_suite_two_modes():
    reports = relation_suite(CFG, dim=4, seed=0, instances=20, schedule=[8, 16, 24])
    finals = {r["check"]: r["residuals"][-1] for r in reports}
    ok = all(r["status"] == "pass" for r in reports)
    ok = ok and all(v < 1e-5 for v in finals.values())
    announce(
        "relation suite d=4, N in {8,16,24}, 20 instances, residuals < 1e-5",
        ok,
        f"worst final {max(finals.values()):.2e}",
    )
    assert ok


# ---------------------------------------------------------------------------
# 2. exact identities


def test_criterion_2_exact_identities():
    space = SympSpace(2)
    rng = random.Random(0)

    zero_ok = all(
        Term.resolvent(lam, space.zero()) == Term.scalar(cq(0, -1) / cq(lam))
        for lam in (1, -1, 2, -2, 3, -3)
    )

    involution_ok = True
    for _ in range(20):
        total = Term.zero()
        for _ in range(rng.randint(1, 3)):
            word = Term.scalar(cq(rng.randint(-2, 2), rng.randint(-2, 2)) + cq(1))
            for _ in range(rng.randint(0, 2)):
                word = word * Term.resolvent(random_param(rng), random_vector(rng, 2))
            total = total + word
        if adjoint(adjoint(total)) != total:
            involution_ok = False

    mult_ok = True
    for char in sample_characters(space, phi_values=(0, 1)):
        for _ in range(5):
            t = Term.resolvent(random_param(rng), random_vector(rng, 2))
            s = Term.resolvent(random_param(rng), random_vector(rng, 2)) + Term.scalar(
                cq(rng.randint(-2, 2), 1)
            )
            if char.evaluate(t * s) != char.evaluate(t) * char.evaluate(s):
                mult_ok = False

    ok = zero_ok and involution_ok and mult_ok
    announce("exact identities: zero direction, involution, multiplicativity", ok)
    assert ok


# ---------------------------------------------------------------------------
# 3. spectral circle


def test_criterion_3_spectral_circle():
    space = SympSpace(2)
    f = space.p(1)
    on_ok = True
    for lam in (1, -1, 2, -2):
        for r in range(-10, 11):
            rho = (cq(0, lam) - cq(r)).inverse()
            if not spec_contains(lam, f, rho):
                on_ok = False
        if not spec_contains(lam, f, cq(0)):
            on_ok = False
    rng = random.Random(0)
    off_ok = True
    produced = 0
    while produced < 20:
        lam = Fraction(rng.choice((1, -1, 2, -2)))
        rho = cq(Fraction(rng.randint(-5, 5), 2), Fraction(rng.randint(-5, 5), 2))
        if rho.is_zero or -rho.im == lam * rho.abs2():
            continue
        produced += 1
        if spec_contains(lam, f, rho):
            off_ok = False
    ok = on_ok and off_ok
    announce("spectral circle agrees with the (i*a - r)^-1 oracle", ok)
    assert ok


# ---------------------------------------------------------------------------
# 4. label round-trips


def test_criterion_4_label_roundtrip():
    failures = []
    total = 0
    for dim in (2, 4):
        space = SympSpace(dim)
        for label in enumerate_coordinate_labels(space, phi_values=(0, 1, 3)):
            total += 1
            extracted = extract_label(RepFamily.labeled(label), space.basis(), CFG)
            if extracted.Y != label.Y or extracted.radical != label.phi.domain:
                failures.append(str(label.Y))
                continue
            for got, want in zip(extracted.phi_values, label.phi.values):
                if abs(got - float(want)) > 1e-6:
                    failures.append(f"{label.Y}: {got} vs {want}")
    ok = not failures
    announce(
        "label round-trip over coordinate labels, phi in {0,1,3}",
        ok,
        f"{total} labels",
    )
    assert ok, failures[:5]


# ---------------------------------------------------------------------------
# 5. chain lengths


def test_criterion_5_chain_lengths():
    ok = True
    details = []
    for dim in (2, 4, 6):
        space = SympSpace(dim)
        chain = build_chain(space)
        expected = dim // 2 + 1
        increasing = all(
            label_strictly_less(a, b) for a, b in zip(chain, chain[1:])
        )
        witnesses = chain_strictness_witnesses(chain, CFG.with_dim(dim))
        good = (
            len(chain) == expected
            and increasing
            and all(w["ok"] for w in witnesses)
        )
        details.append(f"d={dim}: len {len(chain)}")
        ok = ok and good
    for dim in (2, 4):
        labels = enumerate_coordinate_labels(SympSpace(dim), phi_values=(0, 1))
        if max_chain_length(labels) != dim // 2 + 1:
            ok = False
        details.append(f"d={dim}: universe {len(labels)}")
    announce("chain length dim/2 + 1 with strictness witnesses", ok, "; ".join(details))
    assert ok


# ---------------------------------------------------------------------------
# 6. principal-ideal identity


def test_criterion_6_principal_identity():
    rng = random.Random(0)
    space = SympSpace(2)
    family = RepFamily.regular(space)
    ok = True
    worst = 0.0
    made = 0
    while made < 10:
        lam = random_param(rng)
        mu = random_param(rng)
        if lam == mu:
            continue
        f = random_vector(rng, 2)
        point = (
            SpectralPoint(lam, f, cq(0))
            if rng.random() < 0.3
            else SpectralPoint.from_sharp_value(lam, f, rng.randint(-3, 3))
        )
        try:
            result = principal_identity_check(point, mu, family, CFG)
        except ZeroDivisionError:
            continue
        made += 1
        worst = max(worst, result["residuals"][-1])
        if result["residuals"][-1] >= 1e-6:
            ok = False
        if not (result["shifted_on_circle"] and result["sharp_annihilates_shift"]):
            ok = False
        equal = principal_identity_check(point, point.lam, family, CFG)
        if not equal["exact_zero"]:
            ok = False
    announce(
        "principal-ideal shift identity, 10 triples, residual < 1e-6 plus "
        "exact zero at equal parameters",
        ok,
        f"worst {worst:.2e}",
    )
    assert ok


# ---------------------------------------------------------------------------
# 7. intersection order independence


def test_criterion_7_intersection_order_independence():
    rng = random.Random(1)
    space = SympSpace(2)
    ok = True
    for case in range(5):
        k = 2 if case % 2 == 0 else 3
        points = []
        while len(points) < k:
            lam = Fraction(rng.choice((1, -1, 2, -2)))
            f = random_vector(rng, 2)
            points.append(
                SpectralPoint(lam, f, cq(0))
                if rng.random() < 0.5
                else SpectralPoint.from_sharp_value(lam, f, rng.randint(-2, 2))
            )
        families = [
            RepFamily.regular(space),
            RepFamily.labeled(
                IrrepLabel.build(Subspace.span(2, [space.p(1)]), [0]),
                name="labeled-p1",
            ),
            RepFamily.labeled(
                IrrepLabel.build(Subspace.span(2, [space.q(1)]), [1]),
                name="labeled-q1",
            ),
            RepFamily.sharp(points[0].lam, points[0].f, points[0].rho, name="s0"),
            RepFamily.sharp(points[-1].lam, points[-1].f, points[-1].rho, name="s1"),
            RepFamily.from_character(
                CharacterRep.build(Subspace.zero(2)), name="zero-char"
            ),
        ]
        assert len(families) >= 6
        for fam in families:
            statuses = {
                verdict_for(fam, intersection_element(list(order)), CFG).status
                for order in itertools.permutations(points)
            }
            if len(statuses) != 1:
                ok = False
    announce(
        "intersection verdicts identical under factor permutation "
        "(5 cases, 6 representations)",
        ok,
    )
    assert ok


# ---------------------------------------------------------------------------
# 8. maximal ideals and the commutator ideal


def test_criterion_8_maximal_and_commutator():
    space = SympSpace(2)
    rng = random.Random(2)
    chars = sample_characters(space)
    exact_ok = True
    for _ in range(10):
        f = random_vector(rng, 2)
        g = random_vector(rng, 2)
        lam, mu = random_param(rng), random_param(rng)
        rf, rg = Term.resolvent(lam, f), Term.resolvent(mu, g)
        for char in chars:
            if not char.evaluate(commutator(rf, rg)).is_zero:
                exact_ok = False
            from resolvalg.symplectic import sigma

            if sigma(f, g) != 0 and not char.evaluate(rf * rg).is_zero:
                exact_ok = False
    report = commutator_ideal_checks(space, CFG, samples=8, seed=2)
    ok = (
        exact_ok
        and report["char_kills_commutators"]
        and report["char_kills_products"]
        and report["cross_membership_agrees"]
    )
    announce(
        "characters annihilate commutators and incompatible products; "
        "generating shapes agree",
        ok,
        f"{report['cross_cases']} cross cases",
    )
    assert ok
