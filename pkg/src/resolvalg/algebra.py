"""Noncommutative *-polynomials in resolvent generators.

A generator stands for the resolvent of a field operator in a direction of
the symplectic space; words of generators with Gaussian-rational
coefficients form terms.  Six defining relations hold between generators:

  (difference)   R(a,f) - R(b,f) = i(b-a) R(a,f) R(b,f)
  (involution)   R(a,f)* = R(-a,f)
  (commutation)  [R(a,f), R(b,g)] = i sigma(f,g) R(a,f) R(b,g)^2 R(a,f)
  (scaling)      n R(n a, n f) = R(a,f)
  (additivity)   R(a,f) R(b,g) = R(a+b, f+g)(R(a,f) + R(b,g)
                                  + i sigma(f,g) R(a,f)^2 R(b,g)),  a+b != 0
  (zero vector)  R(a,0) = -(i/a) 1

Scaling and the zero-vector rule are applied eagerly so that stored
generators are always canonical (first nonzero coordinate equal to one).
The remaining rules are applied by a budgeted, best-effort rewriter;
no confluent normal form exists because the commutation rule raises the
word degree, so relation equality is ultimately checked numerically in a
faithful regular representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .exact import CQ, ComplexRational, frac
from .symplectic import LinearFunctional, Subspace, SympSpace, SympVector, sigma

ScalarLike = Union[int, Fraction, str, ComplexRational]
LambdaLike = Union[int, Fraction, str, ComplexRational]


@dataclass(frozen=True)
class Generator:
    """Canonical resolvent symbol R(lam, f).

    lam has nonzero real part (rewrites may introduce genuinely complex
    values; parsed input is real).  The direction f is stored with its
    first nonzero coordinate scaled to one.
    """

    lam: ComplexRational
    vec: tuple[Fraction, ...]

    def __post_init__(self):
        if self.lam.re == 0:
            raise ValueError("resolvent parameter must have nonzero real part")

    @property
    def f(self) -> SympVector:
        return SympVector(self.vec)

    @property
    def dim(self) -> int:
        return len(self.vec)

    def sort_key(self):
        return (self.vec, (self.lam.re, self.lam.im))

    def adjoint(self) -> "Generator":
        # R(lam, f)* = R(-conj(lam), f); reduces to lam -> -lam for real lam
        return Generator(ComplexRational(-self.lam.re, self.lam.im), self.vec)

    def __str__(self) -> str:
        from .dsl import format_generator

        return format_generator(self)


Word = tuple[Generator, ...]


def normalize_generator(
    lam: LambdaLike, f: SympVector
) -> tuple[ComplexRational, Optional[Generator]]:
    """Canonical form of a raw resolvent symbol.

    Returns (coefficient, generator) such that the raw symbol equals
    coefficient * generator; a zero direction collapses to the scalar
    -(i/lam) with no generator.  Uses the scaling rule
    n R(n a, n f) = R(a, f) with n = 1/c, c the first nonzero coordinate.
    """
    lam = ComplexRational.coerce(lam)
    if lam.re == 0:
        raise ValueError("resolvent parameter must have nonzero real part")
    c = next((x for x in f.coords if x != 0), None)
    if c is None:
        return CQ(0, -1) / lam, None
    gen = Generator(lam / c, tuple(x / c for x in f.coords))
    return ComplexRational.coerce(Fraction(1) / c), gen


def _word_key(word: Word):
    return (len(word), tuple(g.sort_key() for g in word))


class Term:
    """Finite sum of words of canonical generators with exact coefficients.

    Immutable; arithmetic returns new terms.  The empty word is the
    identity.  Zero coefficients are never stored.
    """

    __slots__ = ("_mono",)

    def __init__(self, monomials: Optional[dict[Word, ComplexRational]] = None):
        mono: dict[Word, ComplexRational] = {}
        if monomials:
            for word, coeff in monomials.items():
                if not coeff.is_zero:
                    mono[word] = coeff
        self._mono = mono

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Term":
        return Term()

    @staticmethod
    def scalar(value: ScalarLike) -> "Term":
        return Term({(): ComplexRational.coerce(value)})

    @staticmethod
    def one() -> "Term":
        return Term.scalar(1)

    @staticmethod
    def resolvent(lam: LambdaLike, f: SympVector) -> "Term":
        coeff, gen = normalize_generator(lam, f)
        if gen is None:
            return Term.scalar(coeff)
        return Term({(gen,): coeff})

    @staticmethod
    def from_word(gens: Iterable[Generator], coeff: ScalarLike = 1) -> "Term":
        return Term({tuple(gens): ComplexRational.coerce(coeff)})

    # -- inspection --------------------------------------------------------

    def monomials(self) -> list[tuple[Word, ComplexRational]]:
        return sorted(self._mono.items(), key=lambda kv: _word_key(kv[0]))

    @property
    def is_zero(self) -> bool:
        return not self._mono

    def as_scalar(self) -> Optional[ComplexRational]:
        """The coefficient if the term is scalar (0 or c*1), else None."""
        if not self._mono:
            return CQ()
        if len(self._mono) == 1 and () in self._mono:
            return self._mono[()]
        return None

    @property
    def degree(self) -> int:
        return max((len(w) for w in self._mono), default=0)

    @property
    def dim(self) -> Optional[int]:
        for word in self._mono:
            for g in word:
                return g.dim
        return None

    def __len__(self) -> int:
        return len(self._mono)

    def __eq__(self, other) -> bool:
        return isinstance(other, Term) and self._mono == other._mono

    def __hash__(self):
        return hash(frozenset(self._mono.items()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Term") -> "Term":
        out = dict(self._mono)
        for word, coeff in other._mono.items():
            acc = out.get(word, CQ()) + coeff
            if acc.is_zero:
                out.pop(word, None)
            else:
                out[word] = acc
        return Term(out)

    def __sub__(self, other: "Term") -> "Term":
        return self + (-other)

    def __neg__(self) -> "Term":
        return Term({w: -c for w, c in self._mono.items()})

    def __mul__(self, other) -> "Term":
        if not isinstance(other, Term):
            return self.scale(other)
        out: dict[Word, ComplexRational] = {}
        for w1, c1 in self._mono.items():
            for w2, c2 in other._mono.items():
                word = w1 + w2
                acc = out.get(word, CQ()) + c1 * c2
                if acc.is_zero:
                    out.pop(word, None)
                else:
                    out[word] = acc
        return Term(out)

    def __rmul__(self, other) -> "Term":
        return self.scale(other)

    def scale(self, value: ScalarLike) -> "Term":
        c = ComplexRational.coerce(value)
        if c.is_zero:
            return Term.zero()
        return Term({w: c * k for w, k in self._mono.items()})

    def adjoint(self) -> "Term":
        """Antilinear involution: conjugate coefficients, reverse words."""
        return Term(
            {
                tuple(g.adjoint() for g in reversed(word)): coeff.conjugate()
                for word, coeff in self._mono.items()
            }
        )

    def __str__(self) -> str:
        from .dsl import format_term

        return format_term(self)

    def __repr__(self) -> str:
        return f"Term({self})"


def adjoint(t: Term) -> Term:
    return t.adjoint()


def commutator(a: Term, b: Term) -> Term:
    return a * b - b * a


# ---------------------------------------------------------------------------
# budgeted rewriting


@dataclass(frozen=True)
class SimplifyResult:
    term: Term
    complete: bool  # no applicable rewrite remained
    steps: int
    capped: bool  # a commutation rewrite was blocked by the degree cap


def simplify(term: Term, budget: int = 400, degree_cap: int = 6) -> SimplifyResult:
    """Best-effort rewriting under the defining relations.

    Merges same-direction neighbours via the difference rule, swaps
    commuting neighbours into sorted order for free, reorders
    noncommuting neighbours via the commutation rule (degree-raising,
    applied only below the degree cap) and contracts matched monomial
    pairs via the additivity rule read right to left.  Stops when no rule
    applies or the step budget is exhausted.
    """
    mono = dict(term._mono)
    steps = 0
    capped = False
    while steps < budget:
        action = _find_rewrite(mono, degree_cap)
        if action is None:
            break
        kind = action[0]
        if kind == "capped":
            capped = True
            break
        steps += 1
        if kind == "merge":
            _, word, idx = action
            _apply_merge(mono, word, idx)
        elif kind == "swap":
            _, word, idx = action
            _apply_swap(mono, word, idx, with_correction=False)
        elif kind == "reorder":
            _, word, idx = action
            _apply_swap(mono, word, idx, with_correction=True)
        elif kind == "contract":
            _, w1, w2, idx, data = action
            _apply_contraction(mono, w1, w2, idx, data)
    else:
        return SimplifyResult(Term(mono), False, steps, capped)
    done = _find_rewrite(mono, degree_cap)
    complete = done is None
    if done is not None and done[0] == "capped":
        capped = True
        complete = False
    return SimplifyResult(Term(mono), complete, steps, capped)


def _find_rewrite(mono: dict[Word, ComplexRational], degree_cap: int):
    cap_hit = False
    words = sorted(mono, key=_word_key)
    for word in words:
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a.vec == b.vec:
                if a.lam != b.lam:
                    return ("merge", word, i)
                continue  # equal generators: a genuine square, no rule
            if a.sort_key() > b.sort_key():
                if sigma(a.f, b.f) == 0:
                    return ("swap", word, i)
                if len(word) + 2 <= degree_cap:
                    return ("reorder", word, i)
                cap_hit = True
    hit = _find_contraction(mono, words)
    if hit is not None:
        return hit
    if cap_hit:
        return ("capped",)
    return None


def _apply_merge(mono, word: Word, i: int) -> None:
    """Difference rule: R(a,f)R(b,f) -> (i(b-a))^-1 (R(a,f) - R(b,f))."""
    coeff = mono.pop(word)
    a, b = word[i], word[i + 1]
    factor = (CQ(0, 1) * (b.lam - a.lam)).inverse()
    for kept, sign in ((a, 1), (b, -1)):
        new_word = word[:i] + (kept,) + word[i + 2 :]
        _accumulate(mono, new_word, coeff * factor * sign)


def _apply_swap(mono, word: Word, i: int, with_correction: bool) -> None:
    """Commutation rule: R_a R_b -> R_b R_a (+ degree-4 correction)."""
    coeff = mono.pop(word)
    a, b = word[i], word[i + 1]
    swapped = word[:i] + (b, a) + word[i + 2 :]
    _accumulate(mono, swapped, coeff)
    if with_correction:
        s = sigma(a.f, b.f)
        correction = word[:i] + (a, b, b, a) + word[i + 2 :]
        _accumulate(mono, correction, coeff * CQ(0, s))


def _find_contraction(mono: dict[Word, ComplexRational], words: list[Word]):
    """Additivity rule read right to left on a matched pair of monomials.

    The relation (with commuting directions a, b and their combination
    c = x a + y b) reads R_a R_b = y R_c R_a + x R_c R_b, so two monomials
    that agree outside one two-generator window and share the combined
    generator c inside it contract to a single monomial.  Commuting
    factors may appear on either side of their window, since sigma(a, c)
    and sigma(b, c) vanish automatically.
    """
    index: dict[tuple, list[tuple[Word, int]]] = {}
    for word in words:
        for i in range(len(word) - 1):
            key = (word[:i], word[i + 2 :])
            index.setdefault(key, []).append((word, i))

    def key_order(kv):
        prefix, suffix = kv[0]
        return (_word_key(prefix), _word_key(suffix))

    for key, entries in sorted(index.items(), key=key_order):
        if len(entries) < 2:
            continue
        for m in range(len(entries)):
            for n in range(m + 1, len(entries)):
                w1, i = entries[m]
                w2, j = entries[n]
                if w1 is w2:
                    continue
                hit = _match_windows(
                    w1[i : i + 2], w2[j : j + 2], mono[w1], mono[w2]
                )
                if hit is not None:
                    a_gen, b_gen, coeff = hit
                    return ("contract", w1, w2, i, (a_gen, b_gen, coeff))
    return None


def _match_windows(win1: Word, win2: Word, k1: ComplexRational, k2: ComplexRational):
    """Try to read two windows as (c with a) and (c with b); on success
    return (a, b, coefficient) for the contracted monomial."""
    if set(win1) == set(win2):
        return None
    for c_gen in win1:
        if c_gen not in win2:
            continue
        a_gen = win1[1] if win1[0] == c_gen else win1[0]
        b_gen = win2[1] if win2[0] == c_gen else win2[0]
        if a_gen == b_gen:
            continue
        # the commuting-window arrangements all equal R_c R_a resp. R_c R_b
        if sigma(a_gen.f, c_gen.f) != 0 or sigma(b_gen.f, c_gen.f) != 0:
            continue
        sol = _contraction_solution(c_gen, a_gen, b_gen)
        if sol is None:
            continue
        x, y = sol
        if k1 * x != k2 * y:
            continue
        return (a_gen, b_gen, k1 / y)
    return None


def _contraction_solution(c_gen: Generator, a_gen: Generator, b_gen: Generator):
    """Solve cvec = x avec + y bvec with the parameter and symplectic side
    conditions of the additivity rule; None when the pattern does not match."""
    av, bv, cv = a_gen.vec, b_gen.vec, c_gen.vec
    if sigma(a_gen.f, b_gen.f) != 0:
        return None
    # pick two coordinates where (av, bv) is invertible
    n = len(av)
    for r in range(n):
        for s in range(r + 1, n):
            det = av[r] * bv[s] - av[s] * bv[r]
            if det == 0:
                continue
            x = (cv[r] * bv[s] - cv[s] * bv[r]) / det
            y = (av[r] * cv[s] - av[s] * cv[r]) / det
            if x == 0 or y == 0:
                return None
            if any(cv[t] != x * av[t] + y * bv[t] for t in range(n)):
                return None
            if c_gen.lam != a_gen.lam * x + b_gen.lam * y:
                return None
            return (ComplexRational.coerce(x), ComplexRational.coerce(y))
    return None  # directions parallel; the difference rule owns this case


def _apply_contraction(mono, w1: Word, w2: Word, i: int, data) -> None:
    a_gen, b_gen, coeff = data
    mono.pop(w1)
    mono.pop(w2)
    new_word = w1[:i] + (a_gen, b_gen) + w1[i + 2 :]
    _accumulate(mono, new_word, coeff)


def _accumulate(mono, word: Word, coeff: ComplexRational) -> None:
    acc = mono.get(word, CQ()) + coeff
    if acc.is_zero:
        mono.pop(word, None)
    else:
        mono[word] = acc


# ---------------------------------------------------------------------------
# spectral predicates


def spec_contains(lam, f: SympVector, rho: ComplexRational) -> bool:
    """Whether rho lies on the spectral circle of a resolvent symbol.

    For a nonzero direction the spectrum is {0} together with the circle
    conj(rho) - rho = 2i*lam*|rho|^2, i.e. the values (i*lam - r)^-1 with
    r real.
    """
    lam = frac(lam)
    if lam == 0:
        raise ValueError("spectral parameter must be nonzero")
    if f.is_zero:
        raise ValueError("spectral circle is defined for nonzero directions")
    rho = ComplexRational.coerce(rho)
    if rho.is_zero:
        return True
    return -rho.im == lam * rho.abs2()


@dataclass(frozen=True)
class SpectralPoint:
    """A point on the spectral circle of R(lam, f)."""

    lam: Fraction
    f: SympVector
    rho: ComplexRational

    def __post_init__(self):
        if not spec_contains(self.lam, self.f, self.rho):
            raise ValueError("rho is not a spectral value of the resolvent")

    @staticmethod
    def from_sharp_value(lam, f: SympVector, r) -> "SpectralPoint":
        """The circle point (i*lam - r)^-1 for a real field value r."""
        lam = frac(lam)
        rho = CQ(0, lam) - CQ(frac(r))
        return SpectralPoint(lam, f, rho.inverse())

    @property
    def sharp_value(self) -> Optional[Fraction]:
        """The real r with rho = (i*lam - r)^-1, or None for rho = 0."""
        if self.rho.is_zero:
            return None
        r = CQ(0, self.lam) - self.rho.inverse()
        assert r.im == 0
        return r.re


# ---------------------------------------------------------------------------
# kernel generating sets


def primitive_generators(
    regular: Subspace,
    phi: LinearFunctional,
    lam,
    mu,
) -> list[Term]:
    """Generating elements of the kernel attached to a label (regular
    subspace plus functional on its radical), over a finite probe set.

    Singular probes are the standard basis vectors outside the regular
    subspace together with their translates by the canonical basis of the
    regular subspace; radical directions contribute the centered
    resolvents R(mu, g) - (i*mu - phi(g))^-1 * 1.
    """
    lam = frac(lam)
    mu = frac(mu)
    space = SympSpace(regular.ambient)
    radical = regular.radical()
    if phi.domain != radical:
        phi = phi.restrict(radical)
    terms: list[Term] = []
    for e in space.basis():
        if regular.contains(e):
            continue
        probes = [e] + [e + b for b in regular.basis_vectors()]
        for v in probes:
            terms.append(Term.resolvent(lam, v))
    for g in radical.basis_vectors():
        chi = (CQ(0, mu) - CQ(phi.evaluate(g))).inverse()
        terms.append(Term.resolvent(mu, g) - Term.scalar(chi))
    return terms
