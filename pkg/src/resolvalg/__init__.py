"""resolvalg: resolvent-algebra toolkit over finite symplectic spaces.

Core layers:

- :mod:`resolvalg.symplectic` exact rational symplectic linear algebra
- :mod:`resolvalg.algebra` noncommutative resolvent polynomials and rewriting
- :mod:`resolvalg.representations` truncated matrix models and characters
- :mod:`resolvalg.ideals` kernel membership, chains, principal and maximal ideals
- :mod:`resolvalg.checks` seeded report suites
- :mod:`resolvalg.service` FastAPI wrapper; :mod:`resolvalg.cli` thin client
"""

__version__ = "0.1.0"

from .exact import CQ, ComplexRational, cq, frac
from .symplectic import (
    LinearFunctional,
    Subspace,
    SympSpace,
    SympVector,
    decompose,
    sigma,
    split,
    standard_flag,
    symplectic_completion,
)
from .algebra import (
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
from .dsl import ParseError, format_term, parse, parse_vector, term_to_json
from .config import RunConfig, load_config
from .representations import (
    CharacterRep,
    IrrepLabel,
    LabeledRep,
    RepFamily,
    build_representation,
    classify_vector,
    extract_label,
    oscillator_matrices,
    regular_representation,
    sharp_value_rep,
)
from .ideals import (
    PrimLabel,
    SymplecticMap,
    Verdict,
    build_chain,
    commutator_ideal_checks,
    intersection_element,
    kernel_membership,
    label_leq,
    max_chain_length,
    maximal_ideal_membership,
    principal_element,
    principal_identity_check,
    symplectic_isomorphism,
)

__all__ = [name for name in dir() if not name.startswith("_")]
