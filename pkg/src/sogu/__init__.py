"""Second-order ground unification workbench.

Occurrence-counting polynomials, the polynomial-to-problem encoder, a bounded
equalizer search, a decider for unary problems with bounded congruence, and a
brute-force unifier oracle.
"""

from .counting import (
    CountingProfile,
    cnt_sym,
    condition_at,
    mul_sym,
    occurrence_identity,
    profile,
    unification_condition,
)
from .decider import (
    NotInFragment,
    NotUnifiable,
    Unifiable,
    Unknown,
    decide,
    decide_report,
    enumerate_candidates,
    forced_counts,
    fragment_report,
    stability_check,
)
from .encoder import encode_monomial, encode_poly, verify_encoding
from .equalizer import equalize, is_witness
from .oracle import brute_force, differential_check
from .poly import IntPoly, parse_poly, print_poly
from .syntax import parse_problem, parse_subst, parse_term, print_problem
from .terms import (
    App,
    Binding,
    Equation,
    FApp,
    Problem,
    Signature,
    Symbol,
    Var,
    apply,
    is_unifier,
    occ_sym,
    occ_term,
    positions,
    subterm_at,
    validate_problem,
)
