"""Split-octonion arithmetic with a complete polynomial equation solver.

The algebra is represented by Zorn vector matrices over a pluggable
coefficient field (complex, rational, F_p, F_{p^k}).  Octonions are
classified into automorphism-group orbits by their eigenvalue pair, and
scalar-coefficient equations f(x) = c are solved completely: finitely
many explicit points plus orbit labels for the infinite families.  An
independent brute-force oracle cross-checks everything at small scale.
"""

from .fields import (BackendMismatch, ComplexField, DEFAULT_EPSILON,
                     ExtensionField, Field, FieldSpec, FieldTooLarge,
                     PrimeField, QuadraticLift, RationalField,
                     RootFindingError, SplitOctError, UnsupportedBackend,
                     arith, field_from_string, make_field, quadratic_lift,
                     roots_with_multiplicity, sqrt_char2)
from .octonion import Basis, Octonion, basis, one, parse_octonion, zero
from .g2 import (Automorphism, Eigenpair, OrbitLabel, apply_word, canonical_rep,
                 classify, delta1, delta2, eigenvalues, hbar, identity,
                 o2_label, o3_label, orbit_member, random_automorphism,
                 random_word, sample_orbit, scalar_label, sl3, transporter)
from .polyeq import (SolutionSet, UnivariatePolynomial, count_solutions,
                     lemma_eval, nth_root, solve)
from .oracle import (CompareVerdict, EnumerationReport, FuzzReport, compare,
                     enumerate_solutions, fuzz_identities, naive_mul)

__version__ = "0.1.0"

__all__ = [
    "BackendMismatch", "ComplexField", "DEFAULT_EPSILON", "ExtensionField",
    "Field", "FieldSpec", "FieldTooLarge", "PrimeField", "QuadraticLift",
    "RationalField", "RootFindingError", "SplitOctError",
    "UnsupportedBackend", "arith", "field_from_string", "make_field",
    "quadratic_lift", "roots_with_multiplicity", "sqrt_char2",
    "Basis", "Octonion", "basis", "one", "parse_octonion", "zero",
    "Automorphism", "Eigenpair", "OrbitLabel", "apply_word", "canonical_rep",
    "classify", "delta1", "delta2", "eigenvalues", "hbar", "identity",
    "o2_label", "o3_label", "orbit_member", "random_automorphism",
    "random_word", "sample_orbit", "scalar_label", "sl3", "transporter",
    "SolutionSet", "UnivariatePolynomial", "count_solutions", "lemma_eval",
    "nth_root", "solve",
    "CompareVerdict", "EnumerationReport", "FuzzReport", "compare",
    "enumerate_solutions", "fuzz_identities", "naive_mul",
    "__version__",
]
