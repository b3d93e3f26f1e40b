"""Exact polynomial automorphisms built from the locally nilpotent derivation
Delta of k[x1, x2, x3] and its six-variable lift, with the tools to replay
the degree and class arguments around them."""

from cotame.coeffs import QQ, ParamField, ParamFraction, Rational
from cotame.derivations import (
    Derivation,
    Endomorphism,
    compose,
    derive,
    endo_equal,
    exp_apply,
    exp_endomorphism,
    nilpotency_index,
)
from cotame.kernel import BACKEND
from cotame.multipoly import BudgetExceeded, Polynomial, RingMismatch, ZeroPolynomial
from cotame.objects import (
    AffineMap,
    affine_type,
    base_polys,
    beta,
    delta,
    delta_prime,
    hat_lift,
    in_B,
    modified_lift,
    phi,
    phi_prime,
    pi_map,
)
from cotame.pclass import ClassIndex, CWitness, classify, compose_class_bound, in_class

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "AffineMap", "BudgetExceeded", "CWitness", "ClassIndex", "Derivation",
    "Endomorphism", "ParamField", "ParamFraction", "Polynomial", "QQ", "Rational",
    "RingMismatch", "ZeroPolynomial", "affine_type", "base_polys", "beta", "classify",
    "compose", "compose_class_bound", "delta", "delta_prime", "derive", "endo_equal",
    "exp_apply", "exp_endomorphism", "hat_lift", "in_B", "in_class", "modified_lift",
    "nilpotency_index", "phi", "phi_prime", "pi_map",
]
