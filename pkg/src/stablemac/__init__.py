"""Nonsymmetric Macdonald polynomials, their stable limits, and the
almost-symmetric functions they live in.  Everything is exact over Q(q, t).
"""

from .almostsym import AlmostSym, parse_almostsym
from .combinat import compositions, dominance_leq, partitions
from .daha import cherednik_Y, oracle_E, relation_check, weight_alpha, weight_alpha_tilde
from .hhl import Filling, convergence_witness, enumerate_fillings, gamma_factor, hhl_E, stable_E
from .qt import Q, T, QtScalar, parse_scalar, qt
from .stablelimit import (A_function, A_in_HLP, NonConvergenceError, ProportionalityError,
                          basis_certificate, gamma_mu, limit_Y, pair_weight, partial_minus,
                          sigma_tilde, stable_E_pair)
from .symfunc import SymFunc, hall_littlewood_P, jing_B, parse_symfunc, plethysm
from .xpoly import XPoly, demazure_T, demazure_T_inv

__version__ = "0.1.0"

__all__ = [
    "AlmostSym", "parse_almostsym", "compositions", "dominance_leq", "partitions",
    "cherednik_Y", "oracle_E", "relation_check", "weight_alpha", "weight_alpha_tilde",
    "Filling", "convergence_witness", "enumerate_fillings", "gamma_factor", "hhl_E", "stable_E",
    "Q", "T", "QtScalar", "parse_scalar", "qt",
    "A_function", "A_in_HLP", "NonConvergenceError", "ProportionalityError",
    "basis_certificate", "gamma_mu", "limit_Y", "pair_weight", "partial_minus",
    "sigma_tilde", "stable_E_pair",
    "SymFunc", "hall_littlewood_P", "jing_B", "parse_symfunc", "plethysm",
    "XPoly", "demazure_T", "demazure_T_inv",
]
