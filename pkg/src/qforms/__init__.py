"""Exact q-series arithmetic, theta and eta products, Lambert series, and
representation counts for binary and quaternary quadratic forms."""

from .series import LaurentSeries, SeriesError, default_order, equal_upto
from .qfunctions import (EtaQuotientSpec, Monomial, eta, eta_quotient, euler_E, phi, psi,
                         q_, theta_f)
from .lambert import LambertSpec, expand as expand_lambert
from .arith import classify, factorize, kronecker
from .repcount import BinaryForm, bqf_theta, diag4_theta, tri_theta
from .closedform import evaluate
from .registry import catalog, verify, verify_all
from .expr import eval_expr, parse_expr

__all__ = [
    "LaurentSeries", "SeriesError", "default_order", "equal_upto",
    "EtaQuotientSpec", "Monomial", "eta", "eta_quotient", "euler_E", "phi", "psi", "q_", "theta_f",
    "LambertSpec", "expand_lambert", "classify", "factorize", "kronecker",
    "BinaryForm", "bqf_theta", "diag4_theta", "tri_theta", "evaluate",
    "catalog", "verify", "verify_all", "eval_expr", "parse_expr",
]
