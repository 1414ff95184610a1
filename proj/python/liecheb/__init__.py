"""Exact polynomial toolkit for Dynkin diagram spectra."""

from ._core import (
    a_factorization,
    a_poly,
    adjacency_matrix,
    associated_q,
    cartan_matrix,
    char_poly,
    cheb_t,
    cheb_u,
    coxeter_factorization,
    coxeter_polynomial,
    factor_t,
    factor_u,
    mahler_measure,
    p_poly,
    phi,
    psi,
    q_factorization,
    q_poly,
    root_system_data,
    roots,
    salem_check,
    sine_formula,
    spectrum,
    verify,
)

__all__ = [
    "a_factorization",
    "a_poly",
    "adjacency_matrix",
    "associated_q",
    "cartan_matrix",
    "char_poly",
    "cheb_t",
    "cheb_u",
    "coxeter_factorization",
    "coxeter_polynomial",
    "factor_t",
    "factor_u",
    "mahler_measure",
    "p_poly",
    "phi",
    "psi",
    "q_factorization",
    "q_poly",
    "root_system_data",
    "roots",
    "salem_check",
    "sine_formula",
    "spectrum",
    "verify",
]
