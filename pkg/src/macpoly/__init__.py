"""Exact constructors and verifiers for Macdonald, Jack and affine Jacobi
polynomials of type A, plus a floating-point elliptic module certifying the
structure of the associated classical r-matrix connection."""

__version__ = "0.1.0"
