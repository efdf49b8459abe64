"""Exact orbifold quantum cohomology of weighted projective spaces P(w) and
the Landau-Ginzburg mirror of f = u0 + ... + un on prod u_i^w_i = 1.

Rationals cross the boundary as canonical "p/q" strings and are returned
here as fractions.Fraction.
"""

from fractions import Fraction

from . import _core
from ._core import ConsistencyError, ReconstructionError

__all__ = [
    "ConsistencyError",
    "ReconstructionError",
    "basis",
    "sigma",
    "k_min",
    "cup",
    "pairing",
    "gram_matrix",
    "a0_matrix_A",
    "a0_matrix_B",
    "b_product",
    "check_classical",
    "check_quantum",
    "selftest",
    "reconstruct",
    "run_cli",
]


def _q(s):
    return Fraction(s)


def _cls(c):
    gamma, d = c
    return (str(Fraction(gamma)), int(d))


def _matrix(rows):
    return [[_q(x) for x in row] for row in rows]


def basis(weights):
    """Ordered basis as (gamma, d, degree) triples."""
    return [(_q(g), d, _q(deg)) for g, d, deg in _core.basis(list(weights))]


def sigma(weights):
    return [_q(s) for s in _core.sigma(list(weights))]


def k_min(weights, gamma):
    return _core.k_min(list(weights), str(Fraction(gamma)))


def cup(weights, a, b):
    """eta_a cup eta_b as (coeff, (gamma, d)), or None when it vanishes."""
    t = _core.cup(list(weights), _cls(a), _cls(b))
    if t is None:
        return None
    coeff, (gamma, d) = t
    return _q(coeff), (_q(gamma), d)


def pairing(weights, a, b):
    return _q(_core.pairing(list(weights), _cls(a), _cls(b)))


def gram_matrix(weights):
    return _matrix(_core.gram_matrix(list(weights)))


def a0_matrix_A(weights):
    return _matrix(_core.a0_matrix_A(list(weights)))


def a0_matrix_B(weights):
    return _matrix(_core.a0_matrix_B(list(weights)))


def b_product(weights, i, j):
    coeff, target = _core.b_product(list(weights), i, j)
    return _q(coeff), target


def check_classical(weights):
    return _core.check_classical(list(weights))


def check_quantum(weights):
    return _core.check_quantum(list(weights))


def selftest(weights):
    return _core.selftest(list(weights))


def reconstruct(weights, max_length=7):
    """Non-zero potential coefficients as {alpha: A(alpha)}."""
    return {tuple(a): _q(v) for a, v in _core.reconstruct(list(weights), max_length)}


def run_cli(*args):
    """Runs the command-line front end in process; returns (code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
