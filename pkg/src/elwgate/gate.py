"""The entangling gate, diagonal in the common eigenbasis of the classical strategies.

Only the symmetrised Cartan-Cartan terms are kept in the exponent; single
sided terms such as ``I (x) Lambda + Lambda (x) I`` are absorbed into the
players' strategies and are not parameters here.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedding import eigenbasis
from .linalg import kron
from .su3 import DELTA, LAMBDA

TWO_PI = 2 * np.pi

_L = np.diag(LAMBDA).real
_D = np.diag(DELTA).real


def circular_distance(a, b):
    d = np.mod(np.asarray(a) - np.asarray(b), TWO_PI)
    return np.minimum(d, TWO_PI - d)


@dataclass(frozen=True)
class GateParams:
    """Gate angles (tau, rho, sigma) in radians, stored modulo 2 pi."""

    tau: float = 0.0
    rho: float = 0.0
    sigma: float = 0.0

    def __post_init__(self):
        for name in ("tau", "rho", "sigma"):
            v = float(getattr(self, name))
            if not np.isfinite(v):
                raise ValueError("%s must be finite" % name)
            v = float(np.mod(v, TWO_PI))
            if v >= TWO_PI:
                v = 0.0
            object.__setattr__(self, name, v)

    def as_tuple(self):
        return (self.tau, self.rho, self.sigma)

    def __add__(self, other):
        return GateParams(self.tau + other.tau, self.rho + other.rho, self.sigma + other.sigma)

    def distance(self, other):
        """Largest circular distance between corresponding angles."""
        return float(np.max(circular_distance(self.as_tuple(), other.as_tuple())))


def _params(p):
    return p if isinstance(p, GateParams) else GateParams(*p)


def phase_exponents(p):
    """3 x 3 table theta with ``J~|j,k> = exp(i theta_jk)|j,k>``."""
    p = _params(p)
    ll = np.outer(_L, _L)
    ld = np.outer(_L, _D)
    dd = np.outer(_D, _D)
    return p.tau * ll + p.rho * (ld + ld.T) + p.sigma * dd


def gate_diagonal(p):
    return np.exp(1j * phase_exponents(p).ravel())


def gate_tilde(p):
    """Diagonal 9 x 9 gate in the eigenbasis frame."""
    return np.diag(gate_diagonal(p))


def gate_exponent(p):
    """Hermitian 9 x 9 exponent ``tau L(x)L + rho (L(x)D + D(x)L) + sigma D(x)D``."""
    p = _params(p)
    return (p.tau * kron(LAMBDA, LAMBDA)
            + p.rho * (kron(LAMBDA, DELTA) + kron(DELTA, LAMBDA))
            + p.sigma * kron(DELTA, DELTA))


def gate_full(p, V=None):
    """Gate in the computational frame, ``(V(x)V) J~ (V(x)V)^+``."""
    if V is None:
        V = eigenbasis()
    w = kron(V, V)
    return (w * gate_diagonal(p)) @ w.conj().T


def tilde_one(V=None):
    """``|1~> = V^+|1>``; (1, 1, 1)/sqrt3 for every valid embedding."""
    if V is None:
        V = eigenbasis()
    return V.conj().T[:, 0]


def initial_state(p, frame="tilde", V=None):
    """Initial game state in the ``"tilde"`` (default) or ``"original"`` frame."""
    if frame == "tilde":
        one = tilde_one(V)
        return gate_diagonal(p) * np.kron(one, one)
    if frame == "original":
        e11 = np.zeros(9, dtype=complex)
        e11[0] = 1.0
        return gate_full(p, V) @ e11
    raise ValueError("frame must be 'tilde' or 'original', got %r" % (frame,))
