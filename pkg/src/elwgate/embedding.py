"""Commuting unitaries implementing the classical strategies, and their eigenbasis."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidEpsilon

SQRT3 = np.sqrt(3.0)


class Epsilon(enum.Enum):
    """Nontrivial cube root of unity."""

    plus = "plus"
    minus = "minus"

    @property
    def value_complex(self):
        return np.exp(2j * np.pi / 3) if self is Epsilon.plus else np.exp(-2j * np.pi / 3)

    @classmethod
    def from_complex(cls, z, tol=1e-12):
        z = complex(z)
        for e in cls:
            if abs(z - e.value_complex) <= tol:
                return e
        raise InvalidEpsilon("epsilon must be a cube root of unity other than 1, got %r" % (z,))


@dataclass(frozen=True)
class EmbeddingConfig:
    phi2: float = 0.0
    phi3: float = 0.0
    epsilon: Epsilon = Epsilon.plus

    def __post_init__(self):
        eps = self.epsilon
        if isinstance(eps, str):
            try:
                eps = Epsilon(eps)
            except ValueError:
                raise InvalidEpsilon("epsilon must be 'plus' or 'minus', got %r" % (eps,)) from None
        elif not isinstance(eps, Epsilon):
            eps = Epsilon.from_complex(eps)
        object.__setattr__(self, "epsilon", eps)

    @property
    def eps(self):
        return self.epsilon.value_complex


@dataclass(frozen=True)
class ClassicalTriple:
    U1: np.ndarray
    U2: np.ndarray
    U3: np.ndarray

    def __iter__(self):
        return iter((self.U1, self.U2, self.U3))

    def __getitem__(self, k):
        """1-based access: ``triple[2]`` is U2."""
        return (self.U1, self.U2, self.U3)[k - 1]


def classical_unitaries(cfg=None):
    """U1 = I and the commuting pair U2, U3 with ``U_k|1> = e^{i phi_k}|k>``."""
    cfg = cfg or EmbeddingConfig()
    e = cfg.eps
    ec = np.conj(e)
    p2, p3 = np.exp(1j * cfg.phi2), np.exp(1j * cfg.phi3)
    u2 = np.zeros((3, 3), dtype=complex)
    u2[0, 2] = e / p3
    u2[1, 0] = p2
    u2[2, 1] = ec * p3 / p2
    u3 = np.zeros((3, 3), dtype=complex)
    u3[0, 1] = e / p2
    u3[1, 2] = ec * p2 / p3
    u3[2, 0] = p3
    return ClassicalTriple(np.eye(3, dtype=complex), u2, u3)


def eigenbasis(cfg=None):
    """Unitary V whose columns are the common eigenvectors of U1, U2, U3."""
    cfg = cfg or EmbeddingConfig()
    e = cfg.eps
    ec = np.conj(e)
    p2, p3 = np.exp(1j * cfg.phi2), np.exp(1j * cfg.phi3)
    v = np.array(
        [
            [1, 1, 1],
            [p2, ec * p2, e * p2],
            [ec * p3, p3, e * p3],
        ],
        dtype=complex,
    )
    return v / SQRT3


def eigenvalue_table(cfg=None):
    """Row k: eigenvalues of (U1, U2, U3) on the k-th column of V."""
    cfg = cfg or EmbeddingConfig()
    v = eigenbasis(cfg)
    triple = classical_unitaries(cfg)
    return np.array([np.diag(v.conj().T @ u @ v) for u in triple]).T
