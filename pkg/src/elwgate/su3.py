"""Gell-Mann basis of su(3) and the Cartan pair used by the gate."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian, NotTraceless
from .linalg import is_hermitian, is_traceless

SQRT3 = np.sqrt(3.0)


def _build_gell_mann():
    lam = np.zeros((8, 3, 3), dtype=complex)
    lam[0][0, 1] = lam[0][1, 0] = 1
    lam[1][0, 1], lam[1][1, 0] = -1j, 1j
    lam[2] = np.diag([1, -1, 0])
    lam[3][0, 2] = lam[3][2, 0] = 1
    lam[4][0, 2], lam[4][2, 0] = -1j, 1j
    lam[5][1, 2] = lam[5][2, 1] = 1
    lam[6][1, 2], lam[6][2, 1] = -1j, 1j
    lam[7] = np.diag([1, 1, -2]) / SQRT3
    lam.setflags(write=False)
    return lam


GELL_MANN = _build_gell_mann()

LAMBDA = np.diag([1.0, -1.0, 0.0]).astype(complex)
DELTA = np.diag([1.0, 0.0, -1.0]).astype(complex)
LAMBDA.setflags(write=False)
DELTA.setflags(write=False)


def gell_mann(i):
    """Standard Gell-Mann matrix lambda_i, ``1 <= i <= 8``."""
    if not 1 <= i <= 8:
        raise IndexError("Gell-Mann index must be in 1..8, got %r" % (i,))
    return GELL_MANN[i - 1].copy()


def coeffs_to_matrix(c):
    """``sum_i c_i lambda_i`` for a length-8 real coefficient vector."""
    c = np.asarray(c, dtype=float)
    return np.tensordot(c, GELL_MANN, axes=1)


def matrix_to_coeffs(h, tol=1e-10):
    """Inverse of :func:`coeffs_to_matrix`: ``c_i = Tr(lambda_i h) / 2``."""
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h, tol):
        raise NotHermitian("matrix is not Hermitian")
    if not is_traceless(h, tol):
        raise NotTraceless("matrix is not traceless")
    return np.einsum("kij,ji->k", GELL_MANN, h).real / 2


@dataclass(frozen=True)
class RootVector:
    """Matrix unit ``E_jk`` with its weights under ad(Lambda) and ad(Delta)."""

    j: int
    k: int
    E: np.ndarray
    weight_L: float
    weight_D: float

    @property
    def label(self):
        return "E%d%d" % (self.j, self.k)


def root_vectors():
    """The six off-diagonal matrix units, ordered E12, E13, E21, E23, E31, E32."""
    out = []
    for j in range(1, 4):
        for k in range(1, 4):
            if j == k:
                continue
            e = np.zeros((3, 3), dtype=complex)
            e[j - 1, k - 1] = 1.0
            wl = (LAMBDA[j - 1, j - 1] - LAMBDA[k - 1, k - 1]).real
            wd = (DELTA[j - 1, j - 1] - DELTA[k - 1, k - 1]).real
            out.append(RootVector(j, k, e, float(wl), float(wd)))
    return out
