"""Stability subalgebra of the initial state.

Pairs (X, Y) of traceless Hermitian matrices with ``(X(x)I + I(x)Y) Psi = 0``
are found as the real nullspace of an 18 x 16 system over Gell-Mann
coefficients. A pair is stored as the vector ``(x_1..x_8, y_1..y_8)`` in R^16.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import ElwError, NotRootVector, NotUnitary, SymmetrizationIncomplete
from .gate import _params, gate_diagonal, initial_state
from .linalg import is_unitary, kron, matrix_rank, real_nullspace
from .su3 import DELTA, GELL_MANN, LAMBDA, coeffs_to_matrix, matrix_to_coeffs

log = logging.getLogger(__name__)

_I3 = np.eye(3)


@dataclass(frozen=True)
class GeneratorCombo:
    """``X(x)I + sign * I(x)X`` with ``X = sum x_i lambda_i``."""

    x: np.ndarray
    sign: int

    def matrix(self):
        X = coeffs_to_matrix(self.x)
        return kron(X, _I3) + self.sign * kron(_I3, X)

    def vector(self):
        return np.concatenate([self.x, self.sign * self.x])


@dataclass(frozen=True)
class StabilityBasis:
    vectors: np.ndarray  # (dim, 16), orthonormal rows
    state: np.ndarray = field(repr=False)

    @property
    def dim(self):
        return self.vectors.shape[0]

    def pairs(self):
        return [(v[:8], v[8:]) for v in self.vectors]

    @property
    def swap_split(self):
        s = symmetrize_basis(self)
        return (s.n_even, s.n_odd)


def _system(psi):
    cols = [kron(lam, _I3) @ psi for lam in GELL_MANN]
    cols += [kron(_I3, lam) @ psi for lam in GELL_MANN]
    a = np.array(cols).T
    return np.vstack([a.real, a.imag])


def stability_algebra(p, tol=1e-8, state=None):
    """Basis of the stability subalgebra of the tilde-frame initial state.

    ``state`` overrides the state (any symmetric two-player vector).
    """
    psi = initial_state(_params(p)) if state is None else np.asarray(state, dtype=complex)
    return StabilityBasis(real_nullspace(_system(psi), tol), psi)


def pair_residual(x, y, state):
    X, Y = coeffs_to_matrix(x), coeffs_to_matrix(y)
    return float(np.linalg.norm((kron(X, _I3) + kron(_I3, Y)) @ state))


def verify_generator(g, p):
    """``||G Psi||`` for a generator combination at gate parameters ``p``."""
    return float(np.linalg.norm(g.matrix() @ initial_state(_params(p))))


@dataclass(frozen=True)
class SymmetrizedBasis:
    generators: list
    n_even: int
    n_odd: int


def _extract(vectors, tol):
    if len(vectors) == 0:
        return np.zeros((0, 16))
    u, s, vh = np.linalg.svd(np.atleast_2d(vectors), full_matrices=False)
    r = int(np.sum(s > tol * max(1.0, s[0])))
    return vh[:r]


def symmetrize_basis(b, tol=1e-8):
    """Rewrite a stability basis into swap-even (Y = X) and swap-odd (Y = -X) elements."""
    v = b.vectors
    swapped = np.hstack([v[:, 8:], v[:, :8]])
    even = _extract((v + swapped) / 2, tol)
    odd = _extract((v - swapped) / 2, tol)
    if even.shape[0] + odd.shape[0] != b.dim:
        raise SymmetrizationIncomplete(
            "swap split %d + %d does not reproduce dimension %d"
            % (even.shape[0], odd.shape[0], b.dim)
        )
    gens = [GeneratorCombo(e[:8] * np.sqrt(2), +1) for e in even]
    gens += [GeneratorCombo(o[:8] * np.sqrt(2), -1) for o in odd]
    return SymmetrizedBasis(gens, even.shape[0], odd.shape[0])


def _as_vectors(items):
    rows = []
    for it in items:
        if isinstance(it, GeneratorCombo):
            rows.append(it.vector())
        elif hasattr(it, "coeffs") and hasattr(it, "sign"):
            rows.append(np.concatenate([it.coeffs, it.sign * it.coeffs]))
        elif isinstance(it, tuple) and len(it) == 2:
            rows.append(np.concatenate([np.asarray(it[0], float), np.asarray(it[1], float)]))
        else:
            rows.append(np.asarray(it, dtype=float))
    return np.array(rows).reshape(-1, 16)


def span_match(b, other, tol=1e-8):
    """True iff the R^16 span of ``b`` equals the span of ``other``.

    ``other`` may hold GeneratorCombo objects, table entries, (x, y) pairs or
    raw 16-vectors.
    """
    a = b.vectors if isinstance(b, StabilityBasis) else _as_vectors(b)
    c = _as_vectors(other)
    ra, rc = matrix_rank(a, tol), matrix_rank(c, tol)
    return ra == rc == matrix_rank(np.vstack([a, c]), tol)


@dataclass(frozen=True)
class OmegaProbe:
    A1: np.ndarray
    A2: np.ndarray
    a1: float
    a2: float
    omega: np.ndarray
    residual: float


def omega_matrix(a1, a2):
    return np.diag([np.exp(-1j * (a1 + a2)), np.exp(1j * a1), np.exp(1j * a2)])


def conjugate_probe(p, r):
    """Check ``J~^+ (E(x)I) J~ = E (x) Omega(a1, a2)`` for a root vector ``E``.

    ``a1``, ``a2`` are the weights of ``E`` under ``A1 = tau L + rho D`` and
    ``A2 = rho L + sigma D``.
    """
    p = _params(p)
    E = np.asarray(r.E)
    if (np.abs(LAMBDA @ E - E @ LAMBDA - r.weight_L * E).max() > 1e-12
            or np.abs(DELTA @ E - E @ DELTA - r.weight_D * E).max() > 1e-12
            or not np.any(E)):
        raise NotRootVector("E is not a joint eigenvector of ad(Lambda), ad(Delta)")
    A1 = p.tau * LAMBDA + p.rho * DELTA
    A2 = p.rho * LAMBDA + p.sigma * DELTA
    a1 = p.tau * r.weight_L + p.rho * r.weight_D
    a2 = p.rho * r.weight_L + p.sigma * r.weight_D
    d = gate_diagonal(p)
    conj = (d.conj()[:, None] * kron(E, _I3)) * d[None, :]
    om = omega_matrix(a1, a2)
    res = float(np.abs(conj - kron(E, om)).max())
    return OmegaProbe(A1, A2, a1, a2, om, res)


def maximal_counter_generators(Ftilde, tol=1e-10):
    """Eight stability pairs ``(X, Y)`` built from a unitary ``Ftilde``.

    ``X = lambda_i / 2`` and ``Y = -Ftilde conj(X) Ftilde^+``. Each pair is
    checked against the state ``vec(Ftilde)/sqrt3``; if the minus sign does
    not annihilate it, the plus sign is tried and logged.
    """
    Ft = np.asarray(Ftilde, dtype=complex)
    if not is_unitary(Ft, tol):
        raise NotUnitary("Ftilde is not unitary")
    psi = Ft.ravel() / np.sqrt(3.0)
    out = []
    for k, lam in enumerate(GELL_MANN, 1):
        X = lam / 2
        x = matrix_to_coeffs(X)
        for sign in (-1, +1):
            y = matrix_to_coeffs(sign * Ft @ X.conj() @ Ft.conj().T)
            if pair_residual(x, y, psi) <= tol:
                break
        else:
            raise ElwError("no sign annihilates the state for lambda_%d" % k)
        log.debug("lambda_%d/2: sign %+d annihilates the state", k, sign)
        out.append((x, y))
    return out
