"""Small dense kernels for the 3 x 3 (one player) and 9 x 9 (two players) spaces.

Tensor layout: index ``3*i + k`` of a two-player vector is ``|i> (x) |k>``, with
Alice in the first slot.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DegeneratePolynomial, NotHermitian

DIM = 3


def kron(a, b):
    """Kronecker product ``a (x) b``."""
    return np.kron(np.asarray(a), np.asarray(b))


def ket(i, dim=DIM):
    """Computational basis vector ``|i>``, 1-based."""
    v = np.zeros(dim, dtype=complex)
    v[i - 1] = 1.0
    return v


def ket2(i, j):
    """Two-player basis state ``|i, j>``, 1-based."""
    return np.kron(ket(i), ket(j))


def partial_trace_B(rho):
    """Trace out the second (Bob) factor of a 9 x 9 operator."""
    r = np.asarray(rho).reshape(DIM, DIM, DIM, DIM)
    return np.einsum("ikjk->ij", r)


def swap_operator():
    """Permutation matrix exchanging the two tensor factors."""
    s = np.zeros((DIM * DIM, DIM * DIM))
    for i in range(DIM):
        for k in range(DIM):
            s[DIM * k + i, DIM * i + k] = 1.0
    return s


def is_hermitian(m, tol=1e-10):
    m = np.asarray(m)
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tol)


def is_unitary(m, tol=1e-10):
    m = np.asarray(m)
    return bool(np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0]))) <= tol)


def is_symmetric(m, tol=1e-10):
    m = np.asarray(m)
    return bool(np.max(np.abs(m - m.T), initial=0.0) <= tol)


def is_traceless(m, tol=1e-10):
    return bool(abs(np.trace(np.asarray(m))) <= tol)


class EigResult(NamedTuple):
    values: np.ndarray
    vectors: np.ndarray  # columns


def eigh3(h, tol=1e-10):
    """Eigendecomposition of a Hermitian matrix with ascending eigenvalues.

    Raises
    ------
    NotHermitian
        If ``||h - h^+||`` exceeds ``tol`` entrywise.
    """
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h, tol):
        raise NotHermitian("matrix is not Hermitian within %g" % tol)
    # LAPACK returns an orthonormal set, degenerate blocks included
    w, v = np.linalg.eigh((h + h.conj().T) / 2)
    return EigResult(w, v)


def real_nullspace(m, tol=1e-8):
    """Orthonormal basis (rows) of the numerical nullspace of a real matrix.

    A right singular vector is kept when its singular value is at most
    ``tol * max(1, s_max)``, with an absolute floor of 1e-12.
    """
    m = np.atleast_2d(np.asarray(m, dtype=float))
    n = m.shape[1]
    _, s, vh = np.linalg.svd(m, full_matrices=True)
    cutoff = max(tol * max(1.0, s[0] if s.size else 0.0), 1e-12)
    rank = int(np.sum(s > cutoff))
    return vh[rank:n].copy()


def matrix_rank(m, tol=1e-8):
    m = np.atleast_2d(np.asarray(m))
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    return int(np.sum(s > max(tol * max(1.0, s[0]), 1e-12)))


def _cluster(roots, poly, rel):
    """Group roots whose spread is below ``rel`` and whose mean is a multiple root."""
    derivs = [poly]
    for _ in range(2):
        derivs.append(np.polyder(derivs[-1]))
    scale = 1.0 + np.max(np.abs(poly))
    remaining = sorted(roots, key=lambda z: (z.real, z.imag))
    out = []
    while remaining:
        z0 = remaining.pop(0)
        group = [z0]
        for z in list(remaining):
            if abs(z - z0) <= 1e-8 * (1.0 + abs(z0)):
                group.append(z)
                remaining.remove(z)
        # perturbed multiple roots split by eps**(1/m); accept a wider merge
        # only when the derivatives confirm the multiplicity at the mean
        if len(group) < 3:
            near = [z for z in remaining if abs(z - z0) <= rel * (1.0 + abs(z0))]
            for extra in range(len(near), 0, -1):
                cand = group + near[:extra]
                if len(cand) > 3:
                    continue
                mean = np.mean(cand)
                m = len(cand)
                if all(abs(np.polyval(derivs[d], mean)) <= 1e-6 * scale
                       for d in range(m)):
                    group = cand
                    for z in near[:extra]:
                        remaining.remove(z)
                    break
        out.append((np.mean(group), len(group)))
    return out


def cubic_real_roots(c3, c2, c1, c0):
    """Real roots of ``c3 x^3 + c2 x^2 + c1 x + c0`` with multiplicities.

    Roots come from the eigenvalues of the companion matrix. Complex roots
    are dropped.

    Returns
    -------
    list of (float, int)
        ``(root, multiplicity)`` sorted by root.
    """
    if c3 == 0:
        raise DegeneratePolynomial("leading coefficient is zero")
    poly = np.array([c3, c2, c1, c0], dtype=float) / c3
    comp = np.zeros((3, 3))
    comp[1, 0] = comp[2, 1] = 1.0
    comp[:, 2] = -poly[:0:-1]
    roots = np.linalg.eigvals(comp)
    out = []
    for z, mult in _cluster(list(roots), poly, rel=1e-4):
        if abs(z.imag) <= 1e-8 * (1.0 + abs(z)):
            out.append((float(z.real), mult))
    return sorted(out)


def random_unitary(rng, dim=DIM, special=True):
    """Haar-random unitary from a numpy Generator (QR with phase fix)."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    q = q * (d / np.abs(d))
    if special:
        q = q / np.linalg.det(q) ** (1.0 / dim)
    return q
