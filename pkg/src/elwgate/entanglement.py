"""Reduced density matrix of the initial state and its eigenvalue classification."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NotNormalized, NotSymmetric
from .gate import GateParams, _params, initial_state
from .linalg import eigh3, is_symmetric, partial_trace_B

PI = np.pi


class Kind(str, enum.Enum):
    Maximal = "Maximal"
    TwoEqual = "TwoEqual"
    Generic = "Generic"


@dataclass(frozen=True)
class CoefficientMatrix:
    F: np.ndarray

    @property
    def Ftilde(self):
        return np.sqrt(3.0) * self.F

    @property
    def state(self):
        return self.F.ravel()


def coefficient_matrix(state, tol=1e-12):
    """Reshape a two-player state into ``F`` with ``Psi = sum F_ij |i>(x)|j>``."""
    state = np.asarray(state, dtype=complex)
    if abs(np.linalg.norm(state) - 1.0) > 1e-10:
        raise NotNormalized("state norm is %r" % np.linalg.norm(state))
    F = state.reshape(3, 3)
    if not is_symmetric(F, tol):
        raise NotSymmetric("coefficient matrix is not symmetric")
    return CoefficientMatrix(F.copy())


def reduced_density(p):
    """``Tr_B |Psi><Psi|`` of the tilde-frame initial state (equals F F^+)."""
    psi = initial_state(_params(p))
    return partial_trace_B(np.outer(psi, psi.conj()))


class OffDiagTriple(NamedTuple):
    """Entries (1,2), (1,3), (2,3) of nine times the reduced density matrix."""

    a: complex
    b: complex
    c: complex


def offdiag_triple(p):
    p = _params(p)
    t, r, s = p.tau, p.rho, p.sigma
    e = lambda x: np.exp(1j * x)  # noqa: E731
    a = e(3 * r + s + 2 * t) + e(-(r + 2 * t)) + e(-(2 * r + s))
    b = e(3 * r + 2 * s + t) + e(-(2 * r + t)) + e(-(r + 2 * s))
    c = e(s - t) + e(-(r - t)) + e(r - s)
    return OffDiagTriple(complex(a), complex(b), complex(c))


def reduced_density_closed_form(p):
    """Reduced density matrix assembled from the closed-form off-diagonal triple."""
    a, b, c = offdiag_triple(p)
    m = np.array([[3, a, b], [np.conj(a), 3, c], [np.conj(b), np.conj(c), 3]], dtype=complex)
    return m / 9


@dataclass(frozen=True)
class EntanglementClass:
    kind: Kind
    eigenvalues: np.ndarray
    gaps: np.ndarray  # relative gaps between consecutive sorted eigenvalues
    singular: bool

    def as_dict(self):
        return {
            "class": self.kind.value,
            "eigenvalues": [float(x) for x in self.eigenvalues],
            "gaps": [float(x) for x in self.gaps],
            "singular": self.singular,
        }


def classify(p, rel_tol=1e-8):
    """Classify by eigenvalue multiplicity of the reduced density matrix.

    Maximal when all three eigenvalues sit at 1/3, TwoEqual when exactly one
    consecutive pair coincides, Generic otherwise. ``singular`` flags a rank
    deficient coefficient matrix (e.g. the product state at p = 0).
    """
    ev = eigh3(reduced_density(p)).values
    scale = max(float(ev[-1]), 1e-300)
    gaps = np.diff(ev) / scale
    singular = bool(ev[0] <= 1e-10)
    if np.all(np.abs(ev - 1 / 3) <= rel_tol / 3):
        kind = Kind.Maximal
    elif int(np.sum(gaps <= rel_tol)) == 1:
        kind = Kind.TwoEqual
    else:
        kind = Kind.Generic
    return EntanglementClass(kind, ev, gaps, singular)


_SEVEN = [6, 8, 10, 12, 14, 16, 18]  # multiples of pi/9: 2pi/3 ... 2pi
_NINE = [0, 2, 4, 6, 8, 10, 12, 14, 16]  # 0 ... 16pi/9
_TWO_THIRDS = 2 * PI / 3


def maximal_families():
    """The six one-parameter families as ``(name, sigma list, sigma -> (tau, rho, sigma))``."""
    ang = lambda ks: [k * PI / 9 for k in ks]  # noqa: E731
    w = _TWO_THIRDS
    return [
        ("tau=rho=sigma-2pi/3", ang(_SEVEN), lambda s: (s - w, s - w, s)),
        ("tau=rho=sigma+2pi/3", ang(_NINE), lambda s: (s + w, s + w, s)),
        ("tau=sigma-2pi/3, rho=sigma", ang(_SEVEN), lambda s: (s - w, s, s)),
        ("tau=sigma+2pi/3, rho=sigma", ang(_NINE), lambda s: (s + w, s, s)),
        ("rho=sigma-2pi/3, tau=sigma", ang(_SEVEN), lambda s: (s, s - w, s)),
        ("rho=sigma+2pi/3, tau=sigma", ang(_NINE), lambda s: (s, s + w, s)),
    ]


def maximal_solutions():
    """All parameter triples of the six maximal families, de-duplicated mod 2 pi."""
    out = []
    for _, sigmas, make in maximal_families():
        for s in sigmas:
            p = GateParams(*make(s))
            if all(p.distance(q) >= 1e-9 for q in out):
                out.append(p)
    return out


def two_equal_special_solutions():
    """Two-equal points with a single nonzero parameter."""
    return [
        GateParams(0, PI / 3, 0), GateParams(0, PI, 0), GateParams(0, 5 * PI / 3, 0),
        GateParams(PI / 2, 0, 0), GateParams(3 * PI / 2, 0, 0),
        GateParams(0, 0, PI / 2), GateParams(0, 0, 3 * PI / 2),
    ]


class DoubleRoot(NamedTuple):
    holds: bool
    lambda0: float
    third_root: float


def double_root_condition(t, tol=1e-8):
    """Test whether ``x^3 - (|a|^2+|b|^2+|c|^2) x - 2 Re(a conj(b) c)`` has a double root.

    This happens exactly when ``|a| = |b| = |c|`` and ``arg a - arg b + arg c``
    is 0 or pi mod 2 pi. The double root is then ``-sign(Re(a conj(b) c)) |a|``
    and the third root is minus twice that.
    """
    a, b, c = (complex(z) for z in t)
    mods = np.abs([a, b, c])
    m = float(mods.max())
    if m <= tol:
        return DoubleRoot(True, 0.0, 0.0)
    if mods.max() - mods.min() > tol * max(1.0, m):
        return DoubleRoot(False, float("nan"), float("nan"))
    prod = a * np.conj(b) * c
    # imaginary part vanishes iff the phase combination is 0 or pi
    if abs(prod.imag) > tol * max(1.0, abs(prod)):
        return DoubleRoot(False, float("nan"), float("nan"))
    modulus = float(np.mean(mods))
    lam0 = -modulus if prod.real > 0 else modulus
    return DoubleRoot(True, lam0, -2 * lam0)
