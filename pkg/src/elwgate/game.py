"""Game evaluation: final states, outcome probabilities, payoffs, counter-moves,
and whether a classical mixed strategy is reachable by a Cartan strategy."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotMaximallyEntangled, NotUnitary, OutOfDomain
from .gate import _params, gate_full
from .linalg import cubic_real_roots, is_unitary, kron

EPS = np.exp(2j * np.pi / 3)
SQRT3 = np.sqrt(3.0)


@dataclass(frozen=True)
class PayoffMatrix:
    pA: np.ndarray
    pB: np.ndarray

    def __post_init__(self):
        for name in ("pA", "pB"):
            m = np.asarray(getattr(self, name), dtype=float)
            if m.shape != (3, 3) or not np.all(np.isfinite(m)):
                raise ValueError("%s must be a finite 3x3 matrix" % name)
            object.__setattr__(self, name, m)

    @property
    def symmetric(self):
        return bool(np.allclose(self.pB, self.pA.T))


def _check_unitary(u, what):
    u = np.asarray(u, dtype=complex)
    if u.shape != (3, 3) or not is_unitary(u, 1e-10):
        raise NotUnitary("%s is not a 3x3 unitary" % what)
    return u


def final_state(p, UA, UB, V=None):
    """``J^+ (UA(x)UB) J |1,1>`` in the computational frame."""
    UA = _check_unitary(UA, "UA")
    UB = _check_unitary(UB, "UB")
    J = gate_full(_params(p), V)
    return J.conj().T @ (kron(UA, UB) @ J[:, 0])


def outcome_probabilities(state):
    """3 x 3 table ``P[s, s'] = |<s, s'|state>|^2`` (0-based array indices)."""
    return (np.abs(np.asarray(state)) ** 2).reshape(3, 3)


def expected_payoffs(P, M):
    return float(np.sum(M.pA * P)), float(np.sum(M.pB * P))


def counterstrategy(p, V_actual, UA_target, UB_target, V=None, tol=1e-8):
    """Bob's move against Alice's ``V_actual`` reproducing the target joint outcome.

    Only defined at maximal entanglement: ``W = UB Ft UA^T conj(V_actual) Ft^+``
    with ``Ft = sqrt3 F`` of the computational-frame initial state.
    """
    Va = _check_unitary(V_actual, "V_actual")
    UA = _check_unitary(UA_target, "UA_target")
    UB = _check_unitary(UB_target, "UB_target")
    psi = gate_full(_params(p), V)[:, 0]
    Ft = SQRT3 * psi.reshape(3, 3)
    if not is_unitary(Ft, tol):
        raise NotMaximallyEntangled("sqrt3 F is not unitary; the initial state is not maximally entangled")
    # polar factor: exact unitary nearest to Ft, so W stays unitary near the family
    u, _, vh = np.linalg.svd(Ft)
    Ft = u @ vh
    return UB @ Ft @ UA.T @ Va.conj() @ Ft.conj().T


def _us(alpha, beta):
    return np.exp(-1j * (alpha + beta)), np.exp(1j * (beta - 2 * alpha))


def strategy_probabilities(alpha, beta):
    """Outcome distribution of the Cartan strategy ``exp(i(alpha L + beta D))``."""
    u1, u2 = _us(alpha, beta)
    p1 = abs(1 + u1 + u2) ** 2 / 9
    p2 = abs(1 + EPS * u1 + EPS**2 * u2) ** 2 / 9
    return p1, p2, 1.0 - p1 - p2


@dataclass(frozen=True)
class MixedTarget:
    p1: float
    p2: float

    def __post_init__(self):
        p1, p2 = float(self.p1), float(self.p2)
        if not (p1 >= -1e-12 and p2 >= -1e-12 and p1 + p2 <= 1 + 1e-12):
            raise OutOfDomain("need p1, p2 >= 0 and p1 + p2 <= 1, got (%r, %r)" % (p1, p2))
        object.__setattr__(self, "p1", p1)
        object.__setattr__(self, "p2", p2)

    @property
    def lam(self):
        return (9 * self.p1 - 1) / 4

    @property
    def mu(self):
        return (9 * self.p2 - 1) / 4


@dataclass(frozen=True)
class Witness:
    gamma: float
    cos_delta: float | None  # None when cos(gamma) vanishes


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    alpha: float | None
    beta: float | None
    witnesses: list = field(default_factory=list)

    @property
    def best_cos_delta(self):
        """The witness value closest to the feasible interval [-1, 1]."""
        vals = [w.cos_delta for w in self.witnesses if w.cos_delta is not None]
        return min(vals, key=abs) if vals else None


def tan_gamma_cubic(lam, mu):
    """Coefficients (t^3, t^2, t, 1) of the cubic in ``t = tan(gamma)``."""
    k = 3 - 2 * lam - 4 * mu
    return (-2 * SQRT3 * lam, k, 2 * SQRT3 * (2 - lam), k)


def _gamma_candidates(lam, mu):
    c3, c2, c1, c0 = tan_gamma_cubic(lam, mu)
    scale = max(abs(c3), abs(c2), abs(c1), abs(c0))
    if abs(c3) > 1e-12 * scale:
        roots = [r for r, _ in cubic_real_roots(c3, c2, c1, c0)]
    else:
        # lambda = 0: one root has run off to tan(gamma) = infinity
        roots = [float(z.real) for z in np.roots([c2, c1, c0]) if abs(z.imag) <= 1e-9]
        roots.append(np.inf)
    out = []
    for t in roots:
        g = np.pi / 2 if np.isinf(t) else float(np.arctan(t))
        if g > np.pi / 2:
            g = np.pi - g
        out.append(g)
    return out


def _reconstruct(gamma, cos_delta, target):
    cd = float(np.clip(cos_delta, -1.0, 1.0))
    best = None
    for delta in (np.arccos(cd), -np.arccos(cd)):
        theta1, theta2 = delta + gamma, delta - gamma
        alpha = -(theta1 + theta2) / 3
        beta = -theta1 - alpha
        p1, p2, _ = strategy_probabilities(alpha, beta)
        err = max(abs(p1 - target.p1), abs(p2 - target.p2))
        if best is None or err < best[0]:
            best = (err, float(np.mod(alpha, 2 * np.pi)), float(np.mod(beta, 2 * np.pi)))
    return best


def mixed_feasibility(t, tol=1e-9):
    """Decide whether (p1, p2) is reachable by ``exp(i(alpha L + beta D))``.

    Every real root ``tan(gamma)`` of the cubic gives
    ``cos(delta) = (lam - cos^2 gamma) / cos gamma``; the target is feasible
    when some root yields ``|cos(delta)| <= 1``. A successful root is turned
    back into (alpha, beta) and checked by recomputing the probabilities.
    """
    if not isinstance(t, MixedTarget):
        t = MixedTarget(*t)
    lam, mu = t.lam, t.mu
    witnesses = []
    found = None
    for g in _gamma_candidates(lam, mu):
        c = np.cos(g)
        if abs(c) < 1e-12:
            # cos(gamma) = 0 leaves only the second equation for cos(delta)
            k = np.cos(g + 2 * np.pi / 3)
            cd = (mu - k * k) / k if abs(lam) <= 1e-12 else None
        else:
            cd = float((lam - c * c) / c)
        witnesses.append(Witness(float(g), cd))
        if cd is None or abs(cd) > 1 + tol:
            continue
        err, alpha, beta = _reconstruct(g, cd, t)
        if err <= 1e-8 and (found is None or err < found[0]):
            found = (err, alpha, beta)
    if found is None:
        return FeasibilityResult(False, None, None, witnesses)
    return FeasibilityResult(True, found[1], found[2], witnesses)
