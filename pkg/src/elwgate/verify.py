"""Regression checks behind ``elwgate verify-paper``."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import embedding, entanglement, game, gate, stability, tables
from .linalg import random_unitary
from .su3 import root_vectors


@dataclass
class Check:
    name: str
    passed: int
    total: int
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self):
        return self.passed == self.total and not self.failures

    def as_dict(self):
        return {"name": self.name, "passed": int(self.passed), "total": int(self.total),
                "ok": self.ok, "failures": self.failures, "seconds": round(self.seconds, 4)}


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        chk = fn(*args, **kwargs)
        chk.seconds = time.perf_counter() - t0
        return chk
    wrapper.__name__ = fn.__name__
    return wrapper


@_timed
def check_maximal_triples():
    sols = entanglement.maximal_solutions()
    bad = [str(p.as_tuple()) for p in sols
           if np.abs(entanglement.reduced_density(p) - np.eye(3) / 3).max() > 1e-10]
    return Check("maximal triples", len(sols) - len(bad), len(sols), bad)


@_timed
def check_generators(path=None):
    entries = tables.load_generator_table(path)
    bad = []
    for e in entries:
        r = stability.verify_generator(stability.GeneratorCombo(e.coeffs, e.sign), e.params)
        if r > 1e-10:
            bad.append("%s residual %.3g" % (e.name, r))
    return Check("generators", len(entries) - len(bad), len(entries), bad)


@_timed
def check_span_match(path=None):
    groups = tables.group_by_case(tables.load_generator_table(path))
    bad = [case for case, es in groups.items()
           if not stability.span_match(stability.stability_algebra(es[0].params), es)]
    return Check("generator tables span", len(groups) - len(bad), len(groups), bad)


@_timed
def check_stability_dims():
    pi = np.pi
    expected = [(p, 8) for p in entanglement.maximal_solutions()]
    expected += [(p, 4) for p in entanglement.two_equal_special_solutions()]
    expected += [(gate.GateParams(*t), 2) for t in [(0, pi / 2, 0), (0, 0, pi), (pi, 0, 0)]]
    bad = []
    for p, d in expected:
        got = stability.stability_algebra(p).dim
        if got != d:
            bad.append("%s dim %d != %d" % (p.as_tuple(), got, d))
    return Check("stability dimensions", len(expected) - len(bad), len(expected), bad)


@_timed
def check_mixed_witness():
    r = game.mixed_feasibility(game.MixedTarget(1 / 18, 5 / 9))
    ok = (not r.feasible) and r.best_cos_delta is not None and abs(r.best_cos_delta + 1.12041) <= 1e-4
    return Check("mixed-strategy witness", int(ok), 1,
                 [] if ok else ["feasible=%s cos_delta=%r" % (r.feasible, r.best_cos_delta)])


@_timed
def check_classical_embedding(rng, n=100):
    bad = 0
    for _ in range(n):
        tau, rho, sigma, phi2, phi3 = rng.uniform(0, 2 * np.pi, 5)
        cfg = embedding.EmbeddingConfig(phi2, phi3)
        V = embedding.eigenbasis(cfg)
        U = embedding.classical_unitaries(cfg)
        for j in range(1, 4):
            for k in range(1, 4):
                P = game.outcome_probabilities(game.final_state((tau, rho, sigma), U[j], U[k], V))
                bad += abs(P[j - 1, k - 1] - 1) > 1e-12
    return Check("classical embedding", 9 * n - bad, 9 * n, ["%d pairs off" % bad] if bad else [])


@_timed
def check_counterstrategy(rng, n_points=5, n_triples=20):
    sols = entanglement.maximal_solutions()
    idx = rng.choice(len(sols), size=n_points, replace=False)
    worst = 0.0
    for i in idx:
        p = sols[i]
        for _ in range(n_triples):
            Va, UA, UB = (random_unitary(rng) for _ in range(3))
            W = game.counterstrategy(p, Va, UA, UB)
            P1 = game.outcome_probabilities(game.final_state(p, Va, W))
            P2 = game.outcome_probabilities(game.final_state(p, UA, UB))
            worst = max(worst, float(np.abs(P1 - P2).max()))
    ok = worst <= 1e-10
    return Check("counterstrategy", int(ok), 1, [] if ok else ["max deviation %.3g" % worst])


@_timed
def check_oracles(rng):
    from scipy.linalg import expm
    fails = []
    d3 = max(np.abs(entanglement.reduced_density(p) - entanglement.reduced_density_closed_form(p)).max()
             for p in rng.uniform(0, 2 * np.pi, (100, 3)))
    if d3 > 1e-12:
        fails.append("reduced density closed form %.3g" % d3)
    bb = max(np.abs(gate.gate_tilde(p) - expm(1j * gate.gate_exponent(p))).max()
             for p in rng.uniform(0, 2 * np.pi, (50, 3)))
    if bb > 1e-12:
        fails.append("gate exponential %.3g" % bb)
    om = max(stability.conjugate_probe(p, r).residual
             for p in rng.uniform(0, 2 * np.pi, (50, 3)) for r in root_vectors())
    if om > 1e-12:
        fails.append("conjugation identity %.3g" % om)
    return Check("oracle equivalences", 3 - len(fails), 3, fails)


@_timed
def check_eigen_regression():
    fails = []
    ev = np.linalg.eigvalsh(entanglement.reduced_density((0, np.pi / 3, 0)))
    if np.abs(ev - [1 / 9, 1 / 9, 7 / 9]).max() > 1e-10:
        fails.append("rho=pi/3 eigenvalues %s" % ev)
    ev = np.linalg.eigvalsh(entanglement.reduced_density((0, np.pi / 2, 0)))
    ref = np.sort((3 + np.array([-1.0, (1 - np.sqrt(41)) / 2, (1 + np.sqrt(41)) / 2])) / 9)
    if np.abs(ev - ref).max() > 1e-10:
        fails.append("rho=pi/2 eigenvalues %s" % ev)
    return Check("eigenvalue regression", 2 - len(fails), 2, fails)


@_timed
def check_mixed_round_trip(rng, n=200):
    bad = 0
    for a, b in rng.uniform(0, 2 * np.pi, (n, 2)):
        p1, p2, _ = game.strategy_probabilities(a, b)
        r = game.mixed_feasibility(game.MixedTarget(p1, p2))
        if not r.feasible:
            bad += 1
            continue
        q1, q2, _ = game.strategy_probabilities(r.alpha, r.beta)
        bad += max(abs(q1 - p1), abs(q2 - p2)) > 1e-8
    return Check("mixed round trip", n - bad, n, ["%d samples failed" % bad] if bad else [])


def run_all(seed=0, data=None):
    rng = np.random.Generator(np.random.Philox(seed))
    return [
        check_maximal_triples(),
        check_generators(data),
        check_span_match(data),
        check_stability_dims(),
        check_mixed_witness(),
        check_classical_embedding(rng),
        check_counterstrategy(rng),
        check_oracles(rng),
        check_eigen_regression(),
        check_mixed_round_trip(rng),
    ]
