import numpy as np
import pytest

from elwgate.embedding import EmbeddingConfig, classical_unitaries, eigenbasis
from elwgate.entanglement import maximal_solutions
from elwgate.errors import NotMaximallyEntangled, NotUnitary, OutOfDomain
from elwgate.game import (
    MixedTarget,
    PayoffMatrix,
    counterstrategy,
    expected_payoffs,
    final_state,
    mixed_feasibility,
    outcome_probabilities,
    strategy_probabilities,
    tan_gamma_cubic,
)
from elwgate.gate import GateParams
from elwgate.linalg import ket2, random_unitary, swap_operator

PI = np.pi
EPS = np.exp(2j * PI / 3)


def test_final_state_identity(rng):
    p = rng.uniform(0, 2 * PI, 3)
    assert np.abs(final_state(p, np.eye(3), np.eye(3)) - ket2(1, 1)).max() < 1e-12


def test_final_state_classical_pair(rng):
    for _ in range(10):
        cfg = EmbeddingConfig(*rng.uniform(0, 2 * PI, 2))
        U = classical_unitaries(cfg)
        p = rng.uniform(0, 2 * PI, 3)
        psi = final_state(p, U[2], U[3], eigenbasis(cfg))
        assert np.abs(psi - np.exp(1j * (cfg.phi2 + cfg.phi3)) * ket2(2, 3)).max() < 1e-12


def test_final_state_norm(rng):
    for _ in range(10):
        psi = final_state(rng.uniform(0, 2 * PI, 3), random_unitary(rng), random_unitary(rng))
        assert abs(np.linalg.norm(psi) - 1) < 1e-12


def test_final_state_rejects_non_unitary():
    with pytest.raises(NotUnitary):
        final_state(GateParams(), 2 * np.eye(3), np.eye(3))


def test_outcome_probabilities():
    P = outcome_probabilities(ket2(2, 3))
    assert P[1, 2] == 1 and P.sum() == 1
    P = outcome_probabilities((ket2(1, 1) + ket2(2, 2)) / np.sqrt(2))
    assert P[0, 0] == pytest.approx(0.5) and P[1, 1] == pytest.approx(0.5)


def test_expected_payoffs(rng):
    pa, pb = rng.standard_normal((2, 3, 3))
    M = PayoffMatrix(pa, pb)
    assert expected_payoffs(outcome_probabilities(ket2(2, 3)), M) == (pa[1, 2], pb[1, 2])
    assert expected_payoffs(np.full((3, 3), 1 / 9), PayoffMatrix(np.ones((3, 3)), np.ones((3, 3))))[0] == pytest.approx(1)
    P = outcome_probabilities(final_state(rng.uniform(0, 2 * PI, 3), random_unitary(rng), random_unitary(rng)))
    qa, qb = rng.standard_normal((2, 3, 3))
    lhs = expected_payoffs(P, PayoffMatrix(2 * pa + qa, 2 * pb + qb))
    rhs = [2 * x + y for x, y in zip(expected_payoffs(P, M), expected_payoffs(P, PayoffMatrix(qa, qb)))]
    assert np.allclose(lhs, rhs, atol=1e-13)


def test_symmetric_game_swapped_strategies(rng):
    pa = rng.standard_normal((3, 3))
    M = PayoffMatrix(pa, pa.T)
    assert M.symmetric
    p = rng.uniform(0, 2 * PI, 3)
    a, b = random_unitary(rng), random_unitary(rng)
    pay_ab = expected_payoffs(outcome_probabilities(final_state(p, a, b)), M)
    pay_ba = expected_payoffs(outcome_probabilities(final_state(p, b, a)), M)
    assert pay_ab[0] == pytest.approx(pay_ba[1], abs=1e-12)
    assert pay_ab[1] == pytest.approx(pay_ba[0], abs=1e-12)
    # the swap symmetry of the gate is what makes this hold
    sw = swap_operator()
    assert np.abs(sw @ final_state(p, a, b) - final_state(p, b, a)).max() < 1e-12


def test_counterstrategy_trivial(rng):
    p = GateParams(0, 2 * PI / 3, 0)
    ua, ub = random_unitary(rng), random_unitary(rng)
    assert np.abs(counterstrategy(p, ua, ua, ub) - ub).max() < 1e-12


def test_counterstrategy_matches(rng):
    p = GateParams(0, 2 * PI / 3, 0)
    for _ in range(20):
        v, ua, ub = (random_unitary(rng) for _ in range(3))
        w = counterstrategy(p, v, ua, ub)
        P1 = outcome_probabilities(final_state(p, v, w))
        P2 = outcome_probabilities(final_state(p, ua, ub))
        assert np.abs(P1 - P2).max() <= 1e-10


def test_counterstrategy_every_maximal_point(rng):
    cfg = EmbeddingConfig(0.7, -1.9, "minus")
    V = eigenbasis(cfg)
    for p in maximal_solutions():
        for _ in range(5):
            v, ua, ub = (random_unitary(rng) for _ in range(3))
            w = counterstrategy(p, v, ua, ub, V)
            P1 = outcome_probabilities(final_state(p, v, w, V))
            P2 = outcome_probabilities(final_state(p, ua, ub, V))
            assert np.abs(P1 - P2).max() <= 1e-10


def test_counterstrategy_needs_maximal(rng):
    with pytest.raises(NotMaximallyEntangled):
        counterstrategy((0, PI / 2, 0), *(random_unitary(rng) for _ in range(3)))


def test_strategy_probabilities_examples():
    assert np.allclose(strategy_probabilities(0, 0), (1, 0, 0), atol=1e-15)
    assert np.allclose(strategy_probabilities(-2 * PI / 9, 2 * PI / 9), (1 / 3, 1 / 3, 1 / 3), atol=1e-14)


def test_strategy_probabilities_third_amplitude(rng):
    for a, b in rng.uniform(0, 2 * PI, (50, 2)):
        p1, p2, p3 = strategy_probabilities(a, b)
        u1, u2 = np.exp(-1j * (a + b)), np.exp(1j * (b - 2 * a))
        assert p3 == pytest.approx(abs(1 + EPS**2 * u1 + EPS * u2) ** 2 / 9, abs=1e-12)
        # explicit three-term amplitudes of the diagonal strategy
        terms = np.array([np.exp(1j * a), np.exp(1j * (b - a)), np.exp(-1j * b)])
        direct = [abs(terms @ w) ** 2 / 9 for w in ([1, 1, 1], [1, EPS**2, EPS], [EPS**2, 1, EPS])]
        assert np.allclose(direct, (p1, p2, p3), atol=1e-12)


def test_cubic_vanishes_at_true_tangent(rng):
    for a, b in rng.uniform(0, 2 * PI, (50, 2)):
        p1, p2, _ = strategy_probabilities(a, b)
        t = MixedTarget(p1, p2)
        u1, u2 = np.exp(-1j * (a + b)), np.exp(1j * (b - 2 * a))
        tg = np.tan((np.angle(u1) - np.angle(u2)) / 2)
        c3, c2, c1, c0 = tan_gamma_cubic(t.lam, t.mu)
        scale = max(abs(c3), abs(c2), abs(c1), abs(c0)) * (1 + abs(tg)) ** 3
        assert abs(np.polyval([c3, c2, c1, c0], tg)) <= 1e-10 * scale


def test_mixed_witness():
    r = mixed_feasibility(MixedTarget(1 / 18, 5 / 9))
    assert MixedTarget(1 / 18, 5 / 9).lam == pytest.approx(-1 / 8)
    assert MixedTarget(1 / 18, 5 / 9).mu == pytest.approx(1)
    assert not r.feasible
    assert r.best_cos_delta == pytest.approx(-1.12041, abs=1e-4)


def test_mixed_pure_target():
    r = mixed_feasibility(MixedTarget(1, 0))
    assert r.feasible and r.alpha == pytest.approx(0, abs=1e-12) and r.beta == pytest.approx(0, abs=1e-12)


def test_mixed_uniform_target():
    r = mixed_feasibility(MixedTarget(1 / 3, 1 / 3))
    assert r.feasible
    assert np.allclose(strategy_probabilities(r.alpha, r.beta)[:2], (1 / 3, 1 / 3), atol=1e-8)


def test_mixed_lambda_zero():
    # p1 = 1/9 makes the cubic quadratic; the forward map still reaches it
    hit = None
    for b in np.linspace(0, 2 * PI, 2001):
        for a in np.linspace(0, 2 * PI, 201):
            if abs(strategy_probabilities(a, b)[0] - 1 / 9) < 1e-3:
                hit = strategy_probabilities(a, b)
                break
        if hit:
            break
    r = mixed_feasibility(MixedTarget(1 / 9, hit[1]))
    if r.feasible:
        assert np.allclose(strategy_probabilities(r.alpha, r.beta)[:2], (1 / 9, hit[1]), atol=1e-8)


def test_mixed_round_trip(rng):
    for a, b in rng.uniform(0, 2 * PI, (200, 2)):
        p1, p2, _ = strategy_probabilities(a, b)
        r = mixed_feasibility(MixedTarget(p1, p2))
        assert r.feasible
        q1, q2, _ = strategy_probabilities(r.alpha, r.beta)
        assert abs(q1 - p1) <= 1e-8 and abs(q2 - p2) <= 1e-8


@pytest.mark.parametrize("p1, p2", [(-0.1, 0.5), (0.7, 0.5), (1.2, 0)])
def test_mixed_domain(p1, p2):
    with pytest.raises(OutOfDomain):
        MixedTarget(p1, p2)


def test_payoff_matrix_validation():
    with pytest.raises(ValueError):
        PayoffMatrix(np.ones((2, 2)), np.ones((3, 3)))
