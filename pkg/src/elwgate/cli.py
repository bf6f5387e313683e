"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
3 domain violation.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import embedding, entanglement, game, stability, verify
from .errors import ElwError
from .gate import GateParams
from .linalg import random_unitary
from .su3 import coeffs_to_matrix
from .tables import TableFormatError, parse_angle

log = logging.getLogger("elwgate")

EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    pass


def _angle(tok, deg):
    if isinstance(tok, (int, float)):
        v = float(tok)
        return np.deg2rad(v) if deg else v
    try:
        v = parse_angle(tok)
    except TableFormatError as exc:
        raise UsageError(str(exc)) from None
    return np.deg2rad(v) if deg and "pi" not in tok else v


def _load_config(path):
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError("cannot read config %s: %s" % (path, exc)) from None
    if not isinstance(cfg, dict):
        raise UsageError("config must be a JSON object")
    return cfg


def _setting(args, cfg, name, default):
    v = getattr(args, name, None)
    if v is not None:
        return v
    return cfg.get(name, default)


def _params(args, cfg):
    return GateParams(*(_angle(_setting(args, cfg, k, 0.0), args.deg) for k in ("tau", "rho", "sigma")))


def _embedding(args, cfg):
    return embedding.EmbeddingConfig(
        _angle(_setting(args, cfg, "phi2", 0.0), args.deg),
        _angle(_setting(args, cfg, "phi3", 0.0), args.deg),
        _setting(args, cfg, "epsilon", "plus"),
    )


def _rng(args):
    return np.random.Generator(np.random.Philox(args.seed))


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cplx(m):
    return np.stack([np.real(m), np.imag(m)], axis=-1).tolist()


def _matrix(text):
    try:
        rows = [[float(x) for x in r.split(",")] for r in text.split(";")]
        m = np.array(rows, dtype=float)
    except ValueError:
        raise UsageError("bad matrix %r" % (text,)) from None
    if m.shape != (3, 3):
        raise UsageError("payoff matrix must be 3x3, got shape %s" % (m.shape,))
    return m


def _strategy(spec, triple, rng):
    if spec is None or spec == "random":
        return random_unitary(rng)
    if spec in ("U1", "U2", "U3"):
        return triple[int(spec[1])]
    try:
        c = np.array([float(x) for x in spec.split(",")])
    except ValueError:
        raise UsageError("strategy must be U1|U2|U3|random or 8 comma-separated coefficients") from None
    if c.shape != (8,):
        raise UsageError("expected 8 Gell-Mann coefficients, got %d" % c.size)
    w, v = np.linalg.eigh(coeffs_to_matrix(c))
    return (v * np.exp(1j * w)) @ v.conj().T


def cmd_classify(args):
    cfg = _load_config(args.config)
    p = _params(args, cfg)
    cls = entanglement.classify(p, args.tol)
    rec = {"params": dict(zip(("tau", "rho", "sigma"), p.as_tuple()))}
    rec.update(cls.as_dict())
    _emit(rec)
    return 0


def _grid_axis(tok, deg):
    parts = str(tok).split(":")
    if len(parts) == 1:
        return [_angle(parts[0], deg)]
    if len(parts) != 3:
        raise UsageError("range must be MIN:MAX:STEPS, got %r" % (tok,))
    lo, hi = _angle(parts[0], deg), _angle(parts[1], deg)
    try:
        steps = int(parts[2])
    except ValueError:
        raise UsageError("steps must be an integer, got %r" % (parts[2],)) from None
    if steps < 1 or lo > hi:
        raise UsageError("empty range %r" % (tok,))
    if steps == 1:
        return [lo]
    return list(np.linspace(lo, hi, steps))


def _scan_row(point, tol):
    tau, rho, sigma = point
    p = GateParams(tau, rho, sigma)
    cls = entanglement.classify(p, tol)
    dim = stability.stability_algebra(p).dim
    return (tau, rho, sigma, *cls.eigenvalues.tolist(), cls.kind.value, dim)


SCAN_COLUMNS = {
    "eigenvalues": ["ev1", "ev2", "ev3"],
    "class": ["class"],
    "stability_dim": ["stab_dim"],
}


def cmd_scan(args):
    cfg = _load_config(args.config)
    axes = [_grid_axis(_setting(args, cfg, k, "0"), args.deg) for k in ("tau", "rho", "sigma")]
    outputs = [o.strip() for o in args.outputs.split(",") if o.strip()]
    for o in outputs:
        if o not in SCAN_COLUMNS:
            raise UsageError("unknown output %r" % o)
    points = [(t, r, s) for t in axes[0] for r in axes[1] for s in axes[2]]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            rows = list(ex.map(_scan_row, points, [args.tol] * len(points), chunksize=64))
    else:
        rows = [_scan_row(pt, args.tol) for pt in points]
    header = ["tau", "rho", "sigma"]
    keep = [0, 1, 2]
    full = ["tau", "rho", "sigma", "ev1", "ev2", "ev3", "class", "stab_dim"]
    for o in outputs:
        for col in SCAN_COLUMNS[o]:
            header.append(col)
            keep.append(full.index(col))
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(float(row[i])) if isinstance(row[i], float) else row[i] for i in keep])
    return 0


def cmd_stability(args):
    cfg = _load_config(args.config)
    p = _params(args, cfg)
    b = stability.stability_algebra(p, args.tol)
    sym = stability.symmetrize_basis(b, args.tol)
    cls = entanglement.classify(p)
    _emit({
        "params": dict(zip(("tau", "rho", "sigma"), p.as_tuple())),
        "class": cls.kind.value,
        "singular": cls.singular,
        "dim": b.dim,
        "swap_split": {"even": sym.n_even, "odd": sym.n_odd},
        "generators": [{"sign": g.sign, "coeffs": g.x.tolist()} for g in sym.generators],
    })
    return 0


def _payoffs(args, cfg):
    pa = args.payoff_a or cfg.get("payoff_a")
    pb = args.payoff_b or cfg.get("payoff_b")
    if pa is None:
        raise UsageError("payoff matrix A required (--payoff-a or config payoff_a)")
    pa = _matrix(pa) if isinstance(pa, str) else np.asarray(pa, dtype=float)
    if pb is None:
        pb = pa.T
    else:
        pb = _matrix(pb) if isinstance(pb, str) else np.asarray(pb, dtype=float)
    try:
        return game.PayoffMatrix(pa, pb)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_payoff(args):
    cfg = _load_config(args.config)
    p, emb = _params(args, cfg), _embedding(args, cfg)
    triple = embedding.classical_unitaries(emb)
    rng = _rng(args)
    ua = _strategy(args.strategy_a, triple, rng)
    ub = _strategy(args.strategy_b, triple, rng)
    M = _payoffs(args, cfg)
    P = game.outcome_probabilities(game.final_state(p, ua, ub, embedding.eigenbasis(emb)))
    pay_a, pay_b = game.expected_payoffs(P, M)
    _emit({"probabilities": P.tolist(), "payoff_a": pay_a, "payoff_b": pay_b})
    return 0


def cmd_counter(args):
    cfg = _load_config(args.config)
    p, emb = _params(args, cfg), _embedding(args, cfg)
    V = embedding.eigenbasis(emb)
    triple = embedding.classical_unitaries(emb)
    rng = _rng(args)
    va = _strategy(args.strategy_v, triple, rng)
    ua = _strategy(args.strategy_a, triple, rng)
    ub = _strategy(args.strategy_b, triple, rng)
    W = game.counterstrategy(p, va, ua, ub, V, tol=args.tol)
    P_counter = game.outcome_probabilities(game.final_state(p, va, W, V))
    P_target = game.outcome_probabilities(game.final_state(p, ua, ub, V))
    dev = float(np.abs(P_counter - P_target).max())
    _emit({
        "countermove": _cplx(W),
        "target_probabilities": P_target.tolist(),
        "counter_probabilities": P_counter.tolist(),
        "max_deviation": dev,
        "tol": args.tol,
        "match": dev <= args.tol,
    })
    return 0


def cmd_mixed(args):
    r = game.mixed_feasibility(game.MixedTarget(args.p1, args.p2))
    t = game.MixedTarget(args.p1, args.p2)
    _emit({
        "p1": t.p1, "p2": t.p2, "lambda": t.lam, "mu": t.mu,
        "status": "feasible" if r.feasible else "infeasible",
        "alpha": r.alpha, "beta": r.beta,
        "cos_delta": r.best_cos_delta,
        "witnesses": [{"gamma": w.gamma, "cos_delta": w.cos_delta} for w in r.witnesses],
    })
    return 0


def cmd_verify_paper(args):
    try:
        checks = verify.run_all(seed=args.seed, data=args.data)
    except (TableFormatError, OSError) as exc:
        if args.json:
            _emit({"ok": False, "error": str(exc), "checks": []})
        else:
            print("FAIL generator data: %s" % exc)
        return EXIT_VERIFY
    ok = all(c.ok for c in checks)
    if args.json:
        _emit({"ok": ok, "checks": [c.as_dict() for c in checks]})
    else:
        for c in checks:
            print("%s %s: %d/%d" % ("PASS" if c.ok else "FAIL", c.name, c.passed, c.total))
            for f in c.failures:
                print("    %s" % f)
        print("total %.2f s" % sum(c.seconds for c in checks))
    return 0 if ok else EXIT_VERIFY


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tau", help="angle, e.g. 0.5, 2pi/3")
    common.add_argument("--rho")
    common.add_argument("--sigma")
    common.add_argument("--phi2")
    common.add_argument("--phi3")
    common.add_argument("--epsilon", choices=["plus", "minus"])
    common.add_argument("--tol", type=float, default=1e-8)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true")
    common.add_argument("--deg", action="store_true", help="plain angle numbers are degrees")
    common.add_argument("--config", metavar="PATH")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="elwgate", description="Entangling gates for 3-strategy ELW quantum games")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[common], help="entanglement class of the initial state").set_defaults(func=cmd_classify)

    sp = sub.add_parser("scan", parents=[common], help="CSV grid scan; --tau/--rho/--sigma take MIN:MAX:STEPS")
    sp.add_argument("--outputs", default="eigenvalues,class,stability_dim")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_scan)

    sub.add_parser("stability", parents=[common], help="stability subalgebra report").set_defaults(func=cmd_stability)

    for name, func, hlp in (("payoff", cmd_payoff, "outcome probabilities and payoffs"),
                            ("counter", cmd_counter, "counter-move at maximal entanglement")):
        sp = sub.add_parser(name, parents=[common], help=hlp)
        sp.add_argument("--strategy-a", help="U1|U2|U3|random or 8 coefficients c (U = exp(i c.lambda))")
        sp.add_argument("--strategy-b")
        if name == "payoff":
            sp.add_argument("--payoff-a", help="rows separated by ';', e.g. '1,0,0;0,1,0;0,0,1'")
            sp.add_argument("--payoff-b", help="defaults to the transpose of A")
        else:
            sp.add_argument("--strategy-v", help="Alice's actual move")
        sp.set_defaults(func=func)

    sp = sub.add_parser("mixed", parents=[common], help="can (p1, p2) be played with a Cartan strategy")
    sp.add_argument("--p1", type=float, required=True)
    sp.add_argument("--p2", type=float, required=True)
    sp.set_defaults(func=cmd_mixed)

    sp = sub.add_parser("verify-paper", parents=[common], help="full regression of the reference results")
    sp.add_argument("--data", metavar="PATH", help="alternative generator table file")
    sp.set_defaults(func=cmd_verify_paper)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print("elwgate: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ElwError as exc:
        print("elwgate: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
