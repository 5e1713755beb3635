"""Command-line front end.

Angles (--alpha, --beta, --epsilon) are given in units of pi. Exit codes:
0 success, 1 numerical failure (no bracketing sign change), 2 bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import analysis as an
from .channels import big_xi, big_xi_prime
from .measures import fidelity_from_G, generalized_singlet_fraction
from .repro import format_report, run_checks
from .teleport import avg_fidelity_mc

CSV_HEADER = ["param", "G_xi", "G_xi_prime", "neg_out", "discord_out", "fidelity"]
SWEEP_PARAMS = ("q", "alpha", "epsilon")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class SweepSpec:
    """A 1-D grid over one parameter; ``start``/``stop`` in the CLI's units."""

    param: str
    start: float
    stop: float
    steps: int
    alpha: float = 0.0
    beta: float = 0.0
    q: float = 0.01
    epsilon: float = 0.25

    def __post_init__(self):
        if self.param not in SWEEP_PARAMS:
            raise UsageError(f"sweep parameter must be one of {SWEEP_PARAMS}")
        if not self.start < self.stop:
            raise UsageError("sweep needs start < stop")
        if self.steps < 2:
            raise UsageError("sweep needs at least 2 steps")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def sweep_rows(spec: SweepSpec) -> list[list[float]]:
    """One row per grid point, in grid order.

    ``neg_out``, ``discord_out`` and ``fidelity`` describe teleportation
    through the doubly damped resource at its optimal angles.
    """
    rows = []
    for v in spec.values():
        p = {"q": spec.q, "alpha": spec.alpha, "epsilon": spec.epsilon}
        p[spec.param] = float(v)
        alpha, q = math.pi * p["alpha"], p["q"]
        eps = math.pi * p["epsilon"]
        beta = math.pi * spec.beta
        g = generalized_singlet_fraction(big_xi(alpha, beta, q), extra_starts=[(alpha, beta)])
        gp = generalized_singlet_fraction(big_xi_prime(alpha, beta, q))
        out = an.xi_prime_output(alpha, beta, q, eps, gp.angles)
        rows.append([float(v), g.value, gp.value, an.output_negativity(out),
                     an.output_discord(out), fidelity_from_G(gp.value)])
    return rows


def write_sweep(spec: SweepSpec, path: str) -> int:
    rows = sweep_rows(spec)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow([_fmt(x) for x in row])
    return len(rows)


def _angles(args) -> tuple[float, float]:
    return math.pi * args.alpha, math.pi * args.beta


def cmd_qcrit(args) -> int:
    alpha, beta = _angles(args)
    qc = an.q_crit(alpha, beta, tol=args.tol or 1e-7)
    print(f"q_crit = {_fmt(qc)}  (alpha = {args.alpha:g} pi)")
    return 0


def cmd_eps_threshold(args) -> int:
    alpha, beta = _angles(args)
    eps = an.epsilon_threshold(alpha, args.q, beta, tol=args.tol or 1e-6)
    print(f"epsilon_threshold = {_fmt(eps)} rad = {_fmt(eps / math.pi)} pi  "
          f"(alpha = {args.alpha:g} pi, q = {args.q:g})")
    return 0


cmd_epsilon_threshold = cmd_eps_threshold


def cmd_sweep(args) -> int:
    if args.param is None or args.start is None or args.stop is None or args.steps is None:
        raise UsageError("sweep needs --param, --start, --stop and --steps")
    if not args.out:
        raise UsageError("sweep needs --out PATH")
    spec = SweepSpec(args.param, args.start, args.stop, args.steps,
                     alpha=args.alpha, beta=args.beta, q=args.q, epsilon=args.epsilon)
    try:
        n = write_sweep(spec, args.out)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    print(f"wrote {n} rows to {args.out}")
    return 0


def cmd_gsf(args) -> int:
    alpha, beta = _angles(args)
    for label, xi_fn in (("Xi", big_xi), ("Xi'", big_xi_prime)):
        res = generalized_singlet_fraction(xi_fn(alpha, beta, args.q, args.damped_pair),
                                           extra_starts=[(alpha, beta)])
        t, p = res.angles
        print(f"G[{label}] = {_fmt(res.value)}  at theta12 = {_fmt(t / math.pi)} pi, "
              f"phi12 = {_fmt(p / math.pi)} pi;  fidelity = {_fmt(fidelity_from_G(res.value))}")
    return 0


def _outputs(args):
    alpha, beta = _angles(args)
    eps = math.pi * args.epsilon
    plain = an.xi_output(alpha, beta, args.q, eps, args.damped_pair)
    damped = an.xi_prime_output(alpha, beta, args.q, eps)
    return plain, damped


def cmd_negativity(args) -> int:
    plain, damped = _outputs(args)
    n0, n1 = an.output_negativity(plain), an.output_negativity(damped)
    print(f"N[Xi out] = {_fmt(n0)}\nN[Xi' out] = {_fmt(n1)}\ngap = {_fmt(n1 - n0)}")
    return 0


def cmd_discord(args) -> int:
    plain, damped = _outputs(args)
    d0, d1 = an.output_discord(plain), an.output_discord(damped)
    print(f"D_min[Xi out] = {_fmt(d0)}\nD_min[Xi' out] = {_fmt(d1)}\ngap = {_fmt(d1 - d0)}")
    return 0


def cmd_fidelity(args) -> int:
    alpha, beta = _angles(args)
    if args.samples and args.seed is None:
        raise UsageError("Monte Carlo fidelity needs an explicit --seed")
    for label, xi_fn in (("Xi", big_xi), ("Xi'", big_xi_prime)):
        Xi = xi_fn(alpha, beta, args.q)
        res = generalized_singlet_fraction(Xi, extra_starts=[(alpha, beta)])
        line = f"Phi[{label}] = {_fmt(fidelity_from_G(res.value))}"
        if args.samples:
            mean, err = avg_fidelity_mc(Xi, res.angles, args.samples, args.seed)
            line += f"  (Monte Carlo {_fmt(mean)} +/- {_fmt(err)}, n = {args.samples})"
        print(line)
    return 0


def cmd_repro(args) -> int:
    t0 = time.perf_counter()
    checks = run_checks()
    print(format_report(checks))
    print(f"elapsed {time.perf_counter() - t0:.1f} s")
    return 0 if all(c.passed for c in checks) else 1


COMMANDS = {
    "qcrit": (cmd_qcrit, "critical q below which the second damping raises G"),
    "eps-threshold": (cmd_eps_threshold, "input angle where the discord gain vanishes"),
    "sweep": (cmd_sweep, "write a CSV sweep over q, alpha or epsilon"),
    "gsf": (cmd_gsf, "generalized singlet fractions and optimal angles"),
    "discord": (cmd_discord, "minimum discord of the teleported outputs"),
    "negativity": (cmd_negativity, "negativity of the teleported outputs"),
    "fidelity": (cmd_fidelity, "average teleportation fidelity (closed form, optional Monte Carlo)"),
    "repro": (cmd_repro, "recompute every published number and print PASS/FAIL"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, default=0.0, help="theta12 of the resource, units of pi")
    common.add_argument("--beta", type=float, default=0.0, help="phi12 of the resource, units of pi")
    common.add_argument("--q", type=float, default=0.01, help="damping parameter in [0, 1]")
    common.add_argument("--epsilon", type=float, default=0.25, help="input-state angle, units of pi")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--samples", type=int, default=0)
    common.add_argument("--out", default=None, metavar="PATH")
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--damped-pair", choices=("sender", "receiver"), default="sender")

    parser = argparse.ArgumentParser(prog="noisy-teleport", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "sweep":
            p.add_argument("--param", choices=SWEEP_PARAMS)
            p.add_argument("--start", type=float)
            p.add_argument("--stop", type=float)
            p.add_argument("--steps", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
