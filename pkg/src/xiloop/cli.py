"""Command-line interface: ``xiloop {eval,scan,zeros,gammainc,compare}``.

Coordinates on the command line are s-plane (``--sigma``, ``--t``);
``--x0``/``--t0`` give the same point in z-plane form, x0 = sigma - 1/2.

Exit codes: 0 success, 2 usage or domain error, 3 numerical non-convergence.
"""

import argparse
import json
import math
import sys
from dataclasses import replace
from typing import Dict, List, Optional

from .config import EPSILON_FLOOR, EvalConfig
from .errors import ConvergenceError, DomainError
from .methods import applicable_methods, evaluate, max_pairwise_deviation
from .special import IncGammaParams, crude_bound, upper_inc_gamma
from .strip import Method, xi_critical_line
from .zeta import xi_classical

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3

SCAN_HEADER = "t0,xi_incgamma,xi_classical,xi_theta,max_dev"
ZERO_COARSE_STEP = 0.25
ZERO_WIDTH = 1e-6

_FLOAT_KEYS = {"sigma", "t", "x0", "t0", "epsilon", "quad_step", "quad_T",
               "t_from", "t_to", "step", "beta", "k", "alpha"}
_INT_KEYS = {"n_max", "m_cap"}
_CONFIG_ALIASES = {"from": "t_from", "to": "t_to", "quad-t": "quad_T", "quad_t": "quad_T"}
_DEFAULT_FORMAT = {"eval": "plain", "scan": "csv", "zeros": "json", "gammainc": "plain", "compare": "plain"}


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    if math.isnan(x):
        return "nan"
    return "%.11e" % x


def read_config(path: str) -> Dict[str, str]:
    """Parse a ``key = value`` file; ``#`` starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.lstrip("-")
            key = _CONFIG_ALIASES.get(key.lower(), key.replace("-", "_"))
            values[key] = value
    return values


def _convert(key: str, value: str):
    try:
        if key in _FLOAT_KEYS:
            return float(value)
        if key in _INT_KEYS:
            return int(value)
    except ValueError as exc:
        raise UsageError(f"bad value for {key}: {value!r}") from exc
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--epsilon", type=float)
    common.add_argument("--n-max", dest="n_max", type=int)
    common.add_argument("--m-cap", dest="m_cap", type=int)
    common.add_argument("--quad-step", dest="quad_step", type=float)
    common.add_argument("--quad-T", dest="quad_T", type=float)
    common.add_argument("--format", choices=["csv", "json", "plain"])
    common.add_argument("--config", help="key=value file mirroring the flags; flags win")
    return common


def _point_options(p: argparse.ArgumentParser):
    p.add_argument("--sigma", type=float)
    p.add_argument("--t", type=float)
    p.add_argument("--x0", type=float)
    p.add_argument("--t0", type=float)


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    methods = [m.value for m in Method]
    parser = argparse.ArgumentParser(prog="xiloop", description="Evaluate Riemann's xi function in the critical strip.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate xi at one point")
    _point_options(p)
    p.add_argument("--method", choices=methods)

    p = sub.add_parser("compare", parents=[common], help="evaluate xi by every applicable method")
    _point_options(p)

    p = sub.add_parser("scan", parents=[common], help="sample xi along the critical line")
    p.add_argument("--from", dest="t_from", type=float)
    p.add_argument("--to", dest="t_to", type=float)
    p.add_argument("--step", type=float)

    p = sub.add_parser("zeros", parents=[common], help="locate sign changes of xi(1/2 + it)")
    p.add_argument("--from", dest="t_from", type=float)
    p.add_argument("--to", dest="t_to", type=float)
    p.add_argument("--step", type=float, help="coarse scan step (default 0.25)")
    p.add_argument("--method", choices=[Method.INCGAMMA.value, Method.CLASSICAL.value])

    p = sub.add_parser("gammainc", parents=[common], help="upper incomplete gamma Gamma(beta+1+ik, alpha)")
    p.add_argument("--beta", type=float)
    p.add_argument("--k", type=float)
    p.add_argument("--alpha", type=float)
    return parser


def resolve_args(argv: Optional[List[str]]) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    if args.config:
        for key, raw in read_config(args.config).items():
            if hasattr(args, key) and getattr(args, key) is None:
                setattr(args, key, _convert(key, raw))
    if args.format is None:
        args.format = _DEFAULT_FORMAT[args.command]
    return args


def make_config(args: argparse.Namespace) -> EvalConfig:
    defaults = EvalConfig()
    return EvalConfig(
        epsilon=defaults.epsilon if args.epsilon is None else args.epsilon,
        n_max=defaults.n_max if args.n_max is None else args.n_max,
        m_cap=defaults.m_cap if args.m_cap is None else args.m_cap,
        quad_T=args.quad_T,
        quad_step=defaults.quad_step if args.quad_step is None else args.quad_step,
    )


def _s_point(args) -> tuple:
    if args.sigma is not None or args.t is not None:
        if args.x0 is not None or args.t0 is not None:
            raise UsageError("give either --sigma/--t or --x0/--t0, not both")
        sigma = 0.5 if args.sigma is None else args.sigma
        return sigma, 0.0 if args.t is None else args.t
    x0 = 0.0 if args.x0 is None else args.x0
    return x0 + 0.5, 0.0 if args.t0 is None else args.t0


def _emit_record(record: dict, form: str, out):
    if form == "json":
        out.write(json.dumps(record) + "\n")
        return
    flat = {}
    for key, value in record.items():
        if isinstance(value, dict):
            flat["value_re"], flat["value_im"] = value["re"], value["im"]
        else:
            flat[key] = value

    def show(v):
        if isinstance(v, bool):
            return str(v).lower()
        if isinstance(v, float):
            return fmt(v)
        return str(v)

    if form == "csv":
        out.write(",".join(flat) + "\n")
        out.write(",".join(show(v) for v in flat.values()) + "\n")
    else:
        for key, value in flat.items():
            out.write(f"{key}: {show(value)}\n")


def cmd_eval(args, cfg: EvalConfig, out) -> int:
    sigma, t = _s_point(args)
    method = Method(args.method or Method.INCGAMMA.value)
    result = evaluate(method, sigma, t, cfg)
    record = {
        "sigma": sigma,
        "t": t,
        "method": method.value,
        "value": {"re": result.value.real, "im": result.value.imag},
        "n_used": result.n_used,
        "error_estimate": result.error_estimate,
        "converged": result.converged,
    }
    _emit_record(record, args.format, out)
    return EXIT_OK if result.converged else EXIT_NONCONVERGENCE


def cmd_compare(args, cfg: EvalConfig, out) -> int:
    sigma, t = _s_point(args)
    methods = applicable_methods(sigma)
    if not methods:
        raise DomainError(f"no method covers sigma = {sigma:g}")
    rows, status = [], EXIT_OK
    for method in methods:
        try:
            result = evaluate(method, sigma, t, cfg)
            value, err, ok = result.value, result.error_estimate, result.converged
        except (DomainError, ConvergenceError):
            value, err, ok = complex(math.nan, math.nan), math.nan, False
        if not ok:
            status = EXIT_NONCONVERGENCE
        rows.append((method.value, value, err, ok))
    max_dev = max_pairwise_deviation([r[1] for r in rows])
    if args.format == "json":
        payload = {
            "sigma": sigma,
            "t": t,
            "results": [
                {"method": m, "value": {"re": v.real, "im": v.imag}, "error_estimate": e, "converged": ok}
                for m, v, e, ok in rows
            ],
            "max_dev": max_dev,
        }
        out.write(json.dumps(payload) + "\n")
    else:
        sep = "," if args.format == "csv" else " "
        out.write(sep.join(["method", "value_re", "value_im", "error_estimate"]) + "\n")
        for m, v, e, _ in rows:
            out.write(sep.join([m, fmt(v.real), fmt(v.imag), fmt(e)]) + "\n")
        out.write(f"max_dev{sep}{fmt(max_dev)}\n")
    return status


def _grid(t_from: float, t_to: float, step: float) -> List[float]:
    count = int(math.floor((t_to - t_from) / step + 1e-9))
    return [t_from + i * step for i in range(count + 1)]


def scan_row(t0: float, cfg: EvalConfig) -> tuple:
    """(t0, incgamma, classical, theta, max_dev) for one critical-line sample."""
    values = []
    ok = True
    for method in (Method.INCGAMMA, Method.CLASSICAL, Method.THETA):
        try:
            result = evaluate(method, 0.5, t0, cfg)
            values.append(result.value.real)
            ok &= result.converged
        except (DomainError, ConvergenceError):
            values.append(math.nan)
            ok = False
    if not ok:
        return (t0, math.nan, math.nan, math.nan, math.nan), False
    dev = max(abs(a - b) for i, a in enumerate(values) for b in values[i + 1:])
    return (t0, *values, dev), True


def cmd_scan(args, cfg: EvalConfig, out) -> int:
    t_from, t_to, step = args.t_from, args.t_to, args.step
    if t_from is None or t_to is None or step is None:
        raise UsageError("scan needs --from, --to and --step")
    if not t_from < t_to or not step > 0:
        raise DomainError("scan needs --from < --to and --step > 0")
    rows, status = [], EXIT_OK
    for t0 in _grid(t_from, t_to, step):
        row, ok = scan_row(t0, cfg)
        if not ok:
            status = EXIT_NONCONVERGENCE
        rows.append(row)
    if args.format == "json":
        keys = SCAN_HEADER.split(",")
        out.write(json.dumps([dict(zip(keys, r)) for r in rows]) + "\n")
    else:
        out.write(SCAN_HEADER + "\n")
        for row in rows:
            out.write(",".join(fmt(x) for x in row) + "\n")
    return status


def critical_line_value(method: Method, t0: float, cfg: EvalConfig) -> float:
    """xi(1/2 + i t0), tightening epsilon until the sign is certified.

    Near a zero |xi| can drop below the error estimate; the series is then
    re-run with epsilon / 100 down to the double-precision floor.
    """
    if method is Method.CLASSICAL:
        return xi_classical(complex(0.5, t0), cfg.zeta).real
    while True:
        result = xi_critical_line(t0, cfg)
        if not result.converged:
            raise ConvergenceError(f"incomplete-gamma series did not converge at t0={t0:g}")
        value = result.value.real
        if abs(value) > result.error_estimate or cfg.epsilon <= EPSILON_FLOOR:
            return value
        cfg = replace(cfg, epsilon=max(cfg.epsilon / 100.0, EPSILON_FLOOR))


def find_zeros(t_from: float, t_to: float, method: Method, cfg: EvalConfig,
               step: float = ZERO_COARSE_STEP) -> List[dict]:
    """Sign changes of xi(1/2 + it) on a coarse grid, refined by bisection."""
    grid = _grid(t_from, t_to, step)
    if grid[-1] < t_to:
        grid.append(t_to)
    values = [critical_line_value(method, t, cfg) for t in grid]
    found = []
    for (lo, f_lo), (hi, f_hi) in zip(zip(grid, values), zip(grid[1:], values[1:])):
        if f_lo == 0.0:
            found.append({"t_low": lo, "t_high": lo, "root": lo})
            continue
        if f_lo * f_hi > 0.0 or f_hi == 0.0:
            continue
        while hi - lo >= ZERO_WIDTH:
            mid = 0.5 * (lo + hi)
            f_mid = critical_line_value(method, mid, cfg)
            if f_mid == 0.0:
                lo = hi = mid
                break
            if (f_mid > 0.0) == (f_lo > 0.0):
                lo, f_lo = mid, f_mid
            else:
                hi = mid
        found.append({"t_low": lo, "t_high": hi, "root": 0.5 * (lo + hi)})
    if values[-1] == 0.0:
        found.append({"t_low": grid[-1], "t_high": grid[-1], "root": grid[-1]})
    return found


def cmd_zeros(args, cfg: EvalConfig, out) -> int:
    if args.t_from is None or args.t_to is None:
        raise UsageError("zeros needs --from and --to")
    if not args.t_from < args.t_to:
        raise DomainError("zeros needs --from < --to")
    step = ZERO_COARSE_STEP if args.step is None else args.step
    if not step > 0:
        raise DomainError("--step must be positive")
    method = Method(args.method or Method.INCGAMMA.value)
    roots = find_zeros(args.t_from, args.t_to, method, cfg, step)
    if args.format == "json":
        out.write(json.dumps(roots) + "\n")
    else:
        out.write("t_low,t_high,root\n")
        for r in roots:
            out.write(f"{fmt(r['t_low'])},{fmt(r['t_high'])},{fmt(r['root'])}\n")
    return EXIT_OK


def _pi_square_index(alpha: float) -> Optional[int]:
    n = round(math.sqrt(alpha / math.pi))
    if n >= 1 and math.isclose(alpha, math.pi * n * n, rel_tol=1e-12):
        return n
    return None


def cmd_gammainc(args, cfg: EvalConfig, out) -> int:
    if args.beta is None or args.alpha is None:
        raise UsageError("gammainc needs --beta and --alpha")
    k = 0.0 if args.k is None else args.k
    result = upper_inc_gamma(IncGammaParams(complex(args.beta, k), args.alpha, cfg.epsilon, cfg.m_cap))
    record = {
        "beta": args.beta,
        "k": k,
        "alpha": args.alpha,
        "value": {"re": result.value.real, "im": result.value.imag},
        "terms_used": result.terms_used,
        "remainder_bound": result.remainder_bound,
        "converged": result.converged,
    }
    n = _pi_square_index(args.alpha)
    if n is not None and 1.0 <= args.beta <= 1.5:
        record["crude_bound"] = crude_bound(args.beta, n)
    _emit_record(record, args.format, out)
    return EXIT_OK if result.converged else EXIT_NONCONVERGENCE


COMMANDS = {
    "eval": cmd_eval,
    "compare": cmd_compare,
    "scan": cmd_scan,
    "zeros": cmd_zeros,
    "gammainc": cmd_gammainc,
}


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = resolve_args(argv)
        cfg = make_config(args)
        return COMMANDS[args.command](args, cfg, out)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_USAGE if exc.code else EXIT_OK
    except (UsageError, DomainError, OSError) as exc:
        err.write(f"xiloop: error: {exc}\n")
        return EXIT_USAGE
    except (ConvergenceError, OverflowError) as exc:
        err.write(f"xiloop: numerical failure: {exc}\n")
        return EXIT_NONCONVERGENCE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
