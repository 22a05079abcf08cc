"""Command-line front end: weights / eigen / solve / converge / compare.

Output files are deterministic: identical configs produce byte-identical
files (no timestamps; the header carries a config echo only). Exit codes:
0 success, 2 usage error, 3 numerical or convergence error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import ConvergenceError, DomainError, NumericalError
from .evolution import (
    CustomIC,
    EigenfunctionIC,
    EvolutionConfig,
    GaussianIC,
    PowerLawIC,
    evolve,
)
from .harness import eigen_decay_study, figure1_comparison, operator_consistency_study
from .reference import principal_eigenvalue
from .weights import Scheme, grunwald_weights, new_weights

COMMANDS = ("weights", "eigen", "solve", "converge", "compare")

_CONFIG_KEYS = (
    "alpha",
    "n",
    "n_list",
    "dt",
    "t_final",
    "scheme",
    "ic",
    "mu",
    "sigma2",
    "power_a",
    "power_b",
    "n_reference",
    "out",
    "format",
)


@dataclass(frozen=True)
class RunConfig:
    command: str
    alpha: float = 1.5
    n: Optional[int] = None
    n_list: tuple[int, ...] = ()
    dt: Optional[float] = None
    t_final: float = 0.01
    scheme: Scheme = Scheme.NEW
    ic: str = "gaussian"
    mu: float = 0.4
    sigma2: float = 0.0005
    power_a: float = 1.0
    power_b: float = 0.0
    n_reference: Optional[int] = None
    out: Optional[str] = None
    format: str = "csv"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if not 1.0 < self.alpha <= 2.0:
            raise DomainError(f"alpha must be in (1, 2], got {self.alpha}")
        if self.format not in ("csv", "json"):
            raise DomainError(f"format must be csv or json, got {self.format!r}")
        if self.ic not in ("gaussian", "eigen", "power"):
            raise DomainError(f"ic must be gaussian, eigen or power, got {self.ic!r}")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fracheat", description=__doc__)
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--config", help="key=value config file; flags override it")
    p.add_argument("--alpha", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--n-list", dest="n_list", help="comma-separated grid sizes")
    p.add_argument("--dt", type=float)
    p.add_argument("--t-final", dest="t_final", type=float)
    p.add_argument("--scheme", choices=[s.value for s in Scheme])
    p.add_argument("--ic", choices=["gaussian", "eigen", "power"])
    p.add_argument("--mu", type=float)
    p.add_argument("--sigma2", type=float)
    p.add_argument("--power-a", dest="power_a", type=float)
    p.add_argument("--power-b", dest="power_b", type=float)
    p.add_argument("--n-reference", dest="n_reference", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"])
    return p


def _read_config_file(path: str) -> dict:
    out: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected key=value, got {raw!r}")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in _CONFIG_KEYS:
                raise DomainError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = value
    return out


def _parse_n_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError as exc:
        raise DomainError(f"malformed n-list {text!r}") from exc


_CASTS = {
    "alpha": float,
    "n": int,
    "dt": float,
    "t_final": float,
    "mu": float,
    "sigma2": float,
    "power_a": float,
    "power_b": float,
    "n_reference": int,
}


def parse_config(argv: Sequence[str]) -> RunConfig:
    """Parse argv (and an optional config file) into a validated RunConfig."""
    ns = _build_parser().parse_args(argv)
    merged: dict = {}
    if ns.config:
        for key, text in _read_config_file(ns.config).items():
            if key == "n_list":
                merged[key] = _parse_n_list(text)
            elif key == "scheme":
                merged[key] = Scheme(text)
            elif key in _CASTS:
                try:
                    merged[key] = _CASTS[key](text)
                except ValueError as exc:
                    raise DomainError(f"malformed value for {key}: {text!r}") from exc
            else:
                merged[key] = text
    for key in _CONFIG_KEYS:
        val = getattr(ns, key, None)
        if val is not None:
            if key == "n_list":
                merged[key] = _parse_n_list(val)
            elif key == "scheme":
                merged[key] = Scheme(val)
            else:
                merged[key] = val
    return RunConfig(command=ns.command, **merged)


def render_config(cfg: RunConfig) -> list[str]:
    """Inverse of parse_config: an argv list that reproduces cfg."""
    argv = [cfg.command]
    argv += ["--alpha", repr(cfg.alpha)]
    if cfg.n is not None:
        argv += ["--n", str(cfg.n)]
    if cfg.n_list:
        argv += ["--n-list", ",".join(str(n) for n in cfg.n_list)]
    if cfg.dt is not None:
        argv += ["--dt", repr(cfg.dt)]
    argv += ["--t-final", repr(cfg.t_final)]
    argv += ["--scheme", cfg.scheme.value]
    argv += ["--ic", cfg.ic]
    argv += ["--mu", repr(cfg.mu)]
    argv += ["--sigma2", repr(cfg.sigma2)]
    argv += ["--power-a", repr(cfg.power_a)]
    argv += ["--power-b", repr(cfg.power_b)]
    if cfg.n_reference is not None:
        argv += ["--n-reference", str(cfg.n_reference)]
    if cfg.out is not None:
        argv += ["--out", cfg.out]
    argv += ["--format", cfg.format]
    return argv


# ---------------------------------------------------------------------------
# command bodies

def _echo(cfg: RunConfig) -> str:
    keep = {
        "command": cfg.command,
        "alpha": cfg.alpha,
        "n": cfg.n,
        "n_list": list(cfg.n_list),
        "dt": cfg.dt,
        "t_final": cfg.t_final,
        "scheme": cfg.scheme.value,
        "ic": cfg.ic,
    }
    return json.dumps(keep, sort_keys=True)


def _run_weights(cfg: RunConfig) -> str:
    n = cfg.n if cfg.n is not None else 64
    maker = new_weights if cfg.scheme is Scheme.NEW else grunwald_weights
    ws = maker(cfg.alpha, n)
    sums = ws.partial_sums()
    if cfg.format == "json":
        return json.dumps(
            {
                "alpha": cfg.alpha,
                "scheme": cfg.scheme.value,
                "w": list(ws.w),
                "partial_sum": list(sums),
            },
            sort_keys=True,
        )
    lines = [f"# {_echo(cfg)}", "k,w_k,partial_sum"]
    for k in range(n + 1):
        lines.append(f"{k},{float(ws.w[k])!r},{float(sums[k])!r}")
    return "\n".join(lines) + "\n"


def _run_eigen(cfg: RunConfig) -> str:
    pair = principal_eigenvalue(cfg.alpha)
    if cfg.format == "json":
        return json.dumps(
            {"alpha": pair.alpha, "c": pair.c, "series_terms": pair.series_terms},
            sort_keys=True,
        )
    return (
        f"# {_echo(cfg)}\nalpha,c,series_terms\n"
        f"{pair.alpha!r},{pair.c!r},{pair.series_terms}\n"
    )


def _ic_of(cfg: RunConfig):
    if cfg.ic == "gaussian":
        return GaussianIC(mu=cfg.mu, sigma2=cfg.sigma2)
    if cfg.ic == "eigen":
        return EigenfunctionIC()
    return PowerLawIC(a=cfg.power_a, b=cfg.power_b)


def _run_solve(cfg: RunConfig) -> str:
    n = cfg.n if cfg.n is not None else 100
    econf = EvolutionConfig(
        alpha=cfg.alpha,
        n=n,
        t_final=cfg.t_final,
        scheme=cfg.scheme,
        dt=cfg.dt,
        ic=_ic_of(cfg),
    )
    traj = evolve(econf, keep_states=True)
    x = traj.states[0].x
    if cfg.format == "json":
        return json.dumps(
            {
                "t": list(traj.times),
                "x": list(x),
                "u": [list(s.values) for s in traj.states],
            },
            sort_keys=True,
        )
    lines = [f"# {_echo(cfg)}", "t,x,u"]
    for t, state in zip(traj.times, traj.states):
        for xi, ui in zip(x, state.values):
            lines.append(f"{float(t)!r},{float(xi)!r},{float(ui)!r}")
    return "\n".join(lines) + "\n"


def _default_n_reference(n_list: tuple[int, ...]) -> int:
    # nested fine grid: coarse nodes are shared exactly
    return 8 * (max(n_list) + 1) - 1


def _run_study(cfg: RunConfig) -> str:
    n_list = cfg.n_list or (50, 100, 200, 400)
    if cfg.command == "compare" or cfg.ic == "gaussian":
        n_ref = cfg.n_reference or _default_n_reference(n_list)
        report = figure1_comparison(
            sigma2=cfg.sigma2,
            mu=cfg.mu,
            alpha=cfg.alpha,
            t_final=cfg.t_final,
            n_list=n_list,
            n_reference=n_ref,
        )
    elif cfg.ic == "eigen":
        report = eigen_decay_study(
            cfg.alpha, n_list, cfg.t_final, scheme=cfg.scheme
        )
    else:
        report = operator_consistency_study(cfg.alpha, n_list)
    return report.to_json() if cfg.format == "json" else report.to_csv()


def run(cfg: RunConfig) -> int:
    """Execute a parsed config; writes to cfg.out or stdout. Returns exit status."""
    body = {
        "weights": _run_weights,
        "eigen": _run_eigen,
        "solve": _run_solve,
        "converge": _run_study,
        "compare": _run_study,
    }[cfg.command](cfg)
    if cfg.out is None:
        sys.stdout.write(body)
    else:
        with open(cfg.out, "w") as fh:
            fh.write(body)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cfg = parse_config(argv)
        return run(cfg)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    except DomainError as exc:
        print(f"fracheat: usage error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, NumericalError) as exc:
        print(f"fracheat: numerical error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"fracheat: i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
