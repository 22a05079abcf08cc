"""Grid-refinement convergence studies and the Figure-1 style scheme comparison.

Error reports are plain rows (scheme, alpha, n, h, dt, norm, error,
observed_order) emitted as CSV or JSON. Observed orders on a row are the
log-ratio against the previous row of the same chain; ``observed_order``
computes the least-squares slope over a whole chain.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .errors import DomainError
from .evolution import CustomIC, EvolutionConfig, evolve
from .interp import from_grid
from .operators import GridFunction, apply, build_operator
from .reference import (
    eigenfunction_u_c,
    gaussian_ic,
    principal_eigenvalue,
)
from .specfun import gamma
from .weights import Scheme

CSV_HEADER = "scheme,alpha,n,h,dt,norm,error,observed_order"


@dataclass(frozen=True)
class ErrorRow:
    scheme: str
    alpha: float
    n: int
    h: float
    dt: float
    norm: str  # "sup" or "L1"
    error: float
    observed_order: Optional[float] = None


@dataclass
class ErrorReport:
    rows: list[ErrorRow] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def chain(self, scheme: Scheme | str, norm: str = "sup") -> list[tuple[float, float]]:
        name = scheme.value if isinstance(scheme, Scheme) else scheme
        return [(r.h, r.error) for r in self.rows if r.scheme == name and r.norm == norm]

    def overall_order(self, scheme: Scheme | str, norm: str = "sup") -> float:
        return observed_order(self.chain(scheme, norm))

    def to_csv(self) -> str:
        lines = [f"# {json.dumps(self.meta, sort_keys=True)}", CSV_HEADER]
        for r in self.rows:
            oo = "" if r.observed_order is None else repr(r.observed_order)
            lines.append(
                f"{r.scheme},{r.alpha!r},{r.n},{r.h!r},{r.dt!r},{r.norm},{r.error!r},{oo}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {"meta": self.meta, "rows": [asdict(r) for r in self.rows]},
            sort_keys=True,
            indent=2,
        )


def error_norms(
    u: GridFunction, ref: Union[Callable[[float], float], GridFunction]
) -> dict[str, float]:
    """Sup and L1 error of u against a callable or a finer-grid reference.

    A finer GridFunction reference is read at the coarse nodes directly when
    the node sets nest, and through its power interpolant otherwise.
    """
    x = u.x
    if isinstance(ref, GridFunction):
        if ref.n < u.n:
            raise DomainError("reference grid must be at least as fine")
        if (ref.n + 1) % (u.n + 1) == 0:
            stride = (ref.n + 1) // (u.n + 1)
            rv = ref.values[stride - 1 :: stride][: u.n]
        else:
            p = from_grid(ref.values, ref.alpha)
            rv = p(x)
    else:
        rv = np.array([ref(xi) for xi in x])
    diff = np.abs(u.values - rv)
    return {"sup": float(diff.max()), "L1": float(u.h * diff.sum())}


def observed_order(chain: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of log(error) vs log(h) over a refinement chain."""
    if len(chain) < 2:
        raise DomainError("observed_order needs at least 2 rows")
    h = np.array([c[0] for c in chain])
    e = np.array([c[1] for c in chain])
    if np.any(e <= 0.0):
        raise DomainError("observed order undefined for nonpositive errors")
    return float(np.polyfit(np.log(h), np.log(e), 1)[0])


def _pair_order(prev: Optional[ErrorRow], h: float, err: float) -> Optional[float]:
    if prev is None or prev.error <= 0.0 or err <= 0.0:
        return None
    return math.log(prev.error / err) / math.log(prev.h / h)


def _snapped_dt(t_final: float, dt0: float) -> float:
    steps = max(1, math.ceil(t_final / dt0 - 1e-12))
    return t_final / steps


def eigen_decay_study(
    alpha: float,
    n_list: Sequence[int],
    t_final: float,
    scheme: Scheme = Scheme.NEW,
    dt_exponent: Optional[float] = None,
) -> ErrorReport:
    """Evolve the projected principal eigenfunction and compare with e^(ct) u_c.

    dt = h^(alpha+0.5) by default: the extra half order keeps the O(dt) Euler
    error below the O(h^alpha) spatial target across the chain.
    """
    if dt_exponent is None:
        dt_exponent = alpha + 0.5
    pair = principal_eigenvalue(alpha)
    if t_final <= max(1.0 / (n + 1) for n in n_list) ** alpha:
        raise DomainError("t_final must exceed the coarsest h^alpha")
    report = ErrorReport(
        meta={
            "study": "eigen_decay",
            "alpha": alpha,
            "t_final": t_final,
            "dt_exponent": dt_exponent,
            "c": pair.c,
            "norm": "sup",
        }
    )
    decay = math.exp(pair.c * t_final)
    prev = None
    for n in sorted(n_list):
        h = 1.0 / (n + 1)
        dt = _snapped_dt(t_final, h**dt_exponent)
        x = np.arange(1, n + 1) * h
        u0 = np.array([eigenfunction_u_c(alpha, pair.c, xi) for xi in x])
        cfg = EvolutionConfig(
            alpha=alpha, n=n, t_final=t_final, scheme=scheme, dt=dt, ic=CustomIC(u0)
        )
        final = evolve(cfg, keep_states=False).final
        err = float(np.abs(final.values - decay * u0).max())
        row = ErrorRow(
            scheme=scheme.value,
            alpha=alpha,
            n=n,
            h=h,
            dt=dt,
            norm="sup",
            error=err,
            observed_order=_pair_order(prev, h, err),
        )
        report.rows.append(row)
        prev = row
    return report


def figure1_comparison(
    sigma2: float,
    mu: float,
    alpha: float,
    t_final: float,
    n_list: Sequence[int],
    n_reference: int,
) -> ErrorReport:
    """Both schemes against a fine-grid new-scheme self-reference, Gaussian data.

    A single time step, snapped from h_min^(alpha+0.5) of the finest entry in
    n_list, is shared by every run including the reference so that the
    backward-Euler error cancels to leading order in the comparison. The
    reference is read at coarse nodes directly when the grids nest and through
    power interpolation otherwise. Errors are relative sup norm (divided by
    the reference sup norm).
    """
    n_list = sorted(n_list)
    if n_reference < 8 * n_list[-1]:
        raise DomainError("n_reference must be at least 8 * max(n_list)")
    dt = _snapped_dt(t_final, (1.0 / (n_list[-1] + 1)) ** (alpha + 0.5))

    def run(scheme: Scheme, n: int) -> GridFunction:
        cfg = EvolutionConfig(
            alpha=alpha,
            n=n,
            t_final=t_final,
            scheme=scheme,
            dt=dt,
            ic=CustomIC(gaussian_ic(np.arange(1, n + 1) / (n + 1), mu, sigma2)),
        )
        return evolve(cfg, keep_states=False).final

    ref = run(Scheme.NEW, n_reference)
    ref_sup = ref.sup_norm()
    report = ErrorReport(
        meta={
            "study": "figure1_comparison",
            "alpha": alpha,
            "mu": mu,
            "sigma2": sigma2,
            "t_final": t_final,
            "n_reference": n_reference,
            "dt": dt,
            "norm": "relative sup",
        }
    )
    for scheme in (Scheme.NEW, Scheme.GRUNWALD):
        prev = None
        for n in n_list:
            h = 1.0 / (n + 1)
            u = run(scheme, n)
            err = error_norms(u, ref)["sup"] / ref_sup
            row = ErrorRow(
                scheme=scheme.value,
                alpha=alpha,
                n=n,
                h=h,
                dt=dt,
                norm="sup",
                error=err,
                observed_order=_pair_order(prev, h, err),
            )
            report.rows.append(row)
            prev = row
    return report


def operator_consistency_study(alpha: float, n_list: Sequence[int]) -> ErrorReport:
    """Pointwise consistency of the scheme on f = x^(2alpha-1) near x = 0.5.

    The fractional derivative of x^(2alpha-1) is Gamma(2alpha)/Gamma(alpha)
    * x^(alpha-1); the error is measured at the interior node nearest 0.5.
    """
    factor = gamma(2.0 * alpha) / gamma(alpha)
    report = ErrorReport(
        meta={"study": "operator_consistency", "alpha": alpha, "norm": "pointwise@0.5"}
    )
    prev = None
    for n in sorted(n_list):
        h = 1.0 / (n + 1)
        op = build_operator(alpha, n, Scheme.NEW)
        x = np.arange(1, n + 1) * h
        u = GridFunction(alpha=alpha, n=n, values=x ** (2.0 * alpha - 1.0))
        v = apply(op, u).values
        i = int(np.argmin(np.abs(x - 0.5)))
        err = float(abs(v[i] - factor * x[i] ** (alpha - 1.0)))
        row = ErrorRow(
            scheme=Scheme.NEW.value,
            alpha=alpha,
            n=n,
            h=h,
            dt=0.0,
            norm="sup",
            error=err,
            observed_order=_pair_order(prev, h, err),
        )
        report.rows.append(row)
        prev = row
    return report
