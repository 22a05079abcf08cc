"""Backward-Euler time integration of u' = M_h u with a structure-exploiting solver.

(I - dt*M_h) is a nonsingular M-matrix (diagonal 1 + dt*|w_1|/h^alpha >= 1,
nonpositive off-diagonals, row sums >= 1), so Gaussian elimination needs no
pivoting. The lower-Hessenberg shape means each elimination step touches only
the single superdiagonal entry of the pivot row: the factorization is O(n^2)
with a dense unit-lower-triangular factor and an upper-bidiagonal factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np
from scipy.linalg import solve_banded, solve_triangular

from .errors import DomainError, NumericalError
from .operators import GridFunction, OperatorMatrix, build_operator
from .weights import Scheme


# ---------------------------------------------------------------------------
# initial-condition descriptors

@dataclass(frozen=True)
class GaussianIC:
    mu: float = 0.4
    sigma2: float = 0.0005


@dataclass(frozen=True)
class EigenfunctionIC:
    pass


@dataclass(frozen=True)
class PowerLawIC:
    """a*x^(alpha-1) + b*x^(2alpha-1), the singular part of smooth initial data."""

    a: float = 1.0
    b: float = 0.0


@dataclass(frozen=True)
class CustomIC:
    values: np.ndarray = field(repr=False)


InitialCondition = Union[GaussianIC, EigenfunctionIC, PowerLawIC, CustomIC]


@dataclass(frozen=True)
class EvolutionConfig:
    alpha: float
    n: int
    t_final: float
    scheme: Scheme = Scheme.NEW
    dt: Optional[float] = None  # default h^alpha
    ic: InitialCondition = GaussianIC()

    def __post_init__(self):
        if self.n < 3:
            raise DomainError(f"n must be >= 3, got {self.n}")
        if self.t_final < 0.0:
            raise DomainError(f"t_final must be >= 0, got {self.t_final}")
        if self.dt is not None and self.dt <= 0.0:
            raise DomainError(f"dt must be > 0, got {self.dt}")
        if self.dt is not None and self.t_final > 0.0 and self.dt > self.t_final:
            raise DomainError("dt must not exceed t_final")

    @property
    def h(self) -> float:
        return 1.0 / (self.n + 1)

    def effective_dt(self) -> float:
        return self.dt if self.dt is not None else self.h**self.alpha


# ---------------------------------------------------------------------------
# Hessenberg factorization of (sigma*I - tau*T)

@dataclass(frozen=True)
class HessenbergFactorization:
    alpha: float
    n: int
    dt: float
    lower: np.ndarray = field(repr=False)   # dense unit lower triangular
    banded: np.ndarray = field(repr=False)  # (2, n) for solve_banded: pivots + superdiag


def _factor_shifted(op: OperatorMatrix, sigma: float, tau: float, dt: float) -> HessenbergFactorization:
    """LU of sigma*I - tau*T without pivoting, T the Toeplitz stencil matrix."""
    w = op.weights.w
    n = op.n
    sup = -tau * w[0]  # constant superdiagonal
    base = np.empty(n)
    base[0] = sigma - tau * w[1]
    base[1:] = -tau * w[2 : n + 1]
    lower = np.zeros((n, n))
    pivots = np.empty(n)
    col = base.copy()
    for j in range(n - 1):
        piv = col[0]
        if piv <= 0.0:
            raise NumericalError(f"nonpositive pivot {piv} at column {j}")
        pivots[j] = piv
        m = col[1:] / piv
        lower[j + 1 :, j] = m
        col = base[: n - 1 - j] - m * sup
    if col[0] <= 0.0:
        raise NumericalError(f"nonpositive pivot {col[0]} at column {n - 1}")
    pivots[n - 1] = col[0]
    np.fill_diagonal(lower, 1.0)
    banded = np.zeros((2, n))
    banded[0, 1:] = sup
    banded[1, :] = pivots
    return HessenbergFactorization(alpha=op.alpha, n=n, dt=dt, lower=lower, banded=banded)


def factorize(op: OperatorMatrix, dt: float) -> HessenbergFactorization:
    """Factor (I - dt*M_h) for the backward-Euler step."""
    if dt <= 0.0:
        raise DomainError(f"dt must be > 0, got {dt}")
    return _factor_shifted(op, 1.0, dt / op.h**op.alpha, dt)


def _solve(f: HessenbergFactorization, b: np.ndarray) -> np.ndarray:
    y = solve_triangular(f.lower, b, lower=True, unit_diagonal=True, check_finite=False)
    return solve_banded((0, 1), f.banded, y, check_finite=False)


def step(f: HessenbergFactorization, u: GridFunction) -> GridFunction:
    """One backward-Euler step: solve (I - dt*M_h) v = u."""
    if u.n != f.n:
        raise DomainError(f"dimension mismatch: factorization n={f.n}, grid n={u.n}")
    return GridFunction(alpha=u.alpha, n=u.n, values=_solve(f, u.values))


def resolvent_apply(op: OperatorMatrix, lam: float, g: GridFunction) -> GridFunction:
    """Solve (lam*I - M_h) v = g for lam >= 0; lam = 0 is the negative inverse."""
    if lam < 0.0:
        raise DomainError(f"resolvent parameter must be >= 0, got {lam}")
    if g.n != op.n:
        raise DomainError(f"dimension mismatch: operator n={op.n}, grid n={g.n}")
    f = _factor_shifted(op, lam, 1.0 / op.h**op.alpha, dt=0.0)
    return GridFunction(alpha=op.alpha, n=op.n, values=_solve(f, g.values))


# ---------------------------------------------------------------------------
# full trajectories

@dataclass(frozen=True)
class Trajectory:
    config: EvolutionConfig
    times: np.ndarray
    states: Sequence[GridFunction]        # all steps, or [u0, u_final] if not kept
    sup_norms: np.ndarray                 # per recorded time
    l1_norms: np.ndarray

    @property
    def final(self) -> GridFunction:
        return self.states[-1]


def initial_grid(cfg: EvolutionConfig) -> GridFunction:
    """Sample the configured initial condition at the interior nodes."""
    x = np.arange(1, cfg.n + 1) * cfg.h
    ic = cfg.ic
    if isinstance(ic, GaussianIC):
        from .reference import gaussian_ic

        vals = gaussian_ic(x, ic.mu, ic.sigma2)
    elif isinstance(ic, EigenfunctionIC):
        from .reference import eigenfunction_u_c, principal_eigenvalue

        pair = principal_eigenvalue(cfg.alpha)
        vals = np.array([eigenfunction_u_c(cfg.alpha, pair.c, xi) for xi in x])
    elif isinstance(ic, PowerLawIC):
        vals = ic.a * x ** (cfg.alpha - 1.0) + ic.b * x ** (2.0 * cfg.alpha - 1.0)
    elif isinstance(ic, CustomIC):
        vals = np.asarray(ic.values, dtype=float)
    else:
        raise DomainError(f"unknown initial condition {ic!r}")
    return GridFunction(alpha=cfg.alpha, n=cfg.n, values=vals)


def evolve(cfg: EvolutionConfig, keep_states: bool = True) -> Trajectory:
    """Integrate to t_final with backward Euler; one factorization reused throughout.

    The step count is ceil(t_final/dt) with dt shrunk to land on t_final
    exactly. With ``keep_states=False`` only the initial and final grids are
    retained (norms are always recorded per step).
    """
    u = initial_grid(cfg)
    if cfg.t_final == 0.0:
        z = np.array([0.0])
        return Trajectory(cfg, z, [u], np.array([u.sup_norm()]), np.array([u.l1_norm()]))
    dt0 = cfg.effective_dt()
    steps = max(1, math.ceil(cfg.t_final / dt0 - 1e-12))
    dt = cfg.t_final / steps
    op = build_operator(cfg.alpha, cfg.n, cfg.scheme)
    f = factorize(op, dt)
    times = np.arange(steps + 1) * dt
    states = [u]
    sups = [u.sup_norm()]
    l1s = [u.l1_norm()]
    for _ in range(steps):
        u = step(f, u)
        sups.append(u.sup_norm())
        l1s.append(u.l1_norm())
        if keep_states:
            states.append(u)
    if not keep_states:
        states.append(u)
    return Trajectory(cfg, times, states, np.array(sups), np.array(l1s))
