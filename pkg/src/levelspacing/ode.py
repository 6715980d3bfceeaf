"""Trajectory construction for the six transcendents.

Each ODE is second order and second degree, (s sigma'')^2 = F(s, sigma,
sigma'), solved away from zero starting where the boundary series stops
being exact enough. All six physical solutions ride saddles: the
linearized modes around them grow like exp(+-x) for the sine-kernel pair
and exp(+-2 sqrt(x)) for the Bessel family, so a one-sided sweep
amplifies its early error beyond every tolerance of interest before the
argument range ends. The transcendents are therefore solved as two-point
boundary value problems: the boundary series pins the near end exactly,
the large-argument expansion pins the far end, and collocation suppresses
both runaway modes at once.

Two formulations are used. The non-tilde Bessel members are propagated
in the Painleve V variable u (the same change of variables the redundant
cross-route uses), whose equation is rational and branch-free. The
remaining four are solved in the native variable via the differentiated
third-order form, regular here because sigma'' is sign-definite on the
physical range of every member.

The square-root form sigma'' = branch * sqrt(F)/s remains the pointwise
closure for states on the manifold: it powers sigma_dd, the u map, and
the residual diagnostics; branch flips would show up as F crossing zero
and are tracked on every trajectory (none occur on the physical range).

The running integral I(x) = int_0^x sigma(t)/t dt is carried as an extra
state everywhere, initialized from the exact termwise series integral, so
gap probabilities never re-quadrature a trajectory.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
import sympy as sp
from scipy.integrate import solve_bvp, solve_ivp

from .catalog import (PI, S, Y, Y1, TranscendentId, TranscendentSpec, lookup,
                      residual as catalog_residual)
from .errors import (BranchAmbiguity, DegenerateU, InconsistentSeed,
                     RangeExceeded, StiffnessFailure)
from .series import SeriesExpansion, eval_series, series_integral_term

# solved via the u variable
_U_ROUTE_IDS = (TranscendentId.SIGMA_B, TranscendentId.SIGMA_B_PLUS)
# sine-kernel pair (far expansion in integer powers, faster mode decay)
_SINE_IDS = (TranscendentId.SIGMA_PV, TranscendentId.TILDE_SIGMA)

EPS_MANIFOLD = 1e-8          # tolerated F undershoot before BranchAmbiguity
U_POLE_TOL = 1e-9            # proximity of u to {0, 1} that is degenerate
HANDOFF_TOL = 1e-12          # series vs solver agreement at 2 s0
COLLOCATION_TOL_FLOOR = 1e-10  # double-precision floor of the two-point solver
MAX_BRANCH_FLIPS = 8

# far boundary placement: never below the floor, always past the request;
# floors sit where the frozen far expansions are good to ~1e-12 and the
# decaying mode still insulates the interior from far-end truncation
_TOP_FLOOR = {tid: 40.0 if tid in _SINE_IDS else 350.0 for tid in TranscendentId}
_TOP_FACTOR = 1.1
# one-sided sweeps are only initial guesses; cap them where saddle drift
# is still small compared to what Newton iteration tolerates
_SWEEP_CAP = {tid: 25.0 if tid in _SINE_IDS else 150.0 for tid in TranscendentId}


# ---------------------------------------------------------------------------
# pointwise operations


@lru_cache(maxsize=None)
def _F_fn(tid: TranscendentId, reading: str) -> Callable[[float, float, float], float]:
    spec = lookup(tid, reading)
    return sp.lambdify((S, Y, Y1), spec.F.subs(PI, sp.pi), modules="math")


def initial_branch(spec: TranscendentSpec) -> int:
    """Sign of sigma'' just above zero, read off the boundary series."""
    s = 1e-8
    acc = 0.0
    for e, c in spec.seed.terms:
        ef = float(e)
        acc += (c[0] / c[1]) * math.pi ** c[2] * ef * (ef - 1.0) * s ** (ef - 2.0)
    if acc == 0.0:
        raise ValueError(f"{spec.id.value}: seed gives no curvature sign")
    return 1 if acc > 0 else -1


def sigma_dd(spec: TranscendentSpec, s: float, sigma: float, sigma_d: float,
             branch: int, eps_manifold: float = EPS_MANIFOLD) -> float:
    """Solve the ODE for sigma'' on the given square-root branch.

    F slightly negative is numerical manifold drift and clamps to zero;
    beyond eps_manifold it means the state left the solution manifold.
    """
    if s <= 0:
        raise ValueError("argument must be positive")
    F = _F_fn(spec.id, spec.reading)(s, sigma, sigma_d)
    if F < -eps_manifold:
        raise BranchAmbiguity(
            f"{spec.id.value}: F = {F:.3e} < -{eps_manifold:.1e} at s = {s:.6g}")
    return branch * math.sqrt(max(F, 0.0)) / s


@dataclass(frozen=True)
class PainleveVState:
    """State of the auxiliary Painleve V variable at one argument."""

    x: float
    u: float
    u_d: float
    params: Optional[tuple[float, float, float, float]]  # (alpha, beta, gamma, delta)


def cs_map_to_u(spec: TranscendentSpec, state: tuple[float, float, float],
                branch: Optional[int] = None) -> PainleveVState:
    """Map one (s, sigma, sigma') state to the auxiliary u variable.

    u = u_base + u_sign * s sigma'/sigma; the Bessel family inverts its
    change of variables to Painleve V (u = 1 - s sigma'/sigma), the
    sine-kernel pair takes the bare log-derivative (u = s sigma'/sigma),
    forced by the derivative identity between the pair. u_d is recovered
    through sigma'' on the ODE manifold.
    """
    if spec.u_sign is None:
        raise ValueError(f"{spec.id.value} has no u route")
    s, sigma, sigma_d_v = state
    if sigma == 0.0 or not math.isfinite(sigma):
        raise DegenerateU(f"sigma = {sigma} at s = {s:.6g}")
    if branch is None:
        branch = initial_branch(spec)
    us = spec.u_sign
    r = s * sigma_d_v / sigma
    u = spec.u_base + us * r
    if min(abs(u), abs(u - 1.0)) < U_POLE_TOL:
        raise DegenerateU(f"u = {u:.3e} within {U_POLE_TOL:.1e} of a pole at s = {s:.6g}")
    sdd = sigma_dd(spec, s, sigma, sigma_d_v, branch)
    u_d = us * (sigma_d_v / sigma + s * sdd / sigma - r * sigma_d_v / sigma)
    params = None
    if spec.sd_coefficients is not None:
        cs = spec.sd_coefficients
        params = (float(cs.alpha), float(cs.beta), float(cs.gamma), float(cs.delta))
    return PainleveVState(x=s, u=u, u_d=u_d, params=params)


def tilde_from_u(sigma_value: float, u: float,
                 offset: Fraction = Fraction(1, 2)) -> float:
    """Tilde companion value from the base transcendent and u.

    The default offset is the Bessel-kernel one; the plus family uses
    3/2 and the sine-kernel pair 0 (catalog tilde_offset).
    """
    return sigma_value + (u - 1.0) + float(offset)


# ---------------------------------------------------------------------------
# far expansions (frozen tables)


@lru_cache(maxsize=None)
def _asym_tables(tid: TranscendentId) -> tuple[np.ndarray, np.ndarray]:
    from . import _frozen

    terms = _frozen.ASYMPTOTES[tid.value]["terms"]
    coefs = np.array([n / d for n, d, _, _ in terms])
    powers = np.array([pn / pd for _, _, pn, pd in terms])
    return coefs, powers


def asym_eval(tid: TranscendentId, x: float) -> tuple[float, float]:
    """(sigma, sigma') from the frozen large-argument expansion."""
    coefs, powers = _asym_tables(tid)
    xp = x ** powers
    sigma = float(np.dot(coefs, xp))
    sigma_d = float(np.dot(coefs * powers, xp / x))
    return sigma, sigma_d


# ---------------------------------------------------------------------------
# trajectory container


class SolutionTrajectory:
    """Immutable dense solution of one transcendent on (0, s_end].

    Below s0 evaluation delegates to the boundary series (exact to well
    under the solver tolerance there); above s0 the collocation dense
    interpolant is used. The running integral I is a genuine state on
    both sides of the junction.
    """

    def __init__(self, spec: TranscendentSpec, series: SeriesExpansion,
                 s0: float, s_end: float, nodes: np.ndarray,
                 dense: Callable[[np.ndarray], np.ndarray],
                 branch_flips: tuple[float, ...],
                 tolerance_profile: tuple[float, float],
                 audits: dict[str, float]):
        self.id = spec.id
        self.spec = spec
        self.series = series
        self.s0 = float(s0)
        self.s_end = float(s_end)
        self.nodes = nodes  # columns: s, sigma, sigma', sigma''
        self._dense = dense  # maps x-array -> rows (sigma, sigma', I)
        self.branch_flips = branch_flips
        self.tolerance_profile = tolerance_profile
        self.audits = audits
        self.nodes.setflags(write=False)

    def _split(self, x) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        x_arr = np.atleast_1d(np.asarray(x, dtype=float))
        if np.any(x_arr <= 0.0):
            raise RangeExceeded(f"{self.id.value}: argument must be positive")
        if np.any(x_arr > self.s_end * (1.0 + 1e-12)):
            raise RangeExceeded(
                f"{self.id.value}: argument beyond trajectory end {self.s_end:.6g}")
        low = x_arr <= self.s0
        return x_arr, low, ~low

    def dense_eval(self, x):
        """(sigma, sigma', I) at x, scalar or array."""
        x_arr, low, high = self._split(x)
        out = np.empty((3, x_arr.size))
        if low.any():
            v, d1, _ = eval_series(self.series, x_arr[low])
            out[0, low] = v
            out[1, low] = d1
            out[2, low] = series_integral_term(self.series, x_arr[low])
        if high.any():
            out[:, high] = self._dense(x_arr[high])
        if np.isscalar(x) or np.asarray(x).ndim == 0:
            return float(out[0, 0]), float(out[1, 0]), float(out[2, 0])
        return out[0], out[1], out[2]

    def sigma(self, x):
        return self.dense_eval(x)[0]

    def sigma_d(self, x):
        return self.dense_eval(x)[1]

    def integral(self, x):
        """I(x) = int_0^x sigma(t)/t dt."""
        return self.dense_eval(x)[2]

    def content_hash(self) -> str:
        h = hashlib.sha256()
        h.update(self.nodes.tobytes())
        h.update(repr(self.tolerance_profile).encode())
        return h.hexdigest()[:16]


# ---------------------------------------------------------------------------
# two-point collocation


def _bvp_mesh(x0: float, x_top: float, n: int = 400) -> np.ndarray:
    xm = np.linspace(math.sqrt(x0), math.sqrt(x_top), n) ** 2
    xm[0], xm[-1] = x0, x_top  # exact endpoints; near-duplicates are fatal
    return xm


def _far_guess_fill(spec: TranscendentSpec, ym: np.ndarray, xm: np.ndarray,
                    low: np.ndarray, rows: dict, prev: tuple) -> None:
    """Continue an initial guess past the sweep with the far expansion."""
    prev_x, prev_I, prev_sig = prev
    eps = 1e-6
    for idx in np.nonzero(~low)[0]:
        x = xm[idx]
        sg, sgd = asym_eval(spec.id, x)
        _, sgd2 = asym_eval(spec.id, x + eps)
        I_here = prev_I + 0.5 * (prev_sig / prev_x + sg / x) * (x - prev_x)
        if "u" in rows:
            u = 1.0 - x * sgd / sg
            sg2, _ = asym_eval(spec.id, x + eps)
            u2 = 1.0 - (x + eps) * (sgd2 / sg2 if sg2 else 0.0)
            ym[rows["u"], idx] = u
            ym[rows["u_d"], idx] = (u2 - u) / eps
        if "y" in rows:
            ym[rows["y"], idx] = sg
            ym[rows["y1"], idx] = sgd
            ym[rows["y2"], idx] = (sgd2 - sgd) / eps
        if "sigma" in rows:
            ym[rows["sigma"], idx] = sg
        ym[rows["I"], idx] = I_here
        prev_x, prev_I, prev_sig = x, I_here, sg


def _solve_u_route(spec: TranscendentSpec, series: SeriesExpansion,
                   s_end: float, rel_tol: float):
    """States (u, u', sigma, I) between series zone and far expansion."""
    cs = spec.sd_coefficients
    al, be, ga = float(cs.alpha), float(cs.beta), float(cs.gamma)
    x0 = series.trust_radius / 2.0
    x_top = max(_TOP_FACTOR * s_end, _TOP_FLOOR[spec.id])
    v0, d0, dd0 = eval_series(series, x0)
    I0 = series_integral_term(series, x0)
    u0 = 1.0 - x0 * d0 / v0
    up0 = -(d0 / v0 + x0 * dd0 / v0 - x0 * (d0 / v0) ** 2)
    sig_t, sigd_t = asym_eval(spec.id, x_top)
    u_top = 1.0 - x_top * sigd_t / sig_t

    def rhs(x, y):
        u, up, sg = y[0], y[1], y[2]
        upp = ((0.5 / u + 1.0 / (u - 1.0)) * up**2 - up / x
               + ((u - 1.0) ** 2 / x**2) * (al * u + be / u) + ga * u / x)
        return np.vstack([up, upp, -sg * (u - 1.0) / x, sg / x])

    def bc(ya, yb):
        return np.array([ya[0] - u0, ya[2] - v0, ya[3] - I0, yb[0] - u_top])

    def fwd(x, y):
        return [row[0] for row in rhs(x, np.array(y).reshape(4, 1))]

    x_sweep = min(_SWEEP_CAP[spec.id], x_top)
    sweep = solve_ivp(fwd, (x0, x_sweep), [u0, up0, v0, I0], method="DOP853",
                      rtol=1e-10, atol=1e-12, dense_output=True)
    xm = _bvp_mesh(x0, x_top)
    ym = np.empty((4, xm.size))
    low = xm <= sweep.t[-1]
    ym[:, low] = sweep.sol(xm[low])
    if (~low).any():
        _far_guess_fill(spec, ym, xm, low, {"u": 0, "u_d": 1, "sigma": 2, "I": 3},
                        (sweep.t[-1], sweep.y[3][-1], sweep.y[2][-1]))

    tol = max(rel_tol, COLLOCATION_TOL_FLOOR)
    sol = solve_bvp(rhs, bc, xm, ym, tol=tol, max_nodes=200000)
    if not sol.success:
        raise StiffnessFailure(f"{spec.id.value}: collocation failed: {sol.message}")

    audits = {
        "u_slope_bottom": abs(sol.sol(x0)[1] - up0),
        "sigma_top": abs(sol.sol(x_top)[2] - sig_t),
    }

    def dense(x_arr: np.ndarray) -> np.ndarray:
        u, up, sg, I = sol.sol(x_arr)
        sgd = -sg * (u - 1.0) / x_arr
        return np.vstack([sg, sgd, I])

    node_s = sol.x
    u, up, sg, I = sol.y
    sgd = -sg * (u - 1.0) / node_s
    sgdd = -(sgd * (u - 1.0) + sg * up) / node_s + sg * (u - 1.0) / node_s**2
    nodes = np.column_stack([node_s, sg, sgd, sgdd])
    return x0, x_top, nodes, dense, (tol, tol), audits


def _solve_direct(spec: TranscendentSpec, series: SeriesExpansion,
                  s_end: float, rel_tol: float):
    """States (y, y', y'', I): differentiated third-order form.

    d/ds of (s y'')^2 = F gives y''' = (G / (2 s y'') - y'') / s with
    G = F_s + F_y y' + F_{y'} y''; regular while y'' is sign-definite,
    which holds on the physical branch of every member solved this way.
    """
    y2s = sp.Symbol("y2")
    G_expr = (sp.diff(spec.F, S) + sp.diff(spec.F, Y) * Y1
              + sp.diff(spec.F, Y1) * y2s)
    G_fn = sp.lambdify((S, Y, Y1, y2s), G_expr.subs(PI, sp.pi), modules="numpy")

    x0 = series.trust_radius / 2.0
    x_top = max(_TOP_FACTOR * s_end, _TOP_FLOOR[spec.id])
    v0, d0, dd0 = eval_series(series, x0)
    I0 = series_integral_term(series, x0)
    sig_t, _ = asym_eval(spec.id, x_top)

    def rhs(x, y):
        y3 = (G_fn(x, y[0], y[1], y[2]) / (2.0 * x * y[2]) - y[2]) / x
        return np.vstack([y[1], y[2], y3, y[0] / x])

    def bc(ya, yb):
        return np.array([ya[0] - v0, ya[1] - d0, ya[3] - I0, yb[0] - sig_t])

    def fwd(x, y):
        y3 = (G_fn(x, y[0], y[1], y[2]) / (2.0 * x * y[2]) - y[2]) / x
        return [y[1], y[2], y3, y[0] / x]

    x_sweep = min(_SWEEP_CAP[spec.id], x_top)
    sweep = solve_ivp(fwd, (x0, x_sweep), [v0, d0, dd0, I0],
                      method="DOP853", rtol=1e-10, atol=1e-12,
                      dense_output=True)
    xm = _bvp_mesh(x0, x_top)
    ym = np.empty((4, xm.size))
    low = xm <= sweep.t[-1]
    ym[:, low] = sweep.sol(xm[low])
    if (~low).any():
        _far_guess_fill(spec, ym, xm, low, {"y": 0, "y1": 1, "y2": 2, "I": 3},
                        (sweep.t[-1], sweep.y[3][-1], sweep.y[0][-1]))

    tol = max(rel_tol, COLLOCATION_TOL_FLOOR)
    sol = solve_bvp(rhs, bc, xm, ym, tol=tol, max_nodes=200000)
    if not sol.success:
        raise StiffnessFailure(f"{spec.id.value}: collocation failed: {sol.message}")

    audits = {
        "curvature_bottom": abs(sol.sol(x0)[2] - dd0),
        "sigma_top": abs(sol.sol(x_top)[0] - sig_t),
    }

    def dense(x_arr: np.ndarray) -> np.ndarray:
        y0, y1v, _, I = sol.sol(x_arr)
        return np.vstack([y0, y1v, I])

    nodes = np.column_stack([sol.x, sol.y[0], sol.y[1], sol.y[2]])
    return x0, x_top, nodes, dense, (tol, tol), audits


def _handoff_audit(traj: SolutionTrajectory) -> None:
    """Series and solver must agree where their domains overlap."""
    x_a = 2.0 * traj.s0  # = trust radius, the last point the series owns
    v_series, _, _ = eval_series(traj.series, x_a)
    v_num = float(traj._dense(np.array([x_a]))[0, 0])
    gap = abs(v_num - v_series)
    traj.audits["handoff"] = gap
    if gap > HANDOFF_TOL:
        raise InconsistentSeed(
            traj.series.order,
            f"{traj.id.value}: series/solver mismatch {gap:.2e} at "
            f"s = {x_a:.6g} (allowed {HANDOFF_TOL:.0e})")


def integrate(spec: TranscendentSpec, series: SeriesExpansion, s_end: float,
              rel_tol: float = 1e-12) -> SolutionTrajectory:
    """Dense trajectory of one transcendent out to s_end (its own argument).

    The series must belong to the same transcendent; the numeric zone
    starts at s0 = trust_radius/2 and the returned trajectory evaluates
    on all of (0, s_end] (series zone included). The far boundary is
    placed beyond s_end, so the trajectory actually extends a bit past
    the request; s_end below reflects the guaranteed range.
    """
    if series.id is not spec.id:
        raise ValueError("series/spec transcendent mismatch")
    if not s_end > series.trust_radius:
        raise ValueError(
            f"s_end = {s_end:.6g} must exceed the series trust radius "
            f"{series.trust_radius:.6g}")
    if not rel_tol >= 1e-13:
        raise ValueError("rel_tol below 1e-13 is not honest in doubles")
    if spec.id in _U_ROUTE_IDS:
        x0, x_top, nodes, dense, tolp, audits = _solve_u_route(
            spec, series, s_end, rel_tol)
    else:
        x0, x_top, nodes, dense, tolp, audits = _solve_direct(
            spec, series, s_end, rel_tol)

    sdd = nodes[:, 3]
    signs = np.sign(sdd[np.abs(sdd) > 1e-13])
    flips: tuple[float, ...] = ()
    if signs.size and not (signs == signs[0]).all():
        flip_at = nodes[1:, 0][np.diff(np.sign(sdd)) != 0]
        flips = tuple(float(v) for v in flip_at)
        if len(flips) > MAX_BRANCH_FLIPS:
            raise StiffnessFailure(
                f"{spec.id.value}: more than {MAX_BRANCH_FLIPS} branch flips")

    traj = SolutionTrajectory(
        spec, series, x0, x_top, nodes, dense, flips, tolp, audits)
    _handoff_audit(traj)
    return traj


def tilde_via_u_route(base_traj: SolutionTrajectory, x):
    """Tilde companion values from the base trajectory, algebraic route.

    Composes the u map with the affine tilde relation at each x; the
    direct integration of the tilde ODE is the production route and this
    is the redundant one the cross-checks compare against.
    """
    spec = base_traj.spec
    if spec.tilde_partner is None:
        raise ValueError(f"{spec.id.value} has no tilde companion")
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    sg, sgd, _ = base_traj.dense_eval(x_arr)
    sg = np.atleast_1d(sg)
    sgd = np.atleast_1d(sgd)
    out = np.empty_like(sg)
    for i in range(x_arr.size):
        st = cs_map_to_u(spec, (float(x_arr[i]), float(sg[i]), float(sgd[i])))
        out[i] = tilde_from_u(float(sg[i]), st.u, Fraction(spec.tilde_offset))
    if np.isscalar(x) or np.asarray(x).ndim == 0:
        return float(out[0])
    return out


def residual_at_nodes(traj: SolutionTrajectory) -> np.ndarray:
    """Catalog residual at every stored node (drift diagnostic)."""
    out = np.empty(traj.nodes.shape[0])
    for i, (s, v, d1, d2) in enumerate(traj.nodes):
        out[i] = catalog_residual(traj.spec, s, v, d1, d2)
    return out
