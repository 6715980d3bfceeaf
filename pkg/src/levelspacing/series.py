"""Small-argument series for the transcendents, grown from the seeds.

Each transcendent's boundary condition pins a handful of leading
coefficients; every further coefficient is forced by substituting a trial
expansion into the ODE and cancelling order by order. All six expansions
live on the half-integer lattice, so the recurrence works uniformly in
tau = sqrt(s) with integer powers of tau.

The recurrence runs in exact arithmetic over QQ[pi]. At a given residual
order the unknown coefficient enters polynomially (quadratically when a
parity-forced slot meets its own square); when several exact roots
cancel the order, each branch is explored and branches dying in a later
inconsistency are pruned. A surviving pair of branches, or an order that
no choice can cancel, is reported as an error rather than guessed away.

Deep expansions are expensive to regenerate, so coefficients produced
once by this engine are frozen into _frozen.py (see
scripts/freeze_series.py) and re-served from there; the live recurrence
remains the source of truth and the frozen table is checked against it
in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
import sympy as sp

from .catalog import (PI, S, Y, Y1, Y2, TranscendentId, TranscendentSpec,
                      coefficient_to_sympy, lookup)
from .errors import InconsistentSeed, NonUniqueCoefficient, OutOfTrustRadius

TAU = sp.Symbol("tau", positive=True)

# Relative size of the estimated next term at the trust radius.
TRUST_TRUNCATION = 1e-14

# Orders of tau cleared from the residual before polynomial marching
# (removes the negative powers the derivatives introduce).
_CLEAR = 6


@dataclass
class SeriesExpansion:
    """Truncated expansion sigma(s) = sum c_e s^e, exponents in (1/2) Z."""

    id: TranscendentId
    terms: list[tuple[Fraction, sp.Expr]]
    order: Fraction
    trust_radius: float
    reading: str = "primed"
    _flt: Optional[tuple[np.ndarray, np.ndarray]] = field(default=None, repr=False)

    def float_terms(self) -> tuple[np.ndarray, np.ndarray]:
        if self._flt is None:
            exps = np.array([float(e) for e, _ in self.terms])
            coefs = np.array([float(c.subs(PI, sp.pi)) for _, c in self.terms])
            self._flt = (exps, coefs)
        return self._flt


def _seed_slots(spec: TranscendentSpec) -> dict[int, sp.Expr]:
    slots = {}
    for e, c in spec.seed.terms:
        k = e * 2
        if k.denominator != 1:
            raise ValueError("seed exponent off the half-integer lattice")
        slots[int(k)] = coefficient_to_sympy(c)
    return slots


class _Branch:
    """One backtracking branch of the order-marching recurrence."""

    def __init__(self, solved: dict, appearance: dict, history: list):
        self.solved = solved          # unknown symbol -> exact value
        self.appearance = appearance  # slot k -> cleared residual order
        self.history = history        # (order, slot, n_roots) decisions

    def clone(self):
        return _Branch(dict(self.solved), dict(self.appearance), list(self.history))


def _march(residual_terms: dict[int, sp.Expr], target_tau: int,
           branch: _Branch, tid: TranscendentId) -> list[_Branch]:
    """Cancel residual orders ascending; fork on multi-root orders.

    Returns every branch that survives to the truncation horizon.
    """
    orders = sorted(residual_terms)
    pos = 0
    while pos < len(orders):
        j = orders[pos]
        pos += 1
        ex = sp.expand(residual_terms[j].subs(branch.solved))
        if ex == 0:
            continue
        syms = sorted((u for u in ex.free_symbols if u.name.startswith("c")),
                      key=lambda u: int(u.name[1:]))
        horizon = None
        if branch.appearance:
            lag = max(jj - kk for kk, jj in branch.appearance.items())
            horizon = target_tau + 1 + lag
        if not syms:
            if sp.simplify(ex) == 0:
                continue
            if horizon is not None and j >= horizon:
                break  # beyond the truncation horizon: expected garbage
            raise InconsistentSeed(
                Fraction(j - _CLEAR, 2),
                f"{tid.value}: no coefficient cancels order s^{Fraction(j - _CLEAR, 2)}"
                f" (defect {sp.nsimplify(ex)})")
        if len(syms) > 1:
            if horizon is not None and j >= horizon:
                break
            k_low = int(syms[0].name[1:])
            raise NonUniqueCoefficient(
                Fraction(k_low, 2),
                f"{tid.value}: orders {[int(u.name[1:]) for u in syms]} collide at"
                f" s^{Fraction(j - _CLEAR, 2)}; seed does not pin s^{Fraction(k_low, 2)}")
        u = syms[0]
        k = int(u.name[1:])
        roots = sp.roots(sp.Poly(ex, u), u)
        candidates = [sp.cancel(r) for r in roots]
        if len(candidates) == 1:
            branch.solved[u] = candidates[0]
            branch.appearance[k] = j
            continue
        # fork: try each exact root, keep branches that survive
        survivors = []
        for val in candidates:
            child = branch.clone()
            child.solved[u] = val
            child.appearance[k] = j
            child.history.append((Fraction(j - _CLEAR, 2), Fraction(k, 2), len(candidates)))
            try:
                survivors.extend(
                    _march({jj: residual_terms[jj] for jj in orders[pos:]},
                           target_tau, child, tid))
            except (InconsistentSeed, NonUniqueCoefficient):
                continue
        if not survivors:
            raise InconsistentSeed(
                Fraction(j - _CLEAR, 2),
                f"{tid.value}: every root branch at s^{Fraction(j - _CLEAR, 2)} dies later")
        return survivors
    return [branch]


def _run_recurrence(spec: TranscendentSpec, target_tau: int):
    seed = _seed_slots(spec)
    kmin = min(seed)
    coeffs: dict[int, sp.Expr] = {}
    for k in range(kmin, target_tau + 1):
        coeffs[k] = seed.get(k, sp.Symbol(f"c{k}"))
    trial = sum(c * TAU**k for k, c in coeffs.items())
    d1 = sp.diff(trial, TAU) / (2 * TAU)
    d2 = sp.diff(d1, TAU) / (2 * TAU)
    expr = spec.residual_expr.subs({S: TAU**2, Y: trial, Y1: d1, Y2: d2})
    poly = sp.Poly(sp.expand(expr * TAU**_CLEAR), TAU)
    residual_terms = {m[0]: c for m, c in zip(poly.monoms(), poly.coeffs())}

    survivors = _march(residual_terms, target_tau, _Branch({}, {}, []), spec.id)
    if len(survivors) > 1:
        # distinct surviving coefficient sets: genuinely underdetermined
        sets = {tuple(sorted((u.name, sp.srepr(v)) for u, v in b.solved.items()))
                for b in survivors}
        if len(sets) > 1:
            k_fork = min(fr for b in survivors for _, fr, _ in b.history)
            raise NonUniqueCoefficient(
                k_fork, f"{spec.id.value}: {len(sets)} branches survive to order"
                        f" {Fraction(target_tau, 2)}")
    solved = survivors[0].solved
    out = {}
    for k, c in coeffs.items():
        val = solved.get(c, c) if isinstance(c, sp.Symbol) else c
        if isinstance(val, sp.Symbol):
            val = sp.Integer(0)  # slot never appeared: forced zero by parity
        if val != 0:
            out[k] = val
    return out


def _trust_radius(terms: Sequence[tuple[Fraction, sp.Expr]]) -> float:
    (e0, c0), (eL, cL) = terms[0], terms[-1]
    a0 = abs(float(c0.subs(PI, sp.pi)))
    aL = abs(float(cL.subs(PI, sp.pi)))
    if aL == 0.0 or eL == e0:
        return 1.0
    return float((TRUST_TRUNCATION * a0 / aL) ** (1.0 / float(eL - e0)))


def _from_frozen(spec: TranscendentSpec, target_tau: int) -> Optional[list]:
    try:
        from . import _frozen
    except ImportError:
        return None
    key = spec.id.value if spec.reading == "primed" else None
    if key is None or key not in _frozen.SERIES:
        return None
    packed = _frozen.SERIES[key]
    if packed["max_tau"] < target_tau:
        return None
    terms = []
    for k, triples in packed["terms"]:
        if k > target_tau:
            break
        coef = sum(sp.Rational(num, den) * PI**p for num, den, p in triples)
        terms.append((Fraction(k, 2), coef))
    return terms


def extend_series(spec: TranscendentSpec, target_order=6) -> SeriesExpansion:
    """Grow the seed of one transcendent to the requested order in s.

    target_order must be a multiple of 1/2 and at least the largest seed
    exponent. The result satisfies the ODE with residual o(s^target_order)
    and carries a trust radius sized so the estimated next term is below
    TRUST_TRUNCATION relative to the leading one.
    """
    target = Fraction(target_order)
    if (2 * target).denominator != 1:
        raise ValueError("target_order must be a multiple of 1/2")
    if target < spec.seed.max_exponent:
        raise ValueError("target_order below the seed's own order")
    target_tau = int(2 * target)

    terms = _from_frozen(spec, target_tau)
    if terms is None:
        solved = _run_recurrence(spec, target_tau)
        terms = [(Fraction(k, 2), v) for k, v in sorted(solved.items())]

    return SeriesExpansion(
        id=spec.id, terms=terms, order=Fraction(target_tau, 2),
        trust_radius=_trust_radius(terms), reading=spec.reading)


def eval_series(series: SeriesExpansion, s) -> tuple[float, float, float]:
    """Value and first two derivatives of the truncated expansion at s."""
    s_arr = np.asarray(s, dtype=float)
    if np.any(s_arr <= 0.0) or np.any(s_arr > series.trust_radius):
        raise OutOfTrustRadius(
            f"{series.id.value}: s outside (0, {series.trust_radius:.3g}]")
    exps, coefs = series.float_terms()
    p = s_arr[..., None] ** exps
    v = (coefs * p).sum(axis=-1)
    d1 = (coefs * exps * p).sum(axis=-1) / s_arr
    d2 = (coefs * exps * (exps - 1.0) * p).sum(axis=-1) / s_arr**2
    if s_arr.ndim == 0:
        return float(v), float(d1), float(d2)
    return v, d1, d2


def series_integral_term(series: SeriesExpansion, x) -> float:
    """Closed form of int_0^x sigma(t)/t dt for the truncated expansion.

    Termwise c t^e / t integrates to c x^e / e; every exponent is positive
    so the lower endpoint contributes nothing.
    """
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr <= 0.0) or np.any(x_arr > series.trust_radius):
        raise OutOfTrustRadius(
            f"{series.id.value}: x outside (0, {series.trust_radius:.3g}]")
    exps, coefs = series.float_terms()
    out = ((coefs / exps) * x_arr[..., None] ** exps).sum(axis=-1)
    return float(out) if x_arr.ndim == 0 else out


def residual_of_series(spec: TranscendentSpec, series: SeriesExpansion,
                       s_value) -> sp.Expr:
    """ODE residual of the truncated series at an exact argument.

    Arithmetic stays in QQ[pi]; use this for the decay checks where float
    cancellation would swamp the signal.
    """
    sv = sp.nsimplify(s_value, rational=True)
    tau_v = sp.sqrt(sv)
    sigma = sp.Integer(0)
    d1 = sp.Integer(0)
    d2 = sp.Integer(0)
    for e, c in series.terms:
        er = sp.Rational(e)
        sigma += c * tau_v ** (2 * er)
        d1 += c * er * tau_v ** (2 * (er - 1))
        d2 += c * er * (er - 1) * tau_v ** (2 * (er - 2))
    return spec.residual_expr.subs({S: sv, Y: sigma, Y1: d1, Y2: d2})


def residual_of_series_float(spec: TranscendentSpec, series: SeriesExpansion,
                             s_value, dps: int = 60) -> float:
    """Numeric value of residual_of_series via adaptive high precision.

    The residual of a good truncation is a catastrophic cancellation in
    doubles (terms of order 1 cancelling down to s^order); evalf's error
    tracking sidesteps that.
    """
    expr = residual_of_series(spec, series, s_value)
    val = expr.subs(PI, sp.pi).evalf(dps)
    return float(val)
