"""Catalog of the six sigma-form transcendents driving the spacing laws.

Every gap probability computed by this library is an exponential of an
integral of one nonlinear ODE solution. The ODEs are all second order and
second degree, quadratic in the highest derivative:

    (s sigma'')^2 = F(s, sigma, sigma')

with F polynomial. This module stores, for each transcendent: the exact
F, the boundary-condition seed (leading small-s terms, coefficients
rational times a power of pi), the map from the spacing variable to the
ODE argument, and, for the Bessel-type family, the exact change of
variables to a delta = 0 Painleve V equation used as a redundant
computation route.

Everything here is data. Coefficients are stored as exact rationals times
integer powers of pi and converted to floats only at use sites, so the
seed-vs-ODE consistency checks elsewhere can run in exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

import sympy as sp

# Plain positive symbol, not sp.pi: keeps recurrence arithmetic in QQ[pi]
# and avoids automatic trig simplification passes.
PI = sp.Symbol("pi", positive=True)

S, Y, Y1, Y2 = sp.symbols("s y y1 y2", real=True)


class TranscendentId(Enum):
    SIGMA_PV = "sigma_pv"
    SIGMA_B = "sigma_b"
    SIGMA_B_PLUS = "sigma_b_plus"
    TILDE_SIGMA = "tilde_sigma"
    TILDE_SIGMA_B = "tilde_sigma_b"
    TILDE_SIGMA_B_PLUS = "tilde_sigma_b_plus"


# (num, den, pi_pow): the exact value num/den * pi**pi_pow
Coefficient = tuple[int, int, int]


def coefficient_to_sympy(c: Coefficient) -> sp.Expr:
    num, den, pi_pow = c
    return sp.Rational(num, den) * PI**pi_pow


def coefficient_to_float(c: Coefficient) -> float:
    num, den, pi_pow = c
    return (num / den) * math.pi**pi_pow


@dataclass(frozen=True)
class SeriesSeed:
    """Leading boundary-condition terms of one transcendent near zero.

    exponents are rational multiples of 1/2 and strictly increasing;
    coefficients are exact.
    """

    terms: tuple[tuple[Fraction, Coefficient], ...]

    def __post_init__(self):
        exps = [t[0] for t in self.terms]
        if not exps:
            raise ValueError("seed must be nonempty")
        if any(b <= a for a, b in zip(exps, exps[1:])):
            raise ValueError("seed exponents must be strictly increasing")

    @property
    def max_exponent(self) -> Fraction:
        return self.terms[-1][0]


@dataclass(frozen=True)
class CosgroveScoufisData:
    """Normal-form metadata tying one sigma-form ODE to Painleve V.

    The normal form is x^2 (y'')^2 = -4 (y')^2 (x y' - y) + A2 (x y' - y)
    + A3 y' + A4, reached from sigma by the affine map
    y = -(sigma - x/8 - shift). The associated Painleve V parameters
    (delta = 0) satisfy A2 = gamma^2/4, A3 = gamma (beta + (1 - r)^2 / 2),
    A4 = (gamma^2/4)(-beta + (1 - r)^2 / 2) with r = sqrt_2alpha a chosen
    square root of 2 alpha.
    """

    A2: Fraction
    A3: Fraction
    A4: Fraction
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    sqrt_2alpha: int  # the branch of sqrt(2 alpha) used by the map
    shift: Fraction   # constant in y = -(sigma - x/8 - shift)
    delta: int = 0

    def matching_residuals(self) -> tuple[Fraction, Fraction, Fraction]:
        """Exact defects of the three parameter-matching relations."""
        r = Fraction(self.sqrt_2alpha)
        half_sq = Fraction(1, 2) * (1 - r) ** 2
        return (
            self.A2 - self.gamma**2 / 4,
            self.A3 - self.gamma * (self.beta + half_sq),
            self.A4 - (self.gamma**2 / 4) * (-self.beta + half_sq),
        )


@dataclass(frozen=True)
class TranscendentSpec:
    """Immutable catalog entry for one transcendent."""

    id: TranscendentId
    F: sp.Expr                      # RHS of (s y'')^2 = F(s, y, y1)
    seed: SeriesSeed
    argument_map: Callable[[float], float]
    argument_map_description: str
    sd_coefficients: Optional[CosgroveScoufisData] = None
    # Id of the tilde companion reached by sigma + (u - 1) + tilde_offset,
    # None when this spec has no Painleve V production route.
    tilde_partner: Optional[TranscendentId] = None
    tilde_offset: Optional[Fraction] = None
    # Auxiliary variable u = u_base + u_sign * s sigma'/sigma. The Bessel
    # family inverts its Painleve V change of variables: u = 1 - s sigma'
    # /sigma. The sine-kernel pair uses the bare log-derivative u =
    # s sigma'/sigma, forced by differentiating the gap-derivative
    # identity relating the pair; its u is bookkeeping, not a Painleve V
    # solution. Both satisfy tilde = sigma + (u - 1) + tilde_offset.
    u_sign: Optional[int] = None
    u_base: int = 1
    reading: str = "primed"
    residual_expr: sp.Expr = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "residual_expr", self.F - (S * Y2) ** 2)

    @property
    def residual(self) -> Callable[[float, float, float, float], float]:
        return _residual_fn(self.id, self.reading)


def _seed(*terms) -> SeriesSeed:
    return SeriesSeed(tuple((Fraction(e), c) for e, c in terms))


# F expressions. Orientation: the square (s y'')^2 sits alone on one side,
# residual = F - (s y'')^2, zero exactly on solutions.

_W = S * Y1 - Y  # recurring combination x y' - y

_F_SIGMA = -4 * _W * (_W + Y1**2)
_F_TILDE_SIGMA = -4 * _W * (_W + Y1**2) + 4 * Y1**2
_F_BESSEL = (4 * Y1**2 - Y1) * _W + sp.Rational(1, 4) * Y1**2
_F_TILDE_B = (4 * Y1**2 - Y1) * _W + sp.Rational(9, 4) * Y1**2 - sp.Rational(3, 2) * Y1 + sp.Rational(1, 4)
_F_TILDE_BP = (4 * Y1**2 - Y1) * _W + sp.Rational(25, 4) * Y1**2 - sp.Rational(5, 2) * Y1 + sp.Rational(1, 4)
# Alternative reading with the last-three-term group unprimed; kept behind
# a flag so a consistency test can reject it rather than a human guess.
_F_TILDE_BP_UNPRIMED = (4 * Y1**2 - Y1) * _W + sp.Rational(25, 4) * Y**2 - sp.Rational(5, 2) * Y + sp.Rational(1, 4)


def _map_linear(s: float) -> float:
    return math.pi * s


def _map_half_square(s: float) -> float:
    return (math.pi * s / 2.0) ** 2


def _map_square(s: float) -> float:
    return (math.pi * s) ** 2


_CS_BESSEL = CosgroveScoufisData(
    A2=Fraction(1, 16), A3=Fraction(-1, 16), A4=Fraction(1, 128),
    alpha=Fraction(1, 2), beta=Fraction(-1, 8), gamma=Fraction(1, 2),
    sqrt_2alpha=1, shift=Fraction(1, 16))

_CS_TILDE_B = CosgroveScoufisData(
    A2=Fraction(1, 16), A3=Fraction(15, 16), A4=Fraction(17, 128),
    alpha=Fraction(1, 2), beta=Fraction(-1, 8), gamma=Fraction(1, 2),
    sqrt_2alpha=-1, shift=Fraction(9, 16))

_CS_TILDE_BP = CosgroveScoufisData(
    A2=Fraction(1, 16), A3=Fraction(15, 16), A4=Fraction(17, 128),
    alpha=Fraction(1, 2), beta=Fraction(-1, 8), gamma=Fraction(1, 2),
    sqrt_2alpha=-1, shift=Fraction(25, 16))


_SPECS: dict[TranscendentId, TranscendentSpec] = {}


def _register(spec: TranscendentSpec) -> None:
    _SPECS[spec.id] = spec


_register(TranscendentSpec(
    id=TranscendentId.SIGMA_PV,
    F=_F_SIGMA,
    seed=_seed((1, (-1, 1, -1)), (2, (-1, 1, -2))),
    argument_map=_map_linear,
    argument_map_description="t = pi * s",
    tilde_partner=TranscendentId.TILDE_SIGMA,
    tilde_offset=Fraction(0),
    u_sign=1,
    u_base=0,
))

_register(TranscendentSpec(
    id=TranscendentId.TILDE_SIGMA,
    F=_F_TILDE_SIGMA,
    seed=_seed((3, (-1, 3, -1))),
    argument_map=_map_linear,
    argument_map_description="t = pi * s",
))

_register(TranscendentSpec(
    id=TranscendentId.SIGMA_B,
    F=_F_BESSEL,
    seed=_seed(("1/2", (1, 1, -1)), (1, (2, 1, -2))),
    argument_map=_map_half_square,
    argument_map_description="x = (pi * s / 2)**2",
    sd_coefficients=_CS_BESSEL,
    tilde_partner=TranscendentId.TILDE_SIGMA_B,
    tilde_offset=Fraction(1, 2),
    u_sign=-1,
))

_register(TranscendentSpec(
    id=TranscendentId.SIGMA_B_PLUS,
    F=_F_BESSEL,
    seed=_seed(("3/2", (1, 3, -1)), (3, (2, 27, -2))),
    argument_map=_map_square,
    argument_map_description="x = (pi * s)**2",
    sd_coefficients=_CS_BESSEL,
    tilde_partner=TranscendentId.TILDE_SIGMA_B_PLUS,
    tilde_offset=Fraction(3, 2),
    u_sign=-1,
))

_register(TranscendentSpec(
    id=TranscendentId.TILDE_SIGMA_B,
    F=_F_TILDE_B,
    seed=_seed((1, (1, 3, 0)), (2, (-1, 45, 0)), ("5/2", (8, 135, -1))),
    argument_map=_map_half_square,
    argument_map_description="x = (pi * s / 2)**2",
    sd_coefficients=_CS_TILDE_B,
))

_register(TranscendentSpec(
    id=TranscendentId.TILDE_SIGMA_B_PLUS,
    F=_F_TILDE_BP,
    seed=_seed((1, (1, 5, 0)), ("7/2", (8, 23625, -1))),
    argument_map=_map_square,
    argument_map_description="x = (pi * s)**2",
    sd_coefficients=_CS_TILDE_BP,
))

_SPEC_UNPRIMED = TranscendentSpec(
    id=TranscendentId.TILDE_SIGMA_B_PLUS,
    F=_F_TILDE_BP_UNPRIMED,
    seed=_SPECS[TranscendentId.TILDE_SIGMA_B_PLUS].seed,
    argument_map=_map_square,
    argument_map_description="x = (pi * s)**2",
    reading="unprimed",
)


def lookup(tid: TranscendentId, reading: str = "primed") -> TranscendentSpec:
    """Return the immutable catalog entry for one transcendent.

    reading selects between the two structural readings of the
    TILDE_SIGMA_B_PLUS equation; 'primed' (the default) is the one the
    seed-consistency test accepts, 'unprimed' is retained so that test
    can demonstrate the rejection.
    """
    if reading == "primed":
        return _SPECS[tid]
    if reading == "unprimed":
        if tid is not TranscendentId.TILDE_SIGMA_B_PLUS:
            raise ValueError("only TILDE_SIGMA_B_PLUS has a second reading")
        return _SPEC_UNPRIMED
    raise ValueError(f"unknown reading {reading!r}")


def all_specs() -> tuple[TranscendentSpec, ...]:
    return tuple(_SPECS[tid] for tid in TranscendentId)


@lru_cache(maxsize=None)
def _residual_fn(tid: TranscendentId, reading: str):
    spec = lookup(tid, reading)
    expr = spec.residual_expr.subs(PI, sp.pi)
    return sp.lambdify((S, Y, Y1, Y2), expr, modules="math")


def residual(spec: TranscendentSpec, s: float, sigma: float,
             sigma_d: float, sigma_dd: float) -> float:
    """Evaluate the oriented ODE defect at one state.

    Zero exactly when (s, sigma, sigma', sigma'') solves the equation.
    Quadratic in sigma_dd, so the value is even under its sign flip.
    """
    if s <= 0:
        raise ValueError("ODE argument must be positive")
    return spec.residual(s, sigma, sigma_d, sigma_dd)


def seed_sympy_terms(spec: TranscendentSpec) -> list[tuple[Fraction, sp.Expr]]:
    """Seed terms with coefficients as exact sympy expressions over QQ[pi]."""
    return [(e, coefficient_to_sympy(c)) for e, c in spec.seed.terms]
