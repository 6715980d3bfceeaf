"""Monte-Carlo referee: tridiagonal Gaussian ensembles for beta in {1,2,4}.

The symmetric tridiagonal models with Gaussian diagonal and chi-distributed
off-diagonals reproduce the Gaussian ensemble eigenvalue laws exactly at
every n, at O(n) memory per sample. Convention used throughout: the matrix
is (1/sqrt(2)) tridiag(chi; N(0,2); chi) with off-diagonal parameters
beta*(n-1), ..., beta, giving a semicircle bulk supported on
[-sqrt(2 beta n), +sqrt(2 beta n)].

Spacings are taken between consecutive eigenvalues whose index falls in a
central window, then divided by the local mean spacing of the asymptotic
semicircle at the midpoint, so the empirical law lands on unit mean
spacing and compares directly against the exact densities.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import cumulative_trapezoid
from scipy.interpolate import PchipInterpolator
from scipy.linalg import eigvalsh_tridiagonal

from .errors import (EigensolverNoConvergence, InsufficientData,
                     WindowTooSmall)
from .spacings import BETAS, SpacingPipeline

DEFAULT_WINDOW = 0.25
_MIN_KS_SAMPLES = 1000


@dataclass
class EnsembleSample:
    """One draw of a Gaussian beta-ensemble spectrum."""

    beta: int
    dimension: int
    eigenvalues: np.ndarray          # sorted ascending
    bulk_spacings: np.ndarray        # unfolded, central window
    seed: int

    def spectral_radius_ratio(self) -> float:
        """Largest |eigenvalue| over the semicircle edge."""
        edge = math.sqrt(2.0 * self.beta * self.dimension)
        return float(np.abs(self.eigenvalues).max() / edge)


def _semicircle_density(lam: np.ndarray, beta: int, n: int) -> np.ndarray:
    r2 = 2.0 * beta * n
    return (2.0 / (math.pi * r2)) * np.sqrt(np.maximum(r2 - lam**2, 0.0))


def _window_slice(n: int, window_fraction: float) -> tuple[int, int]:
    if not 0.0 < window_fraction < 1.0:
        raise ValueError("window_fraction must be in (0, 1)")
    k0 = int(round(n * (0.5 - 0.5 * window_fraction)))
    k1 = int(round(n * (0.5 + 0.5 * window_fraction)))
    return k0, k1


def _unfold(beta: int, n: int, eigenvalues: np.ndarray,
            window_fraction: float) -> np.ndarray:
    k0, k1 = _window_slice(n, window_fraction)
    window = eigenvalues[k0:k1]
    if window.size < 2:
        raise WindowTooSmall(
            f"central window holds {window.size} eigenvalue(s); need 2")
    raw = np.diff(window)
    if np.any(raw == 0.0):
        warnings.warn("degenerate (zero) spacing in window; admitted as 0",
                      RuntimeWarning, stacklevel=2)
    mid = 0.5 * (window[:-1] + window[1:])
    rho = _semicircle_density(mid, beta, n)
    if np.any(rho <= 0.0):
        raise WindowTooSmall("window reaches the semicircle edge; shrink it")
    return raw * n * rho  # divide by local mean spacing 1/(n rho)


def sample_spectrum(beta: int, n: int, seed: int) -> EnsembleSample:
    """Eigenvalues of one tridiagonal ensemble draw, deterministic in seed.

    n = 1 degenerates to a single Gaussian eigenvalue with no spacings.
    """
    if beta not in BETAS:
        raise ValueError(f"beta must be one of {BETAS}")
    if n < 1:
        raise ValueError("dimension must be positive")
    rng = np.random.default_rng(np.random.SeedSequence(int(seed)))
    rt2 = math.sqrt(2.0)
    diag = rng.normal(0.0, rt2, size=n) / rt2
    if n == 1:
        eigs = diag.copy()
    else:
        df = beta * np.arange(n - 1, 0, -1, dtype=float)
        chi = np.sqrt(2.0 * rng.standard_gamma(0.5 * df))
        try:
            eigs = eigvalsh_tridiagonal(diag, chi / rt2)
        except np.linalg.LinAlgError as exc:
            raise EigensolverNoConvergence(str(exc)) from exc
    eigs = np.sort(eigs)
    if n >= 2:
        k0, k1 = _window_slice(n, DEFAULT_WINDOW)
        spacings = (_unfold(beta, n, eigs, DEFAULT_WINDOW)
                    if k1 - k0 >= 2 else np.empty(0))
    else:
        spacings = np.empty(0)
    return EnsembleSample(beta=beta, dimension=n, eigenvalues=eigs,
                          bulk_spacings=spacings, seed=int(seed))


def unfold_bulk(sample: EnsembleSample,
                window_fraction: float = DEFAULT_WINDOW) -> np.ndarray:
    """Unfolded consecutive spacings from the central index window."""
    return _unfold(sample.beta, sample.dimension, sample.eigenvalues,
                   window_fraction)


def collect_spacings(beta: int, n: int, n_samples: int, seed: int,
                     window_fraction: float = DEFAULT_WINDOW) -> np.ndarray:
    """Aggregate unfolded spacings over independent draws.

    Per-sample seeds are split off one root sequence, so the aggregate is
    reproducible and independent of any parallel execution order.
    """
    child_seeds = np.random.SeedSequence(int(seed)).generate_state(
        n_samples, dtype=np.uint64)
    chunks = []
    for cs in child_seeds:
        sample = sample_spectrum(beta, n, int(cs))
        chunks.append(sample.bulk_spacings if window_fraction == DEFAULT_WINDOW
                      else unfold_bulk(sample, window_fraction))
    return np.concatenate(chunks) if chunks else np.empty(0)


class ExactSpacingCDF:
    """Cumulative exact spacing law, from cumulative quadrature of p_beta.

    Monotone (PCHIP) interpolation of the cumulative integral on a dense
    grid; above the pipeline coverage the CDF is clamped at its terminal
    value, which differs from 1 by the (astronomically small) tail mass.
    Also supplies the inverse transform for synthetic sampling.
    """

    def __init__(self, pipeline: SpacingPipeline, beta: int, n_grid: int = 8001):
        self.beta = beta
        grid = np.linspace(0.0, pipeline.coverage, n_grid)
        p = pipeline._density_with_origin(beta, grid)
        F = cumulative_trapezoid(p, grid, initial=0.0)
        self._grid, self._F = grid, F
        self._interp = PchipInterpolator(grid, F, extrapolate=False)
        self.terminal = float(F[-1])

    def __call__(self, s):
        s_arr = np.clip(np.asarray(s, dtype=float), 0.0, self._grid[-1])
        return self._interp(s_arr)

    def inverse(self, q):
        q_arr = np.asarray(q, dtype=float)
        if np.any((q_arr < 0.0) | (q_arr >= self.terminal)):
            raise ValueError("quantile outside the representable range")
        return np.interp(q_arr, self._F, self._grid)


def ks_distance(empirical, beta: int, pipeline: SpacingPipeline = None,
                cdf: ExactSpacingCDF = None) -> float:
    """Kolmogorov-Smirnov statistic against the exact spacing law."""
    x = np.sort(np.asarray(empirical, dtype=float))
    if x.size < _MIN_KS_SAMPLES:
        raise InsufficientData(
            f"{x.size} spacings < {_MIN_KS_SAMPLES} required for KS")
    if cdf is None:
        cdf = ExactSpacingCDF(pipeline or SpacingPipeline(), beta)
    F = np.asarray(cdf(x))
    n = x.size
    i = np.arange(1, n + 1)
    return float(max((i / n - F).max(), (F - (i - 1) / n).max()))


def spacing_histogram(spacings, pipeline: SpacingPipeline, beta: int,
                      bins: int = 60, s_hi: float = 4.0) -> list:
    """Rows (bin_left, bin_right, count, density, exact_p) for reporting.

    density is the histogram normalized over all collected spacings;
    exact_p is the exact law at the bin midpoint.
    """
    x = np.asarray(spacings, dtype=float)
    edges = np.linspace(0.0, s_hi, bins + 1)
    counts, _ = np.histogram(x, bins=edges)
    width = edges[1] - edges[0]
    density = counts / (x.size * width) if x.size else counts * 0.0
    mids = 0.5 * (edges[:-1] + edges[1:])
    exact = pipeline._density_with_origin(beta, mids)
    return [(float(edges[i]), float(edges[i + 1]), int(counts[i]),
             float(density[i]), float(exact[i])) for i in range(bins)]
