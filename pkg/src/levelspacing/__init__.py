"""Exact spacing distributions of bulk-scaled random matrix spectra.

Gap probabilities E_beta(0; s) and spacing densities p_beta(s) for the
orthogonal, unitary, and symplectic symmetry classes, evaluated through
six second-order second-degree transcendents (exact boundary series plus
two-point collocation), with two independent referees: a Fredholm
determinant of the sine kernel and a tridiagonal Monte-Carlo sampler.
"""

from .catalog import TranscendentId, TranscendentSpec, all_specs, lookup
from .errors import (BranchAmbiguity, DegenerateU, EigensolverNoConvergence,
                     InconsistentSeed, InsufficientData, LevelSpacingError,
                     NegativeIntegrand, NonUniqueCoefficient,
                     OutOfTrustRadius, RangeExceeded, StiffnessFailure,
                     WindowTooSmall)
from .fredholm import QuadratureRule, oracle_compare, sine_kernel_det
from .ode import (PainleveVState, SolutionTrajectory, cs_map_to_u, integrate,
                  sigma_dd, tilde_from_u, tilde_via_u_route)
from .sampler import (EnsembleSample, ExactSpacingCDF, collect_spacings,
                      ks_distance, sample_spectrum, spacing_histogram,
                      unfold_bulk)
from .series import (SeriesExpansion, eval_series, extend_series,
                     residual_of_series, residual_of_series_float)
from .spacings import (BETAS, SpacingPipeline, SpacingTable, wigner_surmise)

__version__ = "1.0.0"
