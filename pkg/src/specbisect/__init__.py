"""Spectral bisection, its adversarial graph family, and brute-force oracles."""

from .bisect import (
    Bisection,
    CannotBalanceError,
    SignPartition,
    fiedler_connectivity_check,
    median,
    median_cut,
    sign_partition,
    spectral_bisection,
)
from .eigen import Eigenspace, Spectrum, algebraic_connectivity, eigendecompose, fiedler_space
from .estimator import OptimalBisection, SpectralBisection, check_graph
from .family import (
    AnalyticSpectrum,
    FamilyConfig,
    FamilySpec,
    analytic_spectrum,
    build_family,
    build_l_star,
    cone_augment,
    lemma1_rayleigh_bound,
    subspace_decomposition,
    tensor,
)
from .generators import base_graph
from .graph import (
    Graph,
    cut_cost,
    cut_ratio,
    disjoint_union,
    induced_subgraph,
    is_connected,
    laplacian,
    laplacian_add,
    quadratic_form,
)
from .harness import GapReport, export_report, run_gap_experiment, verify_theorem_sweep
from .oracle import OracleResult, optimal_bisection, witness_cut, zero_assignment_sweep

__version__ = "0.1.0"
