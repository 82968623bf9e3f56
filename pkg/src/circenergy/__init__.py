"""Spectral energy toolkit for random symmetric band circulant and Toeplitz matrices.

The package samples band circulant / band Toeplitz matrices with i.i.d.
coefficients, computes their eigenvalues and trace-norm energy by exact
cosine sums, FFT, or a dense eigensolver, and checks the measured
energies against closed-form convergence, concentration, and coupling
bounds.  A Dirichlet-kernel module supplies the Lebesgue-constant and
total-variation machinery those bounds rest on, and an experiments
module runs reproducible Monte Carlo / exact-enumeration studies.

Entry points: the ``circenergy`` CLI and the FastAPI app in
``circenergy.service`` share one request/response layer, so command
line runs and HTTP calls return identical payloads.
"""

__version__ = "0.1.0"

from .ensembles import (
    BandWidthError,
    CirculantGraph,
    CirculantMatrix,
    CoefficientVector,
    DistributionSpec,
    ToeplitzMatrix,
    build_circulant,
    build_toeplitz,
    corner_block,
    distribution_moments,
    parse_distribution,
    sample_circulant_graph,
    sample_coefficients,
)
from .spectral import (
    EnergyValue,
    NumericalError,
    Spectrum,
    circulant_eigenvalues,
    circulant_eigenvalues_direct,
    circulant_eigenvalues_fft,
    dense_symmetric_eigenvalues,
    energy,
    toeplitz_energy,
)
from .dirichlet import (
    EULER_GAMMA,
    KernelAnalysis,
    analyze_kernel,
    dirichlet_kernel,
    lebesgue_bound,
    lebesgue_constant,
    riemann_sum_gap,
    total_variation,
    total_variation_bound,
)
from .bounds import (
    BERRY_ESSEEN_C1,
    BoundReport,
    clt_moment_gap_bound,
    corner_trace_bound,
    gaussian_abs_moment,
    limit_energy,
    lipschitz_energy_bound,
    mean_part_bound,
    talagrand_tail,
    theorem1_rhs,
    theorem3_bound,
    var_part_bound,
)
from .asymptotics import (
    EnsembleLimit,
    band_symmetric_limit,
    circulant_graph_limit,
    comparison_table,
    gnp_limit,
    is_hyperenergetic,
    kesten_energy,
    kesten_energy_numeric,
    regular_dense_limit,
    semicircle_abs_moment_numeric,
    tnd_average_bounds,
)
from .experiments import (
    ConvergencePoint,
    EstimateRecord,
    TailCurve,
    ToeplitzGapRecord,
    convergence_study,
    deviation_experiment,
    exact_expected_energy_bernoulli,
    mc_expected_energy,
    toeplitz_vs_circulant,
)

__all__ = [
    "__version__",
    "BandWidthError",
    "CirculantGraph",
    "CirculantMatrix",
    "CoefficientVector",
    "DistributionSpec",
    "ToeplitzMatrix",
    "build_circulant",
    "build_toeplitz",
    "corner_block",
    "distribution_moments",
    "parse_distribution",
    "sample_circulant_graph",
    "sample_coefficients",
    "EnergyValue",
    "NumericalError",
    "Spectrum",
    "circulant_eigenvalues",
    "circulant_eigenvalues_direct",
    "circulant_eigenvalues_fft",
    "dense_symmetric_eigenvalues",
    "energy",
    "toeplitz_energy",
    "EULER_GAMMA",
    "KernelAnalysis",
    "analyze_kernel",
    "dirichlet_kernel",
    "lebesgue_bound",
    "lebesgue_constant",
    "riemann_sum_gap",
    "total_variation",
    "total_variation_bound",
    "BERRY_ESSEEN_C1",
    "BoundReport",
    "clt_moment_gap_bound",
    "corner_trace_bound",
    "gaussian_abs_moment",
    "limit_energy",
    "lipschitz_energy_bound",
    "mean_part_bound",
    "talagrand_tail",
    "theorem1_rhs",
    "theorem3_bound",
    "var_part_bound",
    "EnsembleLimit",
    "band_symmetric_limit",
    "circulant_graph_limit",
    "comparison_table",
    "gnp_limit",
    "is_hyperenergetic",
    "kesten_energy",
    "kesten_energy_numeric",
    "regular_dense_limit",
    "semicircle_abs_moment_numeric",
    "tnd_average_bounds",
    "ConvergencePoint",
    "EstimateRecord",
    "TailCurve",
    "ToeplitzGapRecord",
    "convergence_study",
    "deviation_experiment",
    "exact_expected_energy_bernoulli",
    "mc_expected_energy",
    "toeplitz_vs_circulant",
]
