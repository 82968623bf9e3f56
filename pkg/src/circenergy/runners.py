"""One implementation of each command, shared by the HTTP service and the CLI.

Each runner takes a request model and returns a response model; argument
errors surface as ValueError (HTTP 400 / exit code 2) and failed
numerical consistency checks as spectral.NumericalError (HTTP 500 /
exit code 1).
"""

from __future__ import annotations

import numpy as np

from . import asymptotics, bounds, dirichlet, experiments, spectral
from .ensembles import (
    CirculantMatrix,
    CoefficientVector,
    ToeplitzMatrix,
    distribution_moments,
    parse_distribution,
)
from .schemas import (
    BoundReportResponse,
    BoundsRequest,
    CompareRequest,
    CompareResponse,
    CompareRow,
    ConvergencePointModel,
    ConvergenceRequest,
    ConvergenceResponse,
    DeviationRequest,
    DeviationResponse,
    DirichletRequest,
    DirichletResponse,
    EnergyRequest,
    EnergyResponse,
    EstimateResponse,
    ExpectedEnergyRequest,
    KernelRow,
    TailPoint,
    ToeplitzGapRequest,
    ToeplitzGapResponse,
)

# Deviation ladder used when a request does not pin its own deltas,
# in units of the concentration threshold delta0.
_DEFAULT_DELTA_STEPS = (0.5, 0.75, 1.0, 1.25, 1.5, 2.0)


def run_energy(req: EnergyRequest) -> EnergyResponse:
    coeffs = CoefficientVector(np.asarray(req.coefficients, dtype=float))
    if req.kind == "toeplitz":
        if req.method not in ("auto", "dense"):
            raise ValueError("Toeplitz energies only support the dense method")
        matrix = ToeplitzMatrix(req.n, coeffs)
        spectrum = spectral.dense_symmetric_eigenvalues(matrix.dense())
        method = "dense"
    else:
        matrix = CirculantMatrix(req.n, coeffs)
        if req.method == "dense":
            if req.n > spectral.DENSE_CAP_DEFAULT:
                raise ValueError(
                    f"dense method capped at n={spectral.DENSE_CAP_DEFAULT}, got {req.n}"
                )
            spectrum = spectral.dense_symmetric_eigenvalues(matrix.dense())
            method = "dense"
        else:
            method = spectral.resolve_circulant_method(matrix, req.method)
            spectrum = spectral.circulant_eigenvalues(matrix, method)
    value = spectral.energy(spectrum, coeffs.b)
    return EnergyResponse(
        kind=req.kind,
        method=method,
        n=req.n,
        b=coeffs.b,
        energy=value.energy,
        normalized=value.normalized,
        eigenvalues=list(spectrum.eigenvalues) if req.include_spectrum else None,
    )


def run_expected_energy(req: ExpectedEnergyRequest) -> EstimateResponse:
    dist = parse_distribution(req.dist)
    if req.method == "exact":
        if dist.kind != "bernoulli":
            raise ValueError("exact enumeration is only available for bernoulli coefficients")
        record = experiments.exact_expected_energy_bernoulli(req.n, req.b, dist.params[0])
    else:
        record = experiments.mc_expected_energy(
            req.n, req.b, dist, req.trials, req.seed, req.threads
        )
    _, sigma, _ = distribution_moments(dist)
    limit = bounds.limit_energy(sigma)
    return EstimateResponse(
        method=record.method,
        n=record.n,
        b=record.b,
        dist=record.dist,
        trials=record.trials,
        seed=record.base_seed,
        estimate=record.estimate,
        stderr=record.stderr,
        raw_mean=record.raw_mean,
        limit=limit,
        limit_gap=abs(record.estimate - limit),
    )


def run_bounds(req: BoundsRequest) -> BoundReportResponse:
    if req.theorem == 1:
        dist = parse_distribution(req.dist)
        a, sigma, mu3 = distribution_moments(dist)
        c1 = req.c1 if req.c1 is not None else bounds.BERRY_ESSEEN_C1
        report = bounds.theorem1_rhs(a, sigma, mu3, req.n, req.b, c1)
    elif req.theorem == 2:
        support = req.support_bound
        if support is None:
            support = parse_distribution(req.dist).support_bound
        delta0, prob = bounds.talagrand_tail(req.delta, req.b, support)
        report = bounds.BoundReport(
            "thm2_tail",
            {"delta": req.delta, "b": req.b, "support_bound": support, "delta0": delta0},
            {"prob_bound": prob},
        )
    else:
        dist = parse_distribution(req.dist)
        exact, coarse = bounds.theorem3_bound(dist, req.n, req.b)
        report = bounds.BoundReport(
            "thm3",
            {"dist": dist.spec_string(), "n": req.n, "b": req.b, "coarse": coarse},
            {"exact": exact},
        )
    return BoundReportResponse(
        theorem=report.theorem, inputs=report.inputs, terms=report.terms, total=report.total
    )


def run_dirichlet(req: DirichletRequest) -> DirichletResponse:
    if not 1 <= req.b_lo <= req.b_hi:
        raise ValueError("need 1 <= b_lo <= b_hi")
    if req.tol <= 0.0:
        raise ValueError("tolerance must be positive")
    rows = []
    for b in range(req.b_lo, req.b_hi + 1):
        analysis = dirichlet.analyze_kernel(b, req.tol)
        rows.append(
            KernelRow(
                b=analysis.b,
                lebesgue=analysis.lebesgue,
                lebesgue_bound=analysis.lebesgue_bound,
                total_variation=analysis.total_variation,
                tv_bound=analysis.tv_bound,
            )
        )
    return DirichletResponse(rows=rows)


def run_deviation(req: DeviationRequest) -> DeviationResponse:
    dist = parse_distribution(req.dist)
    if req.deltas is not None:
        deltas = np.asarray(req.deltas, dtype=float)
    else:
        if dist.support_bound is None:
            raise ValueError("deviation experiment requires compactly supported coefficients")
        delta0 = bounds.talagrand_tail(0.0, req.b, dist.support_bound)[0]
        deltas = delta0 * np.asarray(_DEFAULT_DELTA_STEPS)
    curve = experiments.deviation_experiment(
        req.n, req.b, dist, req.trials, deltas, req.seed, req.threads
    )
    points = [
        TailPoint(delta=float(d), empirical=float(e), bound=float(t))
        for d, e, t in zip(curve.deltas, curve.empirical, curve.theoretical)
    ]
    return DeviationResponse(
        n=curve.n,
        b=curve.b,
        dist=curve.dist,
        trials=curve.trials,
        seed=curve.base_seed,
        delta0=curve.delta0,
        mean_normalized=curve.mean_normalized,
        points=points,
    )


def run_convergence(req: ConvergenceRequest) -> ConvergenceResponse:
    dist = parse_distribution(req.dist)
    points = experiments.convergence_study(req.schedule, dist, req.trials, req.seed, req.threads)
    _, sigma, _ = distribution_moments(dist)
    return ConvergenceResponse(
        dist=dist.spec_string(),
        trials=req.trials,
        seed=req.seed,
        limit=bounds.limit_energy(sigma),
        points=[
            ConvergencePointModel(
                n=pt.n,
                b=pt.b,
                estimate=pt.estimate,
                stderr=pt.stderr,
                deviation=pt.deviation,
                bound=pt.bound,
            )
            for pt in points
        ],
    )


def run_compare(req: CompareRequest) -> CompareResponse:
    rows = asymptotics.comparison_table(req.p, req.d, req.sigma, req.n)
    return CompareResponse(
        rows=[
            CompareRow(
                ensemble=row.ensemble,
                normalizer=row.normalizer,
                constant=row.constant,
                constant_hi=row.constant_hi,
            )
            for row in rows
        ]
    )


def run_toeplitz_gap(req: ToeplitzGapRequest) -> ToeplitzGapResponse:
    dist = parse_distribution(req.dist)
    record = experiments.toeplitz_vs_circulant(
        req.n, req.b, dist, req.trials, req.seed, req.cap, req.threads
    )
    return ToeplitzGapResponse(
        n=record.n,
        b=record.b,
        dist=record.dist,
        trials=record.trials,
        seed=record.base_seed,
        mean_normalized_gap=record.mean_normalized_gap,
        max_corner_ratio=record.max_corner_ratio,
        thm3_exact=record.thm3_exact,
        thm3_coarse=record.thm3_coarse,
    )
