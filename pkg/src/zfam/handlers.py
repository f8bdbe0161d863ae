"""Request handlers shared by the HTTP service and the CLI.

Each handler takes a request model and returns a response model, so the two
front ends cannot drift apart.  Budget exhaustion is a result here, not an
error: the response says what was completed and ``completeness`` (or
``complete``) flags the shortfall.  Malformed input raises UsageError and the
front ends translate that into HTTP 400 or exit code 2.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .errors import BudgetExceededError, UsageError
from .family import MultipletReport, multiplet_report
from .groups import FiniteGroup, TableGroup, parse_group_spec
from .hurwitz import count_components
from .invariants import (
    branch_curve_invariants,
    chisini_threshold,
    main_theorem_counts,
    twelve_significant,
)
from .models import (
    BoundsInfo,
    ChisiniInfo,
    ComponentsRequest,
    ComponentsResponse,
    ConventionInfo,
    CurveInfo,
    EnumerateRequest,
    EnumerateResponse,
    FamilyRequest,
    FamilyResponse,
    FamilyRow,
    GroupInput,
    HealthResponse,
    InvariantsRequest,
    InvariantsResponse,
    MainTheoremInfo,
    ParamsInfo,
    ReportRequest,
    ReportResponse,
    SurfaceInfo,
    WitnessSideInfo,
)
from .spherical import enumerate_spherical_systems, format_type, parse_type


def resolve_group(spec: GroupInput) -> FiniteGroup:
    """Turn a request's group field into a group object.

    Strings must be Z2^k tokens; file paths are a CLI concern and never reach
    this layer.  Inline tables are validated by the TableGroup constructor.
    """
    if isinstance(spec, str):
        return parse_group_spec(spec)
    return TableGroup([list(row) for row in spec])


def _fraction_fields(value: Fraction) -> tuple[str, float]:
    return str(value), twelve_significant(float(value))


def _parse_epsilon(value: str | int | None) -> Fraction | None:
    if value is None:
        return None
    try:
        parsed = Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"epsilon must be a rational like 1/3, got {value!r}") from exc
    if parsed <= 0:
        raise UsageError(f"epsilon must be positive, got {value!r}")
    return parsed


def handle_enumerate(req: EnumerateRequest) -> EnumerateResponse:
    group = resolve_group(req.group)
    tau = parse_type(req.tau)
    systems: list[list[int]] = []
    complete = True
    detail = None
    try:
        for system in enumerate_spherical_systems(group, tau, mode=req.mode, budget=req.budget):
            systems.append(list(system.entries))
    except BudgetExceededError as exc:
        complete = False
        detail = str(exc)
    count = len(systems)
    truncated = req.max_systems is not None and count > req.max_systems
    if truncated:
        systems = systems[: req.max_systems]
    return EnumerateResponse(
        group=group.name,
        tau=format_type(tau),
        mode=req.mode,
        complete=complete,
        count=count,
        truncated=truncated,
        systems=systems,
        detail=detail,
    )


def handle_components(req: ComponentsRequest) -> ComponentsResponse:
    group = resolve_group(req.group)
    tau1 = tuple(sorted(parse_type(req.tau1)))
    tau2 = tuple(sorted(parse_type(req.tau2)))
    if tau2 < tau1:
        tau1, tau2 = tau2, tau1
    try:
        result = count_components(
            group,
            tau1,
            tau2,
            budget=req.budget,
            workers=req.workers,
            count_ordered_pairs=req.count_ordered_pairs,
            identify_inner=req.identify_inner,
        )
    except BudgetExceededError as exc:
        convention = ConventionInfo(
            swap_identified=tau1 == tau2 and not req.count_ordered_pairs,
            inner_identified=req.identify_inner and not group.is_abelian(),
            count_ordered_pairs=req.count_ordered_pairs,
        )
        return ComponentsResponse(
            group=group.name,
            tau1=format_type(tau1),
            tau2=format_type(tau2),
            h=None,
            completeness="budget-limited",
            convention=convention,
            detail=str(exc),
        )
    convention = ConventionInfo(
        swap_identified=result.swap_identified,
        inner_identified=result.inner_identified,
        count_ordered_pairs=req.count_ordered_pairs,
    )
    keys = sorted(key.hex() for key in result.keys) if req.include_keys else None
    return ComponentsResponse(
        group=group.name,
        tau1=format_type(tau1),
        tau2=format_type(tau2),
        h=result.h,
        completeness="exact",
        convention=convention,
        keys=keys,
    )


def handle_invariants(req: InvariantsRequest) -> InvariantsResponse:
    curve = branch_curve_invariants(req.ksq, req.c2, m=req.m)
    threshold = chisini_threshold(curve.d, curve.g, curve.c)
    frac, dec = _fraction_fields(threshold)
    chisini = ChisiniInfo(threshold=frac, threshold_decimal=dec, ok=curve.nu > threshold)
    main = None
    if curve.d % 28 == 0:
        n_d, c_d = main_theorem_counts(curve.d)
        main = MainTheoremInfo(n_d=n_d, c_d=c_d)
    return InvariantsResponse(
        ksq=req.ksq,
        c2=req.c2,
        m=req.m,
        nu=curve.nu,
        d=curve.d,
        n=curve.n,
        c=curve.c,
        g=curve.g,
        euler_r=curve.euler_r,
        chisini=chisini,
        main_theorem=main,
    )


def _family_row(report: MultipletReport) -> FamilyRow:
    params = report.params
    eps_frac, eps_dec = _fraction_fields(params.epsilon)
    thr_frac, thr_dec = _fraction_fields(report.chisini_threshold)
    witness = None
    if report.witness is not None:
        witness = [
            WitnessSideInfo(support=list(side[0]), multiplicities=list(side[1]))
            for side in report.witness
        ]
    return FamilyRow(
        k=params.k,
        l=params.l,
        params=ParamsInfo(
            k=params.k,
            l=params.l,
            r1=params.r1,
            r2=params.r2,
            tau1=params.tau1_string,
            tau2=params.tau2_string,
            chi=params.chi,
            epsilon=eps_frac,
            epsilon_decimal=eps_dec,
            g1=params.g1,
            g2=params.g2,
        ),
        h=report.h,
        completeness=report.completeness,
        invariants=SurfaceInfo(
            chi=report.invariants.chi,
            e=report.invariants.e,
            ksq=report.invariants.ksq,
            g1=report.invariants.g1,
            g2=report.invariants.g2,
            q=report.invariants.q,
            order=report.invariants.order,
        ),
        curve=CurveInfo(
            m=report.curve.m,
            nu=report.curve.nu,
            d=report.curve.d,
            n=report.curve.n,
            c=report.curve.c,
            g=report.curve.g,
            euler_r=report.curve.euler_r,
        ),
        bounds=BoundsInfo(
            d=report.bounds.d,
            n_d=report.bounds.n_d,
            c_d=report.bounds.c_d,
            log2_lower_thm_main=report.bounds.log2_lower_thm_main,
            log2_lower_eq15=report.bounds.log2_lower_eq15,
            log2_upper_catanese=report.bounds.log2_upper_catanese,
        ),
        chisini=ChisiniInfo(threshold=thr_frac, threshold_decimal=thr_dec, ok=report.chisini_ok),
        plurigenus=report.plurigenus,
        witness_status=report.witness_status,
        witness=witness,
        assumptions=list(report.assumptions),
    )


def handle_family(req: FamilyRequest) -> FamilyResponse:
    epsilon = _parse_epsilon(req.epsilon)
    report = multiplet_report(
        req.k, req.l, epsilon_override=epsilon, budget=req.budget, workers=req.workers
    )
    return FamilyResponse(report=_family_row(report))


def _report_member(args: tuple[int, int, str | None, int | None]) -> MultipletReport:
    k, l, epsilon, budget = args
    parsed = Fraction(epsilon) if epsilon is not None else None
    return multiplet_report(k, l, epsilon_override=parsed, budget=budget, workers=1)


def handle_report(req: ReportRequest) -> ReportResponse:
    if req.k_min > req.k_max:
        raise UsageError(f"k range is reversed: {req.k_min} > {req.k_max}")
    if req.l_min > req.l_max:
        raise UsageError(f"l range is reversed: {req.l_min} > {req.l_max}")
    epsilon = _parse_epsilon(req.epsilon)
    eps_text = str(epsilon) if epsilon is not None else None
    members = [
        (k, l, eps_text, req.budget)
        for k in range(req.k_min, req.k_max + 1)
        for l in range(req.l_min, req.l_max + 1)
        if l > 2 * k
    ]
    # One process per member; the per-member count stays single-worker so the
    # same member computes identically inside and outside a batch.
    if req.workers > 1 and len(members) > 1:
        with ProcessPoolExecutor(max_workers=min(req.workers, len(members))) as pool:
            reports = list(pool.map(_report_member, members))
    else:
        reports = [_report_member(item) for item in members]
    return ReportResponse(reports=[_family_row(r) for r in reports])


def handle_health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)
