"""Gap experiments: spectral bisection against witness and exhaustive optima."""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields

import numpy as np

from .bisect import sign_partition, median, spectral_bisection
from .eigen import eigendecompose, fiedler_space
from .family import FamilyConfig, FamilySpec, analytic_algebraic_connectivity, build_family
from .generators import KINDS, base_graph  # noqa: F401  (re-exported)
from .oracle import MAX_ORACLE_N, MAX_SWEEP_ZEROS, optimal_bisection, witness_cut, zero_assignment_sweep

log = logging.getLogger(__name__)

THEOREM_MIN_N = 48


@dataclass(frozen=True)
class GapReport:
    n: int
    m: int
    k: int
    lambda2_numeric: float
    lambda2_analytic: float
    fiedler_multiplicity: int
    spectral_cut: int
    witness_cut: int
    oracle_cut: int | None
    error_lower: int
    theorem_threshold: float
    upper_threshold: float
    passes_lower: bool | None  # None when n <= 48: outside the theorem's hypothesis
    passes_upper: bool

    @property
    def failed(self) -> bool:
        return self.passes_lower is False or not self.passes_upper


def spectral_cut(g, basis: np.ndarray, max_zeros: int = MAX_SWEEP_ZEROS) -> int:
    """Smallest median-cut over the basis vectors, minimized over zero assignments when feasible."""
    best = None
    for y in basis.T:
        p = sign_partition(y - median(y))
        if len(p.zero) <= max_zeros:
            cut = zero_assignment_sweep(g, p, max_zeros)[0]
        else:
            cut = spectral_bisection(g, y).cut
        best = cut if best is None else min(best, cut)
    return best


def run_gap_experiment(spec: FamilySpec, oracle_max_n: int = MAX_ORACLE_N) -> GapReport:
    g, lap = build_family(spec)
    spectrum = eigendecompose(lap)
    space = fiedler_space(lap, spectrum)
    s_cut = spectral_cut(g, space.basis)
    w_cut = witness_cut(spec, g)
    o_cut = optimal_bisection(g).best_cut if g.n <= oracle_max_n else None
    best_known = w_cut if o_cut is None else min(w_cut, o_cut)
    error = s_cut - best_known
    n = g.n
    lower, upper = n * n / 384, n * n / 2
    report = GapReport(
        n=n,
        m=spec.m,
        k=spec.cone_count,
        lambda2_numeric=space.eigenvalue,
        lambda2_analytic=analytic_algebraic_connectivity(spec),
        fiedler_multiplicity=space.multiplicity,
        spectral_cut=s_cut,
        witness_cut=w_cut,
        oracle_cut=o_cut,
        error_lower=error,
        theorem_threshold=lower,
        upper_threshold=upper,
        passes_lower=(error > lower) if n > THEOREM_MIN_N else None,
        passes_upper=abs(error) < upper,
    )
    log.info("m=%d k=%d n=%d spectral=%d witness=%d", spec.m, spec.cone_count, n, s_cut, w_cut)
    return report


def _run_config(cfg: FamilyConfig) -> GapReport:
    return run_gap_experiment(cfg.to_spec())


def verify_theorem_sweep(m_values, base_kind="cycle", k_values=(0,), n_jobs: int = 1) -> list[GapReport]:
    """One report per ``(m, k)`` pair, in input order."""
    if base_kind.split()[0] not in KINDS:
        raise ValueError(f"unknown generator {base_kind!r}")
    configs = [FamilyConfig(m, (base_kind,) * 4, k) for m in m_values for k in k_values]
    if n_jobs == 1:
        return [_run_config(c) for c in configs]
    with ProcessPoolExecutor(max_workers=n_jobs) as pool:
        return list(pool.map(_run_config, configs))


def summarize(reports) -> str:
    checked = [r for r in reports if r.passes_lower is not None]
    failed = sum(r.failed for r in reports)
    return (
        f"{len(reports)} reports, {len(checked)} with n > {THEOREM_MIN_N}; "
        f"{len(reports) - failed} pass, {failed} fail"
    )


# -- export -----------------------------------------------------------------

FIELDS = tuple(f.name for f in fields(GapReport))


def _fmt(value):
    if isinstance(value, (bool, np.bool_)) or value is None:
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    return float(f"{float(value):.12g}")


def _csv_cell(value) -> str:
    value = _fmt(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def export_report(reports, fmt: str = "json") -> bytes:
    """Serialize one report or a list of them as JSON or CSV, fields in declaration order."""
    single = isinstance(reports, GapReport)
    rows = [reports] if single else list(reports)
    if fmt == "json":
        objs = [{k: _fmt(v) for k, v in asdict(r).items()} for r in rows]
        return (json.dumps(objs[0] if single else objs, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(FIELDS)
        for r in rows:
            writer.writerow(_csv_cell(getattr(r, name)) for name in FIELDS)
        return buf.getvalue().encode()
    raise ValueError(f"unknown export format {fmt!r}; expected 'json' or 'csv'")
