"""Orchestration: compute both sides, compare, cache, report.

The Delta side is computed first; its degree support is handed to the
module-side exploration as forced degrees, on top of the independent
frontier scan with its extra verification band, so each side gets checked
where the other claims support.  EQUAL is only reported when every
theta-row of the module side closed with a verified zero band and every
Schur coefficient matched exactly; running out of budget yields
INCONCLUSIVE, never a false EQUAL.
"""

from __future__ import annotations

import json
import os
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path

from .coinvariants import ComponentCharacters, frobenius_module
from .macdonald import rhs_series
from .partitions import (
    Partition,
    partition_from_str,
    partition_to_str,
    partitions_of,
)
from .qtz import QTZPoly
from .series import FrobeniusSeries
from .superring import TriDegree, component_dimension

ENGINE_VERSION = "0.1.0"
CACHE_SCHEMA_VERSION = 1

EQUAL = "EQUAL"
DIFFER = "DIFFER"
INCONCLUSIVE = "INCONCLUSIVE"


# --- component cache ----------------------------------------------------------


@dataclass
class CacheEntry:
    schema_version: int
    engine_version: str
    n: int
    degree: tuple[int, int, int]
    dim: int  # quotient dimension at this degree
    characters: dict[str, int]  # cycle type string -> character value

    @classmethod
    def from_component(cls, comp: ComponentCharacters) -> CacheEntry:
        return cls(
            schema_version=CACHE_SCHEMA_VERSION,
            engine_version=ENGINE_VERSION,
            n=comp.n,
            degree=tuple(comp.degree),
            dim=comp.dim_quotient,
            characters={partition_to_str(mu): v for mu, v in sorted(comp.chars.items())},
        )

    def to_component(self) -> ComponentCharacters:
        degree = TriDegree(*self.degree)
        ambient = component_dimension(self.n, degree)
        chars = {partition_from_str(k): v for k, v in self.characters.items()}
        return ComponentCharacters(
            n=self.n,
            degree=degree,
            dim=ambient,
            rank=ambient - self.dim,
            chars=chars,
        )

    def to_json_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "engine_version": self.engine_version,
            "n": self.n,
            "degree": list(self.degree),
            "dim": self.dim,
            "characters": self.characters,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> CacheEntry:
        return cls(
            schema_version=int(data["schema_version"]),
            engine_version=str(data["engine_version"]),
            n=int(data["n"]),
            degree=tuple(int(x) for x in data["degree"]),
            dim=int(data["dim"]),
            characters={str(k): int(v) for k, v in data["characters"].items()},
        )


class ComponentCache:
    """One JSON document per component under cache_dir/n=N/a_b_c.json.

    Writes are atomic (temp file + rename).  Entries with a stale schema or
    engine version, or corrupt files, are treated as missing and left alone.
    """

    def __init__(self, root: str | Path):
        self.root = Path(root)

    def entry_path(self, n: int, d: TriDegree) -> Path:
        return self.root / f"n={n}" / f"{d.a}_{d.b}_{d.c}.json"

    def get(self, n: int, d: TriDegree) -> ComponentCharacters | None:
        entry = self.load_entry(n, d)
        if entry is None:
            return None
        return entry.to_component()

    def load_entry(self, n: int, d: TriDegree) -> CacheEntry | None:
        path = self.entry_path(n, TriDegree(*d))
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            entry = CacheEntry.from_json_dict(data)
        except (OSError, ValueError, KeyError, TypeError):
            return None
        if entry.schema_version != CACHE_SCHEMA_VERSION:
            return None
        if entry.engine_version != ENGINE_VERSION:
            return None
        expected = sorted(partition_to_str(mu) for mu in partitions_of(entry.n))
        if sorted(entry.characters) != expected:
            return None
        return entry

    def put(self, comp: ComponentCharacters) -> None:
        self.save_entry(CacheEntry.from_component(comp))

    def save_entry(self, entry: CacheEntry) -> None:
        path = self.entry_path(entry.n, TriDegree(*entry.degree))
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = json.dumps(entry.to_json_dict(), sort_keys=True, indent=1)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise


def cache_roundtrip(entry: CacheEntry, cache: ComponentCache) -> CacheEntry:
    """Write then re-read an entry; the result is identical."""
    cache.save_entry(entry)
    reread = cache.load_entry(entry.n, TriDegree(*entry.degree))
    if reread is None:
        raise OSError(f"cache entry did not survive a round trip: {entry.degree}")
    return reread


# --- comparison and report ----------------------------------------------------


@dataclass
class DiffEntry:
    lam: Partition
    lhs: QTZPoly
    rhs: QTZPoly

    @property
    def difference(self) -> QTZPoly:
        return self.lhs - self.rhs

    def to_json_dict(self) -> dict:
        return {
            "lambda": partition_to_str(self.lam),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "difference": str(self.difference),
        }


def compare_series(lhs: FrobeniusSeries, rhs: FrobeniusSeries) -> list[DiffEntry]:
    """Per-partition differences; empty exactly when the series agree."""
    if lhs.n != rhs.n:
        raise ValueError(f"cannot compare series of degree {lhs.n} and {rhs.n}")
    diffs = []
    for lam in partitions_of(lhs.n):
        a, b = lhs.coefficient(lam), rhs.coefficient(lam)
        if a != b:
            diffs.append(DiffEntry(lam, a, b))
    return diffs


@dataclass
class VerificationReport:
    n: int
    verdict: str
    diffs: list[DiffEntry]
    module_series: FrobeniusSeries
    delta_series: FrobeniusSeries
    specializations: dict
    stats: dict
    timing: dict = field(default_factory=dict)

    def to_json_dict(self, include_timing: bool = True) -> dict:
        data = {
            "engine_version": ENGINE_VERSION,
            "n": self.n,
            "verdict": self.verdict,
            "diffs": [d.to_json_dict() for d in self.diffs],
            "module_series": self.module_series.to_json_dict(),
            "delta_series": self.delta_series.to_json_dict(),
            "specializations": self.specializations,
            "stats": self.stats,
        }
        if include_timing:
            data["timing"] = self.timing
        return data


def verify_conjecture(
    n: int,
    extra_band: int = 1,
    threads: int = 1,
    cache_dir: str | Path | None = None,
    budget_seconds: float | None = None,
    max_ab: int | None = None,
    use_modp: bool = True,
) -> VerificationReport:
    """Compute both sides for n and compare them coefficient by coefficient."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t0 = time.monotonic()
    rhs = rhs_series(n)
    t_rhs = time.monotonic() - t0
    support = rhs.support()

    cache = ComponentCache(cache_dir) if cache_dir is not None else None
    remaining = None
    if budget_seconds is not None:
        remaining = max(0.0, budget_seconds - t_rhs)
    t1 = time.monotonic()
    module = frobenius_module(
        n,
        extra_band=extra_band,
        forced=support,
        threads=threads,
        use_modp=use_modp,
        max_ab=max_ab,
        budget_seconds=remaining,
        component_cache=cache,
        expect_support=support,
    )
    t_module = time.monotonic() - t1

    diffs = compare_series(module.series, rhs)
    computed_support = set(module.components)
    missing = sorted(d for d in support if d not in computed_support)
    if not module.closed or missing:
        verdict = INCONCLUSIVE
    elif diffs:
        verdict = DIFFER
    else:
        verdict = EQUAL

    z0 = module.series.specialize(z=0)
    specializations = {
        "z0_q1_t1_dimension": z0.total_dimension(),
        "q1_t1_z1_dimension": module.series.total_dimension(),
        "t0_module_series": module.series.specialize(t=0).to_json_dict()["coeffs"],
        "t0_delta_series": rhs.specialize(t=0).to_json_dict()["coeffs"],
    }
    rows = {
        str(c): {"closed": row.closed, "components": len(row.components)}
        for c, row in sorted(module.rows.items())
    }
    stats = {
        "components_computed": len(module.components),
        "max_component_dimension": max(
            (comp.dim for comp in module.components.values()), default=0
        ),
        "frontier_closed": module.closed,
        "rhs_support_size": len(support),
        "rhs_support_missing_on_module_side": [list(d) for d in missing],
        "theta_rows": rows,
        "extra_band": extra_band,
        "schur_positive_module": module.series.is_schur_positive(),
        "schur_positive_delta": rhs.is_schur_positive(),
    }
    timing = {
        "delta_side_seconds": round(t_rhs, 3),
        "module_side_seconds": round(t_module, 3),
        "total_seconds": round(time.monotonic() - t0, 3),
        "threads": threads,
    }
    return VerificationReport(
        n=n,
        verdict=verdict,
        diffs=diffs,
        module_series=module.series,
        delta_series=rhs,
        specializations=specializations,
        stats=stats,
        timing=timing,
    )


# --- rendering ----------------------------------------------------------------


def render_report(report: VerificationReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report.to_json_dict(), sort_keys=True, indent=2)
    if fmt == "csv":
        lines = ["lambda,module,delta,difference"]
        for d in report.diffs:
            lines.append(
                f'"{partition_to_str(d.lam)}","{d.lhs}","{d.rhs}","{d.difference}"'
            )
        return "\n".join(lines)
    if fmt == "latex":
        return _render_latex(report)
    if fmt == "text":
        return _render_text(report)
    raise ValueError(f"unknown format {fmt!r}")


def _sorted_lams(report: VerificationReport) -> list[Partition]:
    lams = set(report.module_series.coeffs) | set(report.delta_series.coeffs)
    return [lam for lam in partitions_of(report.n) if lam in lams]


def _render_text(report: VerificationReport) -> str:
    lines = [f"verification n={report.n}: {report.verdict}"]
    lines.append(
        "module components: {} (frontier closed: {})".format(
            report.stats["components_computed"], report.stats["frontier_closed"]
        )
    )
    if report.verdict == EQUAL:
        lines.append("schur expansion (both sides agree):")
        for lam in _sorted_lams(report):
            lines.append(
                f"  s({partition_to_str(lam)}): {report.module_series.coefficient(lam)}"
            )
    else:
        lines.append("module side:")
        for lam in report.module_series.sorted_partitions():
            lines.append(
                f"  s({partition_to_str(lam)}): {report.module_series.coefficient(lam)}"
            )
        lines.append("delta side:")
        for lam in report.delta_series.sorted_partitions():
            lines.append(
                f"  s({partition_to_str(lam)}): {report.delta_series.coefficient(lam)}"
            )
        if report.diffs:
            lines.append("differences:")
            for d in report.diffs:
                lines.append(f"  s({partition_to_str(d.lam)}): {d.difference}")
    spec = report.specializations
    lines.append(
        "specializations: z=0,q=t=1 -> {}; q=t=z=1 -> {}".format(
            spec["z0_q1_t1_dimension"], spec["q1_t1_z1_dimension"]
        )
    )
    lines.append(
        "timing: delta {}s, module {}s".format(
            report.timing.get("delta_side_seconds", "?"),
            report.timing.get("module_side_seconds", "?"),
        )
    )
    return "\n".join(lines)


def _render_latex(report: VerificationReport) -> str:
    lines = [
        r"\begin{tabular}{lll}",
        r"$\lambda$ & module & $\Delta'$ series \\ \hline",
    ]
    for lam in _sorted_lams(report):
        name = partition_to_str(lam)
        lhs = report.module_series.coefficient(lam)
        rhs = report.delta_series.coefficient(lam)
        lines.append(rf"$s_{{{name}}}$ & ${lhs}$ & ${rhs}$ \\")
    lines.append(r"\end{tabular}")
    lines.append(rf"% verdict: {report.verdict}")
    return "\n".join(lines)
