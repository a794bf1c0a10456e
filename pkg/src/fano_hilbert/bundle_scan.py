"""Scan of the rank-m bundle O(1)^(m-1) + O(2) on P^m over a range of m.

For every m the cubic-and-beyond factor R of the Hilbert polynomial of
P(E) (n = 2m - 1, iota = m) is rebuilt from h0 data and tested for
splitting over Q and over R.  Records are computed independently per m and
collected in input order, so the output never depends on the worker count.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .exactq import UniPoly, rational_str
from .families import bundle_case2_poly
from .hilbert import serre_reflect
from .reducibility import analyze, structural_violations


@dataclass(frozen=True)
class ScanRecord:
    m: int
    r_factor: UniPoly
    q_split: bool
    r_split: bool
    rational_roots_of_R: tuple[tuple[Fraction, int], ...]
    serre_ok: bool
    elapsed: float = 0.0

    @property
    def degree(self) -> int:
        return self.r_factor.degree

    @property
    def root_pattern_expected(self) -> tuple[Fraction, ...]:
        """Rational roots of R predicted by the conjecture: -m/2 for odd m, none for even m."""
        return (Fraction(-self.m, 2),) if self.m % 2 else ()

    @property
    def root_pattern_holds(self) -> bool:
        roots = tuple(r for r, _ in self.rational_roots_of_R)
        return self.r_split and roots == self.root_pattern_expected

    def to_json(self, timing: bool = False) -> dict:
        d = {
            "m": self.m,
            "n": 2 * self.m - 1,
            "iota": self.m,
            "r_factor": self.r_factor.to_json(),
            "q_split": self.q_split,
            "r_split": self.r_split,
            "rational_roots_of_R": [
                {"root": rational_str(r), "mult": k} for r, k in self.rational_roots_of_R
            ],
            "serre_ok": self.serre_ok,
            "root_pattern_holds": self.root_pattern_holds,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d


def scan_one(m: int, structural: bool = False) -> ScanRecord:
    t0 = time.perf_counter()
    hp = bundle_case2_poly(m)
    rep = analyze(hp.r_factor)
    if structural:
        serre_ok = not structural_violations(hp)
    else:
        serre_ok = serre_reflect(hp) == hp.P
    return ScanRecord(
        m=m,
        r_factor=hp.r_factor,
        q_split=rep.q_verdict,
        r_split=rep.r_verdict,
        rational_roots_of_R=rep.rational_roots,
        serre_ok=serre_ok,
        elapsed=time.perf_counter() - t0,
    )


def default_workers() -> int:
    env = os.environ.get("FANO_HILBERT_WORKERS")
    if env:
        return max(1, int(env))
    return 1


def scan(m_min: int, m_max: int, workers: int | None = None, structural: bool = False) -> list[ScanRecord]:
    if m_min < 2 or m_max < m_min:
        raise ValueError(f"need 2 <= m_min <= m_max, got {m_min}..{m_max}")
    workers = default_workers() if workers is None else workers
    ms = list(range(m_min, m_max + 1))
    if workers <= 1 or len(ms) == 1:
        return [scan_one(m, structural) for m in ms]
    # map() yields in input order whatever the completion order
    with ProcessPoolExecutor(max_workers=workers) as pool:
        records = list(pool.map(scan_one, ms, [structural] * len(ms), chunksize=1))
    return records


# ---------------------------------------------------------------------------
# renderers

CSV_HEADER = ["m", "n", "iota", "deg_R", "q_split", "r_split", "rational_roots_of_R", "serre_ok", "root_pattern_holds"]


def _roots_text(rec: ScanRecord) -> str:
    return " ".join(
        rational_str(r) + (f"^{k}" if k > 1 else "") for r, k in rec.rational_roots_of_R
    )


def render_text(records: list[ScanRecord], timing: bool = False) -> str:
    head = f"{'m':>4} {'n':>4} {'deg R':>5}  {'Q-split':<7}  {'R-split':<7}  rational roots of R"
    if timing:
        head += "  (seconds)"
    lines = [head]
    for r in records:
        line = (
            f"{r.m:>4} {2 * r.m - 1:>4} {r.degree:>5}  {str(r.q_split).lower():<7}  "
            f"{str(r.r_split).lower():<7}  {_roots_text(r) or '-'}"
        )
        if timing:
            line += f"  {r.elapsed:.3f}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def render_jsonl(records: list[ScanRecord], timing: bool = False) -> str:
    return "".join(json.dumps(r.to_json(timing), sort_keys=True) + "\n" for r in records)


def render_csv(records: list[ScanRecord], timing: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER + (["elapsed"] if timing else []))
    for r in records:
        row = [r.m, 2 * r.m - 1, r.m, r.degree, str(r.q_split).lower(), str(r.r_split).lower(),
               _roots_text(r), str(r.serre_ok).lower(), str(r.root_pattern_holds).lower()]
        if timing:
            row.append(f"{r.elapsed:.6f}")
        w.writerow(row)
    return buf.getvalue()


@dataclass(frozen=True)
class EvidenceSummary:
    m_min: int
    m_max: int
    q_split_ms: tuple[int, ...]
    r_split_failures: tuple[int, ...]
    root_deviations: tuple[int, ...]

    @property
    def no_q_split_consistent(self) -> bool:
        """No m >= 4 in range where R splits over Q."""
        return not any(m >= 4 for m in self.q_split_ms)

    @property
    def root_pattern_consistent(self) -> bool:
        return not self.r_split_failures and not self.root_deviations


def evidence(records: list[ScanRecord]) -> EvidenceSummary:
    return EvidenceSummary(
        m_min=min(r.m for r in records),
        m_max=max(r.m for r in records),
        q_split_ms=tuple(r.m for r in records if r.q_split),
        r_split_failures=tuple(r.m for r in records if not r.r_split),
        root_deviations=tuple(
            r.m for r in records if tuple(x for x, _ in r.rational_roots_of_R) != r.root_pattern_expected
        ),
    )


def render_evidence(records: list[ScanRecord]) -> str:
    """Evidence table for the two open conjectures; counterexamples are listed, never hidden."""
    ev = evidence(records)
    lines = [
        f"bundle scan m = {ev.m_min}..{ev.m_max} ({len(records)} values)",
        f"  R splits over Q for m: {list(ev.q_split_ms) or 'none'}",
        f"  R fails to split over R for m: {list(ev.r_split_failures) or 'none'}",
        f"  rational roots of R differ from {{-m/2 if m odd}} for m: {list(ev.root_deviations) or 'none'}",
        f"  no Q-splitting for m >= 4: {'consistent' if ev.no_q_split_consistent else 'COUNTEREXAMPLE'}",
        f"  real splitting with roots {{-m/2}} / none: {'consistent' if ev.root_pattern_consistent else 'COUNTEREXAMPLE'}",
    ]
    return "\n".join(lines) + "\n"
