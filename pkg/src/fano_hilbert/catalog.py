"""Embedded classification tables and their regression against the pipeline.

Each row names a variety, the numeric data that determines its Hilbert
polynomial and, where the literature states one, the expected verdict.
``classify`` rebuilds the polynomial from the numbers alone, so a table row
and the generator that consumes it check each other.

CSV columns: dim, id, description, b2, variant, v1, v2, expected_q,
expected_r, provenance and an optional tags column (``;``-separated, e.g.
``toric;external``).  Meaning of (v1, v2) per variant:

    surface     K^2, iota
    threefold   (-K)^3, iota
    chern4      K^4, c_2 . K^2          (anticanonical polarization, iota = 1)
    delpezzo    n, d = H^n
    mukai       n, d = H^n = 2g - 2

JSON input is a list of objects with the same keys (or ``{"entries": [...]}``).
"""

from __future__ import annotations

import csv
import io
import json
import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import IO, Iterable

from .exactq import rational_sqrt, rational_str
from .families import (
    ChernData4,
    DelPezzoData,
    MukaiData,
    OutsideClassificationWarning,
    del_pezzo,
    fourfold_conditions,
    fourfold_from_chern,
    mukai,
    surface_from_K2,
    threefold_condition,
    threefold_from_K3,
)
from .hilbert import HilbertPolynomial, center
from .reducibility import ReducibilityReport, analyze, gamma_lines

VARIANTS = {"surface": 2, "threefold": 3, "chern4": 4, "delpezzo": None, "mukai": None}
COLUMNS = ["dim", "id", "description", "b2", "variant", "v1", "v2", "expected_q", "expected_r", "provenance"]
EMBEDDED = ("surfaces.csv", "delpezzo.csv", "mukai.csv", "threefolds.csv", "fourfolds.csv")


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    dim: int
    id: str
    description: str
    variant: str
    v1: int | None
    v2: int | None
    b2: int | None = None
    expected_q: bool | None = None
    expected_r: bool | None = None
    provenance: str = ""
    tags: tuple[str, ...] = ()

    @property
    def toric(self) -> bool:
        return "toric" in self.tags

    @property
    def external(self) -> bool:
        """Numeric data taken from outside the reference statements."""
        return "external" in self.tags

    def to_json(self) -> dict:
        d = {k: getattr(self, k) for k in COLUMNS}
        d["tags"] = list(self.tags)
        return d


def _opt_int(raw, col: str, row: int) -> int | None:
    if raw is None or (isinstance(raw, str) and not raw.strip()):
        return None
    if isinstance(raw, bool):
        raise CatalogError(f"row {row}: column {col} must be an integer, got {raw!r}")
    try:
        return int(str(raw).strip())
    except ValueError:
        raise CatalogError(f"row {row}: column {col} must be an integer, got {raw!r}") from None


def _opt_bool(raw, col: str, row: int) -> bool | None:
    if raw is None or isinstance(raw, bool):
        return raw
    s = str(raw).strip().lower()
    if not s:
        return None
    if s in ("true", "yes", "1"):
        return True
    if s in ("false", "no", "0"):
        return False
    raise CatalogError(f"row {row}: column {col} must be true/false, got {raw!r}")


def _entry_from_mapping(rec: dict, row: int) -> CatalogEntry:
    missing = [c for c in ("dim", "id", "variant") if not str(rec.get(c) or "").strip()]
    if missing:
        raise CatalogError(f"row {row}: missing column(s) {', '.join(missing)}")
    variant = str(rec["variant"]).strip()
    if variant not in VARIANTS:
        raise CatalogError(f"row {row}: unknown data variant {variant!r}")
    dim = _opt_int(rec["dim"], "dim", row)
    want = VARIANTS[variant]
    if want is not None and dim != want:
        raise CatalogError(f"row {row}: variant {variant} needs dim {want}, got {dim}")
    v1 = _opt_int(rec.get("v1"), "v1", row)
    v2 = _opt_int(rec.get("v2"), "v2", row)
    if variant in ("delpezzo", "mukai") and v1 is not None and v1 != dim:
        raise CatalogError(f"row {row}: {variant} dimension v1={v1} differs from dim={dim}")
    tags = rec.get("tags") or ()
    if isinstance(tags, str):
        tags = tuple(t.strip() for t in tags.split(";") if t.strip())
    return CatalogEntry(
        dim=dim,
        id=str(rec["id"]).strip(),
        description=str(rec.get("description") or "").strip(),
        variant=variant,
        v1=v1,
        v2=v2,
        b2=_opt_int(rec.get("b2"), "b2", row),
        expected_q=_opt_bool(rec.get("expected_q"), "expected_q", row),
        expected_r=_opt_bool(rec.get("expected_r"), "expected_r", row),
        provenance=str(rec.get("provenance") or "").strip(),
        tags=tuple(tags),
    )


def load_catalog(source: IO[bytes] | bytes | str) -> list[CatalogEntry]:
    """Parse CSV or JSON catalog data; errors name the offending row (1 = first data row)."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8-sig")
    text = source.strip()
    if not text:
        return []
    if text[0] in "[{":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CatalogError(f"malformed JSON catalog: {exc}") from exc
        if isinstance(data, dict):
            data = data.get("entries", [])
        if not isinstance(data, list):
            raise CatalogError("JSON catalog must be a list of entries")
        out = []
        for i, rec in enumerate(data, start=1):
            if not isinstance(rec, dict):
                raise CatalogError(f"row {i}: entry must be an object")
            out.append(_entry_from_mapping(rec, i))
        return out
    reader = csv.DictReader(io.StringIO(text))
    absent = [c for c in ("dim", "id", "variant") if c not in (reader.fieldnames or [])]
    if absent:
        raise CatalogError(f"CSV header lacks column(s) {', '.join(absent)}")
    out = []
    for i, rec in enumerate(reader, start=1):
        if None in rec:
            raise CatalogError(f"row {i}: too many fields")
        out.append(_entry_from_mapping(rec, i))
    return out


def load_embedded(dim: int | None = None) -> list[CatalogEntry]:
    pkg = resources.files("fano_hilbert") / "data"
    out: list[CatalogEntry] = []
    for name in EMBEDDED:
        try:
            out.extend(load_catalog((pkg / name).read_bytes()))
        except CatalogError as exc:
            raise CatalogError(f"{name}: {exc}") from exc
    if dim is not None:
        out = [e for e in out if e.dim == dim]
    return out


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    entry: CatalogEntry
    hp: HilbertPolynomial
    report: ReducibilityReport
    invariants: dict = field(default_factory=dict)

    @property
    def mismatches(self) -> list[str]:
        out = []
        e, r = self.entry, self.report
        if e.expected_q is not None and e.expected_q != r.q_verdict:
            out.append(f"expected q={e.expected_q}, computed {r.q_verdict}")
        if e.expected_r is not None and e.expected_r != r.r_verdict:
            out.append(f"expected r={e.expected_r}, computed {r.r_verdict}")
        return out

    @property
    def status(self) -> str:
        if self.entry.expected_q is None and self.entry.expected_r is None:
            return "unchecked"
        return "MISMATCH" if self.mismatches else "ok"

    def to_json(self) -> dict:
        return {
            "entry": self.entry.to_json(),
            "polynomial": self.hp.to_json(),
            "report": self.report.to_json(),
            "invariants": self.invariants,
            "status": self.status,
            "mismatches": self.mismatches,
        }


def _build(entry: CatalogEntry) -> tuple[HilbertPolynomial, dict]:
    v1, v2 = entry.v1, entry.v2
    if v1 is None or v2 is None:
        raise CatalogError(f"entry not classifiable: {entry.id} has no numeric data")
    if entry.variant == "surface":
        hp = surface_from_K2(v1, v2)
        return hp, {"K2": v1, "centered": str(center(hp)).replace("z", "w")}
    if entry.variant == "threefold":
        cond = threefold_condition(v1)
        return threefold_from_K3(v1, v2), {
            "mK3": v1,
            "condition": rational_str(cond),
            "condition_is_square": rational_sqrt(cond) is not None,
        }
    if entry.variant == "chern4":
        return fourfold_from_chern(ChernData4(v1, v2, 1)), fourfold_conditions(v1, v2).to_json()
    if entry.variant == "delpezzo":
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", OutsideClassificationWarning)
            hp, delta = del_pezzo(DelPezzoData(v1, v2))
        return hp, {"Delta": rational_str(delta)}
    if entry.variant == "mukai":
        data = MukaiData(v1, v2)
        hp, delta = mukai(data)
        return hp, {"Delta": rational_str(delta), "anticanonical_degree": data.anticanonical_degree}
    raise CatalogError(f"unknown data variant {entry.variant!r}")  # pragma: no cover


def classify(entry: CatalogEntry) -> Classification:
    hp, inv = _build(entry)
    rep = analyze(hp.P)
    inv["gamma_Q"] = [
        ln.equation + (f" (x{ln.multiplicity})" if ln.multiplicity > 1 else "")
        for ln in gamma_lines(hp, 1).q_lines
    ]
    return Classification(entry, hp, rep, inv)


def _natural_key(s: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


@dataclass(frozen=True)
class ReportRow:
    id: str
    dim: int
    description: str
    data: str
    q: str
    r: str
    status: str
    invariants: str
    gamma_q: str

    def as_list(self) -> list[str]:
        return [self.id, str(self.dim), self.description, self.data, self.q, self.r,
                self.status, self.invariants, self.gamma_q]


REPORT_HEADER = ["id", "dim", "description", "data", "q", "r", "status", "invariants", "gamma_Q"]


def _fmt_inv(inv: dict) -> str:
    keep = []
    for key in ("K2", "mK3", "condition", "Delta", "alpha", "beta", "gamma", "centered"):
        if key in inv and inv[key] is not None:
            keep.append(f"{key}={inv[key]}")
    return " ".join(keep)


def report(entries: Iterable[CatalogEntry]) -> list[ReportRow]:
    rows = []
    for e in sorted(entries, key=lambda e: _natural_key(e.id)):
        data = f"{e.variant}({'' if e.v1 is None else e.v1},{'' if e.v2 is None else e.v2})"
        try:
            c = classify(e)
        except CatalogError:
            rows.append(ReportRow(e.id, e.dim, e.description, data, "n/a", "n/a", "not classifiable", "", ""))
            continue
        rows.append(
            ReportRow(
                e.id, e.dim, e.description, data,
                str(c.report.q_verdict).lower(), str(c.report.r_verdict).lower(),
                c.status, _fmt_inv(c.invariants), "; ".join(c.invariants["gamma_Q"]),
            )
        )
    return rows


def render_text(rows: list[ReportRow]) -> str:
    if not rows:
        return ""
    table = [REPORT_HEADER] + [r.as_list() for r in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(REPORT_HEADER))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in table]
    return "\n".join(lines) + "\n"


def render_csv(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_HEADER)
    for r in rows:
        w.writerow(r.as_list())
    return buf.getvalue()


def render_json(rows: list[ReportRow]) -> str:
    return json.dumps([dict(zip(REPORT_HEADER, r.as_list())) for r in rows], indent=2) + "\n"


def group_by_chern(entries: Iterable[CatalogEntry]) -> dict[tuple[int, int], list[str]]:
    """Fourfold rows grouped by (K^4, c_2 . K^2), in order of appearance."""
    groups: dict[tuple[int, int], list[str]] = {}
    for e in entries:
        if e.variant == "chern4" and e.v1 is not None and e.v2 is not None:
            groups.setdefault((e.v1, e.v2), []).append(e.id)
    return groups


def alpha_of(k: int, h: int) -> Fraction | None:
    return fourfold_conditions(k, h).alpha
