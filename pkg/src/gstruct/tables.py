"""Component tables: orchestration, formatting and a result cache.

`run_compute` turns a group descriptor into a ComponentTable with one
row per multiplicity block, sorted like the appendix tables (genus, d,
canonical orbit code).  Rows render in markdown, csv or versioned json;
cusp widths print as `w^count` factors ascending in w, e.g. "1^1 2^1".

The cache stores the json form of a table keyed by descriptor and
congruence options; writes are atomic (temp file + rename), corrupt or
version-mismatched entries are treated as misses.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import warnings
from collections import Counter
from dataclasses import asdict, dataclass, field

from .congruence import ORACLE_CAP
from .invariants import component_record, multiplicity_blocks, orbit_canonical_code
from .families import builtin_group
from .orbits import orbit_decompose
from .pairs import PairEngine

SCHEMA_VERSION = 1
CACHE_ENV_VAR = "GSTRUCT_CACHE_DIR"

_CONG_SHORT = {"congruence": "cong", "noncongruence": "ncng", "undetermined": "undet"}


@dataclass
class TableRow:
    label: str
    m: int
    d: int
    c4: int
    c6: int
    c_neg1: int
    cusp_widths: tuple
    genus: int
    congruence: str  # congruence | noncongruence | undetermined
    fine: bool
    e: int
    genus_cover: int
    level: int
    nielsen_label: str
    tested_modulus: int
    method: str


@dataclass
class ComponentTable:
    group: str
    order: int
    rows: list = field(default_factory=list)

    @property
    def total_pairs(self):
        return sum(r.m * r.d for r in self.rows)

    def has_undetermined(self):
        return any(r.congruence == "undetermined" for r in self.rows)


def format_widths(widths):
    counts = Counter(widths)
    return " ".join("%d^%d" % (w, c) for w, c in sorted(counts.items()))


def parse_widths(text):
    out = []
    for part in text.split():
        w, c = part.split("^")
        out += [int(w)] * int(c)
    return tuple(out)


def run_compute(spec, congruence="both", oracle_cap=ORACLE_CAP, cache_dir=None):
    """Compute (or load from cache) the component table of a group."""
    cached = load_cached(spec, congruence, oracle_cap, cache_dir)
    if cached is not None:
        return cached
    G = builtin_group(spec)
    engine = PairEngine(G)
    pairs = engine.enumerate()
    orbits = orbit_decompose(G, pairs, engine=engine)
    blocks = multiplicity_blocks(orbits)
    entries = []
    for blk in blocks:
        rec = component_record(G, orbits[blk[0]], congruence=congruence, oracle_cap=oracle_cap)
        for i in blk[1:]:
            other = component_record(G, orbits[i], congruence=congruence, oracle_cap=oracle_cap)
            if (other.d, other.cusp_widths, other.c4, other.c6, other.c_neg1,
                other.genus, other.e, other.genus_cover, other.fine,
                other.congruence.verdict) != (
                rec.d, rec.cusp_widths, rec.c4, rec.c6, rec.c_neg1,
                rec.genus, rec.e, rec.genus_cover, rec.fine,
                rec.congruence.verdict,
            ):
                raise AssertionError("records differ inside a multiplicity block")
        entries.append((len(blk), rec, orbit_canonical_code(orbits[blk[0]])))
    entries.sort(key=lambda t: (t[1].genus, t[1].d, t[2]))
    table = ComponentTable(group=spec, order=G.order)
    for i, (m, rec, _code) in enumerate(entries, start=1):
        table.rows.append(
            TableRow(
                label="Γ(%s)_%d" % (spec, i),
                m=m,
                d=rec.d,
                c4=rec.c4,
                c6=rec.c6,
                c_neg1=rec.c_neg1,
                cusp_widths=rec.cusp_widths,
                genus=rec.genus,
                congruence=rec.congruence.verdict,
                fine=rec.fine,
                e=rec.e,
                genus_cover=rec.genus_cover,
                level=rec.level,
                nielsen_label=rec.nielsen_label,
                tested_modulus=rec.congruence.tested_modulus,
                method=rec.congruence.method,
            )
        )
    if table.total_pairs != len(pairs):
        raise AssertionError("row multiplicities do not account for all pairs")
    cache(table, congruence, oracle_cap, cache_dir)
    return table


_MD_HEADER = ["Label", "Size", "m", "d", "c4", "c6", "c_-1", "Cusp Widths",
              "Genus", "c/nc", "c/f", "e", "g", "level", "N-class"]


def _row_cells(table, row):
    return [
        row.label,
        str(table.order),
        str(row.m),
        str(row.d),
        str(row.c4),
        str(row.c6),
        str(row.c_neg1),
        format_widths(row.cusp_widths),
        str(row.genus),
        _CONG_SHORT[row.congruence],
        "fine" if row.fine else "crse",
        str(row.e),
        str(row.genus_cover),
        str(row.level),
        row.nielsen_label,
    ]


def emit_table(table, fmt="md"):
    if fmt == "md":
        lines = ["| " + " | ".join(_MD_HEADER) + " |",
                 "|" + "|".join("---" for _ in _MD_HEADER) + "|"]
        for row in table.rows:
            lines.append("| " + " | ".join(_row_cells(table, row)) + " |")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        lines = [",".join(_MD_HEADER)]
        for row in table.rows:
            lines.append(",".join(_row_cells(table, row)))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps(table_to_dict(table), indent=2, sort_keys=True) + "\n"
    raise ValueError("unknown format %r" % fmt)


def table_to_dict(table):
    return {
        "schema_version": SCHEMA_VERSION,
        "group": table.group,
        "order": table.order,
        "rows": [dict(asdict(r), cusp_widths=format_widths(r.cusp_widths)) for r in table.rows],
    }


def table_from_dict(data):
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError("schema version mismatch")
    table = ComponentTable(group=data["group"], order=data["order"])
    for r in data["rows"]:
        r = dict(r)
        r["cusp_widths"] = parse_widths(r["cusp_widths"])
        table.rows.append(TableRow(**r))
    return table


def _cache_dir(cache_dir):
    return cache_dir or os.environ.get(CACHE_ENV_VAR)


def _cache_path(directory, spec, congruence, oracle_cap):
    key = json.dumps([SCHEMA_VERSION, spec, congruence, oracle_cap])
    digest = hashlib.sha256(key.encode()).hexdigest()[:24]
    return os.path.join(directory, "gstruct-%s.json" % digest)


def cache(table, congruence="both", oracle_cap=ORACLE_CAP, cache_dir=None):
    directory = _cache_dir(cache_dir)
    if directory is None:
        return None
    os.makedirs(directory, exist_ok=True)
    path = _cache_path(directory, table.group, congruence, oracle_cap)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(table_to_dict(table), fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load_cached(spec, congruence="both", oracle_cap=ORACLE_CAP, cache_dir=None):
    directory = _cache_dir(cache_dir)
    if directory is None:
        return None
    path = _cache_path(directory, spec, congruence, oracle_cap)
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        warnings.warn("ignoring corrupt cache entry %s" % path)
        return None
    if not isinstance(data, dict) or data.get("schema_version") != SCHEMA_VERSION:
        return None  # stale schema: plain miss
    try:
        return table_from_dict(data)
    except (ValueError, KeyError, TypeError):
        warnings.warn("ignoring corrupt cache entry %s" % path)
        return None
