"""Record ingestion, result tables, and grid sweeps with PPM heatmaps."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Sequence, TextIO

import numpy as np

from .core import (
    DEFAULT_TOL,
    DerivedIndices,
    DomainError,
    InformationKind,
    NeutrosophicTriple,
    classify,
    derive_indices,
)
from .decomposition import COMPONENTS, HeptaDecomposition, decompose, decompose_arrays
from .entropy import EntropyVariant, entropy, entropy_arrays

FORMATS = ("csv", "jsonl")
TRIPLE_FIELDS = ("mu", "omega", "nu")

RESULT_COLUMNS = (
    ("id", "mu", "omega", "nu", "tau", "pi", "kappa", "alpha", "kind", "entropy_c", "entropy_r")
    + tuple(f"{name}_c" for name in COMPONENTS)
    + tuple(f"{name}_r" for name in COMPONENTS)
)
CLASSIFY_COLUMNS = ("id", "mu", "omega", "nu", "kind")

#: Every scalar a grid sweep can tabulate.
QUANTITIES = ("entropy_c", "entropy_r") + tuple(
    f"{name}_{v}" for v in ("c", "r") for name in COMPONENTS
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Record:
    triple: NeutrosophicTriple
    id: str | None = None


@dataclass(frozen=True)
class ParsedRecords:
    records: list[Record]
    clamped: int = 0

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)


@dataclass(frozen=True)
class ResultRow:
    id: str | None
    triple: NeutrosophicTriple
    indices: DerivedIndices
    kind: InformationKind
    entropy_c: float
    entropy_r: float
    hepta_c: HeptaDecomposition
    hepta_r: HeptaDecomposition


@dataclass(frozen=True)
class GridSpec:
    omega: float
    resolution: int
    quantity: str

    def __post_init__(self):
        if isinstance(self.resolution, bool) or int(self.resolution) != self.resolution:
            raise ValueError(f"resolution must be an integer, got {self.resolution!r}")
        if self.resolution < 2:
            raise ValueError(f"resolution must be >= 2, got {self.resolution}")
        if not (math.isfinite(self.omega) and 0.0 <= self.omega <= 1.0):
            raise DomainError(f"omega out of range [0, 1]: {self.omega!r}", field="omega")
        if self.quantity not in QUANTITIES:
            raise ValueError(
                f"unknown quantity {self.quantity!r}; expected one of {', '.join(QUANTITIES)}"
            )


def fmt_number(x: float) -> str:
    """Twelve significant digits; never emits ``-0``."""
    x = float(x)
    if x == 0.0:
        return "0"
    return f"{x:.12g}"


def _round12(x: float) -> float:
    return float(fmt_number(x))


# -- parsing ----------------------------------------------------------------

def _read_text(stream: BinaryIO | TextIO | bytes | str) -> str:
    if isinstance(stream, (bytes, str)):
        data = stream
    else:
        data = stream.read()
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    return data.lstrip("\ufeff")


def _to_triple(values: dict, line: int, clamp: bool) -> tuple[NeutrosophicTriple, bool]:
    clamped = False
    out = []
    for name in TRIPLE_FIELDS:
        x = values[name]
        if not math.isfinite(x):
            raise DomainError(f"{name} not finite: {x!r}", field=name, line=line)
        if x < 0.0 or x > 1.0:
            if not clamp:
                raise DomainError(f"{name} out of range [0, 1]: {x!r}", field=name, line=line)
            x = min(max(x, 0.0), 1.0)
            clamped = True
        out.append(x)
    return NeutrosophicTriple(*out), clamped


def _check_id(raw, line: int) -> str | None:
    if raw is None:
        return None
    if not isinstance(raw, str):
        raise ParseError(f"id must be a string, got {raw!r}", line)
    raw = raw.strip()
    if not raw:
        return None
    if "," in raw or "\n" in raw or "\r" in raw:
        raise ParseError(f"id contains a delimiter: {raw!r}", line)
    return raw


def _parse_csv(text: str, clamp: bool) -> ParsedRecords:
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty input: header row required", 1) from None
    columns = [h.strip().lower() for h in header]
    position = {}
    for i, name in enumerate(columns):
        if name in TRIPLE_FIELDS + ("id",):
            if name in position:
                raise ParseError(f"duplicate column {name!r}", 1)
            position[name] = i
    for name in TRIPLE_FIELDS:
        if name not in position:
            raise ParseError(f"missing column {name!r}", 1)

    records, clamped = [], 0
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(columns):
            raise ParseError(f"expected {len(columns)} fields, found {len(row)}", line)
        values = {}
        for name in TRIPLE_FIELDS:
            cell = row[position[name]].strip()
            try:
                values[name] = float(cell)
            except ValueError:
                raise ParseError(f"{name} is not a number: {cell!r}", line) from None
        triple, was_clamped = _to_triple(values, line, clamp)
        clamped += was_clamped
        rid = _check_id(row[position["id"]], line) if "id" in position else None
        records.append(Record(triple, rid))
    return ParsedRecords(records, clamped)


def _parse_jsonl(text: str, clamp: bool) -> ParsedRecords:
    records, clamped = [], 0
    for line, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line) from None
        if not isinstance(obj, dict):
            raise ParseError("expected a JSON object", line)
        values = {}
        for name in TRIPLE_FIELDS:
            if name not in obj:
                raise ParseError(f"missing key {name!r}", line)
            x = obj[name]
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise ParseError(f"{name} is not a number: {x!r}", line)
            values[name] = float(x)
        triple, was_clamped = _to_triple(values, line, clamp)
        clamped += was_clamped
        records.append(Record(triple, _check_id(obj.get("id"), line)))
    return ParsedRecords(records, clamped)


def parse_records(stream, format: str = "csv", clamp: bool = False) -> ParsedRecords:
    """Read records from a CSV or JSONL stream.

    CSV needs a header naming ``mu``, ``omega`` and ``nu`` (any order and
    case; ``id`` optional, unknown columns ignored). JSONL needs one object
    per line with the same keys. Out-of-range values raise
    :class:`DomainError` unless ``clamp`` is set, in which case they are
    pulled into [0, 1] and counted in ``clamped``.
    """
    text = _read_text(stream)
    if format == "csv":
        return _parse_csv(text, clamp)
    if format == "jsonl":
        return _parse_jsonl(text, clamp)
    raise ValueError(f"unknown format {format!r}")


# -- results ----------------------------------------------------------------

def compute_row(record: Record, tol: float = DEFAULT_TOL) -> ResultRow:
    t = record.triple
    return ResultRow(
        id=record.id,
        triple=t,
        indices=derive_indices(t),
        kind=classify(t, tol),
        entropy_c=entropy(t, EntropyVariant.CZEKANOWSKI).entropy,
        entropy_r=entropy(t, EntropyVariant.RUZICKA).entropy,
        hepta_c=decompose(t, EntropyVariant.CZEKANOWSKI),
        hepta_r=decompose(t, EntropyVariant.RUZICKA),
    )


def compute_rows(records: Iterable[Record], tol: float = DEFAULT_TOL) -> list[ResultRow]:
    return [compute_row(r, tol) for r in records]


def _row_fields(row: ResultRow) -> dict:
    out = {"id": row.id, "mu": row.triple.mu, "omega": row.triple.omega, "nu": row.triple.nu}
    ix = row.indices
    out.update(tau=ix.tau, pi=ix.pi, kappa=ix.kappa, alpha=ix.alpha)
    out["kind"] = row.kind.value
    out["entropy_c"] = row.entropy_c
    out["entropy_r"] = row.entropy_r
    for suffix, hepta in (("c", row.hepta_c), ("r", row.hepta_r)):
        for name, value in hepta.as_dict().items():
            out[f"{name}_{suffix}"] = value
    return out


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return fmt_number(value)


def _write_table(rows: Iterable[dict], columns: Sequence[str], format: str) -> bytes:
    buf = io.StringIO(newline="")
    if format == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for fields in rows:
            writer.writerow([_cell(fields[c]) for c in columns])
    elif format == "jsonl":
        for fields in rows:
            obj = {
                c: fields[c] if fields[c] is None or isinstance(fields[c], str) else _round12(fields[c])
                for c in columns
            }
            buf.write(json.dumps(obj) + "\n")
    else:
        raise ValueError(f"unknown format {format!r}")
    return buf.getvalue().encode("utf-8")


def emit_results(rows: Sequence[ResultRow], format: str = "csv") -> bytes:
    """Serialize result rows, input order preserved.

    Columns: id, mu, omega, nu, tau, pi, kappa, alpha, kind, entropy_c,
    entropy_r, then ``t_c .. s_c`` and ``t_r .. s_r``. Numbers carry twelve
    significant digits.
    """
    return _write_table((_row_fields(r) for r in rows), RESULT_COLUMNS, format)


def emit_classification(records: Sequence[Record], format: str = "csv", tol: float = DEFAULT_TOL) -> bytes:
    rows = (
        {"id": r.id, "mu": r.triple.mu, "omega": r.triple.omega, "nu": r.triple.nu,
         "kind": classify(r.triple, tol).value}
        for r in records
    )
    return _write_table(rows, CLASSIFY_COLUMNS, format)


# -- grid sweeps ------------------------------------------------------------

def resolve_quantity(quantity: str, variant: str | None = None) -> str:
    """Map a CLI quantity (``n`` + variant ``c``, ``entropy`` + ``r``, or a
    full name like ``u_c``) to one of :data:`QUANTITIES`."""
    q = quantity.strip().lower()
    v = None if variant is None else EntropyVariant.parse(variant).value
    if q in QUANTITIES:
        if v is not None and not q.endswith("_" + v):
            raise ValueError(f"quantity {q!r} conflicts with variant {v!r}")
        return q
    name = f"{q}_{v or 'c'}"
    if name in QUANTITIES:
        return name
    raise ValueError(f"unknown quantity {quantity!r}")


def evaluate_quantity(quantity: str, mu, omega, nu) -> np.ndarray:
    name, _, suffix = quantity.rpartition("_")
    variant = EntropyVariant.parse(suffix)
    if name == "entropy":
        return np.asarray(entropy_arrays(mu, omega, nu, variant), dtype=float)
    return decompose_arrays(mu, omega, nu, variant)[name]


def grid_values(g: GridSpec) -> tuple[np.ndarray, np.ndarray]:
    """Lattice coordinates and values; ``values[i, j]`` sits at
    ``nu = axis[i]``, ``mu = axis[j]``."""
    axis = np.arange(g.resolution) / (g.resolution - 1)
    nu, mu = np.meshgrid(axis, axis, indexing="ij")
    omega = np.full_like(mu, g.omega)
    return axis, evaluate_quantity(g.quantity, mu, omega, nu)


def encode_ppm(values: np.ndarray) -> bytes:
    """Binary P6 grayscale: 0 is black, 1 is white, row 0 first."""
    gray = np.rint(np.clip(values, 0.0, 1.0) * 255.0).astype(np.uint8)
    h, w = gray.shape
    rgb = np.repeat(gray[:, :, None], 3, axis=2)
    return b"P6\n%d %d\n255\n" % (w, h) + rgb.tobytes()


def render_grid(g: GridSpec) -> tuple[bytes, bytes]:
    """CSV table (mu, nu, value; rows ascending in nu then mu) and a PPM."""
    axis, values = grid_values(g)
    lines = ["mu,nu,value"]
    text_axis = [fmt_number(x) for x in axis]
    for i, nu_text in enumerate(text_axis):
        for j, mu_text in enumerate(text_axis):
            lines.append(f"{mu_text},{nu_text},{fmt_number(values[i, j])}")
    table = ("\n".join(lines) + "\n").encode("utf-8")
    return table, encode_ppm(values)
