"""Spectrum tables: row construction, closed-form/numeric matching, CSV/JSON.

Rows carry the fixed column set l, m, branch, sign, E_closed, E_numeric,
rel_diff. Closed-form rows are labeled by the physical projection (m or m_j,
printed as a decimal) and matched to the numeric spectrum by sorted pairing of
magnitudes; numeric-only rows (asymmetric tops) are labeled by the
energy-ordered index within their sign branch and leave E_closed empty. Scan
tables prepend a single scan_value column. Numbers are emitted with 17
significant digits so identical configurations produce byte-identical output.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from .dirac import (
    DiracGyroParams,
    dirac_energies_numeric,
    dirac_energy_nonabelian,
    dirac_energy_symmetric,
    spectral_labels,
)
from .errors import ConfigError
from .kg import GyroParams, kg_energies_numeric, kg_energy_symmetric

CSV_COLUMNS = ("l", "m", "branch", "sign", "E_closed", "E_numeric", "rel_diff")
L_MAX_LIMIT = 50  # matrix dimension guard: 4*(2*50+1) = 404


@dataclass(frozen=True)
class SpectrumRow:
    l: int
    m: str
    branch: int | None
    sign: str
    e_closed: float | None
    e_numeric: float
    rel_diff: float | None
    scan_value: float | None = None


def _fmt(value: float | None) -> str:
    return "" if value is None else format(float(value), ".17g")


def _fmt_m2(m2: int) -> str:
    return str(m2 // 2) if m2 % 2 == 0 else format(m2 / 2.0, "g")


def _check_l_max(l_max: int) -> int:
    if int(l_max) != l_max or l_max < 0 or l_max > L_MAX_LIMIT:
        raise ConfigError(f"l_max must be an integer in [0, {L_MAX_LIMIT}], got {l_max!r}")
    return int(l_max)


def _signed_rows(l, m_label, branch, e_closed_mag, e_numeric_mag, sort_m):
    rows = []
    for sign_label, sgn in (("+", 1.0), ("-", -1.0)):
        closed = None if e_closed_mag is None else sgn * e_closed_mag
        numeric = sgn * e_numeric_mag
        rel = None
        if closed is not None:
            rel = abs(closed - numeric) / max(abs(numeric), 1e-300)
        rows.append((
            (l, sort_m, branch if branch is not None else 0, 0 if sign_label == "+" else 1),
            SpectrumRow(l=l, m=m_label, branch=branch, sign=sign_label,
                        e_closed=closed, e_numeric=numeric, rel_diff=rel),
        ))
    return rows


def _match_closed(keyed_closed, numeric_magnitudes):
    """Pair closed-form magnitudes with numeric ones by sorted order.

    keyed_closed: list of (key, magnitude). Both lists enumerate the same
    complete positive spectrum, so rank-for-rank pairing is the line-by-line
    match."""
    order = sorted(range(len(keyed_closed)), key=lambda i: (keyed_closed[i][1], keyed_closed[i][0]))
    numeric_sorted = sorted(numeric_magnitudes)
    paired = {}
    for rank, i in enumerate(order):
        key = keyed_closed[i][0]
        paired[key] = (keyed_closed[i][1], numeric_sorted[rank])
    return paired


def kg_table(params: GyroParams, l_max: int) -> list[SpectrumRow]:
    l_max = _check_l_max(l_max)
    keyed_rows = []
    for l in range(l_max + 1):
        numeric = kg_energies_numeric(l, params)
        positives = sorted(line.energy for line in numeric if line.sign > 0)
        if params.is_symmetric():
            keyed_closed = [
                (m, kg_energy_symmetric(l, m, params)[0]) for m in range(-l, l + 1)
            ]
            paired = _match_closed(keyed_closed, positives)
            for m in range(-l, l + 1):
                closed_mag, numeric_mag = paired[m]
                keyed_rows += _signed_rows(l, _fmt_m2(2 * m), None, closed_mag, numeric_mag, 2 * m)
        else:
            for rank, mag in enumerate(positives):
                keyed_rows += _signed_rows(l, str(rank), None, None, mag, rank)
    keyed_rows.sort(key=lambda pair: pair[0])
    return [row for _, row in keyed_rows]


def dirac_table(params: DiracGyroParams, l_max: int) -> list[SpectrumRow]:
    l_max = _check_l_max(l_max)
    closed_form = params.base.is_symmetric()
    keyed_rows = []
    for l in range(l_max + 1):
        numeric = dirac_energies_numeric(l, params)
        positives = sorted(line.energy for line in numeric if line.sign > 0)
        if closed_form:
            keyed_closed = []
            for mj2, branch in spectral_labels(l):
                if params.variant == "abelian":
                    pair_plus, _ = dirac_energy_symmetric(l, mj2, branch, params)
                else:
                    pair_plus, _ = dirac_energy_nonabelian(l, mj2, branch, params)
                keyed_closed.append(((mj2, branch), pair_plus.line.energy))
            paired = _match_closed(keyed_closed, positives)
            for mj2, branch in spectral_labels(l):
                closed_mag, numeric_mag = paired[(mj2, branch)]
                keyed_rows += _signed_rows(l, _fmt_m2(mj2), branch, closed_mag, numeric_mag, mj2)
        else:
            for rank, mag in enumerate(positives):
                keyed_rows += _signed_rows(l, str(rank), None, None, mag, rank)
    keyed_rows.sort(key=lambda pair: pair[0])
    return [row for _, row in keyed_rows]


SCAN_AXES = ("I3_over_I1", "mass", "v3")


def scan_values(start: float, stop: float, step: float) -> list[float]:
    if step <= 0:
        raise ConfigError(f"scan step must be positive, got {step!r}")
    if stop < start:
        raise ConfigError(f"scan stop {stop!r} is below start {start!r}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + k * step for k in range(count)]


def _scan_point(axis, value, params, l_max, target):
    base = params.base
    if axis == "I3_over_I1":
        new_base = replace(base, i3=value * base.i1)
        point = replace(params, base=new_base)
    elif axis == "mass":
        point = replace(params, base=replace(base, mass=value))
    elif axis == "v3":
        if not -1.0 <= value <= 1.0:
            raise ConfigError(f"scan value v3={value!r} outside [-1, 1]")
        vhat = (math.sqrt(max(1.0 - value * value, 0.0)), 0.0, value)
        point = DiracGyroParams(base=base, variant="nonabelian", v=vhat)
        target = "dirac"
    else:
        raise ConfigError(f"scan axis must be one of {SCAN_AXES}, got {axis!r}")
    if target == "kg":
        rows = kg_table(point.base, l_max)
    else:
        rows = dirac_table(point, l_max)
    return [replace(row, scan_value=value) for row in rows]


def scan_table(
    axis: str,
    start: float,
    stop: float,
    step: float,
    params: DiracGyroParams,
    l_max: int,
    target: str = "kg",
) -> list[SpectrumRow]:
    """Sweep one axis over a grid; grid points run concurrently and rows come
    back in deterministic grid order."""
    l_max = _check_l_max(l_max)
    if target not in ("kg", "dirac"):
        raise ConfigError(f"scan target must be 'kg' or 'dirac', got {target!r}")
    if axis not in SCAN_AXES:
        raise ConfigError(f"scan axis must be one of {SCAN_AXES}, got {axis!r}")
    values = scan_values(start, stop, step)
    with ThreadPoolExecutor(max_workers=min(8, max(1, len(values)))) as pool:
        chunks = list(pool.map(
            lambda v: _scan_point(axis, v, params, l_max, target), values
        ))
    return [row for chunk in chunks for row in chunk]


def rows_to_csv(rows: list[SpectrumRow]) -> str:
    has_scan = any(row.scan_value is not None for row in rows)
    header = (("scan_value",) if has_scan else ()) + CSV_COLUMNS
    lines = [",".join(header)]
    for row in rows:
        cells = []
        if has_scan:
            cells.append(_fmt(row.scan_value))
        cells += [
            str(row.l),
            row.m,
            "" if row.branch is None else str(row.branch),
            row.sign,
            _fmt(row.e_closed),
            _fmt(row.e_numeric),
            _fmt(row.rel_diff),
        ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def rows_to_dicts(rows: list[SpectrumRow]) -> list[dict]:
    out = []
    for row in rows:
        record = {
            "l": row.l,
            "m": row.m,
            "branch": row.branch,
            "sign": row.sign,
            "E_closed": row.e_closed,
            "E_numeric": row.e_numeric,
            "rel_diff": row.rel_diff,
        }
        if row.scan_value is not None:
            record["scan_value"] = row.scan_value
        out.append(record)
    return out


def rows_to_json(rows: list[SpectrumRow], meta: dict | None = None) -> str:
    payload = {"meta": meta or {}, "rows": rows_to_dicts(rows)}
    return json.dumps(payload, indent=2) + "\n"
