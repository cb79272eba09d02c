"""Exhaustive superregularity checks.

Selections are visited in a fixed canonical order: minor size ascending,
then row sets lexicographically, then column sets lexicographically. The
reported witness is the first singular selection in that order and
``minors_checked`` is its 1-based position (or the full count on success),
so serial and parallel runs give identical reports.
"""
from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

import numpy as np

from .companion import BlockMat
from .errors import NotBlockAligned, SizeTooLarge
from .field import FieldElem
from .linalg import Mat, _det_codes

SCHEMA = 1


@dataclass
class VerifyReport:
    verdict: bool
    witness: tuple | None
    minors_checked: int
    elapsed: float = 0.0
    block_size: int | None = None
    total: int = 0

    def to_dict(self):
        rows, cols = self.witness if self.witness else (None, None)
        return {
            "schema": SCHEMA,
            "index_base": 0,
            "verdict": self.verdict,
            "witness_rows": list(rows) if rows is not None else None,
            "witness_cols": list(cols) if cols is not None else None,
            "minors_checked": self.minors_checked,
            "block_size": self.block_size,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self):
        kind = "superregular" if self.block_size is None else f"{self.block_size}-block superregular"
        lines = [f"{kind}: {'PASS' if self.verdict else 'FAIL'}"]
        if self.witness:
            rows, cols = self.witness
            unit = "block " if self.block_size else ""
            lines.append(
                f"witness: singular {len(rows)}x{len(rows)} {unit}selection "
                f"rows {_fmt_set(rows)} cols {_fmt_set(cols)}"
            )
        lines.append(f"minors checked: {self.minors_checked} of {self.total}")
        lines.append(f"elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines)


def _fmt_set(idx, base=1):
    return "{" + ",".join(str(i + base) for i in idx) + "}"


def selection_count(m, t):
    """Number of square selections of an m x t grid: C(m+t, m) - 1."""
    return sum(comb(m, k) * comb(t, k) for k in range(1, min(m, t) + 1))


def _expand(sel, b):
    if b == 1:
        return list(sel)
    return [i * b + r for i in sel for r in range(b)]


def _scan(field, codes, b, k, row_sets, base_index, ncols, stop):
    """Scan a run of row sets; returns (first singular hit or None, minors computed)."""
    col_sets = list(combinations(range(ncols), k))
    per_row = len(col_sets)
    hit = None
    done = 0
    for ri, rows in enumerate(row_sets):
        sub_rows = codes[_expand(rows, b)]
        for ci, cols in enumerate(col_sets):
            done += 1
            if _det_codes(field, sub_rows[:, _expand(cols, b)]) == 0 and hit is None:
                hit = (base_index + ri * per_row + ci, rows, cols)
                if stop:
                    return hit, done
    return hit, done


def _scan_task(args):
    return _scan(*args)


def _run(field, codes, b, jobs, exhaustive, block_size):
    start = time.perf_counter()
    m, t = codes.shape[0] // b, codes.shape[1] // b
    total = selection_count(m, t)
    found = None
    offset = 0
    computed = 0
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for k in range(1, min(m, t) + 1):
            row_sets = list(combinations(range(m), k))
            per_row = comb(t, k)
            if pool is None:
                hit, done = _scan(field, codes, b, k, row_sets, offset, t, not exhaustive)
            else:
                chunk = max(1, -(-len(row_sets) // (jobs * 4)))
                tasks = [
                    (field, codes, b, k, row_sets[i:i + chunk], offset + i * per_row, t, not exhaustive)
                    for i in range(0, len(row_sets), chunk)
                ]
                results = list(pool.map(_scan_task, tasks))
                hits = [h for h, _ in results if h is not None]
                hit = min(hits, key=lambda h: h[0]) if hits else None
                done = sum(d for _, d in results)
            computed += done
            if hit is not None and found is None:
                found = hit
                if not exhaustive:
                    break
            offset += len(row_sets) * per_row
    finally:
        if pool is not None:
            pool.shutdown()
    elapsed = time.perf_counter() - start
    if found is None:
        return VerifyReport(True, None, computed, elapsed, block_size, total)
    idx, rows, cols = found
    # early exit: position of the witness, independent of how work was split
    checked = computed if exhaustive else idx + 1
    return VerifyReport(False, (rows, cols), checked, elapsed, block_size, total)


def is_superregular(M, jobs=1, exhaustive=False):
    """Every square submatrix of M (any shape) is nonsingular."""
    return _run(M.field, M.codes, 1, jobs, exhaustive, None)


def is_block_superregular(B, block_size=None, jobs=1, exhaustive=False):
    """Every square submatrix made of full b x b blocks is nonsingular.

    Accepts a BlockMat, or a Mat together with ``block_size``. The witness
    is given in block coordinates.
    """
    if isinstance(B, BlockMat):
        inner, b = B.inner, B.block_size if block_size is None else block_size
    else:
        inner, b = B, block_size
    if b is None or b < 1 or inner.rows % b or inner.cols % b:
        raise NotBlockAligned(f"{inner.rows}x{inner.cols} is not aligned to block size {b}")
    return _run(inner.field, inner.codes, b, jobs, exhaustive, b)


@dataclass
class MinorTable:
    k: int
    row_sets: list
    col_sets: list
    values: dict = dc_field(default_factory=dict)

    def __getitem__(self, key):
        return self.values[key]

    def grid(self):
        return [[self.values[(r, c)] for c in self.col_sets] for r in self.row_sets]

    def to_text(self, fmt=None):
        fmt = fmt or _fmt_value
        header = ["Rows\\Cols"] + [_fmt_set(c) for c in self.col_sets]
        body = [[_fmt_set(r)] + [fmt(v) for v in row] for r, row in zip(self.row_sets, self.grid())]
        widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
        out = [" | ".join(s.rjust(w) for s, w in zip(line, widths)) for line in [header] + body]
        out.insert(1, "-+-".join("-" * w for w in widths))
        return "\n".join(out)

    def to_csv(self, fmt=None):
        fmt = fmt or _fmt_value
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["rows", "cols", "value"])
        for r in self.row_sets:
            for c in self.col_sets:
                w.writerow([_fmt_set(r), _fmt_set(c), fmt(self.values[(r, c)])])
        return buf.getvalue()

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "index_base": 0,
            "k": self.k,
            "minors": [
                {"rows": list(r), "cols": list(c), "value": list(self.values[(r, c)].coeffs)}
                for r in self.row_sets
                for c in self.col_sets
            ],
        }


def _fmt_value(v):
    return repr(v) if v.field.n == 1 else v.to_poly_str()


def minor_table(M, k):
    """All k x k minors of M keyed by (row set, column set), 0-based."""
    if k < 1 or k > min(M.rows, M.cols):
        raise SizeTooLarge(f"k={k} outside [1, {min(M.rows, M.cols)}]")
    row_sets = list(combinations(range(M.rows), k))
    col_sets = list(combinations(range(M.cols), k))
    values = {}
    for r in row_sets:
        sub = M.codes[list(r)]
        for c in col_sets:
            values[(r, c)] = FieldElem(M.field, _det_codes(M.field, sub[:, list(c)]))
    return MinorTable(k, row_sets, col_sets, values)


def witness_matrix(M, report):
    """The singular submatrix named by a failing report."""
    rows, cols = report.witness
    b = report.block_size or 1
    return Mat.from_codes(M.field, M.codes[np.ix_(_expand(rows, b), _expand(cols, b))])
