"""Constructions of superregular and block superregular matrices.

Every construction re-checks its hypotheses unless called with
``check=False``: the conclusions only hold under them.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from functools import reduce
from itertools import combinations
from math import gcd

import numpy as np

from .companion import BlockMat, CompanionCtx
from .errors import (
    BadCoefficientRange,
    BadGeneratorExponent,
    ConstraintViolated,
    ContextMismatch,
    DimensionMismatch,
    MalformedBase,
    NotSuperregular,
    SingularB,
    SingularFactor,
)
from .field import GF
from .linalg import Mat, det, kron
from .verify import is_superregular

log = logging.getLogger(__name__)


def _require_superregular(A, index=None, jobs=1):
    report = is_superregular(A, jobs=jobs)
    if not report.verdict:
        where = "" if index is None else f" (factor {index})"
        raise NotSuperregular(f"input{where} is not superregular", index=index, report=report)


def _require_nonsingular(B, exc=SingularB, **kw):
    if not B.is_square:
        raise DimensionMismatch(f"{B.rows}x{B.cols} factor must be square")
    if not det(B):
        raise exc("factor is singular", **kw)


def kron_block(A, B, check=True):
    """A (x) B for superregular A and nonsingular B: an n-block superregular matrix."""
    if A.field != B.field:
        raise ContextMismatch(f"{A.field} vs {B.field}")
    if check:
        _require_superregular(A)
        _require_nonsingular(B)
    return BlockMat(kron(A, B), B.rows)


def chain(As, B, check=True):
    """A_1 (x) ... (x) A_l (x) B, block superregular with block size N n / n_1."""
    if not As:
        raise ValueError("need at least one superregular factor")
    for i, A in enumerate(As):
        if A.field != B.field:
            raise ContextMismatch(f"factor {i}: {A.field} vs {B.field}")
        if not A.is_square:
            raise DimensionMismatch(f"factor {i} must be square")
        if check:
            _require_superregular(A, index=i)
    if check:
        _require_nonsingular(B)
    M = reduce(kron, list(As) + [B])
    return BlockMat(M, M.rows // As[0].rows)


def scaled_columns(A, B, Bs, check=True):
    """Block (i, j) = a_ij * B @ B_j; n-block superregular."""
    if len(Bs) != A.cols:
        raise DimensionMismatch(f"{len(Bs)} column factors for {A.cols} columns")
    n = B.rows
    for X in [B, *Bs]:
        if X.field != A.field:
            raise ContextMismatch(f"{X.field} vs {A.field}")
        if X.shape != (n, n):
            raise DimensionMismatch(f"factor of shape {X.shape}, expected {(n, n)}")
    if check:
        _require_superregular(A)
        _require_nonsingular(B, SingularFactor, position="B")
        for j, Bj in enumerate(Bs):
            _require_nonsingular(Bj, SingularFactor, position=j)
    f = A.field
    out = np.zeros((A.rows * n, A.cols * n), dtype=np.int64)
    for j, Bj in enumerate(Bs):
        BBj = (B @ Bj).codes
        for i in range(A.rows):
            out[i * n:(i + 1) * n, j * n:(j + 1) * n] = f.vmul(A.codes[i, j], BBj)
    return BlockMat(Mat.from_codes(f, out), n)


def lift(As, ctx, t_exp=None, check=True):
    """Psi^-1(A_1 (x) ... (x) A_l (x) C^t) = alpha^t (A_1 (x) ... (x) A_l) over GF(p^n).

    Superregular when at most one factor is larger than 1x1. With two or more
    such factors the Kronecker product has rank-one 2x2 submatrices, so the
    result is never superregular; a warning is logged in that case.
    """
    if t_exp is None:
        G = ctx.generator
    else:
        if gcd(t_exp, ctx.ext.q - 1) != 1:
            raise BadGeneratorExponent(f"gcd({t_exp}, {ctx.ext.q - 1}) != 1")
        G = ctx.C**t_exp
    for i, A in enumerate(As):
        if A.field != ctx.base:
            raise ContextMismatch(f"factor {i}: {A.field} vs {ctx.base}")
        if check:
            _require_superregular(A, index=i)
    big = sum(A.rows > 1 for A in As)
    if big > 1:
        log.warning("lift with %d factors larger than 1x1: the result has singular 2x2 minors", big)
    return ctx.Psi_inv(reduce(kron, list(As) + [G]))


# perturbations ---------------------------------------------------------------


@dataclass
class PerturbSpecRow:
    """Add sum_{i>=2} f[l][i] alpha^i to entry (row, l). Indices are 1-based."""

    row: int
    coeffs: dict = dc_field(default_factory=dict)

    @classmethod
    def from_json(cls, obj):
        coeffs = {
            int(l): {int(i): int(v) for i, v in terms.items()}
            for l, terms in obj.get("coeffs", {}).items()
        }
        return cls(int(obj["row"]), coeffs)

    def to_json(self):
        return {
            "row": self.row,
            "coeffs": {str(l): {str(i): v for i, v in t.items()} for l, t in self.coeffs.items()},
        }


@dataclass
class PerturbSpecBlock:
    """Add table[i][l] alpha^t to the first ``rows`` rows, then reorder rows by omega.

    ``omega`` lists 1-based source rows: output row i is row omega[i] of the
    perturbed matrix. Empty means the identity.
    """

    t: int
    rows: int
    table: list
    omega: list = dc_field(default_factory=list)

    @classmethod
    def from_json(cls, obj):
        return cls(
            int(obj["t"]),
            int(obj["rows"]),
            [[int(v) for v in r] for r in obj["table"]],
            [int(w) for w in obj.get("omega", [])],
        )

    def to_json(self):
        return {"t": self.t, "rows": self.rows, "table": self.table, "omega": self.omega}

    def violations(self, n):
        failed = []
        if not self.t > 1:
            failed.append("t>1")
        if not self.rows > 1:
            failed.append("j>1")
        if not self.rows * (self.t - 1) < n:
            failed.append("j(t-1)<n")
        return failed


def alpha_base(base, ctx=None, check=True):
    """Return (M, scalars) with M = Psi^-1(scalars (x) C) = alpha * scalars.

    ``base`` is either the ground-field matrix (``ctx`` required) or an
    extension-field matrix whose entries all have the form a * alpha.
    """
    if ctx is not None and base.field == ctx.base:
        scalars = base
        M = ctx.Psi_inv(kron(base, ctx.C))
    else:
        ext = base.field if ctx is None else ctx.ext
        if base.field != ext or ext.n < 2:
            raise ContextMismatch(f"base over {base.field} does not match the extension field")
        vals = []
        for row in base.tolist():
            out = []
            for x in row:
                c = x.coeffs
                if any(c[i] for i in range(len(c)) if i != 1):
                    raise MalformedBase(f"entry {x!r} is not of the form a*alpha")
                out.append(c[1])
            vals.append(out)
        scalars = Mat(GF(ext.p), vals)
        M = base
    if check:
        _require_superregular(scalars)
    return M, scalars


def perturb_row(base, spec, ctx=None, check=True):
    """M + F where F is zero except row ``spec.row`` holding sum_{i>=2} f_{l,i} alpha^i."""
    M, _ = alpha_base(base, ctx, check)
    ext = M.field
    m, n = M.cols, ext.n
    if not 1 <= spec.row <= M.rows:
        raise BadCoefficientRange(f"row {spec.row} outside [1, {M.rows}]")
    a = ext.alpha
    frow = [ext.zero] * m
    for l, terms in spec.coeffs.items():
        if not 1 <= l <= m:
            raise BadCoefficientRange(f"column {l} outside [1, {m}]")
        for i, c in terms.items():
            if not 2 <= i <= n:
                raise BadCoefficientRange(f"power {i} outside [2, {n}]")
            frow[l - 1] = frow[l - 1] + ext(c) * a**i
    F = Mat.zeros(ext, M.rows, m).with_row(spec.row - 1, frow)
    return M + F


def perturb_block(base, spec, ctx=None, check=True, allow_j1=False, jobs=1):
    """Add n_{i,l} alpha^t to rows 1..j and permute rows by omega."""
    M, _ = alpha_base(base, ctx, check)
    ext = M.field
    m = M.rows
    failed = spec.violations(ext.n)
    if allow_j1 and spec.rows == 1:
        failed = [f for f in failed if f != "j>1"]
    if failed:
        raise ConstraintViolated("violated: " + ", ".join(failed), failed)
    if spec.rows > m or len(spec.table) != spec.rows or any(len(r) != M.cols for r in spec.table):
        raise DimensionMismatch(f"table must be {spec.rows}x{M.cols} with rows <= {m}")
    omega = spec.omega or list(range(1, m + 1))
    if sorted(omega) != list(range(1, m + 1)):
        raise BadCoefficientRange(f"omega {omega} is not a permutation of 1..{m}")
    at = ext.alpha**spec.t
    add = Mat(ext, [[ext(v) * at for v in r] for r in spec.table] + [[0] * M.cols] * (m - spec.rows))
    N = M + add
    N = Mat.from_codes(ext, N.codes[[w - 1 for w in omega]])
    if allow_j1 and spec.rows == 1:
        report = is_superregular(N, jobs=jobs)
        log.info("j=1 perturbation t=%d: superregular=%s", spec.t, report.verdict)
        if not report.verdict:
            raise NotSuperregular("j=1 perturbation is not superregular", report=report)
    return N


def random_search(field, m, t, tries, seed, jobs=1):
    """First uniformly sampled m x t matrix that is superregular, or None.

    Draws come from numpy's PCG64 seeded with ``seed``.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(tries):
        codes = rng.integers(0, field.q, size=(m, t), dtype=np.int64)
        if not codes.all():
            continue
        M = Mat.from_codes(field, codes)
        if is_superregular(M, jobs=jobs).verdict:
            return M
    return None


def random_nonsingular(field, n, rng):
    while True:
        B = Mat.from_codes(field, rng.integers(0, field.q, size=(n, n), dtype=np.int64))
        if det(B):
            return B


# polynomial read-out of perturbed minors --------------------------------------


def strip_alpha(x, k):
    """Coefficients of x / alpha^k in the basis 1, alpha, ..., alpha^(n-1)."""
    f = x.field
    return (x / f.alpha**k).coeffs


def multilinear_expansion(evaluate, names):
    """Recover a polynomial that is affine in each variable from its 0/1 values.

    ``evaluate`` maps a dict name -> 0/1 to a FieldElem. Returns
    {monomial (tuple of names): coefficient} with zero terms dropped.
    """
    k = len(names)
    values = {}
    for mask in range(1 << k):
        values[mask] = evaluate({nm: (mask >> i) & 1 for i, nm in enumerate(names)})
    out = {}
    for mask in range(1 << k):
        acc = values[mask] * 0
        sub = mask
        # Moebius inversion over the subsets of mask
        while True:
            sign = (bin(mask).count("1") - bin(sub).count("1")) % 2
            acc = acc - values[sub] if sign else acc + values[sub]
            if sub == 0:
                break
            sub = (sub - 1) & mask
        if acc:
            out[tuple(nm for i, nm in enumerate(names) if (mask >> i) & 1)] = acc
    return out


def minor_polynomial(build, names, rows, cols, k_strip):
    """Expand det(N[rows, cols]) / alpha^k_strip over the perturbation variables.

    Returns {monomial: coefficient tuple in 1, alpha, ..., alpha^(n-1)}.
    """
    rows, cols = list(rows), list(cols)

    def evaluate(assign):
        N = build(assign)
        return det(Mat.from_codes(N.field, N.codes[np.ix_(rows, cols)]))

    return {mono: strip_alpha(c, k_strip) for mono, c in multilinear_expansion(evaluate, names).items()}


def minor_polynomials(build, names, k, row_filter=None):
    """minor_polynomial for every k x k selection (optionally only some row sets)."""
    N0 = build({nm: 0 for nm in names})
    out = {}
    for r in combinations(range(N0.rows), k):
        if row_filter and not row_filter(r):
            continue
        for c in combinations(range(N0.cols), k):
            out[(r, c)] = minor_polynomial(build, names, r, c, k)
    return out


def row_spec_builder(base, ctx, row, names_by_col):
    """Builder for perturb_row with symbolic names: names_by_col[l] = {i: name}."""

    def build(assign):
        coeffs = {l: {i: assign[nm] for i, nm in terms.items()} for l, terms in names_by_col.items()}
        return perturb_row(base, PerturbSpecRow(row, coeffs), ctx, check=False)

    return build


def block_spec_builder(base, ctx, t, names_table, omega=()):
    def build(assign):
        table = [[assign[nm] for nm in r] for r in names_table]
        return perturb_block(base, PerturbSpecBlock(t, len(names_table), table, list(omega)), ctx, check=False)

    return build

