"""Immutable dense matrices over a ``GF`` and exact determinants."""
from __future__ import annotations

from itertools import product

import numpy as np

from .errors import (
    ContextMismatch,
    DimensionMismatch,
    IndexOutOfRange,
    NonSquare,
    RowMismatch,
    SingularA,
)
from .field import FieldElem


def _to_code(field, x):
    if isinstance(x, FieldElem):
        return field(x).value
    if isinstance(x, (int, np.integer)):
        return int(x) % field.p
    return field(x).value


class Mat:
    """An m x t matrix of field elements, stored as a read-only array of codes.

    Entries may be given as FieldElems, ints (embedded from the prime
    subfield) or coefficient lists.
    """

    __slots__ = ("field", "codes")

    def __init__(self, field, rows):
        if isinstance(rows, np.ndarray) and rows.dtype != object:
            codes = np.array(rows, dtype=np.int64) % field.p if field.n == 1 else None
        else:
            codes = None
        if codes is None:
            rows = [list(r) for r in rows]
            if not rows or not rows[0]:
                raise DimensionMismatch("matrix must have at least one row and column")
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged rows")
            codes = np.array([[_to_code(field, x) for x in r] for r in rows], dtype=np.int64)
        if codes.ndim != 2 or 0 in codes.shape:
            raise DimensionMismatch(f"bad matrix shape {codes.shape}")
        codes.setflags(write=False)
        self.field = field
        self.codes = codes

    @classmethod
    def from_codes(cls, field, codes):
        m = object.__new__(cls)
        codes = np.array(codes, dtype=np.int64)
        codes.setflags(write=False)
        m.field = field
        m.codes = codes
        return m

    @classmethod
    def identity(cls, field, n):
        return cls.from_codes(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, field, m, t=None):
        return cls.from_codes(field, np.zeros((m, m if t is None else t), dtype=np.int64))

    @property
    def shape(self):
        return self.codes.shape

    @property
    def rows(self):
        return self.codes.shape[0]

    @property
    def cols(self):
        return self.codes.shape[1]

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return FieldElem(self.field, int(self.codes[i, j]))

    def tolist(self):
        return [[FieldElem(self.field, int(c)) for c in row] for row in self.codes]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.codes, other.codes))
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.codes.tobytes()))

    def __repr__(self):
        body = "; ".join(" ".join(repr(FieldElem(self.field, int(c))) for c in r) for r in self.codes)
        return f"Mat({self.field!r}, [{body}])"

    def _check(self, other):
        if other.field != self.field:
            raise ContextMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Mat.from_codes(self.field, self.field.vadd(self.codes, other.codes))

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Mat.from_codes(self.field, self.field.vsub(self.codes, other.codes))

    def __neg__(self):
        return Mat.from_codes(self.field, self.field.vneg(self.codes))

    def scale(self, c):
        return Mat.from_codes(self.field, self.field.vmul(_to_code(self.field, c), self.codes))

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        f = self.field
        if f.n == 1:
            return Mat.from_codes(f, (self.codes @ other.codes) % f.p)
        out = np.zeros((self.rows, other.cols), dtype=np.int64)
        for k in range(self.cols):
            out = f.vadd(out, f.vmul(self.codes[:, k:k + 1], other.codes[k:k + 1, :]))
        return Mat.from_codes(f, out)

    def __pow__(self, e):
        if not self.is_square:
            raise NonSquare("power of a non-square matrix")
        result = Mat.identity(self.field, self.rows)
        base = self
        if e < 0:
            base, e = inverse(self), -e
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    @property
    def T(self):
        return Mat.from_codes(self.field, self.codes.T)

    def det(self):
        return det(self)

    def map(self, fn):
        """Entrywise image under ``fn`` acting on FieldElems."""
        return Mat(self.field, [[fn(x) for x in row] for row in self.tolist()])

    def with_row(self, k, row):
        codes = self.codes.copy()
        codes[k] = [_to_code(self.field, x) for x in row]
        return Mat.from_codes(self.field, codes)


def _det_codes(field, codes):
    """Gaussian elimination on a square code array; returns the determinant code."""
    n = codes.shape[0]
    a = [list(map(int, r)) for r in codes]
    p = field.p
    prime = field.n == 1
    mul, sub, inv = field.mul, field.sub, field.inv
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = field.neg(det)
        pc = a[c][c]
        det = mul(det, pc)
        ipc = inv(pc)
        row_c = a[c]
        for r in range(c + 1, n):
            x = a[r][c]
            if not x:
                continue
            f = mul(x, ipc)
            row_r = a[r]
            if prime:
                for j in range(c + 1, n):
                    row_r[j] = (row_r[j] - f * row_c[j]) % p
            else:
                for j in range(c + 1, n):
                    if row_c[j]:
                        row_r[j] = sub(row_r[j], mul(f, row_c[j]))
    return det


def det(M):
    if not M.is_square:
        raise NonSquare(f"determinant of {M.rows}x{M.cols} matrix")
    return FieldElem(M.field, _det_codes(M.field, M.codes))


def inverse(M):
    """Gauss-Jordan inverse; raises SingularA for singular input."""
    if not M.is_square:
        raise NonSquare("inverse of a non-square matrix")
    f = M.field
    n = M.rows
    a = [list(map(int, r)) + [int(i == k) for k in range(n)] for i, r in enumerate(M.codes)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise SingularA("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        ipc = f.inv(a[c][c])
        a[c] = [f.mul(ipc, x) for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                fac = a[r][c]
                a[r] = [f.sub(x, f.mul(fac, y)) for x, y in zip(a[r], a[c])]
    return Mat.from_codes(f, [row[n:] for row in a])


def kron(A, B):
    """Kronecker product: the block matrix [a_ij * B]."""
    if A.field != B.field:
        raise ContextMismatch(f"{A.field} vs {B.field}")
    f = A.field
    m, t = A.shape
    n, s = B.shape
    out = np.zeros((m * n, t * s), dtype=np.int64)
    for i, j in product(range(m), range(t)):
        out[i * n:(i + 1) * n, j * s:(j + 1) * s] = f.vmul(A.codes[i, j], B.codes)
    return Mat.from_codes(f, out)


def _check_indices(idx, bound, what):
    idx = tuple(int(i) for i in idx)
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise IndexOutOfRange(f"{what} indices {idx} are not strictly increasing")
    if idx and (idx[0] < 0 or idx[-1] >= bound):
        raise IndexOutOfRange(f"{what} indices {idx} outside [0, {bound})")
    return idx


def submatrix(M, rows, cols):
    rows = _check_indices(rows, M.rows, "row")
    cols = _check_indices(cols, M.cols, "column")
    return Mat.from_codes(M.field, M.codes[np.ix_(rows, cols)])


def block_assemble(blocks):
    """Assemble a 2-D list of Mats into one matrix."""
    f = blocks[0][0].field
    for row in blocks:
        for b in row:
            if b.field != f:
                raise ContextMismatch(f"{b.field} vs {f}")
    try:
        codes = np.block([[b.codes for b in row] for row in blocks])
    except ValueError as exc:
        raise DimensionMismatch(str(exc)) from None
    return Mat.from_codes(f, codes)


def schur_det(A, B, C, D):
    """det([[A, B], [C, D]]) computed as det(A) * det(D - C A^-1 B)."""
    if not A.is_square or not D.is_square:
        raise DimensionMismatch("A and D must be square")
    if B.rows != A.rows or C.cols != A.cols or B.cols != D.cols or C.rows != D.rows:
        raise DimensionMismatch("blocks are not conformable")
    dA = det(A)
    if not dA:
        raise SingularA("A is singular")
    return dA * det(D - C @ inverse(A) @ B)


def row_multilinearity_check(M, k, X, Y, a, b):
    """Check det(M) = a det(M[k:=X]) + b det(M[k:=Y]) where row k of M is aX + bY."""
    if not M.is_square:
        raise NonSquare("multilinearity needs a square matrix")
    f = M.field
    a, b = f(a), f(b)
    X = [f(x) for x in X]
    Y = [f(y) for y in Y]
    if len(X) != M.cols or len(Y) != M.cols:
        raise DimensionMismatch("row length mismatch")
    if any(a * x + b * y != M[k, j] for j, (x, y) in enumerate(zip(X, Y))):
        raise RowMismatch(f"row {k} is not {a}*X + {b}*Y")
    return det(M) == a * det(M.with_row(k, X)) + b * det(M.with_row(k, Y))

