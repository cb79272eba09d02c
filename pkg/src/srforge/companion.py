"""Companion matrices of primitive polynomials and the alpha <-> C isomorphism.

``psi`` sends sum f_i alpha^i in GF(p^n) to sum f_i C^i in GF(p)[C];
``Psi`` applies it entrywise, turning an m x t matrix over GF(p^n) into an
mn x tn block matrix over GF(p).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from . import poly as P
from .errors import (
    BadGeneratorExponent,
    ContextMismatch,
    DimensionMismatch,
    IndexOutOfRange,
    NotBlockAligned,
    NotInSpan,
    NotPrimitive,
)
from .field import GF, FieldElem, is_primitive
from .linalg import Mat


def companion_matrix(poly, field):
    """Subdiagonal ones, last column (-c_0, ..., -c_{n-1})."""
    n = len(poly) - 1
    codes = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n):
        codes[i, i - 1] = 1
    for i in range(n):
        codes[i, n - 1] = -poly[i] % field.p
    return Mat.from_codes(field, codes)


class CompanionCtx:
    """Companion matrix C of a primitive polynomial, with its field GF(p^n).

    ``t_exp`` selects C**t_exp (gcd(t_exp, p^n - 1) = 1) as the generator
    used by the Kronecker lift; psi itself always sends alpha to C.
    """

    def __init__(self, poly, p, t_exp=1):
        if isinstance(poly, str):
            poly = P.parse_poly(poly, p)
        poly = P.normalize(poly, p)
        if not is_primitive(poly, p):
            raise NotPrimitive(f"{P.format_poly(poly)} is not primitive over GF({p})")
        self.poly = poly
        self.p = p
        self.n = len(poly) - 1
        self.base = GF(p)
        self.ext = GF(p, poly)
        self.C = companion_matrix(poly, self.base)
        order = self.ext.q - 1
        if gcd(t_exp, order) != 1:
            raise BadGeneratorExponent(f"gcd({t_exp}, {order}) != 1")
        self.t_exp = t_exp % order if order > 1 else t_exp
        self.generator = self.C**self.t_exp
        # C^i for i < n: a basis of GF(p)[C]
        self._basis = [self.C**i for i in range(self.n)]
        self._basis_codes = np.stack([b.codes for b in self._basis])

    def __repr__(self):
        return f"CompanionCtx({P.format_poly(self.poly)!r}, p={self.p})"

    def __eq__(self, other):
        return isinstance(other, CompanionCtx) and (self.poly, self.p, self.t_exp) == (
            other.poly,
            other.p,
            other.t_exp,
        )

    def __hash__(self):
        return hash((self.poly, self.p, self.t_exp))

    def in_span(self, X):
        """Coefficients (f_0..f_{n-1}) with X = sum f_i C^i, or None."""
        if X.shape != (self.n, self.n):
            raise DimensionMismatch(f"expected {self.n}x{self.n}, got {X.rows}x{X.cols}")
        if X.field != self.base:
            raise ContextMismatch(f"{X.field} vs {self.base}")
        # C^i e_1 = e_{i+1}, so the first column holds the coefficients
        f = X.codes[:, 0]
        combo = np.tensordot(f, self._basis_codes, axes=1) % self.p
        if not np.array_equal(combo, X.codes):
            return None
        return tuple(int(c) for c in f)

    def psi(self, a):
        a = self.ext(a)
        combo = np.tensordot(np.array(a.coeffs, dtype=np.int64), self._basis_codes, axes=1)
        return Mat.from_codes(self.base, combo % self.p)

    def psi_inv(self, X):
        f = self.in_span(X)
        if f is None:
            raise NotInSpan("block is not in GF(p)[C]")
        return self.ext(f)

    def Psi(self, M):
        """Entrywise psi: matrix over GF(p^n) -> BlockMat over GF(p)."""
        if M.field != self.ext:
            raise ContextMismatch(f"{M.field} vs {self.ext}")
        n = self.n
        out = np.zeros((M.rows * n, M.cols * n), dtype=np.int64)
        for i in range(M.rows):
            for j in range(M.cols):
                out[i * n:(i + 1) * n, j * n:(j + 1) * n] = self.psi(M[i, j]).codes
        return BlockMat(Mat.from_codes(self.base, out), n, self)

    def Psi_inv(self, B):
        """Entrywise psi inverse of a block matrix whose n x n blocks lie in GF(p)[C]."""
        inner = B.inner if isinstance(B, BlockMat) else B
        n = self.n
        if inner.rows % n or inner.cols % n:
            raise NotBlockAligned(f"{inner.rows}x{inner.cols} is not a multiple of {n}")
        codes = np.zeros((inner.rows // n, inner.cols // n), dtype=np.int64)
        for i in range(codes.shape[0]):
            for j in range(codes.shape[1]):
                blk = Mat.from_codes(self.base, inner.codes[i * n:(i + 1) * n, j * n:(j + 1) * n])
                f = self.in_span(blk)
                if f is None:
                    raise NotInSpan(f"block ({i}, {j}) is not in GF(p)[C]", block=(i, j))
                codes[i, j] = self.ext.encode(f)
        return Mat.from_codes(self.ext, codes)

    def power_pattern(self, B):
        """Exponent k of each block C^k (None for a zero block)."""
        M = self.Psi_inv(B)
        return [[None if not x else self.ext.dlog(x) for x in row] for row in M.tolist()]


def companion(poly, p, t_exp=1):
    return CompanionCtx(poly, p, t_exp)


@dataclass(frozen=True)
class BlockMat:
    """A matrix over GF(p) viewed as a grid of block_size x block_size blocks."""

    inner: Mat
    block_size: int
    ctx: CompanionCtx | None = None

    def __post_init__(self):
        b = self.block_size
        if b < 1 or self.inner.rows % b or self.inner.cols % b:
            raise NotBlockAligned(f"{self.inner.rows}x{self.inner.cols} not divisible into {b}x{b} blocks")
        if self.ctx is not None:
            if b != self.ctx.n:
                raise DimensionMismatch(f"block size {b} != companion degree {self.ctx.n}")
            self.ctx.Psi_inv(self.inner)

    @property
    def field(self):
        return self.inner.field

    @property
    def block_shape(self):
        return self.inner.rows // self.block_size, self.inner.cols // self.block_size

    def block(self, i, j):
        b = self.block_size
        return Mat.from_codes(self.field, self.inner.codes[i * b:(i + 1) * b, j * b:(j + 1) * b])

    def __eq__(self, other):
        if not isinstance(other, BlockMat):
            return NotImplemented
        return self.inner == other.inner and self.block_size == other.block_size


def mat_frobenius(M, j):
    """Entrywise sigma_j(x) = x^(p^j)."""
    f = M.field
    if not 0 <= j < f.n:
        raise IndexOutOfRange(f"Frobenius index {j} outside [0, {f.n - 1}]")
    return Mat.from_codes(f, f.vpower(M.codes, f.p**j))


def elem_from_power(field, k):
    return FieldElem(field, field.power(field.alpha.value, k))
