"""Exact arithmetic in GF(p) and GF(p^n).

Elements of GF(p^n) = GF(p)[x]/(modulus) are coded as integers
``sum(c_i * p**i)`` where ``c_i`` is the coefficient of alpha^i (alpha is
the class of x). Matrices store these codes; ``FieldElem`` wraps one code
for user-facing arithmetic.
"""
from __future__ import annotations

import threading

import numpy as np

from . import poly as P
from .errors import (
    ContextMismatch,
    DivisionByZero,
    FieldTooLarge,
    IndexOutOfRange,
    NonMonicModulus,
    NonPrimeP,
    NotPrimitive,
    ReducibleModulus,
    ZeroElement,
)

DEFAULT_CAP = 2**20

_table_lock = threading.Lock()
_table_cache: dict = {}


def is_primitive(poly, p):
    """True iff ``poly`` is irreducible over GF(p) and x has order p^n - 1 modulo it."""
    if not P.is_prime(p):
        raise NonPrimeP(f"{p} is not prime")
    if isinstance(poly, str):
        poly = P.parse_poly(poly, p)
    f = P.normalize(poly, p)
    n = P.degree(f)
    if n < 1 or f[-1] != 1 or f[0] == 0:
        return False
    order = p**n - 1
    x = (0, 1)
    if P.powmod(x, order, f, p) != (1,):
        return False
    # a unit of order p^n - 1 forces GF(p)[x]/(f) to be a field
    return all(P.powmod(x, order // r, f, p) != (1,) for r in P.prime_factors(order))


def primitive_polys(p, n):
    """Yield every monic primitive polynomial of degree n over GF(p)."""
    for f in P.monic_polys(n, p):
        if is_primitive(f, p):
            yield f


def _build_tables(p, modulus, n):
    q = p**n
    weights = p ** np.arange(n, dtype=np.int64)
    codes = np.arange(q, dtype=np.int64)
    digits = (codes[:, None] // weights[None, :]) % p
    field = GF(p, modulus, cap=q)
    gen = field.alpha.value
    if not field.is_primitive_modulus:
        gen = next(c for c in range(2, q) if field._order_is_full(c))
    exp = np.zeros(2 * (q - 1), dtype=np.int64)
    log = np.full(q, -1, dtype=np.int64)
    x = 1
    for k in range(q - 1):
        exp[k] = x
        log[x] = k
        x = field._polymul(x, gen)
    exp[q - 1:] = exp[: q - 1]
    for arr in (digits, exp, log):
        arr.setflags(write=False)
    return {
        "digits": digits,
        "weights": weights,
        "exp": exp,
        "log": log,
        "gen": gen,
        # python lists: scalar lookups are much faster than numpy indexing
        "exp_l": exp.tolist(),
        "log_l": log.tolist(),
    }


class GF:
    """A finite field GF(p) or GF(p^n).

    ``GF(7)`` is the prime field; ``GF(5, "x^3+3x+3")`` is GF(125) built from
    the given monic irreducible modulus. Two contexts are the same field iff
    they share p and modulus.
    """

    def __init__(self, p, modulus="prime", cap=DEFAULT_CAP):
        if not P.is_prime(p):
            raise NonPrimeP(f"{p} is not prime")
        self.p = p
        self.cap = cap
        if modulus is None or modulus == "prime":
            self.modulus = (0, 1)
        else:
            raw = P.parse_poly(modulus, p) if isinstance(modulus, str) else P.trim(modulus)
            if not raw or P.degree(raw) < 1:
                raise NonMonicModulus("modulus must have degree >= 1")
            if raw[-1] % p != 1:
                raise NonMonicModulus(f"modulus {P.format_poly(raw)} is not monic")
            self.modulus = P.normalize(raw, p)
            if not P.is_irreducible(self.modulus, p):
                raise ReducibleModulus(f"{P.format_poly(self.modulus)} is reducible over GF({p})")
        self.n = len(self.modulus) - 1
        self.q = p**self.n
        self._prim = None
        self._t = None

    # identity -------------------------------------------------------------
    def _key(self):
        return (self.p, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.n == 1 and self.modulus == (0, 1):
            return f"GF({self.p})"
        return f"GF({self.p}, {P.format_poly(self.modulus)!r})"

    def __reduce__(self):
        mod = "prime" if self.modulus == (0, 1) else self.modulus
        return (GF, (self.p, mod, self.cap))

    @property
    def is_prime_field(self):
        return self.n == 1

    @property
    def is_primitive_modulus(self):
        if self._prim is None:
            self._prim = is_primitive(self.modulus, self.p)
        return self._prim

    # element construction ---------------------------------------------------
    def __call__(self, x):
        if isinstance(x, FieldElem):
            if x.field != self:
                raise ContextMismatch(f"element of {x.field} used in {self}")
            return x
        if isinstance(x, (int, np.integer)):
            return FieldElem(self, int(x) % self.p)
        coeffs = [int(c) % self.p for c in x]
        if len(coeffs) > self.n:
            raise ValueError(f"{len(coeffs)} coefficients for degree-{self.n} field")
        return FieldElem(self, self.encode(coeffs))

    def element(self, code):
        return FieldElem(self, int(code))

    @property
    def zero(self):
        return FieldElem(self, 0)

    @property
    def one(self):
        return FieldElem(self, 1)

    @property
    def alpha(self):
        """Class of x modulo the modulus."""
        if self.n == 1:
            return FieldElem(self, (-self.modulus[0]) % self.p)
        return FieldElem(self, self.p)

    def elements(self):
        return (FieldElem(self, c) for c in range(self.q))

    def encode(self, coeffs):
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + (int(c) % self.p)
        return code

    def decode(self, code):
        out = []
        for _ in range(self.n):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    # tables -------------------------------------------------------------------
    @property
    def has_tables(self):
        return self.n > 1 and self.q <= self.cap

    def tables(self):
        if self._t is not None:
            return self._t
        if self.q > self.cap:
            raise FieldTooLarge(f"|{self}| = {self.q} exceeds table cap {self.cap}")
        key = self._key()
        with _table_lock:
            t = _table_cache.get(key)
            if t is None:
                t = _table_cache[key] = _build_tables(self.p, self.modulus, self.n)
        self._t = t
        return t

    # scalar arithmetic on codes ----------------------------------------------
    def add(self, a, b):
        p = self.p
        if self.n == 1:
            return (a + b) % p
        out, w = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    def neg(self, a):
        p = self.p
        if self.n == 1:
            return -a % p
        out, w = 0, 1
        while a:
            out += (-(a % p) % p) * w
            a //= p
            w *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _polymul(self, a, b):
        prod = P.mulmod(self.decode(a), self.decode(b), self.modulus, self.p)
        return self.encode(prod)

    def mul(self, a, b):
        if self.n == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            t = self.tables()
            return t["exp_l"][t["log_l"][a] + t["log_l"][b]]
        return self._polymul(a, b)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.n == 1:
            return pow(a, -1, self.p)
        if self.has_tables:
            t = self.tables()
            return t["exp_l"][(self.q - 1 - t["log_l"][a]) % (self.q - 1)]
        return self.power(a, self.q - 2)

    def power(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if self.n == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        if self.has_tables:
            t = self.tables()
            return t["exp_l"][(t["log_l"][a] * e) % (self.q - 1)]
        return self.encode(P.powmod(self.decode(a), e, self.modulus, self.p))

    def _order_is_full(self, a):
        order = self.q - 1
        f, p = self.modulus, self.p
        x = self.decode(a)
        if P.powmod(x, order, f, p) != (1,):
            return False
        return all(P.powmod(x, order // r, f, p) != (1,) for r in P.prime_factors(order))

    # vectorized arithmetic on code arrays --------------------------------------
    def vadd(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.n == 1:
            return (a + b) % self.p
        if self.has_tables:
            t = self.tables()
            return ((t["digits"][a] + t["digits"][b]) % self.p) @ t["weights"]
        return np.frompyfunc(self.add, 2, 1)(a, b).astype(np.int64)

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.n == 1:
            return -a % self.p
        if self.has_tables:
            t = self.tables()
            return (-t["digits"][a] % self.p) @ t["weights"]
        return np.frompyfunc(self.neg, 1, 1)(a).astype(np.int64)

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.n == 1:
            return a * b % self.p
        if self.has_tables:
            t = self.tables()
            la, lb = t["log"][a], t["log"][b]
            out = t["exp"][np.where((la < 0) | (lb < 0), 0, la + lb)]
            return np.where((a == 0) | (b == 0), 0, out)
        return np.frompyfunc(self.mul, 2, 1)(a, b).astype(np.int64)

    def vpower(self, a, e):
        return np.frompyfunc(lambda x: self.power(x, e), 1, 1)(np.asarray(a)).astype(np.int64)

    # discrete logs, Frobenius, roots -----------------------------------------
    def dlog(self, a):
        """Exponent k in [0, q-2] with alpha**k == a."""
        a = self(a)
        if a.value == 0:
            raise ZeroElement("discrete log of zero")
        if not self.is_primitive_modulus:
            raise NotPrimitive(f"alpha does not generate {self}*")
        if self.q > self.cap:
            raise FieldTooLarge(f"|{self}| = {self.q} exceeds table cap {self.cap}")
        if self.n == 1:
            g, x = self.alpha.value, 1
            for k in range(self.q - 1):
                if x == a.value:
                    return k
                x = x * g % self.p
        return int(self.tables()["log"][a.value])

    def frobenius(self, a, j):
        """sigma_j(a) = a ** (p ** j)."""
        if not 0 <= j < self.n:
            raise IndexOutOfRange(f"Frobenius index {j} outside [0, {self.n - 1}]")
        a = self(a)
        return FieldElem(self, self.power(a.value, self.p**j))

    def find_roots(self, poly):
        """All roots in this field of a polynomial over GF(p), by exhaustive evaluation."""
        if isinstance(poly, str):
            poly = P.parse_poly(poly, self.p)
        if self.q > self.cap:
            raise FieldTooLarge(f"|{self}| = {self.q} exceeds root-search cap {self.cap}")
        xs = np.arange(self.q, dtype=np.int64)
        acc = np.zeros(self.q, dtype=np.int64)
        for c in reversed(P.normalize(poly, self.p)):
            acc = self.vadd(self.vmul(acc, xs), np.full(self.q, c % self.p))
        return [FieldElem(self, int(c)) for c in np.flatnonzero(acc == 0)]


def field_new(p, modulus="prime", cap=DEFAULT_CAP):
    return GF(p, modulus, cap=cap)


class FieldElem:
    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    @property
    def coeffs(self):
        return self.field.decode(self.value)

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ContextMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def _wrap(self, v):
        return FieldElem(self.field, v)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(self.value, self.field.inv(b)))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(b, self.field.inv(self.value)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e):
        return self._wrap(self.field.power(self.value, e))

    def inv(self):
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        if self.field.n == 1:
            return str(self.value)
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def to_poly_str(self, var="α"):
        return P.format_poly(self.coeffs, var)
