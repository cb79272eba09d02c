"""Dense polynomials over GF(p).

A polynomial is a tuple of ints, constant term first, with no trailing
zeros (the zero polynomial is the empty tuple).
"""
from __future__ import annotations

import re

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(x(?:\s*(?:\^|\*\*)\s*(\d+))?)?")


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def normalize(a, p):
    return trim(c % p for c in a)


def degree(a):
    return len(trim(a)) - 1


def parse_poly(text, p):
    """Parse ``x^3+3x+3`` style text into constant-first coefficients mod p.

    Bare coefficient lists such as ``[3,3,0,1]`` are also accepted.
    """
    s = text.strip().replace(" ", "")
    if s.startswith("["):
        return normalize((int(c) for c in s.strip("[]").split(",") if c), p)
    if not s:
        raise ValueError("empty polynomial")
    coeffs = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sign, num, xpart, exp = m.groups()
        if not num and not xpart:
            raise ValueError(f"cannot parse polynomial {text!r}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if xpart else 0
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return normalize(out, p)


def format_poly(a, var="x"):
    a = trim(a)
    if not a:
        return "0"
    terms = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
            continue
        head = "" if c == 1 else str(c)
        terms.append(f"{head}{var}" if e == 1 else f"{head}{var}^{e}")
    return "+".join(terms)


def add(a, b, p):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return normalize((x + y for x, y in zip(a, b)), p)


def sub(a, b, p):
    return add(a, tuple(-c for c in b), p)


def mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return normalize(out, p)


def divmod_poly(a, b, p):
    b = normalize(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(normalize(a, p))
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = a[-1] * inv_lead % p
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        a = list(trim(a))
    return normalize(q, p), tuple(a)


def mod(a, m, p):
    return divmod_poly(a, m, p)[1]


def mulmod(a, b, m, p):
    return mod(mul(a, b, p), m, p)


def powmod(a, e, m, p):
    result = (1,)
    base = mod(a, m, p)
    while e:
        if e & 1:
            result = mulmod(result, base, m, p)
        base = mulmod(base, base, m, p)
        e >>= 1
    return mod(result, m, p)


def gcd(a, b, p):
    a, b = normalize(a, p), normalize(b, p)
    while b:
        a, b = b, mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = normalize((c * inv for c in a), p)
    return a


def evaluate(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def is_irreducible(f, p):
    """Ben-Or: f of degree n is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= n/2."""
    f = normalize(f, p)
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    x = (0, 1)
    h = x
    for _ in range(n // 2):
        h = powmod(h, p, f, p)
        if degree(gcd(f, sub(h, x, p), p)) > 0:
            return False
    return True


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    k = 5
    while k * k <= n:
        if n % k == 0 or n % (k + 2) == 0:
            return False
        k += 6
    return True


def prime_factors(n):
    """Distinct prime factors of n by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def monic_polys(n, p):
    """All monic degree-n polynomials over GF(p), in increasing code order."""
    for code in range(p**n):
        coeffs = []
        for _ in range(n):
            coeffs.append(code % p)
            code //= p
        yield tuple(coeffs) + (1,)
