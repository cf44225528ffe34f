"""Integer polynomials and exact resultants.

Coefficients are stored lowest degree first; the zero polynomial has an
empty coefficient tuple.  Resultants use the subresultant pseudo-remainder
sequence, which stays in Z throughout (no rational blow-up on the large
coefficients produced by the norm-tower computations).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

__all__ = ["IntPolynomial", "resultant", "cyclotomic_polynomial"]


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @classmethod
    def of(cls, *coeffs: int) -> "IntPolynomial":
        return cls.from_list(list(coeffs))

    @classmethod
    def from_list(cls, coeffs: list[int]) -> "IntPolynomial":
        trimmed = list(coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        return cls(tuple(trimmed))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.from_list(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def scale(self, k: int) -> "IntPolynomial":
        if k == 0:
            return IntPolynomial(())
        return IntPolynomial(tuple(k * c for c in self.coeffs))

    def content(self) -> int:
        """gcd of the coefficients, with the sign of the leading one."""
        if self.is_zero:
            return 0
        g = reduce(math.gcd, (abs(c) for c in self.coeffs))
        return g if self.leading > 0 else -g

    def exact_div_scalar(self, k: int) -> "IntPolynomial":
        out = []
        for c in self.coeffs:
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError("inexact scalar division")
            out.append(q)
        return IntPolynomial.from_list(out)


def _pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a divided by b."""
    da, db = a.degree, b.degree
    lc_b = b.leading
    rem = list(a.coeffs)
    for i in range(da - db, -1, -1):
        c = rem[db + i]
        rem = [x * lc_b for x in rem]
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[j + i] -= c * bc
    return IntPolynomial.from_list(rem[:db])


def _exact_power_quotient(num: int, den: int, what: str) -> int:
    if den in (1, -1):
        return num * den
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division in subresultant PRS ({what})")
    return q


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) = lc(f)^deg(g) * prod g(beta) over the roots beta of f.

    Computed by the subresultant pseudo-remainder sequence (fraction free),
    after Cohen, "A Course in Computational Algebraic Number Theory",
    Algorithm 3.3.7.  Raises ValueError on zero input.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant requires nonzero polynomials")
    sign = 1
    a, b = f, g
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2:
            sign = -sign
        a, b = b, a
    if b.degree == 0:
        return sign * b.coeffs[0] ** a.degree
    ca, cb = a.content(), b.content()
    scale = ca**b.degree * cb**a.degree
    a = a.exact_div_scalar(ca)
    b = b.exact_div_scalar(cb)
    g_coef = 1
    h_coef = 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        rem = _pseudo_remainder(a, b)
        a = b
        b = rem if rem.is_zero else rem.exact_div_scalar(g_coef * h_coef**delta)
        g_coef = a.leading
        if delta > 0:
            h_coef = _exact_power_quotient(g_coef**delta, h_coef ** (delta - 1), "h")
        if b.is_zero:
            return 0
        if b.degree == 0:
            da = a.degree
            res_pp = _exact_power_quotient(b.coeffs[0] ** da, h_coef ** (da - 1), "final")
            return sign * scale * res_pp


def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, via Phi_n = prod (x^d - 1)^mu(n/d)."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    num = IntPolynomial.of(1)
    den = IntPolynomial.of(1)
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = _moebius(n // d)
        if mu == 0:
            continue
        factor = IntPolynomial.from_list([-1] + [0] * (d - 1) + [1])
        if mu == 1:
            num = num * factor
        else:
            den = den * factor
    quot, rem = _poly_divmod(num, den)
    if not rem.is_zero:
        raise ArithmeticError("cyclotomic division not exact")
    return quot


def _moebius(n: int) -> int:
    out = 1
    for p in range(2, n + 1):
        if p * p > n:
            break
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
    if n > 1:
        out = -out
    return out


def _poly_divmod(a: IntPolynomial, b: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Division with remainder; requires divisions by lc(b) to stay integral."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    lc = b.leading
    quot = [0] * max(len(rem) - db, 0)
    for i in range(len(rem) - db - 1, -1, -1):
        c = rem[db + i]
        if c % lc:
            raise ArithmeticError("inexact polynomial division")
        q = c // lc
        quot[i] = q
        if q:
            for j, bc in enumerate(b.coeffs):
                rem[j + i] -= q * bc
    return IntPolynomial.from_list(quot), IntPolynomial.from_list(rem[:db])
