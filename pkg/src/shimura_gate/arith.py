"""Exact integer arithmetic: Kronecker symbols, primality, factorization.

Everything here works on plain Python ints (arbitrary precision) and is
deterministic: repeated calls on the same input produce the same output,
which the certificate replay guarantees depend on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "kronecker_symbol",
    "is_prime",
    "is_square",
    "squarefree_part",
    "is_squarefree",
    "is_fundamental_discriminant",
    "primes_up_to",
    "iter_primes",
    "multiplicative_order",
    "FactorizationResult",
    "FactorizationIncomplete",
    "factorize",
    "prime_support",
]

# Trial division strips all prime factors below this bound before the
# rho stage starts.
TRIAL_DIVISION_BOUND = 10**6

# Miller-Rabin with this witness set is deterministic below the bound
# (Sorenson & Webster, 2015).
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Above the deterministic bound we run this many extra pseudo-random
# rounds; the compositeness error is at most 4**-_MR_EXTRA_ROUNDS.
_MR_EXTRA_ROUNDS = 64


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n), extending the Jacobi symbol to all n != 0.

    Conventions at the extended places:
      (a|2)  = 0 if a is even, +1 if a = +-1 (mod 8), -1 if a = +-3 (mod 8)
      (a|-1) = +1 if a >= 0, -1 if a < 0
    so (a|n) = (a|-1)^[n<0] * prod (a|p)^e over the factorization of |n|.
    """
    if n == 0:
        raise ValueError("kronecker symbol undefined for n = 0")
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


_sieve_cache: list[int] = []
_sieve_bound = 0


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, via a cached sieve of Eratosthenes."""
    global _sieve_cache, _sieve_bound
    if _sieve_bound < limit:
        size = max(limit, TRIAL_DIVISION_BOUND) + 1
        flags = bytearray([1]) * size
        flags[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(size - 1) + 1):
            if flags[i]:
                flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
        _sieve_cache = [i for i, f in enumerate(flags) if f]
        _sieve_bound = size - 1
    if _sieve_bound == limit:
        return list(_sieve_cache)
    cut = _bisect_right(_sieve_cache, limit)
    return _sieve_cache[:cut]


def _bisect_right(seq: list[int], x: int) -> int:
    lo, hi = 0, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if seq[mid] <= x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def iter_primes(start: int = 2) -> Iterator[int]:
    """Primes >= start in increasing order, unbounded."""
    n = max(2, start)
    if n == 2:
        yield 2
        n = 3
    elif n % 2 == 0:
        n += 1
    while True:
        if is_prime(n):
            yield n
        n += 2


def _miller_rabin_round(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test.

    Deterministic (Miller-Rabin with the 12 smallest prime witnesses) for
    n below ~3.3e24; above that, the same witnesses plus 64 deterministic
    pseudo-random rounds, with compositeness error below 4**-64.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        if not _miller_rabin_round(n, a, d, s):
            return False
    if n < _MR_DETERMINISTIC_BOUND:
        return True
    rng = _DeterministicRng(n)
    for _ in range(_MR_EXTRA_ROUNDS):
        a = rng.randrange(2, n - 1)
        if not _miller_rabin_round(n, a, d, s):
            return False
    return True


class _DeterministicRng:
    """Small xorshift-style generator seeded from the input value.

    Used instead of the global `random` state so that factorization (and
    hence every derived certificate) is reproducible run to run.
    """

    def __init__(self, seed: int):
        self.state = (seed ^ 0x9E3779B97F4A7C15) % (1 << 64) or 1

    def next64(self) -> int:
        x = self.state
        x ^= (x << 13) % (1 << 64)
        x ^= x >> 7
        x ^= (x << 17) % (1 << 64)
        self.state = x
        return x

    def randrange(self, lo: int, hi: int) -> int:
        return lo + self.next64() % (hi - lo)


class FactorizationIncomplete(Exception):
    """Raised when the rho budget is exhausted before full factorization.

    Carries the partial result so callers can report what was factored and
    which composite cofactors remain; never silently returns wrong output.
    """

    def __init__(self, n: int, partial: dict[int, int], remaining: list[int]):
        self.n = n
        self.partial = dict(partial)
        self.remaining = list(remaining)
        super().__init__(
            f"factorization of {n} incomplete: composite cofactors "
            f"{remaining} left after budget exhaustion"
        )


@dataclass(frozen=True)
class FactorizationResult:
    """Complete factorization n = unit * prod(p**e), primes ascending."""

    unit: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.unit not in (1, -1):
            raise ValueError("unit must be +1 or -1")
        ps = [p for p, _ in self.factors]
        if ps != sorted(ps) or len(set(ps)) != len(ps):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be positive")

    def value(self) -> int:
        out = self.unit
        for p, e in self.factors:
            out *= p**e
        return out

    def prime_support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _brent_rho(n: int, rng: _DeterministicRng, budget: int) -> tuple[int | None, int]:
    """Brent-variant Pollard rho. Returns (factor or None, iterations used)."""
    if n % 2 == 0:
        return 2, 0
    used = 0
    while used < budget:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and used < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(m, r - k)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                used += steps
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # Backtrack: the batched gcd overshot a factor.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g, used
    return None, used


def _perfect_power(n: int) -> tuple[int, int] | None:
    """Return (r, e) with r**e == n and e >= 2, if such exist."""
    for e in range(2, n.bit_length() + 1):
        r = round(n ** (1.0 / e)) if n.bit_length() < 900 else _iroot(n, e)
        for cand in (r - 1, r, r + 1):
            if cand > 1 and cand**e == n:
                return cand, e
    return None


def _iroot(n: int, e: int) -> int:
    lo, hi = 1, 1 << (n.bit_length() // e + 2)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**e <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


DEFAULT_RHO_BUDGET = 20_000_000


def factorize(n: int, rho_budget: int = DEFAULT_RHO_BUDGET) -> FactorizationResult:
    """Complete prime factorization of n != 0.

    Strategy: trial division by all primes up to 10**6, then perfect-power
    extraction and deterministic Brent rho on composite cofactors, sharing
    a single iteration budget across the whole call.  Exhausting the budget
    raises FactorizationIncomplete rather than returning a partial answer.
    Every reported factor is re-verified prime, and the recomposition is
    checked exactly before returning.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    unit = -1 if n < 0 else 1
    m = abs(n)
    found: dict[int, int] = {}
    if m > 1:
        for p in primes_up_to(TRIAL_DIVISION_BOUND):
            if p * p > m:
                break
            while m % p == 0:
                found[p] = found.get(p, 0) + 1
                m //= p
        rng = _DeterministicRng(abs(n))
        budget = rho_budget
        stack = [m] if m > 1 else []
        remaining: list[int] = []
        while stack:
            c = stack.pop()
            if c == 1:
                continue
            if is_prime(c):
                found[c] = found.get(c, 0) + 1
                continue
            power = _perfect_power(c)
            if power is not None:
                r, e = power
                stack.extend([r] * e)
                continue
            d, used = _brent_rho(c, rng, budget)
            budget -= used
            if d is None:
                remaining.append(c)
                continue
            stack.extend([d, c // d])
        if remaining:
            raise FactorizationIncomplete(n, found, remaining)
    factors = tuple(sorted(found.items()))
    for p, _ in factors:
        if not is_prime(p):
            raise ArithmeticError(f"internal error: reported factor {p} not prime")
    result = FactorizationResult(unit=unit, factors=factors)
    if result.value() != n:
        raise ArithmeticError(f"internal error: recomposition mismatch for {n}")
    return result


def prime_support(n: int, rho_budget: int = DEFAULT_RHO_BUDGET) -> tuple[int, ...]:
    """Sorted distinct primes dividing n (n != 0, n != +-1 allowed)."""
    return factorize(n, rho_budget=rho_budget).prime_support()


def squarefree_part(n: int) -> int:
    """The squarefree integer s with n = s * t**2 (sign preserved)."""
    if n == 0:
        raise ValueError("squarefree part undefined for 0")
    fac = factorize(n)
    out = fac.unit
    for p, e in fac.factors:
        if e % 2:
            out *= p
    return out


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for _, e in factorize(n).factors)


def is_fundamental_discriminant(d: int) -> bool:
    """Whether d is the discriminant of a quadratic field (d != 0, 1).

    Either d = 1 (mod 4) and squarefree, or d = 4m with m squarefree and
    m = 2 or 3 (mod 4).
    """
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/n)*; requires gcd(a, n) = 1."""
    if n <= 0 or math.gcd(a, n) != 1:
        raise ValueError("order requires n > 0 and gcd(a, n) = 1")
    a %= n
    order = 1
    x = a
    while x != 1:
        x = x * a % n
        order += 1
    return order
