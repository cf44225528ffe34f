import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shimura_gate.arith import (
    FactorizationIncomplete,
    FactorizationResult,
    factorize,
    is_fundamental_discriminant,
    is_prime,
    is_square,
    is_squarefree,
    iter_primes,
    kronecker_symbol,
    multiplicative_order,
    primes_up_to,
    squarefree_part,
)


def naive_trial_division(n):
    """Independent factorization oracle: plain trial division."""
    out = {}
    m = abs(n)
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


class TestKronecker:
    def test_spec_examples(self):
        assert kronecker_symbol(-24, 5) == 1  # -24 = 1 mod 5, a square
        assert kronecker_symbol(-31, 2) == 1  # -31 = 1 mod 8
        for a in (-7, -1, 0, 1, 2, 10**9 + 7):
            assert kronecker_symbol(a, 1) == 1

    def test_zero_denominator(self):
        with pytest.raises(ValueError):
            kronecker_symbol(3, 0)

    def test_against_euler_criterion(self):
        for p in primes_up_to(200):
            if p == 2:
                continue
            for a in range(-30, 30):
                expected = pow(a, (p - 1) // 2, p)
                expected = {0: 0, 1: 1, p - 1: -1}[expected]
                assert kronecker_symbol(a, p) == expected, (a, p)

    def test_at_two_conventions(self):
        for a in range(-50, 50):
            if a % 2 == 0:
                assert kronecker_symbol(a, 2) == 0
            elif a % 8 in (1, 7):
                assert kronecker_symbol(a, 2) == 1
            else:
                assert kronecker_symbol(a, 2) == -1

    @given(
        st.integers(-10**6, 10**6),
        st.integers(-10**6, 10**6),
        st.integers(-10**5, 10**5).filter(lambda n: n % 2 == 1),
    )
    @settings(max_examples=300)
    def test_multiplicative_in_numerator(self, a, b, n):
        assert kronecker_symbol(a * b, n) == kronecker_symbol(a, n) * kronecker_symbol(b, n)

    @given(
        st.integers(-10**6, 10**6),
        st.integers(1, 10**4),
        st.integers(1, 10**4),
    )
    @settings(max_examples=200)
    def test_multiplicative_in_denominator(self, a, m, n):
        assert kronecker_symbol(a, m * n) == kronecker_symbol(a, m) * kronecker_symbol(a, n)


class TestPrimality:
    def test_small(self):
        sieve = set(primes_up_to(2000))
        for n in range(-5, 2000):
            assert is_prime(n) == (n in sieve)

    def test_known_large(self):
        assert is_prime(2**61 - 1)
        assert not is_prime((2**31 - 1) * (2**61 - 1))
        assert is_prime(10**30 + 57)  # above the deterministic bound? no; still valid
        assert is_prime(2**127 - 1)
        assert not is_prime(2**128 + 1)

    def test_iter_primes(self):
        it = iter_primes(start=4)
        assert [next(it) for _ in range(4)] == [5, 7, 11, 13]
        assert list(primes_up_to(30)) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_multiplicative_order(self):
        assert multiplicative_order(2, 31) == 5
        assert multiplicative_order(3, 31) == 30
        with pytest.raises(ValueError):
            multiplicative_order(6, 9)


class TestFactorize:
    def test_spec_examples(self):
        assert factorize(6561).factors == ((3, 8),)
        f = factorize(5**12 - 1)
        assert f.prime_support() == (2, 3, 7, 13, 31, 601)
        assert f.factors == ((2, 4), (3, 2), (7, 1), (13, 1), (31, 1), (601, 1))
        g = factorize(-6)
        assert g.unit == -1 and g.factors == ((2, 1), (3, 1))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factorize(0)

    def test_units(self):
        assert factorize(1) == FactorizationResult(1, ())
        assert factorize(-1) == FactorizationResult(-1, ())

    def test_recomposition_randomized(self):
        rng = random.Random(20260810)
        for _ in range(150):
            n = rng.randrange(2, 2**64)
            if rng.random() < 0.5:
                n = -n
            f = factorize(n)
            assert f.value() == n
            assert f.factors == tuple(sorted(naive_trial_division(n).items())) or abs(n) >= 2**40
            for p, _ in f.factors:
                assert is_prime(p)

    def test_recomposition_vs_oracle_small(self):
        for n in list(range(2, 500)) + [2**32 - 1, 2**40 - 3]:
            f = factorize(n)
            assert dict(f.factors) == naive_trial_division(n)

    def test_structured_power_shapes(self):
        # a**e +- b**24 shapes mirroring the norm values downstream
        count = 0
        for a in (2, 3, 5, 7, 10):
            for b in (1, 2, 3):
                for e in (8, 12, 16, 24):
                    for sign in (1, -1):
                        n = a**e + sign * b**24
                        if n == 0:
                            continue
                        f = factorize(n)
                        assert f.value() == n
                        count += 1
        assert count >= 100

    def test_budget_exhaustion_is_typed(self):
        # two 40+ digit primes: rho cannot split this with a tiny budget
        p = 2**131 - 1
        q = 2**127 - 1
        with pytest.raises(FactorizationIncomplete) as exc:
            factorize(p * q, rho_budget=10)
        assert exc.value.remaining and exc.value.remaining[0] == p * q

    def test_result_invariants(self):
        with pytest.raises(ValueError):
            FactorizationResult(1, ((3, 1), (2, 1)))
        with pytest.raises(ValueError):
            FactorizationResult(2, ((2, 1),))
        with pytest.raises(ValueError):
            FactorizationResult(1, ((2, 0),))


class TestSquarefreeHelpers:
    def test_squarefree_part(self):
        assert squarefree_part(12) == 3
        assert squarefree_part(-12) == -3
        assert squarefree_part(1) == 1
        assert squarefree_part(49) == 1

    def test_is_squarefree(self):
        assert is_squarefree(6) and is_squarefree(-22)
        assert not is_squarefree(12) and not is_squarefree(0)

    def test_fundamental_discriminants(self):
        fundamentals = {-3, -4, -7, -8, -11, -15, -19, -20, -24, -31, 5, 8, 12, 13, 744}
        not_fundamental = {0, 1, -1, -9, -12, -16, -18, -25, 4, 9, -27, -32, -44, -48}
        for d in fundamentals:
            assert is_fundamental_discriminant(d), d
        for d in not_fundamental:
            assert not is_fundamental_discriminant(d), d

    def test_is_square(self):
        squares = {n * n for n in range(100)}
        for n in range(-5, 9000):
            assert is_square(n) == (n in squares)
