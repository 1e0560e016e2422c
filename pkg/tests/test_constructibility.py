import time

import pytest

from straightedge.constructibility import (
    KNOWN_FERMAT_PRIMES,
    factorize,
    fermat_exponent,
    gauss_constructible,
    is_fermat_prime,
    smallest_prime_factor,
)


def brute_force_constructible(limit: int) -> set[int]:
    """Independent enumeration: 2^r times products of distinct known Fermat
    primes, collected up to the limit."""
    products = {1}
    for p in KNOWN_FERMAT_PRIMES:
        products |= {q * p for q in products if q * p <= limit}
    out = set()
    for q in products:
        n = q
        while n <= limit:
            if n >= 3:
                out.add(n)
            n *= 2
    return out


class TestGaussConstructible:
    def test_pentagon(self):
        v = gauss_constructible(5)
        assert v.constructible and v.two_exponent == 0 and v.fermat_primes == (5,)

    def test_heptagon_refused(self):
        v = gauss_constructible(7)
        assert not v.constructible
        assert v.refusal.kind == "non-fermat-prime" and v.refusal.prime == 7

    def test_nonagon_refused(self):
        v = gauss_constructible(9)
        assert not v.constructible
        assert v.refusal.kind == "repeated-odd-prime" and v.refusal.prime == 3

    def test_17gon_accepted(self):
        assert gauss_constructible(17).constructible

    def test_all_five_fermat_primes(self):
        n = 2**5 * 3 * 5 * 17 * 257 * 65537
        v = gauss_constructible(n)
        assert v.constructible
        assert v.two_exponent == 5
        assert v.fermat_primes == KNOWN_FERMAT_PRIMES

    def test_against_brute_force_oracle(self):
        want = brute_force_constructible(100)
        for n in range(3, 101):
            assert gauss_constructible(n).constructible == (n in want), n

    def test_certificate_soundness(self):
        for n in range(3, 301):
            v = gauss_constructible(n)
            if v.constructible:
                assert v.certificate_product() == n
                assert len(set(v.fermat_primes)) == len(v.fermat_primes)
                assert all(is_fermat_prime(p) for p in v.fermat_primes)

    def test_too_small(self):
        with pytest.raises(ValueError):
            gauss_constructible(2)

    def test_message_strings(self):
        assert "not constructible (7 is not a Fermat prime)" in str(gauss_constructible(7))
        assert "constructible" in str(gauss_constructible(17))


class TestFermatPrimes:
    def test_known_list_with_exponents(self):
        assert [fermat_exponent(p) for p in KNOWN_FERMAT_PRIMES] == [0, 1, 2, 3, 4]

    def test_eulers_counterexample(self):
        assert not is_fermat_prime(2**32 + 1)

    def test_wrong_shape(self):
        for p in (2, 7, 11, 13, 31, 127, 15, 255):
            assert not is_fermat_prime(p)

    def test_exactly_five_below_a_million(self):
        found = [p for p in range(2, 10**6 + 1) if is_fermat_prime(p)]
        assert found == list(KNOWN_FERMAT_PRIMES)

    def test_bad_input(self):
        with pytest.raises(ValueError):
            fermat_exponent(1)


class TestSmallestPrimeFactor:
    def test_euler_641(self):
        started = time.perf_counter()
        assert smallest_prime_factor(2**32 + 1) == 641
        assert time.perf_counter() - started < 1.0

    def test_prime_input(self):
        assert smallest_prime_factor(257) == 257

    def test_small_composites(self):
        assert smallest_prime_factor(15) == 3
        assert smallest_prime_factor(49) == 7
        assert smallest_prime_factor(2) == 2

    def test_bad_input(self):
        with pytest.raises(ValueError):
            smallest_prime_factor(1)


class TestFactorize:
    def test_roundtrip(self):
        for n in (2, 12, 97, 360, 2**5 * 3 * 5 * 17):
            product = 1
            for p, e in factorize(n):
                product *= p**e
            assert product == n

    def test_sorted_primes(self):
        assert factorize(60) == [(2, 2), (3, 1), (5, 1)]
