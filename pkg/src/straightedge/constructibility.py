"""The Gauss-Wantzel constructibility criterion with checkable certificates.

The regular n-gon is constructible exactly when n = 2^r * p_1 * ... * p_k
for distinct Fermat primes p_i = 2^(2^s) + 1.  Verdicts carry either the
full certificate (r and the prime list, whose product reproduces n) or a
witness prime explaining the refusal.  Everything runs on desk-scale
integers, so factoring is plain wheel trial division and primality is the
deterministic Miller-Rabin witness set for 64-bit inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Refusal",
    "Verdict",
    "gauss_constructible",
    "is_fermat_prime",
    "fermat_exponent",
    "smallest_prime_factor",
    "factorize",
    "KNOWN_FERMAT_PRIMES",
]

KNOWN_FERMAT_PRIMES = (3, 5, 17, 257, 65537)

# Deterministic Miller-Rabin witnesses for every n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


@dataclass(frozen=True)
class Refusal:
    kind: str  # "repeated-odd-prime" | "non-fermat-prime"
    prime: int

    def __str__(self) -> str:
        if self.kind == "repeated-odd-prime":
            return f"{self.prime} divides n more than once"
        return f"{self.prime} is not a Fermat prime"


@dataclass(frozen=True)
class Verdict:
    n: int
    constructible: bool
    two_exponent: int
    fermat_primes: tuple[int, ...]
    refusal: Refusal | None = None

    def certificate_product(self) -> int:
        product = 2**self.two_exponent
        for p in self.fermat_primes:
            product *= p
        return product

    def __str__(self) -> str:
        if self.constructible:
            parts = [f"2^{self.two_exponent}"] + [str(p) for p in self.fermat_primes]
            return f"{self.n}: constructible ({self.n} = {' * '.join(parts)})"
        return f"{self.n}: not constructible ({self.refusal})"


def smallest_prime_factor(m: int) -> int:
    """Smallest prime dividing m, by trial division on a mod-30 wheel."""
    if m < 2:
        raise ValueError("need an integer >= 2")
    for p in (2, 3, 5):
        if m % p == 0:
            return p
    d = 7
    i = 0
    while d * d <= m:
        if m % d == 0:
            return d
        d += _WHEEL[i]
        i = (i + 1) % len(_WHEEL)
    return m


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, ascending."""
    if m < 1:
        raise ValueError("need a positive integer")
    factors: list[tuple[int, int]] = []
    while m > 1:
        p = smallest_prime_factor(m)
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        factors.append((p, e))
    return factors


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for p in _MR_WITNESSES:
        if m % p == 0:
            return m == p
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def fermat_exponent(p: int) -> int | None:
    """The s with p = 2^(2^s) + 1 if p is a Fermat prime, else None."""
    if p < 2:
        raise ValueError("need an integer >= 2")
    if p == 2:
        return None
    t = p - 1
    k = t.bit_length() - 1
    if t != 1 << k:
        return None  # p - 1 is not a power of two
    if k != 1 << (k.bit_length() - 1):
        return None  # the exponent itself is not a power of two
    return k.bit_length() - 1 if _is_prime(p) else None


def is_fermat_prime(p: int) -> bool:
    return fermat_exponent(p) is not None


def gauss_constructible(n: int) -> Verdict:
    """Decide constructibility of the regular n-gon, with certificate."""
    if n < 3:
        raise ValueError("polygons need n >= 3")
    two_exponent = 0
    odd_primes: list[int] = []
    for p, e in factorize(n):
        if p == 2:
            two_exponent = e
            continue
        if e > 1:
            return Verdict(
                n, False, 0, (), Refusal("repeated-odd-prime", p)
            )
        if not is_fermat_prime(p):
            return Verdict(n, False, 0, (), Refusal("non-fermat-prime", p))
        odd_primes.append(p)
    return Verdict(n, True, two_exponent, tuple(sorted(odd_primes)))
