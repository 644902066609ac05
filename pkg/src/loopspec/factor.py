"""Integer factorization for the square-free tests."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

TRIAL_LIMIT = 10**6

# Deterministic for n < 3.3e24 (Sorenson & Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class ZeroInputError(ValueError):
    pass


@lru_cache(maxsize=1)
def small_primes(limit: int = TRIAL_LIMIT) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24, 13 fixed bases above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pollard_brent(n: int, rng: random.Random) -> int:
    """A nontrivial factor of the odd composite ``n``."""
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    value: int
    sign: int
    prime_powers: tuple[tuple[int, int], ...]

    def recombine(self) -> int:
        out = self.sign
        for p, e in self.prime_powers:
            out *= p**e
        return out

    @property
    def is_square_free(self) -> bool:
        return all(e == 1 for _, e in self.prime_powers)


def factor(m: int) -> Factorization:
    if m == 0:
        raise ZeroInputError("cannot factor 0")
    sign = -1 if m < 0 else 1
    rest = abs(m)
    counts: dict[int, int] = {}
    for p in small_primes():
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            counts[p] = e
    if rest > 1:
        # seeded so repeated runs return identically
        rng = random.Random(rest)
        stack = [rest]
        while stack:
            k = stack.pop()
            if k < TRIAL_LIMIT**2 or is_probable_prime(k):
                counts[k] = counts.get(k, 0) + 1
                continue
            d = pollard_brent(k, rng)
            stack.extend((d, k // d))
    return Factorization(m, sign, tuple(sorted(counts.items())))


def is_square_free(m: int) -> bool:
    """True iff m != 0 and no prime square divides m."""
    if m == 0:
        return False
    return factor(m).is_square_free
