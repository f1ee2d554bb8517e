"""Exact integer helpers.

Everything in this module works on Python ints with no floating point, so the
rest of the package can compare huge group orders and root bounds exactly.
"""

from __future__ import annotations

from math import isqrt


def is_prime(n: int) -> bool:
    """Trial division; fine for the parameter ranges used here (q <= ~10^6)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def prime_power_parts(q: int) -> tuple[int, int] | None:
    """Return (p, f) with q == p**f and p prime, or None if q is not a prime
    power.  q = 1 is not a prime power."""
    if q < 2:
        return None
    for p in (2, 3, 5):
        if q % p == 0:
            f = 0
            while q % p == 0:
                q //= p
                f += 1
            return (p, f) if q == 1 else None
    # q has no small factor; if composite its least prime factor exceeds 5,
    # so q = p**f needs p**2 <= q for f >= 2.
    if is_prime(q):
        return (q, 1)
    p = 7
    while p * p <= q:
        if q % p == 0:
            f = 0
            while q % p == 0:
                q //= p
                f += 1
            return (p, f) if q == 1 else None
        p += 2
    return None


def prime_powers_upto(limit: int) -> list[int]:
    """All prime powers p**f <= limit (f >= 1), ascending."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    out = []
    for p in range(2, limit + 1):
        if sieve[p]:
            pk = p
            while pk <= limit:
                out.append(pk)
                pk *= p
    out.sort()
    return out


def divisors(n: int) -> list[int]:
    """Positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def int_nth_root(x: int, n: int) -> int:
    """floor(x ** (1/n)) for x >= 0, n >= 1, exactly."""
    if x < 0 or n < 1:
        raise ValueError("x must be >= 0 and n >= 1")
    if x < 2 or n == 1:
        return x
    if n == 2:
        return isqrt(x)
    # Binary search; hi from the bit length avoids float overflow on very
    # large x: root < 2**ceil(bit_length/n) <= hi.
    hi = 1 << (x.bit_length() // n + 1)
    lo = 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**n <= x:
            lo = mid
        else:
            hi = mid - 1
    return lo


def odd_part(x: int) -> int:
    """Largest odd divisor of x (x > 0)."""
    if x < 1:
        raise ValueError("x must be positive")
    return x // (x & -x)
