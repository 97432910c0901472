"""Small number-theory helpers: primality, prime powers, orders mod M."""

from __future__ import annotations

from math import gcd, isqrt

from .errors import ValidationError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``, or raise ``ValidationError``.

    Trial division by primes up to sqrt(q).
    """
    if q < 2:
        raise ValidationError(f"q={q} is not a prime power")
    p = None
    for d in range(2, isqrt(q) + 1):
        if q % d == 0:
            p = d
            break
    if p is None:
        return q, 1
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise ValidationError(f"q={q} is not a prime power")
    return p, k


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except ValidationError:
        return False
    return True


def multiplicative_order(x: int, m: int) -> int:
    """Order of ``x`` in ``(Z/mZ)^*``; requires ``gcd(x, m) == 1``."""
    if m < 1 or gcd(x, m) != 1:
        raise ValueError(f"{x} is not a unit modulo {m}")
    if m == 1:
        return 1
    x %= m
    k, acc = 1, x
    while acc != 1:
        acc = acc * x % m
        k += 1
    return k


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def require_prime(M: int, what: str = "M") -> None:
    if not is_prime(M):
        raise ValidationError(f"{what}={M} must be prime")
