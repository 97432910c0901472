"""Integer partitions and the symmetric-group statistics attached to them.

Partitions of ``n`` index the conjugacy classes of maximal tori in
GL(n,q), SL(n,q) and U(n,q); the centralizer order of the matching cycle
type in S_n is the Weyl factor |W_T| of the torus.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial

from .errors import ValidationError

DEFAULT_PARTITION_CAP = 60


class PartitionCapError(ValidationError):
    """Raised when a partition enumeration exceeds the configured cap."""


@dataclass(frozen=True, order=False)
class Partition:
    """A partition of ``n`` stored as a non-increasing tuple of parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Power notation ``1^{m_1} 2^{m_2} ...`` as ``{i: m_i}``, sorted by part size."""
        return dict(sorted(Counter(self.parts).items()))

    def label(self) -> str:
        if not self.parts:
            return "()"
        return "(" + ",".join(map(str, self.parts)) + ")"

    def power_label(self) -> str:
        """E.g. ``1^2 3^1`` for (3,1,1)."""
        return " ".join(f"{i}^{m}" for i, m in self.multiplicities().items()) or "()"

    def __str__(self) -> str:
        return self.label()


def enumerate_partitions(n: int, cap: int = DEFAULT_PARTITION_CAP) -> list[Partition]:
    """Every partition of ``n`` once, in reverse-lexicographic order.

    >>> [p.parts for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > cap:
        raise PartitionCapError(f"n={n} exceeds the partition cap {cap}")
    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def centralizer_order(p: Partition) -> int:
    """Order of the centralizer in S_n of an element of cycle type ``p``: prod m_i! i^m_i."""
    result = 1
    for i, m in p.multiplicities().items():
        result *= factorial(m) * i**m
    return result


def pi_a(p: Partition, a: int) -> int:
    """Number of parts of ``p`` divisible by ``a``, counted with multiplicity."""
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    return sum(1 for part in p.parts if part % a == 0)


def pi_prime_a(p: Partition, a: int) -> int:
    """Unitary variant of :func:`pi_a`.

    Counts parts ``k`` with either ``k`` even and ``a | k``, or ``k`` odd,
    ``a`` even and ``a | 2k``.
    """
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    count = 0
    for k in p.parts:
        if k % 2 == 0:
            count += k % a == 0
        else:
            count += a % 2 == 0 and (2 * k) % a == 0
    return count
