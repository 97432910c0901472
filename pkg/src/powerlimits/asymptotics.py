"""Limiting proportion of M-th powers as q grows, and its possible values.

For a reductive group with torus classes T = C_{d1} x ... x C_{ds} the
limit is

    sum over classes of 1 / (|W_T| * gcd(M, d1) * ... * gcd(M, ds)).

All arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .arith import divisors, multiplicative_order, prime_power, require_prime
from .errors import ValidationError
from .partitions import centralizer_order, enumerate_partitions, pi_a, pi_prime_a
from .qpoly import gcd_with_M_at, gcd_with_M_residue
from .tori import GroupFamily, torus_classes


@dataclass(frozen=True)
class TorusTerm:
    label: str
    weyl_order: int
    gcds: tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class LimitReport:
    family: GroupFamily
    M: int
    q: int | None
    residue: int | None
    value: Fraction
    terms: tuple[TorusTerm, ...]

    @property
    def per_torus_terms(self) -> list[tuple[str, Fraction]]:
        return [(t.label, t.value) for t in self.terms]


@dataclass(frozen=True)
class LimitEntry:
    condition: str
    order: int | None  # multiplicative order a of q mod M; None for the M | q case
    value: Fraction


@dataclass(frozen=True)
class SubsequentialLimits:
    family: GroupFamily
    M: int
    entries: tuple[LimitEntry, ...]
    distinct_values: tuple[Fraction, ...]
    collisions: tuple[tuple[str, str], ...]

    @property
    def nu(self) -> int:
        """Number of divisors a of M-1 with a <= n."""
        return sum(1 for a in divisors(self.M - 1) if a <= self.family.n)


def _check_M(M: int) -> None:
    if M < 2:
        raise ValidationError(f"M must be at least 2, got {M}")


def _assemble(family, M, q, residue, gcd_of) -> LimitReport:
    terms = []
    for torus in torus_classes(family):
        gcds = tuple(gcd_of(f) for f in torus.factors)
        value = Fraction(1, torus.weyl_order * prod(gcds))
        terms.append(TorusTerm(torus.name(), torus.weyl_order, gcds, value))
    total = sum((t.value for t in terms), Fraction(0))
    return LimitReport(family, M, q, residue, total, tuple(terms))


def limit_proportion(family: GroupFamily, M: int, q: int) -> LimitReport:
    """Evaluate the torus sum at a concrete prime power ``q``."""
    _check_M(M)
    prime_power(q)
    try:
        return _assemble(family, M, q, None, lambda f: gcd_with_M_at(f, M, q))
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def limit_proportion_residue(family: GroupFamily, M: int, r: int) -> LimitReport:
    """Common limit along prime powers ``q`` congruent to ``r`` mod ``M``."""
    _check_M(M)
    if not 0 <= r < M:
        raise ValidationError(f"residue must lie in [0, {M - 1}], got {r}")
    return _assemble(family, M, None, r, lambda f: gcd_with_M_residue(f, M, r))


def gl_order_limit(n: int, M: int, a: int) -> Fraction:
    """sum over partitions of n of 1 / (M^{pi_a} |Z(lambda)|)."""
    return sum(
        (Fraction(1, M ** pi_a(lam, a) * centralizer_order(lam)) for lam in enumerate_partitions(n)),
        Fraction(0),
    )


def u_order_limit(n: int, M: int, a: int) -> Fraction:
    """Unitary counterpart of :func:`gl_order_limit`, using pi'_a (M odd)."""
    return sum(
        (Fraction(1, M ** pi_prime_a(lam, a) * centralizer_order(lam)) for lam in enumerate_partitions(n)),
        Fraction(0),
    )


def part_count_limit(n: int, base: int = 2) -> Fraction:
    """sum over partitions of 1 / (base^{#parts} |Z(lambda)|)."""
    return sum(
        (Fraction(1, base ** len(lam) * centralizer_order(lam)) for lam in enumerate_partitions(n)),
        Fraction(0),
    )


def subsequential_limits(family: GroupFamily, M: int) -> SubsequentialLimits:
    """All limits of the proportion as q grows, for prime M and GL or U.

    One entry for ``M | q`` and one per possible order ``a`` of ``q`` mod ``M``
    (every divisor of M-1). Values are computed from the partition statistics,
    not from the torus gcds. Entries sharing a value are recorded as collisions.
    """
    if family.kind not in ("GL", "U"):
        raise ValidationError(f"subsequential limits are only classified for GL and U, not {family.kind}")
    require_prime(M)
    n = family.n
    entries = [LimitEntry("M|q", None, Fraction(1))]
    for a in divisors(M - 1):
        if family.kind == "GL":
            value = gl_order_limit(n, M, a)
        elif M == 2:
            value = part_count_limit(n, 2)
        else:
            value = u_order_limit(n, M, a)
        entries.append(LimitEntry(f"ord(q mod M)={a}", a, value))

    seen: dict[Fraction, str] = {}
    collisions = []
    for e in entries:
        if e.value in seen:
            collisions.append((seen[e.value], e.condition))
        else:
            seen[e.value] = e.condition
    return SubsequentialLimits(family, M, tuple(entries), tuple(sorted(seen)), tuple(collisions))


def gl_order(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2) * prod(q**i - 1 for i in range(1, n + 1))


def sl_order(n: int, q: int) -> int:
    return gl_order(n, q) // (q - 1)


def u_order(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2) * prod(q**i - (-1) ** i for i in range(1, n + 1))


@dataclass(frozen=True)
class SurjectivityReport:
    n: int
    q: int
    M: int
    gcd_M_q: int
    order_q_mod_M: int | None
    order_criterion: bool
    gcd_M_group_order: int
    surjective: bool


def surjectivity_report(n: int, q: int, M: int) -> SurjectivityReport:
    """Decide whether x -> x^M is onto GL(n, q) for prime M.

    A power map with prime exponent on a finite group is onto exactly when
    M does not divide the group order; that is the verdict. The order test
    "(M, q) = 1 and ord(q mod M) > n" is reported alongside. The two agree
    except for n = 1 with M | q, where GL(1, q) has order q - 1 prime to M.
    """
    require_prime(M)
    prime_power(q)
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}")
    g = gcd(M, q)
    order = multiplicative_order(q, M) if g == 1 else None
    by_order = g == 1 and order > n
    g_order = gcd(M, gl_order(n, q))
    by_group_order = g_order == 1
    if by_order != by_group_order and not (n == 1 and g != 1):
        raise AssertionError(f"surjectivity criteria disagree for n={n}, q={q}, M={M}")
    return SurjectivityReport(n, q, M, g, order, by_order, g_order, by_group_order)


def is_surjective(n: int, q: int, M: int) -> bool:
    """Whether x -> x^M is onto GL(n, q), for prime M."""
    return surjectivity_report(n, q, M).surjective


def abelian_power_ratio(factors, M: int) -> Fraction:
    """|H^M| / |H| for H = C_{d1} x ... x C_{ds}."""
    _check_M(M)
    if any(d < 1 for d in factors):
        raise ValidationError("cyclic factor orders must be positive")
    return Fraction(1, prod(gcd(M, d) for d in factors))


__all__ = [
    "LimitEntry",
    "LimitReport",
    "SubsequentialLimits",
    "SurjectivityReport",
    "TorusTerm",
    "abelian_power_ratio",
    "gl_order",
    "gl_order_limit",
    "is_surjective",
    "limit_proportion",
    "limit_proportion_residue",
    "part_count_limit",
    "sl_order",
    "subsequential_limits",
    "surjectivity_report",
    "u_order",
    "u_order_limit",
]
