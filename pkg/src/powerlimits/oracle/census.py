"""Brute-force counts of M-th powers and their rs/ss/rg refinements."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod

from ..errors import CapExceededError, ValidationError
from .field import DEFAULT_FIELD_CAP
from .groups import (
    DEFAULT_ORDER_CAP,
    _normalize_kind,
    check_cap,
    encode_matrix,
    enumerate_matrices,
    group_field,
)
from .linalg import classify_matrix, mat_pow

RS, SS, RG = 1, 2, 4


@dataclass(frozen=True)
class CensusCounts:
    family: str
    n: int
    q: int
    M: int
    group_order: int
    power_image: int
    power_rs: int
    power_ss: int
    power_rg: int
    total_rs: int
    total_ss: int
    total_rg: int

    def proportions(self) -> dict[str, Fraction]:
        g = self.group_order
        return {
            "power": Fraction(self.power_image, g),
            "power_rs": Fraction(self.power_rs, g),
            "power_ss": Fraction(self.power_ss, g),
            "power_rg": Fraction(self.power_rg, g),
        }

    def check_invariants(self) -> None:
        assert self.power_rs <= self.power_ss <= self.power_image <= self.group_order
        assert self.power_rs <= self.power_rg <= self.power_image
        assert self.total_rs <= self.total_ss <= self.group_order


def _flags(F, m, n) -> int:
    rs, ss, rg = classify_matrix(F, m, n)
    return rs * RS | ss * SS | rg * RG


def census_shard(kind: str, n: int, q: int, M: int, shard: int, shards: int,
                 max_order: int = DEFAULT_ORDER_CAP, field_cap: int = DEFAULT_FIELD_CAP):
    """Census of one shard: element count, class totals, and flags of every M-th power seen."""
    F = group_field(kind, q, field_cap)
    count = 0
    totals = Counter()
    powers: dict[bytes, int] = {}
    for m in enumerate_matrices(kind, n, q, shard, shards, max_order, field_cap):
        count += 1
        f = _flags(F, m, n)
        totals[f] += 1
        h = mat_pow(F, m, M, n)
        key = encode_matrix(F, h)
        if key not in powers:
            powers[key] = f if h == m else _flags(F, h, n)
    return count, dict(totals), powers


def _shard_star(args):
    return census_shard(*args)


def default_threads() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def census(kind: str, n: int, q: int, M: int, threads: int = 1,
           max_order: int = DEFAULT_ORDER_CAP, field_cap: int = DEFAULT_FIELD_CAP) -> CensusCounts:
    """Exact counts of |G|, |G^M| and the rs/ss/rg parts, by exhaustive enumeration.

    ``threads`` worker processes each take one shard of first rows; the merge
    is a sum of counts and a union of power-image keys, so the result does
    not depend on ``threads``.
    """
    kind = _normalize_kind(kind)
    if M < 1:
        raise ValidationError(f"M must be positive, got {M}")
    if threads < 1:
        raise ValidationError(f"threads must be positive, got {threads}")
    expected = check_cap(kind, n, q, max_order)
    jobs = [(kind, n, q, M, i, threads, max_order, field_cap) for i in range(threads)]
    if threads == 1:
        results = [census_shard(*jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_shard_star, jobs))

    group_order = 0
    totals: Counter = Counter()
    powers: dict[bytes, int] = {}
    for count, shard_totals, shard_powers in results:
        group_order += count
        totals.update(shard_totals)
        powers.update(shard_powers)
    if group_order != expected:
        raise AssertionError(f"enumerated {group_order} elements, closed form gives {expected}")

    def tally(counter, bit):
        return sum(c for f, c in counter.items() if f & bit)

    image_flags = Counter(powers.values())
    counts = CensusCounts(
        family=kind,
        n=n,
        q=q,
        M=M,
        group_order=group_order,
        power_image=len(powers),
        power_rs=tally(image_flags, RS),
        power_ss=tally(image_flags, SS),
        power_rg=tally(image_flags, RG),
        total_rs=tally(totals, RS),
        total_ss=tally(totals, SS),
        total_rg=tally(totals, RG),
    )
    counts.check_invariants()
    return counts


ABELIAN_CAP = 10**6


def abelian_census(factors, M: int, cap: int = ABELIAN_CAP) -> Fraction:
    """|H^M| / |H| for H = C_{d1} x ... x C_{ds}, by listing every element."""
    factors = list(factors)
    if any(d < 1 for d in factors):
        raise ValidationError("cyclic factor orders must be positive")
    order = prod(factors)
    if order > cap:
        raise CapExceededError(f"abelian group of order {order} exceeds the cap {cap}", predicted=order, cap=cap)
    image = {tuple(x * M % d for x, d in zip(elem, factors)) for elem in product(*(range(d) for d in factors))}
    return Fraction(len(image), order)
