"""Explicit enumeration of GL(n,q), SL(n,q) and U(n,q) for small parameters.

Groups are built row by row. GL picks each row outside the span of the
previous ones; SL filters GL by determinant 1. U(n,q) lives in
GL(n,q^2) and is cut out by A * sigma(A)^T = I with sigma(x) = x^q, i.e.
its rows are orthonormal for the standard Hermitian form; rows are picked
among norm-1 vectors orthogonal to the earlier rows, which yields exactly
the matrices of GL(n,q^2) passing that filter. Every nondegenerate
Hermitian form over a finite field is equivalent to the standard one, so
the identity Gram matrix loses nothing.

Work is sharded by the first row so shards can run independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..arith import prime_power
from ..asymptotics import gl_order, sl_order, u_order
from ..errors import CapExceededError, ValidationError
from .field import DEFAULT_FIELD_CAP, FiniteField, make_field
from .linalg import determinant

DEFAULT_ORDER_CAP = 10**7
FAMILIES = ("GL", "SL", "U")


@dataclass(frozen=True)
class GroupElement:
    matrix: tuple[int, ...]
    n: int
    field: FiniteField

    def rows(self) -> list[tuple[int, ...]]:
        n = self.n
        return [self.matrix[i * n:(i + 1) * n] for i in range(n)]


def predicted_order(kind: str, n: int, q: int) -> int:
    if kind == "GL":
        return gl_order(n, q)
    if kind == "SL":
        return sl_order(n, q)
    if kind == "U":
        return u_order(n, q)
    raise ValidationError(f"no oracle for family {kind!r}")


def _normalize_kind(kind: str) -> str:
    upper = kind.upper()
    if upper not in FAMILIES:
        raise ValidationError(f"no oracle for family {kind!r}; expected one of {FAMILIES}")
    return upper


def group_field(kind: str, q: int, field_cap: int = DEFAULT_FIELD_CAP) -> FiniteField:
    """Field the matrices live over: F_q, or F_{q^2} for the unitary group."""
    p, k = prime_power(q)
    return make_field(p, 2 * k if kind == "U" else k, cap=field_cap)


def check_cap(kind: str, n: int, q: int, max_order: int = DEFAULT_ORDER_CAP) -> int:
    order = predicted_order(kind, n, q)
    if order > max_order:
        raise CapExceededError(
            f"{kind}({n},{q}) has order {order}, above the enumeration cap {max_order}",
            predicted=order,
            cap=max_order,
        )
    return order


class _Enumerator:
    def __init__(self, kind: str, n: int, q: int, F: FiniteField):
        self.kind, self.n, self.q, self.F = kind, n, q, F
        vectors = [v for v in product(range(F.q), repeat=n) if any(v)]
        if kind == "U":
            self.sigma = [F.pow(x, q) for x in range(F.q)]
            self.candidates = [v for v in vectors if self.hermitian(v, v) == 1]
        else:
            self.candidates = vectors

    def hermitian(self, u, v) -> int:
        F, sigma = self.F, self.sigma
        acc = 0
        for x, y in zip(u, v):
            if x and y:
                acc = F.add(acc, F.mul(x, sigma[y]))
        return acc

    def first_rows(self) -> list[tuple[int, ...]]:
        return self.candidates

    def _span_add(self, span: set, v) -> set:
        F = self.F
        out = set()
        for s in span:
            for c in range(F.q):
                out.add(tuple(F.add(a, F.mul(c, b)) for a, b in zip(s, v)))
        return out

    def completions(self, first_row):
        """All group elements whose first row is ``first_row``, as flat tuples."""
        n = self.n
        if self.kind == "U":
            yield from self._unitary_rows([first_row])
            return
        zero = (0,) * n
        span = self._span_add({zero}, first_row)
        for rows in self._gl_rows([first_row], span):
            flat = tuple(x for r in rows for x in r)
            if self.kind == "SL" and determinant(self.F, flat, n) != 1:
                continue
            yield flat

    def _gl_rows(self, rows, span):
        if len(rows) == self.n:
            yield rows
            return
        for v in self.candidates:
            if v in span:
                continue
            yield from self._gl_rows(rows + [v], self._span_add(span, v) if len(rows) + 1 < self.n else span)

    def _unitary_rows(self, rows):
        if len(rows) == self.n:
            yield tuple(x for r in rows for x in r)
            return
        for v in self.candidates:
            if all(self.hermitian(v, r) == 0 for r in rows):
                yield from self._unitary_rows(rows + [v])


def shard_first_rows(first_rows, shard: int, shards: int):
    """Round-robin split of first rows; shard ``i`` takes rows ``i, i+shards, ...``."""
    return first_rows[shard::shards]


def enumerate_matrices(kind: str, n: int, q: int, shard: int = 0, shards: int = 1,
                       max_order: int = DEFAULT_ORDER_CAP, field_cap: int = DEFAULT_FIELD_CAP):
    """Flat row-major matrices of one shard of the group."""
    kind = _normalize_kind(kind)
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}")
    if kind == "SL" and n < 2:
        raise ValidationError("SL needs n >= 2")
    check_cap(kind, n, q, max_order)
    F = group_field(kind, q, field_cap)
    en = _Enumerator(kind, n, q, F)
    for row in shard_first_rows(en.first_rows(), shard, shards):
        yield from en.completions(row)


def enumerate_group(kind: str, n: int, q: int, max_order: int = DEFAULT_ORDER_CAP,
                    field_cap: int = DEFAULT_FIELD_CAP):
    """Yield every element of the group exactly once."""
    kind = _normalize_kind(kind)
    F = group_field(kind, q, field_cap)
    for m in enumerate_matrices(kind, n, q, max_order=max_order, field_cap=field_cap):
        yield GroupElement(m, n, F)


def encode_matrix(F: FiniteField, matrix) -> bytes:
    """Canonical row-major byte encoding (one byte per entry when q <= 256, else two)."""
    if F.q <= 256:
        return bytes(matrix)
    return b"".join(x.to_bytes(2, "big") for x in matrix)
