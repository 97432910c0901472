"""Finite fields F_{p^k} with elements encoded as integers 0..q-1.

An element is the base-p integer of its coefficient vector (low degree
first) in F_p[x]/(modulus). Multiplication goes through exp/log tables
built from a primitive element; for small fields full add/mul tables are
also materialized so the matrix code can index them directly.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from ..arith import is_prime
from ..errors import CapExceededError, ValidationError

DEFAULT_FIELD_CAP = 2**16
_FULL_TABLE_LIMIT = 512


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``m`` over F_p (coefficient lists, low first)."""
    a = a[:]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [x % p for x in a[:dm]] + [0] * max(0, dm - len(a))


def _has_root_or_factor(m: list[int], p: int) -> bool:
    """True if monic ``m`` has a monic factor of degree 1..deg(m)//2 over F_p."""
    k = len(m) - 1
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            f = list(low) + [1]
            if not any(_poly_mod(m, f, p)):
                return True
    return False


def is_irreducible(m: list[int], p: int) -> bool:
    return len(m) >= 2 and m[-1] == 1 and not _has_root_or_factor(m, p)


def smallest_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree ``k`` (low coefficients as base-p integer)."""
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        m = low + [1]
        if is_irreducible(m, p):
            return m
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


class FiniteField:
    """The field with ``p**k`` elements."""

    def __init__(self, p: int, k: int = 1):
        self.p = p
        self.k = k
        self.q = q = p**k
        self.modulus = smallest_irreducible(p, k) if k > 1 else [0, 1]
        self._digits = [tuple((x // p**i) % p for i in range(k)) for x in range(q)]
        self._weights = [p**i for i in range(k)]

        if k == 1:
            self.exp, self.log = self._prime_tables()
        else:
            self.exp, self.log = self._extension_tables()

        if q <= _FULL_TABLE_LIMIT:
            self.add_table = [self._add_slow(a, b) for a in range(q) for b in range(q)]
            self.mul_table = [self._mul_slow(a, b) for a in range(q) for b in range(q)]
        else:
            self.add_table = self.mul_table = None
        self.neg_table = [self._neg_slow(a) for a in range(q)]
        self.inv_table = [0] + [self.exp[(q - 1 - self.log[a]) % (q - 1)] for a in range(1, q)]

    # -- construction helpers -------------------------------------------------
    def _from_digits(self, digits) -> int:
        return sum(d * w for d, w in zip(digits, self._weights))

    def _add_slow(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        return self._from_digits((x + y) % p for x, y in zip(self._digits[a], self._digits[b]))

    def _neg_slow(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        return self._from_digits((-x) % p for x in self._digits[a])

    def _mul_slow(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def _prime_tables(self):
        p = self.p
        for g in range(1, p):
            exp = [1]
            x = 1
            for _ in range(p - 2):
                x = x * g % p
                exp.append(x)
            if len(set(exp)) == p - 1:
                log = [0] * p
                for i, v in enumerate(exp):
                    log[v] = i
                return exp, log
        raise AssertionError("no primitive root found")

    def _poly_mul_code(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = self._digits[a], self._digits[b]
        prod_ = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod_[i + j] += x * y
        return self._from_digits(_poly_mod(prod_, self.modulus, p))

    def _extension_tables(self):
        q = self.q
        # the class of x need not be primitive; search for a generator
        for g in range(2, q):
            exp = [1]
            x = 1
            seen = {1}
            ok = True
            for _ in range(q - 2):
                x = self._poly_mul_code(x, g)
                if x in seen:
                    ok = False
                    break
                seen.add(x)
                exp.append(x)
            if ok:
                log = [0] * q
                for i, v in enumerate(exp):
                    log[v] = i
                return exp, log
        raise AssertionError("no primitive element found")

    # -- arithmetic ----------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a * self.q + b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg_table[b])

    def mul(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return self.mul_table[a * self.q + b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.inv_table[a]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> F_p -> F."""
        return n % self.p

    @property
    def one(self) -> int:
        return 1

    @property
    def zero(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def _cached_field(p: int, k: int) -> FiniteField:
    return FiniteField(p, k)


def make_field(p: int, k: int = 1, cap: int = DEFAULT_FIELD_CAP) -> FiniteField:
    """Deterministic construction of F_{p^k}; fields are cached and shared."""
    if not is_prime(p):
        raise ValidationError(f"p={p} is not prime")
    if k < 1:
        raise ValidationError(f"k must be positive, got {k}")
    if p**k > cap:
        raise CapExceededError(f"field size {p}^{k} = {p**k} exceeds the cap {cap}", predicted=p**k, cap=cap)
    return _cached_field(p, k)
