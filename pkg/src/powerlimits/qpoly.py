"""Integer polynomials in ``q`` describing the orders of cyclic torus factors."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class QPoly:
    """Dense integer polynomial; ``coefficients[i]`` multiplies ``q**i``."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_list(cls, coeffs) -> "QPoly":
        return cls(tuple(coeffs))

    @classmethod
    def q_power_minus(cls, k: int, c: int = 1) -> "QPoly":
        """``q**k - c``."""
        coeffs = [0] * (k + 1)
        coeffs[0] -= c
        coeffs[k] += 1
        return cls(tuple(coeffs))

    @classmethod
    def geometric(cls, k: int) -> "QPoly":
        """``1 + q + ... + q**(k-1)``, i.e. ``(q**k - 1)/(q - 1)``."""
        return cls((1,) * k)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def eval(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * q + c
        return acc

    def eval_mod(self, q: int, m: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = (acc * q + c) % m
        return acc

    def to_json(self) -> list[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "q" if i == 1 else f"q^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def gcd_with_M_at(p: QPoly, M: int, q: int) -> int:
    """``gcd(M, p(q))``; the factor must be positive at ``q``."""
    value = p.eval(q)
    if value <= 0:
        raise ValueError(f"torus factor {p} evaluates to {value} at q={q}; expected a positive order")
    return gcd(M, value)


def gcd_with_M_residue(p: QPoly, M: int, r: int) -> int:
    """``gcd(M, p(q))`` for any ``q`` congruent to ``r`` mod ``M``.

    Only ``p(r) mod M`` matters, so this never touches large integers.
    """
    return gcd(M, p.eval_mod(r % M, M))
