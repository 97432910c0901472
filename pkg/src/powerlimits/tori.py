"""Conjugacy classes of maximal tori for GL, SL, U and user-supplied groups."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ClassEquationError, ValidationError
from .partitions import DEFAULT_PARTITION_CAP, Partition, centralizer_order, enumerate_partitions
from .qpoly import QPoly

KINDS = ("GL", "SL", "U", "Custom")


@dataclass(frozen=True)
class TorusClass:
    """One class of maximal tori: cyclic factor orders C_{d1} x ... x C_{ds} and |W_T|."""

    factors: tuple[QPoly, ...]
    weyl_order: int
    label: Partition | None = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValidationError("a torus class needs at least one cyclic factor")
        if self.weyl_order < 1:
            raise ValidationError(f"weyl_order must be positive, got {self.weyl_order}")

    def name(self) -> str:
        if self.label is not None:
            return self.label.label()
        return " x ".join(f"C[{f}]" for f in self.factors)

    def order_at(self, q: int) -> int:
        out = 1
        for f in self.factors:
            out *= f.eval(q)
        return out


@dataclass(frozen=True)
class GroupFamily:
    kind: str
    n: int | None = None
    rank: int | None = None
    custom_tori: tuple[TorusClass, ...] | None = field(default=None, compare=True)
    name: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown group family {self.kind!r}")
        if self.kind == "Custom":
            if not self.custom_tori:
                raise ValidationError("a custom family needs a torus list")
            if self.rank is None or self.rank < 1:
                raise ValidationError("a custom family needs an explicit positive rank")
            object.__setattr__(self, "custom_tori", tuple(self.custom_tori))
            return
        if self.n is None or self.n < 1:
            raise ValidationError(f"{self.kind} needs n >= 1")
        if self.kind == "SL" and self.n < 2:
            raise ValidationError("SL needs n >= 2")
        expected = self.n - 1 if self.kind == "SL" else self.n
        if self.rank is None:
            object.__setattr__(self, "rank", expected)
        elif self.rank != expected:
            raise ValidationError(f"{self.kind}({self.n}) has rank {expected}, not {self.rank}")

    @classmethod
    def gl(cls, n: int) -> "GroupFamily":
        return cls("GL", n)

    @classmethod
    def sl(cls, n: int) -> "GroupFamily":
        return cls("SL", n)

    @classmethod
    def u(cls, n: int) -> "GroupFamily":
        return cls("U", n)

    def display(self) -> str:
        if self.kind == "Custom":
            return self.name or "custom"
        return f"{self.kind}({self.n})"


def class_equation_sum(tori) -> Fraction:
    return sum((Fraction(1, t.weyl_order) for t in tori), Fraction(0))


def check_class_equation(tori) -> None:
    total = class_equation_sum(tori)
    if total != 1:
        raise ClassEquationError(f"class equation violated: sum of 1/|W_T| is {total}, expected 1")


def _partition_tori(kind: str, n: int, cap: int) -> list[TorusClass]:
    out = []
    for lam in enumerate_partitions(n, cap):
        if kind == "GL":
            factors = [QPoly.q_power_minus(k) for k in lam.parts]
        elif kind == "U":
            factors = [QPoly.q_power_minus(k, (-1) ** k) for k in lam.parts]
        else:
            # the last part of the non-increasing ordering carries the (q-1) quotient
            *head, last = lam.parts
            factors = [QPoly.q_power_minus(k) for k in head] + [QPoly.geometric(last)]
        out.append(TorusClass(tuple(factors), centralizer_order(lam), lam))
    return out


def torus_classes(family: GroupFamily, cap: int = DEFAULT_PARTITION_CAP) -> list[TorusClass]:
    """Torus classes of ``family``, one per partition of n for GL/SL/U."""
    if family.kind == "Custom":
        tori = list(family.custom_tori)
    else:
        tori = _partition_tori(family.kind, family.n, cap)
    check_class_equation(tori)
    return tori


_TOP_KEYS = {"name", "rank", "tori"}
_TORUS_KEYS = {"weyl_order", "factors"}


def _require_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{where} must be an integer, got {value!r}")
    return value


def parse_custom_tori(data) -> GroupFamily:
    """Build a Custom family from an already-decoded torus document."""
    if not isinstance(data, dict):
        raise ValidationError("torus document must be a JSON object")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise ValidationError(f"unknown keys in torus document: {sorted(unknown)}")
    missing = _TOP_KEYS - set(data)
    if missing:
        raise ValidationError(f"missing keys in torus document: {sorted(missing)}")
    name = data["name"]
    if not isinstance(name, str):
        raise ValidationError("'name' must be a string")
    rank = _require_int(data["rank"], "rank")
    if rank < 1:
        raise ValidationError(f"rank must be positive, got {rank}")
    entries = data["tori"]
    if not isinstance(entries, list) or not entries:
        raise ValidationError("'tori' must be a non-empty list")
    tori = []
    for i, entry in enumerate(entries):
        where = f"tori[{i}]"
        if not isinstance(entry, dict):
            raise ValidationError(f"{where} must be an object")
        unknown = set(entry) - _TORUS_KEYS
        if unknown:
            raise ValidationError(f"unknown keys in {where}: {sorted(unknown)}")
        missing = _TORUS_KEYS - set(entry)
        if missing:
            raise ValidationError(f"missing keys in {where}: {sorted(missing)}")
        weyl = _require_int(entry["weyl_order"], f"{where}.weyl_order")
        if weyl < 1:
            raise ValidationError(f"{where}.weyl_order must be positive, got {weyl}")
        raw_factors = entry["factors"]
        if not isinstance(raw_factors, list) or not raw_factors:
            raise ValidationError(f"{where}.factors must be a non-empty list")
        factors = []
        for j, coeffs in enumerate(raw_factors):
            if not isinstance(coeffs, list) or not coeffs:
                raise ValidationError(f"{where}.factors[{j}] must be a non-empty coefficient array")
            poly = QPoly.from_list(_require_int(c, f"{where}.factors[{j}]") for c in coeffs)
            if poly.is_zero():
                raise ValidationError(f"{where}.factors[{j}] is the zero polynomial")
            factors.append(poly)
        tori.append(TorusClass(tuple(factors), weyl))
    check_class_equation(tori)
    return GroupFamily("Custom", rank=rank, custom_tori=tuple(tori), name=name)


def load_custom_tori(document: str) -> GroupFamily:
    """Parse a custom torus file (JSON text)."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"torus file is not valid JSON: {exc}") from None
    return parse_custom_tori(data)


def dump_custom_tori(family: GroupFamily, name: str | None = None) -> str:
    """Serialize any family's torus table in the custom file format."""
    doc = {
        "name": name or family.display(),
        "rank": family.rank,
        "tori": [
            {"weyl_order": t.weyl_order, "factors": [f.to_json() for f in t.factors]}
            for t in torus_classes(family)
        ],
    }
    return json.dumps(doc, indent=2)
