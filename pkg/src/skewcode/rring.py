"""R = F_q + u F_q with u^2 = u, stored in idempotent (CRT) coordinates.

``RElement(c1, c2)`` means xi1*c1 + xi2*c2 with xi1 = 1 - u and xi2 = u, so
a + u b corresponds to (a, a + b) and all ring operations act per
coordinate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .gf import FieldContext, FieldElement, FieldError


@dataclass(frozen=True)
class RElement:
    field: FieldContext
    c1: int
    c2: int

    @classmethod
    def from_ab(cls, field: FieldContext, a: int, b: int) -> "RElement":
        return cls(field, a, field.add_(a, b))

    @classmethod
    def one(cls, field: FieldContext) -> "RElement":
        return cls(field, 1, 1)

    @classmethod
    def zero(cls, field: FieldContext) -> "RElement":
        return cls(field, 0, 0)

    @classmethod
    def u(cls, field: FieldContext) -> "RElement":
        return cls(field, 0, 1)

    @classmethod
    def xi1(cls, field: FieldContext) -> "RElement":
        return cls(field, 1, 0)

    @property
    def ab(self) -> tuple[int, int]:
        """(a, b) with self = a + u b."""
        return self.c1, self.field.sub_(self.c2, self.c1)

    def _other(self, other: "RElement") -> "RElement":
        if not isinstance(other, RElement):
            raise TypeError(f"expected RElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldError("operands over different fields")
        return other

    def __add__(self, other: "RElement") -> "RElement":
        o = self._other(other)
        F = self.field
        return RElement(F, F.add_(self.c1, o.c1), F.add_(self.c2, o.c2))

    def __sub__(self, other: "RElement") -> "RElement":
        o = self._other(other)
        F = self.field
        return RElement(F, F.sub_(self.c1, o.c1), F.sub_(self.c2, o.c2))

    def __neg__(self) -> "RElement":
        F = self.field
        return RElement(F, F.neg_(self.c1), F.neg_(self.c2))

    def __mul__(self, other: "RElement") -> "RElement":
        o = self._other(other)
        F = self.field
        return RElement(F, F.mul_(self.c1, o.c1), F.mul_(self.c2, o.c2))

    def is_unit(self) -> bool:
        return self.c1 != 0 and self.c2 != 0

    def theta(self, i: int) -> "RElement":
        """theta(a + u b) = a^(p^i) + u b^(p^i); coordinatewise in CRT form."""
        F = self.field
        return RElement(F, F.frob_(self.c1, i), F.frob_(self.c2, i))

    def eta(self) -> int:
        """a for self = a + u b."""
        return self.c1

    def format(self, crt: bool = True) -> str:
        F = self.field
        if crt:
            return f"({F.format(self.c1)}|{F.format(self.c2)})"
        a, b = self.ab
        return f"{F.format(a)}+u*{F.format(b)}"

    def __str__(self) -> str:
        return self.format()


def r_convert(a, b, direction: str):
    """``to_crt``: (a, b) -> RElement; ``from_crt``: (c1, c2) -> (a, b) values."""
    if isinstance(a, FieldElement):
        field, av, bv = a.field, a.value, b.value
    else:
        raise TypeError("r_convert takes FieldElement operands")
    if direction == "to_crt":
        return RElement.from_ab(field, av, bv)
    if direction == "from_crt":
        return RElement(field, av, bv).ab
    raise ValueError(f"unknown direction {direction!r}")


def r_arith(r: RElement, s: RElement, op: str) -> RElement:
    if op == "add":
        return r + s
    if op == "mul":
        return r * s
    raise ValueError(f"unknown ring operation {op!r}")


def r_is_unit(r: RElement) -> bool:
    return r.is_unit()


def r_theta(r: RElement, i: int) -> RElement:
    return r.theta(i)


def eta(r: RElement) -> int:
    return r.eta()


def parse_relement(text: str, field: FieldContext) -> RElement:
    """Accept ``(c1|c2)`` or ``a+u*b`` (also ``u*b``, ``a``)."""
    t = text.replace(" ", "")
    mt = re.fullmatch(r"\(([^|]+)\|([^)]+)\)", t)
    if mt:
        return RElement(field, field.parse(mt.group(1)), field.parse(mt.group(2)))
    mt = re.fullmatch(r"(?:([^+]+?)\+)?u\*?(.+)", t)
    if mt:
        a = field.parse(mt.group(1)) if mt.group(1) else 0
        return RElement.from_ab(field, a, field.parse(mt.group(2)))
    if t == "u":
        return RElement.u(field)
    return RElement.from_ab(field, field.parse(t), 0)


def all_elements(field: FieldContext) -> list[RElement]:
    return [RElement(field, a, b) for a in range(field.q) for b in range(field.q)]
