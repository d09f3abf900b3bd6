"""The skew polynomial ring F_q[x; Theta], Theta(a) = a^(p^i).

Multiplication follows ``(a x^i)(b x^j) = a Theta^i(b) x^(i+j)``.  Only right
division is provided: every divisibility question in this package is of the
form "g divides f from the right".
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .gf import FieldContext, FieldError


class SkewPolyError(ValueError):
    pass


class AmbiguousNotationWarning(UserWarning):
    """A compact coefficient string admitted more than one tokenisation."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(int(v) for v in c)


@dataclass(frozen=True)
class SkewPoly:
    """Element of F_q[x; Theta]; ``coeffs`` ascending, no trailing zeros."""

    field: FieldContext
    coeffs: tuple[int, ...]
    theta_exp: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))
        object.__setattr__(self, "theta_exp", self.theta_exp % self.field.m)

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_coeffs(cls, field: FieldContext, coeffs: Sequence[int], theta_exp: int = 1):
        return cls(field, tuple(coeffs), theta_exp)

    @classmethod
    def monomial(cls, field: FieldContext, deg: int, coeff: int = 1, theta_exp: int = 1):
        return cls(field, (0,) * deg + (coeff,), theta_exp)

    @classmethod
    def xn_minus_one(cls, field: FieldContext, n: int, theta_exp: int = 1):
        return cls(field, (field.minus_one,) + (0,) * (n - 1) + (1,), theta_exp)

    def _like(self, coeffs) -> "SkewPoly":
        return SkewPoly(self.field, tuple(coeffs), self.theta_exp)

    # -- basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise SkewPolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "SkewPoly":
        """Left-multiply by lc^-1; generates the same left module."""
        inv = self.field.inv_(self.lc)
        return self._like(self.field.mul_(inv, c) for c in self.coeffs)

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def with_theta(self, theta_exp: int) -> "SkewPoly":
        return SkewPoly(self.field, self.coeffs, theta_exp)

    def automorphism_order(self) -> int:
        return self.field.automorphism_order(self.theta_exp)

    def _check(self, other: "SkewPoly"):
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.field != self.field or other.theta_exp != self.theta_exp:
            raise SkewPolyError("polynomials live in different skew rings")

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        F = self.field
        return self._like([F.add_(x, b[k]) if k < len(b) else x for k, x in enumerate(a)])

    def __neg__(self) -> "SkewPoly":
        return self._like(self.field.neg_(c) for c in self.coeffs)

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_mul(self, other)

    def scale_left(self, c: int) -> "SkewPoly":
        """c * self (coefficientwise)."""
        return self._like(self.field.mul_(c, v) for v in self.coeffs)

    def __divmod__(self, other: "SkewPoly"):
        return right_divmod(self, other)

    def __str__(self) -> str:
        return format_display(self)

    def __repr__(self) -> str:
        return f"SkewPoly({format_display(self)!r}, theta_exp={self.theta_exp})"

    def to_array(self, length: int | None = None) -> np.ndarray:
        n = len(self.coeffs) if length is None else length
        out = np.zeros(n, dtype=self.field.dtype)
        out[: len(self.coeffs)] = self.coeffs
        return out


def _frob_list(poly: SkewPoly, order: int) -> list[np.ndarray]:
    g = np.asarray(poly.coeffs, dtype=np.intp)
    F = poly.field
    return [F.frob_table(poly.theta_exp * r)[g] for r in range(order)]


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Twisted product: coefficient k is sum over i+j=k of f_i Theta^i(g_j)."""
    f._check(g)
    if f.is_zero() or g.is_zero():
        return f._like(())
    F = f.field
    order = f.automorphism_order()
    if len(f.coeffs) * len(g.coeffs) <= 64:
        out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
        tables = [F.frob_table(f.theta_exp * r).tolist() for r in range(order)]
        for i, fi in enumerate(f.coeffs):
            if fi == 0:
                continue
            th = tables[i % order]
            row = F._mul[fi]
            for j, gj in enumerate(g.coeffs):
                out[i + j] = F._add[out[i + j]][row[th[gj]]]
        return f._like(out)
    twisted = _frob_list(g, order)
    lg = len(g.coeffs)
    out = np.zeros(len(f.coeffs) + lg - 1, dtype=F.dtype)
    for i, fi in enumerate(f.coeffs):
        if fi:
            out[i : i + lg] = F.add[out[i : i + lg], F.mul[fi, twisted[i % order]]]
    return f._like(out.tolist())


def right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Return (quo, rem) with f = quo * g + rem and deg rem < deg g."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("right division by the zero polynomial")
    F = f.field
    dg = g.degree
    order = f.automorphism_order()
    twisted = [t.tolist() for t in _frob_list(g, order)]
    lc_inv = [F.inv_(t[-1]) for t in twisted]
    r = list(f.coeffs)
    quo = [0] * max(len(r) - dg, 0)
    for top in range(len(r) - 1, dg - 1, -1):
        c_top = r[top]
        if c_top == 0:
            continue
        d = top - dg
        tw = twisted[d % order]
        c = F._mul[c_top][lc_inv[d % order]]
        quo[d] = c
        row = F._mul[c]
        for k in range(dg + 1):
            r[d + k] = F._add[r[d + k]][F._neg[row[tw[k]]]]
    return f._like(quo), f._like(r[:dg] if dg > 0 else ())


def is_right_divisor(g: SkewPoly, n: int) -> tuple[bool, SkewPoly | None]:
    """Does monic g divide x^n - 1 from the right?  Returns (flag, quotient)."""
    if not g.is_monic():
        raise SkewPolyError("is_right_divisor expects a monic polynomial; call .monic() first")
    if not 0 < g.degree <= n:
        if g.degree == 0:
            return True, SkewPoly.xn_minus_one(g.field, n, g.theta_exp)
        raise SkewPolyError(f"degree {g.degree} outside 1..{n}")
    quo, rem = right_divmod(SkewPoly.xn_minus_one(g.field, n, g.theta_exp), g)
    return (True, quo) if rem.is_zero() else (False, None)


def right_cofactor(g: SkewPoly, n: int) -> SkewPoly:
    """h with x^n - 1 = h * g exactly (g need not be monic)."""
    quo, rem = right_divmod(SkewPoly.xn_minus_one(g.field, n, g.theta_exp), g)
    if not rem.is_zero():
        raise SkewPolyError(f"{format_display(g)} is not a right divisor of x^{n}-1")
    return quo


def dagger(h: SkewPoly) -> SkewPoly:
    """h^dagger: coefficient j is Theta^j(h_{deg-j})."""
    if h.is_zero():
        raise SkewPolyError("dagger of the zero polynomial")
    F = h.field
    d = h.degree
    return h._like(F.frob_(h.coeffs[d - j], h.theta_exp * j) for j in range(d + 1))


def reciprocal(f: SkewPoly) -> SkewPoly:
    """Coefficient reversal, no automorphism applied."""
    if f.is_zero():
        raise SkewPolyError("reciprocal of the zero polynomial")
    return f._like(reversed(f.coeffs))


# -- text formats ----------------------------------------------------------

def format_ascending(f: SkewPoly) -> str:
    if f.is_zero():
        return "0"
    return ",".join(f.field.format(c) for c in f.coeffs)


def format_compact(f: SkewPoly) -> str:
    """Compact descending string, braces around multi-digit exponents."""
    if f.is_zero():
        return "0"
    out = []
    for c in reversed(f.coeffs):
        s = f.field.format(c)
        mt = re.fullmatch(r"w\^(\d+)", s)
        if mt and len(mt.group(1)) > 1:
            s = "w^{" + mt.group(1) + "}"
        out.append(s)
    return "".join(out)


def format_display(f: SkewPoly) -> str:
    """Descending human form, e.g. ``x^3 + w^3x^2 + x + 1``."""
    if f.is_zero():
        return "0"
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        cs = f.field.format(c)
        if k == 0:
            terms.append(cs)
            continue
        xs = "x" if k == 1 else f"x^{k}"
        terms.append(xs if c == 1 else cs + xs)
    return " + ".join(terms)


_DISPLAY_TERM = re.compile(
    r"^(?P<coef>\d+|w(?:\^\{?-?\d+\}?)?)?(?P<x>x(?:\^\{?(?P<deg>\d+)\}?)?)?$"
)


def _parse_display(text: str, field: FieldContext, theta_exp: int) -> SkewPoly:
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise SkewPolyError("empty polynomial")
    s = s.replace("-", "+-")
    if s.startswith("+"):
        s = s[1:]
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        if not term:
            raise SkewPolyError(f"empty term in {text!r}")
        sign = False
        if term.startswith("-"):
            sign, term = True, term[1:]
        mt = _DISPLAY_TERM.match(term)
        if mt is None or not term:
            raise SkewPolyError(f"cannot parse term {term!r}")
        coef = field.parse(mt.group("coef")) if mt.group("coef") else 1
        if mt.group("coef") is None and mt.group("x") is None:
            raise SkewPolyError(f"cannot parse term {term!r}")
        deg = 0 if mt.group("x") is None else int(mt.group("deg") or 1)
        if sign:
            coef = field.neg_(coef)
        coeffs[deg] = field.add_(coeffs.get(deg, 0), coef)
    top = max(coeffs)
    return SkewPoly(field, tuple(coeffs.get(k, 0) for k in range(top + 1)), theta_exp)


def parse_poly(text: str, field: FieldContext, theta_exp: int = 1) -> SkewPoly:
    """Parse an ascending comma list (``2,w^5,w^3,1``), a display string
    (``x^3 + w^3x^2 + w^5x + 2``) or a single element token."""
    t = text.strip()
    if "x" in t:
        return _parse_display(t, field, theta_exp)
    if "," in t:
        return SkewPoly(field, tuple(field.parse(tok) for tok in t.split(",")), theta_exp)
    try:
        return SkewPoly(field, (field.parse(t),), theta_exp)
    except FieldError as exc:
        raise SkewPolyError(str(exc)) from exc


_COMPACT_TOKEN = re.compile(r"w\^\{(-?\d+)\}|w\^(\d)|w|(\d)")


def parse_compact(text: str, field: FieldContext, theta_exp: int = 1) -> SkewPoly:
    """Parse the compact descending notation, e.g. ``1w^3w^52``.

    Tokens are ``<digit>``, ``w``, ``w^<digit>`` or ``w^{<digits>}``; an
    unbraced exponent is a single digit.  When an unbraced exponent is
    directly followed by a digit the string also reads as a multi-digit
    exponent, and an AmbiguousNotationWarning is emitted.
    """
    s = text.replace(" ", "")
    pos = 0
    tokens: list[int] = []
    ambiguous = False
    while pos < len(s):
        mt = _COMPACT_TOKEN.match(s, pos)
        if mt is None:
            raise SkewPolyError(f"cannot tokenise {text!r} at position {pos}")
        if mt.group(1) is not None:
            tokens.append(field.exp(int(mt.group(1))))
        elif mt.group(2) is not None:
            tokens.append(field.exp(int(mt.group(2))))
            if mt.end() < len(s) and s[mt.end()].isdigit():
                ambiguous = True
        elif mt.group(3) is not None:
            tokens.append(field.parse(mt.group(3)))
        else:
            tokens.append(field.w)
        pos = mt.end()
    if ambiguous:
        warnings.warn(
            f"{text!r}: unbraced exponent followed by a digit; read as single-digit exponent",
            AmbiguousNotationWarning,
            stacklevel=2,
        )
    return SkewPoly(field, tuple(reversed(tokens)), theta_exp)


__all__ = [
    "AmbiguousNotationWarning",
    "SkewPoly",
    "SkewPolyError",
    "dagger",
    "format_ascending",
    "format_display",
    "format_compact",
    "is_right_divisor",
    "parse_compact",
    "parse_poly",
    "reciprocal",
    "right_cofactor",
    "right_divmod",
    "skew_mul",
]
