"""Table-driven arithmetic in GF(p^m).

Elements are plain integers: the value ``sum(c_i * p**i)`` of the residue
``c_0 + c_1 w + ... + c_{m-1} w^{m-1}`` where ``w`` is the class of ``x``
modulo the defining polynomial.  Prime-subfield elements therefore have
values ``0 .. p-1`` and print as digits; everything else prints as a power
of ``w``.  ``FieldElement`` wraps a value for interactive use; the kernels
work on raw integers and numpy arrays indexed by the lookup tables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Sequence

import numpy as np


class FieldError(ValueError):
    """Invalid field parameters or an illegal field operation."""


# Conway polynomials, ascending coefficients (c_0, ..., c_m).
CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 7, 1),
    (13, 1): (11, 1),
    (13, 2): (2, 12, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _poly_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by monic b over F_p (ascending lists)."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1]
        shift = len(a) - 1 - db
        for k, bk in enumerate(b):
            a[shift + k] = (a[shift + k] - c * bk) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic_polys(p: int, d: int):
    """All monic degree-d polynomials over F_p, ascending coefficient lists."""
    for n in range(p**d):
        low = [(n // p**k) % p for k in range(d)]
        yield low + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _poly_mod_p(list(modulus), cand, p):
                return False
    return True


class FieldContext:
    """A concrete GF(p^m) with exp/log tables for the primitive element w.

    The arrays ``add``, ``mul``, ``neg``, ``inv`` are q x q (resp. length q)
    lookup tables used directly by the vectorised kernels.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(int(c) % p for c in modulus)
        q = self.q

        exp = [0] * (2 * (q - 1))
        log = [-1] * q
        digits = [1] + [0] * (m - 1)
        for k in range(q - 1):
            v = sum(d * p**i for i, d in enumerate(digits))
            if k > 0 and v == 1:
                raise FieldError(
                    f"x is not primitive modulo {self.modulus}: order {k} < {q - 1}"
                )
            exp[k] = v
            log[v] = k
            # multiply by x and reduce by the monic modulus
            carry = digits[-1]
            digits = [0] + digits[:-1]
            digits = [(d - carry * self.modulus[i]) % p for i, d in enumerate(digits)]
        if sum(d * p**i for i, d in enumerate(digits)) != 1:
            raise FieldError(f"x is not primitive modulo {self.modulus}")
        for k in range(q - 1, 2 * (q - 1)):
            exp[k] = exp[k - (q - 1)]
        self._exp = exp
        self._log = log

        add = np.zeros((q, q), dtype=np.int64)
        pw = [p**i for i in range(m)]
        vals = np.arange(q)
        dig = np.stack([(vals // pw[i]) % p for i in range(m)])
        for i in range(m):
            add += ((dig[i][:, None] + dig[i][None, :]) % p) * pw[i]
        neg = sum(((p - dig[i]) % p) * pw[i] for i in range(m))
        mul = np.zeros((q, q), dtype=np.int64)
        lg = np.array([max(x, 0) for x in log])
        ex = np.array(exp)
        mul[1:, 1:] = ex[lg[1:, None] + lg[None, 1:]]
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = ex[(q - 1 - lg[1:]) % (q - 1)]

        dtype = np.uint8 if q <= 256 else np.uint16
        self.add = add.astype(dtype)
        self.mul = mul.astype(dtype)
        self.neg = np.asarray(neg, dtype=dtype).reshape(q)
        self.inv = inv.astype(dtype)
        self.sub = self.add[:, self.neg]
        for arr in (self.add, self.mul, self.neg, self.inv, self.sub):
            arr.setflags(write=False)
        self.dtype = dtype
        # plain-python copies for scalar paths
        self._add = self.add.tolist()
        self._mul = self.mul.tolist()
        self._neg = self.neg.tolist()
        self._inv = self.inv.tolist()
        self._frob_cache: dict[int, np.ndarray] = {}

    # -- identity ---------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FieldContext):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldContext({self.descriptor()})"

    def descriptor(self) -> str:
        mod = ",".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.m});modulus={mod}"

    # -- scalar arithmetic on raw values ----------------------------------
    def add_(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub_(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg_(self, a: int) -> int:
        return self._neg[a]

    def mul_(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv_(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + self.descriptor())
        return self._inv[a]

    def div_(self, a: int, b: int) -> int:
        return self._mul[a][self.inv_(b)]

    def pow_(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def exp(self, k: int) -> int:
        """Value of w^k."""
        return self._exp[k % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete log of a nonzero value with respect to w."""
        if a == 0:
            raise FieldError("log of zero")
        return self._log[a]

    @property
    def w(self) -> int:
        return self._exp[1]

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    # -- automorphisms ----------------------------------------------------
    def automorphism_order(self, i: int) -> int:
        """Order of a -> a^(p^i), i.e. m / gcd(m, i)."""
        return self.m // gcd(self.m, i)

    def frob_table(self, i: int) -> np.ndarray:
        """Lookup array for a -> a^(p^i); cached, i taken modulo m."""
        i %= self.m
        t = self._frob_cache.get(i)
        if t is None:
            e = self.p**i
            t = np.array([self.pow_(a, e) for a in range(self.q)], dtype=self.dtype)
            t.setflags(write=False)
            self._frob_cache[i] = t
        return t

    def frob_(self, a: int, i: int) -> int:
        return int(self.frob_table(i)[a])

    # -- text -------------------------------------------------------------
    def format(self, a: int) -> str:
        if a < self.p:
            return str(a)
        k = self._log[a]
        return "w" if k == 1 else f"w^{k}"

    def parse(self, token: str) -> int:
        tok = token.strip().replace("{", "").replace("}", "")
        if re.fullmatch(r"-?\d+", tok):
            n = int(tok)
            if not 0 <= n < self.p:
                raise FieldError(f"integer token {token!r} outside prime subfield 0..{self.p - 1}")
            return n
        mt = re.fullmatch(r"w(?:\^(-?\d+))?", tok)
        if mt is None:
            raise FieldError(f"cannot parse field element {token!r}")
        return self.exp(int(mt.group(1)) if mt.group(1) else 1)

    def element(self, value: int | str) -> "FieldElement":
        if isinstance(value, str):
            value = self.parse(value)
        if not 0 <= value < self.q:
            raise FieldError(f"value {value} outside 0..{self.q - 1}")
        return FieldElement(self, int(value))

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.q)]

    @cached_property
    def minus_one(self) -> int:
        return self._neg[1]


@dataclass(frozen=True)
class FieldElement:
    field: FieldContext
    value: int

    def _check(self, other: object) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add_(self.value, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub_(self.value, self._check(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub_(self._check(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul_(self.value, self._check(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div_(self.value, self._check(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div_(self._check(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"<{self.field.format(self.value)} in GF({self.field.p}^{self.field.m})>"


def field_arith(a: FieldElement, b: FieldElement | int | None, op: str) -> FieldElement:
    """Dispatch one of add, sub, mul, div, neg, inv, pow (b is the exponent)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if isinstance(b, FieldElement) and b.field != a.field:
            raise FieldError("operands belong to different fields")
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    raise FieldError(f"unknown field operation {op!r}")


def frobenius(a: FieldElement, i: int) -> FieldElement:
    """a^(p^i)."""
    return FieldElement(a.field, a.field.frob_(a.value, i))


def automorphism_order(ctx: FieldContext, i: int) -> int:
    return ctx.automorphism_order(i)


_FIELD_CACHE: dict[tuple[int, int, tuple[int, ...]], FieldContext] = {}


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldContext:
    """Build (or fetch from cache) GF(p^m).

    Without ``modulus`` the built-in Conway polynomial is used.  The modulus
    must be monic, irreducible, and have x primitive.
    """
    if not _is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if modulus is None:
        if (p, m) not in CONWAY:
            raise FieldError(f"no built-in Conway polynomial for ({p}, {m}); pass a modulus")
        modulus = CONWAY[(p, m)]
    mod = tuple(int(c) % p for c in modulus)
    if len(mod) != m + 1 or mod[-1] != 1:
        raise FieldError(f"modulus {tuple(modulus)} is not monic of degree {m}")
    key = (p, m, mod)
    ctx = _FIELD_CACHE.get(key)
    if ctx is None:
        if not is_irreducible(mod, p):
            raise FieldError(f"modulus {mod} is reducible over F_{p}")
        ctx = FieldContext(p, m, mod)
        _FIELD_CACHE[key] = ctx
    return ctx


def field_from_q(q: int) -> FieldContext:
    """GF(q) with the default modulus, q a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                raise FieldError(f"{q} is not a prime power")
            return make_field(p, m)
    raise FieldError(f"{q} is not a prime power")


def parse_field_descriptor(text: str) -> FieldContext:
    """Parse ``GF(<p>^<m>)`` or ``GF(<q>)`` with optional ``;modulus=c0,...,cm``."""
    mt = re.fullmatch(
        r"\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*(?:;\s*modulus\s*=\s*([\d,\s]+))?\s*", text
    )
    if mt is None:
        raise FieldError(f"bad field descriptor {text!r}")
    base, exp_, mod = mt.groups()
    modulus = [int(c) for c in mod.split(",")] if mod else None
    if exp_ is None:
        if modulus is not None:
            return make_field(int(base), len(modulus) - 1, modulus)
        return field_from_q(int(base))
    return make_field(int(base), int(exp_), modulus)


def primitive_order(ctx: FieldContext, a: int) -> int:
    """Multiplicative order of a nonzero value."""
    n = ctx.q - 1
    return n // gcd(n, ctx.log(a))


__all__ = [
    "CONWAY",
    "FieldContext",
    "FieldElement",
    "FieldError",
    "automorphism_order",
    "field_arith",
    "field_from_q",
    "frobenius",
    "is_irreducible",
    "make_field",
    "parse_field_descriptor",
    "primitive_order",
]
