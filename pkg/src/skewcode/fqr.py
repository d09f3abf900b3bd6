"""F_qR-skew cyclic codes: mixed words, the sigma shift, module spans,
the mixed inner product, and the Gray map.

Codes are handled as F_q-subspaces of F_q^(alpha+2beta) in *split*
coordinates ``(x_0..x_{alpha-1} | c1_0..c1_{beta-1} | c2_0..c2_{beta-1})``
where ``y_j = xi1*c1_j + xi2*c2_j``.  The Gray image uses a different,
interleaved order: the alpha x-coordinates, then for each j the two
coordinates of ``(c1_j, c2_j) M``.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field as dc_field
from math import gcd
from typing import Sequence

import numpy as np

from .gf import FieldContext, field_from_q, parse_field_descriptor
from .lincode import CodeError, GeneratorMatrix, dual_matrix, rref
from .rring import RElement
from .skewpoly import SkewPoly, format_ascending, parse_compact, parse_poly, right_divmod


class DualityWarning(UserWarning):
    """Duality results are only established when |theta| divides beta."""


# -- words -----------------------------------------------------------------

@dataclass(frozen=True)
class MixedWord:
    field: FieldContext
    x: tuple[int, ...]
    y: tuple[RElement, ...]

    @property
    def alpha(self) -> int:
        return len(self.x)

    @property
    def beta(self) -> int:
        return len(self.y)

    def to_split(self) -> np.ndarray:
        return np.array(
            list(self.x) + [r.c1 for r in self.y] + [r.c2 for r in self.y], dtype=self.field.dtype
        )

    @classmethod
    def from_split(cls, field: FieldContext, v: Sequence[int], alpha: int, beta: int) -> "MixedWord":
        v = [int(a) for a in v]
        if len(v) != alpha + 2 * beta:
            raise CodeError(f"split vector has length {len(v)}, expected {alpha + 2 * beta}")
        c1 = v[alpha : alpha + beta]
        c2 = v[alpha + beta :]
        return cls(field, tuple(v[:alpha]), tuple(RElement(field, a, b) for a, b in zip(c1, c2)))

    @classmethod
    def zero(cls, field: FieldContext, alpha: int, beta: int) -> "MixedWord":
        return cls.from_split(field, [0] * (alpha + 2 * beta), alpha, beta)

    def __add__(self, other: "MixedWord") -> "MixedWord":
        F = self.field
        return MixedWord(
            F,
            tuple(F.add_(a, b) for a, b in zip(self.x, other.x)),
            tuple(a + b for a, b in zip(self.y, other.y)),
        )

    def __sub__(self, other: "MixedWord") -> "MixedWord":
        F = self.field
        return MixedWord(
            F,
            tuple(F.sub_(a, b) for a, b in zip(self.x, other.x)),
            tuple(a - b for a, b in zip(self.y, other.y)),
        )

    def __str__(self) -> str:
        F = self.field
        xs = " ".join(F.format(a) for a in self.x)
        ys = " ".join(str(r) for r in self.y)
        return f"({xs} | {ys})"


def scalar_action(s: RElement, word: MixedWord) -> MixedWord:
    """s * (x, y) = (eta(s) x, s y)."""
    F = word.field
    e = s.eta()
    return MixedWord(F, tuple(F.mul_(e, a) for a in word.x), tuple(s * r for r in word.y))


def sigma_shift(word: MixedWord, theta_exp: int, x_theta_exp: int | None = None) -> MixedWord:
    """Rotate both blocks right by one and apply the automorphism to every entry.

    ``x_theta_exp`` overrides the automorphism on the F_q block (defaults to
    ``theta_exp``).
    """
    F = word.field
    xe = theta_exp if x_theta_exp is None else x_theta_exp
    x = word.x[-1:] + word.x[:-1]
    y = word.y[-1:] + word.y[:-1]
    return MixedWord(F, tuple(F.frob_(a, xe) for a in x), tuple(r.theta(theta_exp) for r in y))


def mixed_inner_product(l1: MixedWord, l2: MixedWord) -> RElement:
    """u * sum x_i x'_i + sum y_j y'_j."""
    if l1.alpha != l2.alpha or l1.beta != l2.beta:
        raise CodeError("words have different shapes")
    F = l1.field
    sx = 0
    for a, b in zip(l1.x, l2.x):
        sx = F.add_(sx, F.mul_(a, b))
    acc = RElement(F, 0, sx)
    for a, b in zip(l1.y, l2.y):
        acc = acc + a * b
    return acc


# -- split-coordinate helpers (vectorised) ------------------------------------

def _sigma_split(F: FieldContext, V: np.ndarray, alpha: int, beta: int, te: int, xe: int) -> np.ndarray:
    out = np.empty_like(V)
    blocks = [(0, alpha, xe), (alpha, alpha + beta, te), (alpha + beta, alpha + 2 * beta, te)]
    for lo, hi, e in blocks:
        if hi > lo:
            out[:, lo:hi] = F.frob_table(e)[np.roll(V[:, lo:hi], 1, axis=1)]
    return out


def _xi_split(V: np.ndarray, alpha: int, beta: int) -> tuple[np.ndarray, np.ndarray]:
    """(xi1 * V, xi2 * V) row-wise."""
    a = V.copy()
    a[:, alpha + beta :] = 0
    b = V.copy()
    b[:, : alpha + beta] = 0
    return a, b


# -- Gray matrices -------------------------------------------------------------

@dataclass(frozen=True)
class GrayMatrix:
    """2x2 matrix M over F_q with M M^T = gamma I."""

    field: FieldContext
    entries: tuple[int, int, int, int]  # m00, m01, m10, m11
    name: str = "custom"

    def __post_init__(self):
        F = self.field
        m00, m01, m10, m11 = self.entries
        det = F.sub_(F.mul_(m00, m11), F.mul_(m01, m10))
        if det == 0:
            raise CodeError("Gray matrix is singular")
        g00 = F.add_(F.mul_(m00, m00), F.mul_(m01, m01))
        g11 = F.add_(F.mul_(m10, m10), F.mul_(m11, m11))
        g01 = F.add_(F.mul_(m00, m10), F.mul_(m01, m11))
        if g01 != 0 or g00 != g11 or g00 == 0:
            raise CodeError("Gray matrix does not satisfy M M^T = gamma I with gamma != 0")

    @property
    def gamma(self) -> int:
        F = self.field
        m00, m01, _, _ = self.entries
        return F.add_(F.mul_(m00, m00), F.mul_(m01, m01))

    @classmethod
    def identity(cls, field: FieldContext) -> "GrayMatrix":
        return cls(field, (1, 0, 0, 1), "identity")

    @classmethod
    def hadamard(cls, field: FieldContext) -> "GrayMatrix":
        return cls(field, (1, 1, 1, field.minus_one), "hadamard")

    @classmethod
    def parse(cls, text: str, field: FieldContext) -> "GrayMatrix":
        t = text.strip().lower()
        if t == "identity":
            return cls.identity(field)
        if t == "hadamard":
            return cls.hadamard(field)
        toks = [s for s in text.replace(";", ",").split(",") if s.strip()]
        if len(toks) != 4:
            raise CodeError(f"Gray matrix needs 'identity', 'hadamard' or 4 tokens, got {text!r}")
        return cls(field, tuple(field.parse(s) for s in toks), "custom")

    def describe(self) -> str:
        if self.name != "custom":
            return self.name
        return ",".join(self.field.format(v) for v in self.entries)


def _gray_split(
    F: FieldContext, V: np.ndarray, alpha: int, beta: int, M: GrayMatrix, pair: str = "crt"
) -> np.ndarray:
    V = np.asarray(V, dtype=F.dtype).reshape(-1, alpha + 2 * beta)
    c1 = V[:, alpha : alpha + beta]
    c2 = V[:, alpha + beta :]
    if pair == "ab":
        c1, c2 = c1, F.sub[c2, c1]
    elif pair != "crt":
        raise CodeError(f"unknown pair convention {pair!r}")
    m00, m01, m10, m11 = M.entries
    out = np.empty_like(V)
    out[:, :alpha] = V[:, :alpha]
    out[:, alpha::2] = F.add[F.mul[m00, c1], F.mul[m10, c2]]
    out[:, alpha + 1 :: 2] = F.add[F.mul[m01, c1], F.mul[m11, c2]]
    return out


def gray_map(word: MixedWord, M: GrayMatrix, pair: str = "crt") -> np.ndarray:
    """phi(x, y): x copied, each (c1_j, c2_j) replaced by (c1_j, c2_j) M."""
    return _gray_split(word.field, word.to_split()[None, :], word.alpha, word.beta, M, pair)[0]


def lee_weight(word: MixedWord, M: GrayMatrix, pair: str = "crt") -> int:
    return int(np.count_nonzero(gray_map(word, M, pair)))


def lee_distance(a: MixedWord, b: MixedWord, M: GrayMatrix, pair: str = "crt") -> int:
    return lee_weight(a - b, M, pair)


# -- code specifications ---------------------------------------------------------

@dataclass(frozen=True)
class CodeSpec:
    """An F_qR-skew cyclic code of length (alpha, beta).

    Separable codes carry ``f`` (x-block generator) and ``g1``, ``g2`` (the
    xi1 and xi2 components of g = xi1 g1 + xi2 g2).  General codes carry
    ``pairs``: generator words ``(k(x), (t1(x), t2(x)))`` with t in CRT form.

    When gcd(alpha, |Theta|) = 1 the x-block is the ordinary cyclic code
    generated by f (``x_theta_exp`` = 0); otherwise it is skew with Theta.
    """

    field: FieldContext
    theta_exp: int
    alpha: int
    beta: int
    f: SkewPoly | None = None
    g1: SkewPoly | None = None
    g2: SkewPoly | None = None
    pairs: tuple = dc_field(default=())

    @classmethod
    def separable(cls, field, theta_exp, alpha, beta, f, g1, g2) -> "CodeSpec":
        te = theta_exp % field.m
        xe = cls.x_exponent(field, te, alpha)
        return cls(field, te, alpha, beta, f.with_theta(xe), g1.with_theta(te), g2.with_theta(te))

    @classmethod
    def general(cls, field, theta_exp, alpha, beta, pairs) -> "CodeSpec":
        te = theta_exp % field.m
        xe = cls.x_exponent(field, te, alpha)
        fixed = tuple(
            (k.with_theta(xe), (t1.with_theta(te), t2.with_theta(te))) for k, (t1, t2) in pairs
        )
        return cls(field, te, alpha, beta, pairs=fixed)

    @staticmethod
    def x_exponent(field: FieldContext, theta_exp: int, alpha: int) -> int:
        order = field.automorphism_order(theta_exp)
        return 0 if gcd(alpha, order) == 1 else theta_exp % field.m

    @property
    def x_theta_exp(self) -> int:
        return self.x_exponent(self.field, self.theta_exp, self.alpha)

    @property
    def theta_order(self) -> int:
        return self.field.automorphism_order(self.theta_exp)

    @property
    def is_separable(self) -> bool:
        return self.f is not None

    @property
    def length(self) -> int:
        return self.alpha + 2 * self.beta

    def expected_dimension(self) -> int:
        if not self.is_separable:
            raise CodeError("dimension formula applies to separable codes")
        return (
            (self.alpha - self.f.degree) + (self.beta - self.g1.degree) + (self.beta - self.g2.degree)
        )

    def to_dict(self) -> dict:
        d = {
            "q": self.field.q,
            "field": self.field.descriptor(),
            "theta_exp": self.theta_exp,
            "alpha": self.alpha,
            "beta": self.beta,
        }
        if self.is_separable:
            d.update(f=format_ascending(self.f), g1=format_ascending(self.g1), g2=format_ascending(self.g2))
        else:
            d["pairs"] = [
                [format_ascending(k), format_ascending(t1), format_ascending(t2)]
                for k, (t1, t2) in self.pairs
            ]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict, compact: bool = False) -> "CodeSpec":
        F = parse_field_descriptor(d["field"]) if "field" in d else field_from_q(int(d["q"]))
        if "field" in d and "q" in d and F.q != int(d["q"]):
            raise CodeError(f"q={d['q']} disagrees with field {d['field']}")
        te = int(d.get("theta_exp", 1))
        parse = parse_compact if compact else parse_poly
        if "pairs" in d:
            pairs = [
                (parse(k, F), (parse(t1, F), parse(t2, F))) for k, t1, t2 in d["pairs"]
            ]
            return cls.general(F, te, int(d["alpha"]), int(d["beta"]), pairs)
        return cls.separable(
            F, te, int(d["alpha"]), int(d["beta"]), parse(d["f"], F), parse(d["g1"], F), parse(d["g2"], F)
        )

    @classmethod
    def from_json(cls, text: str, compact: bool = False) -> "CodeSpec":
        return cls.from_dict(json.loads(text), compact)


def _block_rows(g: SkewPoly, n: int) -> np.ndarray:
    """Rows x^j g, j < n - deg g (raw, unreduced); g must right-divide x^n - 1."""
    if g.is_zero():
        raise CodeError("zero generator")
    _, rem = right_divmod(SkewPoly.xn_minus_one(g.field, n, g.theta_exp), g)
    if not rem.is_zero():
        raise CodeError(f"{g} is not a right divisor of x^{n} - 1 (theta exponent {g.theta_exp})")
    F = g.field
    order = g.automorphism_order()
    coeffs = np.asarray(g.coeffs, dtype=np.intp)
    twisted = [F.frob_table(g.theta_exp * r)[coeffs] for r in range(order)]
    rows = np.zeros((n - g.degree, n), dtype=F.dtype)
    for j in range(n - g.degree):
        rows[j, j : j + len(coeffs)] = twisted[j % order]
    return rows


def _poly_vector(p: SkewPoly, n: int) -> np.ndarray:
    """Coefficient vector of p reduced modulo x^n - 1 (left module quotient)."""
    if p.degree >= n:
        _, p = right_divmod(p, SkewPoly.xn_minus_one(p.field, n, p.theta_exp))
    return p.to_array(n)


def _closure(F: FieldContext, V: np.ndarray, alpha: int, beta: int, te: int, xe: int, cap: int):
    R, _ = rref(F, V)
    for _ in range(cap):
        shifted = _sigma_split(F, R, alpha, beta, te, xe)
        a, b = _xi_split(R, alpha, beta)
        R2, _ = rref(F, np.vstack([R, shifted, a, b]))
        if R2.shape[0] == R.shape[0]:
            return R2
        R = R2
    raise CodeError(f"span closure did not stabilise within {cap} rounds")


def module_span(spec: CodeSpec) -> GeneratorMatrix:
    """F_q basis of the code in split coordinates."""
    F, a, b = spec.field, spec.alpha, spec.beta
    n = a + 2 * b
    if spec.is_separable:
        blocks = [
            (0, a, _block_rows(spec.f, a)),
            (a, a + b, _block_rows(spec.g1, b)),
            (a + b, n, _block_rows(spec.g2, b)),
        ]
        rows = np.zeros((sum(blk.shape[0] for _, _, blk in blocks), n), dtype=F.dtype)
        r0 = 0
        for lo, hi, blk in blocks:
            rows[r0 : r0 + blk.shape[0], lo:hi] = blk
            r0 += blk.shape[0]
        return GeneratorMatrix.from_rows(F, rows, n)
    gens = []
    for k, (t1, t2) in spec.pairs:
        gens.append(
            np.concatenate([_poly_vector(k, a) if a else [], _poly_vector(t1, b), _poly_vector(t2, b)])
        )
    V = np.array(gens, dtype=F.dtype).reshape(-1, n)
    cap = n * spec.theta_order * 4
    R = _closure(F, V, a, b, spec.theta_exp, spec.x_theta_exp, cap)
    return GeneratorMatrix.from_rows(F, R, n)


def _check_duality_gate(spec: CodeSpec) -> None:
    if spec.beta % spec.theta_order:
        warnings.warn(
            f"|theta| = {spec.theta_order} does not divide beta = {spec.beta}; "
            "the dual need not be skew cyclic",
            DualityWarning,
            stacklevel=3,
        )


def mixed_dual_of(C: GeneratorMatrix, alpha: int, beta: int) -> GeneratorMatrix:
    """Dual of an F_qR-linear code (given in split coordinates) under l . l'.

    Each R-valued constraint splits into its xi1 component
    ``sum c1 c1'`` and xi2 component ``sum x x' + sum c2 c2'``.
    """
    F, n = C.field, C.n
    rows = C.rows
    e1 = np.zeros_like(rows)
    e1[:, alpha : alpha + beta] = rows[:, alpha : alpha + beta]
    e2 = rows.copy()
    e2[:, alpha : alpha + beta] = 0
    stacked = GeneratorMatrix.from_rows(F, np.vstack([e1, e2]), n)
    return dual_matrix(stacked)


def mixed_dual(spec: CodeSpec) -> GeneratorMatrix:
    _check_duality_gate(spec)
    return mixed_dual_of(module_span(spec), spec.alpha, spec.beta)


def gray_image_of(C: GeneratorMatrix, alpha: int, beta: int, M: GrayMatrix, pair: str = "crt") -> GeneratorMatrix:
    return GeneratorMatrix.from_rows(C.field, _gray_split(C.field, C.rows, alpha, beta, M, pair), C.n)


def gray_image_matrix(spec: CodeSpec, M: GrayMatrix, pair: str = "crt") -> GeneratorMatrix:
    """Generator matrix of phi(C) in interleaved output order."""
    return gray_image_of(module_span(spec), spec.alpha, spec.beta, M, pair)


def split_to_words(C: GeneratorMatrix, alpha: int, beta: int) -> list[MixedWord]:
    return [MixedWord.from_split(C.field, row, alpha, beta) for row in C.rows]


def in_code(C: GeneratorMatrix, word: MixedWord) -> bool:
    from .lincode import reduce_against

    return not reduce_against(C, word.to_split()).any()


__all__ = [
    "CodeSpec",
    "DualityWarning",
    "GrayMatrix",
    "MixedWord",
    "gray_image_matrix",
    "gray_image_of",
    "gray_map",
    "in_code",
    "lee_distance",
    "lee_weight",
    "mixed_dual",
    "mixed_dual_of",
    "mixed_inner_product",
    "module_span",
    "scalar_action",
    "sigma_shift",
    "split_to_words",
]
