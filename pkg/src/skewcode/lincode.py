"""Linear codes over GF(q) as explicit matrices.

Row reduction, duals and containment are vectorised through the field's
lookup tables.  Minimum distance has two exact strategies:

* ``enumerate`` walks one representative of every projective point of the
  code (q^k guard);
* ``column_dependence`` finds the smallest s such that s columns of a
  parity-check matrix are dependent.  For level s it enumerates the
  prefixes of s-2 columns, reduces the remaining columns modulo the prefix
  span and hashes the normalised residuals: two proportional residuals
  close an s-term dependence (for s = 2 this is a duplicate check on the
  normalised columns).  Work is partitioned by the leading column index.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Sequence

import numpy as np

from .gf import FieldContext
from .skewpoly import SkewPoly, SkewPolyError, right_divmod

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
ENUMERATION_LIMIT = 10**8


class CodeError(ValueError):
    pass


class BudgetExceeded(CodeError):
    """Raised instead of returning an unverified distance."""


def default_budget() -> int:
    env = os.environ.get("SKEWCODE_BUDGET")
    return int(float(env)) if env else DEFAULT_BUDGET


# -- dense linear algebra over GF(q) ------------------------------------------

def _digits(F: FieldContext, A: np.ndarray) -> list[np.ndarray]:
    A = A.astype(np.int64)
    return [(A // F.p**i) % F.p for i in range(F.m)]


def matmul(F: FieldContext, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix product over GF(q) via integer products of the F_p digit planes."""
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape[1] != B.shape[0]:
        raise CodeError(f"shape mismatch {A.shape} x {B.shape}")
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=F.dtype)
    da, db = _digits(F, A), _digits(F, B)
    acc = [np.zeros((A.shape[0], B.shape[1]), dtype=np.int64) for _ in range(F.m)]
    for i in range(F.m):
        for j in range(F.m):
            prod = (da[i] @ db[j]) % F.p
            e = F.exp(i + j)  # w^(i+j), whose base-p digits spread prod over the planes
            for t in range(F.m):
                dt = (e // F.p**t) % F.p
                if dt:
                    acc[t] += dt * prod
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(F.m):
        out += (acc[t] % F.p) * F.p**t
    return out.astype(F.dtype)


def rref(F: FieldContext, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    A = np.array(M, dtype=F.dtype, copy=True)
    if A.ndim != 2:
        raise CodeError("matrix must be 2-dimensional")
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        lead = A[r, c]
        if lead != 1:
            A[r, c:] = F.mul[F.inv[lead], A[r, c:]]
        col = A[:, c].copy()
        col[r] = 0
        idx = np.flatnonzero(col)
        if idx.size:
            A[np.ix_(idx, np.arange(c, ncols))] = F.sub[
                A[idx, c:], F.mul[col[idx][:, None], A[r, c:][None, :]]
            ]
        pivots.append(c)
        r += 1
    return A[:r], pivots


@dataclass(frozen=True)
class GeneratorMatrix:
    """Row-reduced generator matrix of an [n, k] code over ``field``."""

    field: FieldContext
    rows: np.ndarray
    pivots: tuple[int, ...]
    n: int

    @classmethod
    def from_rows(cls, field: FieldContext, rows, n: int | None = None) -> "GeneratorMatrix":
        arr = np.asarray(rows, dtype=field.dtype)
        if arr.ndim == 1:
            arr = arr.reshape(0 if arr.size == 0 else 1, -1)
        if n is None:
            if arr.shape[0] == 0 and arr.shape[1] == 0:
                raise CodeError("length required for an empty matrix")
            n = arr.shape[1]
        arr = arr.reshape(-1, n)
        R, piv = rref(field, arr)
        R.setflags(write=False)
        return cls(field, R, tuple(piv), n)

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    def __repr__(self) -> str:
        return f"GeneratorMatrix([{self.n}, {self.k}] over GF({self.field.q}))"

    def encode(self, msg: Sequence[int]) -> np.ndarray:
        return matmul(self.field, np.asarray(msg, dtype=self.field.dtype)[None, :], self.rows)[0]

    def to_json(self) -> str:
        F = self.field
        return json.dumps(
            {
                "field": F.descriptor(),
                "n": self.n,
                "rows": [[F.format(int(v)) for v in row] for row in self.rows],
            }
        )

    def to_text(self) -> str:
        F = self.field
        width = max((len(F.format(a)) for a in range(F.q)), default=1)
        return "\n".join(" ".join(F.format(int(v)).rjust(width) for v in row) for row in self.rows)


def matrix_from_json(text: str) -> GeneratorMatrix:
    from .gf import parse_field_descriptor

    data = json.loads(text)
    F = parse_field_descriptor(data["field"])
    rows = [[F.parse(tok) for tok in row] for row in data["rows"]]
    return GeneratorMatrix.from_rows(F, np.array(rows, dtype=F.dtype).reshape(-1, data["n"]), data["n"])


def skew_code_matrix(g: SkewPoly, n: int) -> GeneratorMatrix:
    """Rows x^j * g for j < n - deg g; g must right-divide x^n - 1."""
    if g.is_zero() or g.degree > n:
        raise CodeError("generator must be nonzero of degree <= n")
    _, rem = right_divmod(SkewPoly.xn_minus_one(g.field, n, g.theta_exp), g)
    if not rem.is_zero():
        raise CodeError(f"{g} is not a right divisor of x^{n} - 1")
    F = g.field
    k = n - g.degree
    order = g.automorphism_order()
    coeffs = np.asarray(g.coeffs, dtype=np.intp)
    twisted = [F.frob_table(g.theta_exp * r)[coeffs] for r in range(order)]
    rows = np.zeros((k, n), dtype=F.dtype)
    for j in range(k):
        rows[j, j : j + len(coeffs)] = twisted[j % order]
    return GeneratorMatrix.from_rows(F, rows, n)


def dual_matrix(G: GeneratorMatrix) -> GeneratorMatrix:
    """Basis of the Euclidean dual."""
    F, n = G.field, G.n
    pivots = set(G.pivots)
    free = [c for c in range(n) if c not in pivots]
    H = np.zeros((len(free), n), dtype=F.dtype)
    for t, c in enumerate(free):
        H[t, c] = 1
        if G.k:
            H[t, list(G.pivots)] = F.neg[G.rows[:, c]]
    return GeneratorMatrix.from_rows(F, H, n)


def reduce_against(G: GeneratorMatrix, V: np.ndarray) -> np.ndarray:
    """Residues of the rows of V after elimination by G's canonical form."""
    F = G.field
    V = np.asarray(V, dtype=F.dtype).reshape(-1, G.n)
    if G.k == 0:
        return V.copy()
    coeffs = V[:, list(G.pivots)]
    return F.sub[V, matmul(F, coeffs, G.rows)]


def contains(outer: GeneratorMatrix, inner: GeneratorMatrix) -> bool:
    """Is the row space of ``inner`` a subspace of ``outer``?"""
    if outer.n != inner.n or outer.field != inner.field:
        raise CodeError("codes differ in length or field")
    if inner.k == 0:
        return True
    return not reduce_against(outer, inner.rows).any()


def same_code(a: GeneratorMatrix, b: GeneratorMatrix) -> bool:
    if a.n != b.n or a.field != b.field:
        raise CodeError("codes differ in length or field")
    return a.k == b.k and a.pivots == b.pivots and np.array_equal(a.rows, b.rows)


def is_orthogonal(F: FieldContext, A: np.ndarray, B: np.ndarray) -> bool:
    """A * B^T == 0."""
    if A.shape[0] == 0 or B.shape[0] == 0:
        return True
    return not matmul(F, A, B.T).any()


# -- minimum distance -------------------------------------------------------

@dataclass
class DistanceResult:
    d: int
    strategy: str
    witness: np.ndarray
    work: int = 0
    notes: list[str] = dc_field(default_factory=list)


def _hamming(v: np.ndarray) -> int:
    return int(np.count_nonzero(v))


def _enumerate(G: GeneratorMatrix) -> DistanceResult:
    F, k = G.field, G.k
    best, best_word = G.n + 1, None
    chunk = 1 << 15
    work = 0
    for lead in range(k):
        free = k - 1 - lead
        total = F.q**free
        base = G.rows[lead]
        tail = G.rows[lead + 1 :]
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            acc = np.broadcast_to(base, (idx.size, G.n)).copy()
            for s in range(free):
                digit = (idx // F.q**s) % F.q
                acc = F.add[acc, F.mul[digit[:, None], tail[s][None, :]]]
            w = np.count_nonzero(acc, axis=1)
            work += idx.size
            j = int(np.argmin(w))
            if w[j] < best:
                best, best_word = int(w[j]), acc[j].copy()
    return DistanceResult(best, "enumerate", best_word, work)


def _normalise(F: FieldContext, V: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Scale each row so its first nonzero entry is 1; returns (rows, leads)."""
    nz = V != 0
    idx = nz.argmax(axis=1)
    lead = V[np.arange(V.shape[0]), idx]
    return F.mul[F.inv[lead][:, None], V], lead


def _key_weights(F: FieldContext, r: int) -> np.ndarray | None:
    """Radix-q weights packing a length-r column into one int64, or None if it overflows."""
    if F.q**r >= 2**62:
        return None
    return np.array([F.q**t for t in range(r)], dtype=np.int64)


def _row_keys(normed: np.ndarray, weights: np.ndarray | None) -> np.ndarray:
    if weights is not None:
        return normed.astype(np.int64) @ weights
    _, inverse = np.unique(normed, axis=0, return_inverse=True)
    return inverse.reshape(-1).astype(np.int64)


def _proportional_pair(F: FieldContext, res: np.ndarray, weights: np.ndarray):
    """Indices (a, b), a < b, of two proportional nonzero rows, or None."""
    normed, _ = _normalise(F, res)
    keys = _row_keys(normed, weights)
    zero = ~res.any(axis=1)
    if zero.any():
        keys[zero] = -1 - np.arange(int(zero.sum()))
    order = np.argsort(keys, kind="stable")
    sk = keys[order]
    dup = np.flatnonzero(sk[1:] == sk[:-1])
    if dup.size == 0:
        return None
    # smallest second member; the stable sort makes order[i] its smallest partner
    b, a = min((int(order[i + 1]), int(order[i])) for i in dup)
    return min(a, b), max(a, b)


def _eliminate(F: FieldContext, res: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Project the rows of res modulo span(v)."""
    p = int(np.flatnonzero(v)[0])
    b = F.mul[F.inv[v[p]], v]
    return F.sub[res, F.mul[res[:, p][:, None], b[None, :]]]


def _level_work(n: int, s: int) -> int:
    """Residual rows processed at level s: C(n, s-2) prefixes times <= n rows."""
    return comb(n, max(s - 2, 0)) * n


def _search_leading(F: FieldContext, cols: np.ndarray, s: int, leads: Sequence[int]):
    """Find s dependent columns whose smallest index is in ``leads``.

    A prefix of s-2 columns is fixed depth-first; every later column is
    reduced modulo the prefix span, and two proportional residuals close an
    s-term dependence.  Returns the column indices or None.
    """
    n, r = cols.shape
    weights = _key_weights(F, r)
    depth = s - 2

    def walk(prefix: list[int], res: np.ndarray, offset: int):
        if len(prefix) == depth:
            hit = _proportional_pair(F, res, weights)
            if hit is None:
                return None
            return prefix + [offset + hit[0], offset + hit[1]]
        for a in range(offset, n - (depth - len(prefix)) - 1):
            v = res[a - offset]
            if not v.any():
                continue
            found = walk(prefix + [a], _eliminate(F, res[a - offset + 1 :], v), a + 1)
            if found is not None:
                return found
        return None

    for i1 in leads:
        if i1 > n - s:
            continue
        found = walk([i1], _eliminate(F, cols[i1 + 1 :], cols[i1]), i1 + 1)
        if found is not None:
            return found
    return None


def _search_worker(args):
    F, cols, s, leads = args
    return _search_leading(F, cols, s, leads)


def _kernel_word(F: FieldContext, cols: np.ndarray, support: Sequence[int], n: int) -> np.ndarray:
    """A codeword supported on ``support`` (nonzero kernel vector of those columns)."""
    sub = GeneratorMatrix.from_rows(F, np.ascontiguousarray(cols[list(support)].T), len(support))
    ker = dual_matrix(sub)
    if ker.k == 0:
        raise CodeError(f"columns {list(support)} are independent")
    word = np.zeros(n, dtype=F.dtype)
    word[list(support)] = ker.rows[0]
    return word


def _column_dependence(G: GeneratorMatrix, budget: int, jobs: int) -> DistanceResult:
    F, n = G.field, G.n
    H = dual_matrix(G)
    r = H.k
    if r == 0:
        w = np.zeros(n, dtype=F.dtype)
        w[0] = 1
        return DistanceResult(1, "column_dependence", w, 0)
    cols = np.ascontiguousarray(H.rows.T)
    zero_cols = np.flatnonzero(~cols.any(axis=1))
    if zero_cols.size:
        word = np.zeros(n, dtype=F.dtype)
        word[zero_cols[0]] = 1
        return DistanceResult(1, "column_dependence", word, n)
    work = n
    hit = _proportional_pair(F, cols, _key_weights(F, r))
    if hit is not None:
        return DistanceResult(2, "column_dependence", _kernel_word(F, cols, hit, n), work)
    for s in range(3, r + 2):
        cost = _level_work(n, s)
        if work + cost > budget:
            raise BudgetExceeded(
                f"column_dependence: level s={s} needs {cost} units, "
                f"{budget - work} left of budget {budget}"
            )
        work += cost
        if jobs > 1:
            parts = [list(range(t, n, jobs)) for t in range(jobs)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_search_worker, [(F, cols, s, p) for p in parts]))
            hits = [h for h in results if h is not None]
            found = min(hits) if hits else None
        else:
            found = _search_leading(F, cols, s, range(n))
        if found is not None:
            return DistanceResult(s, "column_dependence", _kernel_word(F, cols, found, n), work)
    raise CodeError("no dependent column set found; parity-check matrix inconsistent")


def min_distance_detail(
    G: GeneratorMatrix,
    strategy: str = "auto",
    budget: int | None = None,
    jobs: int = 1,
) -> DistanceResult:
    """Exact minimum Hamming weight together with a witness codeword."""
    if G.k < 1:
        raise CodeError("minimum distance of the zero code is undefined")
    budget = default_budget() if budget is None else budget
    enum_ok = G.field.q**G.k <= ENUMERATION_LIMIT
    if strategy == "enumerate":
        if not enum_ok:
            raise BudgetExceeded(f"enumerate: q^k = {G.field.q}^{G.k} exceeds {ENUMERATION_LIMIT}")
        return _enumerate(G)
    if strategy == "column_dependence":
        return _column_dependence(G, budget, jobs)
    if strategy != "auto":
        raise CodeError(f"unknown strategy {strategy!r}")
    redundancy = G.n - G.k
    if enum_ok and redundancy > 8:
        return _enumerate(G)
    try:
        return _column_dependence(G, budget, jobs)
    except BudgetExceeded as exc:
        if enum_ok:
            log.info("falling back to enumeration: %s", exc)
            return _enumerate(G)
        raise BudgetExceeded(
            f"{exc}; enumerate: q^k = {G.field.q}^{G.k} exceeds {ENUMERATION_LIMIT}"
        ) from exc


def min_distance(G: GeneratorMatrix, strategy: str = "auto", budget: int | None = None, jobs: int = 1) -> int:
    return min_distance_detail(G, strategy, budget, jobs).d


__all__ = [
    "BudgetExceeded",
    "CodeError",
    "DistanceResult",
    "GeneratorMatrix",
    "contains",
    "dual_matrix",
    "is_orthogonal",
    "matmul",
    "matrix_from_json",
    "min_distance",
    "min_distance_detail",
    "reduce_against",
    "rref",
    "same_code",
    "skew_code_matrix",
]
