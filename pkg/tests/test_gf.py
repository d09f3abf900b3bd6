import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from skewcode.gf import (
    CONWAY,
    FieldError,
    automorphism_order,
    field_arith,
    field_from_q,
    frobenius,
    make_field,
    parse_field_descriptor,
    primitive_order,
)

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81]


def _poly_eval_oracle(p, modulus, coeffs, a_coeffs):
    """Evaluate sum coeffs[i] * a^i with a given as a polynomial in w, by schoolbook arithmetic."""
    m = len(modulus) - 1

    def mulmod(u, v):
        prod = [0] * (2 * m)
        for i, ui in enumerate(u):
            for j, vj in enumerate(v):
                prod[i + j] = (prod[i + j] + ui * vj) % p
        for t in range(2 * m - 1, m - 1, -1):
            c = prod[t]
            if c:
                for s in range(m + 1):
                    prod[t - m + s] = (prod[t - m + s] - c * modulus[s]) % p
        return prod[:m]

    acc = [0] * m
    power = [1] + [0] * (m - 1)
    for c in coeffs:
        acc = [(x + c * y) % p for x, y in zip(acc, power)]
        power = mulmod(power, a_coeffs)
    return acc


def _digits(v, p, m):
    return [(v // p**i) % p for i in range(m)]


@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms_exhaustive(q):
    F = field_from_q(q)
    a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij") if q <= 27 else (None,) * 3
    add, mul = F.add.astype(np.int64), F.mul.astype(np.int64)
    els = np.arange(q)
    assert (add[els, 0] == els).all() and (mul[els, 1] == els).all()
    assert (add == add.T).all() and (mul == mul.T).all()
    assert (add[els, F.neg.astype(np.int64)] == 0).all()
    assert (mul[els[1:], F.inv[1:].astype(np.int64)] == 1).all()
    assert (mul[:, 0] == 0).all()
    # each row of add/mul is a permutation (group law)
    assert all(len(set(add[x])) == q for x in range(q))
    assert all(len(set(mul[x][1:])) == q - 1 for x in range(1, q))
    if a is not None:
        assert (add[add[a, b], c] == add[a, add[b, c]]).all()
        assert (mul[mul[a, b], c] == mul[a, mul[b, c]]).all()
        assert (mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]).all()
    else:
        for x in range(q):
            assert (add[add[x][:, None], els[None, :]] == add[x][add]).all()
            assert (mul[mul[x][:, None], els[None, :]] == mul[x][mul]).all()
            assert (mul[x][add] == add[mul[x][:, None], mul[x][None, :]]).all()


@pytest.mark.parametrize("q", SMALL_Q)
def test_multiplication_matches_polynomial_oracle(q):
    F = field_from_q(q)
    p, m = F.p, F.m
    modulus = list(F.modulus)
    for x, y in itertools.product(range(q), repeat=2):
        got = _digits(F.mul_(x, y), p, m)
        xs, ys = _digits(x, p, m), _digits(y, p, m)
        full = [0] * (2 * m)
        for i in range(m):
            for j in range(m):
                full[i + j] = (full[i + j] + xs[i] * ys[j]) % p
        for t in range(2 * m - 1, m - 1, -1):
            c = full[t]
            for s in range(m + 1):
                full[t - m + s] = (full[t - m + s] - c * modulus[s]) % p
        want = full[:m]
        assert got == want


@pytest.mark.parametrize("q", SMALL_Q)
def test_frobenius_is_automorphism(q):
    F = field_from_q(q)
    for i in range(F.m + 1):
        t = F.frob_table(i).astype(np.int64)
        assert sorted(t) == list(range(q))
        add, mul = F.add.astype(np.int64), F.mul.astype(np.int64)
        assert (t[add] == add[t[:, None], t[None, :]]).all()
        assert (t[mul] == mul[t[:, None], t[None, :]]).all()
        # fixed field of Theta^i has p^gcd(m,i) elements
        from math import gcd

        assert int((t == np.arange(q)).sum()) == F.p ** gcd(F.m, i if i else F.m)
        order = automorphism_order(F, i)
        power = np.arange(q)
        for _ in range(order):
            power = t[power]
        assert (power == np.arange(q)).all()


@pytest.mark.parametrize("p,m", sorted(CONWAY))
def test_conway_polynomials_are_primitive_and_compatible(p, m):
    F = make_field(p, m)
    assert primitive_order(F, F.w) == F.q - 1
    # compatibility: for every proper divisor k of m, w^((p^m-1)/(p^k-1)) is a root of C_{p,k}
    for k in range(1, m):
        if m % k or (p, k) not in CONWAY:
            continue
        e = (p**m - 1) // (p**k - 1)
        root = _digits(F.pow_(F.w, e), p, m)
        assert _poly_eval_oracle(p, list(F.modulus), CONWAY[(p, k)], root) == [0] * m


def test_nine_element_field_values(F9):
    w = F9.element("w")
    assert str(w * w) == "w^2"
    assert str(w**4) == "2"
    assert str(frobenius(w, 1)) == "w^3"
    assert F9.parse("w^{10}") == F9.parse("w^2")
    assert F9.descriptor() == "GF(3^2);modulus=2,2,1"
    assert parse_field_descriptor(F9.descriptor()) == F9


def test_field_errors():
    with pytest.raises(FieldError):
        make_field(6, 1)
    with pytest.raises(FieldError):
        make_field(3, 2, [1, 0, 1])  # x^2 + 1 is irreducible but not primitive over F_3
    with pytest.raises(FieldError):
        make_field(3, 2, [1, 1, 1])  # x^2 + x + 1 = (x - 1)^2
    with pytest.raises(FieldError):
        field_from_q(12)
    with pytest.raises(ZeroDivisionError):
        field_from_q(9).inv_(0)
    with pytest.raises(FieldError):
        field_from_q(9).element(3) + field_from_q(27).element(1)


@given(st.integers(0, 48), st.integers(0, 48), st.sampled_from(["add", "sub", "mul"]))
def test_field_arith_scalar_agrees_with_tables(a, b, op):
    F = field_from_q(49)
    x, y = F.element(a), F.element(b)
    r = field_arith(x, y, op)
    table = {"add": F.add, "sub": F.sub, "mul": F.mul}[op]
    assert r.value == int(table[a, b])
    if op == "sub":
        assert (r + y) == x


@given(st.integers(1, 80), st.integers(-200, 200))
def test_exp_log_roundtrip(a, k):
    F = field_from_q(81)
    assert F.exp(F.log(a)) == a
    assert F.log(F.exp(k)) == k % 80
