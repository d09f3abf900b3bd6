import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skewcode.fqr import CodeSpec, GrayMatrix, gray_image_matrix
from skewcode.gf import field_from_q
from skewcode.lincode import contains, dual_matrix
from skewcode.quantum import (
    CertificateError,
    QuantumError,
    QuantumParams,
    check_dual_containing,
    compare_codes,
    css_params,
    reference_codes,
    reference_for,
    singleton_defect,
)
from skewcode.search import TABLE1, right_divisors, table_spec, x_block_divisors
from skewcode.skewpoly import SkewPoly, parse_poly

from known_values import F_EX2, G1_EX2, G2, H1, H1_QUOTIENT, H2, H2_QUOTIENT


def oracle_sweep(F, alpha, beta):
    fs = [f for d in range(3) for f in x_block_divisors(alpha, d, F, 1)]
    gs = [g for d in range(3) for g in right_divisors(beta, d, F, 1)]
    M = GrayMatrix.hadamard(F)
    agree = total = certified = 0
    for f, g1, g2 in itertools.product(fs, gs, gs):
        spec = CodeSpec.separable(F, 1, alpha, beta, f, g1, g2)
        cert = check_dual_containing(spec)
        G = gray_image_matrix(spec, M)
        total += 1
        certified += cert.valid
        agree += cert.valid == contains(G, dual_matrix(G))
        assert cert.witnesses_verify()
    return agree, total, certified


@pytest.mark.parametrize("alpha,beta", [(3, 4), (5, 4), (3, 6)])
def test_certificate_matches_explicit_containment(F9, alpha, beta):
    agree, total, certified = oracle_sweep(F9, alpha, beta)
    assert agree == total
    assert 0 < certified < total  # both outcomes occur


def test_example_certificate(F9):
    spec = CodeSpec.separable(
        F9, 1, 49, 36, parse_poly(F_EX2, F9), parse_poly(G1_EX2, F9), parse_poly(G2, F9)
    )
    cert = check_dual_containing(spec)
    assert cert.valid and cert.route == "coprime"
    assert cert.witnesses_verify()
    assert cert.g1_check.cofactor == parse_poly(H1, F9)
    assert cert.g1_check.quotient == parse_poly(H1_QUOTIENT, F9)
    assert cert.g2_check.cofactor == parse_poly(H2, F9)
    assert cert.g2_check.quotient == parse_poly(H2_QUOTIENT, F9)
    # f f^* | x^49 - 1 in the commutative ring
    assert cert.f_check.quotient.degree == 43
    d = cert.to_dict()
    assert d["dual_containing"] is True and set(d["witnesses"]) == {"f", "g1", "g2"}


def test_full_space_is_dual_containing(F9):
    one = SkewPoly.from_coeffs(F9, [1])
    for alpha in (3, 4, 49):
        cert = check_dual_containing(CodeSpec.separable(F9, 1, alpha, 36, one, one, one))
        assert cert.valid and cert.witnesses_verify()
        xn = SkewPoly.xn_minus_one(F9, 36)
        assert cert.g1_check.cofactor == xn
        assert cert.g1_check.quotient == -xn


def test_certificate_errors(F9):
    one = SkewPoly.from_coeffs(F9, [1])
    with pytest.raises(CertificateError, match="divide beta"):
        check_dual_containing(CodeSpec.separable(F9, 1, 4, 3, one, one, one))
    F81 = field_from_q(81)  # |theta| = 4, gcd(6, 4) = 2
    one81 = SkewPoly.from_coeffs(F81, [1])
    with pytest.raises(CertificateError, match="no applicable criterion"):
        check_dual_containing(CodeSpec.separable(F81, 1, 6, 4, one81, one81, one81))
    with pytest.raises(CertificateError):
        check_dual_containing(CodeSpec.separable(F9, 1, 4, 4, one, parse_poly("x^2 + w", F9), one))


def test_table_rows_witnesses_verify():
    for row in TABLE1:
        cert = check_dual_containing(table_spec(row))
        assert cert.witnesses_verify()
        assert cert.valid == (row.row != 4)


@pytest.mark.parametrize(
    "classical,quantum",
    [((121, 114, 4), (121, 107, 4)), ((129, 124, 3), (129, 119, 3)), ((10, 10, 1), (10, 10, 1))],
)
def test_css_params(classical, quantum):
    p = css_params(*classical, q=9)
    assert (p.n, p.k, p.d) == quantum
    assert p.rate == Fraction(quantum[1], quantum[0])


def test_css_rejects_small_codes():
    with pytest.raises(QuantumError):
        css_params(10, 4, 3, 9)


def test_css_round_trip_on_table_rows():
    for row in TABLE1:
        n, k, d = row.classical
        assert (css_params(n, k, d, row.q).n, css_params(n, k, d, row.q).k) == row.quantum[:2]


def test_compare_examples():
    a, b = QuantumParams(121, 107, 4, 9), QuantumParams(121, 106, 4, 9)
    assert compare_codes(a, b) == "better"
    assert compare_codes(b, a) == "worse"
    assert compare_codes(a, a) == "equal"
    assert compare_codes(QuantumParams(285, 275, 3, 9), QuantumParams(286, 275, 3, 9)) == "better"
    assert compare_codes(QuantumParams(10, 8, 2, 9), QuantumParams(10, 4, 3, 9)) == "incomparable"
    with pytest.raises(QuantumError):
        compare_codes(a, QuantumParams(121, 107, 4, 25))


params = st.builds(
    lambda n, k, d: QuantumParams(n, min(k, n), d, 9),
    st.integers(1, 30), st.integers(0, 30), st.integers(1, 6),
)


@settings(max_examples=300, deadline=None)
@given(params, params, params)
def test_compare_is_a_strict_partial_order(a, b, c):
    ab, ba = compare_codes(a, b), compare_codes(b, a)
    flip = {"better": "worse", "worse": "better", "equal": "equal", "incomparable": "incomparable"}
    assert ba == flip[ab]
    assert compare_codes(a, a) == "equal"
    if ab == "better" and compare_codes(b, c) == "better":
        assert compare_codes(a, c) == "better"


def test_singleton_defect():
    assert singleton_defect(QuantumParams(121, 107, 4, 9)) == 8
    assert singleton_defect(QuantumParams(129, 119, 3, 9)) == 6
    assert singleton_defect(QuantumParams(20, 18, 2, 9)) == 0
    with pytest.raises(QuantumError):
        singleton_defect(QuantumParams(10, 9, 3, 9))


def test_reference_file():
    refs = reference_codes()
    assert len(refs) == 7
    for row in TABLE1:
        ref = reference_for(row.q, row.classical[0], row.classical[2])
        assert (ref.n, ref.k, ref.d) == row.existing
    assert reference_for(9, 1000, 7) is None
    assert all(singleton_defect(r) >= 0 for r in refs)
