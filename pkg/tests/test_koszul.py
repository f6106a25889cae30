from math import comb

import pytest

from singlab.errors import BadCoefficients
from singlab.complexes import slice_cohomology
from singlab.koszul import (
    h_squared_is_zero,
    koszul_complex,
    sigma_homotopy,
    verify_null_homotopy,
)
from singlab.polymat import PolyMatrix
from singlab.polyring import Ring, buchberger, parse_poly, quotient_basis


def test_rank_one_is_multiplication():
    rx = Ring(("x",))
    K = koszul_complex(rx, [rx.variable("x")])
    assert K.complex.rank(-1) == 1 and K.complex.rank(0) == 1
    assert K.complex.differential(-1) == PolyMatrix(rx, [[rx.variable("x")]])


def test_ranks_are_binomials():
    ring = Ring(("x", "y", "z"))
    K = koszul_complex(ring, [ring.variable(v) for v in ("x", "y", "z")])
    for j in range(4):
        assert K.complex.rank(-j) == comb(3, j)


def test_d_squared_zero():
    ring = Ring(("x", "y", "z"))
    fs = [
        parse_poly(ring, "x^2 - y*z"),
        parse_poly(ring, "y + z"),
        parse_poly(ring, "z^3"),
    ]
    K = koszul_complex(ring, fs)
    assert K.complex.check_d_squared()


def test_h0_matches_quotient_staircase():
    ring = Ring(("x", "y"))
    K = koszul_complex(ring, [ring.variable("x"), ring.variable("y")])
    table = slice_cohomology(K.complex, 6)
    # only H^0: the residue field in weight 0
    qb = quotient_basis(buchberger([ring.variable("x"), ring.variable("y")]))
    staircase_by_weight = {}
    for e in qb.monomials:
        w = ring.weighted_degree(e)
        staircase_by_weight[w] = staircase_by_weight.get(w, 0) + 1
    expected = {(0, w): n for w, n in staircase_by_weight.items()}
    assert table == expected


def test_sigma_homotopy_rank_one():
    rx = Ring(("x",))
    x = rx.variable("x")
    K = koszul_complex(rx, [x])
    S = sigma_homotopy(K, x * x, [x])
    # h(1) = x * e and d(h(1)) = x^2
    h0 = S.matrix(0)
    assert h0 == PolyMatrix(rx, [[x]])
    d_of_h = K.complex.differential(-1) @ h0
    assert d_of_h == PolyMatrix(rx, [[x * x]])
    assert verify_null_homotopy(S)


def test_sigma_homotopy_zero():
    rx = Ring(("x",))
    K = koszul_complex(rx, [rx.variable("x")])
    S = sigma_homotopy(K, rx.zero(), [rx.zero()])
    assert all(m.is_zero() for m in S.matrices.values())
    assert verify_null_homotopy(S)


def test_sigma_homotopy_xy_all_degrees():
    ring = Ring(("x", "y"))
    x, y = ring.variable("x"), ring.variable("y")
    K = koszul_complex(ring, [x, y])
    S = sigma_homotopy(K, x * y, [y, ring.zero()])
    assert verify_null_homotopy(S)
    assert h_squared_is_zero(S)


def test_bad_coefficients_rejected():
    ring = Ring(("x", "y"))
    x, y = ring.variable("x"), ring.variable("y")
    K = koszul_complex(ring, [x, y])
    with pytest.raises(BadCoefficients):
        sigma_homotopy(K, x * y, [x, ring.zero()])


def test_h_plus_d_squared_is_sigma():
    # (d+h)^2 = sigma * id on the total module, for a rank-3 sequence
    ring = Ring(("x", "y", "z"))
    fs = [ring.variable(v) for v in ("x", "y", "z")]
    sigma = parse_poly(ring, "x^2 + y^2 + z^2")
    coeffs = [ring.variable(v) for v in ("x", "y", "z")]
    K = koszul_complex(ring, fs)
    S = sigma_homotopy(K, sigma, coeffs)
    assert verify_null_homotopy(S)
    assert h_squared_is_zero(S)
    assert K.complex.check_d_squared()


def test_regular_sequence_slice_concentration():
    ring = Ring(("x", "y", "z"), (1, 2, 3))
    fs = [ring.variable("x"), ring.variable("y"), ring.variable("z")]
    K = koszul_complex(ring, fs)
    table = slice_cohomology(K.complex, 5)
    assert table == {(0, 0): 1}
