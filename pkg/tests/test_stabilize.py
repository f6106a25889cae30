from fractions import Fraction

import pytest

from singlab.complexes import periodic_slice_cohomology
from singlab.errors import NotHomogeneous, NotInIdeal, NotQuadratic
from singlab.fields import QQ
from singlab.linalg import ExactMatrix
from singlab.matfac import mf_cokernel, mf_hom_complex, mf_verify
from singlab.polymat import PolyMatrix
from singlab.polyring import Ring, parse_poly
from singlab.stabilize import (
    clifford_of_quadratic,
    end_cohomology,
    end_dg_algebra,
    end_dg_algebra_of,
    stabilise,
)


def stab_x2():
    ring = Ring(("x",))
    return stabilise(ring, [ring.variable("x")], parse_poly(ring, "x^2"))


def test_stabilise_x2_is_the_forced_factorisation():
    st = stab_x2()
    x = st.ring.variable("x")
    assert st.mf.phi == PolyMatrix(st.ring, [[x]])
    assert st.mf.psi == PolyMatrix(st.ring, [[x]])
    ok, _ = mf_verify(st.mf)
    assert ok


def test_stabilise_xy_rank_two():
    ring = Ring(("x", "y"))
    st = stabilise(
        ring,
        [ring.variable("x"), ring.variable("y")],
        parse_poly(ring, "x*y"),
        sigma_coeffs=[ring.variable("y"), ring.zero()],
    )
    assert st.mf.rank == 2
    ok, witness = mf_verify(st.mf)
    assert ok, witness


def test_stabilise_requires_membership():
    ring = Ring(("x", "y"))
    with pytest.raises(NotInIdeal):
        stabilise(ring, [ring.variable("x")], parse_poly(ring, "y^2"))


def test_h_plus_d_squared_for_the_acceptance_set():
    cases = [
        (Ring(("x",)), "x^2", ["x"]),
        (Ring(("x", "y")), "x*y", ["x", "y"]),
        (Ring(("x",)), "x^3", ["x"]),
        (Ring(("x", "y", "z"), (3, 3, 2)), "x^2+y^2+z^3", ["x", "y", "z"]),
    ]
    for ring, sig, gens in cases:
        st = stabilise(
            ring, [parse_poly(ring, g) for g in gens], parse_poly(ring, sig)
        )
        ok, witness = mf_verify(st.mf)
        assert ok, (sig, witness)


def test_weyl_relations_and_straightening():
    st = stab_x2()
    alg = end_dg_algebra_of(st).algebra
    th, t = alg.theta(0), alg.t_op(0)
    assert t * th == alg.scalar(1) - th * t
    assert (th * th).is_zero()
    assert (t * t).is_zero()
    assert (th * t) * (th * t) == th * t


def test_weyl_relations_rank_two():
    ring = Ring(("u", "v"))
    end = end_dg_algebra(
        [ring.variable("u"), ring.variable("v")],
        [ring.variable("u"), -ring.variable("v")],
    )
    alg = end.algebra
    th0, th1 = alg.theta(0), alg.theta(1)
    t0, t1 = alg.t_op(0), alg.t_op(1)
    assert th0 * th1 == -(th1 * th0)
    assert t0 * t1 == -(t1 * t0)
    assert t0 * th1 == -(th1 * t0)
    assert t1 * th1 + th1 * t1 == alg.scalar(1)


def test_delta_on_theta_t():
    st = stab_x2()
    end = end_dg_algebra_of(st)
    alg = end.algebra
    x = end.ring.variable("x")
    assert end.delta(alg.theta(0)) == alg.scalar(1) * x
    assert end.delta(alg.t_op(0)) == alg.scalar(1) * x
    # delta(theta T) = x T - x theta = x t
    image = end.delta(alg.theta(0) * alg.t_op(0))
    expected = (alg.t_op(0) - alg.theta(0)) * x
    assert image == expected
    assert end.delta(image).is_zero()


def test_delta_squared_zero_all_words():
    st = stab_x2()
    assert end_dg_algebra_of(st).delta_squared_is_zero()
    ring = Ring(("x", "y"))
    st2 = stabilise(
        ring,
        [ring.variable("x"), ring.variable("y")],
        parse_poly(ring, "x*y"),
    )
    assert end_dg_algebra_of(st2).delta_squared_is_zero()


def test_leibniz_spot_values_rank_two():
    ring = Ring(("u", "v"))
    end = end_dg_algebra(
        [ring.variable("u"), ring.variable("v")],
        [ring.variable("u"), -ring.variable("v")],
    )
    alg = end.algebra
    u, v = ring.variable("u"), ring.variable("v")
    # delta(theta0 theta1) = u theta1 - theta0 v  (Leibniz, hand expansion)
    image = end.delta(alg.theta(0) * alg.theta(1))
    assert image == alg.theta(1) * u - alg.theta(0) * v
    assert end.delta(image).is_zero()


def test_end_cohomology_x2():
    st = stab_x2()
    end = end_dg_algebra_of(st)
    table = end_cohomology(end, 3, theta_weights=[0], t_weights=[0])
    assert table.dims == {(0, 0): 1, (1, 0): 1}
    alg = end.algebra
    t = alg.t_op(0) - alg.theta(0)
    assert end.delta(t).is_zero()
    cls = table.cohomology_class(t, 0)
    assert cls is not None and any(cls)
    assert t * t == alg.scalar(-1)


def test_end_cohomology_x3_dims():
    ring = Ring(("x",))
    st = stabilise(ring, [ring.variable("x")], parse_poly(ring, "x^3"))
    end = end_dg_algebra_of(st)
    # default weights theta -> wdeg f = 1, T -> wdeg sigma_1 = 2: shift 0
    table = end_cohomology(end, 4)
    assert table.shift == 0
    assert table.dims == {(0, 0): 1, (1, 2): 1}
    # spec example weights x -> 1, theta -> 1, T -> 2 are the defaults
    assert table.weights == ([1], [2])


def test_end_cohomology_rejects_nonuniform_shift():
    ring = Ring(("x",))
    st = stabilise(ring, [ring.variable("x")], parse_poly(ring, "x^3"))
    end = end_dg_algebra_of(st)
    with pytest.raises(NotHomogeneous):
        end_cohomology(end, 3, theta_weights=[0], t_weights=[0])


def test_clifford_example_u2_minus_v2():
    ring = Ring(("u", "v"))
    sigma = parse_poly(ring, "u^2-v^2")
    pres = clifford_of_quadratic(sigma)
    assert pres.dimension == 4
    assert pres.anticommutator_constant(0, 0) == Fraction(-2)  # U^2 = -1
    assert pres.anticommutator_constant(1, 1) == Fraction(2)  # V^2 = +1
    assert pres.anticommutator_constant(0, 1) == 0

    st = stabilise(ring, [ring.variable("u"), ring.variable("v")], sigma)
    end = end_dg_algebra_of(st)
    table = end_cohomology(end, 2, theta_weights=[0, 0], t_weights=[0, 0])
    assert sum(table.dims.values()) == 4
    assert table.dims == {(0, 0): 2, (1, 0): 2}
    alg = end.algebra
    U = alg.t_op(0) - alg.theta(0)
    V = alg.t_op(1) + alg.theta(1)
    assert end.delta(U).is_zero() and end.delta(V).is_zero()
    assert U * U == alg.scalar(-1)
    assert V * V == alg.scalar(1)
    assert U * V == -(V * U)
    # classes of 1, U, V, UV form a basis of the 4-dim cohomology
    vec_1 = table.cohomology_class(alg.scalar(1), 0)
    vec_u = table.cohomology_class(U, 0)
    vec_v = table.cohomology_class(V, 0)
    vec_uv = table.cohomology_class(U * V, 0)
    even = ExactMatrix.from_rows(QQ, [vec_1, vec_uv])
    odd = ExactMatrix.from_rows(QQ, [vec_u, vec_v])
    assert even.rank() == 2 and odd.rank() == 2


def test_clifford_matches_matrix_algebra():
    # the generator images [[0,1],[-1,0]] and [[0,1],[1,0]] satisfy the
    # Cl_{1,1} relations and generate M_2(QQ)
    u = ExactMatrix.from_rows(QQ, [[0, 1], [-1, 0]])
    v = ExactMatrix.from_rows(QQ, [[0, 1], [1, 0]])
    ident = ExactMatrix.identity(QQ, 2)
    assert (u @ u) == ident.scale(Fraction(-1))
    assert (v @ v) == ident
    assert (u @ v) == (v @ u).scale(Fraction(-1))
    flat = []
    for mat in (ident, u, v, u @ v):
        flat.append([mat.entry(r, c) for r in range(2) for c in range(2)])
    assert ExactMatrix.from_rows(QQ, flat).rank() == 4


def test_clifford_three_variables_dimension():
    ring = Ring(("x", "y", "z"))
    pres = clifford_of_quadratic(parse_poly(ring, "x^2+y^2+z^2"))
    assert pres.dimension == 8


def test_clifford_x2_normalisation():
    rx = Ring(("x",))
    pres = clifford_of_quadratic(parse_poly(rx, "x^2"))
    assert pres.anticommutator_constant(0, 0) == Fraction(-2)  # Gamma^2 = -1


def test_clifford_rejects_non_quadratic():
    rx = Ring(("x",))
    with pytest.raises(NotQuadratic):
        clifford_of_quadratic(parse_poly(rx, "x^3"))
    with pytest.raises(NotQuadratic):
        clifford_of_quadratic(parse_poly(rx, "x^2 + x"))


def test_stab_cokernel_presents_residue_field():
    # r = 1: the cokernel of the stabilisation is L/sigma = k on the nose.
    st = stab_x2()
    ck = mf_cokernel(st.mf)
    assert ck.dimension_exact() == 1
    # r = 2 (the node): the cokernel presents k only in the stable
    # category; as a module it is the MCM replacement R/(x) (+) R/(y),
    # whose filtration dims grow by 2 per degree.
    ring = Ring(("x", "y"))
    st2 = stabilise(
        ring, [ring.variable("x"), ring.variable("y")], parse_poly(ring, "x*y")
    )
    ck2 = mf_cokernel(st2.mf)
    assert ck2.dims_filtered(4) == [2, 4, 6, 8, 10]
    # independent witness for the same dims: R/(x) (+) R/(y) directly
    from singlab.matfac import CokernelPresentation, quotient_by_sigma

    base = quotient_by_sigma(st2.mf)
    x, y = ring.variable("x"), ring.variable("y")
    split = CokernelPresentation(
        base,
        PolyMatrix(ring, [[x, ring.zero()], [ring.zero(), y]]),
    )
    assert split.dims_filtered(4) == ck2.dims_filtered(4)


def test_end_cohomology_matches_hom_complex_slices():
    # two independent pipelines for End(k^stab) of x^2: the Poly(r) slice
    # cohomology (theta/T weights 0) and the Z/2 mapping complex slices
    # (whose odd bookkeeping weight is offset by -shift_psi).
    st = stab_x2()
    end = end_dg_algebra_of(st)
    table = end_cohomology(end, 3, theta_weights=[0], t_weights=[0])
    h = mf_hom_complex(st.mf, st.mf)
    hom_dims = periodic_slice_cohomology(h, 3, min_weight=-3)
    offset = st.mf.shift_psi
    translated = {}
    for (p, w), dim in table.dims.items():
        translated[(p, w - offset if p == 1 else w)] = dim
    assert translated == hom_dims


def test_stabilisation_weights_are_canonical():
    st = stab_x2()
    assert st.mf.is_graded()
    assert st.mf.shift_phi == Fraction(1) and st.mf.shift_psi == Fraction(1)
    ring = Ring(("x", "y", "z"), (3, 3, 2))
    st2 = stabilise(
        ring,
        [ring.variable(v) for v in ("x", "y", "z")],
        parse_poly(ring, "x^2+y^2+z^3"),
    )
    assert st2.mf.is_graded()
    assert st2.mf.shift_phi == Fraction(3) == st2.mf.shift_psi


def test_truncated_end_cohomology_non_qh():
    # sigma = x^2 + x^3 is not quasi-homogeneous; the order-truncated
    # computation is labelled and stable across bounds
    ring = Ring(("x",))
    sigma = parse_poly(ring, "x^2 + x^3")
    st = stabilise(ring, [ring.variable("x")], sigma)
    end = end_dg_algebra_of(st)
    from singlab.stabilize import end_cohomology_truncated

    small = end_cohomology_truncated(end, 4)
    big = end_cohomology_truncated(end, 7)
    assert small["truncated_at"] == 4 and big["truncated_at"] == 7
    assert small["dims"] == big["dims"] == {0: 1, 1: 1}


def test_clifford_cross_terms_match_cocycles():
    # sigma = x*y: hyperbolic form; Gamma_1^2 = Gamma_2^2 = 0 and the
    # anticommutator constant -2*B_12 = -1 is realised by the cocycles
    # U = T_1 - theta_2 and V = T_2
    ring = Ring(("x", "y"))
    sigma = parse_poly(ring, "x*y")
    pres = clifford_of_quadratic(sigma)
    assert pres.dimension == 4
    assert pres.anticommutator_constant(0, 0) == 0
    assert pres.anticommutator_constant(1, 1) == 0
    assert pres.anticommutator_constant(0, 1) == Fraction(-1)

    st = stabilise(
        ring,
        [ring.variable("x"), ring.variable("y")],
        sigma,
        sigma_coeffs=[ring.variable("y"), ring.zero()],
    )
    end = end_dg_algebra_of(st)
    table = end_cohomology(end, 2, theta_weights=[0, 0], t_weights=[0, 0])
    assert sum(table.dims.values()) == 4
    alg = end.algebra
    u = alg.t_op(0) - alg.theta(1)
    v = alg.t_op(1)
    assert end.delta(u).is_zero() and end.delta(v).is_zero()
    assert (u * u).is_zero()
    assert (v * v).is_zero()
    assert u * v + v * u == alg.scalar(-1)
