import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibrack import fixtures as fx
from leibrack.leibniz import find_splitting, ker_ad, squares_ideal
from leibrack.lierack import (
    BUILTIN_MODELS,
    TOL_BRACKET,
    TOL_PHI,
    LinearLieGroupModel,
    RackPoint,
    abelian_trivial_model,
    big_phi,
    big_phi_fd,
    default_realization,
    digroup_conjugation,
    digroup_inverse,
    digroup_ops,
    example_2_2_model,
    exp_ad_tangent_bracket,
    model_from_splitting,
    phi_automorphism_residual,
    point_distance,
    rack_op,
    so3_model,
    tangent_bracket,
    verify_split_rack_roundtrip,
)
from leibrack.report import AxiomError

LX, LY, LZ = (np.asarray(m, dtype=float) for m in fx.so3_matrices())


def so3_expected_bracket():
    """[u + X, v + Y] = X v + [X, Y] on R^3 + so(3), written out by hand."""
    c = np.zeros((6, 6, 6))
    gens = [LX, LY, LZ]
    for a in range(3):
        for j in range(3):
            c[3 + a, j, :3] = gens[a][:, j]      # X_a e_j
        for b in range(3):
            comm = gens[a] @ gens[b] - gens[b] @ gens[a]
            # coordinates of the commutator in L_x, L_y, L_z
            c[3 + a, 3 + b, 3:] = [comm[2, 1], comm[0, 2], comm[1, 0]]
    return c


def rand_point(model, rng, scale=0.7):
    return model.random_point(rng, scale=scale)


def test_so3_structure_constants():
    m = so3_model()
    c = m.structure_constants
    assert np.allclose(c[0, 1], [0, 0, 1]) and np.allclose(c[1, 2], [1, 0, 0]) and np.allclose(c[2, 0], [0, 1, 0])
    assert m.check().passed


def test_closed_form_bracket_matches_hand_formula():
    assert np.allclose(so3_model().closed_form_bracket(), so3_expected_bracket())


def test_model_validation():
    with pytest.raises(ValueError):
        LinearLieGroupModel((LX,), (LX, LY), 3)
    with pytest.raises(ValueError):
        LinearLieGroupModel((LX,), (np.eye(2),), 3)
    with pytest.raises(AxiomError):
        LinearLieGroupModel((LX, 2 * LX), (LX, LX), 3)


def test_model_check_reports_non_closure_and_non_representation():
    # L_x, L_y do not span a subalgebra
    rep = LinearLieGroupModel((LX, LY), (LX, LY), 3).check()
    assert "lie_basis closed under commutator" in rep.failed()
    # so(3) acting by the wrong matrices
    rep = LinearLieGroupModel((LX, LY, LZ), (LX, LY, LX), 3).check()
    assert rep.failed() == ["rho is a representation"]


def test_rack_op_formula():
    m = so3_model()
    rng = np.random.default_rng(0)
    x, y = rand_point(m, rng), rand_point(m, rng)
    z = rack_op(m, x, y)
    assert np.allclose(z.v, x.m @ y.v)
    assert np.allclose(z.a, x.a @ y.a @ np.linalg.inv(x.a))


def test_rack_axioms_sampled():
    m = so3_model()
    rng = np.random.default_rng(1)
    one = m.unit()
    for _ in range(20):
        x, y, z = (rand_point(m, rng) for _ in range(3))
        lhs = rack_op(m, x, rack_op(m, y, z))
        rhs = rack_op(m, rack_op(m, x, y), rack_op(m, x, z))
        assert point_distance(lhs, rhs) < 1e-12
        assert point_distance(rack_op(m, one, x), x) < 1e-12
        assert point_distance(rack_op(m, x, one), one) < 1e-12


def test_digroup_conjugation_is_rack_op():
    m = so3_model()
    rng = np.random.default_rng(2)
    for _ in range(20):
        x, y = rand_point(m, rng), rand_point(m, rng)
        assert point_distance(digroup_conjugation(m, x, y), rack_op(m, x, y)) < 1e-12


def test_digroup_operations():
    m = example_2_2_model()
    x = m.point([1.0, 2.0], [0.5])
    y = m.point([3.0, -1.0], [2.0])
    vd, dv = digroup_ops(m, x, y)
    # exp(t E12) = I + t E12 exactly
    assert np.allclose(x.m, [[1, 0.5], [0, 1]])
    assert np.allclose(vd.v, [3 - 0.5, -1]) and np.allclose(vd.a, [[1, 2.5], [0, 1]])
    assert np.allclose(dv.v, [1, 2]) and np.allclose(dv.a, vd.a)
    inv = digroup_inverse(x)
    assert np.allclose(inv.v, 0) and np.allclose(inv.a, [[1, -0.5], [0, 1]])


def test_singular_group_component_rejected():
    m = so3_model()
    bad = RackPoint(np.zeros(3), np.zeros((3, 3)), np.zeros((3, 3)))
    with pytest.raises(np.linalg.LinAlgError):
        rack_op(m, bad, m.unit())


@pytest.mark.parametrize("name", sorted(BUILTIN_MODELS))
def test_phi_finite_difference_matches_closed_form(name):
    m = BUILTIN_MODELS[name]()
    rng = np.random.default_rng(3)
    for _ in range(10):
        x = rand_point(m, rng)
        assert np.max(np.abs(big_phi_fd(m, x) - big_phi(m, x))) < TOL_PHI
        assert phi_automorphism_residual(m, x) < TOL_PHI


def test_phi_at_unit_is_identity():
    m = so3_model()
    assert np.allclose(big_phi(m, m.unit()), np.eye(6))


def test_phi_of_rotation_about_z():
    m = so3_model()
    t = 0.8
    x = m.point(np.zeros(3), [0, 0, t])
    rot = np.array([[np.cos(t), -np.sin(t), 0], [np.sin(t), np.cos(t), 0], [0, 0, 1]])
    expected = np.zeros((6, 6))
    expected[:3, :3] = rot
    expected[3:, 3:] = rot  # Ad on so(3) is the rotation itself in the L basis
    assert np.allclose(big_phi(m, x), expected, atol=1e-12)


def test_tangent_bracket_so3():
    tb = tangent_bracket(so3_model())
    assert np.max(np.abs(tb.c - so3_expected_bracket())) < TOL_BRACKET
    assert tb.closed_form_error < TOL_BRACKET and tb.leibniz_residual < TOL_BRACKET
    assert tb.dim == 6


def test_tangent_bracket_example_2_2_is_exact():
    tb = tangent_bracket(example_2_2_model())
    expected = np.array(fx.example_2_2().c, dtype=float)
    assert np.max(np.abs(tb.c - expected)) < 1e-9


def test_tangent_bracket_abelian_is_zero():
    tb = tangent_bracket(abelian_trivial_model())
    assert np.max(np.abs(tb.c)) < 1e-6  # rounding only: exp of a diagonal matrix is not truncated


def test_tangent_bracket_rejects_bad_model():
    with pytest.raises(AxiomError):
        tangent_bracket(LinearLieGroupModel((LX, LY), (LX, LY), 3))


@pytest.mark.parametrize("name,which", [("so3-standard", "S"), ("ex2.2", "ker"), ("ex2.1-n2", "S"),
                                        ("ex2.1-n2", "ker"), ("gl2-standard", "S")])
def test_split_rack_roundtrip(name, which):
    g = fx.LEIBNIZ_FIXTURES[name]()
    e = squares_ideal(g) if which == "S" else ker_ad(g)
    h = find_splitting(g, e)
    rep = verify_split_rack_roundtrip(g, e, h)
    assert rep.passed, rep.render()


def test_split_rack_roundtrip_abelian():
    g = fx.abelian(3)
    e = squares_ideal(g)
    h = find_splitting(g, e)
    assert verify_split_rack_roundtrip(g, e, h).passed


def test_default_realization_needs_characters_for_gl_centre():
    g = fx.example_2_1(2)
    e = squares_ideal(g)
    h = find_splitting(g, e)
    model, basis = model_from_splitting(g, e, h)
    assert model.lie_dim == 8 and basis.shape == (10, 10)


def test_explicit_realization():
    g = fx.LEIBNIZ_FIXTURES["so3-standard"]()
    e = squares_ideal(g)
    h = find_splitting(g, e)
    assert verify_split_rack_roundtrip(g, e, h, realization=[LX, LY, LZ]).passed
    with pytest.raises(AxiomError):
        model_from_splitting(g, e, h, realization=[LX, LY, LX])


def test_unfaithful_realization_reported():
    # Heisenberg acting trivially: ad is not faithful on the centre and the centre lies in [h, h]
    from leibrack.leibniz import Representation
    h = fx.heisenberg()
    with pytest.raises(AxiomError, match="realization"):
        default_realization(h, Representation.trivial(h, 1))


@pytest.mark.parametrize("name", ["heisenberg-dtwist", "ex2.2", "so3-standard"])
def test_exp_ad_tangent_bracket_recovers_algebra(name):
    g = fx.LEIBNIZ_FIXTURES[name]()
    c = exp_ad_tangent_bracket(g)
    assert np.max(np.abs(c - np.array(g.c, dtype=float))) < TOL_BRACKET


@settings(max_examples=25)
@given(st.lists(st.floats(-1, 1), min_size=3, max_size=3), st.lists(st.floats(-2, 2), min_size=3, max_size=3))
def test_module_action_is_rotation(X, v):
    m = so3_model()
    p = m.point(v, X)
    assert np.allclose(p.m @ p.m.T, np.eye(3), atol=1e-12)
    assert np.allclose(p.m, p.a)
