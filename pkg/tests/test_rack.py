import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from leibrack import fixtures as fx
from leibrack import groups
from leibrack.leibniz import ad_matrix
from leibrack.matrixexp import expm
from leibrack.rack import (
    AXIOM1,
    AXIOM2,
    AXIOM3,
    FiniteGroup,
    FiniteRack,
    check_group,
    check_rack,
    closed_form_dtwist_rack,
    conjugation_rack,
    exp_ad_rack_op,
    exp_graph_point,
    is_automorphism,
    phi,
    relabel_rack,
    sample_rack_axioms,
    tangent_bundle_conjugation,
    tangent_bundle_rack_op,
    unit_sphere_sampler,
)
from leibrack.report import AxiomError


def perm_mul(p, q):
    return tuple(p[i] for i in q)


def perm_inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


# -- finite racks ---------------------------------------------------------------------

def test_trivial_one_point_rack():
    assert check_rack(FiniteRack(1, 0, [[0]])).passed


def test_s3_conjugation_matches_direct_permutation_conjugation():
    g = groups.symmetric(3)
    q = conjugation_rack(g)
    labels = g.labels
    for x, y in itertools.product(range(6), repeat=2):
        expected = perm_mul(perm_mul(labels[x], labels[y]), perm_inv(labels[x]))
        assert labels[q.op(x, y)] == expected
    assert check_rack(q).passed


@pytest.mark.parametrize("name,grp", [(n, g) for k in range(1, 9) for n, g in groups.groups_of_order(k)])
def test_every_small_group_gives_a_rack(name, grp):
    assert check_group(grp).passed
    q = conjugation_rack(grp)
    assert check_rack(q).passed
    # a group is abelian exactly when its conjugation rack is trivial
    trivial = np.array_equal(q.table, np.tile(np.arange(grp.size), (grp.size, 1)))
    assert trivial == grp.is_abelian()


def test_axioms_reported_separately():
    rep = check_rack(FiniteRack(2, 0, [[0, 1], [0, 0]]))
    assert rep.failed() == [AXIOM2]
    assert rep[AXIOM2].witnesses == [{"a": 1, "b": 0, "solutions": 2}, {"a": 1, "b": 1, "solutions": 0}]


def test_point_axiom_witnesses():
    q = conjugation_rack(groups.symmetric(3))
    rep = check_rack(FiniteRack(6, 1, q.table))
    assert rep.failed() == [AXIOM3]


def test_left_distributivity_failure():
    # x o y = x + y mod 3: 1 o (1 o 0) = 2 but (1 o 1) o (1 o 0) = 0
    t = (np.arange(3)[:, None] + np.arange(3)[None, :]) % 3
    rep = check_rack(FiniteRack(3, 0, t))
    assert AXIOM1 in rep.failed()
    assert [1, 1, 0] in rep[AXIOM1].witnesses


def test_size_cap():
    with pytest.raises(ValueError):
        check_rack(FiniteRack(3, 0, np.zeros((3, 3), dtype=int)), max_size=2)


def test_constructor_validation():
    with pytest.raises(ValueError):
        FiniteRack(2, 0, [[0, 1, 0], [0, 1, 0]])
    with pytest.raises(ValueError):
        FiniteRack(2, 0, [[0, 2], [0, 1]])
    with pytest.raises(ValueError):
        FiniteRack(2, 5, [[0, 1], [0, 1]])


def test_conjugation_rack_rejects_non_group():
    bad = FiniteGroup(2, 0, [[0, 1], [1, 1]], (0, 1))
    with pytest.raises(AxiomError):
        conjugation_rack(bad)


def test_from_table_errors():
    with pytest.raises(AxiomError):
        FiniteGroup.from_table([[0, 0], [0, 0]])
    with pytest.raises(AxiomError):
        FiniteGroup.from_table([[0, 1], [1, 1]])


def test_translations_are_automorphisms():
    q = conjugation_rack(groups.dihedral(4))
    for x in range(q.size):
        assert is_automorphism(q, phi(q, x))
    assert not is_automorphism(q, [0] * q.size)


@given(st.permutations(list(range(6))))
def test_relabelling_preserves_axioms(perm):
    q = conjugation_rack(groups.symmetric(3))
    r = relabel_rack(q, perm)
    assert check_rack(r).passed
    assert r.point == perm[q.point]
    for x, y in itertools.product(range(6), repeat=2):
        assert r.op(perm[x], perm[y]) == perm[q.op(x, y)]


# -- exp(ad) racks on Leibniz algebras ---------------------------------------------------

@pytest.mark.parametrize("name", ["so3-standard", "ex2.2", "ex2.1-n2", "heisenberg-dtwist"])
def test_exp_ad_rack_axioms(name):
    g = fx.LEIBNIZ_FIXTURES[name]().to_float()
    op = lambda x, y: exp_ad_rack_op(g, x, y, check=False)  # noqa: E731
    rep = sample_rack_axioms(op, unit_sphere_sampler(g.dim, 1.5), np.zeros(g.dim), n_triples=40)
    assert rep.passed, rep.render()


def test_exp_ad_on_so3_standard_is_rodrigues_on_both_blocks():
    g = fx.LEIBNIZ_FIXTURES["so3-standard"]()
    x = np.array([0, 0, 0, 0.3, -0.4, 1.2])
    y = np.arange(1.0, 7.0)
    axis = x[3:] / np.linalg.norm(x[3:])
    theta = np.linalg.norm(x[3:])
    k = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    rot = np.eye(3) + np.sin(theta) * k + (1 - np.cos(theta)) * k @ k
    assert np.allclose(exp_ad_rack_op(g, x, y), np.concatenate([rot @ y[:3], rot @ y[3:]]), atol=1e-13)


def test_module_part_acts_trivially():
    g = fx.LEIBNIZ_FIXTURES["so3-standard"]()
    y = np.arange(1.0, 7.0)
    assert np.allclose(exp_ad_rack_op(g, [5, -1, 2, 0, 0, 0], y), y)


@given(st.lists(st.floats(-5, 5), min_size=6, max_size=6))
def test_dtwist_closed_form(vals):
    g = fx.heisenberg_dtwist()
    x, y = np.array(vals[:3]), np.array(vals[3:])
    assert np.allclose(exp_ad_rack_op(g, x, y, check=False), closed_form_dtwist_rack(x, y), atol=1e-12)


def test_exp_ad_rejects_non_leibniz():
    g = fx.example_2_2()
    c = g.c.copy()
    c[2, 2, 2] = 1
    from leibrack.leibniz import LeibnizAlgebra
    with pytest.raises(AxiomError):
        exp_ad_rack_op(LeibnizAlgebra(c), [0, 0, 1], [1, 1, 1])


def test_exp_ad_matches_independent_expm():
    import scipy.linalg
    g = fx.example_2_1(2).to_float()
    rng = np.random.default_rng(7)
    x, y = rng.standard_normal(10), rng.standard_normal(10)
    assert np.allclose(exp_ad_rack_op(g, x, y), scipy.linalg.expm(ad_matrix(g, x)) @ y, atol=1e-12)


# -- tangent bundle conjugation ---------------------------------------------------------

def _tg_sampler(rng):
    k = fx.so3_matrices()
    X = sum(c * np.asarray(m, dtype=float) for c, m in zip(rng.standard_normal(3), k))
    A = sum(c * np.asarray(m, dtype=float) for c, m in zip(rng.standard_normal(3), k))
    return X, expm(A)


def _graph_sampler(rng):
    k = fx.so3_matrices()
    X = sum(c * np.asarray(m, dtype=float) for c, m in zip(rng.standard_normal(3), k))
    return X, expm(X)


ZERO_TG = (np.zeros((3, 3)), np.eye(3))


def test_tangent_bundle_op_is_a_rack_on_the_exp_graph():
    rep = sample_rack_axioms(tangent_bundle_rack_op, _graph_sampler, ZERO_TG, n_triples=60)
    assert rep.passed, rep.render()


def test_tangent_bundle_op_is_not_a_rack_off_the_graph():
    rep = sample_rack_axioms(tangent_bundle_rack_op, _tg_sampler, ZERO_TG, n_triples=20)
    assert set(rep.failed()) == {AXIOM1, AXIOM3}


def test_tangent_bundle_conjugation_is_group_conjugation():
    def mul(p, q):
        return p[0] + p[1] @ q[0] @ np.linalg.inv(p[1]), p[1] @ q[1]

    def inv(p):
        ai = np.linalg.inv(p[1])
        return -ai @ p[0] @ p[1], ai

    rng = np.random.default_rng(4)
    x, y = _tg_sampler(rng), _tg_sampler(rng)
    expected = mul(mul(x, y), inv(x))
    got = tangent_bundle_conjugation(x, y)
    assert np.allclose(got[0], expected[0]) and np.allclose(got[1], expected[1])
    rep = sample_rack_axioms(tangent_bundle_conjugation, _tg_sampler, ZERO_TG, n_triples=60)
    assert rep.passed, rep.render()


def test_exp_graph_not_closed_under_group_conjugation():
    rng = np.random.default_rng(5)
    x, y = _graph_sampler(rng), _graph_sampler(rng)
    first, second = tangent_bundle_conjugation(x, y)
    assert np.max(np.abs(expm(first) - second)) > 1e-3


def test_tangent_bundle_unit_acts_trivially():
    rng = np.random.default_rng(2)
    y = _tg_sampler(rng)
    for op in (tangent_bundle_rack_op, tangent_bundle_conjugation):
        first, second = op(ZERO_TG, y)
        assert np.allclose(first, y[0]) and np.allclose(second, y[1])


def test_tangent_bundle_group_part_is_conjugation():
    rng = np.random.default_rng(1)
    (X, a), (Y, b) = _tg_sampler(rng), _tg_sampler(rng)
    first, second = tangent_bundle_rack_op((X, a), (Y, b))
    assert np.allclose(second, a @ b @ a.T)
    # at X = 0 the first component is just the adjoint action
    first0, _ = tangent_bundle_rack_op((np.zeros((3, 3)), a), (Y, b))
    assert np.allclose(first0, a @ Y @ a.T)


def test_exp_graph_point():
    X = np.array([[0, -1.0], [1.0, 0]]) * 0.7
    x, a = exp_graph_point(X)
    assert np.array_equal(x, X)
    assert np.allclose(a, [[np.cos(0.7), -np.sin(0.7)], [np.sin(0.7), np.cos(0.7)]])
