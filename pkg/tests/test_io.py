import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from leibrack import fixtures as fx
from leibrack import groups, io
from leibrack.digroup import FiniteDigroup, example_4_1
from leibrack.exactla import Subspace
from leibrack.leibniz import LeibnizAlgebra
from leibrack.lierack import so3_model
from leibrack.rack import conjugation_rack


@pytest.mark.parametrize("name", sorted(fx.LEIBNIZ_FIXTURES))
def test_algebra_roundtrip(name):
    g = fx.LEIBNIZ_FIXTURES[name]()
    back = io.loads(io.dumps(g), "leibniz")
    assert back == g and back.basis_names == g.basis_names


def test_algebra_file_layout():
    d = io.to_dict(fx.example_2_2())
    assert d["dim"] == 3
    assert d["brackets"] == [{"i": 2, "j": 1, "val": ["1", "0", "0"]}]


def test_omitted_pairs_are_zero_and_rationals_parse():
    text = json.dumps({"dim": 2, "brackets": [{"i": 0, "j": 1, "val": ["1/2", "-3"]}]})
    g = io.loads(text, "leibniz")
    assert g.c[0, 1, 0] == Fraction(1, 2) and g.c[0, 1, 1] == -3
    assert all(v == 0 for v in g.c[1].flat)


@given(st.lists(st.fractions(max_denominator=50).map(lambda q: Fraction(q)), min_size=8, max_size=8))
def test_exact_constants_survive(vals):
    c = np.array(vals, dtype=object).reshape(2, 2, 2)
    g = LeibnizAlgebra(c)
    assert io.loads(io.dumps(g), "leibniz") == g


def test_float_constants_roundtrip():
    g = fx.so3().to_float()
    back = io.loads(io.dumps(g), "leibniz")
    assert not back.exact
    assert np.array_equal(np.array(back.c, dtype=float), np.array(g.c, dtype=float))


def test_dialgebra_roundtrip():
    d = fx.example_2_3(2)
    back = io.loads(io.dumps(d), "dialgebra")
    assert (back.vdash == d.vdash).all() and (back.dashv == d.dashv).all()


def test_representation_roundtrip():
    r = fx.gl_standard(2)
    back = io.loads(io.dumps(r), "representation")
    assert back.module_dim == 2
    assert all((a == b).all() for a, b in zip(back.rho, r.rho))


def test_subspace_roundtrip():
    s = Subspace.span([[1, 2, 0], [0, Fraction(1, 3), 1]], 3)
    assert io.loads(io.dumps(s), "subspace") == s


def test_table_structures_roundtrip():
    q = conjugation_rack(groups.symmetric(3))
    assert io.loads(io.dumps(q), "rack") == q
    grp = groups.dihedral(4)
    assert io.loads(io.dumps(grp), "group") == grp
    dg = example_4_1()
    assert io.loads(io.dumps(dg), "digroup") == dg


def test_model_roundtrip():
    m = so3_model()
    back = io.loads(io.dumps(m), "model")
    assert back.module_dim == 3 and back.ambient == 3
    assert np.array_equal(back.structure_constants, m.structure_constants)


def test_save_and_load(tmp_path):
    p = tmp_path / "g.json"
    io.save(fx.example_2_2(), p)
    assert io.load(p, "leibniz") == fx.example_2_2()


@pytest.mark.parametrize("text,kind", [
    ("", "leibniz"),
    ("   \n", "rack"),
    ("{not json", "leibniz"),
    ("[]", "leibniz"),
    ('{"dim": 2}', "leibniz"),
    ('{"dim": -1, "brackets": []}', "leibniz"),
    ('{"dim": 2, "basis": ["a"], "brackets": []}', "leibniz"),
    ('{"dim": 2, "brackets": [{"i": 0, "j": 5, "val": ["1", "0"]}]}', "leibniz"),
    ('{"dim": 2, "brackets": [{"i": 0, "j": 1, "val": ["x", "0"]}]}', "leibniz"),
    ('{"dim": 2, "brackets": [{"i": 0, "j": 1, "val": [true, "0"]}]}', "leibniz"),
    ('{"size": 2, "point": 0, "table": [[0, 1]]}', "rack"),
    ('{"size": 2, "point": 0, "table": [[0, 1], [0, 7]]}', "rack"),
    ('{"size": 2, "unit": 0, "vdash": [[0,1],[1,0]], "dashv": [[0,1],[1,0]], "inv": [0, 9]}', "digroup"),
    ('{"ambient_dim": 2, "basis": [[1, 0, 0]]}', "subspace"),
    ('{"ambient": 2, "lie_basis": [[[0, 1], [0, 0]]], "module_dim": 2, "rho": [[1, 2, 3]]}', "model"),
])
def test_schema_errors(text, kind):
    with pytest.raises(io.SchemaError):
        io.loads(text, kind)


def test_missing_file():
    with pytest.raises(io.SchemaError):
        io.load("/nonexistent/file.json", "leibniz")


def test_unknown_kind_and_type():
    with pytest.raises(ValueError):
        io.loads("{}", "banana")
    with pytest.raises(TypeError):
        io.dumps(object())


def test_group_unit_located_from_field():
    g = io.loads(json.dumps({"size": 2, "unit": 0, "table": [[0, 1], [1, 0]], "inv": [0, 1]}), "group")
    assert g.unit == 0 and g.is_abelian()


def test_digroup_from_group_roundtrip():
    d = FiniteDigroup.from_group(groups.quaternion())
    assert io.loads(io.dumps(d), "digroup") == d
