import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from leibrack.matrixexp import expm, nilpotency_index


def rodrigues(axis, theta):
    k = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    return np.eye(3) + np.sin(theta) * k + (1 - np.cos(theta)) * k @ k


@pytest.mark.parametrize("theta", [0.0, 1e-8, 0.3, 1.0, np.pi, 7.5, 40.0])
def test_rotation_matches_rodrigues(theta):
    axis = np.array([1.0, -2.0, 0.5])
    axis /= np.linalg.norm(axis)
    k = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    assert np.allclose(expm(theta * k), rodrigues(axis, theta), atol=1e-12 * max(1, theta))


def test_zero_and_empty():
    assert np.array_equal(expm(np.zeros((3, 3))), np.eye(3))
    assert expm(np.zeros((0, 0))).shape == (0, 0)


def test_diagonal():
    d = np.diag([-3.0, 0.0, 2.5])
    assert np.allclose(expm(d), np.diag(np.exp([-3.0, 0.0, 2.5])), rtol=1e-14)


def test_nilpotent_is_exact():
    n = np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, 0.0]])
    assert nilpotency_index(n) == 3
    assert np.array_equal(expm(n), np.array([[1.0, 1.0, 0.5], [0.0, 1.0, 1.0], [0.0, 0.0, 1.0]]))


def test_nilpotency_index():
    assert nilpotency_index(np.zeros((2, 2))) == 1
    assert nilpotency_index(np.eye(2)) is None


def test_object_dtype_accepted():
    from fractions import Fraction
    a = np.array([[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]], dtype=object)
    assert np.array_equal(expm(a), np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        expm(np.zeros((2, 3)))
    with pytest.raises(FloatingPointError):
        expm(np.array([[np.inf]]))


@settings(max_examples=80)
@given(arrays(np.float64, (4, 4), elements=st.floats(-3, 3)))
def test_matches_scipy(a):
    ours, ref = expm(a), scipy.linalg.expm(a)
    assert np.allclose(ours, ref, rtol=1e-10, atol=1e-10 * np.abs(ref).max())


@given(arrays(np.float64, (3, 3), elements=st.floats(-2, 2)))
def test_inverse_and_determinant(a):
    e = expm(a)
    assert np.allclose(e @ expm(-a), np.eye(3), atol=1e-9 * np.abs(e).max() ** 2)
    assert np.isclose(np.linalg.det(e), np.exp(np.trace(a)), rtol=1e-8)


@given(arrays(np.float64, (3, 3), elements=st.floats(-2, 2)), st.floats(-1.5, 1.5), st.floats(-1.5, 1.5))
def test_one_parameter_subgroup(a, s, t):
    assert np.allclose(expm(s * a) @ expm(t * a), expm((s + t) * a), rtol=1e-9, atol=1e-9)


def test_complex_input():
    a = np.array([[0, 1j], [1j, 0]])
    assert np.allclose(expm(a), scipy.linalg.expm(a))
