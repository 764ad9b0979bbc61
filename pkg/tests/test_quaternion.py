# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentrib.analytic import BinetOverflow, DeltaNotPositive, cubic_roots
from gentrib.quaternion import (
    Quaternion,
    hamilton_mul,
    quaternion_binet,
    quaternion_quad_residuals,
    root_quaternion,
    seq_quaternion,
)
from gentrib.seq_core import make_params, preset

components = st.integers(min_value=-50, max_value=50)
quaternions = st.builds(Quaternion, components, components, components, components)

ONE = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)  # noqa: E741
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


def _assert_close(approx: Quaternion, exact: Quaternion, rel: float = 1e-9):
    for a, e in zip(approx, exact, strict=True):
        assert a.real == pytest.approx(e, rel=rel, abs=rel), f"Expected {tuple(exact)}, got {tuple(approx)}"
        assert abs(a.imag) <= rel * max(1.0, abs(e)), f"Imaginary residue {a.imag} too large"


def test_hamilton_units():
    assert I * J == K, f"Expected k, got {I * J}"
    assert J * K == I
    assert K * I == J
    assert J * I == -K
    for unit in (I, J, K):
        assert unit * unit == -ONE, f"Expected -1, got {unit * unit}"
    assert I * J * K == -ONE


def test_quaternion_arithmetic():
    a = Quaternion(1, 2, 3, 4)
    b = Quaternion(-2, 0, 5, 1)
    assert a + b == Quaternion(-1, 2, 8, 5)
    assert a - b == Quaternion(3, 2, -2, 3)
    assert 3 * a == Quaternion(3, 6, 9, 12)
    assert a * 3 == 3 * a
    assert a.conjugate() == Quaternion(1, -2, -3, -4)
    assert a.norm_squared() == 30, f"Expected 30, got {a.norm_squared()}"
    assert hamilton_mul(a, a.conjugate()) == Quaternion(30, 0, 0, 0)
    assert a * b != b * a

    q = Quaternion(1 + 2j, 3j, -1.5, 0)
    assert tuple(q.real_part()) == (1.0, 0.0, -1.5, 0.0)


def test_seq_quaternion():
    assert tuple(seq_quaternion(preset("tribonacci"), 4)) == (2, 4, 7, 13)
    assert tuple(seq_quaternion(preset("padovan"), 6)) == (2, 2, 3, 4)
    assert tuple(seq_quaternion(make_params(-1, 0, 2, 1, -1, 1), 0)) == (-1, 0, 2, 1)

    with pytest.raises(ValueError):
        seq_quaternion(preset("tribonacci"), -1)


def test_root_quaternion():
    alpha = cubic_roots(1, 1, 1).alpha
    q = root_quaternion(alpha)
    expected = (1.0, 1.8392868, 3.3829758, 6.2222625)
    for got, want in zip(q, expected, strict=True):
        assert got.real == pytest.approx(want, abs=1e-7), f"Expected {expected}, got {tuple(q)}"
    assert root_quaternion(1j) == Quaternion(1 + 0j, 1j, -1 + 0j, -1j)


def test_quaternion_binet():
    _assert_close(quaternion_binet(preset("tribonacci"), 4), Quaternion(2, 4, 7, 13))
    _assert_close(quaternion_binet(preset("padovan"), 6), Quaternion(2, 2, 3, 4))
    _assert_close(quaternion_binet(make_params(0, 0, 1, 1, 1, 1), 2), Quaternion(1, 1, 2, 4))

    p = make_params(5, -2, 3, 1, 2, 1)
    roots = cubic_roots(1, 2, 1)
    for n in range(25):
        _assert_close(quaternion_binet(p, n, roots), seq_quaternion(p, n))

    with pytest.raises(DeltaNotPositive):
        quaternion_binet(make_params(0, 0, 1, 0, 3, 0), 2)
    with pytest.raises(ValueError):
        quaternion_binet(preset("tribonacci"), -1)
    with pytest.raises(BinetOverflow):
        quaternion_binet(preset("tribonacci"), 2000)


def test_quaternion_quad_residuals():
    for name, k in (("tribonacci", None), ("padovan", None), ("narayana", 2)):
        p = preset(name, k)
        for n in range(21):
            residuals = quaternion_quad_residuals(p, n, relative=True)
            assert max(residuals) <= 1e-8, f"Residuals {residuals} for {name} at {n=}"

    zero = make_params(0, 0, 0, 1, 1, 1)
    assert tuple(quaternion_quad_residuals(zero, 3)) == (0.0, 0.0, 0.0)


@settings(max_examples=100, deadline=None)
@given(a=quaternions, b=quaternions, c=quaternions)
def test_hamilton_product_properties(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).norm_squared() == a.norm_squared() * b.norm_squared()
    assert (a * b).conjugate() == b.conjugate() * a.conjugate()


@settings(max_examples=50, deadline=None)
@given(
    v=st.tuples(components, components, components),
    coefs=st.tuples(*[st.integers(min_value=-5, max_value=5)] * 3),
    n=st.integers(min_value=0, max_value=30),
)
def test_quaternion_recurrence(v, coefs, n):
    p = make_params(*v, *coefs)
    q = [seq_quaternion(p, k) for k in range(n, n + 4)]
    assert q[3] == p.r * q[2] + p.s * q[1] + p.t * q[0]
