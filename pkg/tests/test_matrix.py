# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentrib.matrix import (
    Mat3,
    Mat3Mod,
    cassini_u_lhs,
    cassini_v_lhs,
    companion,
    det3,
    factor_matrix,
    mat_mul,
    mat_pow,
    mat_pow_mod,
    matrix_quadratic,
    reduce_mod,
    st_form_matrix,
    term_by_matrix,
    term_by_matrix_mod,
    u_form,
    v_shift_matrix,
)
from gentrib.seq_core import cassini_seed, fundamental, make_params, preset, term_iterative, term_iterative_mod

small = st.integers(min_value=-5, max_value=5)
seeds = st.integers(min_value=-9, max_value=9)
params_strategy = st.builds(make_params, seeds, seeds, seeds, small, small, small)


@pytest.fixture(scope="module")
def tribonacci():
    return preset("tribonacci")


@pytest.fixture(scope="module")
def q_matrix(tribonacci):
    return companion(tribonacci)


def test_mat3():
    m = Mat3.of([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert m[1, 2] == 6, f"Expected 6, got {m[1, 2]}"
    assert m.to_list() == [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    assert m + Mat3.zero() == m
    assert m.scale(2)[2, 0] == 14, f"Expected 14, got {m.scale(2)[2, 0]}"

    with pytest.raises(ValueError):
        Mat3(((1, 2), (3, 4)))
    with pytest.raises(ValueError):
        Mat3Mod(((1, 0, 0), (0, 1, 0), (0, 0, 7)), 7)
    with pytest.raises(ValueError):
        Mat3Mod(((1, 0, 0), (0, 1, 0), (0, 0, 1)), 1)
    with pytest.raises(ValueError):
        reduce_mod(m, 5) @ reduce_mod(m, 7)


def test_companion(q_matrix):
    assert q_matrix.to_list() == [[1, 1, 1], [1, 0, 0], [0, 1, 0]], f"Got {q_matrix.to_list()}"
    assert companion(preset("narayana", 4)).to_list() == [[4, 0, 1], [1, 0, 0], [0, 1, 0]]
    assert companion(make_params(3, 2, 1, 0, 1, 1)).to_list() == [[0, 1, 1], [1, 0, 0], [0, 1, 0]]


def test_mat_mul(q_matrix):
    x = Mat3.of([[2, -1, 0], [5, 3, 7], [-4, 1, 1]])
    assert mat_mul(Mat3.identity(), x) == x
    assert mat_mul(x, Mat3.zero()) == Mat3.zero()
    expected = [[2, 2, 1], [1, 1, 1], [1, 0, 0]]
    assert mat_mul(q_matrix, q_matrix).to_list() == expected, f"Expected {expected}"


def test_mat_pow(q_matrix):
    assert mat_pow(q_matrix, 0) == Mat3.identity()
    assert mat_pow(q_matrix, 1) == q_matrix
    assert mat_pow(q_matrix, 2) == q_matrix @ q_matrix
    expected = [[13, 11, 7], [7, 6, 4], [4, 3, 2]]
    assert mat_pow(q_matrix, 5).to_list() == expected, f"Expected {expected}, got {mat_pow(q_matrix, 5).to_list()}"

    with pytest.raises(ValueError):
        mat_pow(q_matrix, -1)
    with pytest.raises(TypeError):
        mat_pow(q_matrix, 2.0)


def test_mat_pow_mod(tribonacci, q_matrix):
    identity_mod_7 = mat_pow_mod(q_matrix, 0, 7)
    assert isinstance(identity_mod_7, Mat3Mod)
    assert identity_mod_7.to_list() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    expected = [[3, 1, 2], [2, 1, 4], [4, 3, 2]]
    assert mat_pow_mod(q_matrix, 5, 5).to_list() == expected, f"Expected {expected}"

    # bottom-left entry of Q^n is T_n
    modulus = 998244353
    n = 10**5
    result = mat_pow_mod(q_matrix, n, modulus)[2, 0]
    expected = term_iterative_mod(tribonacci, n, modulus)
    assert result == expected, f"Expected {expected}, got {result}"

    with pytest.raises(ValueError):
        mat_pow_mod(q_matrix, 5, 1)


def test_mat_pow_mod_large_exponent(q_matrix):
    modulus = 1073741789
    n = 10**9
    elapsed = []
    for _ in range(3):
        start = time.perf_counter()
        result = mat_pow_mod(q_matrix, n, modulus)
        elapsed.append(time.perf_counter() - start)
    assert min(elapsed) < 0.05, f"Expected under 50 ms, got {min(elapsed) * 1000:.1f} ms"

    half = mat_pow_mod(q_matrix, n // 2, modulus)
    assert result == half @ half, "Expected Q^n to equal the square of Q^(n/2)"
    assert all(0 <= a < modulus for row in result.rows for a in row)


def test_u_form():
    assert u_form(1, 1, 1, 2).to_list() == [[2, 2, 1], [1, 1, 1], [1, 0, 0]]
    for k in range(-3, 6):
        expected = [[k * k, 1, k], [k, 0, 1], [1, 0, 0]]
        assert u_form(k, 0, 1, 2).to_list() == expected, f"Expected {expected} for {k=}"
    assert u_form(0, 1, 1, 3) == mat_pow(companion(preset("padovan")), 3)

    with pytest.raises(ValueError):
        u_form(1, 1, 1, 1)


def test_window_matrices(tribonacci):
    assert v_shift_matrix(tribonacci, 0).to_list() == [[2, 2, 1], [1, 1, 1], [1, 0, 0]]
    assert v_shift_matrix(preset("padovan"), 1).to_list() == [[1, 2, 1], [1, 1, 1], [1, 1, 0]]

    # s = t = 1 makes F the identity
    assert st_form_matrix(tribonacci, 0) == v_shift_matrix(tribonacci, 0)
    assert factor_matrix(tribonacci) == Mat3.identity()

    p = make_params(0, 0, 1, 1, 0, 2)
    expected = [[1, 2, 2], [1, 0, 2], [1, 0, 0]]
    assert st_form_matrix(p, 0).to_list() == expected, f"Expected {expected}, got {st_form_matrix(p, 0).to_list()}"


def test_det3(q_matrix):
    assert det3(Mat3.identity()) == 1
    assert det3(Mat3.zero()) == 0
    for r, s, t in ((1, 1, 1), (2, -3, 5), (0, 4, -7), (3, 3, 0)):
        m = companion(make_params(0, 0, 1, r, s, t))
        assert det3(m) == t, f"Expected det={t}, got {det3(m)}"
    for n in range(2, 11):
        assert det3(u_form(1, 1, 1, n)) == 1, f"Expected 1 at {n=}"


def test_term_by_matrix(tribonacci):
    assert term_by_matrix(tribonacci, 7) == 13, f"Expected 13, got {term_by_matrix(tribonacci, 7)}"
    p = make_params(1, 2, 3, 2, 1, 1)
    assert term_by_matrix(p, 0) == 1
    assert term_by_matrix(p, 50) == term_iterative(p, 50)

    p = make_params(-7, 4, 2, -3, 5, 2)
    for n in range(0, 200, 17):
        expected = term_iterative_mod(p, n, 1009)
        assert term_by_matrix_mod(p, n, 1009) == expected, f"Expected {expected} at {n=}"


def test_cassini_lhs(tribonacci):
    for n in range(2, 30):
        assert cassini_u_lhs(1, 1, 1, n) == 1, f"Expected 1 at {n=}"
        assert cassini_u_lhs(2, 3, 5, n) == 5 ** (n - 2), f"Expected 5^{n - 2} at {n=}"
    assert cassini_u_lhs(1, 0, 0, 2) == 1
    assert cassini_u_lhs(1, 0, 0, 3) == 0

    p = make_params(1, 1, 1, 1, 1, 1)
    for n in range(20):
        assert cassini_v_lhs(p, n) == 4, f"Expected 4 at {n=}, got {cassini_v_lhs(p, n)}"

    with pytest.raises(ValueError):
        cassini_u_lhs(1, 1, 1, 1)


def test_matrix_quadratic(tribonacci):
    p = make_params(5, -2, 3, 1, 2, 1)
    m = companion(p)
    base = matrix_quadratic(p, 0)
    for n in range(15):
        assert matrix_quadratic(p, n) == st_form_matrix(p, n), f"Expected the (s, t)-form at {n=}"
        assert mat_pow(m, n) @ base == matrix_quadratic(p, n), f"Expected M^n Z_0 = Z_n at {n=}"

    narayana = preset("narayana", 3)
    u = fundamental(narayana)
    for n in range(2, 15):
        assert matrix_quadratic(u, n - 2) == mat_pow(companion(narayana), n), f"Expected M^n at {n=}"

    assert det3(factor_matrix(p)) == p.t**2


@settings(max_examples=50, deadline=None)
@given(r=small, s=small, t=small, n=st.integers(min_value=2, max_value=30))
def test_u_form_is_matrix_power(r, s, t, n):
    m = companion(make_params(0, 0, 1, r, s, t))
    power = mat_pow(m, n)
    assert power == u_form(r, s, t, n)
    assert det3(power) == t**n
    assert cassini_u_lhs(r, s, t, n) == t ** (n - 2)


@settings(max_examples=50, deadline=None)
@given(p=params_strategy, n=st.integers(min_value=0, max_value=30))
def test_window_identities(p, n):
    power = mat_pow(companion(p), n)
    assert st_form_matrix(p, n) == v_shift_matrix(p, n) @ factor_matrix(p)
    assert power @ st_form_matrix(p, 0) == st_form_matrix(p, n)
    assert power @ v_shift_matrix(p, 0) == v_shift_matrix(p, n)
    assert cassini_v_lhs(p, n) == p.t**n * cassini_seed(p)


@settings(max_examples=30, deadline=None)
@given(p=params_strategy, n=st.integers(min_value=0, max_value=60), modulus=st.integers(min_value=2, max_value=10**6))
def test_modular_consistency(p, n, modulus):
    m = companion(p)
    assert mat_pow_mod(m, n, modulus) == reduce_mod(mat_pow(m, n), modulus)
    assert term_by_matrix_mod(p, n, modulus) == term_iterative(p, n) % modulus
