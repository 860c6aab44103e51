from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobtft.errors import ConductorMismatch, InputError, MissingSqrtWitness
from frobtft.exactmath import (
    Q,
    Scalar,
    SqrtRegistry,
    Tensor,
    column_basis,
    contract,
    contract_network,
    cyclotomic_polynomial,
    euler_phi,
    exact_array,
    identity,
    inverse,
    kernel,
    matmul,
    parse_scalar,
    rank,
    scalar_json,
    simplify,
    solve,
)

CONDUCTORS = [3, 4, 5, 8, 12, 16, 20]

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def scalars(draw, conductor=None):
    n = conductor or draw(st.sampled_from(CONDUCTORS))
    return Scalar([draw(small) for _ in range(euler_phi(n))], n)


@st.composite
def scalar_triples(draw):
    n = draw(st.sampled_from(CONDUCTORS))
    return tuple(draw(scalars(n)) for _ in range(3))


def rational_matrix(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(exact_array)


# --- field arithmetic -------------------------------------------------------


def test_root_identities():
    z8 = Scalar.zeta(8)
    assert (z8 + 1 / z8) ** 2 == 2
    assert Scalar.rational(Fraction(1, 3)) + Fraction(2, 3) == 1
    assert Scalar.zeta(5) * Scalar.zeta(5, 4) == 1


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert [euler_phi(n) for n in (1, 5, 8, 12, 16, 20)] == [1, 4, 4, 4, 8, 8]


@settings(max_examples=60, deadline=None)
@given(scalar_triples())
def test_ring_axioms(xyz):
    x, y, z = xyz
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0
    assert x * 1 == x


@settings(max_examples=60, deadline=None)
@given(scalars())
def test_inverse_and_conjugation(x):
    if x:
        assert x * x.inverse() == 1
        assert (x / x) == 1
    assert x.conj().conj() == x
    assert abs(x.conj().to_complex() - x.to_complex().conjugate()) < 1e-9


@settings(max_examples=40, deadline=None)
@given(scalar_triples())
def test_complex_embedding_is_a_homomorphism(xyz):
    x, y, _ = xyz
    assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-8
    assert abs((x + y).to_complex() - (x.to_complex() + y.to_complex())) < 1e-9


@settings(max_examples=30, deadline=None)
@given(scalars(4))
def test_lift_preserves_arithmetic(x):
    y = x.lift(20)
    assert y.conductor == 20
    assert y == x
    assert (y * y) == (x * x).lift(20)


def test_conductor_mismatch_raises():
    with pytest.raises(ConductorMismatch):
        Scalar.zeta(5) + Scalar.zeta(8)
    # rationals mix with everything
    assert Scalar.zeta(5) + Scalar.rational(1, 8) == Scalar.zeta(5) + 1


def test_parse_forms():
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("z^2", 4) == -1
    assert parse_scalar("1 - z", 8) == 1 - Scalar.zeta(8)
    assert parse_scalar({"conductor": 4, "coeffs": ["0", "1"]}, 8) == Scalar.zeta(8, 2)
    with pytest.raises(InputError):
        parse_scalar(True)


@settings(max_examples=40, deadline=None)
@given(scalars())
def test_json_round_trip(x):
    assert parse_scalar(scalar_json(x), x.conductor) == x


def test_simplify_collapses_rationals():
    assert type(simplify(Scalar.rational(2, 8))) is type(Q(2))
    assert simplify(3) == 3 and type(simplify(3)) is type(Q(3))
    assert isinstance(simplify(Scalar.zeta(8)), Scalar)


# --- square roots -------------------------------------------------------------


def test_declared_sqrt():
    reg = SqrtRegistry()
    z8 = Scalar.zeta(8)
    w = z8 + 1 / z8
    assert reg.declare(2, w) == w
    assert reg.declare(1, 1) == 1
    assert reg.sqrt(2) == w


def test_sqrt_choice_is_sticky():
    reg = SqrtRegistry()
    assert reg.declare(1, -1) == -1
    assert reg.declare(1, 1) == -1
    assert reg.sqrt(1) == -1


def test_sqrt_errors():
    reg = SqrtRegistry()
    with pytest.raises(InputError):
        reg.declare(2, 1)
    with pytest.raises(MissingSqrtWitness):
        reg.sqrt(3)


# --- linear algebra -----------------------------------------------------------


def test_kernel_examples():
    assert kernel(identity(2)).shape == (2, 0)
    assert kernel(exact_array([[0, 0]])).shape == (2, 2)
    k = kernel(exact_array([[1, 1], [1, 1]]))
    assert k.shape == (2, 1) and k[0, 0] == -k[1, 0] != 0


@settings(max_examples=40, deadline=None)
@given(rational_matrix(3, 4))
def test_rank_nullity_and_kernel(m):
    k = kernel(m)
    assert rank(m) + k.shape[1] == 4
    assert all(x == 0 for x in matmul(m, k).reshape(-1))


@settings(max_examples=40, deadline=None)
@given(rational_matrix(4, 3))
def test_column_basis_reads_coordinates_at_pivots(m):
    b, piv = column_basis(m)
    assert b.shape[1] == rank(m)
    assert np.array_equal(b[piv], identity(len(piv)))
    # every column of m is the combination given by its pivot entries
    assert np.array_equal(matmul(b, m[piv]), m)


@settings(max_examples=30, deadline=None)
@given(rational_matrix(3, 3), rational_matrix(3, 2))
def test_solve_and_inverse(a, b):
    if rank(a) == 3:
        inv = inverse(a)
        assert np.array_equal(matmul(a, inv), identity(3))
        x = solve(a, b)
        assert np.array_equal(matmul(a, x), b)
    else:
        with pytest.raises(InputError):
            inverse(a)


@settings(max_examples=30, deadline=None)
@given(rational_matrix(3, 4), rational_matrix(4, 2))
def test_sparse_matmul_matches_dot(a, b):
    assert np.array_equal(matmul(a, b), exact_array(np.dot(a, b)))


def test_cyclotomic_matrix_inverse():
    i = Scalar.zeta(4)
    m = exact_array([[1, i], [i, 1]])
    assert np.array_equal(matmul(m, inverse(m)), identity(2))


# --- contraction --------------------------------------------------------------


def test_delta_contractions():
    d = identity(3)
    v = exact_array([1, 2, 3])
    assert list(contract_network([(d, ["a", "b"]), (v, ["b"])], ["a"])) == [1, 2, 3]
    assert contract_network([(d, ["a", "b"]), (d, ["a", "b"])]) == 3


def test_group_algebra_with_unit_gives_identity():
    m = np.zeros((2, 2, 2), dtype=object)
    for a, b in product(range(2), repeat=2):
        m[a, b, (a + b) % 2] = Q(1)
    unit = exact_array([1, 0])
    out = contract_network([(m, ["u", "x", "y"]), (unit, ["u"])], ["x", "y"])
    assert np.array_equal(out, identity(2))


@settings(max_examples=25, deadline=None)
@given(
    st.lists(small, min_size=12, max_size=12),
    st.lists(small, min_size=12, max_size=12),
)
def test_contract_matches_loop_oracle(xs, ys):
    a = exact_array(xs, (2, 3, 2))
    b = exact_array(ys, (3, 2, 2))
    got = contract(Tensor(a, "ijk"), Tensor(b, "jlm"), [(1, 0)])
    assert got.labels == ("i", "k", "l", "m")
    for i, k, l, m in product(range(2), repeat=4):
        want = sum((a[i, j, k] * b[j, l, m] for j in range(3)), Q(0))
        assert got.data[i, k, l, m] == want
    net = contract_network([(a, ["i", "j", "k"]), (b, ["j", "k", "m"])], ["m", "i"])
    for i, m in product(range(2), repeat=2):
        want = sum((a[i, j, k] * b[j, k, m] for j in range(3) for k in range(2)), Q(0))
        assert net[m, i] == want


def test_contract_dimension_mismatch():
    with pytest.raises(InputError):
        contract(Tensor(identity(2)), Tensor(identity(3)), [(0, 0)])
    with pytest.raises(InputError):
        contract_network([(identity(2), ["a", "b"])], ["a"])
