from fractions import Fraction
from itertools import combinations_with_replacement, product

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
from conftest import algebra, normalized
from frobtft.errors import InputError, NotSpecial
from frobtft.exactmath import Q, exact_array, identity, inverse, matmul, rank
from frobtft.frobvect import (
    VectAlgebra,
    algebra_from_json,
    center,
    center_projector,
    check_axioms,
    handle_partition_function,
    is_normalized_special,
    normalize_special,
    tensor_algebra,
)


def flags(rep):
    return (rep.associative, rep.unital, rep.frobenius, rep.symmetric, rep.special, rep.commutative)


# --- helpers building algebras --------------------------------------------------


def block_algebra(sizes, weights):
    """``+ M_n`` with counit ``sum_i w_i tr_i``."""
    n = sum(s * s for s in sizes)
    mult = np.zeros((n, n, n), dtype=object)
    mult.fill(Q(0))
    unit, counit = [Q(0)] * n, [Q(0)] * n
    off = 0
    for s, w in zip(sizes, weights):
        idx = lambda i, j: off + i * s + j  # noqa: E731
        for i, j, k in product(range(s), repeat=3):
            mult[idx(i, j), idx(j, k), idx(i, k)] = Q(1)
        for i in range(s):
            unit[idx(i, i)] = Q(1)
            counit[idx(i, i)] = Q(w)
        off += s * s
    return VectAlgebra(mult, exact_array(unit), exact_array(counit), f"blocks{sizes}")


def change_basis(A, P):
    """The same algebra in the basis given by the columns of ``P``."""
    Pi = inverse(P)
    m = exact_array(np.einsum("ia,jb,ijk,ck->abc", P, P, A.mult, Pi))
    return VectAlgebra(m, matmul(Pi, A.unit.reshape(-1, 1)).reshape(-1), exact_array(P.T.dot(A.counit)), A.name)


entries = st.integers(min_value=-2, max_value=2)


@st.composite
def invertible(draw, n):
    rows = draw(st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n))
    m = exact_array(rows)
    assume(rank(m) == n)
    return m


# --- classification ---------------------------------------------------------------


@pytest.mark.parametrize("name", oracles.VECT_NAMES)
def test_classification_matches_brute_force(name):
    got = flags(check_axioms(algebra(name)))
    assert got == oracles.brute_axioms(oracles.raw_algebra(name))
    assert got == oracles.CLASSIFICATION[name]


def test_dual_numbers_not_special():
    rep = check_axioms(algebra("dual_numbers"))
    assert rep.frobenius and rep.symmetric and not rep.special
    assert rep.gamma == 0 and rep.gamma_prime is None


def test_m2_with_trace():
    rep = check_axioms(algebra("m2"))
    assert rep.symmetric and rep.special and rep.gamma_prime == 2


def test_degenerate_pairing_gives_radical_witness():
    A = algebra("dual_numbers")
    bad = VectAlgebra(A.mult, A.unit, exact_array([1, 0]), "bad")
    rep = check_axioms(bad)
    assert not rep.frobenius
    # the witness is x, which pairs to zero with everything
    assert rep.radical_witness == ["0", "1"]


@pytest.mark.parametrize("name", oracles.VECT_NAMES)
def test_frobenius_relations(name):
    assert check_axioms(algebra(name)).frobenius_relations


# --- normalization -----------------------------------------------------------------


@pytest.mark.parametrize("name", oracles.SPECIAL_NAMES)
def test_normalization(name):
    A = normalize_special(algebra(name))
    rep = check_axioms(A)
    assert rep.gamma == A.dim and rep.gamma_prime == 1
    raw = oracles.normalized(oracles.raw_algebra(name))
    assert list(A.counit) == raw.counit


def test_normalization_examples():
    assert list(normalize_special(algebra("k")).counit) == [1]
    assert list(normalize_special(algebra("m2")).counit) == [2, 0, 0, 2]
    assert list(normalize_special(algebra("kz2")).counit) == [2, 0]


@pytest.mark.parametrize("name", ["dual_numbers", "kxk_skew"])
def test_non_special_cannot_normalize(name):
    with pytest.raises(NotSpecial):
        normalize_special(algebra(name))
    assert not is_normalized_special(algebra(name))


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=2), min_size=1, max_size=3),
    st.integers(min_value=1, max_value=5),
)
def test_normalizing_block_algebras(sizes, scale):
    A = block_algebra(sizes, [scale * s for s in sizes])
    rep = check_axioms(A)
    assert rep.symmetric and rep.special
    B = normalize_special(A)
    rep = check_axioms(B)
    assert rep.gamma == A.dim and rep.gamma_prime == 1
    # the normalized counit is sum_i n_i tr_i
    assert B.counit.sum() == sum(s * s for s in sizes)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=4), min_size=2, max_size=2))
def test_unequal_block_weights_are_not_special(ws):
    special = Fraction(1, ws[0]) == Fraction(2, ws[1])
    A = block_algebra([1, 2], ws)
    assert check_axioms(A).special == special


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["kz2", "kxk", "dual_numbers", "kxk_skew"]), st.data())
def test_classification_is_basis_independent(name, data):
    A = algebra(name)
    P = data.draw(invertible(A.dim))
    B = change_basis(A, P)
    assert flags(check_axioms(B)) == flags(check_axioms(A))
    assert center(B).shape[1] == center(A).shape[1]


@settings(max_examples=10, deadline=None)
@given(st.data())
def test_m2_basis_change_keeps_closed_values(data):
    A = normalized("m2")
    B = change_basis(A, data.draw(invertible(4)))
    assert is_normalized_special(B)
    assert [handle_partition_function(B, g) for g in range(3)] == [4, 1, Fraction(1, 4)]


# --- centre ------------------------------------------------------------------------


@pytest.mark.parametrize("name", oracles.VECT_NAMES)
def test_centre_dimension(name):
    assert center(algebra(name)).shape[1] == oracles.CENTRE_DIM[name]
    assert center(algebra(name)).shape[1] == oracles.centre_dim(oracles.raw_algebra(name))


def test_centre_projector_examples():
    assert center_projector(normalized("k")).tolist() == [[1]]
    assert np.array_equal(center_projector(normalized("kz2")), identity(2))
    p = center_projector(normalized("m2"))
    assert rank(p) == 1
    assert list(p[:, 0]) == [Fraction(1, 2), 0, 0, Fraction(1, 2)]


@pytest.mark.parametrize("name", oracles.SPECIAL_NAMES)
def test_centre_projector_is_idempotent_onto_centre(name):
    p = center_projector(normalized(name))
    assert np.array_equal(matmul(p, p), p)
    assert rank(p) == oracles.CENTRE_DIM[name]


def test_centre_projector_needs_normalization():
    with pytest.raises(InputError):
        center_projector(algebra("m2"))


PAIRS = list(combinations_with_replacement(["k", "kz2", "kz3", "ks3", "m2", "kxk", "dual_numbers", "kxk_skew"], 2))


@pytest.mark.parametrize("a,b", PAIRS)
def test_centre_is_multiplicative(a, b):
    T = tensor_algebra(algebra(a), algebra(b))
    got = center(T).shape[1]
    assert got == oracles.CENTRE_DIM[a] * oracles.CENTRE_DIM[b]
    assert got == oracles.centre_dim(oracles.tensor(oracles.raw_algebra(a), oracles.raw_algebra(b)))


def test_centre_of_ks3_times_kz2():
    assert center(tensor_algebra(algebra("ks3"), algebra("kz2"))).shape[1] == 6


def test_unit_tensor_is_isomorphic():
    A = algebra("m2")
    T = tensor_algebra(algebra("k"), A)
    assert np.array_equal(T.mult, A.mult)
    assert list(T.counit) == list(A.counit)


# --- closed values -----------------------------------------------------------------


@pytest.mark.parametrize("name", oracles.SPECIAL_NAMES)
def test_handle_operator_matches_idempotent_weights(name):
    A = normalized(name)
    assert [handle_partition_function(A, g) for g in range(4)] == [oracles.closed_value(name, g) for g in range(4)]


def test_torus_counts_centre():
    for name in oracles.SPECIAL_NAMES:
        assert handle_partition_function(normalized(name), 1) == oracles.CENTRE_DIM[name]


# --- io -------------------------------------------------------------------------------


def test_json_round_trip():
    for name in oracles.VECT_NAMES:
        A = algebra(name)
        B = algebra_from_json(A.to_json())
        assert np.array_equal(A.mult, B.mult)
        assert list(A.counit) == list(B.counit)


def test_malformed_algebra():
    with pytest.raises(InputError):
        algebra_from_json({"dim": 2, "mult": [[0, 0, 5, "1"]], "unit": ["1", "0"], "counit": ["1", "0"]})
    with pytest.raises(InputError):
        algebra_from_json({"dim": 2, "unit": ["1"]})
