import numpy as np
import pytest

import oracles
from conftest import FIXTURES, algebra, category
from frobtft.errors import InputError, NotSpecial
from frobtft.frobcat import (
    bimodule_hom_dim,
    from_vect,
    induced_bimodule,
    left_centre,
    load_algebra_object,
    prop_za_dimension_check,
    regular_bimodule,
    right_centre,
    unit_algebra,
    verify_modular_commutation,
    z_tilde,
    z_tilde_json,
)
from frobtft.fusioncat import modular_data

CATEGORIES = ["trivial", "pointed_z2", "pointed_z3", "semion", "fibonacci", "ising"]


def obj(name):
    return load_algebra_object(FIXTURES / "algebra_objects" / f"{name}.json")


@pytest.mark.parametrize("cat", CATEGORIES)
def test_unit_algebra_axioms(cat):
    flags = unit_algebra(category(cat)).check_axioms()
    assert flags["associative"] and flags["unital"] and flags["frobenius"]
    assert flags["symmetric"] and flags["special"]
    assert flags["gamma"] == "1" and flags["gamma_prime"] == "1"


@pytest.mark.parametrize("cat", CATEGORIES)
def test_z_tilde_of_unit_is_identity(cat):
    c = category(cat)
    assert np.array_equal(z_tilde(unit_algebra(c)), np.eye(c.rank, dtype=int))


def test_group_algebra_in_pointed_z2():
    A = obj("z2_group")
    flags = A.check_axioms()
    assert all(flags[k] for k in ("associative", "unital", "symmetric", "special"))
    z = z_tilde(A)
    assert z.tolist() == [[1, 1], [1, 1]]
    assert z.sum(axis=0).tolist() == [2, 2] and z.sum(axis=1).tolist() == [2, 2]


def test_corrupt_group_algebra_has_witness():
    A = obj("z2_group_corrupt")
    flags = A.check_axioms()
    assert not flags["associative"]
    assert flags["associativity_failures"]
    with pytest.raises(InputError):
        z_tilde(A)
    with pytest.raises(NotSpecial):
        A.normalize_special()


def test_z3_group_gives_charge_conjugation():
    c = category("pointed_z3")
    z = z_tilde(obj("z3_group"))
    want = np.array([[1 if c.dual[i] == j else 0 for j in range(3)] for i in range(3)])
    assert np.array_equal(z, want)


def test_ising_1psi():
    A = obj("ising_1psi")
    flags = A.check_axioms()
    assert flags["special"] and flags["gamma_prime"] == "2"
    N = A.normalize_special()
    assert N.check_axioms()["gamma_prime"] == "1"
    assert np.array_equal(z_tilde(A), np.eye(3, dtype=int))


@pytest.mark.parametrize("name", oracles.SPECIAL_NAMES)
def test_vect_z_tilde_is_centre_dimension(name):
    A = from_vect(algebra(name), category("trivial"))
    assert z_tilde(A).tolist() == [[oracles.CENTRE_DIM[name]]]


def test_bimodule_endomorphisms():
    triv = category("trivial")
    assert bimodule_hom_dim(regular_bimodule(unit_algebra(triv)), regular_bimodule(unit_algebra(triv))) == 1
    for name, want in (("kz2", 2), ("m2", 1)):
        A = from_vect(algebra(name), triv)
        assert bimodule_hom_dim(regular_bimodule(A), regular_bimodule(A)) == want


def test_induced_bimodule_in_pointed_z2():
    A = obj("z2_group")
    g = A.cat.label_index("g")
    B = induced_bimodule(A, g, g)
    assert B.axiom_failures() == []
    assert regular_bimodule(A).axiom_failures() == []
    assert bimodule_hom_dim(B, regular_bimodule(A)) == 1


@pytest.mark.parametrize("name", ["ising_1psi", "z3_group", "fibonacci_unit"])
def test_induced_bimodules_satisfy_axioms(name):
    A = obj(name)
    r = A.cat.rank
    for u in range(r):
        for v in range(r):
            assert induced_bimodule(A, u, v).axiom_failures() == []


@pytest.mark.parametrize("name", ["z2_group", "z3_group", "ising_1psi", "trivial_m2", "fibonacci_unit", "semion_unit"])
def test_z_tilde_commutes_with_modular_group(name):
    A = obj(name)
    res = verify_modular_commutation(z_tilde(A), modular_data(A.cat, check_modular=False))
    assert res["passed"], res


def test_incremented_z_tilde_fails_commutation():
    A = obj("z2_group")
    z = z_tilde(A)
    z[0, 0] += 1
    res = verify_modular_commutation(z, modular_data(A.cat, check_modular=False))
    assert not res["passed"]
    assert res["S_residual_entries"]


def test_centres_in_trivial_category():
    triv = category("trivial")
    assert left_centre(unit_algebra(triv)) == [1]
    assert left_centre(from_vect(algebra("m2"), triv)) == [1]
    assert right_centre(from_vect(algebra("m2"), triv)) == [1]
    assert left_centre(from_vect(algebra("kz2"), triv)) == [2]


def test_left_and_right_centre_of_group_algebra():
    assert left_centre(obj("z2_group")) == [1, 1]
    assert right_centre(obj("z2_group")) == [1, 1]


@pytest.mark.parametrize(
    "name", ["trivial_unit", "fibonacci_unit", "ising_unit", "semion_unit", "pointed_z3_unit", "z2_group", "z3_group"]
)
def test_prop_za(name):
    res = prop_za_dimension_check(obj(name))
    assert res["passed"], res
    assert res["left_centre"] == res["z_tilde"]


def test_prop_za_rank_limit():
    with pytest.raises(InputError):
        prop_za_dimension_check(obj("ising_unit"), max_labels=2)


def test_z_tilde_json():
    A = obj("z2_group")
    assert z_tilde_json(z_tilde(A), A.cat) == {"labels": ["1", "g"], "matrix": [[1, 1], [1, 1]]}


def test_missing_category_reference(tmp_path):
    p = tmp_path / "x.json"
    p.write_text('{"mult": {"1": 1}, "unit": ["1"]}')
    with pytest.raises(InputError):
        load_algebra_object(p)
