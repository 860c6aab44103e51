"""The nine acceptance criteria, one test each.

Every criterion prints a single ``PASS``/``FAIL`` line with its wall time and
must finish within sixty seconds.  Run directly with ``python3
tests/test_acceptance.py`` for the summary alone.
"""

import time
from itertools import combinations_with_replacement

import numpy as np
import pytest

import oracles
from conftest import FIXTURES, algebra, category, normalized, worldsheet
from frobtft.evaluator import (
    bubble_pair,
    bulk_state_space,
    closed_partition_function,
    correlator,
    triangulation_family,
    verify_factorization,
    verify_triangulation_independence,
)
from frobtft.frobcat import (
    from_vect,
    load_algebra_object,
    prop_za_dimension_check,
    unit_algebra,
    verify_modular_commutation,
    z_tilde,
)
from frobtft.frobvect import (
    center,
    check_axioms,
    handle_partition_function,
    normalize_special,
    tensor_algebra,
)
from frobtft.fusioncat import modular_data, verify_hexagon, verify_pentagon
from frobtft.exactmath import matmul, rank

LIMIT = 60.0
CATEGORIES = sorted(p.stem for p in (FIXTURES / "categories").glob("*.json"))
GOOD_CATEGORIES = [c for c in CATEGORIES if not c.endswith("_corrupt")]
OBJECTS = sorted(p.stem for p in (FIXTURES / "algebra_objects").glob("*.json") if "corrupt" not in p.stem)


def obj(name):
    return load_algebra_object(FIXTURES / "algebra_objects" / f"{name}.json")


def flags(rep):
    return (rep.associative, rep.unital, rep.frobenius, rep.symmetric, rep.special, rep.commutative)


# --- the criteria; each returns a list of failure descriptions ------------------------


def axiom_suite():
    bad = []
    for name in oracles.VECT_NAMES:
        got = flags(check_axioms(algebra(name)))
        if got != oracles.brute_axioms(oracles.raw_algebra(name)) or got != oracles.CLASSIFICATION[name]:
            bad.append(name)
    return bad


def normalization():
    bad = []
    for name in oracles.SPECIAL_NAMES:
        A = normalize_special(algebra(name))
        rep = check_axioms(A)
        if rep.gamma != A.dim or rep.gamma_prime != 1:
            bad.append(name)
    return bad


def triangulation_independence():
    bad = []
    for sheet in ["sphere", "torus", "cylinder", "disk", "pants"]:
        X = worldsheet(sheet)
        fam = triangulation_family(X, 3)
        if len({T.canonical() for T in fam}) < 3:
            bad.append(f"{sheet}: fewer than 3 distinct triangulations")
        for name in oracles.SPECIAL_NAMES:
            A = normalized(name)
            bulk = bulk_state_space(A)
            cors = [correlator(X, A, T, bulk) for T in fam]
            if any(c != cors[0] for c in cors):
                bad.append(f"{sheet}/{name}")
    # the non-special control must break at least one bubble pair
    A = algebra("kxk_skew")
    broken = [
        s for s in ["sphere", "torus", "cylinder", "disk", "pants"]
        if not verify_triangulation_independence(worldsheet(s), A, *bubble_pair(worldsheet(s)), check=False)["passed"]
    ]
    if not broken:
        bad.append("negative control kxk_skew agreed on every bubble pair")
    return bad


def factorization():
    bad = []
    cuts = [("disk", "diameter"), ("strip", "across"), ("torus", "meridian"), ("cylinder", "core")]
    for name in oracles.SPECIAL_NAMES:
        A = normalized(name)
        for sheet, c in cuts:
            res = verify_factorization(worldsheet(sheet), c, A)
            if not res["passed"]:
                bad.append(f"{sheet}/{c}/{name}")
            if res["kind"] == "closed" and res["trace_dim"] != oracles.CENTRE_DIM[name]:
                bad.append(f"{sheet}/{c}/{name}: trace over {res['trace_dim']} states")
    return bad


def closed_surfaces():
    bad = []
    for name in oracles.SPECIAL_NAMES:
        A = normalized(name)
        if A.dim > 6:
            continue
        for g in range(3):
            v = closed_partition_function(A, g)
            if v != handle_partition_function(A, g) or v != oracles.closed_value(name, g):
                bad.append(f"{name} genus {g}")
        if correlator(worldsheet("torus"), A).value != oracles.CENTRE_DIM[name]:
            bad.append(f"{name} torus")
    return bad


def z_tilde_machinery():
    bad = []
    for c in CATEGORIES:
        cat = category(c)
        if not np.array_equal(z_tilde(unit_algebra(cat)), np.eye(cat.rank, dtype=int)):
            bad.append(f"Z(1) in {c}")
    for name in OBJECTS:
        A = obj(name)
        if not verify_modular_commutation(z_tilde(A), modular_data(A.cat, check_modular=False))["passed"]:
            bad.append(f"commutation {name}")
    triv = category("trivial")
    for name in oracles.SPECIAL_NAMES:
        if z_tilde(from_vect(algebra(name), triv)).tolist() != [[oracles.CENTRE_DIM[name]]]:
            bad.append(f"Vect {name}")
    for a, b in combinations_with_replacement(oracles.VECT_NAMES, 2):
        if center(tensor_algebra(algebra(a), algebra(b))).shape[1] != oracles.CENTRE_DIM[a] * oracles.CENTRE_DIM[b]:
            bad.append(f"centre {a}*{b}")
    return bad


def proposition_za():
    bad = []
    for name in ["trivial_unit", "fibonacci_unit", "ising_unit", "z2_group"]:
        res = prop_za_dimension_check(obj(name))
        if not res["passed"] or res["left_centre"] != res["z_tilde"]:
            bad.append(name)
    return bad


def category_verifiers():
    bad = []
    for c in GOOD_CATEGORIES:
        if verify_pentagon(category(c)) or verify_hexagon(category(c)):
            bad.append(c)
    fib = verify_pentagon(category("fibonacci_corrupt"))
    if ("t", "t", "t", "t", "1") not in [tuple(x) for x in fib]:
        bad.append("fibonacci_corrupt pentagon witness")
    ising = verify_hexagon(category("ising_corrupt"))
    if not ising or not all(len(w) > 1 for w in ising):
        bad.append("ising_corrupt hexagon witness")
    return bad


def bulk_state_space_rank():
    bad = []
    for name in oracles.SPECIAL_NAMES:
        b = bulk_state_space(normalized(name))
        p = b.projector
        if rank(p) != center(normalized(name)).shape[1] or not np.array_equal(matmul(p, p), p):
            bad.append(name)
    return bad


CRITERIA = [
    (1, "axiom suite", axiom_suite),
    (2, "normalization", normalization),
    (3, "triangulation independence", triangulation_independence),
    (4, "factorization", factorization),
    (5, "closed-surface state sums", closed_surfaces),
    (6, "Z-tilde machinery", z_tilde_machinery),
    (7, "proposition ZA (dimensions)", proposition_za),
    (8, "category verifiers", category_verifiers),
    (9, "bulk state space", bulk_state_space_rank),
]


def run_criterion(number, title, fn):
    t = time.perf_counter()
    bad = fn()
    dt = time.perf_counter() - t
    ok = not bad and dt < LIMIT
    line = f"criterion {number} {title}: {'PASS' if ok else 'FAIL'} ({dt:.2f}s)"
    if bad:
        line += " " + "; ".join(bad[:5])
    return ok, dt, bad, line


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn, capsys):
    ok, dt, bad, line = run_criterion(number, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert bad == []
    assert dt < LIMIT


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for r in results:
        print(r[3])
    raise SystemExit(0 if all(r[0] for r in results) else 1)
