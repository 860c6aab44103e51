"""Independent reference computations for the test suite.

Nothing here imports the package.  Algebras are read straight from the JSON
fixtures into ``Fraction`` dictionaries and every property is checked by plain
loops over the definition.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import product
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "frobtft" / "fixtures"

VECT_NAMES = ["k", "kz2", "kz3", "ks3", "m2", "kxk", "dual_numbers", "kxk_skew"]
SPECIAL_NAMES = ["k", "kz2", "kz3", "ks3", "m2", "kxk"]

# frozen classification of the Vect fixtures:
# (associative, unital, frobenius, symmetric, special, commutative)
CLASSIFICATION = {
    "k": (True, True, True, True, True, True),
    "kz2": (True, True, True, True, True, True),
    "kz3": (True, True, True, True, True, True),
    "ks3": (True, True, True, True, True, False),
    "m2": (True, True, True, True, True, False),
    "kxk": (True, True, True, True, True, True),
    "dual_numbers": (True, True, True, True, False, True),
    "kxk_skew": (True, True, True, True, False, True),
}

CENTRE_DIM = {"k": 1, "kz2": 2, "kz3": 3, "ks3": 3, "m2": 1, "kxk": 2, "dual_numbers": 2, "kxk_skew": 2}

# eps(p) for the primitive central idempotents p after normalization, by hand.
# A group algebra normalizes to eps = |G| delta_e and p_rho has eps = d_rho^2;
# M_n normalizes to eps = n tr, so its single idempotent has eps = n^2.
CENTRAL_WEIGHTS = {
    "k": [1],
    "kz2": [1, 1],
    "kz3": [1, 1, 1],
    "ks3": [1, 1, 4],
    "m2": [4],
    "kxk": [1, 1],
}


def closed_value(name: str, genus: int) -> Fraction:
    """Genus-g partition function ``sum_p eps(p)^(1-g)`` of a semisimple fixture."""
    return sum((Fraction(w) ** (1 - genus) for w in CENTRAL_WEIGHTS[name]), Fraction(0))


# ---------------------------------------------------------------------------
# raw algebras
# ---------------------------------------------------------------------------


class RawAlgebra:
    def __init__(self, n, mult, unit, counit, name=""):
        self.n = n
        self.mult = mult  # dict (a, b) -> {c: coeff}
        self.unit = unit
        self.counit = counit
        self.name = name

    def mul(self, x, y):
        out = [Fraction(0)] * self.n
        for a, b in product(range(self.n), repeat=2):
            if x[a] and y[b]:
                for c, v in self.mult.get((a, b), {}).items():
                    out[c] += x[a] * y[b] * v
        return out

    def e(self, i):
        v = [Fraction(0)] * self.n
        v[i] = Fraction(1)
        return v

    def eps(self, x):
        return sum((a * b for a, b in zip(self.counit, x)), Fraction(0))


def raw_algebra(name: str) -> RawAlgebra:
    doc = json.loads((FIXTURES / "algebras" / f"{name}.json").read_text())
    n = int(doc["dim"])
    mult: dict = {}
    for a, b, c, v in doc["mult"]:
        mult.setdefault((int(a), int(b)), {})[int(c)] = Fraction(v)
    return RawAlgebra(n, mult, [Fraction(x) for x in doc["unit"]], [Fraction(x) for x in doc["counit"]], name)


# ---------------------------------------------------------------------------
# linear algebra over Fraction
# ---------------------------------------------------------------------------


def frac_rank(rows) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    r, cols = 0, len(m[0])
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def frac_inverse(mat):
    n = len(mat)
    m = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


# ---------------------------------------------------------------------------
# axioms by definition
# ---------------------------------------------------------------------------


def brute_axioms(A: RawAlgebra) -> tuple[bool, ...]:
    n = A.n
    basis = [A.e(i) for i in range(n)]
    assoc = all(
        A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z)) for x, y, z in product(basis, repeat=3)
    )
    unital = all(A.mul(A.unit, x) == x and A.mul(x, A.unit) == x for x in basis)
    comm = all(A.mul(x, y) == A.mul(y, x) for x, y in product(basis, repeat=2))
    kappa = [[A.eps(A.mul(x, y)) for y in basis] for x in basis]
    frob = frac_rank(kappa) == n
    if not frob:
        return assoc, unital, False, False, False, comm
    sym = all(kappa[i][j] == kappa[j][i] for i in range(n) for j in range(n))
    special = special_constants(A)[1] not in (None, 0) and special_constants(A)[0] != 0
    return assoc, unital, frob, sym, special, comm


def dual_basis(A: RawAlgebra):
    """``e^j`` with ``eps(e_i e^j) = delta_ij``."""
    n = A.n
    kappa = [[A.eps(A.mul(A.e(i), A.e(j))) for j in range(n)] for i in range(n)]
    inv = frac_inverse(kappa)
    # e^j = sum_k inv[k][j] e_k
    return [[inv[k][j] for k in range(n)] for j in range(n)]


def special_constants(A: RawAlgebra):
    """``(eps(1), gamma')`` where ``m(Delta(x)) = gamma' x`` if such a number exists."""
    n = A.n
    gamma = A.eps(A.unit)
    dual = dual_basis(A)
    gp = None
    for x in range(n):
        # m o Delta(e_x) = sum_i e_x e_i e^i
        acc = [Fraction(0)] * n
        for i in range(n):
            t = A.mul(A.mul(A.e(x), A.e(i)), dual[i])
            acc = [p + q for p, q in zip(acc, t)]
        for y in range(n):
            want = acc[x] if y == x else Fraction(0)
            if acc[y] != want:
                return gamma, None
        if gp is None:
            gp = acc[x]
        elif acc[x] != gp:
            return gamma, None
    return gamma, gp


def normalized(A: RawAlgebra) -> RawAlgebra:
    _, gp = special_constants(A)
    return RawAlgebra(A.n, A.mult, A.unit, [c * gp for c in A.counit], A.name)


def centre_dim(A: RawAlgebra) -> int:
    n = A.n
    rows = []
    for x in range(n):
        for out in range(n):
            # coefficient of e_out in z e_x - e_x z, as a row over z
            row = [A.mult.get((z, x), {}).get(out, 0) - A.mult.get((x, z), {}).get(out, 0) for z in range(n)]
            if any(row):
                rows.append(row)
    return n - frac_rank(rows)


def tensor(A: RawAlgebra, B: RawAlgebra) -> RawAlgebra:
    mult: dict = {}
    for (a1, b1), ca in A.mult.items():
        for (a2, b2), cb in B.mult.items():
            key = (a1 * B.n + a2, b1 * B.n + b2)
            d = mult.setdefault(key, {})
            for c1, v1 in ca.items():
                for c2, v2 in cb.items():
                    d[c1 * B.n + c2] = d.get(c1 * B.n + c2, 0) + v1 * v2
    unit = [x * y for x in A.unit for y in B.unit]
    counit = [x * y for x in A.counit for y in B.counit]
    return RawAlgebra(A.n * B.n, mult, unit, counit, f"{A.name}*{B.name}")
