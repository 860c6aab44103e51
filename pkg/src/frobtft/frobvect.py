"""Finite-dimensional algebras over the scalar field (the Vect case).

An algebra is given by structure constants ``mult[a, b, c]`` (the coefficient
of ``e_c`` in ``e_a e_b``), a unit vector and a counit covector.  The
comultiplication is never an input: it is derived from the counit through the
pairing ``kappa(a, b) = eps(a b)`` and its inverse, the copairing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from itertools import product
from pathlib import Path
from typing import Any

import numpy as np

from .errors import InputError, NotSpecial
from .exactmath import (
    Q,
    column_basis,
    exact_array,
    identity,
    inverse,
    is_zero,
    kernel,
    matmul,
    parse_scalar,
    rank,
    scalar_json,
    simplify,
    zeros,
)

@dataclass
class VectAlgebra:
    mult: np.ndarray
    unit: np.ndarray
    counit: np.ndarray
    name: str = "algebra"
    basis_names: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        n = self.mult.shape[0]
        if self.mult.shape != (n, n, n) or self.unit.shape != (n,) or self.counit.shape != (n,):
            raise InputError("inconsistent algebra shapes")
        if not self.basis_names:
            self.basis_names = [f"e{i}" for i in range(n)]

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    # elementwise helpers ------------------------------------------------

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return exact_array(np.einsum("a,b,abc->c", x, y, self.mult))

    def basis_vector(self, i: int) -> np.ndarray:
        v = zeros(self.dim)
        v[i] = Q(1)
        return v

    def left_mult_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix of ``y -> x y``."""
        return exact_array(np.einsum("a,abc->cb", x, self.mult))

    def right_mult_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix of ``y -> y x``."""
        return exact_array(np.einsum("b,abc->ca", x, self.mult))

    # derived Frobenius data -----------------------------------------------

    @property
    def pairing(self) -> np.ndarray:
        """``kappa[a, b] = eps(e_a e_b)``."""
        return exact_array(np.einsum("abc,c->ab", self.mult, self.counit))

    @property
    def copairing(self) -> np.ndarray:
        """Inverse of the pairing; ``Q[a, b]`` is the coefficient of ``e_a (x) e_b``."""
        try:
            return inverse(self.pairing).T.copy()
        except InputError:
            raise InputError("pairing is degenerate; algebra is not Frobenius") from None

    @property
    def comult(self) -> np.ndarray:
        """``Delta[c, a, b]``: coefficient of ``e_a (x) e_b`` in ``Delta(e_c)``.

        ``Delta(x) = sum x e_i (x) e^i`` with ``e^i`` the kappa-dual basis.
        """
        q = self.copairing
        return exact_array(np.einsum("cid,ib->cdb", self.mult, q))

    def dual_basis(self) -> np.ndarray:
        """Rows ``e^i`` with ``kappa(e_i, e^j) = delta_ij``."""
        return inverse(self.pairing).T.copy()

    def to_json(self) -> dict:
        n = self.dim
        mult = [
            [a, b, c, scalar_json(self.mult[a, b, c])]
            for a, b, c in product(range(n), repeat=3)
            if self.mult[a, b, c] != 0
        ]
        return {
            "name": self.name,
            "dim": n,
            "mult": mult,
            "unit": [scalar_json(x) for x in self.unit],
            "counit": [scalar_json(x) for x in self.counit],
        }

def algebra_from_json(doc: dict, name: str = "algebra") -> VectAlgebra:
    try:
        n = int(doc["dim"])
        conductor = int(doc.get("conductor", 1))
        mult = zeros((n, n, n))
        for entry in doc["mult"]:
            a, b, c = (int(x) for x in entry[:3])
            mult[a, b, c] = simplify(parse_scalar(entry[3], conductor))
        unit = exact_array([parse_scalar(x, conductor) for x in doc["unit"]])
        counit = exact_array([parse_scalar(x, conductor) for x in doc["counit"]])
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed algebra fixture: {exc}") from exc
    return VectAlgebra(mult, unit, counit, str(doc.get("name", name)), list(doc.get("basis", [])))

def load_algebra(path: str | Path) -> VectAlgebra:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    return algebra_from_json(doc, name=path.stem)

# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------

@dataclass
class AxiomReport:
    associative: bool
    unital: bool
    frobenius: bool
    symmetric: bool
    special: bool
    commutative: bool
    gamma: Any = None
    gamma_prime: Any = None
    radical_witness: list | None = None
    frobenius_relations: bool | None = None

    def as_dict(self) -> dict:
        return {
            "associative": self.associative,
            "unital": self.unital,
            "frobenius": self.frobenius,
            "symmetric": self.symmetric,
            "special": self.special,
            "commutative": self.commutative,
            "gamma": None if self.gamma is None else scalar_json(self.gamma),
            "gamma_prime": None if self.gamma_prime is None else scalar_json(self.gamma_prime),
            "radical_witness": self.radical_witness,
            "frobenius_relations": self.frobenius_relations,
        }

def is_associative(alg: VectAlgebra) -> bool:
    m = alg.mult
    lhs = np.einsum("abe,ecd->abcd", m, m)
    rhs = np.einsum("bce,aed->abcd", m, m)
    return is_zero(exact_array(lhs - rhs))

def is_unital(alg: VectAlgebra) -> bool:
    left = np.einsum("a,abc->bc", alg.unit, alg.mult)
    right = np.einsum("b,abc->ac", alg.unit, alg.mult)
    eye = identity(alg.dim)
    return is_zero(exact_array(left - eye)) and is_zero(exact_array(right - eye))

def is_commutative(alg: VectAlgebra) -> bool:
    return is_zero(exact_array(alg.mult - alg.mult.transpose(1, 0, 2)))

def frobenius_relations_hold(alg: VectAlgebra) -> bool:
    """Coassociativity, counitality and the two Frobenius compatibilities."""
    m, d, eps = alg.mult, alg.comult, alg.counit
    coassoc_l = np.einsum("cab,axy->cxyb", d, d)
    coassoc_r = np.einsum("cab,bxy->caxy", d, d)
    if not is_zero(exact_array(coassoc_l - coassoc_r)):
        return False
    eye = identity(alg.dim)
    if not is_zero(exact_array(np.einsum("cab,a->cb", d, eps) - eye)):
        return False
    if not is_zero(exact_array(np.einsum("cab,b->ca", d, eps) - eye)):
        return False
    # Delta o m, (id x m)(Delta x id), (m x id)(id x Delta) as maps A A -> A A
    dm = np.einsum("xyc,cab->xyab", m, d)
    # (id x m)(Delta x id): x (x) y -> sum x1 (x) x2 y
    lhs = np.einsum("xap,pyb->xyab", d, m)
    # (m x id)(id x Delta): x (x) y -> sum x y1 (x) y2
    rhs = np.einsum("ypb,xpa->xyab", d, m)
    return is_zero(exact_array(dm - lhs)) and is_zero(exact_array(dm - rhs))

def check_axioms(alg: VectAlgebra) -> AxiomReport:
    assoc = is_associative(alg)
    unital = is_unital(alg)
    comm = is_commutative(alg)
    kappa = alg.pairing
    rad = kernel(kappa.T)
    if rad.shape[1]:
        witness = [scalar_json(x) for x in rad[:, 0]]
        return AxiomReport(assoc, unital, False, False, False, comm, radical_witness=witness)
    symmetric = is_zero(exact_array(kappa - kappa.T))
    gamma = simplify(np.dot(alg.counit, alg.unit))
    md = exact_array(np.einsum("cab,abd->cd", alg.comult, alg.mult))
    gp = md[0, 0]
    proportional = is_zero(exact_array(md - identity(alg.dim) * gp))
    special = bool(proportional and gp != 0 and gamma != 0)
    return AxiomReport(
        assoc,
        unital,
        True,
        symmetric,
        special,
        comm,
        gamma=gamma,
        gamma_prime=gp if proportional else None,
        frobenius_relations=frobenius_relations_hold(alg),
    )

def normalize_special(alg: VectAlgebra) -> VectAlgebra:
    """Rescale the counit so that ``m o Delta = id``; then ``eps(1) = dim``."""
    rep = check_axioms(alg)
    if not rep.frobenius:
        raise NotSpecial("not special: pairing is degenerate")
    if rep.gamma_prime is None or rep.gamma_prime == 0:
        raise NotSpecial("not special: m o Delta is not a nonzero multiple of id")
    if rep.gamma == 0:
        raise NotSpecial("not special: eps o eta = 0")
    # Delta scales inversely with eps, so eps -> gamma' eps gives m o Delta = id
    counit = exact_array(alg.counit * rep.gamma_prime)
    return VectAlgebra(alg.mult.copy(), alg.unit.copy(), counit, alg.name, list(alg.basis_names))

def is_normalized_special(alg: VectAlgebra) -> bool:
    rep = check_axioms(alg)
    return rep.special and rep.gamma_prime == 1

# ---------------------------------------------------------------------------
# centre
# ---------------------------------------------------------------------------

def commutator_matrix(alg: VectAlgebra) -> np.ndarray:
    """Stacked matrices of ``z -> z e_x - e_x z`` over all basis elements ``x``."""
    blocks = []
    for x in range(alg.dim):
        ex = alg.basis_vector(x)
        blocks.append(alg.right_mult_matrix(ex) - alg.left_mult_matrix(ex))
    return exact_array(np.concatenate(blocks, axis=0))

def center(alg: VectAlgebra) -> np.ndarray:
    """Basis of the centre, one vector per column."""
    return kernel(commutator_matrix(alg))

def center_projector(alg: VectAlgebra) -> np.ndarray:
    """``pi(a) = sum_i e_i a e^i`` for a normalized symmetric special algebra."""
    rep = check_axioms(alg)
    if not (rep.symmetric and rep.special and rep.gamma_prime == 1):
        raise InputError("center_projector needs a normalized symmetric special algebra")
    dual = alg.dual_basis()
    n = alg.dim
    out = zeros((n, n))
    for a in range(n):
        ea = alg.basis_vector(a)
        acc = zeros(n)
        for i in range(n):
            acc = acc + alg.multiply(alg.basis_vector(i), alg.multiply(ea, dual[i]))
        out[:, a] = exact_array(acc)
    return out

def tensor_algebra(a: VectAlgebra, b: VectAlgebra) -> VectAlgebra:
    """Componentwise tensor product; basis ``e_i (x) f_j`` has index ``i * dim b + j``."""
    na, nb = a.dim, b.dim
    mult = exact_array(np.einsum("ikm,jln->ijklmn", a.mult, b.mult).reshape(na * nb, na * nb, na * nb))
    unit = exact_array(np.multiply.outer(a.unit, b.unit).reshape(-1))
    counit = exact_array(np.multiply.outer(a.counit, b.counit).reshape(-1))
    names = [f"{x}*{y}" for x in a.basis_names for y in b.basis_names]
    return VectAlgebra(mult, unit, counit, f"{a.name}*{b.name}", names)

def center_algebra(alg: VectAlgebra) -> tuple[np.ndarray, np.ndarray]:
    """Centre basis ``Z`` (columns) and the restricted pairing ``eps(z_a z_b)``."""
    z = center(alg)
    k = z.shape[1]
    form = zeros((k, k))
    for a in range(k):
        for b in range(k):
            form[a, b] = simplify(np.dot(alg.counit, alg.multiply(z[:, a], z[:, b])))
    return z, form

def handle_partition_function(alg: VectAlgebra, genus: int) -> Any:
    """Closed genus-g value ``eps(H^g)`` of the commutative algebra ``(Z(A), eps|_Z)``.

    ``H = sum z_a z_b (form^{-1})_{ab}`` is the handle element.  This is an
    oracle independent of any triangulation.
    """
    z, form = center_algebra(alg)
    inv = inverse(form)
    k = z.shape[1]
    handle = zeros(alg.dim)
    for a in range(k):
        for b in range(k):
            if inv[a, b] != 0:
                handle = handle + alg.multiply(z[:, a], z[:, b]) * inv[a, b]
    handle = exact_array(handle)
    power = exact_array(alg.unit)
    for _ in range(genus):
        power = alg.multiply(power, handle)
    return simplify(np.dot(alg.counit, power))

__all__ = [
    "AxiomReport",
    "VectAlgebra",
    "algebra_from_json",
    "center",
    "center_algebra",
    "center_projector",
    "check_axioms",
    "column_basis",
    "handle_partition_function",
    "load_algebra",
    "normalize_special",
    "rank",
    "tensor_algebra",
    "matmul",
]
