"""Correlators of world sheets as exact tensor networks over a Vect algebra.

Over the trivial category the connecting manifold of a world sheet reduces to
a network on a directed dual triangulation: every internal edge carries ``A``,
a vertex with two incoming darts is the multiplication and a vertex with two
outgoing darts is the comultiplication.  With the darts of a vertex listed
counter-clockwise, an ``m`` vertex ``(out, in1, in2)`` is ``m(in1, in2)`` and a
``Δ`` vertex ``(in, out1, out2)`` is ``Δ(in) = out2 ⊗ out1``.

Open slots are legs of the network and have dimension ``dim A``.  A closed
slot is a pair of legs ``(l, r)`` in ``A ⊗ A``; its space is the image of the
cylinder network ``P_cl``.  The basis of that image is the column-reduced
echelon basis; incoming closed slots are contracted with the basis vectors and
outgoing ones are read off at the pivot rows.  With this convention an
outgoing slot is already expressed in the dual basis, so ``tr_last`` is a plain
index contraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

import numpy as np

from .errors import InputError, NotSpecial
from .exactmath import Q, column_basis, contract_network, exact_array, identity, matmul, rank, scalar_json, zeros
from .frobvect import VectAlgebra, center, check_axioms, is_normalized_special
from .worldsheet import (
    DualTriangulation,
    Slot,
    WorldSheet,
    auto_triangulate,
    cut,
    cut_kind,
    insert_bubble,
    random_moves,
    slot_key,
)

# ---------------------------------------------------------------------------
# data types
# ---------------------------------------------------------------------------


@dataclass
class BulkStateSpace:
    projector: np.ndarray  # on A ⊗ A, index a * n + b for (l, r) = (a, b)
    basis: np.ndarray  # columns span the image
    pivots: list[int]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def is_idempotent(self) -> bool:
        p = self.projector
        return bool(np.array_equal(matmul(p, p), p))


@dataclass
class CorrelatorTensor:
    slots: list[Slot]
    data: np.ndarray
    basis_convention: dict[str, Any] = field(default_factory=dict)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @property
    def value(self) -> Any:
        if self.slots:
            raise InputError("correlator has open slots; it is not a number")
        return self.data.reshape(()).item()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CorrelatorTensor):
            return NotImplemented
        return (
            self.slots == other.slots
            and self.shape == other.shape
            and all(x == y for x, y in zip(self.data.reshape(-1), other.data.reshape(-1)))
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "slots": [f"{k} {i}" for k, i in self.slots],
            "shape": list(self.shape),
            "entries": [scalar_json(x) for x in self.data.reshape(-1)],
        }


BASIS_CONVENTION = {
    "open": "standard basis of A; outgoing slots in the kappa-dual basis",
    "closed": "column-reduced echelon basis of image(P_cl) in A (x) A; outgoing slots read at pivot rows",
    "slot_order": "closed-in, closed-out, open-in, open-out, each by index",
}


# ---------------------------------------------------------------------------
# preconditions
# ---------------------------------------------------------------------------


def require_normalized(A: VectAlgebra) -> None:
    rep = check_axioms(A)
    if not (rep.associative and rep.unital and rep.frobenius):
        raise InputError(f"{A.name} is not a Frobenius algebra")
    if not rep.symmetric:
        raise NotSpecial(f"{A.name} is not symmetric")
    if not rep.special:
        raise NotSpecial(f"{A.name} is not special")
    if not is_normalized_special(A):
        raise NotSpecial(f"{A.name} is special but not normalized; call normalize_special first")


# ---------------------------------------------------------------------------
# the network
# ---------------------------------------------------------------------------


def _edge_label(T: DualTriangulation, d: int) -> tuple:
    if d in T.alpha:
        return ("e", min(d, T.alpha[d]))
    return ("leg", d)


def vertex_tensors(T: DualTriangulation, A: VectAlgebra) -> list[tuple[np.ndarray, list]]:
    """One ``(array, legs)`` pair per vertex, following the vertex rule."""
    mult, comult = A.mult, A.comult
    out = []
    for v, r in enumerate(T.rot):
        kind = T.vertex_kind(v)
        if kind == "m":
            k = next(i for i in range(3) if r[i] in T.out)
            o, i1, i2 = r[k], r[(k + 1) % 3], r[(k + 2) % 3]
            out.append((mult, [_edge_label(T, i1), _edge_label(T, i2), _edge_label(T, o)]))
        elif kind == "delta":
            k = next(i for i in range(3) if r[i] not in T.out)
            i, o1, o2 = r[k], r[(k + 1) % 3], r[(k + 2) % 3]
            out.append((comult, [_edge_label(T, i), _edge_label(T, o2), _edge_label(T, o1)]))
        else:
            raise InputError(f"vertex {v} has no valid direction pattern")
    return out


def _slot_legs(T: DualTriangulation) -> dict[Slot, list[int]]:
    legs: dict[Slot, list[int]] = {}
    for d, (k, i, part) in sorted(T.legs.items(), key=lambda x: x[1][2]):
        legs.setdefault((k, i), []).append(d)
    return legs


def raw_network(T: DualTriangulation, A: VectAlgebra) -> tuple[Any, list[tuple[Slot, str]]]:
    """Contract the network keeping every leg; closed slots stay in ``A ⊗ A``."""
    legs = _slot_legs(T)
    order = []
    labels = []
    for slot in sorted(legs, key=slot_key):
        for d in legs[slot]:
            order.append((slot, T.legs[d][2]))
            labels.append(("leg", d))
    return contract_network(vertex_tensors(T, A), labels), order


def correlator(
    X: WorldSheet,
    A: VectAlgebra,
    T: DualTriangulation | None = None,
    bulk: BulkStateSpace | None = None,
    check: bool = True,
) -> CorrelatorTensor:
    """Correlator of ``X`` for the algebra ``A`` on the triangulation ``T``."""
    if check:
        require_normalized(A)
    if T is None:
        T = auto_triangulate(X)
    errs = T.problems()
    if errs:
        raise InputError("invalid triangulation: " + "; ".join(errs[:5]))
    if sorted(T.slots, key=slot_key) != X.slots:
        raise InputError("triangulation does not match the slots of the world sheet")
    n = A.dim
    tensors = vertex_tensors(T, A)
    legs = _slot_legs(T)
    outputs = []
    if any(k.startswith("closed") for k, _ in X.slots):
        if bulk is None:
            bulk = bulk_state_space(A, check=check)
        h = bulk.dim
        basis = bulk.basis.reshape(n, n, h)
        select = zeros((n, n, h))
        for c, p in enumerate(bulk.pivots):
            select[p // n, p % n, c] = Q(1)
    for slot in X.slots:
        tag = ("slot", slot)
        if slot[0].startswith("open"):
            (d,) = legs[slot]
            tensors.append((identity(n), [("leg", d), tag]))
        else:
            dl, dr = legs[slot]
            arr = basis if slot[0] == "closed-in" else select
            tensors.append((arr, [("leg", dl), ("leg", dr), tag]))
        outputs.append(tag)
    data = contract_network(tensors, outputs)
    return CorrelatorTensor(list(X.slots), np.asarray(data, dtype=object), dict(BASIS_CONVENTION))


@lru_cache(maxsize=None)
def _cylinder() -> WorldSheet:
    return WorldSheet(
        [["in", "r", "out", "l"]], [("r", "l")], {("closed-in", 1): "in", ("closed-out", 1): "out"}, name="cylinder"
    )


def bulk_state_space(A: VectAlgebra, check: bool = True) -> BulkStateSpace:
    """``P_cl`` from the cylinder network and a basis of its image."""
    if check:
        require_normalized(A)
    n = A.dim
    T = auto_triangulate(_cylinder())
    data, order = raw_network(T, A)
    # order is (closed-in l, closed-in r, closed-out l, closed-out r)
    arr = np.asarray(data, dtype=object).reshape(n * n, n * n)  # rows: in pair, cols: out pair
    proj = arr.T.copy()
    basis, pivots = column_basis(proj)
    return BulkStateSpace(exact_array(proj), basis, pivots)


# ---------------------------------------------------------------------------
# partial traces and checks
# ---------------------------------------------------------------------------


def tr_last(t: CorrelatorTensor, kind: str) -> CorrelatorTensor:
    """Evaluate the last outgoing slot of ``kind`` on the last incoming one."""
    if kind not in ("open", "closed"):
        raise InputError(f"kind must be 'open' or 'closed', got {kind!r}")
    ins = [s for s in t.slots if s[0] == f"{kind}-in"]
    outs = [s for s in t.slots if s[0] == f"{kind}-out"]
    if not ins or not outs:
        raise InputError(f"tr_last needs an incoming and an outgoing {kind} slot")
    s_in = max(ins, key=lambda s: s[1])
    s_out = max(outs, key=lambda s: s[1])
    i, j = t.slots.index(s_in), t.slots.index(s_out)
    if t.shape[i] != t.shape[j]:
        raise InputError("slot dimensions differ")
    data = exact_array(np.trace(t.data, axis1=i, axis2=j))
    slots = [s for s in t.slots if s not in (s_in, s_out)]
    return CorrelatorTensor(slots, data, dict(t.basis_convention))


def verify_triangulation_independence(
    X: WorldSheet, A: VectAlgebra, T1: DualTriangulation, T2: DualTriangulation, check: bool = True
) -> dict[str, Any]:
    bulk = bulk_state_space(A, check=check) if any(k.startswith("closed") for k, _ in X.slots) else None
    c1 = correlator(X, A, T1, bulk, check=check)
    c2 = correlator(X, A, T2, bulk, check=check)
    return {"passed": c1 == c2, "first": c1, "second": c2}


def triangulation_family(X: WorldSheet, count: int = 3, moves: int = 4, seed: int = 0) -> list[DualTriangulation]:
    """Pairwise non-isomorphic valid triangulations of ``X``.

    Candidates are rotated trees, random directions and random moves; a
    candidate isomorphic to one already chosen is skipped.
    """
    fam = [auto_triangulate(X)]
    seen = {fam[0].canonical()}
    k = 1
    while len(fam) < count:
        if k > 50 * count:
            raise InputError(f"could not find {count} distinct triangulations of {X.name}")
        if k % 3 == 1 and k < 10:
            T = auto_triangulate(X, rotation=k)
        elif k % 3 == 2 and k < 10:
            T = auto_triangulate(X, seed=seed + k)
        else:
            T = random_moves(auto_triangulate(X), moves + k // 10, seed=seed + k)
        k += 1
        key = T.canonical()
        if key not in seen:
            seen.add(key)
            fam.append(T)
    return fam


def bubble_pair(X: WorldSheet) -> tuple[DualTriangulation, DualTriangulation]:
    """A triangulation and the same one with a bubble on its first edge."""
    T = auto_triangulate(X)
    return T, insert_bubble(T, T.edges()[0][0])


def verify_factorization(X: WorldSheet, cut_name: str, A: VectAlgebra, check: bool = True) -> dict[str, Any]:
    """``Cor(X) == tr_last(Cor(cut(X)))`` for the named cut of ``X``.

    Both sides use their own automatic triangulation; they agree because the
    glued network of the cut surface is itself a triangulation of ``X``.
    """
    kind = cut_kind(X, cut_name)
    Y = cut(X, cut_name)
    bulk = bulk_state_space(A, check=check)
    lhs = correlator(X, A, auto_triangulate(X), bulk, check=check)
    full = correlator(Y, A, auto_triangulate(Y), bulk, check=check)
    rhs = tr_last(full, kind)
    return {
        "passed": lhs == rhs,
        "kind": kind,
        "lhs": lhs,
        "rhs": rhs,
        "trace_dim": A.dim if kind == "open" else bulk.dim,
    }


def closed_partition_function(A: VectAlgebra, genus: int, check: bool = True) -> Any:
    """Value of the closed genus-g surface from a standard polygon triangulation."""
    from .worldsheet import WorldSheet as _WS

    if genus == 0:
        X = _WS([["a", "b", "c"], ["C", "B", "A"]], [("a", "A"), ("b", "B"), ("c", "C")], name="sphere")
    else:
        word, glue = [], []
        for h in range(genus):
            a, b, a2, b2 = f"a{h}", f"b{h}", f"A{h}", f"B{h}"
            word += [a, b, a2, b2]
            glue += [(a, a2), (b, b2)]
        X = _WS([word], glue, name=f"genus{genus}")
    return correlator(X, A, check=check).value


def correlator_report(X: WorldSheet, A: VectAlgebra, T: DualTriangulation, cor: CorrelatorTensor,
                      checks: dict[str, Any]) -> dict[str, Any]:
    return {
        "worldsheet": X.name,
        "algebra": A.name,
        "triangulation": {"vertices": len(T.rot), "edges": len(T.edges())},
        "slots": [f"{k} {i}" for k, i in cor.slots],
        "tensor": {"shape": list(cor.shape), "entries": [scalar_json(x) for x in cor.data.reshape(-1)]},
        "closed_state_dim": int(rank(center(A).T)) if A.dim else 0,
        "checks": checks,
    }
