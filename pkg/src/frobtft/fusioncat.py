"""Skeletal braided fusion categories, their verifiers and modular data.

Conventions (all bases are the chosen multiplicity bases of the skeleton):

* ``F[a,b,c,d]`` has rows ``(e, mu, nu)`` and columns ``(f, kappa, lam)``,
  both in lexicographic order with labels in fixture order, and satisfies
  ``nu o (mu x id) = sum F[(e,mu,nu),(f,kappa,lam)] lam o (id x kappa) o alpha``
  where ``mu: ab->e``, ``nu: ec->d``, ``kappa: bc->f``, ``lam: af->d``.
* ``R[a,b,c]`` has rows indexed by ``V^{ba}_c`` and columns by ``V^{ab}_c``:
  ``mu o c_{a,b} = sum R[mu, nu] nu``.
* Unit gauge: F with a unit among ``a, b, c`` is the identity and R with a
  unit leg is 1; such components may be omitted from fixtures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from functools import cached_property
from itertools import product
from pathlib import Path
from typing import Any

import numpy as np

from .errors import InputError, MissingSqrtWitness, NotModular
from .exactmath import (
    Q,
    SqrtRegistry,
    exact_array,
    identity,
    inverse,
    is_zero,
    matmul,
    parse_scalar,
    rank,
    scalar_json,
    simplify,
    zeros,
)
from .skeleton import Engine, Morphism, chain, leaf, tensor_obj

@dataclass
class CategoryData:
    name: str
    conductor: int
    labels: list[str]
    dual: list[int]
    N: np.ndarray
    F: dict[tuple[int, int, int, int], np.ndarray]
    R: dict[tuple[int, int, int], np.ndarray]
    qdim: list[Any]
    twist: list[Any]
    sqrt_witnesses: list[tuple[Any, Any]] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._fcache: dict = {}
        self._rcache: dict = {}

    # basic accessors ----------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.labels)

    def label_index(self, name: str) -> int:
        try:
            return self.labels.index(name)
        except ValueError:
            raise InputError(f"unknown label {name!r} in category {self.name}") from None

    def fusion_outputs(self, a: int, b: int) -> list[int]:
        return [c for c in range(self.rank) if self.N[a, b, c]]

    def f_rows(self, a: int, b: int, c: int, d: int) -> list[tuple[int, int, int]]:
        n = self.N
        return [
            (e, mu, nu)
            for e in range(self.rank)
            for mu in range(n[a, b, e])
            for nu in range(n[e, c, d])
        ]

    def f_cols(self, a: int, b: int, c: int, d: int) -> list[tuple[int, int, int]]:
        n = self.N
        return [
            (f, kappa, lam)
            for f in range(self.rank)
            for kappa in range(n[b, c, f])
            for lam in range(n[a, f, d])
        ]

    def F_data(self, a: int, b: int, c: int, d: int) -> tuple[dict, dict, np.ndarray, np.ndarray]:
        key = (a, b, c, d)
        hit = self._fcache.get(key)
        if hit is not None:
            return hit
        rows, cols = self.f_rows(*key), self.f_cols(*key)
        if key in self.F:
            mat = self.F[key]
        elif 0 in (a, b, c):
            mat = identity(len(rows))
        else:
            raise InputError(f"missing F component {self._key_name(key)}")
        if mat.shape != (len(rows), len(cols)):
            raise InputError(
                f"F component {self._key_name(key)} has shape {mat.shape}, "
                f"expected {(len(rows), len(cols))}"
            )
        inv = inverse(mat) if mat.size else mat
        hit = ({r: i for i, r in enumerate(rows)}, {c_: i for i, c_ in enumerate(cols)}, mat, inv)
        self._fcache[key] = hit
        return hit

    def R_data(self, a: int, b: int, c: int) -> tuple[np.ndarray, np.ndarray]:
        key = (a, b, c)
        hit = self._rcache.get(key)
        if hit is not None:
            return hit
        shape = (int(self.N[b, a, c]), int(self.N[a, b, c]))
        if key in self.R:
            mat = self.R[key]
        elif 0 in (a, b):
            mat = identity(shape[0])
        else:
            raise InputError(f"missing R component {self._key_name(key)}")
        if mat.shape != shape:
            raise InputError(f"R component {self._key_name(key)} has shape {mat.shape}, expected {shape}")
        hit = (mat, inverse(mat) if mat.size else mat)
        self._rcache[key] = hit
        return hit

    def _key_name(self, key: tuple) -> str:
        return ",".join(self.labels[i] for i in key)

    @cached_property
    def engine(self) -> Engine:
        return Engine(self)

    def sqrt_registry(self) -> SqrtRegistry:
        reg = SqrtRegistry()
        for x, w in self.sqrt_witnesses:
            reg.declare(x, w)
        return reg

    # structural validation ----------------------------------------------

    def validate(self) -> None:
        """Shape checks that do not need the pentagon or hexagon."""
        r = self.rank
        n = self.N
        if n.shape != (r, r, r) or (n < 0).any():
            raise InputError("fusion multiplicities must be non-negative integers")
        for i in range(r):
            if sorted(self.dual) != list(range(r)) or self.dual[self.dual[i]] != i:
                raise InputError("dual must be an involution on labels")
            for k in range(r):
                if n[0, i, k] != (i == k) or n[i, 0, k] != (i == k):
                    raise InputError("unit constraint N_0j^k = delta_jk violated")
            for j in range(r):
                if n[i, j, 0] != (j == self.dual[i]):
                    raise InputError("duality constraint N_ij^0 = delta_{j, dual i} violated")
        for a, b, c, d in product(range(r), repeat=4):
            rows = self.f_rows(a, b, c, d)
            if not rows:
                continue
            _, _, mat, _ = self.F_data(a, b, c, d)
            if 0 in (a, b, c) and not _is_identity(mat):
                raise InputError(f"F component {self._key_name((a, b, c, d))} breaks the unit gauge")
        for a, b, c in product(range(r), repeat=3):
            if self.N[a, b, c]:
                mat, _ = self.R_data(a, b, c)
                if 0 in (a, b) and not _is_identity(mat):
                    raise InputError(f"R component {self._key_name((a, b, c))} breaks the unit gauge")
        if self.qdim[0] != 1:
            raise InputError("d_0 must be 1")
        if self.twist[0] != 1:
            raise InputError("theta_0 must be 1")

    # serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        lab = self.labels
        fusion = [
            [lab[a], lab[b], lab[c], int(self.N[a, b, c])]
            for a, b, c in product(range(self.rank), repeat=3)
            if self.N[a, b, c]
        ]
        return {
            "name": self.name,
            "conductor": self.conductor,
            "labels": list(lab),
            "unit": lab[0],
            "dual": {lab[i]: lab[self.dual[i]] for i in range(self.rank)},
            "fusion": fusion,
            "F": {self._key_name(k): _mat_json(v) for k, v in sorted(self.F.items())},
            "R": {self._key_name(k): _mat_json(v) for k, v in sorted(self.R.items())},
            "qdim": {lab[i]: scalar_json(self.qdim[i]) for i in range(self.rank)},
            "twist": {lab[i]: scalar_json(self.twist[i]) for i in range(self.rank)},
            "sqrt_witnesses": [[scalar_json(x), scalar_json(w)] for x, w in self.sqrt_witnesses],
        }

def _is_identity(mat: np.ndarray) -> bool:
    return mat.shape[0] == mat.shape[1] and is_zero(mat - identity(mat.shape[0]))

def _mat_json(m: np.ndarray) -> Any:
    return [[scalar_json(x) for x in row] for row in m]

# ---------------------------------------------------------------------------
# loading
# ---------------------------------------------------------------------------

def _parse_matrix(obj: Any, conductor: int) -> np.ndarray:
    if not isinstance(obj, list):
        obj = [[obj]]
    elif obj and not isinstance(obj[0], list):
        obj = [obj]
    return exact_array([[parse_scalar(x, conductor) for x in row] for row in obj])

def category_from_json(doc: dict, name: str = "category") -> CategoryData:
    try:
        conductor = int(doc.get("conductor", 1))
        names = list(doc["labels"])
        unit = doc.get("unit", names[0])
        if unit not in names:
            raise InputError(f"unit label {unit!r} not among labels")
        names.remove(unit)
        names.insert(0, unit)
        idx = {s: i for i, s in enumerate(names)}
        r = len(names)

        def lab(s: Any) -> int:
            s = str(s)
            if s not in idx:
                raise InputError(f"unknown label {s!r}")
            return idx[s]

        dual_doc = doc.get("dual", {})
        dual = [lab(dual_doc.get(s, s)) for s in names]
        n = np.zeros((r, r, r), dtype=int)
        for entry in doc["fusion"]:
            a, b, c = (lab(x) for x in entry[:3])
            n[a, b, c] = int(entry[3]) if len(entry) > 3 else 1
        F = {}
        for key, mat in doc.get("F", {}).items():
            parts = key.split(",")
            if len(parts) != 4:
                raise InputError(f"bad F key {key!r}")
            F[tuple(lab(p) for p in parts)] = _parse_matrix(mat, conductor)
        R = {}
        for key, mat in doc.get("R", {}).items():
            parts = key.split(",")
            if len(parts) != 3:
                raise InputError(f"bad R key {key!r}")
            R[tuple(lab(p) for p in parts)] = _parse_matrix(mat, conductor)
        qd, tw = doc.get("qdim", {}), doc.get("twist", {})
        qdim = [simplify(parse_scalar(qd.get(s, 1), conductor)) for s in names]
        twist = [simplify(parse_scalar(tw.get(s, 1), conductor)) for s in names]
        witnesses = []
        for pair in doc.get("sqrt_witnesses", []):
            x, w = (simplify(parse_scalar(v, conductor)) for v in pair)
            witnesses.append((x, w))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed category fixture: {exc}") from exc
    cat = CategoryData(str(doc.get("name", name)), conductor, names, dual, n, F, R, qdim, twist, witnesses)
    for x, w in witnesses:
        if w * w != x:
            raise InputError(f"sqrt witness {w} does not square to {x}")
    cat.validate()
    return cat

def load_category(path: str | Path) -> CategoryData:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    return category_from_json(doc, name=path.stem)

# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def verify_pentagon(cat: CategoryData) -> list[tuple[str, ...]]:
    """Pentagon instances ``(a, b, c, d, e)`` whose two sides differ.

    Both sides of Mac Lane's pentagon ``((ab)c)d -> a(b(cd))`` are built as
    morphisms and compared blockwise; ``e`` is the total fusion channel.
    """
    eng = cat.engine
    bad = []
    for a, b, c, d in product(range(cat.rank), repeat=4):
        A, B, C, D = (leaf(x) for x in (a, b, c, d))
        AB, CD, BC = tensor_obj(A, B), tensor_obj(C, D), tensor_obj(B, C)
        lhs = eng.compose(eng.assoc(A, B, CD), eng.assoc(AB, C, D))
        rhs = eng.compose(
            eng.tensor(eng.ident(A), eng.assoc(B, C, D)),
            eng.assoc(A, BC, D),
            eng.tensor(eng.assoc(A, B, C), eng.ident(D)),
        )
        for e in eng.failing_channels(lhs, rhs):
            bad.append(tuple(cat.labels[x] for x in (a, b, c, d, e)))
    return bad

def _hexagon_sides(eng: Engine, X, Y, Z, inverse: bool) -> tuple[Morphism, Morphism]:
    # c~_{X,Y} := c^{-1}_{Y,X} when inverse is set
    def br(p, q):
        return eng.braid(q, p, inverse=True) if inverse else eng.braid(p, q)

    lhs = eng.compose(eng.assoc(Y, Z, X), br(X, tensor_obj(Y, Z)), eng.assoc(X, Y, Z))
    rhs = eng.compose(
        eng.tensor(eng.ident(Y), br(X, Z)),
        eng.assoc(Y, X, Z),
        eng.tensor(br(X, Y), eng.ident(Z)),
    )
    return lhs, rhs

def _hexagon_sides_2(eng: Engine, X, Y, Z, inverse: bool) -> tuple[Morphism, Morphism]:
    def br(p, q):
        return eng.braid(q, p, inverse=True) if inverse else eng.braid(p, q)

    lhs = eng.compose(eng.assoc_inv(Z, X, Y), br(tensor_obj(X, Y), Z), eng.assoc_inv(X, Y, Z))
    rhs = eng.compose(
        eng.tensor(br(X, Z), eng.ident(Y)),
        eng.assoc_inv(X, Z, Y),
        eng.tensor(eng.ident(X), br(Y, Z)),
    )
    return lhs, rhs

def verify_hexagon(cat: CategoryData) -> list[tuple[str, ...]]:
    """Hexagon instances ``(kind, a, b, c, e)`` with nonzero residual.

    ``kind`` is ``R`` for the braiding and ``Rinv`` for the reverse braiding
    ``c^{-1}_{Y,X}``; both hexagons are checked for each.
    """
    eng = cat.engine
    bad = []
    for a, b, c in product(range(cat.rank), repeat=3):
        X, Y, Z = leaf(a), leaf(b), leaf(c)
        for inverse, kind in ((False, "R"), (True, "Rinv")):
            seen = set()
            for sides in (_hexagon_sides, _hexagon_sides_2):
                lhs, rhs = sides(eng, X, Y, Z, inverse)
                seen.update(eng.failing_channels(lhs, rhs))
            for e in sorted(seen):
                bad.append((kind,) + tuple(cat.labels[x] for x in (a, b, c, e)))
    return bad

def verify_dimensions(cat: CategoryData) -> list[str]:
    """Problems with the fixture-supplied dimensions and twists."""
    problems = []
    r, d = cat.rank, cat.qdim
    for i, j in product(range(r), repeat=2):
        if d[i] * d[j] != sum(cat.N[i, j, k] * d[k] for k in range(r)):
            problems.append(f"d_{cat.labels[i]} d_{cat.labels[j]} != sum_k N d_k")
    duals = duality_data(cat)
    for i in range(r):
        if duals.right_loop[i] != d[cat.dual[i]]:
            problems.append(f"duality data of {cat.labels[i]} is not spherical for the given d")
    # twist from the braiding: theta_i d_i = sum_k d_k tr R^{ii}_k
    for i in range(r):
        val = sum(
            (d[k] * _trace(cat.R_data(i, i, k)[0]) for k in range(r) if cat.N[i, i, k]),
            Q(0),
        )
        if simplify(val) != simplify(cat.twist[i] * d[i]):
            problems.append(f"twist of {cat.labels[i]} disagrees with the braiding")
    # balancing: R^{ba}_c R^{ab}_c = theta_c / (theta_a theta_b)
    for a, b, c in product(range(r), repeat=3):
        if not cat.N[a, b, c]:
            continue
        mono = matmul(cat.R_data(b, a, c)[0], cat.R_data(a, b, c)[0])
        target = cat.twist[c] / (cat.twist[a] * cat.twist[b])
        if not is_zero(mono - identity(mono.shape[0]) * target):
            problems.append(f"balancing fails at {cat._key_name((a, b, c))}")
    return problems

def _trace(m: np.ndarray) -> Any:
    return simplify(sum((m[i, i] for i in range(m.shape[0])), Q(0)))

# ---------------------------------------------------------------------------
# duality
# ---------------------------------------------------------------------------

@dataclass
class DualityData:
    """Scalars of ev/coev on the basis vertices of each simple label.

    ``ev_i: ibar i -> 1`` and ``coev_i: 1 -> i ibar`` (left duality), and the
    right duality ``evt_i: i ibar -> 1``, ``coevt_i: 1 -> ibar i``.
    """

    ev: list[Any]
    coev: list[Any]
    evt: list[Any]
    coevt: list[Any]
    right_loop: list[Any]

def duality_data(cat: CategoryData) -> DualityData:
    eng = cat.engine
    r = cat.rank
    ev, coev, evt, coevt, loops = [], [], [], [], []
    for i in range(r):
        ib = cat.dual[i]
        I, Ib = leaf(i), leaf(ib)
        # (id_i x ev_i) o alpha o (coev_i x id_i) = id_i with ev = 1 fixes coev
        zig = eng.compose(
            eng.runit(I),
            eng.tensor(eng.ident(I), eng.vertex(ib, i, 0)),
            eng.assoc(I, Ib, I),
            eng.tensor(eng.splitting(i, ib, 0), eng.ident(I)),
            eng.lunit(I, inverse=True),
        )
        z = zig.blocks[i][0, 0]
        if z == 0:
            raise InputError(f"label {cat.labels[i]} has a degenerate zigzag")
        b = simplify(1 / z)
        a_t = simplify(cat.qdim[i] / b)
        # (evt_i x id_i) o alpha^{-1} o (id_i x coevt_i) = id_i fixes coevt
        zig2 = eng.compose(
            eng.lunit(I),
            eng.tensor(eng.vertex(i, ib, 0, coeff=a_t), eng.ident(I)),
            eng.assoc_inv(I, Ib, I),
            eng.tensor(eng.ident(I), eng.splitting(ib, i, 0)),
            eng.runit(I, inverse=True),
        )
        z2 = zig2.blocks[i][0, 0]
        if z2 == 0:
            raise InputError(f"label {cat.labels[i]} has a degenerate right zigzag")
        bt = simplify(1 / z2)
        ev.append(Q(1))
        coev.append(b)
        evt.append(a_t)
        coevt.append(bt)
        loops.append(bt)  # ev_i o coevt_i with ev = 1
    return DualityData(ev, coev, evt, coevt, loops)

# ---------------------------------------------------------------------------
# modular data
# ---------------------------------------------------------------------------

@dataclass
class ModularData:
    S: np.ndarray
    T: np.ndarray
    s00: Any
    S_unnormalized: np.ndarray
    modular: bool

def global_dimension_squared(cat: CategoryData) -> Any:
    return simplify(sum((d * d for d in cat.qdim), Q(0)))

def s_tilde(cat: CategoryData) -> np.ndarray:
    """``s~_ij = tr(c_{j,i} o c_{i,j})``, the double-braiding trace on ``i j``."""
    r = cat.rank
    out = zeros((r, r))
    for i, j in product(range(r), repeat=2):
        val = Q(0)
        for k in cat.fusion_outputs(i, j):
            mono = matmul(cat.R_data(j, i, k)[0], cat.R_data(i, j, k)[0])
            val = val + cat.qdim[k] * _trace(mono)
        out[i, j] = simplify(val)
    return out

def s_tilde_from_twists(cat: CategoryData) -> np.ndarray:
    """Independent oracle: ``s~_ij = sum_k N_ij^k theta_k/(theta_i theta_j) d_k``."""
    r = cat.rank
    out = zeros((r, r))
    th, d = cat.twist, cat.qdim
    for i, j in product(range(r), repeat=2):
        val = sum(
            (cat.N[i, j, k] * th[k] * d[k] for k in range(r)),
            Q(0),
        )
        out[i, j] = simplify(val / (th[i] * th[j]))
    return out

def modular_data(cat: CategoryData, check_modular: bool = True) -> ModularData:
    reg = cat.sqrt_registry()
    dim2 = global_dimension_squared(cat)
    try:
        root = reg.sqrt(dim2)
    except MissingSqrtWitness:
        raise MissingSqrtWitness(f"missing sqrt witness for sum of d_i^2 = {dim2}") from None
    s00 = simplify(1 / root)
    st = s_tilde(cat)
    # S_ij = s00 s~_{ibar j}: with this choice (ST)^3 is a multiple of S^2
    S = exact_array(st[cat.dual] * s00)
    T = zeros((cat.rank, cat.rank))
    for i in range(cat.rank):
        T[i, i] = cat.twist[i]
    modular = rank(S) == cat.rank
    if check_modular and not modular:
        raise NotModular("category not modular: S is singular")
    return ModularData(S, T, s00, st, modular)

def omega_squares(cat: CategoryData) -> list[Any]:
    """``S00 d_i`` for every label; always exact."""
    md = modular_data(cat, check_modular=False)
    return [simplify(md.s00 * cat.qdim[i]) for i in range(cat.rank)]


def omega_weights(cat: CategoryData) -> list[Any]:
    """``(S00 d_i)^{1/2}`` for every label, from declared square roots.

    These roots often leave every cyclotomic field (Ising needs ``2^{-1/4}``);
    then ``MissingSqrtWitness`` is raised and only :func:`omega_squares` is
    available.
    """
    reg = cat.sqrt_registry()
    return [reg.sqrt(x) for x in omega_squares(cat)]

# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def product_category(cat: CategoryData, other: CategoryData | None = None, reverse_second: bool = True) -> CategoryData:
    """Deligne product; by default ``C x Cbar`` with the reversed braiding on the right factor."""
    c2 = cat if other is None else other
    r1, r2 = cat.rank, c2.rank
    if cat.conductor != c2.conductor and 1 not in (cat.conductor, c2.conductor):
        raise InputError("factors must share a conductor")
    conductor = max(cat.conductor, c2.conductor)
    pairs = [(i, j) for i in range(r1) for j in range(r2)]
    pid = {p: n for n, p in enumerate(pairs)}
    labels = [f"{cat.labels[i]}|{c2.labels[j]}" for i, j in pairs]
    dual = [pid[(cat.dual[i], c2.dual[j])] for i, j in pairs]
    r = len(pairs)
    N = np.zeros((r, r, r), dtype=int)
    for (a1, a2), (b1, b2), (c1, cc2) in product(pairs, repeat=3):
        N[pid[(a1, a2)], pid[(b1, b2)], pid[(c1, cc2)]] = cat.N[a1, b1, c1] * c2.N[a2, b2, cc2]
    qdim = [simplify(cat.qdim[i] * c2.qdim[j]) for i, j in pairs]
    twist = [
        simplify(cat.twist[i] * (1 / c2.twist[j] if reverse_second else c2.twist[j]))
        for i, j in pairs
    ]
    out = CategoryData(f"{cat.name}x{c2.name}{'bar' if reverse_second else ''}", conductor,
                       labels, dual, N, {}, {}, qdim, twist, [])

    for key in product(range(r), repeat=4):
        rows = out.f_rows(*key)
        if not rows or 0 in key[:3]:
            continue
        (a1, a2), (b1, b2), (c1, cc2), (d1, d2) = (pairs[x] for x in key)
        R1, C1, M1, _ = cat.F_data(a1, b1, c1, d1)
        R2, C2, M2, _ = c2.F_data(a2, b2, cc2, d2)
        cols = out.f_cols(*key)
        mat = zeros((len(rows), len(cols)))
        for i, (e, mu, nu) in enumerate(rows):
            (e1, e2) = pairs[e]
            mu1, mu2 = divmod(mu, c2.N[a2, b2, e2])
            nu1, nu2 = divmod(nu, c2.N[e2, cc2, d2])
            for j, (f, ka, la) in enumerate(cols):
                f1, f2 = pairs[f]
                ka1, ka2 = divmod(ka, c2.N[b2, cc2, f2])
                la1, la2 = divmod(la, c2.N[a2, f2, d2])
                x = M1[R1[(e1, mu1, nu1)], C1[(f1, ka1, la1)]]
                if x == 0:
                    continue
                mat[i, j] = simplify(x * M2[R2[(e2, mu2, nu2)], C2[(f2, ka2, la2)]])
        out.F[key] = mat
    for key in product(range(r), repeat=3):
        a, b, c = key
        if not N[a, b, c] or 0 in (a, b):
            continue
        (a1, a2), (b1, b2), (c1, cc2) = (pairs[x] for x in key)
        m1 = cat.R_data(a1, b1, c1)[0]
        # reversed braiding: Rbar^{ab}_c = (R^{ba}_c)^{-1}
        m2 = c2.R_data(b2, a2, cc2)[1] if reverse_second else c2.R_data(a2, b2, cc2)[0]
        out.R[key] = exact_array(np.kron(m1, m2))
    reg1, reg2 = cat.sqrt_registry(), c2.sqrt_registry()
    try:
        r1_ = reg1.sqrt(global_dimension_squared(cat))
        r2_ = reg2.sqrt(global_dimension_squared(c2))
        out.sqrt_witnesses.append((global_dimension_squared(out), simplify(r1_ * r2_)))
    except MissingSqrtWitness:
        pass
    return out

def t_object(cat: CategoryData) -> dict[tuple[str, str], int]:
    """Multiplicities of ``T = sum_i U_i x U_ibar`` over pairs of labels."""
    out = {}
    for i in range(cat.rank):
        for j in range(cat.rank):
            out[(cat.labels[i], cat.labels[j])] = int(j == cat.dual[i])
    return out

def check_category(cat: CategoryData) -> dict[str, Any]:
    """Run every verifier and collect a report."""
    pent = verify_pentagon(cat)
    hexa = verify_hexagon(cat)
    dims = verify_dimensions(cat) if not pent else ["skipped: pentagon failed"]
    report: dict[str, Any] = {
        "category": cat.name,
        "labels": list(cat.labels),
        "pentagon_failures": [list(x) for x in pent],
        "hexagon_failures": [list(x) for x in hexa],
        "dimension_problems": dims,
    }
    try:
        md = modular_data(cat, check_modular=False)
        report["modular"] = md.modular
        report["s00"] = scalar_json(md.s00)
    except MissingSqrtWitness as exc:
        report["modular"] = None
        report["s00"] = str(exc)
    report["passed"] = not (pent or hexa or dims)
    return report

__all__ = [
    "CategoryData",
    "DualityData",
    "ModularData",
    "category_from_json",
    "check_category",
    "duality_data",
    "load_category",
    "modular_data",
    "omega_squares",
    "omega_weights",
    "product_category",
    "s_tilde",
    "s_tilde_from_twists",
    "t_object",
    "verify_dimensions",
    "verify_hexagon",
    "verify_pentagon",
    "chain",
]
