"""Morphisms between composite objects of a skeletal fusion category.

An object is either a leaf, an ordered direct sum of simple labels (repeats
allowed), or a binary tensor product of two objects.  A morphism ``f: X -> Y``
is stored blockwise: for each simple label ``k`` a matrix whose rows are the
fusion trees ``Y -> k`` and whose columns are the fusion trees ``X -> k``,
with the convention ``t' o f = sum_t M_k[t', t] t``.

Fusion trees of a leaf are its summand positions; a tree of ``X (x) Y -> k``
is ``(tx, ty, x, y, mu)`` with ``tx: X -> x``, ``ty: Y -> y`` and ``mu`` a basis
vector of the multiplicity space ``V^{xy}_k``.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, Callable, Iterator

import numpy as np

from .errors import InputError
from .exactmath import Q, is_zero, matmul, simplify, zeros

if TYPE_CHECKING:
    from .fusioncat import CategoryData

Obj = tuple

def leaf(*labels: int) -> Obj:
    return ("L", tuple(labels))

def tensor_obj(x: Obj, y: Obj) -> Obj:
    return ("T", x, y)

def chain(*objs: Obj) -> Obj:
    """Left-nested tensor product ``((x0 x1) x2) ...``."""
    out = objs[0]
    for o in objs[1:]:
        out = ("T", out, o)
    return out

class Morphism:
    __slots__ = ("src", "dst", "blocks")

    def __init__(self, src: Obj, dst: Obj, blocks: dict[int, np.ndarray]):
        self.src = src
        self.dst = dst
        self.blocks = blocks

    def __repr__(self) -> str:
        return f"Morphism({self.src} -> {self.dst})"

class Engine:
    """Fusion-tree calculus over one skeletal category."""

    def __init__(self, cat: "CategoryData"):
        self.cat = cat
        self.rank = len(cat.labels)
        self._trees: dict[Obj, dict[int, tuple[list, dict]]] = {}

    # fusion trees -----------------------------------------------------

    def trees(self, x: Obj) -> dict[int, tuple[list, dict]]:
        hit = self._trees.get(x)
        if hit is not None:
            return hit
        out: dict[int, list] = {k: [] for k in range(self.rank)}
        if x[0] == "L":
            for s, lab in enumerate(x[1]):
                out[lab].append(("l", s))
        elif x[0] == "T":
            left, right = self.trees(x[1]), self.trees(x[2])
            n = self.cat.N
            for a in range(self.rank):
                if not left[a][0]:
                    continue
                for b in range(self.rank):
                    if not right[b][0]:
                        continue
                    for k in range(self.rank):
                        for mu in range(n[a, b, k]):
                            for ta in left[a][0]:
                                for tb in right[b][0]:
                                    out[k].append(("t", ta, tb, a, b, mu))
        else:
            raise InputError(f"not an object: {x!r}")
        res = {k: (v, {t: i for i, t in enumerate(v)}) for k, v in out.items()}
        self._trees[x] = res
        return res

    def dim(self, x: Obj, k: int) -> int:
        return len(self.trees(x)[k][0])

    def hom_dim(self, x: Obj, y: Obj) -> int:
        return sum(self.dim(x, k) * self.dim(y, k) for k in range(self.rank))

    # basic morphisms ----------------------------------------------------

    def zero(self, x: Obj, y: Obj) -> Morphism:
        return Morphism(x, y, {k: zeros((self.dim(y, k), self.dim(x, k))) for k in range(self.rank)})

    def ident(self, x: Obj) -> Morphism:
        f = self.zero(x, x)
        for b in f.blocks.values():
            for i in range(b.shape[0]):
                b[i, i] = Q(1)
        return f

    def compose(self, *fs: Morphism) -> Morphism:
        """``compose(h, g, f) = h o g o f``."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            if g.src != out.dst:
                raise InputError(f"cannot compose {g} after {out}")
            out = Morphism(out.src, g.dst, {k: matmul(g.blocks[k], out.blocks[k]) for k in range(self.rank)})
        return out

    def add(self, f: Morphism, g: Morphism) -> Morphism:
        self._same_type(f, g)
        return Morphism(f.src, f.dst, {k: _simp(f.blocks[k] + g.blocks[k]) for k in range(self.rank)})

    def sub(self, f: Morphism, g: Morphism) -> Morphism:
        self._same_type(f, g)
        return Morphism(f.src, f.dst, {k: _simp(f.blocks[k] - g.blocks[k]) for k in range(self.rank)})

    def scale(self, c: Any, f: Morphism) -> Morphism:
        return Morphism(f.src, f.dst, {k: _simp(b * c) for k, b in f.blocks.items()})

    def is_zero(self, f: Morphism) -> bool:
        return all(is_zero(b) for b in f.blocks.values())

    def equal(self, f: Morphism, g: Morphism) -> bool:
        return self.is_zero(self.sub(f, g))

    def failing_channels(self, f: Morphism, g: Morphism) -> list[int]:
        d = self.sub(f, g)
        return [k for k in range(self.rank) if not is_zero(d.blocks[k])]

    def _same_type(self, f: Morphism, g: Morphism) -> None:
        if f.src != g.src or f.dst != g.dst:
            raise InputError(f"type mismatch: {f} vs {g}")

    # linear coordinates on Hom spaces ---------------------------------

    def hom_positions(self, x: Obj, y: Obj) -> list[tuple[int, int, int]]:
        return [
            (k, i, j)
            for k in range(self.rank)
            for i in range(self.dim(y, k))
            for j in range(self.dim(x, k))
        ]

    def to_vector(self, f: Morphism) -> list:
        return [f.blocks[k][i, j] for k, i, j in self.hom_positions(f.src, f.dst)]

    def from_vector(self, x: Obj, y: Obj, vec: Any) -> Morphism:
        f = self.zero(x, y)
        for (k, i, j), v in zip(self.hom_positions(x, y), vec):
            f.blocks[k][i, j] = simplify(v)
        return f

    def hom_basis(self, x: Obj, y: Obj) -> Iterator[Morphism]:
        pos = self.hom_positions(x, y)
        for n in range(len(pos)):
            vec = [Q(0)] * len(pos)
            vec[n] = Q(1)
            yield self.from_vector(x, y, vec)

    # leaf-level morphisms ------------------------------------------------

    def leaf_map(self, x: Obj, y: Obj, coeff: Callable[[int, int], Any]) -> Morphism:
        """Morphism between leaves; ``coeff(r, s)`` maps summand ``s`` of ``x`` to ``r`` of ``y``."""
        if x[0] != "L" or y[0] != "L":
            raise InputError("leaf_map needs leaf objects")
        f = self.zero(x, y)
        for k in range(self.rank):
            rows, cols = self.trees(y)[k][0], self.trees(x)[k][0]
            for i, (_, r) in enumerate(rows):
                for j, (_, s) in enumerate(cols):
                    f.blocks[k][i, j] = simplify(coeff(r, s))
        return f

    # monoidal structure ------------------------------------------------

    def tensor(self, f: Morphism, g: Morphism) -> Morphism:
        src = ("T", f.src, g.src)
        dst = ("T", f.dst, g.dst)
        out = self.zero(src, dst)
        tsrc, tdst = self.trees(src), self.trees(dst)
        fl, fr = self.trees(f.src), self.trees(g.src)
        dl, dr = self.trees(f.dst), self.trees(g.dst)
        for k in range(self.rank):
            blk = out.blocks[k]
            if not blk.size:
                continue
            idx = tsrc[k][1]
            for i, (_, ta2, tb2, a, b, mu) in enumerate(tdst[k][0]):
                fa, gb = f.blocks[a], g.blocks[b]
                ia = dl[a][1][ta2]
                ib = dr[b][1][tb2]
                for ja, ta in enumerate(fl[a][0]):
                    x = fa[ia, ja]
                    if x == 0:
                        continue
                    for jb, tb in enumerate(fr[b][0]):
                        y = gb[ib, jb]
                        if y == 0:
                            continue
                        blk[i, idx[("t", ta, tb, a, b, mu)]] = simplify(x * y)
        return out

    def assoc(self, x: Obj, y: Obj, z: Obj, inverse: bool = False) -> Morphism:
        """``(x y) z -> x (y z)``, or its inverse when ``inverse`` is set."""
        left = ("T", ("T", x, y), z)
        right = ("T", x, ("T", y, z))
        f = self.zero(left, right) if not inverse else self.zero(right, left)
        tl, tr = self.trees(left), self.trees(right)
        cat = self.cat
        for k in range(self.rank):
            blk = f.blocks[k]
            if not blk.size:
                continue
            groups: dict[tuple, list] = {}
            for i, t in enumerate(tr[k][0]):
                _, tx, (_, ty, tz, yl, zl, kappa), xl, fl, lam = t
                groups.setdefault((tx, ty, tz, xl, yl, zl), []).append((i, fl, kappa, lam))
            for j, t in enumerate(tl[k][0]):
                _, (_, tx, ty, xl, yl, mu), tz, e, zl, nu = t
                for i, fl, kappa, lam in groups.get((tx, ty, tz, xl, yl, zl), ()):
                    rows, cols, mat, inv = cat.F_data(xl, yl, zl, k)
                    if inverse:
                        blk[j, i] = mat[rows[(e, mu, nu)], cols[(fl, kappa, lam)]]
                    else:
                        blk[i, j] = inv[cols[(fl, kappa, lam)], rows[(e, mu, nu)]]
        return f

    def assoc_inv(self, x: Obj, y: Obj, z: Obj) -> Morphism:
        return self.assoc(x, y, z, inverse=True)

    def braid(self, x: Obj, y: Obj, inverse: bool = False) -> Morphism:
        """``c_{x,y}: x y -> y x``; with ``inverse`` the map ``y x -> x y``."""
        xy, yx = ("T", x, y), ("T", y, x)
        f = self.zero(xy, yx) if not inverse else self.zero(yx, xy)
        txy, tyx = self.trees(xy), self.trees(yx)
        cat = self.cat
        for k in range(self.rank):
            blk = f.blocks[k]
            if not blk.size:
                continue
            idx_yx = tyx[k][1]
            for j, (_, tx, ty, a, b, nu) in enumerate(txy[k][0]):
                r, rinv = cat.R_data(a, b, k)
                for mu in range(cat.N[b, a, k]):
                    i = idx_yx[("t", ty, tx, b, a, mu)]
                    if inverse:
                        blk[j, i] = rinv[nu, mu]
                    else:
                        blk[i, j] = r[mu, nu]
        return f

    def braid_inv(self, x: Obj, y: Obj) -> Morphism:
        return self.braid(x, y, inverse=True)

    def unit(self) -> Obj:
        return ("L", (0,))

    def lunit(self, x: Obj, inverse: bool = False) -> Morphism:
        """``1 x -> x``."""
        one = self.unit()
        src = ("T", one, x)
        f = self.zero(src, x) if not inverse else self.zero(x, src)
        ts, tx = self.trees(src), self.trees(x)
        for k in range(self.rank):
            for j, (_, _, t, _, _, _) in enumerate(ts[k][0]):
                i = tx[k][1][t]
                if inverse:
                    f.blocks[k][j, i] = Q(1)
                else:
                    f.blocks[k][i, j] = Q(1)
        return f

    def runit(self, x: Obj, inverse: bool = False) -> Morphism:
        """``x 1 -> x``."""
        one = self.unit()
        src = ("T", x, one)
        f = self.zero(src, x) if not inverse else self.zero(x, src)
        ts, tx = self.trees(src), self.trees(x)
        for k in range(self.rank):
            for j, (_, t, _, _, _, _) in enumerate(ts[k][0]):
                i = tx[k][1][t]
                if inverse:
                    f.blocks[k][j, i] = Q(1)
                else:
                    f.blocks[k][i, j] = Q(1)
        return f

    def vertex(self, a: int, b: int, c: int, mu: int = 0, coeff: Any = 1) -> Morphism:
        """The basis fusion vertex ``a b -> c`` scaled by ``coeff``."""
        src = ("T", ("L", (a,)), ("L", (b,)))
        dst = ("L", (c,))
        f = self.zero(src, dst)
        j = self.trees(src)[c][1][("t", ("l", 0), ("l", 0), a, b, mu)]
        f.blocks[c][0, j] = simplify(Q(1) * coeff)
        return f

    def splitting(self, a: int, b: int, c: int, mu: int = 0, coeff: Any = 1) -> Morphism:
        """The dual basis vertex ``c -> a b`` scaled by ``coeff``."""
        src = ("L", (c,))
        dst = ("T", ("L", (a,)), ("L", (b,)))
        f = self.zero(src, dst)
        i = self.trees(dst)[c][1][("t", ("l", 0), ("l", 0), a, b, mu)]
        f.blocks[c][i, 0] = simplify(Q(1) * coeff)
        return f

def _simp(arr: np.ndarray) -> np.ndarray:
    arr = np.asarray(arr, dtype=object)
    flat = arr.reshape(-1)
    for i in range(flat.size):
        flat[i] = simplify(flat[i])
    return arr
