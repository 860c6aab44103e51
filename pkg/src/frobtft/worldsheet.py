"""Combinatorial world sheets and directed dual triangulations.

A world sheet is a set of oriented polygons, each a cyclic list of edge ids
read counter-clockwise, together with an involution pairing glued edges.  Two
glued edges are identified with opposite orientations, so the result is always
an oriented surface.  Unglued edges form the boundary.  Each boundary component
is either a closed state boundary (``closed-in k`` / ``closed-out k``) or
physical; a physical component may carry open state intervals, each a run of
consecutive edges labelled ``open-in k`` / ``open-out k``.

A dual triangulation is a trivalent ribbon graph with labelled legs.  Darts are
integers; ``rot[v]`` lists the three darts at vertex ``v`` counter-clockwise,
``alpha`` pairs the darts of internal edges and ``legs`` maps each free dart to
its slot.  ``out`` is the set of darts leaving their vertex.

``auto_triangulate`` works directly on the polygon complex:

* every polygon becomes a node with one dart per side,
* every boundary edge gets a node with darts ``(next, inner, prev)``; these
  nodes form a cycle parallel to the boundary component,
* closed state components get two leg nodes ``(next, prev, leg)`` on the cycle
  (``l`` then ``r`` in boundary direction) whose legs point into the cap,
* open state intervals get one leg node after the first edge of the run,
  with the leg pointing into the physical collar.

Polygon nodes are then split into trivalent vertices.  Boundary direction is
the one that keeps the surface on the left.
"""

from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable

from .errors import InputError

KINDS = ("closed-in", "closed-out", "open-in", "open-out")
_IN = {"closed-in", "open-in"}

Slot = tuple[str, int]


# ---------------------------------------------------------------------------
# world sheets
# ---------------------------------------------------------------------------


class WorldSheet:
    """Polygon gluing complex with typed boundary."""

    def __init__(
        self,
        polygons: Iterable[Iterable[str]],
        glue: Iterable[tuple[str, str]] = (),
        closed: dict[Slot, str] | None = None,
        open_intervals: dict[Slot, Iterable[str]] | None = None,
        cuts: dict[str, dict] | None = None,
        name: str = "X",
        check_numbering: bool = True,
    ):
        self.name = name
        self.polygons = tuple(tuple(str(e) for e in p) for p in polygons)
        self.where: dict[str, tuple[int, int]] = {}
        for pi, poly in enumerate(self.polygons):
            if not poly:
                raise InputError("empty polygon")
            for i, e in enumerate(poly):
                if e in self.where:
                    raise InputError(f"edge {e!r} used twice")
                self.where[e] = (pi, i)
        self.glue: dict[str, str] = {}
        for a, b in glue:
            a, b = str(a), str(b)
            for e in (a, b):
                if e not in self.where:
                    raise InputError(f"glued edge {e!r} is not a polygon side")
                if e in self.glue:
                    raise InputError(f"edge {e!r} glued twice")
            if a == b:
                raise InputError(f"edge {a!r} glued to itself")
            self.glue[a] = b
            self.glue[b] = a
        self.cuts = dict(cuts or {})
        self.components = self._boundary_components()
        comp_of = {e: c for c, comp in enumerate(self.components) for e in comp}
        self.closed: dict[Slot, int] = {}
        for slot, edge in (closed or {}).items():
            slot = (str(slot[0]), int(slot[1]))
            if slot[0] not in ("closed-in", "closed-out"):
                raise InputError(f"bad closed boundary type {slot[0]!r}")
            if edge not in comp_of:
                raise InputError(f"{slot[0]} {slot[1]}: edge {edge!r} is not on the boundary")
            if comp_of[edge] in self.closed.values():
                raise InputError(f"boundary component of {edge!r} typed twice")
            self.closed[slot] = comp_of[edge]
        self.open: dict[Slot, tuple[str, ...]] = {}
        for slot, edges in (open_intervals or {}).items():
            slot = (str(slot[0]), int(slot[1]))
            if slot[0] not in ("open-in", "open-out"):
                raise InputError(f"bad open interval type {slot[0]!r}")
            self.open[slot] = self._as_run(slot, [str(e) for e in edges], comp_of)
        self._check_typing(check_numbering)

    # construction helpers ---------------------------------------------

    def _boundary_components(self) -> list[tuple[str, ...]]:
        seen: set[str] = set()
        comps = []
        for poly in self.polygons:
            for e in poly:
                if e in self.glue or e in seen:
                    continue
                comp = []
                cur = e
                while cur not in seen:
                    seen.add(cur)
                    comp.append(cur)
                    cur = self.next_boundary_edge(cur)
                if cur != e:
                    raise InputError(f"boundary through {e!r} is not a circle")
                comps.append(tuple(comp))
        return comps

    def _next_side(self, e: str) -> str:
        pi, i = self.where[e]
        poly = self.polygons[pi]
        return poly[(i + 1) % len(poly)]

    def next_boundary_edge(self, e: str) -> str:
        """Boundary edge following ``e`` with the surface on the left."""
        f = self._next_side(e)
        steps = 0
        while f in self.glue:
            f = self._next_side(self.glue[f])
            steps += 1
            if steps > len(self.where):
                raise InputError("corrupt gluing")
        return f

    def _as_run(self, slot: Slot, edges: list[str], comp_of: dict[str, int]) -> tuple[str, ...]:
        if not edges:
            raise InputError(f"{slot[0]} {slot[1]}: empty interval")
        for e in edges:
            if e not in comp_of:
                raise InputError(f"{slot[0]} {slot[1]}: edge {e!r} is not on the boundary")
        comp = self.components[comp_of[edges[0]]]
        if any(comp_of[e] != comp_of[edges[0]] for e in edges):
            raise InputError(f"{slot[0]} {slot[1]}: interval spans two components")
        members = set(edges)
        starts = [e for e in comp if e in members and comp[comp.index(e) - 1] not in members]
        if len(starts) != 1:
            raise InputError(f"{slot[0]} {slot[1]}: edges do not form one interval")
        k = comp.index(starts[0])
        run = tuple(comp[(k + j) % len(comp)] for j in range(len(edges)))
        if set(run) != members:
            raise InputError(f"{slot[0]} {slot[1]}: edges do not form one interval")
        return run

    def _check_typing(self, numbering: bool = True) -> None:
        for kind in KINDS if numbering else ():
            idx = sorted(k for (t, k) in self.slots if t == kind)
            if idx != list(range(1, len(idx) + 1)):
                raise InputError(f"{kind} numbering must be 1..{len(idx)}, got {idx}")
        label: dict[str, Slot] = {}
        for slot, run in self.open.items():
            for e in run:
                if e in label:
                    raise InputError(f"edge {e!r} in two open intervals")
                label[e] = slot
        closed_comps = set(self.closed.values())
        for c, comp in enumerate(self.components):
            if c in closed_comps:
                if any(e in label for e in comp):
                    raise InputError("open interval on a closed state boundary")
                continue
            for i, e in enumerate(comp):
                if e in label:
                    before, after = comp[i - 1], comp[(i + 1) % len(comp)]
                    for nb in (before, after):
                        if nb in label and label[nb] != label[e]:
                            raise InputError(
                                f"open intervals {label[e]} and {label[nb]} meet without a physical boundary"
                            )
                    if all(x in label for x in comp):
                        raise InputError("open interval fills a whole boundary circle")

    # derived data -----------------------------------------------------

    @property
    def slots(self) -> list[Slot]:
        return sorted(list(self.closed) + list(self.open), key=slot_key)

    @property
    def physical_components(self) -> list[int]:
        used = set(self.closed.values())
        return [c for c in range(len(self.components)) if c not in used]

    def vertex_count(self) -> int:
        parent = list(range(sum(len(p) for p in self.polygons)))
        base = []
        k = 0
        for p in self.polygons:
            base.append(k)
            k += len(p)

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def corner(e: str, end: bool) -> int:
            pi, i = self.where[e]
            n = len(self.polygons[pi])
            return base[pi] + ((i + 1) % n if end else i)

        for a, b in self.glue.items():
            parent[find(corner(a, False))] = find(corner(b, True))
        return len({find(x) for x in range(len(parent))})

    def euler_characteristic(self) -> int:
        edges = len(self.glue) // 2 + sum(len(c) for c in self.components)
        return self.vertex_count() - edges + len(self.polygons)

    def connected_components(self) -> list[list[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.polygons))}
        for a, b in self.glue.items():
            adj[self.where[a][0]].add(self.where[b][0])
        seen: set[int] = set()
        out = []
        for s in range(len(self.polygons)):
            if s in seen:
                continue
            stack, comp = [s], []
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in sorted(adj[x]):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def genus(self) -> int:
        """Total genus, summed over connected components."""
        total = 0
        for comp in self.connected_components():
            sub = self.restrict(comp)
            total += (2 - sub.euler_characteristic() - len(sub.components)) // 2
        return total

    def restrict(self, polys: list[int]) -> "WorldSheet":
        keep = set(polys)
        edges = {e for pi in polys for e in self.polygons[pi]}
        closed = {s: self.components[c][0] for s, c in self.closed.items() if self.components[c][0] in edges}
        opens = {s: run for s, run in self.open.items() if run[0] in edges}
        return WorldSheet(
            [self.polygons[i] for i in sorted(keep)],
            [(a, b) for a, b in self.glue.items() if a < b and a in edges],
            closed,
            opens,
            name=self.name,
            check_numbering=False,
        )

    def closed_up_euler_characteristic(self) -> int:
        """Euler characteristic of the closure (caps and semi-discs glued on)."""
        return self.euler_characteristic() + len(self.closed)

    def summary(self) -> dict[str, Any]:
        return {
            "polygons": len(self.polygons),
            "euler_characteristic": self.euler_characteristic(),
            "genus": self.genus(),
            "connected_components": len(self.connected_components()),
            "boundary_components": len(self.components),
            "slots": [f"{k} {i}" for k, i in self.slots],
        }

    # serialization ----------------------------------------------------

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "polygons": [list(p) for p in self.polygons],
            "glue": sorted([a, b] for a, b in self.glue.items() if a < b),
            "boundary": {
                "components": [
                    {"type": k, "index": i, "edge": self.components[c][0]}
                    for (k, i), c in sorted(self.closed.items(), key=lambda x: slot_key(x[0]))
                ],
                "intervals": [
                    {"type": k, "index": i, "edges": list(run)}
                    for (k, i), run in sorted(self.open.items(), key=lambda x: slot_key(x[0]))
                ],
            },
            "cuts": self.cuts,
        }

    def relabel(self, edge_map: dict[str, str], polygon_order: list[int] | None = None,
                rotations: list[int] | None = None) -> "WorldSheet":
        """An isomorphic copy: renamed edges, reordered and rotated polygons."""
        order = polygon_order if polygon_order is not None else list(range(len(self.polygons)))
        rots = rotations if rotations is not None else [0] * len(self.polygons)
        polys = []
        for pi in order:
            p = [edge_map.get(e, e) for e in self.polygons[pi]]
            r = rots[pi] % len(p)
            polys.append(p[r:] + p[:r])
        f = lambda e: edge_map.get(e, e)  # noqa: E731
        return WorldSheet(
            polys,
            [(f(a), f(b)) for a, b in self.glue.items() if a < b],
            {s: f(self.components[c][0]) for s, c in self.closed.items()},
            {s: [f(e) for e in run] for s, run in self.open.items()},
            {n: {**spec, "edges": [f(e) for e in spec.get("edges", [])]} for n, spec in self.cuts.items()},
            name=self.name,
        )


def slot_key(slot: Slot) -> tuple[int, int]:
    return (KINDS.index(slot[0]) if slot[0] in KINDS else len(KINDS), slot[1])


def worldsheet_from_json(doc: dict, name: str = "X") -> WorldSheet:
    try:
        polygons = doc["polygons"]
        glue = [tuple(p) for p in doc.get("glue", [])]
        if any(len(p) != 2 for p in glue):
            raise InputError("glue entries must be pairs")
        bnd = doc.get("boundary", {})
        closed = {}
        for item in bnd.get("components", []):
            kind = item["type"]
            if kind == "physical":
                continue
            closed[(kind, int(item["index"]))] = str(item["edge"])
        opens = {}
        for item in bnd.get("intervals", []):
            opens[(item["type"], int(item["index"]))] = [str(e) for e in item["edges"]]
        return WorldSheet(polygons, glue, closed, opens, doc.get("cuts", {}), str(doc.get("name", name)))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed world sheet: {exc}") from exc


def load_worldsheet(path: str | Path) -> WorldSheet:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    return worldsheet_from_json(doc, name=path.stem)


# ---------------------------------------------------------------------------
# closing up and cutting
# ---------------------------------------------------------------------------


def close_up(X: WorldSheet) -> WorldSheet:
    """Glue a cap to every closed state boundary and a semi-disc to every open one.

    The cap polygons and semi-disc arcs are recorded in ``X̄.cuts`` under the
    key ``"marks"`` as ``{"closed-in 1": [edges...], "open-in 1": [arc]}``.
    Only physical boundary remains.
    """
    polys = [list(p) for p in X.polygons]
    glue = [(a, b) for a, b in X.glue.items() if a < b]
    marks: dict[str, list[str]] = {}
    for (kind, k), c in sorted(X.closed.items(), key=lambda x: slot_key(x[0])):
        comp = X.components[c]
        cap = [f"{kind}{k}:cap{j}" for j in range(len(comp))]
        # the cap runs the other way round
        polys.append(list(reversed(cap)))
        glue += list(zip(comp, cap))
        marks[f"{kind} {k}"] = cap
    for (kind, k), run in sorted(X.open.items(), key=lambda x: slot_key(x[0])):
        sides = [f"{kind}{k}:half{j}" for j in range(len(run))]
        arc = f"{kind}{k}:arc"
        polys.append(list(reversed(sides)) + [arc])
        glue += list(zip(run, sides))
        marks[f"{kind} {k}"] = [arc]
    return WorldSheet(polys, glue, {}, {}, {"marks": marks}, name=f"{X.name}-closed")


def _cut(X: WorldSheet, edges: list[str]) -> tuple[list, list]:
    for e in edges:
        if e not in X.glue:
            raise InputError(f"cut path edge {e!r} is not an interior edge")
    partners = [X.glue[e] for e in edges]
    if set(edges) & set(partners) or len(set(edges)) != len(edges):
        raise InputError("cut path uses an edge twice")
    removed = set(edges) | set(partners)
    glue = [(a, b) for a, b in X.glue.items() if a < b and a not in removed]
    return glue, partners


def cut_along_circle(X: WorldSheet, path: list[str] | str) -> WorldSheet:
    """Cut along a closed edge path.

    The listed edges become the new outgoing closed boundary and their glued
    partners the new incoming one, both numbered last.
    """
    edges = _path_edges(X, path, "circle")
    glue, partners = _cut(X, edges)
    n_in = 1 + sum(1 for k, _ in X.closed if k == "closed-in")
    n_out = 1 + sum(1 for k, _ in X.closed if k == "closed-out")
    closed = {s: X.components[c][0] for s, c in X.closed.items()}
    closed[("closed-out", n_out)] = edges[0]
    closed[("closed-in", n_in)] = partners[0]
    Y = WorldSheet(X.polygons, glue, closed, X.open, _shift_cuts(X, edges), name=f"{X.name}-cut")
    for side in (edges, partners):
        comp = next(c for c in Y.components if side[0] in c)
        if set(comp) != set(side):
            raise InputError("cut path is not an embedded circle away from the boundary")
    return Y


def cut_along_interval(X: WorldSheet, path: list[str] | str) -> WorldSheet:
    """Cut along an edge path running between two physical boundary points.

    The listed edges become a new ``open-out`` interval and their partners a
    new ``open-in`` interval, numbered last.
    """
    edges = _path_edges(X, path, "interval")
    glue, partners = _cut(X, edges)
    n_in = 1 + sum(1 for k, _ in X.open if k == "open-in")
    n_out = 1 + sum(1 for k, _ in X.open if k == "open-out")
    opens = dict(X.open)
    opens[("open-out", n_out)] = edges
    opens[("open-in", n_in)] = list(reversed(partners))
    closed = {s: X.components[c][0] for s, c in X.closed.items()}
    try:
        Y = WorldSheet(X.polygons, glue, closed, opens, _shift_cuts(X, edges), name=f"{X.name}-cut")
    except InputError as exc:
        raise InputError(f"interval cut is not valid here: {exc}") from exc
    for side in (edges, partners):
        comp = next(c for c in Y.components if side[0] in c)
        if set(comp) == set(side):
            raise InputError("cut path is a circle, not an interval")
    return Y


def _path_edges(X: WorldSheet, path: list[str] | str, kind: str) -> list[str]:
    if isinstance(path, str):
        if path not in X.cuts:
            raise InputError(f"world sheet {X.name!r} has no cut named {path!r}")
        spec = X.cuts[path]
        if spec.get("kind", kind) != kind:
            raise InputError(f"cut {path!r} is a {spec.get('kind')} cut, not a {kind} cut")
        return [str(e) for e in spec["edges"]]
    return [str(e) for e in path]


def _shift_cuts(X: WorldSheet, used: list[str]) -> dict:
    return {n: s for n, s in X.cuts.items() if not set(s.get("edges", [])) & set(used) and n != "marks"}


def cut(X: WorldSheet, name: str) -> WorldSheet:
    """Apply the named cut from the fixture."""
    if name not in X.cuts:
        raise InputError(f"world sheet {X.name!r} has no cut named {name!r}")
    spec = X.cuts[name]
    if spec.get("kind") == "interval":
        return cut_along_interval(X, name)
    if spec.get("kind") == "circle":
        return cut_along_circle(X, name)
    raise InputError(f"cut {name!r} needs kind 'circle' or 'interval'")


def cut_kind(X: WorldSheet, name: str) -> str:
    if name not in X.cuts:
        raise InputError(f"world sheet {X.name!r} has no cut named {name!r}")
    return "closed" if X.cuts[name].get("kind") == "circle" else "open"


# ---------------------------------------------------------------------------
# dual triangulations
# ---------------------------------------------------------------------------


@dataclass
class DualTriangulation:
    rot: list[tuple[int, int, int]]
    alpha: dict[int, int]
    legs: dict[int, tuple[str, int, str]]
    out: set[int]
    target_chi: int
    slots: list[Slot] = field(default_factory=list)
    source: str = ""

    # structure --------------------------------------------------------

    @property
    def darts(self) -> list[int]:
        return [d for r in self.rot for d in r]

    def vertex_of(self) -> dict[int, int]:
        return {d: v for v, r in enumerate(self.rot) for d in r}

    def sigma(self) -> dict[int, int]:
        s = {}
        for r in self.rot:
            for i in range(3):
                s[r[i]] = r[(i + 1) % 3]
        return s

    def edges(self) -> list[tuple[int, int]]:
        return sorted((d, e) for d, e in self.alpha.items() if d < e)

    def faces(self) -> list[list[int]]:
        sig = self.sigma()
        seen: set[int] = set()
        out = []
        for d in sorted(self.darts):
            if d in seen:
                continue
            face = []
            x = d
            while x not in seen:
                seen.add(x)
                face.append(x)
                x = sig[self.alpha.get(x, x)]
            out.append(face)
        return out

    def euler_characteristic(self) -> int:
        return len(self.rot) - len(self.edges()) + len(self.faces())

    def vertex_kind(self, v: int) -> str:
        n_out = sum(1 for d in self.rot[v] if d in self.out)
        return {1: "m", 2: "delta"}.get(n_out, "bad")

    def problems(self) -> list[str]:
        errs = []
        seen: set[int] = set()
        for v, r in enumerate(self.rot):
            if len(r) != 3 or len(set(r)) != 3:
                errs.append(f"vertex {v} is not trivalent")
            if set(r) & seen:
                errs.append(f"vertex {v} shares a dart")
            seen |= set(r)
            if self.vertex_kind(v) == "bad":
                errs.append(f"vertex {v} needs an incoming and an outgoing edge")
        for d, e in self.alpha.items():
            if self.alpha.get(e) != d or d == e:
                errs.append(f"dart {d} is not paired consistently")
            elif (d in self.out) == (e in self.out):
                errs.append(f"edge ({d},{e}) is not directed")
        for d in seen:
            if (d in self.alpha) == (d in self.legs):
                errs.append(f"dart {d} must be either paired or a leg")
        for d, (kind, _, _) in self.legs.items():
            if (kind in _IN) == (d in self.out):
                errs.append(f"leg {d} of {kind} points the wrong way")
        for slot in self.slots:
            ds = [d for d, s in self.legs.items() if s[:2] == slot]
            want = 2 if slot[0].startswith("closed") else 1
            if len(ds) != want:
                errs.append(f"{slot[0]} {slot[1]} is not covered")
        face_of = {d: i for i, f in enumerate(self.faces()) for d in f}
        for slot in self.slots:
            if slot[0].startswith("closed"):
                ds = sorted(d for d, s in self.legs.items() if s[:2] == slot)
                if len({face_of[d] for d in ds}) != 1:
                    errs.append(f"legs of {slot[0]} {slot[1]} lie in different faces")
                    continue
                others = [d for d in self.legs if face_of[d] == face_of[ds[0]] and d not in ds]
                if others:
                    errs.append(f"cap of {slot[0]} {slot[1]} contains other legs")
        if self.euler_characteristic() != self.target_chi:
            errs.append(
                f"faces are not disks: graph gives chi {self.euler_characteristic()}, expected {self.target_chi}"
            )
        return errs

    def is_valid(self) -> bool:
        return not self.problems()

    def copy(self) -> "DualTriangulation":
        return DualTriangulation(
            list(self.rot), dict(self.alpha), dict(self.legs), set(self.out), self.target_chi,
            list(self.slots), self.source,
        )

    def canonical(self) -> tuple:
        """Hashable form, used to compare graphs exactly."""
        return (
            tuple(sorted(self.rot)),
            tuple(sorted(self.alpha.items())),
            tuple(sorted(self.legs.items())),
            tuple(sorted(self.out)),
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "vertices": [list(r) for r in self.rot],
            "edges": [[d, e] if d in self.out else [e, d] for d, e in self.edges()],
            "legs": [[d, k, i, p] for d, (k, i, p) in sorted(self.legs.items())],
            "target_chi": self.target_chi,
        }


def triangulation_from_json(doc: dict, X: WorldSheet) -> DualTriangulation:
    try:
        rot = [tuple(int(x) for x in r) for r in doc["vertices"]]
        alpha, out = {}, set()
        for tail, head in doc["edges"]:
            alpha[int(tail)] = int(head)
            alpha[int(head)] = int(tail)
            out.add(int(tail))
        legs = {}
        for d, k, i, p in doc["legs"]:
            legs[int(d)] = (str(k), int(i), str(p))
            if k not in _IN:
                out.add(int(d))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed triangulation: {exc}") from exc
    T = DualTriangulation(rot, alpha, legs, out, _target_chi(X), X.slots, X.name)
    errs = T.problems()
    if errs:
        raise InputError("invalid triangulation: " + "; ".join(errs[:5]))
    return T


def _target_chi(X: WorldSheet) -> int:
    # physical collars count as faces, so the graph sees the physical holes capped
    return X.closed_up_euler_characteristic() + len(X.physical_components)


class _Builder:
    def __init__(self) -> None:
        self.verts: list[list[int]] = []
        self.alpha: dict[int, int] = {}
        self.legs: dict[int, tuple[str, int, str]] = {}
        self.n = 0

    def vertex(self, k: int) -> list[int]:
        ds = list(range(self.n, self.n + k))
        self.n += k
        self.verts.append(ds)
        return ds

    def join(self, a: int, b: int) -> None:
        if a in self.alpha or b in self.alpha:
            raise AssertionError("dart joined twice")
        self.alpha[a] = b
        self.alpha[b] = a


def auto_triangulate(X: WorldSheet, rotation: int = 0, seed: int | None = None) -> DualTriangulation:
    """Build a directed dual triangulation of the closure of ``X``.

    ``rotation`` shifts where each polygon's trivalent tree starts and
    ``seed`` randomizes the preferred edge directions; both give different
    but equally valid triangulations.
    """
    b = _Builder()
    pdarts: list[list[int]] = [b.vertex(len(p)) for p in X.polygons]
    done: set[str] = set()
    for pi, poly in enumerate(X.polygons):
        for i, e in enumerate(poly):
            if e in X.glue and e not in done:
                f = X.glue[e]
                qj, j = X.where[f]
                b.join(pdarts[pi][i], pdarts[qj][j])
                done |= {e, f}
    closed_at = {c: s for s, c in X.closed.items()}
    open_first = {run[0]: s for s, run in X.open.items()}
    for c, comp in enumerate(X.components):
        cycle: list[tuple[int, int]] = []  # (next dart, prev dart) per node
        for e in comp:
            nxt, inner, prv = b.vertex(3)
            pi, i = X.where[e]
            b.join(inner, pdarts[pi][i])
            cycle.append((nxt, prv))
            legs = []
            if e == comp[0] and c in closed_at:
                legs = [(closed_at[c], "l"), (closed_at[c], "r")]
            elif e in open_first:
                legs = [(open_first[e], "")]
            for slot, part in legs:
                nxt, prv, leg = b.vertex(3)
                b.legs[leg] = (slot[0], slot[1], part)
                cycle.append((nxt, prv))
        for k in range(len(cycle)):
            b.join(cycle[k][0], cycle[(k + 1) % len(cycle)][1])
    rot, alpha = _make_trivalent(b, len(pdarts), rotation)
    T = DualTriangulation(rot, alpha, b.legs, set(), _target_chi(X), X.slots, X.name)
    T = _renumber(T)
    orient(T, seed=seed)
    errs = T.problems()
    if errs:
        raise AssertionError("auto_triangulate produced an invalid graph: " + "; ".join(errs))
    return T


def _make_trivalent(b: _Builder, n_poly: int, rotation: int) -> tuple[list[tuple[int, int, int]], dict[int, int]]:
    alpha = b.alpha
    rot: list[tuple[int, int, int]] = []
    n = b.n

    def fresh(k: int) -> list[int]:
        nonlocal n
        ds = list(range(n, n + k))
        n += k
        return ds

    for v, ds in enumerate(b.verts):
        if v >= n_poly:
            rot.append(tuple(ds))
            continue
        k = len(ds)
        if k == 1:
            x, y = fresh(2)
            alpha[x], alpha[y] = y, x
            rot.append((ds[0], x, y))
        elif k == 2 and alpha[ds[0]] != ds[1]:
            p, q = alpha.pop(ds[0]), alpha.pop(ds[1])
            alpha[p], alpha[q] = q, p
        elif k == 2:
            # a bigon glued to itself is a sphere; use the theta graph
            del alpha[ds[0]], alpha[ds[1]]
            a1, b1, c1, a2, b2, c2 = fresh(6)
            for x, y in ((a1, a2), (b1, c2), (c1, b2)):
                alpha[x], alpha[y] = y, x
            rot += [(a1, b1, c1), (a2, b2, c2)]
        else:
            r = rotation % k
            ds = ds[r:] + ds[:r]
            if k == 3:
                rot.append(tuple(ds))
                continue
            x = fresh(1)[0]
            rot.append((ds[0], ds[1], x))
            for j in range(2, k - 2):
                y, z = fresh(2)
                alpha[x], alpha[y] = y, x
                rot.append((y, ds[j], z))
                x = z
            y = fresh(1)[0]
            alpha[x], alpha[y] = y, x
            rot.append((y, ds[k - 2], ds[k - 1]))
    return rot, alpha


def _renumber(T: DualTriangulation) -> DualTriangulation:
    order = {d: i for i, d in enumerate(T.darts)}
    return DualTriangulation(
        [tuple(order[d] for d in r) for r in T.rot],
        {order[a]: order[b] for a, b in T.alpha.items()},
        {order[d]: s for d, s in T.legs.items()},
        {order[d] for d in T.out},
        T.target_chi,
        T.slots,
        T.source,
    )


def orient(T: DualTriangulation, prefer: dict[tuple[int, int], bool] | None = None,
           seed: int | None = None) -> None:
    """Choose edge directions so every vertex has an incoming and an outgoing dart.

    Edges are decided in order; for edge ``(d, e)`` with ``d < e`` the first
    choice is ``prefer[(d, e)]`` (``True`` means ``d`` is the tail), by default
    ``True``.  Backtracking makes the result the least valid assignment in that
    order.  Modifies ``T`` in place.
    """
    edges = T.edges()
    rng = random.Random(seed) if seed is not None else None
    first = {}
    for ed in edges:
        if prefer is not None and ed in prefer:
            first[ed] = prefer[ed]
        elif rng is not None:
            first[ed] = rng.random() < 0.5
        else:
            first[ed] = True
    vof = T.vertex_of()
    legs_out = {d for d, s in T.legs.items() if s[0] not in _IN}
    pending = {v: sum(1 for d in r if d in T.alpha) for v, r in enumerate(T.rot)}
    n_out = {v: sum(1 for d in r if d in legs_out) for v, r in enumerate(T.rot)}
    last_edge: dict[int, int] = {}
    for k, (d, e) in enumerate(edges):
        last_edge[vof[d]] = k
        last_edge[vof[e]] = k
    # vertices whose darts are all legs
    for v, r in enumerate(T.rot):
        if pending[v] == 0 and n_out[v] in (0, 3):
            raise InputError(f"vertex {v} has only legs pointing one way")
    choice = [False] * len(edges)

    def ok(v: int) -> bool:
        return 0 < n_out[v] < 3

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * len(edges) + 100))

    def go(k: int) -> bool:
        if k == len(edges):
            return True
        d, e = edges[k]
        for tail_d in (first[(d, e)], not first[(d, e)]):
            tail = d if tail_d else e
            n_out[vof[tail]] += 1
            vd, ve = vof[d], vof[e]
            good = all(ok(v) for v in {vd, ve} if last_edge[v] == k)
            if good and go(k + 1):
                choice[k] = tail_d
                return True
            n_out[vof[tail]] -= 1
        return False

    if not go(0):
        raise InputError("no direction assignment exists for this graph")
    T.out = set(legs_out)
    for (d, e), tail_d in zip(edges, choice):
        T.out.add(d if tail_d else e)


# ---------------------------------------------------------------------------
# moves
# ---------------------------------------------------------------------------


def _repair(T: DualTriangulation, new_edges: list[tuple[int, int]]) -> DualTriangulation:
    """Direct the new edges, keeping every old direction if possible.

    New edges are tried tail-first at their smaller dart.  If no choice works
    locally, all directions are re-solved with the old ones preferred.
    """
    new_edges = [tuple(sorted(ed)) for ed in new_edges]
    vof = T.vertex_of()
    touched = {vof[x] for ed in new_edges for x in ed}
    for bits in range(2 ** len(new_edges)):
        out = {x for x in T.out if all(x not in ed for ed in new_edges)}
        for k, (d, e) in enumerate(new_edges):
            out.add(e if bits >> k & 1 else d)
        T.out = out
        if all(T.vertex_kind(v) != "bad" for v in touched):
            return T
    prefer = {ed: ed[0] in T.out for ed in T.edges()}
    orient(T, prefer=prefer)
    return T


def _next_id(T: DualTriangulation) -> int:
    return max(T.darts, default=-1) + 1


def fusion_move(T: DualTriangulation, dart: int) -> DualTriangulation:
    """The 2-2 (IH) move on the internal edge through ``dart``."""
    if dart not in T.alpha:
        raise InputError(f"dart {dart} is not on an internal edge")
    vof = T.vertex_of()
    d, e = dart, T.alpha[dart]
    u, v = vof[d], vof[e]
    if u == v:
        raise InputError("fusion move needs an edge between two distinct vertices")
    ru, rv = list(T.rot[u]), list(T.rot[v])
    iu, iv = ru.index(d), rv.index(e)
    a, b_ = ru[(iu + 1) % 3], ru[(iu + 2) % 3]
    c, dd = rv[(iv + 1) % 3], rv[(iv + 2) % 3]
    new = T.copy()
    # around the merged four-valent vertex the darts read a, b, c, dd
    new.rot[u] = (d, b_, c)
    new.rot[v] = (e, dd, a)
    new.out.discard(d)
    new.out.discard(e)
    return _repair(new, [(d, e)])


def insert_bubble(T: DualTriangulation, dart: int) -> DualTriangulation:
    """Replace the internal edge through ``dart`` by a Δ vertex, a bigon and an m vertex."""
    if dart not in T.alpha:
        raise InputError(f"dart {dart} is not on an internal edge")
    tail = dart if dart in T.out else T.alpha[dart]
    head = T.alpha[tail]
    n = _next_id(T)
    i, o1, o2, o, j1, j2 = range(n, n + 6)
    new = T.copy()
    del new.alpha[tail], new.alpha[head]
    for x, y in ((tail, i), (o, head), (o1, j2), (o2, j1)):
        new.alpha[x], new.alpha[y] = y, x
    new.rot += [(i, o1, o2), (o, j1, j2)]
    new.out |= {o1, o2, o}
    return new


def remove_bubble(T: DualTriangulation, vertex: int) -> DualTriangulation:
    """Inverse of :func:`insert_bubble`; ``vertex`` is the Δ vertex of the bubble."""
    r = T.rot[vertex]
    vof = T.vertex_of()
    if T.vertex_kind(vertex) != "delta":
        raise InputError("bubble removal starts at a Δ vertex")
    k = next(x for x in range(3) if r[x] not in T.out)
    i, o1, o2 = r[k], r[(k + 1) % 3], r[(k + 2) % 3]
    if o1 not in T.alpha or o2 not in T.alpha or i not in T.alpha:
        raise InputError("no bubble at this vertex")
    w = vof[T.alpha[o1]]
    if vof[T.alpha[o2]] != w or w == vertex or T.vertex_kind(w) != "m":
        raise InputError("no bubble at this vertex")
    rw = T.rot[w]
    kw = next(x for x in range(3) if rw[x] in T.out)
    o, j1, j2 = rw[kw], rw[(kw + 1) % 3], rw[(kw + 2) % 3]
    if T.alpha[o1] != j2 or T.alpha[o2] != j1 or o not in T.alpha:
        raise InputError("bigon at this vertex is not a bubble")
    tail, head = T.alpha[i], T.alpha[o]
    new = T.copy()
    for x in (i, o1, o2, o, j1, j2):
        new.alpha.pop(x, None)
        new.out.discard(x)
    new.alpha[tail], new.alpha[head] = head, tail
    new.rot = [rr for vv, rr in enumerate(T.rot) if vv not in (vertex, w)]
    return new


def retriangulate(T: DualTriangulation, move: str, location: int) -> DualTriangulation:
    """Apply ``fusion_22`` (at a dart), ``bubble`` (at a dart) or ``unbubble`` (at a vertex)."""
    if move == "fusion_22":
        return fusion_move(T, location)
    if move == "bubble":
        return insert_bubble(T, location)
    if move == "unbubble":
        return remove_bubble(T, location)
    raise InputError(f"unknown move {move!r}")


def random_moves(T: DualTriangulation, count: int, seed: int = 0) -> DualTriangulation:
    """Apply ``count`` random fusion and bubble moves (deterministic per seed)."""
    rng = random.Random(seed)
    for _ in range(count):
        vof = T.vertex_of()
        internal = [d for d, e in T.edges() if vof[d] != vof[e]]
        if internal and rng.random() < 0.7:
            T = fusion_move(T, rng.choice(internal))
        else:
            T = insert_bubble(T, rng.choice([d for d, _ in T.edges()]))
    return T
