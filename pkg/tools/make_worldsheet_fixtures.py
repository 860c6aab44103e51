"""Regenerate the bundled world sheet fixtures.  Run from the repository root.

Polygons list edge ids counter-clockwise; glued edges are identified with
opposite orientations.  Every cut listed here runs along interior edges.
"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "frobtft" / "fixtures" / "worldsheets"


def dump(name, polygons, glue, components=(), intervals=(), cuts=None):
    doc = {
        "name": name,
        "polygons": polygons,
        "glue": glue,
        "boundary": {
            "components": [{"type": t, "index": i, "edge": e} for t, i, e in components],
            "intervals": [{"type": t, "index": i, "edges": es} for t, i, es in intervals],
        },
        "cuts": cuts or {},
    }
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")


def handles(g, tag=""):
    word, glue = [], []
    for h in range(1, g + 1):
        a, b, a2, b2 = (f"{x}{h}{tag}" for x in ("a", "b", "A", "B"))
        word += [a, b, a2, b2]
        glue += [[a, a2], [b, b2]]
    return word, glue


def holes(n, tag=""):
    word, glue = [], []
    for h in range(1, n + 1):
        c, x, c2 = f"c{h}{tag}", f"x{h}{tag}", f"C{h}{tag}"
        word += [c, x, c2]
        glue.append([c, c2])
    return word, glue


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    # two triangles glued along their boundary
    dump("sphere", [["a", "b", "c"], ["C", "B", "A"]], [["a", "A"], ["b", "B"], ["c", "C"]])
    # a square subdivided into four triangles, doubled
    dump("sphere_fine",
         [["p", "q", "r"], ["R", "s", "t"], ["T", "u", "v"], ["V", "w", "P"], ["Q", "W", "U", "S"]],
         [["p", "P"], ["q", "Q"], ["r", "R"], ["s", "S"], ["t", "T"], ["u", "U"], ["v", "V"], ["w", "W"]])
    dump("torus", [["a", "b", "A", "B"]], [["a", "A"], ["b", "B"]],
         cuts={"meridian": {"kind": "circle", "edges": ["a"]}})
    w, gl = handles(2)
    dump("genus2", [w], gl, cuts={"handle": {"kind": "circle", "edges": ["a1"]}})
    w1, g1 = handles(1)
    w2, g2 = holes(1)
    dump("holed_torus", [w1 + w2], g1 + g2, components=[("closed-out", 1, "x1")],
         cuts={"meridian": {"kind": "circle", "edges": ["a1"]}})
    # cylinder from two stacked squares, core circle m between them
    dump("cylinder",
         [["bot", "r1", "m", "l1"], ["M", "r2", "top", "l2"]],
         [["r1", "l1"], ["r2", "l2"], ["m", "M"]],
         components=[("closed-in", 1, "bot"), ("closed-out", 1, "top")],
         cuts={"core": {"kind": "circle", "edges": ["m"]}})
    w, gl = holes(3)
    dump("pants", [w], gl,
         components=[("closed-in", 1, "x1"), ("closed-out", 1, "x2"), ("closed-out", 2, "x3")])
    # figure 1a: one handle, one incoming and two outgoing circles
    w1, g1 = handles(1)
    w2, g2 = holes(3)
    dump("figure_1a", [w1 + w2], g1 + g2,
         components=[("closed-in", 1, "x1"), ("closed-out", 1, "x2"), ("closed-out", 2, "x3")],
         cuts={"handle": {"kind": "circle", "edges": ["a1"]}})
    # disk: two squares glued along the diameter d, one open-in interval
    dump("disk",
         [["p1", "o1", "q1", "d"], ["p2", "q2", "D"]],
         [["d", "D"]],
         intervals=[("open-in", 1, ["o1"])],
         cuts={"diameter": {"kind": "interval", "edges": ["d"]}})
    # disk with physical boundary only
    dump("disk_plain", [["p1", "q1", "d"], ["p2", "q2", "D"]], [["d", "D"]],
         cuts={"diameter": {"kind": "interval", "edges": ["d"]}})
    # strip: open-in on the left, open-out on the right, cut across the middle
    dump("strip",
         [["s1", "d", "t1", "i1"], ["s2", "o2", "t2", "D"]],
         [["d", "D"]],
         intervals=[("open-in", 1, ["i1"]), ("open-out", 1, ["o2"])],
         cuts={"across": {"kind": "interval", "edges": ["d"]}})
    # annulus with one closed-in circle and an open-out interval on the outer rim
    dump("annulus_mixed",
         [["inner", "r", "u1", "o", "u2", "l"]],
         [["r", "l"]],
         components=[("closed-in", 1, "inner")],
         intervals=[("open-out", 1, ["o"])])


if __name__ == "__main__":
    main()
