"""Regenerate the bundled algebra-object fixtures.  Run from the repository root."""

import json
from itertools import product
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "frobtft" / "fixtures" / "algebra_objects"


def dump(name, doc):
    (OUT / f"{name}.json").write_text(json.dumps({"name": name, **doc}, indent=1) + "\n", encoding="utf-8")


def simple_current(category, labels, n):
    # A = sum of the labels of Z/n, each with multiplicity one, m(g^a, g^b) = g^(a+b)
    comps = {}
    for a, b in product(range(n), repeat=2):
        comps[f"{labels[a]},{labels[b]},{labels[(a + b) % n]}"] = [[["1"]]]
    return {"category": category, "mult": {l: 1 for l in labels}, "m_components": comps, "unit": ["1"]}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for cat, labels in [("trivial", ["1"]), ("pointed_z2", ["1", "g"]), ("pointed_z3", ["1", "g", "g2"]),
                        ("semion", ["1"]), ("fibonacci", ["1"]), ("ising", ["1"])]:
        doc = simple_current(cat, labels[:1], 1)
        dump(f"{cat}_unit", doc)
    dump("z2_group", simple_current("pointed_z2", ["1", "g"], 2))
    dump("z3_group", simple_current("pointed_z3", ["1", "g", "g2"], 3))
    dump("ising_1psi", simple_current("ising", ["1", "p"], 2))
    bad = simple_current("pointed_z2", ["1", "g"], 2)
    bad["m_components"]["1,g,g"] = [[["-1"]]]
    dump("z2_group_corrupt", bad)
    # a matrix algebra over the trivial category, written as an algebra object
    units = [(i, j) for i in range(2) for j in range(2)]
    m = [[["0"] * 4 for _ in range(4)] for _ in range(4)]
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if j == k:
                m[a][b][units.index((i, l))] = "1"
    dump("trivial_m2", {"category": "trivial", "mult": {"1": 4}, "m_components": {"1,1,1": m},
                        "unit": ["1", "0", "0", "1"], "counit": ["1", "0", "0", "1"]})


if __name__ == "__main__":
    main()
