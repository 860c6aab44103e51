"""Regenerate the bundled Vect algebra fixtures.  Run from the repository root."""

import json
from itertools import permutations, product
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "frobtft" / "fixtures" / "algebras"


def dump(name, basis, table, unit, counit):
    mult = [[a, b, c, str(v)] for (a, b, c), v in sorted(table.items()) if v]
    doc = {"name": name, "dim": len(basis), "basis": basis, "mult": mult,
           "unit": [str(x) for x in unit], "counit": [str(x) for x in counit]}
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")


def group_algebra(name, elems, op, e):
    idx = {g: i for i, g in enumerate(elems)}
    table = {(idx[g], idx[h], idx[op(g, h)]): 1 for g, h in product(elems, repeat=2)}
    unit = [int(g == e) for g in elems]
    dump(name, [str(g) for g in elems], table, unit, unit)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    dump("k", ["1"], {(0, 0, 0): 1}, [1], [1])
    group_algebra("kz2", [0, 1], lambda a, b: (a + b) % 2, 0)
    group_algebra("kz3", [0, 1, 2], lambda a, b: (a + b) % 3, 0)
    perms = sorted(permutations(range(3)))
    group_algebra("ks3", perms, lambda p, q: tuple(p[q[i]] for i in range(3)), (0, 1, 2))
    units = [(i, j) for i in range(2) for j in range(2)]
    table = {}
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if j == k:
                table[(a, b, units.index((i, l)))] = 1
    dump("m2", [f"E{i + 1}{j + 1}" for i, j in units], table, [1, 0, 0, 1], [1, 0, 0, 1])
    dump("dual_numbers", ["1", "x"], {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}, [1, 0], [0, 1])
    dump("kxk", ["e1", "e2"], {(0, 0, 0): 1, (1, 1, 1): 1}, [1, 1], [1, 1])
    # Frobenius and symmetric but not special: m o Delta = diag(1, 1/2)
    dump("kxk_skew", ["e1", "e2"], {(0, 0, 0): 1, (1, 1, 1): 1}, [1, 1], [1, 2])


if __name__ == "__main__":
    main()
