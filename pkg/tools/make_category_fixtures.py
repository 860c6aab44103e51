"""Regenerate the bundled category fixtures.

Scalars are written as expressions in z, the primitive root of unity of the
fixture's conductor.  Run from the repository root.
"""

import json
from itertools import product
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "frobtft" / "fixtures" / "categories"


def dump(name, doc):
    doc = {"name": name, **doc}
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")


def pointed(n, labels, f3, r2, twist, conductor, witness, name):
    # Z/n with 3-cocycle f3(a,b,c) and R(a,b) as expressions
    fusion = [[labels[a], labels[b], labels[(a + b) % n], 1] for a, b in product(range(n), repeat=2)]
    F = {}
    for a, b, c in product(range(1, n), repeat=3):
        d = (a + b + c) % n
        F[",".join(labels[x] for x in (a, b, c, d))] = [[f3(a, b, c)]]
    R = {}
    for a, b in product(range(1, n), repeat=2):
        R[",".join(labels[x] for x in (a, b, (a + b) % n))] = [[r2(a, b)]]
    dump(name, {
        "conductor": conductor,
        "labels": labels,
        "unit": labels[0],
        "dual": {labels[a]: labels[(-a) % n] for a in range(n)},
        "fusion": fusion,
        "F": F,
        "R": R,
        "qdim": {l: "1" for l in labels},
        "twist": {labels[a]: twist(a) for a in range(n)},
        "sqrt_witnesses": [[str(n), witness]],
    })


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    dump("trivial", {
        "conductor": 1, "labels": ["1"], "unit": "1", "dual": {"1": "1"},
        "fusion": [["1", "1", "1", 1]], "F": {}, "R": {},
        "qdim": {"1": "1"}, "twist": {"1": "1"}, "sqrt_witnesses": [["1", "1"]],
    })
    # z = zeta_8, sqrt(2) = z + z^7
    pointed(2, ["1", "g"], lambda a, b, c: "1", lambda a, b: "1", lambda a: "1", 8, "z - z^3", "pointed_z2")
    pointed(2, ["1", "s"], lambda a, b, c: "-1", lambda a, b: "z^2", lambda a: ["1", "z^2"][a], 8, "z - z^3", "semion")
    # z = zeta_12, omega = z^4, sqrt(3) = z + z^11
    pointed(3, ["1", "g", "g2"], lambda a, b, c: "1", lambda a, b: f"z^{4 * a * b % 12}",
            lambda a: f"z^{4 * a * a % 12}", 12, "z + z^11", "pointed_z3")

    # Fibonacci, z = zeta_20, phi = 1 + z^4 + z^16, 1/phi = z^4 + z^16
    phi = "1 + z^4 + z^16"
    iphi = "z^4 + z^16"
    fib = {
        "conductor": 20,
        "labels": ["1", "t"],
        "unit": "1",
        "dual": {"1": "1", "t": "t"},
        "fusion": [["1", "1", "1", 1], ["1", "t", "t", 1], ["t", "1", "t", 1], ["t", "t", "1", 1], ["t", "t", "t", 1]],
        "F": {
            "t,t,t,1": [["1"]],
            "t,t,t,t": [[iphi, "1"], [iphi, "-" + iphi.replace(" + ", " - ")]],
        },
        "R": {"t,t,1": "z^12", "t,t,t": "z^6"},
        "qdim": {"1": "1", "t": phi},
        "twist": {"1": "1", "t": "z^8"},
        "sqrt_witnesses": [["3 + z^4 + z^16", "z - z^9"]],
    }
    dump("fibonacci", fib)
    bad = json.loads(json.dumps(fib))
    bad["F"]["t,t,t,t"][0][0] = "1 + " + iphi
    dump("fibonacci_corrupt", bad)

    # Ising, z = zeta_16, sqrt(2) = z^2 + z^14, 1/sqrt(2) = (z^2 - z^6)/2
    h = "1/2*z^2 - 1/2*z^6"
    mh = "-1/2*z^2 + 1/2*z^6"
    L = ["1", "s", "p"]
    fusion = [["1", x, x, 1] for x in L] + [[x, "1", x, 1] for x in L[1:]]
    fusion += [["s", "s", "1", 1], ["s", "s", "p", 1], ["s", "p", "s", 1], ["p", "s", "s", 1], ["p", "p", "1", 1]]
    F = {
        "s,s,s,s": [[h, h], [h, mh]],
        "s,p,s,p": [["-1"]],
        "p,s,p,s": [["-1"]],
        "s,s,p,p": [["1"]], "p,s,s,p": [["1"]], "s,p,s,1": [["1"]],
        "p,p,s,s": [["1"]], "s,p,p,s": [["1"]], "p,s,s,1": [["1"]], "s,s,p,1": [["1"]],
        "p,p,p,p": [["1"]],
    }
    ising = {
        "conductor": 16,
        "labels": L,
        "unit": "1",
        "dual": {x: x for x in L},
        "fusion": fusion,
        "F": F,
        "R": {"s,s,1": "z^15", "s,s,p": "z^3", "s,p,s": "z^12", "p,s,s": "z^12", "p,p,1": "-1"},
        "qdim": {"1": "1", "s": "z^2 - z^6", "p": "1"},
        "twist": {"1": "1", "s": "z", "p": "-1"},
        "sqrt_witnesses": [["4", "2"], ["1/2", h]],
    }
    dump("ising", ising)
    bad = json.loads(json.dumps(ising))
    bad["R"]["s,s,1"] = "-z^15"
    dump("ising_corrupt", bad)


if __name__ == "__main__":
    main()
