"""Command-line front end.

Every command prints one JSON report on stdout.  Reports are deterministic:
keys are sorted, exact scalars are written as strings or coefficient lists, and
wall-clock timing is only included with ``--timing``.

Exit codes: 0 when every requested check passes, 1 when a check fails (this
includes an algebra that admits no special normalization), 2 for usage and
input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .errors import FrobError, InputError, NotSpecial, VerificationFailure
from .exactmath import scalar_json

FIXTURES = Path(__file__).resolve().parent / "fixtures"

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def fixtures_dir() -> Path:
    env = os.environ.get("FROBTFT_FIXTURES")
    return Path(env) if env else FIXTURES


def resolve(name: str, kind: str) -> Path:
    """A path as given, or a bare fixture name looked up under ``kind``."""
    p = Path(name)
    if p.is_file():
        return p
    stem = name[:-5] if name.endswith(".json") else name
    for cand in (fixtures_dir() / kind / f"{stem}.json", fixtures_dir() / kind / f"{stem.replace('-', '_')}.json"):
        if cand.is_file():
            return cand
    raise InputError(f"no {kind} fixture named {name!r}")


def digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _read_json(path: Path) -> dict:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc


class Run:
    """Collects inputs and results for one command."""

    def __init__(self, command: str):
        self.command = command
        self.inputs: dict[str, str] = {}
        self.results: dict[str, Any] = {}
        self.failed: list[str] = []

    def add_input(self, label: str, path: Path) -> Path:
        self.inputs[label] = f"{path.name} sha256:{digest(path)}"
        return path

    def check(self, name: str, passed: bool, **detail: Any) -> bool:
        self.results[name] = {"passed": bool(passed), **detail}
        if not passed:
            self.failed.append(name)
        return passed

    def report(self, status: int) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "failed": self.failed,
            "exit_status": status,
        }


# ---------------------------------------------------------------------------
# loaders
# ---------------------------------------------------------------------------


def _load_any_algebra(run: Run, name: str):
    """A Vect algebra, or an algebra object when the fixture names a category."""
    from .frobcat import load_algebra_object
    from .frobvect import algebra_from_json

    try:
        path = resolve(name, "algebras")
    except InputError:
        path = resolve(name, "algebra_objects")
    run.add_input("algebra", path)
    doc = _read_json(path)
    if "category" in doc:
        cdir = fixtures_dir() / "categories"
        ref = doc["category"]
        if not str(ref).endswith(".json") and (cdir / f"{ref}.json").is_file():
            run.add_input("category", cdir / f"{ref}.json")
        return load_algebra_object(path, cdir if cdir.is_dir() else None)
    return algebra_from_json(doc, name=path.stem)


def _load_vect(run: Run, name: str):
    from .frobvect import algebra_from_json

    path = run.add_input("algebra", resolve(name, "algebras"))
    doc = _read_json(path)
    if "category" in doc:
        raise InputError("correlators need a Vect algebra, not an algebra object")
    return algebra_from_json(doc, name=path.stem)


def _load_ws(run: Run, name: str):
    from .worldsheet import load_worldsheet

    return load_worldsheet(run.add_input("worldsheet", resolve(name, "worldsheets")))


def _normalized(alg):
    from .frobvect import is_normalized_special, normalize_special

    return alg if is_normalized_special(alg) else normalize_special(alg)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_check_category(args: argparse.Namespace, run: Run) -> None:
    from .fusioncat import check_category, duality_data, load_category

    cat = load_category(run.add_input("category", resolve(args.path, "categories")))
    rep = check_category(cat)
    run.check("pentagon", not rep["pentagon_failures"], failures=rep["pentagon_failures"])
    run.check("hexagon", not rep["hexagon_failures"], failures=rep["hexagon_failures"])
    if rep["pentagon_failures"]:
        run.results["dimensions"] = {"skipped": "pentagon failed"}
    else:
        run.check("dimensions", not rep["dimension_problems"], problems=rep["dimension_problems"])
        dd = duality_data(cat)
        run.check("duality", True, right_loops=[scalar_json(x) for x in dd.right_loop])
    run.results["modular"] = {"modular": rep["modular"], "s00": rep["s00"]}
    if args.require_modular:
        run.check("modularity", rep["modular"] is True)
    run.results["category"] = {"name": cat.name, "labels": list(cat.labels), "conductor": cat.conductor}


def cmd_check_algebra(args: argparse.Namespace, run: Run) -> None:
    from .frobvect import VectAlgebra, check_axioms, is_normalized_special, normalize_special

    alg = _load_any_algebra(run, args.path)
    if isinstance(alg, VectAlgebra):
        flags = check_axioms(alg).as_dict()
        run.results["algebra"] = {"name": alg.name, "dim": alg.dim, "category": "Vect"}
    else:
        flags = alg.check_axioms()
        run.results["algebra"] = {"name": alg.name, "category": alg.cat.name,
                                  "multiplicities": dict(zip(alg.cat.labels, alg.multiplicity))}
    run.results["axioms"] = flags
    run.check("associative", flags["associative"])
    run.check("unital", flags["unital"])
    run.check("frobenius", flags["frobenius"])
    if flags.get("frobenius_relations") is not None:
        run.check("frobenius_relations", flags["frobenius_relations"])
    if args.require_special:
        run.check("symmetric", flags["symmetric"])
        run.check("special", flags["special"])
    if flags["special"]:
        if isinstance(alg, VectAlgebra):
            norm = check_axioms(normalize_special(alg)).as_dict()
            norm["already_normalized"] = is_normalized_special(alg)
        else:
            norm = alg.normalize_special().check_axioms()
        run.results["normalized"] = {k: norm[k] for k in ("gamma", "gamma_prime", "already_normalized") if k in norm}


def cmd_zmatrix(args: argparse.Namespace, run: Run) -> None:
    from .frobcat import from_vect, prop_za_dimension_check, verify_modular_commutation, z_tilde
    from .frobvect import VectAlgebra
    from .fusioncat import load_category, modular_data

    alg = _load_any_algebra(run, args.algebra)
    if isinstance(alg, VectAlgebra):
        cat = load_category(run.add_input("category", resolve(args.category or "trivial", "categories")))
        if cat.rank != 1:
            raise InputError(f"a Vect algebra lives in the trivial category, not in {cat.name}")
        alg = from_vect(alg, cat)
    elif args.category:
        cat = load_category(run.add_input("category", resolve(args.category, "categories")))
        if cat.name != alg.cat.name:
            raise InputError(f"algebra {alg.name} lives in {alg.cat.name}, not in {cat.name}")
    cat = alg.cat
    z = z_tilde(alg)
    run.results["z_tilde"] = {"labels": list(cat.labels), "matrix": z.tolist()}
    run.check("integral_nonnegative", bool((z >= 0).all()))
    if args.check_modular:
        md = modular_data(cat, check_modular=False)
        res = verify_modular_commutation(z, md)
        run.check("commutes_with_S", res["S_commutes"], residual_entries=res["S_residual_entries"])
        run.check("commutes_with_T", res["T_commutes"], residual_entries=res["T_residual_entries"])
        run.results["S_invertible"] = md.modular
    if args.check_za:
        res = prop_za_dimension_check(alg, max_labels=args.max_labels)
        run.check("prop_za", res["passed"], left_centre=res["left_centre"], T_algebra=res["T_algebra"])


def _closed_dim(alg) -> int:
    from .exactmath import rank
    from .frobvect import center

    return int(rank(center(alg).T))


def cmd_correlator(args: argparse.Namespace, run: Run) -> None:
    from .evaluator import correlator, correlator_report, triangulation_family, verify_factorization
    from .worldsheet import auto_triangulate, random_moves, triangulation_from_json

    X = _load_ws(run, args.worldsheet)
    A = _normalized(_load_vect(run, args.algebra))
    if args.triangulation == "auto":
        T = auto_triangulate(X)
    else:
        tpath = run.add_input("triangulation", Path(args.triangulation))
        T = triangulation_from_json(_read_json(tpath), X)
    cor = correlator(X, A, T)
    if args.verify_independence:
        others = triangulation_family(X, count=args.verify_independence + 1, seed=args.seed)[1:]
        others = [random_moves(t, 2, seed=args.seed + i) for i, t in enumerate(others)]
        bad = [i for i, t in enumerate(others) if correlator(X, A, t) != cor]
        run.check("triangulation_independence", not bad, triangulations=len(others), disagreeing=bad)
    if args.verify_cut:
        res = verify_factorization(X, args.verify_cut, A)
        run.check(f"factorization:{args.verify_cut}", res["passed"], kind=res["kind"], trace_dim=res["trace_dim"])
    rep = correlator_report(X, A, T, cor, {})
    rep.pop("checks")
    run.results["correlator"] = rep


def cmd_verify_factorization(args: argparse.Namespace, run: Run) -> None:
    from .evaluator import verify_factorization

    X = _load_ws(run, args.worldsheet)
    A = _normalized(_load_vect(run, args.algebra))
    names = [args.cut] if args.cut else sorted(X.cuts.keys() - {"marks"})
    if not names:
        raise InputError(f"world sheet {X.name} declares no cuts")
    for name in names:
        res = verify_factorization(X, name, A)
        run.check(
            f"factorization:{name}",
            res["passed"],
            kind=res["kind"],
            trace_dim=res["trace_dim"],
            lhs=res["lhs"].to_json(),
            rhs=res["rhs"].to_json(),
        )


def cmd_verify_independence(args: argparse.Namespace, run: Run) -> None:
    from .evaluator import correlator, triangulation_family

    X = _load_ws(run, args.worldsheet)
    A = _normalized(_load_vect(run, args.algebra))
    fam = triangulation_family(X, count=args.count, moves=args.moves, seed=args.seed)
    cors = [correlator(X, A, T) for T in fam]
    bad = [i for i, c in enumerate(cors) if c != cors[0]]
    run.check("triangulation_independence", not bad, triangulations=len(fam), disagreeing=bad,
              value=cors[0].to_json())


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="frobtft", description="Exact checks for open/closed TFT from Frobenius algebras.")
    p.add_argument("--output", "-o", help="write the JSON report to this file as well")
    p.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte stability)")
    sub = p.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="verify a fixture").add_subparsers(dest="what", required=True)
    c = check.add_parser("category", help="pentagon, hexagon, duality and dimension checks")
    c.add_argument("path")
    c.add_argument("--require-modular", action="store_true")
    c.set_defaults(func=cmd_check_category)
    c = check.add_parser("algebra", help="Frobenius algebra axioms")
    c.add_argument("path")
    c.add_argument("--require-special", action="store_true", help="also require symmetric and special")
    c.set_defaults(func=cmd_check_algebra)

    z = sub.add_parser("zmatrix", help="the integer matrix Z~(A)")
    z.add_argument("algebra")
    z.add_argument("category", nargs="?")
    z.add_argument("--check-modular", action="store_true", help="check that Z~ commutes with S and T")
    z.add_argument("--check-za", action="store_true", help="compare with the left centre of (A x 1) (x) T")
    z.add_argument("--max-labels", type=int, default=3)
    z.set_defaults(func=cmd_zmatrix)

    k = sub.add_parser("correlator", help="evaluate the correlator of a world sheet")
    k.add_argument("worldsheet")
    k.add_argument("algebra")
    k.add_argument("--triangulation", default="auto", help="'auto' or a triangulation JSON file")
    k.add_argument("--verify-independence", type=int, default=0, metavar="N")
    k.add_argument("--verify-cut", metavar="NAME")
    k.add_argument("--seed", type=int, default=0)
    k.set_defaults(func=cmd_correlator)

    v = sub.add_parser("verify", help="consistency conditions").add_subparsers(dest="what", required=True)
    f = v.add_parser("factorization", help="Cor(X) = tr_last Cor(cut X)")
    f.add_argument("worldsheet")
    f.add_argument("algebra")
    f.add_argument("cut", nargs="?", help="cut name; all declared cuts by default")
    f.set_defaults(func=cmd_verify_factorization)
    t = v.add_parser("triangulation-independence", help="compare several triangulations")
    t.add_argument("worldsheet")
    t.add_argument("algebra")
    t.add_argument("--count", type=int, default=4)
    t.add_argument("--moves", type=int, default=4)
    t.add_argument("--seed", type=int, default=0)
    t.set_defaults(func=cmd_verify_independence)
    return p


def _command_name(args: argparse.Namespace) -> str:
    return " ".join(x for x in (args.command, getattr(args, "what", None)) if x)


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=_json_default) + "\n"


def _json_default(obj: Any) -> Any:
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return scalar_json(obj)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    run = Run(_command_name(args))
    start = time.perf_counter()
    try:
        args.func(args, run)
        status = EXIT_FAIL if run.failed else EXIT_OK
    except NotSpecial as exc:
        run.check("special", False, diagnostic=str(exc))
        status = EXIT_FAIL
    except VerificationFailure as exc:
        run.results["error"] = str(exc)
        status = EXIT_FAIL
    except (FrobError, ValueError, OSError) as exc:
        run.results["error"] = f"{type(exc).__name__}: {exc}"
        status = EXIT_INPUT
    report = run.report(status)
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 3)
    text = dumps(report)
    sys.stdout.write(text)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    if status == EXIT_INPUT:
        print(f"frobtft: {run.results['error']}", file=sys.stderr)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
