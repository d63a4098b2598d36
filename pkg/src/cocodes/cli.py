"""Command-line front end and the on-disk document formats.

One JSON-based format covers recipes and families.  Exact scalars
serialize as {"order": K, "coeffs": [...]} with plain (arbitrary
precision) integers; approx scalars as {"re": x, "im": y}.  On input,
"+" / "-" are accepted as shorthand for +1 / -1 in exact mode and bare
integers for integer scalars; output is always the normalized form.

Exit codes: 0 verified success, 1 verification failure,
2 construction impossibility, 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .corr import DEFAULT_TOL, zccc_zone
from .construct import ConstructionError, cosf_to_ccc, enlarge_ccc
from .cyclo import CycloNum, OrderLimitError
from .matrices import (
    MatrixSpec,
    MatrixValidationError,
    parse_matrix_shorthand,
)
from .model import (
    APPROX,
    EXACT,
    CanonicalSearchError,
    ModeMismatchError,
    Sequence,
    SequenceFamily,
    SequenceSet,
    canonical_form,
)
from .planner import (
    Post,
    Recipe,
    Round,
    RoundSplit,
    SubFamilySpec,
    UnconstructibleError,
    execute,
    plan,
    run_check,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_CONSTRUCT = 2
EXIT_IO = 3

CONSTRUCTION_ERRORS = (
    ConstructionError,
    UnconstructibleError,
    MatrixValidationError,
    ModeMismatchError,
    CanonicalSearchError,
    OrderLimitError,
)


class DocumentError(ValueError):
    """Malformed family or recipe document."""


# -- scalar / family documents ------------------------------------------


def scalar_to_doc(x):
    if isinstance(x, CycloNum):
        return {"order": x.order, "coeffs": list(x.coeffs)}
    z = complex(x)
    return {"re": z.real, "im": z.imag}


def scalar_from_doc(doc, mode: str):
    if mode == EXACT:
        if isinstance(doc, str):
            if doc == "+":
                return CycloNum.from_int(1)
            if doc == "-":
                return CycloNum.from_int(-1)
            raise DocumentError(f"bad scalar shorthand {doc!r}")
        if isinstance(doc, int):
            return CycloNum.from_int(doc)
        if isinstance(doc, dict) and "order" in doc and "coeffs" in doc:
            try:
                return CycloNum(doc["order"], doc["coeffs"])
            except (TypeError, ValueError) as e:
                raise DocumentError(f"bad exact scalar: {e}") from None
        raise DocumentError(f"bad exact scalar document: {doc!r}")
    if isinstance(doc, dict) and "re" in doc and "im" in doc:
        return complex(doc["re"], doc["im"])
    if isinstance(doc, (int, float)):
        return complex(doc)
    raise DocumentError(f"bad approx scalar document: {doc!r}")


def family_to_doc(fam: SequenceFamily, kind: str = "raw") -> dict:
    return {
        "kind": kind,
        "family_size": fam.family_size,
        "set_size": fam.set_size,
        "length_set": sorted(fam.length_set),
        "mode": fam.mode,
        "sets": [
            [[scalar_to_doc(x) for x in seq] for seq in ss]
            for ss in fam
        ],
    }


def family_from_doc(doc: dict) -> SequenceFamily:
    if not isinstance(doc, dict) or "sets" not in doc:
        raise DocumentError("family document needs a 'sets' field")
    mode = doc.get("mode", EXACT)
    if mode not in (EXACT, APPROX):
        raise DocumentError(f"bad mode {mode!r}")
    try:
        sets = [
            SequenceSet(
                Sequence(scalar_from_doc(x, mode) for x in seq)
                for seq in ss)
            for ss in doc["sets"]
        ]
        fam = SequenceFamily(sets)
    except DocumentError:
        raise
    except (TypeError, ValueError) as e:
        raise DocumentError(f"malformed family: {e}") from None
    return fam


def claimed_kind(doc: dict) -> str:
    return doc.get("kind", "raw")


# -- recipe documents ----------------------------------------------------


def matrix_spec_to_doc(spec: MatrixSpec) -> dict:
    doc = {"kind": spec.kind, "dim": spec.dim}
    if spec.entries is not None:
        doc["entries"] = [[scalar_to_doc(_as_scalar(x)) for x in row]
                          for row in spec.entries]
        doc["mode"] = EXACT if isinstance(
            _as_scalar(spec.entries[0][0]), CycloNum) else APPROX
    return doc


def _as_scalar(x):
    if isinstance(x, CycloNum) or isinstance(x, complex):
        return x
    if isinstance(x, int):
        return CycloNum.from_int(x)
    if isinstance(x, str) and x in "+-":
        return CycloNum.from_int(1 if x == "+" else -1)
    return complex(x)


def matrix_spec_from_doc(doc) -> MatrixSpec:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise DocumentError(f"bad matrix spec: {doc!r}")
    kind = doc["kind"]
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise DocumentError(f"matrix spec needs a positive dim, got {dim!r}")
    entries = None
    if kind == "custom":
        raw = doc.get("entries")
        if raw is None:
            raise DocumentError("custom matrix spec needs entries")
        mode = doc.get("mode", EXACT)
        entries = [[scalar_from_doc(x, mode) for x in row] for row in raw]
    return MatrixSpec(kind=kind, dim=dim, entries=entries)


def sub_family_to_doc(sub: SubFamilySpec) -> dict:
    if sub.rows is not None:
        return {"rows": matrix_spec_to_doc(sub.rows)}
    if sub.recipe is not None:
        return {"recipe": recipe_to_doc(sub.recipe)}
    return {"family": family_to_doc(sub.family)}


def sub_family_from_doc(doc) -> SubFamilySpec:
    if not isinstance(doc, dict) or len(doc) != 1:
        raise DocumentError(f"bad sub-family spec: {doc!r}")
    if "rows" in doc:
        return SubFamilySpec(rows=matrix_spec_from_doc(doc["rows"]))
    if "recipe" in doc:
        return SubFamilySpec(recipe=recipe_from_doc(doc["recipe"]))
    if "family" in doc:
        return SubFamilySpec(family=family_from_doc(doc["family"]))
    raise DocumentError(f"bad sub-family spec: {doc!r}")


def recipe_to_doc(recipe: Recipe) -> dict:
    doc = {
        "n": recipe.n,
        "base_matrix": matrix_spec_to_doc(recipe.base_matrix),
        "cells": [list(c) for c in recipe.cells],
        "cell_matrices": [matrix_spec_to_doc(m) for m in recipe.cell_matrices],
        "rounds": [
            {"splits": [
                {"group": s.group,
                 "cells": [list(c) for c in s.cells],
                 "subs": [sub_family_to_doc(x) for x in s.subs]}
                for s in rnd.splits]}
            for rnd in recipe.rounds
        ],
    }
    if recipe.post is not None:
        post = {}
        if recipe.post.ccc is not None:
            post["ccc"] = matrix_spec_to_doc(recipe.post.ccc)
        if recipe.post.enlarge:
            post["enlarge"] = [matrix_spec_to_doc(m) for m in recipe.post.enlarge]
        doc["post"] = post
    return doc


def recipe_from_doc(doc: dict) -> Recipe:
    if not isinstance(doc, dict):
        raise DocumentError("recipe document must be an object")
    for field in ("n", "base_matrix", "cells", "cell_matrices"):
        if field not in doc:
            raise DocumentError(f"recipe document misses {field!r}")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise DocumentError(f"bad n: {n!r}")
    try:
        cells = [[int(i) for i in c] for c in doc["cells"]]
    except (TypeError, ValueError):
        raise DocumentError(f"bad cells: {doc['cells']!r}") from None
    rounds = []
    for rdoc in doc.get("rounds", []):
        splits = []
        for sdoc in rdoc.get("splits", []):
            if "group" not in sdoc or "cells" not in sdoc or "subs" not in sdoc:
                raise DocumentError(f"bad round split: {sdoc!r}")
            splits.append(RoundSplit(
                group=int(sdoc["group"]),
                cells=[[int(i) for i in c] for c in sdoc["cells"]],
                subs=[sub_family_from_doc(x) for x in sdoc["subs"]],
            ))
        rounds.append(Round(splits=splits))
    post = None
    if "post" in doc:
        pdoc = doc["post"]
        post = Post(
            ccc=matrix_spec_from_doc(pdoc["ccc"]) if "ccc" in pdoc else None,
            enlarge=[matrix_spec_from_doc(m) for m in pdoc["enlarge"]]
            if "enlarge" in pdoc else None,
        )
    return Recipe(
        n=n,
        base_matrix=matrix_spec_from_doc(doc["base_matrix"]),
        cells=cells,
        cell_matrices=[matrix_spec_from_doc(m) for m in doc["cell_matrices"]],
        rounds=rounds,
        post=post,
    )


# -- file helpers ---------------------------------------------------------


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise DocumentError(f"{path}: {e}") from None


def _dump_json(path: str, doc) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def _maybe_canonical(fam: SequenceFamily, want: bool) -> SequenceFamily:
    return canonical_form(fam) if want else fam


# -- commands --------------------------------------------------------------


def cmd_gen(args) -> int:
    recipe = recipe_from_doc(_load_json(args.recipe))
    result = execute(recipe, verify=True)
    fam = _maybe_canonical(result.family, args.canonical)
    _dump_json(args.out, family_to_doc(fam, kind=result.claimed_kind))
    print(f"wrote {args.out}: {fam.family_size} sets x {fam.set_size}, "
          f"lengths {sorted(fam.length_set)}")
    print(result.render_log())
    if args.log:
        with open(args.log, "w", encoding="utf-8") as fh:
            fh.write(result.render_log() + "\n")
    if not result.verified:
        print("verification FAILED", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    kind = args.kind
    if kind != "ccc" and not (kind.startswith("cosf:")
                              and kind.split(":", 1)[1].isdigit()
                              and int(kind.split(":", 1)[1]) >= 1):
        raise DocumentError(f"bad --kind {kind!r}; expected 'ccc' or 'cosf:N'")
    fam = family_from_doc(_load_json(args.family))
    try:
        report = run_check(fam, kind, tol=args.tol)
    except ValueError as e:
        # structurally not even the claimed kind (e.g. multi-sequence
        # sets offered as a cross-orthogonal family)
        print(f"check {kind}: FAIL\n  problem: {e}")
        return EXIT_VERIFY
    print(report.render())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_plan(args) -> int:
    recipe = plan(args.n, args.lengths)
    _dump_json(args.out, recipe_to_doc(recipe))
    print(f"wrote {args.out}: base cells "
          f"{[len(c) for c in recipe.cells]}, {len(recipe.rounds)} rounds")
    return EXIT_OK


def cmd_ccc(args) -> int:
    fam = family_from_doc(_load_json(args.family))
    matrix = _matrix_from_arg(args.matrix).build()
    out = cosf_to_ccc(fam, matrix)
    report = run_check(out, "ccc", tol=args.tol)
    fam_out = _maybe_canonical(out, args.canonical)
    _dump_json(args.out, family_to_doc(fam_out, kind="ccc"))
    print(f"wrote {args.out}: {out.family_size} sets x {out.set_size}, "
          f"lengths {sorted(out.length_set)}")
    print(report.render())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_enlarge(args) -> int:
    fam = family_from_doc(_load_json(args.family))
    matrices = [_matrix_from_arg(m).build() for m in args.matrix]
    out = enlarge_ccc(fam, matrices)
    report = run_check(out, "ccc", tol=args.tol)
    fam_out = _maybe_canonical(out, args.canonical)
    _dump_json(args.out, family_to_doc(fam_out, kind="ccc"))
    print(f"wrote {args.out}: {out.family_size} sets x {out.set_size}, "
          f"lengths {sorted(out.length_set)}")
    print(report.render())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_zone(args) -> int:
    fam = family_from_doc(_load_json(args.family))
    try:
        z = zccc_zone(fam, tol=args.tol)
    except ValueError as e:
        print(f"zone: FAIL\n  {e}", file=sys.stderr)
        return EXIT_VERIFY
    print(z)
    return EXIT_OK


def _matrix_from_arg(text: str) -> MatrixSpec:
    if text.startswith("@"):
        return matrix_spec_from_doc(_load_json(text[1:]))
    return parse_matrix_shorthand(text)


# -- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cocodes",
        description="Construct and verify complete complementary codes and "
                    "N-shift cross-orthogonal sequence families.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tol(p):
        p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                       help="zero tolerance for approx-mode scalars "
                            "(relative to set energy; default 1e-9)")

    p = sub.add_parser("gen", help="execute a recipe file into a family file")
    p.add_argument("recipe")
    p.add_argument("out")
    p.add_argument("--canonical", action="store_true",
                   help="emit the canonical (indexing-normalized) form")
    p.add_argument("--log", help="also write the provenance log here")
    add_tol(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="verify a family file against a kind")
    p.add_argument("family")
    p.add_argument("--kind", required=True,
                   help="'ccc' or 'cosf:N' (e.g. cosf:2)")
    add_tol(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plan", help="plan a recipe for target lengths")
    p.add_argument("n", type=int, help="shift parameter N")
    p.add_argument("lengths", type=int, nargs="+", help="target lengths")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("ccc", help="map a cross-orthogonal family to a CCC")
    p.add_argument("family")
    p.add_argument("matrix", help="dft:N | hadamard:N | identity:N | @spec.json")
    p.add_argument("out")
    p.add_argument("--canonical", action="store_true")
    add_tol(p)
    p.set_defaults(func=cmd_ccc)

    p = sub.add_parser("enlarge", help="enlarge a CCC with N matrices")
    p.add_argument("family")
    p.add_argument("out")
    p.add_argument("--matrix", action="append", required=True,
                   help="repeatable; dft:N | hadamard:N | identity:N | @spec.json")
    p.add_argument("--canonical", action="store_true")
    add_tol(p)
    p.set_defaults(func=cmd_enlarge)

    p = sub.add_parser("zone", help="print the zero-correlation zone of a CCC")
    p.add_argument("family")
    add_tol(p)
    p.set_defaults(func=cmd_zone)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except CONSTRUCTION_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONSTRUCT
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONSTRUCT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
