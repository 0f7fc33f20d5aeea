"""Command-line front end.

Numeric queries print a bare decimal; everything else prints JSON on
stdout, diagnostics on stderr. Exit codes: 0 success, 1 negative verdict
from a predicate subcommand (verify --expect, minimal, iso), 2 usage or
input errors. The filename "-" means stdin (or stdout for --out).

Every subcommand is deterministic: the same argv and inputs produce
byte-identical stdout, including enumerate under any --jobs value.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys

from .construct import base_catalog, construct_min
from .formats import ParseError, emit_system, parse_document
from .numerics import alpha, min_size, tau, tight_tau_sequence
from .search import (
    BudgetExceededError,
    SearchBudget,
    are_isomorphic,
    canonical_form,
    enumerate_min_classes,
    min_hcsp_size_oracle,
)
from .set_system import SetSystem, elements_of
from .verify import classify

_EXPECT_FIELDS = {
    "separating": "separating",
    "completely-separating": "completely_separating",
    "hcsp": "hcsp",
    "inclusion-minimal": "inclusion_minimal_hcsp",
    "size-minimal": "size_minimal",
}


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hcsp", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, **kw):
        sp = sub.add_parser(name, help=help_, **kw)
        return sp

    sp = add("tau", "minimum block count threshold for N points (N >= 3)")
    sp.add_argument("n", type=int)
    sp = add("alpha", "N-th triangular number")
    sp.add_argument("n", type=int)
    sp = add("min-size", "exact minimum HCSP size on N points")
    sp.add_argument("n", type=int)
    sp = add("seq", "list the k <= limit where tau(k) equals ceil(sqrt(2k))")
    sp.add_argument("--limit", type=int, required=True)

    sp = add("construct", "emit a size-minimal HCSP system on S points")
    sp.add_argument("s", type=int)
    sp.add_argument("--out", default="-", help="output file, '-' for stdout")
    sp = add("catalog", "dump all size-minimal classes for S in 1..6")
    sp.add_argument("s", type=int)

    sp = add("verify", "classify a system file")
    sp.add_argument("file")
    sp.add_argument("--witnesses", action="store_true", help="include the witness map")
    sp.add_argument("--expect", choices=sorted(_EXPECT_FIELDS), help="exit 1 unless this property holds")
    sp = add("minimal", "test a system file for size-minimality (exit 1 if not)")
    sp.add_argument("file")

    def search_args(sp, with_jobs=False):
        sp.add_argument("--max-s", type=int, default=None, help="ground-size budget")
        sp.add_argument("--max-candidates", type=int, default=None, help="search node budget")
        if with_jobs:
            sp.add_argument("--jobs", type=int, default=1, help="parallel chunks")

    sp = add("oracle", "brute-force minimum HCSP size on S points")
    sp.add_argument("s", type=int)
    search_args(sp)
    sp = add("enumerate", "all minimum HCSP systems on S points up to isomorphism")
    sp.add_argument("s", type=int)
    search_args(sp, with_jobs=True)
    sp = add("iso", "search for an isomorphism between two system files (exit 1 if none)")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    search_args(sp)
    sp = add("canon", "emit the canonical relabeling of a system file")
    sp.add_argument("file")
    search_args(sp)
    return p


def _default_max_s(fallback: int) -> int:
    env = os.environ.get("HCSP_MAX_S")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"HCSP_MAX_S must be a decimal integer, got {env!r}") from None
    return fallback


def _budget(args, fallback_max_s: int) -> SearchBudget:
    max_s = args.max_s if args.max_s is not None else _default_max_s(fallback_max_s)
    kw = {"max_ground_size": max_s}
    if args.max_candidates is not None:
        kw["max_candidates"] = args.max_candidates
    if getattr(args, "jobs", 1) != 1:
        kw["parallel_chunks"] = args.jobs
    return SearchBudget(**kw)


def _read(path: str, stdin) -> tuple[SetSystem, str | None]:
    if path == "-":
        return parse_document(stdin.read())
    with open(path, "rb") as f:
        return parse_document(f.read())


def _doc_sets(sys: SetSystem) -> list[list[int]]:
    return sorted(list(elements_of(b)) for b in sys.blocks)


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _classification_doc(sys: SetSystem, with_witnesses: bool) -> dict:
    cls = classify(sys, with_witnesses=with_witnesses)
    sets = _doc_sets(sys)
    doc = {
        "format_version": "hcsp-1",
        "s": sys.s,
        "sets": sets,
        "separating": cls.separating,
        "completely_separating": cls.completely_separating,
        "hcsp": cls.hcsp,
        "inclusion_minimal_hcsp": cls.inclusion_minimal_hcsp,
        "size_minimal": cls.size_minimal,
    }
    if cls.failing_pair is not None:
        doc["failing_certificate"] = {"pair": list(cls.failing_pair)}
    elif cls.failing_element is not None:
        doc["failing_certificate"] = {"element": cls.failing_element}
    else:
        doc["failing_certificate"] = None
    if with_witnesses:
        # translate storage-order block indices to positions in "sets"
        order = sorted(range(len(sys.blocks)), key=lambda i: list(elements_of(sys.blocks[i])))
        at = {storage: emitted for emitted, storage in enumerate(order)}
        doc["witnesses"] = {
            str(a): [sorted((at[i], at[j])) for i, j in pairs]
            for a, pairs in (cls.witnesses or {}).items()
        }
    return doc


def run(argv: list[str], stdout=None, stderr=None, stdin=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    inp = stdin if stdin is not None else sys.stdin
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            args = _build_parser().parse_args(argv)
        except SystemExit as e:
            return int(e.code) if e.code else 0
        try:
            return _dispatch(args, out, err, inp)
        except (ParseError, BudgetExceededError, ValueError, OSError) as e:
            print(f"error: {e}", file=err)
            return 2


def _dispatch(args, out, err, inp) -> int:
    cmd = args.command

    if cmd == "tau":
        print(tau(args.n), file=out)
    elif cmd == "alpha":
        print(alpha(args.n), file=out)
    elif cmd == "min-size":
        print(min_size(args.n), file=out)
    elif cmd == "seq":
        print(",".join(map(str, tight_tau_sequence(args.limit))), file=out)

    elif cmd == "construct":
        text = emit_system(construct_min(args.s))
        if args.out == "-":
            out.write(text)
        else:
            with open(args.out, "w") as f:
                f.write(text)
    elif cmd == "catalog":
        entry = base_catalog(args.s)
        doc = {
            "s": entry.s,
            "count": len(entry.representatives),
            "representatives": [
                {"name": f"s{entry.s}.{i + 1}", "sets": _doc_sets(rep)}
                for i, rep in enumerate(entry.representatives)
            ],
            "complement_partners": [
                [i + 1, j + 1] for i, j in sorted(entry.complement_partners.items())
            ],
        }
        _emit_json(doc, out)

    elif cmd == "verify":
        sys_, _ = _read(args.file, inp)
        doc = _classification_doc(sys_, args.witnesses)
        _emit_json(doc, out)
        if args.expect is not None and not doc[_EXPECT_FIELDS[args.expect]]:
            return 1
    elif cmd == "minimal":
        sys_, _ = _read(args.file, inp)
        required = min_size(sys_.s)
        cls = classify(sys_)
        doc = {
            "s": sys_.s,
            "block_count": len(sys_.blocks),
            "required": required,
            "hcsp": cls.hcsp,
            "size_minimal": cls.size_minimal,
        }
        _emit_json(doc, out)
        if not cls.size_minimal:
            return 1

    elif cmd == "oracle":
        print(min_hcsp_size_oracle(args.s, _budget(args, 7)), file=out)
    elif cmd == "enumerate":
        classes = enumerate_min_classes(args.s, _budget(args, 7))
        doc = {
            "s": args.s,
            "block_count": min_size(args.s),
            "class_count": len(classes),
            "classes": [_doc_sets(c) for c in classes],
        }
        _emit_json(doc, out)
    elif cmd == "iso":
        a, _ = _read(args.file_a, inp)
        b, _ = _read(args.file_b, inp)
        bij = are_isomorphic(a, b, _budget(args, 8))
        if bij is None:
            _emit_json({"isomorphic": False}, out)
            return 1
        _emit_json({"isomorphic": True, "bijection": [[k, bij[k]] for k in sorted(bij)]}, out)
    elif cmd == "canon":
        sys_, _ = _read(args.file, inp)
        out.write(emit_system(canonical_form(sys_, _budget(args, 8))))
    else:  # pragma: no cover - argparse enforces the choices
        raise AssertionError(cmd)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
