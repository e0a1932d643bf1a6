"""Command line front end.

Exit codes: 0 success, 1 a validation violation or counterexample was found,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys

from .classify import classify_all, classify_ideal
from .constructions import localize, product, quotient, validate_homomorphism
from .errors import (AxiomError, ArityError, BudgetExceeded, DomainError, HyperringError,
                     TableError)
from .expansions import BUILTIN_NAMES
from .hypercore import derive_arity, fmt_set, mask, members, validate_structure
from .ideals import enumerate_hyperideals, jacobson_radical, prime_radical, radical
from .theorems import THEOREM_IDS, run_suite
from .workbench import (BUILTINS, CorpusSpec, FormatError, builtin_structure, default_pairs,
                        generate_corpus, parse_expansion, parse_structure, serialize_structure)

OK, FOUND, USAGE = 0, 1, 2

INPUT_ERRORS = (FormatError, TableError, ArityError, DomainError, BudgetExceeded, OSError)


def _read(source: str, validate: bool = True):
    """A structure from a file path, or a builtin name when no such file exists."""
    if source in BUILTINS and not os.path.exists(source):
        return builtin_structure(source)
    with open(source, encoding="utf-8") as fh:
        return parse_structure(fh.read(), validate=validate)


def _elements(text: str) -> int:
    try:
        return mask(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise FormatError(f"expected comma-separated element indices, got {text!r}") from exc


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=1) + "\n"


# --------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> int:
    G = _read(args.file, validate=False)
    report = validate_structure(G)
    if args.json:
        doc = {"name": G.name, "valid": report.valid,
               "violations": [{"axiom": v.axiom, "witness": list(v.witness),
                               "explanation": v.explanation, "count": v.count}
                              for v in report.violations]}
        _emit(_dump(doc), None)
    else:
        print(f"{G.name}: size {G.size}, (m,n) = ({G.m},{G.n})")
        print(report)
    return OK if report.valid else FOUND


def cmd_ideals(args) -> int:
    G = _read(args.file)
    lat = enumerate_hyperideals(G)
    primes, maximals = set(lat.primes()), set(lat.maximals())
    rows = [{"ideal": members(A), "prime": A in primes, "maximal": A in maximals,
             "radical": members(radical(G, A)) if A != G.carrier else members(A)}
            for A in lat.ideals]
    if args.json:
        _emit(_dump({"name": G.name, "ideals": rows,
                     "primeRadical": members(prime_radical(G)),
                     "jacobsonRadical": members(jacobson_radical(G))}), None)
        return OK
    print(f"{G.name}: {len(rows)} hyperideals")
    print(f"{'ideal':<24}{'prime':<8}{'maximal':<9}radical")
    for A, row in zip(lat.ideals, rows):
        print(f"{fmt_set(A):<24}{_yn(row['prime']):<8}{_yn(row['maximal']):<9}"
              f"{fmt_set(mask(row['radical']))}")
    print(f"prime radical {fmt_set(prime_radical(G))}, "
          f"Jacobson radical {fmt_set(jacobson_radical(G))}")
    return OK


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_classify(args) -> int:
    G = _read(args.file)
    delta = parse_expansion(G, args.expansion)
    s_values = (args.s,) if args.s else (1, 2)
    if args.s is not None and args.s < 1:
        raise DomainError("--s must be a positive integer")
    if args.ideal:
        A = _elements(args.ideal)
        if A not in enumerate_hyperideals(G).proper():
            raise DomainError(f"{fmt_set(A)} is not a proper hyperideal of {G.name}")
        records = [classify_ideal(G, delta, A, s_values)]
    else:
        records = classify_all(G, delta, s_values)
    if args.json:
        _emit(_dump({"name": G.name, "expansion": delta.label,
                     "deltaZero": members(delta.zero),
                     "records": [r.to_dict() for r in records]}), None)
        return OK
    print(f"{G.name} with {delta.label}, delta(0) = {fmt_set(delta.zero)}")
    for rec in records:
        flags = "  ".join(f"{k}={'T' if v else 'F'}" for k, v in rec.flags.items())
        print(f"{fmt_set(rec.ideal):<20}{flags}")
        for k, w in rec.witnesses.items():
            if args.witnesses:
                print(f"{'':<20}  {k}: {w}")
        for note in rec.notes:
            print(f"{'':<20}  note: {note}")
    return OK


def cmd_construct(args) -> int:
    op = args.operation
    if op == "product":
        if len(args.inputs) != 2:
            raise FormatError("product takes two structures")
        H = product(_read(args.inputs[0]), _read(args.inputs[1]))
        psi = None
    else:
        if len(args.inputs) != 1:
            raise FormatError(f"{op} takes one structure")
        G = _read(args.inputs[0])
        if op == "quotient":
            if not args.ideal:
                raise FormatError("quotient needs --ideal")
            H, psi = quotient(G, _elements(args.ideal))
        elif op == "localize":
            if not args.subset:
                raise FormatError("localize needs --subset")
            H, psi = localize(G, _elements(args.subset))
        else:
            if args.m is None or args.n is None:
                raise FormatError("derive needs --m and --n")
            H, psi = derive_arity(G, args.m, args.n), None
    if not validate_structure(H).valid:
        print(validate_structure(H), file=sys.stderr)
        return FOUND
    if psi is not None and not validate_homomorphism(psi).valid:
        print(validate_homomorphism(psi), file=sys.stderr)
        return FOUND
    _emit(serialize_structure(H), args.out)
    return OK


def _corpus_from(spec: str):
    if spec == "default":
        return generate_corpus(CorpusSpec())
    with open(spec, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"malformed corpus spec: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("corpus spec must be a JSON object")
    return generate_corpus(CorpusSpec.from_dict(doc))


def cmd_theorems(args) -> int:
    if (args.file is None) == (args.corpus is None):
        raise FormatError("give either a structure file or --corpus")
    ids = None
    if args.only:
        ids = [x.strip() for x in args.only.split(",") if x.strip()]
        unknown = [x for x in ids if x not in THEOREM_IDS]
        if unknown:
            raise DomainError(f"unknown theorem ids {unknown}")
    if args.file is not None:
        G = _read(args.file)
        names = args.expansion or list(BUILTIN_NAMES)
        pairs = [(G, parse_expansion(G, name)) for name in names]
    else:
        corpus = _corpus_from(args.corpus)
        pairs = default_pairs(corpus, residuals=args.residuals)
    report = run_suite(pairs, ids)
    if args.json:
        _emit(report.to_json(), args.json)
    if not args.json or args.json != "-":
        _print_summary(report, len(pairs))
    return FOUND if report.counterexamples else OK


def _print_summary(report, items: int) -> None:
    print(f"{items} (structure, expansion) items")
    print(f"{'id':<5}{'pass':>6}{'vacuous':>9}{'counter':>9}{'hypotheses':>12}{'vacuity':>9}")
    for tid, row in report.summary.items():
        print(f"{tid:<5}{row['pass']:>6}{row['vacuous']:>9}{row['counterexample']:>9}"
              f"{row['hypothesisTotal']:>12}{row['vacuityRate']:>9.3f}")
    for r in report.counterexamples:
        print(f"COUNTEREXAMPLE {r.theorem_id} on {r.structure} / {r.expansion}: {r.witnesses[:1]}")
    for err in report.errors:
        print(f"error {err['theoremId']} on {err['structure']} / {err['expansion']}: "
              f"{err['error']}")


def cmd_corpus(args) -> int:
    corpus = _corpus_from(args.spec)
    os.makedirs(args.out, exist_ok=True)
    index = []
    for i, G in enumerate(corpus):
        fname = f"{i:03d}-{re.sub(r'[^A-Za-z0-9_.-]+', '_', G.name)}.json"
        with open(os.path.join(args.out, fname), "w", encoding="utf-8") as fh:
            fh.write(serialize_structure(G))
        index.append({"file": fname, "name": G.name, "size": G.size, "m": G.m, "n": G.n})
    with open(os.path.join(args.out, "index.json"), "w", encoding="utf-8") as fh:
        fh.write(_dump({"structures": index, "skipped": corpus.skipped}))
    print(f"wrote {len(index)} structures to {args.out}")
    return OK


# --------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="krasner",
                                description="Finite Krasner (m,n)-hyperring workbench.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check the hyperring axioms")
    v.add_argument("file")
    v.add_argument("--json", action="store_true", help="print the report as JSON")
    v.set_defaults(run=cmd_validate)

    i = sub.add_parser("ideals", help="list hyperideals with prime/maximal flags")
    i.add_argument("file")
    i.add_argument("--json", action="store_true")
    i.set_defaults(run=cmd_ideals)

    c = sub.add_parser("classify", help="classify proper hyperideals under an expansion")
    c.add_argument("file")
    c.add_argument("--expansion", required=True,
                   help="delta0, delta1, deltaG, deltaM, residual:<elements> or @<file>")
    c.add_argument("--s", type=int, help="absorbing parameter (default: 1 and 2)")
    c.add_argument("--ideal", help="classify only this ideal, e.g. 0,2,4")
    c.add_argument("--witnesses", action="store_true", help="show failure witnesses")
    c.add_argument("--json", action="store_true")
    c.set_defaults(run=cmd_classify)

    k = sub.add_parser("construct", help="build a product, quotient, localization or derivation")
    k.add_argument("operation", choices=["product", "quotient", "localize", "derive"])
    k.add_argument("inputs", nargs="+", help="structure files or builtin names")
    k.add_argument("--ideal", help="quotient ideal, e.g. 0,3")
    k.add_argument("--subset", help="multiplicative subset, e.g. 1,3")
    k.add_argument("--m", type=int)
    k.add_argument("--n", type=int)
    k.add_argument("--out", help="output file (default: stdout)")
    k.set_defaults(run=cmd_construct)

    t = sub.add_parser("theorems", help="check the registered statements")
    t.add_argument("file", nargs="?")
    t.add_argument("--corpus", help="'default' or a corpus spec file")
    t.add_argument("--only", help="comma-separated ids, e.g. T7,T8")
    t.add_argument("--expansion", action="append",
                   help="expansion for a single structure (repeatable; default: all named)")
    t.add_argument("--residuals", action="store_true",
                   help="also pair corpus structures with residual expansions")
    t.add_argument("--json", metavar="OUT", help="write the JSON report ('-' for stdout)")
    t.set_defaults(run=cmd_theorems)

    g = sub.add_parser("corpus", help="generate a corpus and write it as files")
    g.add_argument("spec", help="'default' or a corpus spec file")
    g.add_argument("--out", required=True)
    g.set_defaults(run=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.run(args)
    except AxiomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(exc.report, file=sys.stderr)
        return FOUND
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except HyperringError as exc:
        # a derived object (quotient, localization, expansion...) broke an axiom
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return FOUND


if __name__ == "__main__":
    sys.exit(main())
