"""Command-line interface.

Subcommands: ``torsion``, ``classify``, ``verify-tables``,
``certify-nonexistence``, ``holonomy``.  Exit codes: 0 full pass,
1 verification failure, 2 input error.  Reports are byte-stable for a
fixed seed and version.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from .classify import (
    ParameterConstraintViolated,
    closed_nonexistence_certificate,
    enumerate_valuest0,
    filter_torsion_free,
    holonomy_group,
)
from .exterior import render_form
from .g2core import divergence_torsion, fg_classify, standard_structure, torsion_forms
from .intmat import IntMatrix, NonCommuting
from .liealg import flat_almost_abelian, flat_non_almost_abelian
from .scalars import Poly, render_rational, render_scalar
from .tables import ParseError, load_bundled, parse_table_text, verify_rows

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2


def _family_algebra(family: str, params: Optional[Sequence[Fraction]], symbolic: bool):
    arity = 3 if family == "almost-abelian" else 4
    if symbolic:
        names = "abc" if arity == 3 else "abcd"
        values = [Poly.symbol(s) for s in names]
    else:
        if params is None or len(params) != arity:
            raise ValueError(f"family {family!r} needs {arity} parameters")
        values = [Fraction(p) for p in params]
    if arity == 3:
        return flat_almost_abelian(*values), values
    return flat_non_almost_abelian(*values), values


def torsion_report(family: str, params=None, symbolic=False, structured=False) -> str:
    g, values = _family_algebra(family, params, symbolic)
    s = standard_structure(g)
    t = torsion_forms(s)
    cls = fg_classify(s)
    div = divergence_torsion(s)
    if structured:
        lines = [
            f"family: {family}",
            "params: " + ",".join(render_scalar(v) for v in values),
            f"tau0: {render_scalar(t.tau0)}",
            f"tau1: {render_form(t.tau1)}",
            f"tau2: {render_form(t.tau2)}",
            f"tau3: {render_form(t.tau3)}",
            "classes: " + (",".join(cls.flags()) if cls.flags() else "generic"),
            f"divergence: {div}",
        ]
        return "\n".join(lines)
    lines = [
        f"torsion report ({family}, params " + ", ".join(render_scalar(v) for v in values) + ")",
        f"  tau0 = {render_scalar(t.tau0)}",
        f"  tau1 = {render_form(t.tau1)}",
        f"  tau2 = {render_form(t.tau2)}",
        f"  tau3 = {render_form(t.tau3)}",
        "  classes: " + (", ".join(cls.flags()) if cls.flags() else "none of the named classes"),
        f"  div T = {div}",
    ]
    return "\n".join(lines)


def classify_report(structured=False) -> str:
    enum = enumerate_valuest0()
    survivors = filter_torsion_free(enum)
    fmt = render_rational
    if structured:
        lines = ["case1-alphabet: " + ",".join(fmt(q) for q in enum.case1_alphabet)]
        for p, q in enum.case2_pairs:
            lines.append(f"case2-pair: {fmt(p)},{fmt(q)}")
        for trip in enum.case3_triples:
            lines.append("case3-triple: " + ",".join(fmt(q) for q in trip))
        for t in survivors:
            lines.append("torsion-free: " + ",".join(fmt(q) for q in t.representative))
        return "\n".join(lines)
    lines = ["admissible rotation angles (q means the angle 2*pi*q)"]
    lines.append("  case 1 per-slot alphabet: " + ", ".join(fmt(q) for q in enum.case1_alphabet))
    lines.append("  case 2 conjugate pairs:   " + "  ".join(f"({fmt(p)}, {fmt(q)})" for p, q in enum.case2_pairs))
    lines.append("  case 3 triples:           " + "  ".join("(" + ", ".join(fmt(q) for q in trip) + ")" for trip in enum.case3_triples))
    lines.append(f"zero-sum (torsion-free) triples: {len(survivors)}")
    for t in survivors:
        lines.append("  " + str(t))
    return "\n".join(lines)


def verify_tables_report(paths: Optional[List[str]] = None, structured=False):
    reports = []
    if paths:
        for path in paths:
            with open(path, "r", encoding="utf-8") as fh:
                rows = parse_table_text(fh.read())
            reports.append(verify_rows(rows))
    else:
        reports.append(verify_rows(load_bundled("table1.txt")))
        reports.append(verify_rows(load_bundled("table2.txt")))
    lines = []
    ok = True
    for rep in reports:
        ok = ok and rep.passed
        if structured:
            lines.append(f"table: {rep.table_id}")
            for st in rep.rows:
                state = "pass" if st.passed else "fail"
                detail = "" if st.passed else " " + ";".join(st.failures)
                lines.append(f"row {st.index}: {state}{detail}")
            okc, bad = rep.counts
            lines.append(f"summary: {okc} passed, {bad} failed")
        else:
            lines.append(rep.summary() + f" [{rep.elapsed_seconds:.2f}s]")
            for st in rep.rows:
                if not st.passed:
                    lines.append(f"  row {st.index} FAILED: " + "; ".join(st.failures))
    return "\n".join(lines), ok


def certify_report(samples: int, seed: int, structured=False):
    rng = random.Random(seed)
    results = []
    attempts = 0
    while len(results) < samples:
        attempts += 1
        if attempts > 10000 * samples:
            raise RuntimeError("sampling stalled")
        vals = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4))
        a, b, c, d = vals
        if (a == 0 and c == 0) or (b == 0 and d == 0) or a * d - b * c == 0:
            continue
        cert = closed_nonexistence_certificate(a, b, c, d)
        results.append(cert)
    all_ok = all(r.certified for r in results)
    lines = []
    if structured:
        lines.append(f"samples: {samples}")
        lines.append(f"seed: {seed}")
        for r in results:
            state = "pass" if r.certified else "fail"
            lines.append(
                "sample " + ",".join(render_rational(p) for p in r.params) + f": {state}"
            )
        lines.append(f"summary: {sum(1 for r in results if r.certified)} passed")
    else:
        lines.append(
            f"closed-structure nonexistence certificates ({samples} samples, seed {seed})"
        )
        for r in results:
            state = "certified" if r.certified else "FAILED"
            params = ", ".join(render_rational(p) for p in r.params)
            zeros = ",".join(r.forced_zero)
            lines.append(f"  ({params}): {state}; forced zero: {zeros}")
        lines.append("result: " + ("all certified" if all_ok else "FAILURES present"))
    return "\n".join(lines), all_ok


def holonomy_report(matrices: List[str], structured=False):
    gens = []
    for text in matrices:
        from .tables import _parse_matrix_text

        rows = _parse_matrix_text(text)
        if not all(isinstance(v, Fraction) and v.denominator == 1 for r in rows for v in r):
            raise ValueError("holonomy generators must be integer matrices")
        gens.append(IntMatrix([[int(v) for v in r] for r in rows]))
    group = holonomy_group(gens)
    if structured:
        lines = [
            f"order: {group.order}",
            f"type: {group.describe()}",
            f"cyclic: {'yes' if group.is_cyclic() else 'no'}",
        ]
        return "\n".join(lines)
    return (
        f"group of order {group.order}, isomorphism type {group.describe()}"
        + (", cyclic" if group.is_cyclic() else "")
    )


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flatg2", description=__doc__)
    p.add_argument("--version", action="version", version=f"flatg2 {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("torsion", help="torsion forms, classes and divergence of a flat family")
    t.add_argument("--family", choices=["almost-abelian", "non-almost-abelian"], required=True)
    group = t.add_mutually_exclusive_group(required=True)
    group.add_argument("--symbolic", action="store_true", help="keep parameters symbolic")
    group.add_argument("--params", help="comma-separated rational parameters, e.g. 1,1,-2")
    t.add_argument("--format", choices=["text", "structured"], default="text")

    c = sub.add_parser("classify", help="admissible angle triples and the zero-sum list")
    c.add_argument("--format", choices=["text", "structured"], default="text")

    v = sub.add_parser("verify-tables", help="verify the bundled (or given) lattice tables")
    v.add_argument("--path", action="append", help="data file (repeatable); default: bundled tables")
    v.add_argument("--format", choices=["text", "structured"], default="text")

    n = sub.add_parser("certify-nonexistence", help="sampled closed-structure nonexistence certificates")
    n.add_argument("--samples", type=int, default=25)
    n.add_argument("--seed", type=int, default=0)
    n.add_argument("--format", choices=["text", "structured"], default="text")

    h = sub.add_parser("holonomy", help="closure and isomorphism type of commuting integer matrices")
    h.add_argument("--gen", action="append", required=True, help="row-major bracketed integer matrix (repeatable)")
    h.add_argument("--format", choices=["text", "structured"], default="text")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    structured = getattr(args, "format", "text") == "structured"
    try:
        if args.command == "torsion":
            params = None
            if args.params is not None:
                params = [Fraction(x) for x in args.params.split(",") if x.strip()]
            print(torsion_report(args.family, params=params, symbolic=args.symbolic, structured=structured))
            return EXIT_OK
        if args.command == "classify":
            print(classify_report(structured=structured))
            return EXIT_OK
        if args.command == "verify-tables":
            text, ok = verify_tables_report(args.path, structured=structured)
            print(text)
            return EXIT_OK if ok else EXIT_VERIFICATION
        if args.command == "certify-nonexistence":
            if args.samples < 1:
                print("error: --samples must be >= 1", file=sys.stderr)
                return EXIT_INPUT
            text, ok = certify_report(args.samples, args.seed, structured=structured)
            print(text)
            return EXIT_OK if ok else EXIT_VERIFICATION
        if args.command == "holonomy":
            print(holonomy_report(args.gen, structured=structured))
            return EXIT_OK
    except (ParseError, ParameterConstraintViolated, NonCommuting, ValueError, OSError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
