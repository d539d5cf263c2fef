"""Command-line front end.

Exit statuses: 0 success, 1 computational mismatch, 2 usage or parse
error, 3 timeout.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .artin_rees import artin_rees_numbers
from .corpus import build_corpus
from .errors import ConstraintError, ReesError, ResourceLimitExceeded
from .euclid import (
    FAMILY_KINDS, FamilySpec, euclid_trace, family_ideal, family_texts, sifted_closed_form, valid_pairs,
)
from .groebner import Ideal, limits
from .parse import parse_polynomial
from .polyring import VariableContext
from .rees import (
    ReesPresentation, effective_generator_count, effective_profile, invariant_report, rees_kernel,
    sifted_invariants,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3
DEFAULT_TIMEOUT = 300.0


class UsageError(Exception):
    pass


# -- input documents --------------------------------------------------------

def load_document(doc: dict):
    """Validate an input document; return (ctx, {name: Ideal})."""
    if not isinstance(doc, dict) or set(doc) != {"ring", "ideals"}:
        raise UsageError('input must be an object with exactly the keys "ring" and "ideals"')
    ring = doc["ring"]
    if not isinstance(ring, dict) or not isinstance(ring.get("variables"), list):
        raise UsageError('"ring" must be an object with a "variables" list')
    names = ring["variables"]
    if not names or not all(isinstance(n, str) for n in names):
        raise UsageError("variables must be a non-empty list of strings")
    try:
        ctx = VariableContext(tuple(names))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ideals = doc["ideals"]
    if not isinstance(ideals, dict) or not ideals:
        raise UsageError('"ideals" must be a non-empty object')
    out = {}
    for name, texts in ideals.items():
        if not isinstance(texts, list) or not all(isinstance(t, str) for t in texts):
            raise UsageError(f"ideal {name!r} must be a list of expression strings")
        try:
            out[name] = Ideal(ctx, [parse_polynomial(t, ctx) for t in texts])
        except (ReesError, ValueError) as exc:
            raise UsageError(f"ideal {name!r}: {exc}") from None
    return ctx, out


def read_document(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None
    return doc, load_document(doc)


def _pick(ideals, name, flag):
    if name not in ideals:
        raise UsageError(f"{flag} {name!r} not found; available: {', '.join(sorted(ideals))}")
    return ideals[name]


def corpus_citations(ctx, I, J=None):
    """Citation tags of corpus entries posing the same question as (I, J)."""
    tags = []
    for e in build_corpus():
        if e.variables != ctx.names or bool(e.quotient) != (J is not None):
            continue
        _, ideals = load_document(e.document())
        if set(ideals["I"].gens) == set(I.gens) and (J is None or set(ideals["J"].gens) == set(J.gens)):
            tags.append(e.citation)
    return sorted(set(tags))


# -- output -----------------------------------------------------------------

def report(command, inp, result, exact, citations=(), started=None):
    elapsed = 0 if started is None else int(round((time.perf_counter() - started) * 1000))
    return {"command": command, "input": inp, "result": result, "exact": exact,
            "citations": list(citations), "elapsed_ms": elapsed}


def _table(rows, headers):
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    line = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
    out = [line, "  ".join("-" * w for w in widths)]
    out += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(out)


def emit(doc, fmt, table=None):
    if fmt == "json" or table is None:
        print(json.dumps(doc, indent=2, sort_keys=False))
    else:
        print(table)


# -- commands ---------------------------------------------------------------

def cmd_invariants(args):
    started = time.perf_counter()
    doc, (ctx, ideals) = read_document(args.input)
    I = _pick(ideals, args.ideal, "--ideal")
    J = _pick(ideals, args.mod, "--mod") if args.mod else None
    with limits(args.timeout_secs):
        rep = sifted_invariants(I, J, args.order)
    result = dict(rep.as_dict(), ideal=args.ideal, mod=args.mod,
                  has_linear_relations=rep.has_linear_relations)
    out = report("invariants", doc, result, rep.exact, corpus_citations(ctx, I, J), started)
    rows = [["sd", ", ".join(map(str, rep.sd))], ["st", rep.st], ["rt", rep.rt], ["exact", rep.exact]]
    emit(out, args.format, _table(rows, ["invariant", "value"]))
    return EXIT_OK


def thm_chain(rep) -> dict:
    w, m, s, st, rt = rep.five()
    checks = {"w<=m": w <= m, "m<=s": m <= s, "m<=st_mod": m <= st, "s<=rt_mod": s <= rt, "st_mod<=rt_mod": st <= rt}
    return checks


def cmd_artin_rees(args):
    started = time.perf_counter()
    doc, (ctx, ideals) = read_document(args.input)
    I = _pick(ideals, args.ideal, "--ideal")
    J = _pick(ideals, args.sub, "--sub")
    with limits(args.timeout_secs):
        rep = artin_rees_numbers(I, J, args.engine)
    chain = thm_chain(rep)
    result = dict(rep.as_dict(), engine=rep.profile.engine, chain=chain)
    exact = rep.profile.exact and rep.quotient_report.exact
    out = report("artin-rees", doc, result, exact, corpus_citations(ctx, I, J), started)
    rows = [[k, result[k]] for k in ("w", "m", "s", "st_mod", "rt_mod")]
    rows.append(["chain", "ok" if all(chain.values()) else "VIOLATED"])
    emit(out, args.format, _table(rows, ["invariant", "value"]))
    return EXIT_OK if all(chain.values()) else EXIT_MISMATCH


def cmd_euclid(args):
    started = time.perf_counter()
    tr = euclid_trace(args.p, args.u)
    rep = sifted_closed_form(args.p, args.u)
    result = {
        "p": tr.p, "u": tr.u, "quotients": list(tr.quotients), "remainders": list(tr.remainders),
        "progressions": [list(pr) for pr in tr.progressions], "delta": list(tr.delta), "mu": list(tr.mu),
        **rep.as_dict(),
    }
    out = report("euclid", {"p": args.p, "u": args.u}, result, True, ["three-monomial-euclid"], started)
    rows = [[k, result[k]] for k in ("quotients", "remainders", "progressions", "delta", "mu", "sd", "st", "rt")]
    emit(out, args.format, _table(rows, ["field", "value"]))
    return EXIT_OK


def _verify_pair(pu):
    p, u = pu
    closed = sifted_closed_form(p, u)
    I, _ = family_ideal(FamilySpec("general", p, u))
    gb = sifted_invariants(I)
    return p, u, list(closed.sd), closed.st, closed.rt, list(gb.sd), gb.st, gb.rt


def _map(fn, items, jobs):
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def cmd_verify_euclid(args):
    started = time.perf_counter()
    pairs = valid_pairs(args.max_p)
    with limits(args.timeout_secs):
        rows = _map(_verify_pair, pairs, args.jobs)
    results = []
    ok = True
    for p, u, csd, cst, crt, gsd, gst, grt in rows:
        match = (csd, cst, crt) == (gsd, gst, grt)
        ok &= match
        results.append({"p": p, "u": u, "closed_form": {"sd": csd, "st": cst, "rt": crt},
                        "groebner": {"sd": gsd, "st": gst, "rt": grt}, "match": match})
    out = report("verify-euclid", {"max_p": args.max_p}, {"pairs": results, "all_match": ok}, True,
                 ["three-monomial-euclid"], started)
    table = _table([[r["p"], r["u"], r["closed_form"]["sd"], r["groebner"]["sd"], "ok" if r["match"] else "MISMATCH"]
                    for r in results], ["p", "u", "closed form sd", "groebner sd", "status"])
    emit(out, args.format, table)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_family(args):
    text = json.dumps(_family_doc(FamilySpec(args.kind, args.p, args.u, args.ell)), indent=2) + "\n"
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def run_entry(entry, timeout=DEFAULT_TIMEOUT):
    """Compute an entry's values; returns (status, got, message)."""
    _, ideals = load_document(entry.document())
    I, J = ideals["I"], ideals.get("J")
    try:
        with limits(timeout):
            if entry.mode == "artin_rees":
                rep = artin_rees_numbers(I, J)
                got = {"w": rep.w, "m": rep.m, "s": rep.s, "st_mod": rep.st_mod, "rt_mod": rep.rt_mod}
            else:
                if "effective_in_degree_2" in entry.expected:
                    H = rees_kernel(ReesPresentation(I, J))
                    rep = invariant_report(effective_profile(H))
                    got = dict(rep.as_dict(), effective_in_degree_2=effective_generator_count(H, 2))
                else:
                    rep = sifted_invariants(I, J)
                    got = rep.as_dict()
                got.pop("exact", None)
    except ResourceLimitExceeded as exc:
        return ("SKIPPED" if entry.stretch else "FAILED"), None, f"timeout: {exc}"
    want = entry.expected
    mismatched = {k: (want[k], got.get(k)) for k in want if got.get(k) != want[k]}
    if mismatched:
        return "FAILED", got, "; ".join(f"{k}: expected {a}, got {b}" for k, (a, b) in mismatched.items())
    return "PASS", got, ""


def _run_entry_job(args):
    entry, timeout = args
    return run_entry(entry, timeout)


def cmd_corpus(args):
    started = time.perf_counter()
    entries = [e for e in build_corpus() if (args.include_stretch or not e.stretch)
               and (not args.filter or args.filter in e.name)]
    outcomes = _map(_run_entry_job, [(e, args.timeout_secs) for e in entries], args.jobs)
    rows = []
    results = []
    ok = True
    for e, (status, got, msg) in zip(entries, outcomes):
        if status == "FAILED":
            ok = False
        results.append({"name": e.name, "status": status, "expected": e.expected, "got": got,
                        "citation": e.citation, "message": msg})
        rows.append([e.name, e.mode, status, msg])
    out = report("corpus", {"filter": args.filter, "include_stretch": args.include_stretch},
                 {"entries": results, "all_pass": ok}, True, sorted({e.citation for e in entries}), started)
    emit(out, args.format, _table(rows, ["entry", "mode", "status", "detail"]))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_search_distinct(args):
    started = time.perf_counter()
    kinds = [k.strip() for k in args.families.split(",") if k.strip()]
    for k in kinds:
        if k not in ("wang", "wang_variant", "transversal", "transversal_variant"):
            raise UsageError(f"search-distinct needs a family with a quotient ideal, not {k!r}")
    rows, results = [], []
    with limits(args.timeout_secs):
        for k in kinds:
            for p in range(2, args.max_p + 1):
                try:
                    spec = FamilySpec(k, p)
                except ConstraintError:
                    continue
                _, ideals = load_document(_family_doc(spec))
                rep = artin_rees_numbers(ideals["I"], ideals["J"])
                five = rep.five()
                distinct = len(set(five)) == 5
                results.append({"family": spec.label, "w": five[0], "m": five[1], "s": five[2],
                                "st_mod": five[3], "rt_mod": five[4], "all_distinct": distinct})
                rows.append([spec.label, five, "yes" if distinct else "no"])
    out = report("search-distinct", {"families": kinds, "max_p": args.max_p}, {"triples": results}, True,
                 sorted(set(kinds)), started)
    emit(out, args.format, _table(rows, ["triple", "(w, m, s, st, rt)", "all distinct"]))
    return EXIT_OK


def _family_doc(spec):
    names, I, J = family_texts(spec)
    doc = {"ring": {"variables": list(names)}, "ideals": {"I": I}}
    if J:
        doc["ideals"]["J"] = J
    return doc


# -- parser -----------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="reestype", description="Sifted degrees, relation type and Artin-Rees numbers.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--timeout-secs", type=float, default=DEFAULT_TIMEOUT)
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("invariants", help="SD, st and rt of an ideal")
    p.add_argument("--input", required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--mod", help="name of J; computes invariants with respect to A/J")
    p.add_argument("--order", choices=("degrevlex", "lex"), default="degrevlex")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("artin-rees", help="w, m, s together with st and rt over A/J")
    p.add_argument("--input", required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--sub", required=True)
    p.add_argument("--engine", choices=("auto", "groebner", "monomial"), default="auto")
    common(p)
    p.set_defaults(func=cmd_artin_rees)

    p = sub.add_parser("euclid", help="closed form for (x^p, y^p, x^u y^(p-u))")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_euclid)

    p = sub.add_parser("verify-euclid", help="closed form vs Groebner for every valid (p, u)")
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify_euclid)

    p = sub.add_parser("family", help="write an input document for a named family")
    p.add_argument("--kind", required=True, choices=FAMILY_KINDS)
    p.add_argument("--p", type=int)
    p.add_argument("--u", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--emit", help="output file (default: stdout)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("corpus", help="run the worked examples against their known values")
    p.add_argument("--filter")
    p.add_argument("--include-stretch", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("search-distinct", help="scan families for five pairwise distinct invariants")
    p.add_argument("--families", required=True, help="comma-separated family kinds")
    p.add_argument("--max-p", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_search_distinct)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstraintError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitExceeded as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except ReesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
