"""Command-line interface: analyze a job document or catalog entry, inspect
the catalog, and run the self-test (catalog regressions plus property
suites)."""

import argparse
import json
import sys

from . import catalog as catalog_mod
from .characters import _abelian_character_values, _dixon_character_values, character_table
from .errors import AmbiguousMultiplicities, MckayError, NonDivisible
from .fields import CyclotomicField
from .groups import GroupElement, generate_group, kernel_and_cosets
from .pipeline import Options, build_report, render_dot, render_explain, run_job
from .quiver import mckay_H, sequence_rank_alternating_sum
from .skew import gmodule_multiplicities, verify_res_ind


def _format_class_group(invariants):
    if not invariants:
        return "trivial"
    return " x ".join("C_%d" % q for q in invariants)


def _summary_lines(result, report):
    lines = []
    f = report["field"]
    if f["kind"] == "cyclotomic":
        lines.append(
            "field: Q(zeta_%d), [l:k] = %d" % (f["conductor"], f["degree_over_k"])
        )
    else:
        lines.append(
            "field: F_%d^%d over F_%d^%d"
            % (f["p"], f["m"], f["p"], f["fixed_degree"])
        )
    lines.append(
        "|G| = %d, |H| = %d, d = %d"
        % (report["group_order"], report["kernel_order"], report["dimension"])
    )
    flags = report["flags"]
    lines.append(
        "flags: small=%(small)s gorenstein=%(gorenstein)s isolated=%(isolated)s" % flags
    )
    if report["ambiguous"]:
        lines.append("multiplicities are ambiguous; see the orbit table")
        for o in report["orbits"]:
            if o["a"] is None:
                lines.append(
                    "  %s: candidates %s" % (o["label"], o["candidates"])
                )
        return lines
    lines.append(
        "vertices: %d, omega = %s" % (len(report["vertices"]), report["omega"])
    )
    dt = report["dynkin_type"]
    if dt["family"] == "unknown":
        lines.append("dynkin type: unknown (%s)" % dt.get("reason"))
    else:
        lines.append(
            "dynkin type: %s" % (
                dt["family"] if dt.get("n") is None
                else "%s n=%d" % (dt["family"], dt["n"])
            )
        )
    lines.append(
        "class group: %s"
        % _format_class_group(report["class_group"]["invariant_factors"])
    )
    return lines


def _write_text(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report_json(report):
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"


def cmd_analyze(args):
    machine_stdout = args.json == "-" or args.dot == "-"
    if args.source.startswith("catalog:"):
        entry = catalog_mod.get(args.source[len("catalog:"):])
        job = entry.job
        if not machine_stdout:
            print("entry: %s" % entry.name)
    else:
        with open(args.source, "r", encoding="utf-8") as fh:
            job = json.load(fh)
    options = Options(
        cap=args.cap,
        saturation=args.saturation,
        norm_bound=args.norm_search_bound,
        deep_extension=args.deep_extension_test,
        show_nu=args.show_nu,
    )
    result = run_job(job, options)
    report = build_report(result)
    if not machine_stdout:
        for line in _summary_lines(result, report):
            print(line)
    if args.explain:
        sys.stdout.write(render_explain(result))
    if args.json:
        _write_text(args.json, _report_json(report))
    if args.dot:
        if result.ambiguous:
            raise AmbiguousMultiplicities("no quiver available for DOT output")
        _write_text(args.dot, render_dot(result, show_nu=args.show_nu))
    if result.ambiguous:
        raise AmbiguousMultiplicities(
            "multiplicities left ambiguous; report emitted with candidate sets"
        )
    return 0


def cmd_catalog(args):
    if args.action == "list":
        for name in catalog_mod.names():
            entry = catalog_mod.get(name)
            marker = " [surrogate]" if entry.surrogate else ""
            print("%-18s %s%s" % (name, entry.description, marker))
        return 0
    entry = catalog_mod.get(args.name)
    print("name: %s" % entry.name)
    print("description: %s" % entry.description)
    print("surrogate: %s" % entry.surrogate)
    print("job:")
    print(json.dumps(entry.job, indent=2, ensure_ascii=True))
    print("expected:")
    print(json.dumps(entry.expected, indent=2, ensure_ascii=True))
    return 0


def _check_entry(entry, options):
    result = run_job(entry.job, options)
    report = build_report(result)
    expected = entry.expected
    problems = []
    if report["ambiguous"]:
        problems.append("multiplicities ambiguous")
        return result, report, problems
    if report["group_order"] != expected["group_order"]:
        problems.append("|G| = %d, expected %d" % (report["group_order"], expected["group_order"]))
    if report["kernel_order"] != expected["kernel_order"]:
        problems.append("|H| = %d, expected %d" % (report["kernel_order"], expected["kernel_order"]))
    for flag in ("gorenstein", "isolated"):
        if report["flags"][flag] != expected[flag]:
            problems.append("%s = %s, expected %s" % (flag, report["flags"][flag], expected[flag]))
    if not report["flags"]["small"]:
        problems.append("kernel not small")
    if len(report["vertices"]) != expected["vertex_count"]:
        problems.append(
            "%d vertices, expected %d" % (len(report["vertices"]), expected["vertex_count"])
        )
    dt = report["dynkin_type"]
    want = expected["dynkin"]
    if want is None:
        if dt["family"] != "unknown":
            problems.append("recognized %s, expected unknown" % dt["family"])
    else:
        if dt["family"] != want[0] or dt.get("n") != want[1]:
            problems.append("type %s, expected %s" % (dt, want))
    if report["class_group"]["invariant_factors"] != expected["class_group"]:
        problems.append(
            "class group %s, expected %s"
            % (report["class_group"]["invariant_factors"], expected["class_group"])
        )
    return result, report, problems


def _property_checks(name, result):
    """Cross-cutting invariants verified on a finished analysis."""
    problems = []
    degree_over_k = result.galois.order
    for o in result.orbits:
        if o.t * o.a * o.b != degree_over_k:
            problems.append("t*a*b != [l:k] on %s" % o.label)
    try:
        verify_res_ind(result.orbits, result.table, result.kernel)
    except AssertionError as exc:
        problems.append("res-ind identity failed: %s" % exc)
    q = result.quiver
    d_h = mckay_H(result.table, result.d).d_matrix
    for i, oi in enumerate(result.orbits):
        for j, oj in enumerate(result.orbits):
            total = sum(d_h[oi.members[0]][jp] for jp in oj.members)
            if oi.a * q.d_matrix[i][j] != oj.a * total:
                problems.append("valuation integrality failed at (%d, %d)" % (i, j))
    nu = result.nu
    if sorted(nu) != list(range(len(nu))):
        problems.append("nu is not a bijection")
    identity = all(nu[i] == i for i in range(len(nu)))
    if identity != result.flags["gorenstein"]:
        problems.append("nu identity does not match the Gorenstein flag")
    for i in range(len(nu)):
        if result.orbits[nu[i]].rank != result.orbits[i].rank:
            problems.append("nu does not preserve ranks")
    if result.orbits[result.omega].rank != 1:
        problems.append("omega vertex has rank != 1")
    for seq in result.sequences:
        if sequence_rank_alternating_sum(seq, result.orbits) != 0:
            problems.append(
                "alternating rank sum nonzero at %s" % result.orbits[seq.target].label
            )
    return problems


def _abelian_oracle_check():
    problems = []
    cases = []
    for m in range(1, 17):
        F = CyclotomicField(m if m > 1 else 1)
        z = F.root_of_unity(m) if m > 1 else F.one
        mat = ((z, F.zero), (F.zero, F.inverse(z)))
        cases.append(("C_%d" % m, [GroupElement(mat, F.aut_identity())], F))
    F4 = CyclotomicField(4)
    i = F4.zeta()
    cases.append((
        "C_2xC_4",
        [
            GroupElement(((-F4.one, F4.zero), (F4.zero, F4.one)), 1),
            GroupElement(((F4.one, F4.zero), (F4.zero, i)), 1),
        ],
        F4,
    ))
    for label, gens, field in cases:
        group = generate_group(gens)
        kernel = kernel_and_cosets(group, field.galois_subgroup([]))
        table = character_table(kernel)
        dual = {
            tuple(v.sort_key() for v in row)
            for row in _abelian_character_values(kernel, table.field)
        }
        dixon = {
            tuple(v.sort_key() for v in row)
            for row in _dixon_character_values(kernel, table.field)
        }
        if dual != dixon:
            problems.append("table oracle mismatch on %s" % label)
    return problems


def _negative_check():
    """A corrupted multiplicity must surface as NonDivisible."""
    entry = catalog_mod.get("typeBC-n1")
    result = run_job(entry.job, Options())
    bad = next(o for o in result.orbits if o.a == 2)
    bad.a = 4
    try:
        gmodule_multiplicities(
            result.table.standard_character(), result.orbits, result.table
        )
    except NonDivisible:
        return []
    return ["corrupted multiplicity did not raise NonDivisible"]


def cmd_selftest(args):
    options = Options()
    names = [n for n in catalog_mod.names() if args.filter in n]
    failures = 0
    results = {}
    for name in names:
        entry = catalog_mod.get(name)
        try:
            result, report, problems = _check_entry(entry, options)
        except MckayError as exc:
            print("FAIL %-18s %s" % (name, exc))
            failures += 1
            continue
        results[name] = (result, report)
        if problems:
            failures += 1
            print("FAIL %-18s %s" % (name, "; ".join(problems)))
        else:
            dt = report["dynkin_type"]
            shown = dt["family"] if dt["family"] != "unknown" else "-"
            print(
                "ok   %-18s |G|=%-4d type=%-6s Cl=%s"
                % (
                    name,
                    report["group_order"],
                    shown if dt.get("n") in (None,) else "%s(%d)" % (dt["family"], dt["n"]),
                    _format_class_group(report["class_group"]["invariant_factors"]),
                )
            )
    for name, (result, report) in sorted(results.items()):
        problems = _property_checks(name, result)
        if problems:
            failures += 1
            print("FAIL %-18s properties: %s" % (name, "; ".join(problems)))
    if names:
        print("property suites on %d entries: done" % len(results))
    if not args.filter:
        for label, problems in (
            ("abelian character-table oracle", _abelian_oracle_check()),
            ("corrupted-multiplicity detection", _negative_check()),
            ("report determinism", _determinism_check()),
        ):
            if problems:
                failures += 1
                print("FAIL %s: %s" % (label, "; ".join(problems)))
            else:
                print("ok   %s" % label)
    print("selftest: %s" % ("PASS" if failures == 0 else "FAIL (%d)" % failures))
    return 0 if failures == 0 else 1


def _determinism_check():
    entry = catalog_mod.get("nongor")
    first = _report_json(build_report(run_job(entry.job, Options())))
    second = _report_json(build_report(run_job(entry.job, Options())))
    return [] if first == second else ["reports differ between runs"]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mckayq",
        description="Exact McKay/AR quiver computations for invariant rings "
        "of semilinear matrix groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze a job file or catalog:NAME")
    p_an.add_argument("source", help="path to a job JSON document, or catalog:NAME")
    p_an.add_argument("--json", metavar="PATH", help="write the JSON report (- for stdout)")
    p_an.add_argument("--dot", metavar="PATH", help="write the DOT quiver (- for stdout)")
    p_an.add_argument("--explain", action="store_true", help="print the solver trace")
    p_an.add_argument("--show-nu", action="store_true", help="always draw dotted nu arrows")
    p_an.add_argument("--cap", type=int, default=100000, help="group size cap")
    p_an.add_argument("--saturation", type=int, default=32, help="tensor saturation rounds")
    p_an.add_argument("--norm-search-bound", type=int, default=8, help="norm search height")
    p_an.add_argument(
        "--deep-extension-test", action="store_true",
        help="also try the semilinear intertwiner test on higher-dimensional orbits",
    )
    p_an.set_defaults(func=cmd_analyze)

    p_cat = sub.add_parser("catalog", help="list or show built-in examples")
    p_cat.add_argument("action", choices=["list", "show"])
    p_cat.add_argument("name", nargs="?", help="entry name for 'show'")
    p_cat.set_defaults(func=cmd_catalog)

    p_self = sub.add_parser("selftest", help="run catalog regressions and property suites")
    p_self.add_argument("--filter", default="", help="only run entries containing this substring")
    p_self.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog" and args.action == "show" and not args.name:
        parser.error("catalog show requires a name")
    try:
        return args.func(args)
    except MckayError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.exit_code
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
