"""Job parsing and the full analysis pipeline:
field -> group -> characters -> orbits -> quiver -> report."""

from fractions import Fraction

from .characters import character_table
from .errors import ParseError, SmallnessViolation
from .fields import CyclotomicField, GaloisField
from .groups import (
    GroupElement,
    generate_group,
    gorenstein_flag,
    isolated_flag,
    kernel_and_cosets,
    smallness_violation,
)
from .quiver import (
    almost_split_sequences,
    emit_dot,
    mckay_G,
    recognize_type,
)
from .skew import (
    SolverTrace,
    class_group,
    compute_orbits,
    solve_multiplicities,
)

SCHEMA = "mckayq-report/1"


class Options:
    def __init__(
        self,
        cap=100000,
        saturation=32,
        degree_budget=4096,
        norm_bound=8,
        deep_extension=False,
        show_nu=False,
    ):
        self.cap = cap
        self.saturation = saturation
        self.degree_budget = degree_budget
        self.norm_bound = norm_bound
        self.deep_extension = deep_extension
        self.show_nu = show_nu


def _require(cond, where, message):
    if not cond:
        raise ParseError("%s: %s" % (where, message))


def parse_field_section(section):
    _require(isinstance(section, dict), "field", "must be an object")
    kind = section.get("kind")
    if kind == "cyclotomic":
        n = section.get("conductor")
        _require(isinstance(n, int) and n >= 1, "field.conductor", "must be a positive integer")
        field = CyclotomicField(n)
        gens = section.get("galois_generators", [])
        _require(
            isinstance(gens, list) and all(isinstance(a, int) for a in gens),
            "field.galois_generators", "must be a list of integers",
        )
        galois = field.galois_subgroup(gens)
        return field, galois
    if kind == "finite":
        p = section.get("p")
        m = section.get("m")
        s = section.get("fixed_degree", 1)
        _require(isinstance(p, int) and p >= 2, "field.p", "must be a prime")
        _require(isinstance(m, int) and m >= 1, "field.m", "must be a positive integer")
        _require(
            isinstance(s, int) and s >= 1 and m % s == 0,
            "field.fixed_degree", "must be a divisor of m",
        )
        field = GaloisField(p, m)
        galois = field.galois_subgroup_from_fixed_degree(s)
        return field, galois
    raise ParseError("field.kind: must be 'cyclotomic' or 'finite'")


def parse_job(job):
    """Validate a job document and produce (field, galois, d, generators)."""
    _require(isinstance(job, dict), "job", "must be an object")
    field, galois = parse_field_section(job.get("field"))
    group = job.get("group")
    _require(isinstance(group, dict), "group", "must be an object")
    d = group.get("dimension")
    _require(isinstance(d, int) and d >= 2, "group.dimension", "must be an integer >= 2")
    gen_specs = group.get("generators")
    _require(
        isinstance(gen_specs, list) and gen_specs,
        "group.generators", "must be a nonempty list",
    )
    generators = []
    for gi, spec in enumerate(gen_specs):
        where = "group.generators[%d]" % gi
        _require(isinstance(spec, dict), where, "must be an object")
        mat = spec.get("matrix")
        _require(
            isinstance(mat, list) and len(mat) == d
            and all(isinstance(row, list) and len(row) == d for row in mat),
            where + ".matrix", "must be a %dx%d array of strings" % (d, d),
        )
        rows = []
        for i, row in enumerate(mat):
            out = []
            for j, entry in enumerate(row):
                try:
                    out.append(field.parse(entry))
                except ParseError as exc:
                    raise ParseError(
                        "%s.matrix[%d][%d]: %s" % (where, i, j, exc)
                    ) from None
            rows.append(tuple(out))
        aut = spec.get("aut", field.aut_identity())
        _require(isinstance(aut, int), where + ".aut", "must be an integer")
        generators.append(GroupElement(tuple(rows), aut))
    return field, galois, d, generators


class AnalysisResult:
    def __init__(self):
        self.field = None
        self.galois = None
        self.d = None
        self.group = None
        self.kernel = None
        self.table = None
        self.orbits = None
        self.flags = None
        self.quiver = None
        self.nu = None
        self.omega = None
        self.sequences = None
        self.class_group = None
        self.dynkin = None
        self.trace = None
        self.ambiguous = False


def run_job(job, options=None):
    options = options or Options()
    result = AnalysisResult()
    field, galois, d, generators = parse_job(job)
    result.field, result.galois, result.d = field, galois, d
    job_options = job.get("options", {})
    cap = job_options.get("cap", options.cap)
    result.group = generate_group(generators, cap=cap)
    result.kernel = kernel_and_cosets(result.group, galois)
    bad = smallness_violation(result.kernel)
    if bad is not None:
        raise SmallnessViolation(
            "the kernel subgroup contains the pseudo-reflection %r" % (bad,)
        )
    result.flags = {
        "small": True,
        "gorenstein": gorenstein_flag(result.kernel),
        "isolated": isolated_flag(result.kernel),
    }
    result.table = character_table(result.kernel)
    result.orbits = compute_orbits(result.table, result.kernel)
    result.trace = SolverTrace()
    solve_multiplicities(
        result.orbits,
        result.table,
        result.kernel,
        saturation_rounds=job_options.get("saturation", options.saturation),
        degree_budget=options.degree_budget,
        norm_bound=job_options.get("norm_search_bound", options.norm_bound),
        deep_extension=options.deep_extension,
        trace=result.trace,
    )
    if any(o.a is None for o in result.orbits):
        result.ambiguous = True
        return result
    result.quiver = mckay_G(result.orbits, result.table, result.kernel)
    result.nu = result.quiver.nu
    result.omega = next(
        i for i, v in enumerate(result.quiver.vertices) if v.is_omega
    )
    result.sequences = almost_split_sequences(result.orbits, result.table, d)
    result.class_group = class_group(result.orbits, result.table)
    result.dynkin = recognize_type(result.quiver, d, result.flags["gorenstein"])
    return result


# -- report assembly -----------------------------------------------------------


def _field_doc(field, galois):
    from .fields import _render_poly

    if field.kind == "cyclotomic":
        return {
            "kind": "cyclotomic",
            "conductor": field.n,
            "galois_generators": list(galois.generators),
            "galois_elements": list(galois.elements),
            "degree_over_k": galois.order,
        }
    return {
        "kind": "finite",
        "p": field.p,
        "m": field.m,
        "fixed_degree": field.m // galois.order,
        "modulus": _render_poly([Fraction(c) for c in field.modulus], field.symbol),
        "degree_over_k": galois.order,
    }


def build_report(result):
    field = result.field
    table = result.table
    orbits = result.orbits
    report = {
        "schema": SCHEMA,
        "field": _field_doc(field, result.galois),
        "dimension": result.d,
        "group_order": len(result.group),
        "kernel_order": result.kernel.order,
        "flags": dict(result.flags),
        "orbits": [
            {
                "label": o.label,
                "members": list(o.members),
                "t": o.t,
                "dim_w": o.dim_w,
                "a": o.a,
                "b": o.b,
                "candidates": list(o.candidates) if o.a is None else None,
                "provenance": o.provenance,
            }
            for o in orbits
        ],
        "character_table": {
            "class_sizes": list(result.kernel.class_sizes),
            "irreducible_values": [
                [field.render(table.embed_value(v)) for v in chi.values]
                for chi in table.irreducibles
            ],
        },
        "solver_trace": list(result.trace.lines),
        "ambiguous": result.ambiguous,
    }
    if result.ambiguous:
        report.update(
            {
                "vertices": None,
                "arrows": None,
                "nu": None,
                "omega": None,
                "sequences": None,
                "class_group": None,
                "dynkin_type": {"family": "unknown", "reason": "ambiguous multiplicities"},
            }
        )
        return report
    q = result.quiver
    labels = [v.label for v in q.vertices]
    report["vertices"] = [
        {
            "label": v.label,
            "rank": v.rank,
            "is_R": v.is_R,
            "is_omega": v.is_omega,
            "is_projective": v.is_projective,
        }
        for v in q.vertices
    ]
    report["arrows"] = [
        {"src": labels[i], "dst": labels[j], "d": dv, "dp": dp}
        for (i, j), (dv, dp) in sorted(q.arrows.items())
    ]
    report["nu"] = {labels[i]: labels[result.nu[i]] for i in range(len(labels))}
    report["omega"] = labels[result.omega]
    report["sequences"] = [
        {
            "target": labels[seq.target],
            "kind": seq.kind,
            "terms": [
                [[labels[j], m] for j, m in term] for term in seq.terms
            ],
        }
        for seq in result.sequences
    ]
    inv, elements = result.class_group
    report["class_group"] = {"invariant_factors": inv, "elements": elements}
    dt = result.dynkin
    if dt.family == "unknown":
        report["dynkin_type"] = {"family": "unknown", "reason": dt.reason}
    else:
        report["dynkin_type"] = {"family": dt.family, "n": dt.n}
    return report


def render_explain(result):
    lines = []
    lines.append("field: %r, [l:k] = %d" % (result.field, result.galois.order))
    lines.append(
        "|G| = %d, |H| = %d, flags: %s"
        % (len(result.group), result.kernel.order, result.flags)
    )
    lines.append("orbit solver trace:")
    for line in result.trace.lines:
        lines.append("  " + line)
    for o in result.orbits:
        lines.append(
            "  %s: members=%s t=%d dim=%d a=%s b=%s  [%s]"
            % (o.label, list(o.members), o.t, o.dim_w, o.a, o.b, o.provenance)
        )
    if result.ambiguous:
        lines.append("ambiguous multiplicities: no quiver emitted")
        return "\n".join(lines) + "\n"
    lines.append("omega = %s" % result.quiver.vertices[result.omega].label)
    lines.append("dynkin type: %r" % result.dynkin)
    inv, elems = result.class_group
    lines.append("class group: %s on %s" % (inv or "trivial", elems))
    return "\n".join(lines) + "\n"


def render_dot(result, show_nu=False):
    return emit_dot(result.quiver, show_nu=show_nu)
