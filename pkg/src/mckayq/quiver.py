"""Valued McKay/AR quivers: the quiver of lH, its quotient with corrected
valuations, the Nakayama permutation with the canonical-module vertex,
higher almost-split sequences, and the extended-Dynkin recognizer for
two-dimensional Gorenstein outputs."""

from .errors import ValuationNonIntegral
from .skew import gmodule_multiplicities, trivial_orbit_index


class QuiverVertex:
    __slots__ = ("label", "rank", "is_R", "is_omega", "is_projective")

    def __init__(self, label, rank, is_R=False, is_omega=False, is_projective=False):
        self.label = label
        self.rank = rank
        self.is_R = is_R
        self.is_omega = is_omega
        self.is_projective = is_projective


class ValuedQuiver:
    """Vertices with ranks and flags, arrows keyed by ordered vertex pairs and
    carrying the valuation pair (d, d'), an optional Nakayama permutation and
    the dotted arrows it induces."""

    def __init__(self, vertices, arrows, nu=None, dotted=()):
        self.vertices = vertices
        self.arrows = dict(arrows)
        for pair, val in self.arrows.items():
            assert val != (0, 0), "stored arrows must be nonzero %r" % (pair,)
        self.nu = nu
        self.dotted = set(dotted)

    def valuation(self, i, j):
        return self.arrows.get((i, j), (0, 0))

    def neighbors(self, i):
        out = set()
        for (a, b) in self.arrows:
            if a == i and b != i:
                out.add(b)
            if b == i and a != i:
                out.add(a)
        return sorted(out)

    def r_index(self):
        for i, v in enumerate(self.vertices):
            if v.is_R:
                return i
        raise ValueError("no distinguished R vertex")


class AlmostSplitSequence:
    """Terms of the (d-1)-almost split (or fundamental) sequence ending at a
    vertex; terms[p] decomposes the p-th exterior power tensor layer."""

    __slots__ = ("target", "kind", "terms")

    def __init__(self, target, kind, terms):
        self.target = target
        self.kind = kind
        self.terms = terms


class DynkinType:
    __slots__ = ("family", "n", "reason")

    def __init__(self, family, n=None, reason=None):
        self.family = family
        self.n = n
        self.reason = reason

    def __eq__(self, other):
        if isinstance(other, tuple):
            return (self.family, self.n) == other
        if isinstance(other, DynkinType):
            return (self.family, self.n) == (other.family, other.n)
        return NotImplemented

    def __repr__(self):
        if self.family == "unknown":
            return "unknown(%s)" % (self.reason,)
        if self.n is None:
            return self.family
        return "%s(%d)" % (self.family, self.n)


# -- McKay quiver of lH -------------------------------------------------------


def mckay_H(table, d):
    """Valued McKay quiver on the irreducible H-characters."""
    count = len(table.irreducibles)
    chi_u = table.standard_character()
    det = table.wedge_power_of_standard(d)
    wedge_prev = table.wedge_power_of_standard(d - 1)
    det_inv_values = tuple(table.field.inverse(v) for v in det.values)
    d_h = [[0] * count for _ in range(count)]
    for j, chj in enumerate(table.irreducibles):
        col = table.decompose(chi_u * chj)
        for i in range(count):
            d_h[i][j] = col[i]
    dp_h = [[0] * count for _ in range(count)]
    from .characters import Character

    for i, chi in enumerate(table.irreducibles):
        shifted = Character(
            table.kernel, table.field,
            tuple(a * b for a, b in zip(det_inv_values, chi.values)),
        )
        table.index_of(shifted)  # the nu-shift of an irreducible is irreducible
        row = table.decompose(wedge_prev * shifted)
        for j in range(count):
            dp_h[i][j] = row[j]
    vertices = [
        QuiverVertex("W%d" % i, chi.degree()) for i, chi in enumerate(table.irreducibles)
    ]
    one = table.field.one
    for i, chi in enumerate(table.irreducibles):
        if all(v == one for v in chi.values):
            vertices[i].is_R = True
            vertices[i].is_projective = True
    arrows = {}
    for i in range(count):
        for j in range(count):
            if d_h[i][j] or dp_h[i][j]:
                arrows[(i, j)] = (d_h[i][j], dp_h[i][j])
    q = ValuedQuiver(vertices, arrows)
    q.d_matrix = d_h
    q.dp_matrix = dp_h
    return q


# -- McKay quiver of l*G ------------------------------------------------------


def nu_and_omega(orbits, table):
    """Nakayama permutation on orbits, the canonical-module vertex, and the
    dotted arrows attached to every non-projective vertex."""
    d = table.kernel.group.d
    det = table.wedge_power_of_standard(d)
    from .characters import Character

    member_orbit = {}
    for oi, o in enumerate(orbits):
        for m in o.members:
            member_orbit[m] = oi
    nu = []
    for o in orbits:
        chi = table.irreducibles[o.members[0]]
        shifted = Character(
            table.kernel, table.field,
            tuple(a * b for a, b in zip(det.values, chi.values)),
        )
        nu.append(member_orbit[table.index_of(shifted)])
    assert sorted(nu) == list(range(len(orbits))), "nu must be a bijection"
    for oi, o in enumerate(orbits):
        assert orbits[nu[oi]].dim_w == o.dim_w and orbits[nu[oi]].t == o.t
    omega = nu[trivial_orbit_index(orbits, table)]
    return nu, omega


def mckay_G(orbits, table, kernel, quiver_h=None):
    """Quotient quiver with valuations corrected by the a_i, cross-checked
    against the direct decomposition of U (x) V_i."""
    d = kernel.group.d
    if d < 2:
        raise ValueError("the construction needs dimension d >= 2")
    qh = quiver_h or mckay_H(table, d)
    d_h, dp_h = qh.d_matrix, qh.dp_matrix
    s = len(orbits)
    d_g = [[0] * s for _ in range(s)]
    dp_g = [[0] * s for _ in range(s)]
    for i, oi in enumerate(orbits):
        for ip, oip in enumerate(orbits):
            sums = {sum(d_h[j][jp] for jp in oip.members) for j in oi.members}
            assert len(sums) == 1, "row sums must not depend on the member"
            total = sums.pop()
            num = oip.a * total
            if num % oi.a:
                raise ValuationNonIntegral(
                    "valuation %d*%d/%d is not integral" % (oip.a, total, oi.a)
                )
            d_g[i][ip] = num // oi.a
            sums_p = {sum(dp_h[j][jp] for j in oi.members) for jp in oip.members}
            assert len(sums_p) == 1, "column sums must not depend on the member"
            total_p = sums_p.pop()
            num_p = oi.a * total_p
            if num_p % oip.a:
                raise ValuationNonIntegral(
                    "valuation %d*%d/%d is not integral" % (oi.a, total_p, oip.a)
                )
            dp_g[i][ip] = num_p // oip.a
    # independent route: decompose U (x) V_i' directly
    direct_d, direct_dp = mckay_G_direct(orbits, table)
    assert direct_d == d_g and direct_dp == dp_g, "two-path valuation check failed"
    nu, omega = nu_and_omega(orbits, table)
    t0 = trivial_orbit_index(orbits, table)
    vertices = []
    for i, o in enumerate(orbits):
        vertices.append(
            QuiverVertex(
                o.label,
                o.rank,
                is_R=(i == t0),
                is_omega=(i == omega),
                is_projective=(i == t0),
            )
        )
    arrows = {}
    for i in range(s):
        for j in range(s):
            if d_g[i][j] or dp_g[i][j]:
                arrows[(i, j)] = (d_g[i][j], dp_g[i][j])
    for i in range(s):
        assert any(i in pair for pair in arrows), (
            "every vertex of a McKay quiver has an incident arrow for d >= 2"
        )
    dotted = {i for i in range(s) if i != t0}
    q = ValuedQuiver(vertices, arrows, nu=nu, dotted=dotted)
    q.d_matrix = d_g
    q.dp_matrix = dp_g
    return q


def mckay_G_direct(orbits, table):
    """Valuations straight from the definition: multiplicities of simples in
    U (x) V and in the (d-1)-st exterior layer over the nu-shift."""
    from .characters import Character

    kernel = table.kernel
    d = kernel.group.d
    chi_u = table.standard_character()
    wedge_prev = table.wedge_power_of_standard(d - 1)
    det = table.wedge_power_of_standard(d)
    det_inv_values = tuple(table.field.inverse(v) for v in det.values)
    s = len(orbits)
    d_g = [[0] * s for _ in range(s)]
    dp_g = [[0] * s for _ in range(s)]

    def res_char(o, twist=None):
        values = None
        for m in o.members:
            chi = table.irreducibles[m]
            values = chi.values if values is None else tuple(
                a + b for a, b in zip(values, chi.values)
            )
        if twist is not None:
            values = tuple(a * b for a, b in zip(twist, values))
        chi = Character(kernel, table.field, values)
        return chi.scale(o.a)

    for ip, oip in enumerate(orbits):
        mults = gmodule_multiplicities(chi_u * res_char(oip), orbits, table)
        for i in range(s):
            d_g[i][ip] = mults[i]
    for i, oi in enumerate(orbits):
        # V_i' with wedge^d U (x) V_i' = V_i restricts to det^-1 (x) Res V_i
        mults = gmodule_multiplicities(
            wedge_prev * res_char(oi, twist=det_inv_values), orbits, table
        )
        for ip in range(s):
            dp_g[i][ip] = mults[ip]
    return d_g, dp_g


# -- almost split sequences ---------------------------------------------------


def almost_split_sequences(orbits, table, d):
    """For every vertex the terms of its (d-1)-almost split sequence; the
    sequence at the trivial vertex is the fundamental one."""
    from .characters import Character

    kernel = table.kernel
    t0 = trivial_orbit_index(orbits, table)
    nu, _ = nu_and_omega(orbits, table)
    wedges = [table.wedge_power_of_standard(p) for p in range(d + 1)]
    out = []
    for i, o in enumerate(orbits):
        values = None
        for m in o.members:
            chi = table.irreducibles[m]
            values = chi.values if values is None else tuple(
                a + b for a, b in zip(values, chi.values)
            )
        res = Character(kernel, table.field, values).scale(o.a)
        terms = []
        for p in range(d + 1):
            mults = gmodule_multiplicities(wedges[p] * res, orbits, table)
            terms.append(tuple((j, m) for j, m in enumerate(mults) if m))
        assert terms[0] == ((i, 1),), "the zeroth layer is the vertex itself"
        assert terms[d] == ((nu[i], 1),), "the top layer is the nu-shift"
        kind = "fundamental" if i == t0 else "almost_split"
        out.append(AlmostSplitSequence(i, kind, terms))
    return out


def sequence_rank_alternating_sum(seq, orbits):
    total = 0
    sign = 1
    for term in seq.terms:
        total += sign * sum(orbits[j].rank * m for j, m in term)
        sign = -sign
    return total


# -- extended Dynkin recognition ----------------------------------------------


def _path_template(ranks, special_edges):
    """Chain 0-1-...-N-1 with (1,1) edges except for the listed overrides."""
    edges = {}
    n = len(ranks)
    for i in range(n - 1):
        edges[(i, i + 1)] = 1
        edges[(i + 1, i)] = 1
    edges.update(special_edges)
    return ranks, edges


def _double_path(pairs):
    edges = {}
    for i, j in pairs:
        edges[(i, j)] = 1
        edges[(j, i)] = 1
    return edges


def _templates(count):
    """Candidate (family, n, ranks, d-valuations) tuples with `count` vertices."""
    out = []
    if count == 1:
        out.append(("A0~", None, [1], {(0, 0): 2}))
    if count == 2:
        out.append(("A11~", None, [1, 2], {(0, 1): 4, (1, 0): 1}))
        out.append(("A12~", None, [1, 1], {(0, 1): 2, (1, 0): 2}))
    if count >= 3:
        n = count - 1
        cycle = _double_path([(i, (i + 1) % count) for i in range(count)])
        out.append(("An~", n, [1] * count, cycle))
        ranks, edges = _path_template(
            [1] + [2] * (count - 2) + [1],
            {(0, 1): 2, (1, 0): 1, (count - 1, count - 2): 2, (count - 2, count - 1): 1},
        )
        out.append(("Cn~", n, ranks, edges))
        ranks, edges = _path_template(
            [1] + [2] * (count - 1),
            {(0, 1): 2, (1, 0): 1, (count - 2, count - 1): 2, (count - 1, count - 2): 1},
        )
        out.append(("BCn~", n, ranks, edges))
    if count == 3:
        ranks, edges = _path_template([1, 2, 3], {(1, 2): 3, (2, 1): 1})
        out.append(("G22~", None, ranks, edges))
    if count >= 4:
        n = count - 1
        # fork (0 = R, 1 = tip) into a chain 2..count-1 ending with (2,1)
        ranks = [1, 1] + [2] * (count - 2)
        edges = _double_path(
            [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, count - 1)]
        )
        edges[(count - 2, count - 1)] = 2
        edges[(count - 1, count - 2)] = 1
        out.append(("BDn~", n, ranks, edges))
    if count >= 5:
        n = count - 1
        ranks = [1, 1] + [2] * (count - 4) + [1, 1]
        hub = count - 3
        edges = _double_path(
            [(0, 2), (1, 2)]
            + [(i, i + 1) for i in range(2, hub)]
            + [(hub, count - 2), (hub, count - 1)]
        )
        out.append(("Dn~", n, ranks, edges))
    if count == 5:
        ranks, edges = _path_template([1, 2, 3, 4, 2], {(2, 3): 2, (3, 2): 1})
        out.append(("F42~", None, ranks, edges))
    if count == 7:
        edges = _double_path([(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)])
        out.append(("E6~", None, [1, 2, 3, 2, 1, 2, 1], edges))
    if count == 8:
        edges = _double_path([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)])
        out.append(("E7~", None, [1, 2, 3, 4, 3, 2, 1, 2], edges))
    if count == 9:
        edges = _double_path(
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)]
        )
        out.append(("E8~", None, [1, 2, 3, 4, 5, 6, 4, 2, 3], edges))
    if count >= 2:
        n = count - 1
        special = {(0, 1): 2, (1, 0): 1, (count - 1, count - 1): 1}
        out.append(("CLn~", n, *_path_template([1] + [2] * (count - 1), special)))
    return [t for t in out if t[2] is not None]


def _match_template(ranks, edges, quiver):
    """Anchored isomorphism: template vertex 0 must map to the R vertex."""
    count = len(ranks)
    inst_rank = [v.rank for v in quiver.vertices]
    if len(inst_rank) != count:
        return False
    inst_d = {}
    for (i, j), (dv, _) in quiver.arrows.items():
        if dv:
            inst_d[(i, j)] = dv
    r_index = quiver.r_index()

    t_adj = [set() for _ in range(count)]
    for (i, j) in edges:
        if i != j:
            t_adj[i].add(j)
            t_adj[j].add(i)
    i_adj = [set() for _ in range(count)]
    for (i, j) in inst_d:
        if i != j:
            i_adj[i].add(j)
            i_adj[j].add(i)

    order = [0]
    seen = {0}
    queue = [0]
    while queue:
        cur = queue.pop(0)
        for nb in sorted(t_adj[cur]):
            if nb not in seen:
                seen.add(nb)
                order.append(nb)
                queue.append(nb)
    if len(order) != count:
        return False  # disconnected template cannot occur

    assign = {}

    def consistent(t_v, i_v):
        if ranks[t_v] != inst_rank[i_v]:
            return False
        if edges.get((t_v, t_v), 0) != inst_d.get((i_v, i_v), 0):
            return False
        if len(t_adj[t_v]) != len(i_adj[i_v]):
            return False
        for t_u, i_u in assign.items():
            if edges.get((t_v, t_u), 0) != inst_d.get((i_v, i_u), 0):
                return False
            if edges.get((t_u, t_v), 0) != inst_d.get((i_u, i_v), 0):
                return False
        return True

    def backtrack(pos):
        if pos == count:
            return True
        t_v = order[pos]
        options = [r_index] if t_v == 0 else [
            i for i in range(count) if i not in assign.values()
        ]
        for i_v in options:
            if i_v in assign.values():
                continue
            if consistent(t_v, i_v):
                assign[t_v] = i_v
                if backtrack(pos + 1):
                    return True
                del assign[t_v]
        return False

    return backtrack(0)


def recognize_type(quiver, d, gorenstein):
    """Match a two-dimensional Gorenstein quiver against the classification
    templates, anchored at the R vertex."""
    if d != 2:
        return DynkinType("unknown", reason="recognition applies to d = 2 only")
    if not gorenstein:
        return DynkinType("unknown", reason="recognition applies to Gorenstein rings only")
    matches = []
    for family, n, ranks, edges in _templates(len(quiver.vertices)):
        if _match_template(ranks, edges, quiver):
            matches.append((family, n))
    if len(matches) == 1:
        return DynkinType(matches[0][0], matches[0][1])
    if not matches:
        return DynkinType("unknown", reason="no classification template matches")
    return DynkinType("unknown", reason="ambiguous match %s" % (matches,))


# -- DOT output ---------------------------------------------------------------


def emit_dot(quiver, show_nu=False):
    lines = ["digraph mckay {", "  rankdir=LR;"]
    for v in quiver.vertices:
        attrs = []
        label = v.label
        if v.is_R:
            label += " = R"
            attrs.append("shape=doublecircle")
        else:
            attrs.append("shape=circle")
        if v.is_omega and not v.is_R:
            label += " = omega"
        attrs.insert(0, 'label="%s"' % label)
        lines.append('  "%s" [%s];' % (v.label, ", ".join(attrs)))
    for (i, j) in sorted(quiver.arrows):
        dv, dp = quiver.arrows[(i, j)]
        attr = "" if (dv, dp) == (1, 1) else ' [label="(%d,%d)"]' % (dv, dp)
        lines.append(
            '  "%s" -> "%s"%s;'
            % (quiver.vertices[i].label, quiver.vertices[j].label, attr)
        )
    nu = quiver.nu
    if nu is not None:
        identity = all(nu[i] == i for i in range(len(nu)))
        if show_nu or not identity:
            for i in sorted(quiver.dotted):
                lines.append(
                    '  "%s" -> "%s" [style=dashed];'
                    % (quiver.vertices[i].label, quiver.vertices[nu[i]].label)
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
