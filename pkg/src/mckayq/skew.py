"""Galois-orbit decomposition of the irreducible characters of H and the
layered determination of the restriction/induction multiplicities (t, a, b)
with t*a*b = [l:k], plus the divisor class group read off from the
one-dimensional orbits."""

from .errors import (
    InconsistentConstraints,
    NonDivisible,
    OrbitInconsistent,
)
from .fields import NO, UNKNOWN, YES, is_norm
from .groups import mat_apply_aut, mat_inverse, mat_mul
from .intlinalg import abelian_structure


class OrbitDatum:
    """One Galois orbit of irreducible H-characters: a vertex of the quiver."""

    __slots__ = ("members", "t", "dim_w", "a", "b", "candidates", "provenance")

    def __init__(self, members, dim_w):
        self.members = tuple(sorted(members))
        self.t = len(self.members)
        self.dim_w = dim_w
        self.a = None
        self.b = None
        self.candidates = None
        self.provenance = ""

    @property
    def label(self):
        return "V" + "_".join(str(m) for m in self.members)

    @property
    def rank(self):
        if self.a is None:
            raise ValueError("multiplicities not solved")
        return self.t * self.a * self.dim_w

    def fix(self, a, degree_over_k, provenance):
        assert degree_over_k % (self.t * a) == 0
        self.a = a
        self.b = degree_over_k // (self.t * a)
        self.candidates = (a,)
        self.provenance = provenance

    def __repr__(self):
        return "OrbitDatum(%s, t=%d, dim=%d, a=%r, b=%r)" % (
            list(self.members), self.t, self.dim_w, self.a, self.b,
        )


def compute_orbits(table, kernel):
    """Partition of the irreducibles into orbits of the Galois action by
    coset representatives, ordered by smallest member index."""
    count = len(table.irreducibles)
    parent = list(range(count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for rep in kernel.coset_reps:
        perm = table.twist_permutation(rep)
        for i, j in enumerate(perm):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups = {}
    for i in range(count):
        groups.setdefault(find(i), []).append(i)
    orbits = [
        OrbitDatum(members, table.irreducibles[members[0]].degree())
        for _, members in sorted(groups.items())
    ]
    assert sum(o.t for o in orbits) == count
    for o in orbits:
        degs = {table.irreducibles[m].degree() for m in o.members}
        assert len(degs) == 1, "orbit members must share one degree"
    return orbits


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def trivial_orbit_index(orbits, table):
    one = table.field.one
    for i, o in enumerate(orbits):
        chi = table.irreducibles[o.members[0]]
        if all(v == one for v in chi.values):
            return i
    raise AssertionError("no trivial character found")


def orbit_coefficients(chi, orbits, table):
    """Decompose chi and return one coefficient per orbit, asserting that the
    coefficients are constant along each orbit."""
    mults = table.decompose(chi)
    out = []
    for o in orbits:
        vals = {mults[m] for m in o.members}
        if len(vals) != 1:
            raise OrbitInconsistent(
                "multiplicities %s are not constant on orbit %s"
                % ([mults[m] for m in o.members], list(o.members))
            )
        out.append(vals.pop())
    return tuple(out)


class SolverTrace:
    def __init__(self):
        self.lines = []

    def note(self, text):
        self.lines.append(text)


def solve_multiplicities(
    orbits,
    table,
    kernel,
    saturation_rounds=32,
    degree_budget=4096,
    norm_bound=8,
    deep_extension=False,
    trace=None,
):
    """Layered determination of a_i (and b_i = [l:k] / (t_i a_i)).

    L0 fixes the trivial orbit, L1 saturates tensor products of exterior
    powers of the standard module, L2 eliminates by divisibility, L3 answers
    the extension question for linear characters in singleton orbits through
    a norm equation, and anything left is reported as an explicit candidate
    set rather than guessed.
    """
    trace = trace if trace is not None else SolverTrace()
    degree_over_k = kernel.galois.order
    for o in orbits:
        if degree_over_k % o.t != 0:
            raise InconsistentConstraints("orbit size does not divide [l:k]")
        o.candidates = tuple(_divisors(degree_over_k // o.t))
    # L0: the trivial character is the restriction of the trivial module
    t0 = trivial_orbit_index(orbits, table)
    orbits[t0].fix(1, degree_over_k, "L0: trivial module")
    trace.note("orbit %s: a=1 (L0 trivial module)" % orbits[t0].label)

    # L1: tensor saturation of the exterior powers of the standard module
    d = kernel.group.d
    seeds = [table.wedge_power_of_standard(p) for p in range(d + 1)]
    gcds = [0] * len(orbits)
    pool = {}

    def absorb(chi):
        coeffs = orbit_coefficients(chi, orbits, table)
        if coeffs in pool:
            return False
        pool[coeffs] = chi
        for i, c in enumerate(coeffs):
            if c:
                gcds[i] = _gcd(gcds[i], c)
        return True

    for seed in seeds:
        absorb(seed)
    frontier = list(pool.values())
    rounds = 0
    while frontier and rounds < saturation_rounds:
        rounds += 1
        new = []
        for chi in frontier:
            if chi.degree() > degree_budget:
                continue
            for seed in seeds:
                prod = chi * seed
                if prod.degree() > degree_budget:
                    continue
                if absorb(prod):
                    new.append(prod)
        frontier = new
    for i, o in enumerate(orbits):
        if o.a is None and gcds[i]:
            o.candidates = tuple(a for a in o.candidates if gcds[i] % a == 0)
            if not o.candidates:
                raise InconsistentConstraints(
                    "no multiplicity divides the saturation gcd %d on %s"
                    % (gcds[i], o.label)
                )
    _settle(orbits, degree_over_k, "L1/L2: tensor saturation", trace)

    # L3: extension test for linear characters in singleton orbits
    for o in orbits:
        if o.a is not None or o.t != 1 or o.dim_w != 1:
            continue
        verdict = _linear_extension_verdict(o, table, kernel, norm_bound, trace)
        _apply_extension_verdict(o, verdict, degree_over_k, trace)
    # optional deep test for higher-dimensional singleton orbits realized by
    # the standard module or one of its exterior powers
    if deep_extension:
        for o in orbits:
            if o.a is not None or o.t != 1 or o.dim_w == 1:
                continue
            verdict = _matrix_extension_verdict(o, table, kernel, norm_bound, trace)
            _apply_extension_verdict(o, verdict, degree_over_k, trace)
    for o in orbits:
        if o.a is None:
            o.provenance = "L4: ambiguous, candidates %s" % (list(o.candidates),)
            trace.note("orbit %s: unresolved, candidates %s" % (o.label, list(o.candidates)))
    return orbits


def _apply_extension_verdict(orbit, verdict, degree_over_k, trace):
    if verdict is None:
        return
    answer, detail = verdict
    if answer == YES:
        if 1 not in orbit.candidates:
            raise InconsistentConstraints(
                "extension exists but a=1 was excluded on %s" % orbit.label
            )
        orbit.fix(1, degree_over_k, "L3: extension exists (%s)" % detail)
        trace.note("orbit %s: a=1 (L3, %s)" % (orbit.label, detail))
    elif answer == NO:
        remaining = tuple(a for a in orbit.candidates if a != 1)
        if not remaining:
            raise InconsistentConstraints(
                "extension obstruction excluded every candidate on %s" % orbit.label
            )
        orbit.candidates = remaining
        if len(remaining) == 1:
            orbit.fix(remaining[0], degree_over_k, "L3: norm obstruction (%s)" % detail)
            trace.note("orbit %s: a=%d (L3 obstruction, %s)" % (orbit.label, remaining[0], detail))
        else:
            orbit.provenance = "L3: a=1 excluded (%s)" % detail
    # UNKNOWN contributes nothing


def _cyclic_coset_generator(kernel):
    galois = kernel.galois
    if not galois.is_cyclic():
        return None
    gen = galois.smallest_generator()
    pos = galois.elements.index(gen)
    return kernel.coset_reps[pos], galois.order


def _linear_extension_verdict(orbit, table, kernel, norm_bound, trace):
    """Extension of a Galois-fixed linear character to the whole group, as a
    norm equation N(lambda) = chi(g^c) over the cyclic Galois subgroup."""
    got = _cyclic_coset_generator(kernel)
    if got is None:
        return None
    g_index, c = got
    group = kernel.group
    power = 0
    for _ in range(c):
        power = group.mul(power, g_index)
    assert power in kernel.h_set
    chi = table.irreducibles[orbit.members[0]]
    target_value = chi.values[kernel.class_of[power]]
    target = table.embed_value(target_value)
    answer = is_norm(target, kernel.galois, bound=norm_bound)
    detail = "N(lambda) = %s is %s" % (group.field.render(target), answer)
    if answer == UNKNOWN:
        trace.note("orbit %s: L3 inconclusive (%s)" % (orbit.label, detail))
        return None
    return answer, detail


def _matrix_extension_verdict(orbit, table, kernel, norm_bound, trace):
    """Best-effort semilinear intertwiner test for a singleton orbit whose
    character is realized by the standard module or an exterior power of it;
    the residual obstruction is again a norm equation."""
    got = _cyclic_coset_generator(kernel)
    if got is None:
        return None
    g_index, c = got
    group = kernel.group
    lfield = group.field
    chi = table.irreducibles[orbit.members[0]]
    rho = _known_realization(chi, table)
    if rho is None:
        return None
    m = orbit.dim_w
    g_aut = group.elements[g_index].aut
    g_inv = group.inv(g_index)
    # solve X * sigma(rho(h)) = rho(g h g^-1) * X over l for all h-generators
    cols = m * m
    rows = []
    for h in kernel.h_generators:
        rh = mat_apply_aut(lfield, g_aut, rho(h))
        lh = rho(group.mul(group.mul(g_index, h), g_inv))
        for i in range(m):
            for j in range(m):
                row = [lfield.zero] * cols
                for k in range(m):
                    row[i * m + k] = row[i * m + k] + rh[k][j]
                    row[k * m + j] = row[k * m + j] - lh[i][k]
                rows.append(row)
    basis = _field_kernel(lfield, rows, cols)
    if len(basis) != 1:
        trace.note(
            "orbit %s: intertwiner space has dimension %d, skipping"
            % (orbit.label, len(basis))
        )
        return None
    x0 = tuple(tuple(basis[0][i * m + j] for j in range(m)) for i in range(m))
    prod = x0
    for k in range(1, c):
        twisted = x0
        for _ in range(k):
            twisted = mat_apply_aut(lfield, g_aut, twisted)
        prod = mat_mul(prod, twisted)
    power = 0
    for _ in range(c):
        power = group.mul(power, g_index)
    target_mat = mat_mul(prod, mat_inverse(lfield, rho(power)))
    mu = target_mat[0][0]
    for i in range(m):
        for j in range(m):
            expected = mu if i == j else lfield.zero
            if target_mat[i][j] != expected:
                trace.note("orbit %s: twisted product is not scalar" % orbit.label)
                return None
    answer = is_norm(lfield.inverse(mu), kernel.galois, bound=norm_bound)
    detail = "N(lambda) = %s is %s" % (lfield.render(lfield.inverse(mu)), answer)
    if answer == UNKNOWN:
        return None
    return answer, detail


def _known_realization(chi, table):
    """Matrix model of chi when it matches the standard module or one of its
    exterior powers; returns a map from H-element index to a matrix."""
    kernel = table.kernel
    group = kernel.group
    d = group.d
    from itertools import combinations

    for p in range(1, d + 1):
        if table.wedge_power_of_standard(p).values == chi.values:
            subsets = list(combinations(range(d), p))

            def rho(h_index, subsets=subsets, p=p):
                mat = group.elements[h_index].matrix
                return tuple(
                    tuple(
                        _minor(group.field, mat, rowset, colset)
                        for colset in subsets
                    )
                    for rowset in subsets
                )

            return rho
    return None


def _minor(field, mat, rows, cols):
    from .groups import mat_det

    sub = tuple(tuple(mat[i][j] for j in cols) for i in rows)
    return mat_det(field, sub)


def _field_kernel(field, rows, cols):
    """Kernel basis of a matrix with FieldElement entries."""
    a = [list(r) for r in rows]
    piv_cols = []
    rank = 0
    for col in range(cols):
        piv = next((i for i in range(rank, len(a)) if not a[i][col].is_zero()), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = field.inverse(a[rank][col])
        a[rank] = [x * inv for x in a[rank]]
        for i in range(len(a)):
            if i != rank and not a[i][col].is_zero():
                c = a[i][col]
                a[i] = [x - c * y for x, y in zip(a[i], a[rank])]
        piv_cols.append(col)
        rank += 1
    basis = []
    for fc in range(cols):
        if fc in piv_cols:
            continue
        v = [field.zero] * cols
        v[fc] = field.one
        for i, pc in enumerate(piv_cols):
            v[pc] = -a[i][fc]
        basis.append(v)
    return basis


def _settle(orbits, degree_over_k, provenance, trace):
    for o in orbits:
        if o.a is None and len(o.candidates) == 1:
            o.fix(o.candidates[0], degree_over_k, provenance)
            trace.note("orbit %s: a=%d (%s)" % (o.label, o.a, provenance))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def gmodule_multiplicities(chi, orbits, table):
    """Multiplicities of the simple modules V_i in a module with restriction
    character chi; requires every a_i to be fixed."""
    coeffs = orbit_coefficients(chi, orbits, table)
    out = []
    for o, c in zip(orbits, coeffs):
        if o.a is None:
            raise ValueError("orbit %s is unresolved" % o.label)
        if c % o.a != 0:
            raise NonDivisible(
                "coefficient %d on %s is not divisible by a=%d" % (c, o.label, o.a)
            )
        out.append(c // o.a)
    return tuple(out)


def verify_res_ind(orbits, table, kernel):
    """Character identity for restriction of an induced module: the sum of
    all coset twists of one member equals [l:k]/t times the orbit sum."""
    degree_over_k = kernel.galois.order
    for o in orbits:
        chi = table.irreducibles[o.members[0]]
        total = None
        for rep in kernel.coset_reps:
            tw = table.galois_twist(chi, rep)
            total = tw if total is None else total + tw
        mults = table.decompose(total)
        expected = degree_over_k // o.t
        for m in range(len(table.irreducibles)):
            want = expected if m in o.members else 0
            if mults[m] != want:
                raise AssertionError("restriction-induction identity failed")
    return True


def class_group(orbits, table):
    """Divisor class group: orbits with t = a = dim_w = 1 under tensor
    product of the underlying linear characters.  Returns (invariant_factors,
    element_labels)."""
    for o in orbits:
        if o.a is None:
            raise ValueError("orbit %s is unresolved" % o.label)
    elements = [i for i, o in enumerate(orbits) if o.t == 1 and o.a == 1 and o.dim_w == 1]
    index_by_member = {}
    for i, o in enumerate(orbits):
        for m in o.members:
            index_by_member[m] = i

    def mul(i, j):
        chi = table.irreducibles[orbits[i].members[0]] * table.irreducibles[orbits[j].members[0]]
        k = table.index_of(chi)
        target = index_by_member[k]
        assert target in elements, "class group is not closed under tensor products"
        return target

    ident = trivial_orbit_index(orbits, table)
    assert ident in elements
    invariants, _ = abelian_structure(elements, mul, ident)
    labels = [orbits[i].label for i in elements]
    return invariants, labels
