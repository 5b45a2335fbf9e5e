"""Finite subgroups of GL_d(l) x| Gal(l/k): closure from generators, the
kernel subgroup H acting l-linearly, conjugacy classes, and the
ring-theoretic flags read off from H."""

from .errors import CapExceeded, CharDividesOrder, NotSurjectiveOntoGalois

DEFAULT_CAP = 100000


# -- exact matrix helpers ----------------------------------------------------


def identity_matrix(field, d):
    return tuple(
        tuple(field.one if i == j else field.zero for j in range(d)) for i in range(d)
    )


def mat_from_rows(rows):
    return tuple(tuple(row) for row in rows)


def mat_mul(a, b):
    d = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(1, d)), a[i][0] * b[0][j]) for j in range(d))
        for i in range(d)
    )


def mat_apply_aut(field, aut, a):
    return tuple(tuple(field.apply_aut(aut, x) for x in row) for row in a)


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_det(field, a):
    d = len(a)
    if d == 1:
        return a[0][0]
    if d == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    det = field.zero
    for j in range(d):
        if a[0][j].is_zero():
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in a[1:])
        term = a[0][j] * mat_det(field, minor)
        det = det + term if j % 2 == 0 else det - term
    return det


def mat_inverse(field, a):
    d = len(a)
    aug = [list(row) + [field.one if i == j else field.zero for j in range(d)]
           for i, row in enumerate(a)]
    for col in range(d):
        piv = next((i for i in range(col, d) if not aug[i][col].is_zero()), None)
        if piv is None:
            raise ArithmeticError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = field.inverse(aug[col][col])
        aug[col] = [x * inv for x in aug[col]]
        for i in range(d):
            if i != col and not aug[i][col].is_zero():
                c = aug[i][col]
                aug[i] = [x - c * y for x, y in zip(aug[i], aug[col])]
    return tuple(tuple(row[d:]) for row in aug)


def mat_rank(field, a):
    rows = [list(r) for r in a]
    d = len(rows)
    rank = 0
    col = 0
    while rank < d and col < d:
        piv = next((i for i in range(rank, d) if not rows[i][col].is_zero()), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inverse(rows[rank][col])
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(d):
            if i != rank and not rows[i][col].is_zero():
                c = rows[i][col]
                rows[i] = [x - c * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def mat_kernel_dim(field, a):
    return len(a) - mat_rank(field, a)


# -- group elements ----------------------------------------------------------


class GroupElement:
    """Pair (matrix, aut) with the semidirect product law
    (A, a)(B, b) = (A * sigma_a(B), a b)."""

    __slots__ = ("matrix", "aut")

    def __init__(self, matrix, aut):
        self.matrix = mat_from_rows(matrix)
        self.aut = self.field.aut_normalize(aut)

    @property
    def field(self):
        return self.matrix[0][0].field

    @property
    def dim(self):
        return len(self.matrix)

    def __mul__(self, other):
        field = self.field
        b = mat_apply_aut(field, self.aut, other.matrix)
        return GroupElement(mat_mul(self.matrix, b), field.aut_compose(self.aut, other.aut))

    def inverse(self):
        field = self.field
        ainv = field.aut_inverse(self.aut)
        return GroupElement(mat_apply_aut(field, ainv, mat_inverse(field, self.matrix)), ainv)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.aut == other.aut and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.matrix, self.aut))

    def is_linear(self):
        return self.aut == self.field.aut_identity()

    def __repr__(self):
        field = self.field
        rows = "; ".join(
            ", ".join(field.render(x) for x in row) for row in self.matrix
        )
        return "([%s], aut=%s)" % (rows, self.aut)


def group_identity(field, d):
    return GroupElement(identity_matrix(field, d), field.aut_identity())


# -- finite groups -----------------------------------------------------------


class FiniteGroup:
    def __init__(self, field, d, elements, generator_indices):
        self.field = field
        self.d = d
        self.elements = elements
        self.index = {g: i for i, g in enumerate(elements)}
        self.generator_indices = generator_indices
        self._mul_cache = {}
        self._inv_cache = {}

    def __len__(self):
        return len(self.elements)

    def mul(self, i, j):
        key = (i, j)
        got = self._mul_cache.get(key)
        if got is None:
            got = self.index[self.elements[i] * self.elements[j]]
            self._mul_cache[key] = got
        return got

    def inv(self, i):
        got = self._inv_cache.get(i)
        if got is None:
            # powers of a finite-order element avoid matrix inversion
            j = i
            prev = i
            while j != 0:
                prev = j
                j = self.mul(j, i)
            got = prev if i != 0 else 0
            self._inv_cache[i] = got
        return got

    def conjugate(self, g, h):
        """Index of g h g^{-1}."""
        return self.mul(self.mul(g, h), self.inv(g))

    def element_order(self, i):
        k = 1
        j = i
        while j != 0:
            j = self.mul(j, i)
            k += 1
        return k



def generate_group(generators, cap=DEFAULT_CAP):
    """Closure of the generators under the semidirect product law, ordered
    breadth-first from the identity with generators in input order."""
    if not generators:
        raise ValueError("at least one generator is required")
    field = generators[0].field
    d = generators[0].dim
    for g in generators:
        if g.field is not field or g.dim != d:
            raise ValueError("generators must share one field and dimension")
        if mat_det(field, g.matrix).is_zero():
            raise ValueError("generator matrix is singular")
    ident = group_identity(field, d)
    elements = [ident]
    seen = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in seen:
                    if len(elements) >= cap:
                        raise CapExceeded(
                            "group closure exceeded the cap of %d elements" % cap
                        )
                    seen[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    if field.char and len(elements) % field.char == 0:
        raise CharDividesOrder(
            "characteristic %d divides the group order %d" % (field.char, len(elements))
        )
    gen_idx = [seen[g] for g in generators]
    return FiniteGroup(field, d, elements, gen_idx)


class KernelSubgroup:
    """H = G  intersected with GL_d(l), its conjugacy classes, and one coset
    representative of G/H per element of the declared Galois subgroup."""

    def __init__(self, group, galois):
        self.group = group
        self.galois = galois
        field = group.field
        image = {g.aut for g in group.elements}
        if image != set(galois.elements):
            raise NotSurjectiveOntoGalois(
                "image of the group in the Galois group is %s, expected %s"
                % (sorted(image), list(galois.elements))
            )
        ident_aut = field.aut_identity()
        self.h_indices = [i for i, g in enumerate(group.elements) if g.aut == ident_aut]
        self.h_set = set(self.h_indices)
        assert len(group) == len(self.h_indices) * galois.order
        reps = {}
        for i, g in enumerate(group.elements):
            if g.aut not in reps:
                reps[g.aut] = i
        self.coset_reps = [reps[a] for a in galois.elements]
        self._build_classes()

    def _build_classes(self):
        group = self.group
        # generating set of H, greedily from its canonical order
        gens = []
        generated = {0}
        for i in self.h_indices:
            if i in generated:
                continue
            gens.append(i)
            frontier = list(generated)
            new = set(generated)
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        for y in (group.mul(x, g), group.mul(g, x)):
                            if y not in new:
                                new.add(y)
                                nxt.append(y)
                frontier = nxt
            generated = new
            if len(generated) == len(self.h_indices):
                break
        self.h_generators = gens
        classes = []
        assigned = {}
        for i in self.h_indices:
            if i in assigned:
                continue
            orbit = {i}
            frontier = [i]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = group.conjugate(g, x)
                        if y not in orbit:
                            orbit.add(y)
                            nxt.append(y)
                frontier = nxt
            cls = sorted(orbit)
            idx = len(classes)
            classes.append(cls)
            for x in cls:
                assigned[x] = idx
        self.classes = classes
        self.class_of = assigned
        self.class_sizes = [len(c) for c in classes]
        self.class_reps = [c[0] for c in classes]
        self.inverse_class = [
            assigned[self.group.inv(rep)] for rep in self.class_reps
        ]

    @property
    def order(self):
        return len(self.h_indices)

    def is_abelian(self):
        return all(size == 1 for size in self.class_sizes)

    def exponent(self):
        e = 1
        for rep in self.class_reps:
            o = self.group.element_order(rep)
            e = e * o // _gcd(e, o)
        return e

    def elements(self):
        return [self.group.elements[i] for i in self.h_indices]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def kernel_and_cosets(group, galois):
    return KernelSubgroup(group, galois)


# -- flags -------------------------------------------------------------------


def is_pseudo_reflection(matrix, field=None):
    """rank(A - I) <= 1, via vanishing of all 2x2 minors of A - I."""
    field = field or matrix[0][0].field
    d = len(matrix)
    m = mat_sub(matrix, identity_matrix(field, d))
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(d):
                for l in range(k + 1, d):
                    if not (m[i][k] * m[j][l] - m[i][l] * m[j][k]).is_zero():
                        return False
    return True


def smallness_violation(kernel):
    """The first nonidentity pseudo-reflection in H, or None when H is small."""
    for i in kernel.h_indices:
        if i == 0:
            continue
        g = kernel.group.elements[i]
        if is_pseudo_reflection(g.matrix):
            return g
    return None


def is_small(kernel):
    return smallness_violation(kernel) is None


def gorenstein_flag(kernel):
    """True iff every element of H has determinant one."""
    field = kernel.group.field
    return all(
        mat_det(field, kernel.group.elements[i].matrix) == field.one
        for i in kernel.class_reps
    )


def isolated_flag(kernel):
    """True iff no nonidentity element of H has eigenvalue one."""
    field = kernel.group.field
    d = kernel.group.d
    ident = identity_matrix(field, d)
    for rep in kernel.class_reps:
        if rep == 0:
            continue
        m = mat_sub(kernel.group.elements[rep].matrix, ident)
        if mat_det(field, m).is_zero():
            return False
    return True
