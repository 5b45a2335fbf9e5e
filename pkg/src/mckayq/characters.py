"""Split character theory of the kernel subgroup H over l.

Character values are carried in the characteristic-zero cyclotomic field
Q(zeta_E), E = exp(H), and embedded into l through the fixed choice
zeta_E = zeta_n^(n/E) (resp. a power of the canonical primitive element in
the finite case).  This keeps multiplicity arithmetic exact in every
characteristic; every value computed from matrices over l is cross-checked
against its embedded counterpart.
"""

from fractions import Fraction
from itertools import combinations, product

from .errors import NonIntegralMultiplicity, SplitFieldTooSmall
from .fields import CyclotomicField
from .groups import mat_det, mat_kernel_dim, mat_sub
from .intlinalg import smith_normal_form


class Character:
    """Class function on H with values in Q(zeta_exp(H))."""

    __slots__ = ("kernel", "field", "values")

    def __init__(self, kernel, field, values):
        self.kernel = kernel
        self.field = field
        self.values = tuple(values)

    @property
    def degree_value(self):
        return self.values[0]

    def degree(self):
        q = self.values[0].rational_value()
        assert q.denominator == 1
        return int(q)

    def __mul__(self, other):
        assert other.kernel is self.kernel
        return Character(
            self.kernel, self.field, tuple(a * b for a, b in zip(self.values, other.values))
        )

    def __add__(self, other):
        assert other.kernel is self.kernel
        return Character(
            self.kernel, self.field, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def scale(self, k):
        return Character(self.kernel, self.field, tuple(v * k for v in self.values))

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.kernel is other.kernel and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def sort_key(self):
        return tuple(v.sort_key() for v in self.values)

    def __repr__(self):
        return "Character(%s)" % (", ".join(self.field.render(v) for v in self.values))


class CharacterTable:
    """All irreducible characters of H over l in a canonical order, plus the
    eigenvalue data of the standard d-dimensional module."""

    def __init__(self, kernel, value_field, irreducibles):
        self.kernel = kernel
        self.field = value_field
        self.exponent = kernel.exponent()
        self.irreducibles = irreducibles
        self._index = {chi.values: i for i, chi in enumerate(irreducibles)}
        self._standard_eigs = None
        self._verify()

    def __len__(self):
        return len(self.irreducibles)

    def _verify(self):
        K = self.kernel
        assert len(self.irreducibles) == len(K.classes)
        total = sum(chi.degree() ** 2 for chi in self.irreducibles)
        if total != K.order:
            raise SplitFieldTooSmall(
                "character degrees do not satisfy the split condition"
            )
        for i, chi in enumerate(self.irreducibles):
            for j, psi in enumerate(self.irreducibles):
                expected = 1 if i == j else 0
                if self.inner_product(chi, psi) != expected:
                    raise AssertionError("row orthogonality failed")

    # -- multiplicities ----------------------------------------------------

    def inner_value(self, chi, psi):
        K = self.kernel
        field = self.field
        acc = field.zero
        for i, size in enumerate(K.class_sizes):
            acc = acc + chi.values[i] * psi.values[K.inverse_class[i]] * size
        return acc * Fraction(1, K.order)

    def inner_product(self, chi, psi):
        val = self.inner_value(chi, psi)
        if not val.is_rational():
            raise NonIntegralMultiplicity("inner product is irrational: %r" % val)
        q = val.rational_value()
        if q.denominator != 1 or q < 0:
            raise NonIntegralMultiplicity("inner product %s is not a nonnegative integer" % q)
        return int(q)

    def decompose(self, chi):
        mults = tuple(self.inner_product(chi, irr) for irr in self.irreducibles)
        recon = None
        for m, irr in zip(mults, self.irreducibles):
            if m:
                part = irr.scale(m)
                recon = part if recon is None else recon + part
        if recon is None:
            recon = Character(
                self.kernel, self.field, tuple(self.field.zero for _ in chi.values)
            )
        if recon.values != chi.values:
            raise NonIntegralMultiplicity("class function is not a genuine character")
        return mults

    def index_of(self, chi):
        got = self._index.get(chi.values)
        if got is None:
            raise KeyError("not an irreducible character of this table")
        return got

    # -- the standard module and its exterior powers ------------------------

    def standard_eigenvalue_exponents(self):
        """Per class, the exponents e with eigenvalue multiset
        {zeta_E^e} of the class representative acting on the standard module."""
        if self._standard_eigs is not None:
            return self._standard_eigs
        K = self.kernel
        group = K.group
        lfield = group.field
        E = self.exponent
        out = []
        for rep in K.class_reps:
            mat = group.elements[rep].matrix
            o = group.element_order(rep)
            root = lfield.root_of_unity(o) if o > 1 else lfield.one
            exps = []
            eig = lfield.one
            for j in range(o):
                mult = mat_kernel_dim(lfield, mat_sub(mat, _scalar(lfield, eig, group.d)))
                exps.extend([j * (E // o) % max(E, 1)] * mult)
                eig = eig * root
            assert len(exps) == group.d, "matrix of finite order must be diagonalizable"
            out.append(tuple(sorted(exps)))
        self._standard_eigs = out
        # cross-check: embedded sum of eigenvalues equals the matrix trace
        for rep, exps in zip(K.class_reps, out):
            mat = group.elements[rep].matrix
            tr = mat[0][0]
            for i in range(1, group.d):
                tr = tr + mat[i][i]
            val = self.field.zero
            for e in exps:
                val = val + _zeta_power(self.field, e)
            assert self.embed_value(val) == tr
        return out

    def standard_character(self):
        eigs = self.standard_eigenvalue_exponents()
        values = []
        for exps in eigs:
            v = self.field.zero
            for e in exps:
                v = v + _zeta_power(self.field, e)
            values.append(v)
        return Character(self.kernel, self.field, values)

    def wedge_power_of_standard(self, p):
        """Character of the p-th exterior power of the standard module.

        Values come from the eigenvalue multisets; each is asserted equal to
        the trace of the explicit p-th compound matrix (the sum of principal
        p x p minors) of the class representative.
        """
        K = self.kernel
        group = K.group
        d = group.d
        if not 0 <= p <= d:
            raise ValueError("exterior power out of range")
        eigs = self.standard_eigenvalue_exponents()
        E = max(self.exponent, 1)
        values = []
        for ci, exps in enumerate(eigs):
            v = self.field.zero
            for comb in combinations(range(d), p):
                e = sum(exps[i] for i in comb) % E
                v = v + _zeta_power(self.field, e)
            mat = group.elements[K.class_reps[ci]].matrix
            assert self.embed_value(v) == _compound_trace(group.field, mat, p)
            values.append(v)
        return Character(self.kernel, self.field, values)

    # -- Galois twisting -----------------------------------------------------

    def galois_twist(self, chi, g_index):
        """(g . chi)(h) = sigma_aut(g)(chi(g^-1 h g)) for g a coset
        representative; irreducibles are permuted."""
        K = self.kernel
        group = K.group
        lfield = group.field
        g_inv = group.inv(g_index)
        aut = group.elements[g_index].aut
        E = max(self.exponent, 1)
        u = lfield.aut_multiplier(aut, E) if E > 1 else 0
        values = [None] * len(K.classes)
        for i, rep in enumerate(K.class_reps):
            conj = group.mul(group.mul(g_inv, rep), g_index)
            j = K.class_of[conj]
            val = chi.values[j]
            if E > 1:
                val = self.field.apply_aut(u, val)
            values[i] = val
        return Character(K, self.field, values)

    def twist_permutation(self, g_index):
        perm = []
        for chi in self.irreducibles:
            perm.append(self.index_of(self.galois_twist(chi, g_index)))
        assert sorted(perm) == list(range(len(perm)))
        return perm

    # -- embedding into l ----------------------------------------------------

    def embed_value(self, x):
        lfield = self.kernel.group.field
        E = max(self.exponent, 1)
        root = lfield.root_of_unity(E) if E > 1 else lfield.one
        coeffs = [Fraction(c, x.den) for c in x.nums]
        acc = lfield.zero
        for c in reversed(coeffs):
            acc = acc * root + lfield.from_fraction(c)
        return acc


def _scalar(field, x, d):
    return tuple(
        tuple(x if i == j else field.zero for j in range(d)) for i in range(d)
    )


def _zeta_power(field, e):
    if field.n == 1:
        return field.one
    return field.zeta_power(e % field.n)


def _compound_trace(field, mat, p):
    """Trace of the p-th compound matrix: the sum of principal p x p minors."""
    if p == 0:
        return field.one
    d = len(mat)
    acc = field.zero
    for rows in combinations(range(d), p):
        sub = tuple(tuple(mat[i][j] for j in rows) for i in rows)
        acc = acc + mat_det(field, sub)
    return acc


# -- table construction -------------------------------------------------------


def character_table(kernel):
    """Complete irreducible character table of H over l, abelian groups via
    the dual-group lattice, the rest via Burnside-Dixon."""
    E = kernel.exponent()
    lfield = kernel.group.field
    if lfield.kind == "cyclotomic":
        if E > 1 and lfield.n % E != 0:
            need = lfield.n * E // _gcd(lfield.n, E)
            raise SplitFieldTooSmall(
                "exp(H) = %d does not divide the conductor %d; "
                "the smallest splitting enlargement is conductor %d"
                % (E, lfield.n, need)
            )
    else:
        if E > 1 and (lfield.order - 1) % E != 0:
            target = _multiplicative_order(lfield.p, E)
            need = lfield.m * target // _gcd(lfield.m, target)
            raise SplitFieldTooSmall(
                "exp(H) = %d does not divide p^m - 1 = %d; "
                "the smallest splitting enlargement is degree m = %d"
                % (E, lfield.order - 1, need)
            )
    value_field = CyclotomicField(max(E, 1))
    if kernel.is_abelian():
        rows = _abelian_character_values(kernel, value_field)
    else:
        rows = _dixon_character_values(kernel, value_field)
    chars = [Character(kernel, value_field, row) for row in rows]
    chars.sort(key=lambda c: (c.degree(), c.sort_key()))
    return CharacterTable(kernel, value_field, chars)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _multiplicative_order(p, e):
    k = 1
    acc = p % e
    while acc != 1:
        acc = acc * p % e
        k += 1
    return k


def _abelian_character_values(kernel, value_field):
    """Dual group of an abelian H through integer row reduction of the
    relation lattice of a generating set."""
    E = max(kernel.exponent(), 1)
    group = kernel.group
    gens = kernel.h_generators
    r = len(gens)
    if r == 0:
        return [(value_field.one,)]
    # exponent vectors of every element of H
    vec = {0: tuple([0] * r)}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            vx = vec[x]
            for i, g in enumerate(gens):
                y = group.mul(x, g)
                if y not in vec:
                    w = list(vx)
                    w[i] += 1
                    vec[y] = tuple(w)
                    nxt.append(y)
        frontier = nxt
    assert len(vec) == kernel.order
    relations = []
    for i, g in enumerate(gens):
        row = [0] * r
        row[i] = group.element_order(g)
        relations.append(row)
    for x, vx in vec.items():
        for i, g in enumerate(gens):
            y = group.mul(x, g)
            w = list(vx)
            w[i] += 1
            diff = [a - b for a, b in zip(w, vec[y])]
            if any(diff):
                relations.append(diff)
    d, _, v = smith_normal_form(relations)
    diag = [d[i][i] for i in range(r)]
    assert all(diag) and _prod(diag) == kernel.order
    rows = []
    for combo in product(*[range(q) for q in diag]):
        # exponent of zeta_E on generator i
        gen_exp = [
            sum(v[i][j] * combo[j] * (E // diag[j]) for j in range(r)) % E
            for i in range(r)
        ]
        values = []
        for rep in kernel.class_reps:
            vx = vec[rep]
            e = sum(vx[i] * gen_exp[i] for i in range(r)) % E
            values.append(_zeta_power(value_field, e))
        rows.append(tuple(values))
    assert len(set(rows)) == kernel.order
    return rows


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


# -- Burnside-Dixon over a prime field ----------------------------------------


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _dixon_prime(order, exponent):
    """Least prime q = 1 mod exp(H) with q > 2|H|."""
    q = max(2 * order + 1, exponent + 1)
    q += (1 - q) % exponent
    while not _is_prime(q):
        q += exponent
    assert q % exponent == 1 % exponent and q > 2 * order
    return q


def _primitive_root(q):
    factors = []
    n = q - 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    for w in range(2, q):
        if all(pow(w, (q - 1) // f, q) != 1 for f in factors):
            return w
    raise AssertionError("no primitive root found")


def _mat_vec_mod(m, v, q):
    return [sum(m[i][j] * v[j] for j in range(len(v))) % q for i in range(len(m))]


def _solve_mod(a_cols, b, q):
    """Solve A x = b mod q where A is given by columns; returns x or None."""
    rows = len(b)
    cols = len(a_cols)
    aug = [[a_cols[j][i] % q for j in range(cols)] + [b[i] % q] for i in range(rows)]
    piv_cols = []
    rank = 0
    for col in range(cols):
        piv = next((i for i in range(rank, rows) if aug[i][col] % q), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = pow(aug[rank][col], -1, q)
        aug[rank] = [x * inv % q for x in aug[rank]]
        for i in range(rows):
            if i != rank and aug[i][col]:
                c = aug[i][col]
                aug[i] = [(x - c * y) % q for x, y in zip(aug[i], aug[rank])]
        piv_cols.append(col)
        rank += 1
    for i in range(rank, rows):
        if aug[i][cols] % q:
            return None
    x = [0] * cols
    for i, col in enumerate(piv_cols):
        x[col] = aug[i][cols]
    return x


def _kernel_basis_mod(m, q):
    rows = len(m)
    cols = len(m[0])
    a = [[x % q for x in row] for row in m]
    piv_cols = []
    rank = 0
    for col in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, q)
        a[rank] = [x * inv % q for x in a[rank]]
        for i in range(rows):
            if i != rank and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % q for x, y in zip(a[i], a[rank])]
        piv_cols.append(col)
        rank += 1
    basis = []
    free = [c for c in range(cols) if c not in piv_cols]
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for i, pc in enumerate(piv_cols):
            v[pc] = (-a[i][fc]) % q
        basis.append(v)
    return basis


def _dixon_character_values(kernel, value_field):
    group = kernel.group
    r = len(kernel.classes)
    E = kernel.exponent()
    n_h = kernel.order
    q = _dixon_prime(n_h, E)
    theta = pow(_primitive_root(q), (q - 1) // E, q)
    # class multiplication matrices: (M_i)_{k j} = a_{ijk}
    mats = []
    for i in range(r):
        m = [[0] * r for _ in range(r)]
        for x in kernel.classes[i]:
            xinv = group.inv(x)
            for k, zk in enumerate(kernel.class_reps):
                y = group.mul(xinv, zk)
                m[k][kernel.class_of[y]] += 1
        mats.append([[c % q for c in row] for row in m])
    # simultaneous eigenspaces over F_q
    subspaces = [[_unit(r, i) for i in range(r)]]
    for m in mats:
        refined = []
        for basis in subspaces:
            if len(basis) == 1:
                refined.append(basis)
                continue
            images = [_mat_vec_mod(m, b, q) for b in basis]
            # restriction matrix A with images = basis * A (columns)
            a_cols = []
            for img in images:
                sol = _solve_mod([list(b) for b in basis], img, q)
                assert sol is not None, "subspace is not invariant"
                a_cols.append(sol)
            a = [[a_cols[j][i] for j in range(len(basis))] for i in range(len(basis))]
            for lam in range(q):
                shifted = [
                    [(a[i][j] - (lam if i == j else 0)) % q for j in range(len(basis))]
                    for i in range(len(basis))
                ]
                kern = _kernel_basis_mod(shifted, q)
                if not kern:
                    continue
                newbasis = []
                for coeffs in kern:
                    vecv = [0] * r
                    for cidx, c in enumerate(coeffs):
                        if c:
                            for t in range(r):
                                vecv[t] = (vecv[t] + c * basis[cidx][t]) % q
                    newbasis.append(vecv)
                refined.append(newbasis)
        assert sum(len(b) for b in refined) == r
        subspaces = refined
        if all(len(b) == 1 for b in subspaces):
            break
    assert all(len(b) == 1 for b in subspaces), "class algebra did not split"
    hinv = pow(n_h % q, -1, q)
    size_inv = [pow(s, -1, q) for s in kernel.class_sizes]
    rows = []
    for basis in subspaces:
        v = basis[0]
        omegas = []
        j0 = next(j for j in range(r) if v[j])
        vj0inv = pow(v[j0], -1, q)
        for m in mats:
            img = _mat_vec_mod(m, v, q)
            omegas.append(img[j0] * vj0inv % q)
        t_val = 0
        for i in range(r):
            t_val = (t_val + omegas[i] * omegas[kernel.inverse_class[i]] * size_inv[i]) % q
        deg_sq = n_h % q * pow(t_val, -1, q) % q
        deg = next(x for x in range(1, q) if x * x % q == deg_sq)
        deg = min(deg, q - deg)
        tilde = [deg * omegas[i] % q * size_inv[i] % q for i in range(r)]
        # lift through the power maps: chi(c) = sum_j m_j zeta_E^j with
        # m_j = (1/E) sum_k chi~(c^k) theta^(-jk)
        values = []
        e_inv = pow(E, -1, q)
        theta_inv = pow(theta, -1, q)
        for rep in kernel.class_reps:
            powers = []
            cur = 0  # identity index
            for _ in range(E):
                powers.append(kernel.class_of[cur])
                cur = group.mul(cur, rep)
            val = value_field.zero
            for j in range(E):
                acc = 0
                tpow = 1
                tstep = pow(theta_inv, j, q)
                for k in range(E):
                    acc = (acc + tilde[powers[k]] * tpow) % q
                    tpow = tpow * tstep % q
                m_j = acc * e_inv % q
                assert m_j <= deg, "character lift out of range"
                if m_j:
                    val = val + value_field.from_int(m_j) * _zeta_power(value_field, j)
            values.append(val)
        rows.append(tuple(values))
    return rows


def _unit(r, i):
    v = [0] * r
    v[i] = 1
    return v
