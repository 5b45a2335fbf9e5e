"""Integer matrix normal forms and finite abelian group structure.

Small exact routines used for character lattices and divisor class groups:
Smith normal form with unimodular transforms, and invariant factors of an
abelian group presented by a multiplication table.
"""


def smith_normal_form(mat):
    """Return (diag, U, V) with U*mat*V = diag(d_1..d_k), d_i | d_{i+1}.

    `mat` is a list of rows of integers; U and V are unimodular.  The diagonal
    entries are nonnegative and returned as a full matrix of the same shape.
    """
    a = [list(row) for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, c):
        for k in range(cols):
            a[dst][k] += c * a[src][k]
        for k in range(rows):
            u[dst][k] += c * u[src][k]

    def add_col(src, dst, c):
        for r in a:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    t = 0
    while t < min(rows, cols):
        # find a nonzero pivot of least absolute value
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
        # make the pivot divide the rest of the block
        p = a[t][t]
        fixed = False
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % p:
                    add_row(i, t, 1)
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        if a[t][t] < 0:
            for k in range(cols):
                a[t][k] = -a[t][k]
            for k in range(rows):
                u[t][k] = -u[t][k]
        t += 1
    return a, u, v


def invariant_factors(mat):
    """Nontrivial invariant factors (the d_i > 1, plus any zero factors)."""
    d, _, _ = smith_normal_form(mat)
    out = []
    for i in range(min(len(d), len(d[0]) if d else 0)):
        if d[i][i] != 1:
            out.append(d[i][i])
    return out


def abelian_structure(elements, mul, identity):
    """Structure of a finite abelian group given by a multiplication table.

    `elements` is a sequence of hashable values, `mul(x, y)` the product and
    `identity` the unit.  Returns (invariants, exponents) where invariants is
    the list of invariant factors > 1 in dividing order and exponents maps
    each element to its coordinate tuple in the corresponding product of
    cyclic groups.
    """
    elements = list(elements)
    n = len(elements)
    if n == 1:
        return [], {identity: ()}
    # greedy generating set
    gens = []
    generated = {identity}
    for x in elements:
        if x in generated:
            continue
        gens.append(x)
        frontier = list(generated)
        new = set(generated)
        while frontier:
            nxt = []
            for y in frontier:
                z = mul(y, x)
                while z not in new:
                    new.add(z)
                    nxt.append(z)
                    z = mul(z, x)
            frontier = nxt
        generated = new
        if len(generated) == n:
            break
    assert len(generated) == n, "multiplication table is not closed"
    r = len(gens)
    # exponent vector of every element via breadth-first search
    vec = {identity: tuple([0] * r)}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            vx = vec[x]
            for i, g in enumerate(gens):
                y = mul(x, g)
                if y not in vec:
                    w = list(vx)
                    w[i] += 1
                    vec[y] = tuple(w)
                    nxt.append(y)
        frontier = nxt
    # relation lattice: order relations plus consistency relations
    relations = []
    orders = []
    for i, g in enumerate(gens):
        k = 1
        y = g
        while y != identity:
            y = mul(y, g)
            k += 1
        orders.append(k)
        row = [0] * r
        row[i] = k
        relations.append(row)
    for x in elements:
        vx = vec[x]
        for i, g in enumerate(gens):
            y = mul(x, g)
            w = list(vx)
            w[i] += 1
            diff = [a - b for a, b in zip(w, vec[y])]
            if any(diff):
                relations.append(diff)
    d, _, v = smith_normal_form(relations)
    diag = [d[i][i] for i in range(r)]
    assert all(diag), "relation lattice must have full rank for a finite group"
    prod = 1
    for q in diag:
        prod *= q
    assert prod == n
    # coordinates: y = V^{-1} exponent-vector gives coords in prod Z/d_i;
    # as V is unimodular, solve V * z = e_i columns over Z via inverse
    vinv = _unimodular_inverse(v)
    coords = {}
    for x, vx in vec.items():
        z = [sum(vinv[i][j] * vx[j] for j in range(r)) % diag[i] for i in range(r)]
        coords[x] = tuple(z[i] for i in range(r) if diag[i] > 1)
    invariants = [q for q in diag if q > 1]
    return invariants, coords


def _unimodular_inverse(v):
    n = len(v)
    aug = [list(v[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    # integer Gauss-Jordan; valid because det = +-1
    for col in range(n):
        piv = None
        for i in range(col, n):
            if abs(aug[i][col]) == 1:
                piv = i
                break
        if piv is None:
            # create a unit pivot with the euclidean algorithm on the column
            for i in range(col, n):
                if aug[i][col]:
                    piv = i
                    break
            for i in range(col, n):
                if i != piv and aug[i][col]:
                    while aug[i][col]:
                        q = aug[piv][col] // aug[i][col]
                        for k in range(2 * n):
                            aug[piv][k] -= q * aug[i][k]
                        piv, i = i, piv
            if abs(aug[piv][col]) != 1:
                raise ArithmeticError("matrix is not unimodular")
        aug[col], aug[piv] = aug[piv], aug[col]
        if aug[col][col] == -1:
            aug[col] = [-c for c in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                q = aug[i][col]
                for k in range(2 * n):
                    aug[i][k] -= q * aug[col][k]
    return [row[n:] for row in aug]
