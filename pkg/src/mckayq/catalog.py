"""Built-in job catalog: the worked two- and three-dimensional examples and
the ADE family over quadratic ground fields, each with the expected report
fragment used by the selftest and the regression suite.

Entries marked `surrogate=True` model an archimedean extension (C over R) by
a cyclotomic stand-in; their fragments record verified behaviour of the
stand-in, which is checked per entry rather than assumed.
"""

from .errors import UnknownEntry
from .fields import GaloisField


class CatalogEntry:
    __slots__ = ("name", "description", "job", "expected", "surrogate")

    def __init__(self, name, description, job, expected, surrogate=False):
        self.name = name
        self.description = description
        self.job = job
        self.expected = expected
        self.surrogate = surrogate


def _job(kind_section, d, generators):
    return {
        "field": kind_section,
        "group": {"dimension": d, "generators": generators},
    }


def _cyc(n, galois_generators):
    return {
        "kind": "cyclotomic",
        "conductor": n,
        "galois_generators": galois_generators,
    }


def _gen(matrix, aut=1):
    return {"matrix": [list(row) for row in matrix], "aut": aut}


def _expected(group_order, kernel_order, gorenstein, isolated, vertex_count,
              dynkin, class_group):
    return {
        "group_order": group_order,
        "kernel_order": kernel_order,
        "gorenstein": gorenstein,
        "isolated": isolated,
        "vertex_count": vertex_count,
        "dynkin": dynkin,
        "class_group": class_group,
    }


def _type_cl(n):
    m = 2 * n + 1
    job = _job(
        _cyc(m, [m - 1]), 2,
        [
            _gen([["z", "0"], ["0", "z^%d" % (m - 1)]], aut=1),
            _gen([["0", "1"], ["1", "0"]], aut=m - 1),
        ],
    )
    return CatalogEntry(
        "typeCL-n%d" % n,
        "cyclic kernel of order %d over Q(zeta_%d) with its real ground field; "
        "loop quiver" % (m, m),
        job,
        _expected(2 * m, m, True, True, n + 1, ["CLn~", n], []),
    )


def _type_c(n):
    m = 2 * n
    job = _job(
        _cyc(m, [m - 1]), 2,
        [
            _gen([["z", "0"], ["0", "z^%d" % (m - 1)]], aut=1),
            _gen([["0", "1"], ["1", "0"]], aut=m - 1),
        ],
    )
    return CatalogEntry(
        "typeC-n%d" % n,
        "cyclic kernel of order %d over Q(zeta_%d) with its real ground field"
        % (m, m),
        job,
        _expected(4 * n, m, True, True, n + 1, ["Cn~", n], [2]),
    )


def _type_bc(n):
    if n == 1:
        job = _job(
            _cyc(4, [3]), 2,
            [
                _gen([["-1", "0"], ["0", "-1"]], aut=1),
                _gen([["0", "-1"], ["1", "0"]], aut=3),
            ],
        )
        return CatalogEntry(
            "typeBC-n1",
            "order-4 semilinear group over Q(i)/Q; the norm obstruction doubles "
            "the far vertex",
            job,
            _expected(4, 2, True, True, 2, ["A11~", None], []),
        )
    if n == 2:
        job = _job(
            _cyc(4, [3]), 2,
            [
                _gen([["z", "0"], ["0", "z^3"]], aut=1),
                _gen([["0", "z"], ["1", "0"]], aut=3),
            ],
        )
        return CatalogEntry(
            "typeBC-n2",
            "order-8 semilinear group over Q(i)/Q",
            job,
            _expected(8, 4, True, True, 3, ["BCn~", 2], []),
        )
    assert n == 3
    job = _job(
        _cyc(6, [5]), 2,
        [
            _gen([["z", "0"], ["0", "z^5"]], aut=1),
            _gen([["0", "-1"], ["1", "0"]], aut=5),
        ],
    )
    return CatalogEntry(
        "typeBC-n3",
        "order-12 semilinear group over Q(zeta_6)/Q",
        job,
        _expected(12, 6, True, True, 4, ["BCn~", 3], []),
    )


def _type_bd(n):
    m = 4 * n
    job = _job(
        _cyc(m, [2 * n - 1]), 2,
        [
            _gen([["0", "1"], ["-1", "0"]], aut=1),
            _gen([["0", "-z^3"], ["z", "0"]], aut=2 * n - 1),
        ],
    )
    return CatalogEntry(
        "typeBD-n%d" % n,
        "binary dihedral kernel of order %d over Q(zeta_%d), sigma(z) = -1/z"
        % (m, m),
        job,
        _expected(2 * m, m, True, True, n + 2, ["BDn~", n + 1], [2]),
    )


def _type_g22_finite():
    field = GaloisField(5, 6)
    z = field.root_of_unity(24)
    i4 = field.power(z, 6)
    inv_sqrt2 = field.inverse(field.power(z, 3) + field.power(z, 21))

    def render(x):
        return field.render(x)

    gamma_rows = [
        [render(inv_sqrt2 * field.power(z, 7)), render(inv_sqrt2 * field.power(z, 7))],
        [render(inv_sqrt2 * field.power(z, 13)), render(inv_sqrt2 * z)],
    ]
    job = _job(
        {"kind": "finite", "p": 5, "m": 6, "fixed_degree": 2}, 2,
        [
            {"matrix": [[render(i4), "0"], ["0", render(field.power(i4, 3))]], "aut": 0},
            {"matrix": [["0", "1"], ["-1", "0"]], "aut": 0},
            {"matrix": gamma_rows, "aut": 2},
        ],
    )
    return CatalogEntry(
        "typeG22",
        "quaternion kernel over F_{5^6}/F_{25}; non-abelian path and finite "
        "field arithmetic",
        job,
        _expected(24, 8, True, True, 3, ["G22~", None], []),
    )


def _type_g22_cyclotomic():
    # zeta_24 = z^3 inside Q(zeta_72); 1/sqrt(2) = (z^9 + z^63)/2
    s = "1/2*(z^9 + z^63)"
    job = _job(
        _cyc(72, [25]), 2,
        [
            _gen([["z^18", "0"], ["0", "z^54"]], aut=1),
            _gen([["0", "1"], ["-1", "0"]], aut=1),
            _gen(
                [
                    ["%s*z^21" % s, "%s*z^21" % s],
                    ["%s*z^39" % s, "%s*z^3" % s],
                ],
                aut=25,
            ),
        ],
    )
    return CatalogEntry(
        "typeG22-cyc",
        "quaternion kernel over Q(zeta_72)/Q(zeta_24), the number-field twin "
        "of typeG22",
        job,
        _expected(24, 8, True, True, 3, ["G22~", None], []),
    )


def _nongor():
    job = _job(
        _cyc(8, [3, 5]), 2,
        [
            _gen([["0", "z"], ["1", "0"]], aut=3),
            _gen([["0", "z^7"], ["z", "0"]], aut=5),
        ],
    )
    return CatalogEntry(
        "nongor",
        "order-32 semilinear group over Q(zeta_8)/Q with non-Gorenstein "
        "invariant ring",
        job,
        _expected(32, 8, False, True, 5, None, [2]),
    )


def _d3_gor():
    job = _job(
        _cyc(7, [2]), 3,
        [
            _gen([["z", "0", "0"], ["0", "z^2", "0"], ["0", "0", "z^4"]], aut=1),
            _gen([["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]], aut=2),
        ],
    )
    return CatalogEntry(
        "d3-gor-n2",
        "dimension-3 Gorenstein isolated example over Q(zeta_7) with cubic "
        "ground field",
        job,
        _expected(21, 7, True, True, 3, None, []),
    )


def _d3_nonisolated(n):
    m = 2 * n
    job = _job(
        _cyc(m, [m - 1]), 3,
        [
            _gen(
                [["z", "0", "0"], ["0", "-1", "0"], ["0", "0", "z^%d" % (m - 1)]],
                aut=1,
            ),
            _gen([["0", "0", "1"], ["0", "1", "0"], ["1", "0", "0"]], aut=m - 1),
        ],
    )
    return CatalogEntry(
        "d3-nonisolated-n%d" % n,
        "dimension-3 non-Gorenstein non-isolated example over Q(zeta_%d)" % m,
        job,
        _expected(4 * n, m, False, False, n + 1, None, [2]),
    )


def _ade_a(n):
    if n == 0:
        job = _job(_cyc(1, []), 2, [_gen([["1", "0"], ["0", "1"]], aut=1)])
        return CatalogEntry(
            "ade-A0",
            "trivial group: the regular ring with its loop quiver",
            job,
            _expected(1, 1, True, True, 1, ["A0~", None], []),
        )
    conductor = {1: 4, 2: 3, 3: 4, 4: 5}[n]
    conj = conductor - 1
    m = n + 1
    power = conductor // m
    job = _job(
        _cyc(conductor, [conj]), 2,
        [
            _gen(
                [["z^%d" % power, "0"], ["0", "z^%d" % (conductor - power)]], aut=1
            ),
            _gen([["1", "0"], ["0", "1"]], aut=conj),
        ],
    )
    dynkin = ["A12~", None] if n == 1 else ["An~", n]
    return CatalogEntry(
        "ade-A%d" % n,
        "cyclic kernel of order %d with complex conjugation adjoined" % m,
        job,
        _expected(2 * m, m, True, True, n + 1, dynkin, [m]),
        surrogate=True,
    )


def _ade_d(n, split):
    assert n in (4, 5)
    conductor = 4 if n == 4 else 12
    q = 2 * (n - 2)
    zq = conductor // q
    gens = [
        _gen(
            [["z^%d" % zq, "0"], ["0", "z^%d" % (conductor - zq)]], aut=1
        ),
        _gen(
            [["0", "z^%d" % (conductor // 4)], ["z^%d" % (conductor // 4), "0"]],
            aut=1,
        ),
    ]
    galois = []
    order = 4 * (n - 2)
    gorder = order
    if not split:
        conj = conductor - 1
        gens.append(_gen([["1", "0"], ["0", "1"]], aut=conj))
        galois = [conj]
        gorder = 2 * order
    name = "ade-D%d" % n + ("-split" if split else "")
    vertex_count = n + 1
    cl = [2, 2] if n % 2 == 0 else [4]
    return CatalogEntry(
        name,
        "binary dihedral kernel of order %d%s" % (
            order, "" if split else " with complex conjugation adjoined"
        ),
        _job(_cyc(conductor, galois), 2, gens),
        _expected(gorder, order, True, True, vertex_count, ["Dn~", n], cl),
        surrogate=not split,
    )


_E6_GENS = [
    _gen([["z^6", "0"], ["0", "z^18"]], aut=1),
    _gen([["0", "z^6"], ["z^6", "0"]], aut=1),
    _gen(
        [
            ["1/2*(z^3 + z^21)*z^3", "1/2*(z^3 + z^21)*z^9"],
            ["1/2*(z^3 + z^21)*z^3", "1/2*(z^3 + z^21)*z^21"],
        ],
        aut=1,
    ),
]


def _ade_e6(split):
    gens = [dict(g) for g in _E6_GENS]
    if split:
        return CatalogEntry(
            "ade-E6-split",
            "binary tetrahedral group over Q(zeta_24)",
            _job(_cyc(24, []), 2, gens),
            _expected(24, 24, True, True, 7, ["E6~", None], [3]),
        )
    gens.append(_gen([["1", "0"], ["0", "1"]], aut=23))
    return CatalogEntry(
        "ade-E6",
        "binary tetrahedral kernel with complex conjugation adjoined; the "
        "two short branches fold",
        _job(_cyc(24, [23]), 2, gens),
        _expected(48, 24, True, True, 5, ["F42~", None], []),
        surrogate=True,
    )


def _ade_e7():
    gens = [dict(g) for g in _E6_GENS]
    gens.append(_gen([["z^9", "0"], ["0", "z^15"]], aut=1))
    gens.append(_gen([["1", "0"], ["0", "1"]], aut=23))
    return CatalogEntry(
        "ade-E7",
        "binary octahedral kernel with complex conjugation adjoined",
        _job(_cyc(24, [23]), 2, gens),
        _expected(96, 48, True, True, 8, ["E7~", None], [2]),
        surrogate=True,
    )


def _ade_e8():
    s5 = "1/5*(2*z^12 + 2*z^48 + 1)"
    g1 = _gen(
        [
            ["%s*(z^48 - z^12)" % s5, "%s*(z^24 - z^36)" % s5],
            ["%s*(z^24 - z^36)" % s5, "%s*(z^12 - z^48)" % s5],
        ],
        aut=1,
    )
    g2 = _gen(
        [
            ["%s*(z^24 - z^48)" % s5, "%s*(z^48 - 1)" % s5],
            ["%s*(1 - z^12)" % s5, "%s*(z^36 - z^12)" % s5],
        ],
        aut=1,
    )
    g3 = _gen([["1", "0"], ["0", "1"]], aut=59)
    return CatalogEntry(
        "ade-E8",
        "binary icosahedral kernel over Q(zeta_60) with complex conjugation "
        "adjoined",
        _job(_cyc(60, [59]), 2, [g1, g2, g3]),
        _expected(240, 120, True, True, 9, ["E8~", None], []),
        surrogate=True,
    )


def _build_catalog():
    entries = []
    for n in (1, 2, 3, 4):
        entries.append(_type_cl(n))
    for n in (2, 3, 4):
        entries.append(_type_c(n))
    for n in (1, 2, 3):
        entries.append(_type_bc(n))
    for n in (2, 3):
        entries.append(_type_bd(n))
    entries.append(_type_g22_finite())
    entries.append(_type_g22_cyclotomic())
    entries.append(_nongor())
    entries.append(_d3_gor())
    entries.append(_d3_nonisolated(2))
    entries.append(_d3_nonisolated(3))
    for n in (0, 1, 2, 3, 4):
        entries.append(_ade_a(n))
    entries.append(_ade_d(4, split=False))
    entries.append(_ade_d(5, split=True))
    entries.append(_ade_e6(split=True))
    entries.append(_ade_e6(split=False))
    entries.append(_ade_e7())
    entries.append(_ade_e8())
    return {e.name: e for e in entries}


_CATALOG = None


def catalog():
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    return _CATALOG


def names():
    return sorted(catalog())


def get(name):
    got = catalog().get(name)
    if got is None:
        raise UnknownEntry("no catalog entry named %r" % name)
    return got
