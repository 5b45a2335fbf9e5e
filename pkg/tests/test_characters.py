import pytest

from mckayq.characters import (
    Character,
    _abelian_character_values,
    _dixon_character_values,
    character_table,
)
from mckayq.errors import NonIntegralMultiplicity, SplitFieldTooSmall
from mckayq.fields import CyclotomicField, GaloisField
from mckayq.groups import GroupElement, generate_group, kernel_and_cosets


def diag(field, *entries):
    d = len(entries)
    return tuple(
        tuple(entries[i] if i == j else field.zero for j in range(d)) for i in range(d)
    )


def make_kernel(gens, galois_gens=None, field=None):
    field = field or gens[0].field
    G = generate_group(gens)
    C = field.galois_subgroup(galois_gens or [])
    return kernel_and_cosets(G, C)


def cyclic_kernel(m, conductor=None):
    F = CyclotomicField(conductor or m)
    z = F.root_of_unity(m) if m > 1 else F.one
    g = GroupElement(diag(F, z, F.inverse(z)), 1)
    return make_kernel([g])


def quaternion_kernel(field=None):
    F = field or CyclotomicField(4)
    i = F.root_of_unity(4)
    a = GroupElement(diag(F, i, F.power(i, 3)), F.aut_identity())
    b = GroupElement(((F.zero, F.one), (-F.one, F.zero)), F.aut_identity())
    return make_kernel([a, b], field=F)


def test_cyclic_five_table():
    K = cyclic_kernel(5)
    T = character_table(K)
    assert len(T) == 5
    assert all(chi.degree() == 1 for chi in T.irreducibles)
    # the five linear characters are alpha -> zeta_5^j
    z = T.field.zeta()
    got = set()
    for chi in T.irreducibles:
        idx = K.class_of[K.group.index[K.group.elements[K.h_indices[0]]]]
        got.add(chi.values[K.class_of[1]] if len(K.classes) > 1 else chi.values[0])
    assert len(got) == 5


def test_quaternion_table_shape():
    K = quaternion_kernel()
    T = character_table(K)
    degrees = sorted(chi.degree() for chi in T.irreducibles)
    assert degrees == [1, 1, 1, 1, 2]
    assert sum(d * d for d in degrees) == 8


def test_trivial_kernel_table():
    F = CyclotomicField(1)
    g = GroupElement(diag(F, F.one, F.one), F.aut_identity())
    K = make_kernel([g])
    T = character_table(K)
    assert len(T) == 1
    assert T.irreducibles[0].degree() == 1


def test_split_field_too_small():
    # C_5 cannot split over Q(zeta_3)
    F = CyclotomicField(3)
    with pytest.raises(ValueError):
        F.root_of_unity(5)
    F15 = CyclotomicField(15)
    z5 = F15.root_of_unity(5)
    g = GroupElement(diag(F15, z5, F15.power(z5, 4)), 1)
    K = make_kernel([g])
    assert character_table(K) is not None
    # now force the failure with a conductor that misses exp(H)
    F6 = CyclotomicField(6)
    m1 = GroupElement(diag(F6, -F6.one, -F6.one), 1)
    K6 = make_kernel([m1])
    assert character_table(K6) is not None  # exp = 2 | 6
    F5 = CyclotomicField(5)
    m2 = GroupElement(diag(F5, -F5.one, -F5.one), 1)
    K5 = make_kernel([m2])
    with pytest.raises(SplitFieldTooSmall) as err:
        character_table(K5)
    assert "10" in str(err.value)


def test_inner_products_and_regular_character():
    K = cyclic_kernel(5)
    T = character_table(K)
    for i, chi in enumerate(T.irreducibles):
        for j, psi in enumerate(T.irreducibles):
            assert T.inner_product(chi, psi) == (1 if i == j else 0)
    reg_values = [T.field.from_int(K.order if r == 0 else 0) for r in range(len(K.classes))]
    reg = Character(K, T.field, reg_values)
    assert [T.inner_product(reg, chi) for chi in T.irreducibles] == [
        chi.degree() for chi in T.irreducibles
    ]
    assert T.decompose(reg) == tuple(chi.degree() for chi in T.irreducibles)


def test_decompose_zero_and_bad_class_function():
    K = cyclic_kernel(5)
    T = character_table(K)
    zero = Character(K, T.field, [T.field.zero] * len(K.classes))
    assert T.decompose(zero) == (0, 0, 0, 0, 0)
    half = Character(K, T.field, [T.field.from_fraction("1/2")] + [T.field.zero] * 4)
    with pytest.raises(NonIntegralMultiplicity):
        T.decompose(half)


def test_standard_and_wedge_characters():
    K = quaternion_kernel()
    T = character_table(K)
    chi_u = T.standard_character()
    assert chi_u.degree() == 2
    # standard module of the quaternion group is its 2-dim irreducible
    assert T.decompose(chi_u)[[c.degree() for c in T.irreducibles].index(2)] == 1
    w0 = T.wedge_power_of_standard(0)
    w2 = T.wedge_power_of_standard(2)
    assert w0.degree() == 1 and w2.degree() == 1
    # determinant character of a subgroup of SL_2 is trivial
    assert all(v == T.field.one for v in w2.values)


def test_wedge_degrees_binomial():
    F = CyclotomicField(4)
    i = F.zeta()
    g = GroupElement(diag(F, i, -F.one, F.inverse(i)), 1)
    K = make_kernel([g])
    T = character_table(K)
    assert [T.wedge_power_of_standard(p).degree() for p in range(4)] == [1, 3, 3, 1]


def test_nongor_wedge_and_tensor_fixtures():
    # H = <diag(zeta_8, zeta_8^3)>, the kernel of the non-Gorenstein example
    F = CyclotomicField(8)
    z = F.zeta()
    g = GroupElement(diag(F, z, z ** 3), 1)
    K = make_kernel([g])
    T = character_table(K)
    # label characters by their value on the generator
    gen_class = K.class_of[K.group.index[g]]
    by_exp = {}
    for idx, chi in enumerate(T.irreducibles):
        val = chi.values[gen_class]
        for e in range(8):
            if val == T.field.zeta_power(e):
                by_exp[e] = idx
    assert len(by_exp) == 8
    chi_u = T.standard_character()
    dec = T.decompose(chi_u)
    assert dec[by_exp[1]] == 1 and dec[by_exp[3]] == 1 and sum(dec) == 2
    w2 = T.wedge_power_of_standard(2)
    dec2 = T.decompose(w2)
    assert dec2[by_exp[4]] == 1 and sum(dec2) == 1
    sq = chi_u * chi_u
    dec3 = T.decompose(sq)
    assert dec3[by_exp[2]] == 1 and dec3[by_exp[6]] == 1 and dec3[by_exp[4]] == 2


def test_galois_twist_typeCL():
    # beta . W_j = W_{-j}
    F = CyclotomicField(5)
    z = F.zeta()
    alpha = GroupElement(diag(F, z, z ** -1), 1)
    beta = GroupElement(((F.zero, F.one), (F.one, F.zero)), 4)
    G = generate_group([alpha, beta])
    K = kernel_and_cosets(G, F.galois_subgroup([4]))
    T = character_table(K)
    rep = K.coset_reps[1]
    perm = T.twist_permutation(rep)
    a_class = K.class_of[G.index[alpha]]
    for i, chi in enumerate(T.irreducibles):
        val = chi.values[a_class]
        twisted = T.irreducibles[perm[i]]
        assert twisted.values[a_class] == T.field.inverse(val)
    # twisting by an element of H is trivial
    h_rep = K.h_indices[1]
    assert T.twist_permutation(h_rep) == list(range(5))


def test_twist_is_permutation_on_quaternion_over_f25():
    Fq = GaloisField(5, 6)
    z24 = Fq.root_of_unity(24)
    i4 = Fq.power(z24, 6)
    sqrt2 = Fq.power(z24, 3) + Fq.power(z24, 21)
    inv_sqrt2 = Fq.inverse(sqrt2)
    alpha = GroupElement(diag(Fq, i4, Fq.power(i4, 3)), 0)
    beta = GroupElement(((Fq.zero, Fq.one), (-Fq.one, Fq.zero)), 0)
    gmat = tuple(
        tuple(inv_sqrt2 * x for x in row)
        for row in ((Fq.power(z24, 7), Fq.power(z24, 7)), (Fq.power(z24, 13), z24))
    )
    gamma = GroupElement(gmat, 2)
    G = generate_group([alpha, beta, gamma])
    K = kernel_and_cosets(G, Fq.galois_subgroup_from_fixed_degree(2))
    T = character_table(K)
    assert sorted(chi.degree() for chi in T.irreducibles) == [1, 1, 1, 1, 2]
    rep = K.coset_reps[1]
    perm = T.twist_permutation(rep)
    assert sorted(perm) == list(range(5))
    # the three nontrivial linear characters form one 3-cycle
    trivial = next(
        i for i, chi in enumerate(T.irreducibles)
        if all(v == T.field.one for v in chi.values)
    )
    assert perm[trivial] == trivial
    two_dim = next(i for i, chi in enumerate(T.irreducibles) if chi.degree() == 2)
    assert perm[two_dim] == two_dim
    moved = [i for i in range(5) if perm[i] != i]
    assert len(moved) == 3


def test_abelian_oracle_dixon_equals_dual_group():
    # C_m for m <= 16 and C_2 x C_4
    for m in list(range(1, 17)):
        K = cyclic_kernel(m, conductor=m if m % 2 else m)
        T = character_table(K)
        dual = {tuple(v.sort_key() for v in row) for row in _abelian_character_values(K, T.field)}
        dixon = {tuple(v.sort_key() for v in row) for row in _dixon_character_values(K, T.field)}
        assert dual == dixon
    F = CyclotomicField(4)
    i = F.zeta()
    a = GroupElement(diag(F, -F.one, F.one), 1)
    b = GroupElement(diag(F, F.one, i), 1)
    K = make_kernel([a, b])
    assert K.order == 8 and K.is_abelian()
    T = character_table(K)
    dual = {tuple(v.sort_key() for v in row) for row in _abelian_character_values(K, T.field)}
    dixon = {tuple(v.sort_key() for v in row) for row in _dixon_character_values(K, T.field)}
    assert dual == dixon


def test_column_orthogonality_samples():
    K = quaternion_kernel()
    T = character_table(K)
    r = len(K.classes)
    for c1 in range(r):
        for c2 in range(r):
            acc = T.field.zero
            for chi in T.irreducibles:
                acc = acc + chi.values[c1] * chi.values[K.inverse_class[c2]]
            if c1 == c2:
                assert acc == T.field.from_int(K.order // K.class_sizes[c1])
            else:
                assert acc == T.field.zero
