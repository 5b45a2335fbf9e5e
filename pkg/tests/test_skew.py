import pytest

from mckayq.characters import character_table
from mckayq.errors import NonDivisible
from mckayq.fields import CyclotomicField, GaloisField
from mckayq.groups import GroupElement, generate_group, kernel_and_cosets
from mckayq.skew import (
    SolverTrace,
    class_group,
    compute_orbits,
    gmodule_multiplicities,
    orbit_coefficients,
    solve_multiplicities,
    trivial_orbit_index,
    verify_res_ind,
)


def diag(field, *entries):
    d = len(entries)
    return tuple(
        tuple(entries[i] if i == j else field.zero for j in range(d)) for i in range(d)
    )


def build(gens, galois_gens, field):
    G = generate_group(gens)
    K = kernel_and_cosets(G, field.galois_subgroup(galois_gens))
    T = character_table(K)
    orbits = compute_orbits(T, K)
    return K, T, orbits


def typeC(n):
    F = CyclotomicField(2 * n)
    z = F.zeta()
    alpha = GroupElement(diag(F, z, z ** -1), 1)
    beta = GroupElement(((F.zero, F.one), (F.one, F.zero)), 2 * n - 1)
    return build([alpha, beta], [2 * n - 1], F)


def typeCL(n):
    F = CyclotomicField(2 * n + 1)
    z = F.zeta()
    alpha = GroupElement(diag(F, z, z ** -1), 1)
    beta = GroupElement(((F.zero, F.one), (F.one, F.zero)), 2 * n)
    return build([alpha, beta], [2 * n], F)


def typeBC1():
    F = CyclotomicField(4)
    alpha = GroupElement(diag(F, -F.one, -F.one), 1)
    beta = GroupElement(((F.zero, -F.one), (F.one, F.zero)), 3)
    return build([alpha, beta], [3], F)


def nongor():
    F = CyclotomicField(8)
    z = F.zeta()
    alpha = GroupElement(((F.zero, z), (F.one, F.zero)), 3)
    beta = GroupElement(((F.zero, z ** 7), (z, F.zero)), 5)
    return build([alpha, beta], [3, 5], F)


def test_orbits_typeC_n2():
    K, T, orbits = typeC(2)
    sizes = sorted(o.t for o in orbits)
    assert sizes == [1, 1, 2]
    assert sum(o.t for o in orbits) == 4


def test_orbits_nongor():
    K, T, orbits = nongor()
    assert sorted(o.t for o in orbits) == [1, 1, 2, 2, 2]
    assert len(orbits) == 5


def test_orbits_trivial_galois_are_singletons():
    F = CyclotomicField(5)
    z = F.zeta()
    g = GroupElement(diag(F, z, z ** -1), 1)
    K, T, orbits = build([g], [], F)
    assert all(o.t == 1 for o in orbits)
    assert len(orbits) == 5


def test_solver_typeC_all_a_one():
    K, T, orbits = typeC(2)
    solve_multiplicities(orbits, T, K)
    assert all(o.a == 1 for o in orbits)
    for o in orbits:
        assert o.t * o.a * o.b == K.galois.order
    # the singleton non-trivial linear orbit is settled by the extension test
    t0 = trivial_orbit_index(orbits, T)
    hard = [o for i, o in enumerate(orbits) if i != t0 and o.t == 1 and o.dim_w == 1]
    assert hard and all("L3" in o.provenance for o in hard)


def test_solver_typeBC1_norm_obstruction():
    K, T, orbits = typeBC1()
    trace = SolverTrace()
    solve_multiplicities(orbits, T, K, trace=trace)
    t0 = trivial_orbit_index(orbits, T)
    other = next(o for i, o in enumerate(orbits) if i != t0)
    assert other.a == 2 and other.b == 1
    assert "L3" in other.provenance and "no" in other.provenance
    assert orbits[t0].a == 1


def test_solver_nongor_via_saturation():
    K, T, orbits = nongor()
    solve_multiplicities(orbits, T, K)
    assert all(o.a == 1 for o in orbits)
    assert all(o.t * o.a * o.b == 4 for o in orbits)


def test_solver_trivial_galois():
    F = CyclotomicField(5)
    z = F.zeta()
    g = GroupElement(diag(F, z, z ** -1), 1)
    K, T, orbits = build([g], [], F)
    solve_multiplicities(orbits, T, K)
    assert all(o.a == 1 and o.b == 1 for o in orbits)


def test_solver_typeG22_finite_field():
    F = GaloisField(5, 6)
    z = F.root_of_unity(24)
    i4 = F.power(z, 6)
    inv_sqrt2 = F.inverse(F.power(z, 3) + F.power(z, 21))
    alpha = GroupElement(diag(F, i4, F.power(i4, 3)), 0)
    beta = GroupElement(((F.zero, F.one), (-F.one, F.zero)), 0)
    gamma = GroupElement(
        tuple(
            tuple(inv_sqrt2 * x for x in row)
            for row in ((F.power(z, 7), F.power(z, 7)), (F.power(z, 13), z))
        ),
        2,
    )
    G = generate_group([alpha, beta, gamma])
    K = kernel_and_cosets(G, F.galois_subgroup_from_fixed_degree(2))
    T = character_table(K)
    orbits = compute_orbits(T, K)
    assert sorted((o.t, o.dim_w) for o in orbits) == [(1, 1), (1, 2), (3, 1)]
    solve_multiplicities(orbits, T, K)
    assert all(o.a == 1 for o in orbits)
    # with the deep extension test enabled the answer must not change
    orbits2 = compute_orbits(T, K)
    solve_multiplicities(orbits2, T, K, deep_extension=True)
    assert [o.a for o in orbits2] == [o.a for o in orbits]


def test_gmodule_multiplicities_typeC():
    K, T, orbits = typeC(2)
    solve_multiplicities(orbits, T, K)
    chi_u = T.standard_character()
    mults = gmodule_multiplicities(chi_u, orbits, T)
    # U restricts to the unique t=2 orbit
    for o, m in zip(orbits, mults):
        assert m == (1 if o.t == 2 else 0)
    triv = T.wedge_power_of_standard(0)
    t0 = trivial_orbit_index(orbits, T)
    mults0 = gmodule_multiplicities(triv, orbits, T)
    assert mults0[t0] == 1 and sum(mults0) == 1


def test_gmodule_multiplicities_nongor_tensor_square():
    K, T, orbits = nongor()
    solve_multiplicities(orbits, T, K)
    chi_u = T.standard_character()
    sq = chi_u * chi_u
    mults = gmodule_multiplicities(sq, orbits, T)
    by_label = dict(zip([o.label for o in orbits], mults))
    # V_{1,3} (x) V_{1,3} = V_{2,6} + V_4^2: one rank-2 orbit once, one rank-1 twice
    counts = sorted(m for m in mults if m)
    assert counts == [1, 2]
    two = next(o for o, m in zip(orbits, mults) if m == 2)
    assert two.t == 1 and two.dim_w == 1
    one = next(o for o, m in zip(orbits, mults) if m == 1)
    assert one.t == 2


def test_non_divisible_surfaces_with_corrupted_a():
    K, T, orbits = typeBC1()
    solve_multiplicities(orbits, T, K)
    t0 = trivial_orbit_index(orbits, T)
    other = next(o for i, o in enumerate(orbits) if i != t0)
    # corrupt: pretend a=4 on the W_1 orbit, then decompose U (coefficient 2)
    other.a = 4
    chi_u = T.standard_character()
    with pytest.raises(NonDivisible):
        gmodule_multiplicities(chi_u, orbits, T)


def test_res_ind_identity():
    for K, T, orbits in (typeC(2), typeCL(2), nongor(), typeBC1()):
        assert verify_res_ind(orbits, T, K)


def test_class_group_examples():
    K, T, orbits = typeC(2)
    solve_multiplicities(orbits, T, K)
    inv, labels = class_group(orbits, T)
    assert inv == [2] and len(labels) == 2

    K, T, orbits = typeCL(2)
    solve_multiplicities(orbits, T, K)
    inv, labels = class_group(orbits, T)
    assert inv == [] and len(labels) == 1

    K, T, orbits = nongor()
    solve_multiplicities(orbits, T, K)
    inv, labels = class_group(orbits, T)
    assert inv == [2] and len(labels) == 2

    K, T, orbits = typeBC1()
    solve_multiplicities(orbits, T, K)
    inv, labels = class_group(orbits, T)
    assert inv == [] and len(labels) == 1


def test_orbit_coefficients_constancy():
    K, T, orbits = nongor()
    chi_u = T.standard_character()
    coeffs = orbit_coefficients(chi_u, orbits, T)
    assert sum(c * o.t for c, o in zip(coeffs, orbits)) == 2


def test_orbit_inconsistent_on_partial_orbit_character():
    from mckayq.errors import OrbitInconsistent

    K, T, orbits = typeC(2)
    pair = next(o for o in orbits if o.t == 2)
    lone = T.irreducibles[pair.members[0]]
    with pytest.raises(OrbitInconsistent):
        orbit_coefficients(lone, orbits, T)


def test_brute_force_extension_oracle_small_abelian():
    """Enumerate root-of-unity extensions exhaustively and compare with the
    solver on small abelian cases."""
    cases = [typeC(2), typeC(3), typeCL(1), typeCL(2), typeBC1()]
    for K, T, orbits in cases:
        solve_multiplicities(orbits, T, K)
        F = K.group.field
        galois = K.galois
        gen = galois.smallest_generator()
        g_index = K.coset_reps[galois.elements.index(gen)]
        c = galois.order
        power = 0
        for _ in range(c):
            power = K.group.mul(power, g_index)
        candidates = [F.zeta_power(j) for j in range(F.n)]
        candidates += [-x for x in candidates]
        for o in orbits:
            if o.t != 1 or o.dim_w != 1:
                continue
            chi = T.irreducibles[o.members[0]]
            target = T.embed_value(chi.values[K.class_of[power]])
            exists = any(galois.norm(lam) == target for lam in candidates)
            if exists:
                assert o.a == 1
            else:
                assert o.a != 1
