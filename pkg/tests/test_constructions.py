import pytest

from krasner.constructions import (
    ExplicitRing,
    RingProduct,
    ZMod,
    comaximal_pairs,
    crt_check,
    fundamental_homomorphism,
    functor_checks,
    from_ring,
    idempotent_lift_by_crt,
    induced_spec_map,
    lift_idempotent,
    orbit_image,
    product,
    product_decomposition,
    product_embeddings,
    projection,
    ring_mod_subgroup,
    square_commutes,
    zmod,
)
from krasner.core import bits, classify, nontrivial_idempotents, validate_axioms
from krasner.corpus import ORBITS, corpus, krasner_field
from krasner.errors import ConstructionError, HomomorphismError
from krasner.homomorphisms import GoodHomomorphism, find_isomorphism, identity, is_isomorphic
from krasner.ideals import ideal_masks, nilradical, prime_masks, quotient, spec
from krasner.spectrum import SpectrumSpace, is_connected, is_irreducible, vanishing_set

import oracles


def _primes(t):
    return {frozenset(p.labels) for p in spec(t)}


# ---------------------------------------------------------------- rings


def test_from_ring_examples():
    z4 = from_ring(ZMod(4))
    assert validate_axioms(z4).valid and _primes(z4) == {frozenset("02")}
    z2 = from_ring(ZMod(2))
    assert classify(z2).hyperfield and z2.n == 2
    z23 = from_ring(RingProduct((ZMod(2), ZMod(3))))
    assert len(spec(z23)) == 2 and not is_connected(SpectrumSpace.of(z23))


def test_from_ring_rejects_bad_specs():
    labels = ("0", "1")
    # 1 * 1 = 0, so "1" is not an identity
    with pytest.raises(ConstructionError):
        from_ring(ExplicitRing(labels, 0, 1, ((0, 1), (1, 0)), ((0, 0), (0, 0))))
    with pytest.raises(ConstructionError):
        from_ring(ExplicitRing(labels, 0, 1, ((0, 1), (1, 0)), ((0, 0), (1, 1))))


@pytest.mark.parametrize("n", range(2, 11))
def test_zmod_matches_classical_oracle(n):
    t = zmod(n)
    assert t.is_ring and validate_axioms(t).valid
    assert {frozenset(int(x) for x in p.labels) for p in spec(t)} == set(oracles.zmod_primes(n))


# ---------------------------------------------------------------- orbit construction


def test_z6_mod_units():
    h, cls = ring_mod_subgroup(ZMod(6), (1, 5))
    assert validate_axioms(h).valid and h.n == 4
    orbits = sorted(sorted(x for x in range(6) if cls[x] == k) for k in range(h.n))
    assert orbits == [[0], [1, 5], [2, 4], [3]]
    assert len(spec(h)) == 2


def test_z5_mod_units_is_krasner_field():
    k, _ = ring_mod_subgroup(ZMod(5), (1, 2, 3, 4))
    assert k.n == 2 and classify(k).hyperfield
    assert k.add[k.one][k.one] == 0b11


def test_trivial_group_gives_copy():
    for n in (4, 6, 9):
        h, _ = ring_mod_subgroup(ZMod(n), (1,))
        assert is_isomorphic(h, zmod(n))


@pytest.mark.parametrize(
    "group",
    [(), (0, 1), (2, 3), (1, 2), (1, 3, 5), (1, 9)],
)
def test_orbit_construction_rejects_non_subgroups(group):
    with pytest.raises(ConstructionError):
        ring_mod_subgroup(ZMod(6), group)


@pytest.mark.parametrize("n,group", ORBITS, ids=[f"Z{n}/{g}" for n, g in ORBITS])
def test_orbit_spectrum_matches_classical(n, group):
    h, cls = ring_mod_subgroup(ZMod(n), group)
    assert validate_axioms(h).valid
    classical = oracles.zmod_primes(n)
    images = [orbit_image(cls, sum(1 << x for x in p)) for p in classical]
    assert sorted(images) == sorted(prime_masks(h))
    assert len(set(images)) == len(images)
    for p, ip in zip(classical, images):
        for q, iq in zip(classical, images):
            assert (p <= q) == (ip & iq == ip)
    nil = orbit_image(cls, sum(1 << x for x in oracles.zmod_nil(n)))
    assert nilradical(h).mask == nil
    r = zmod(n)
    assert is_irreducible(SpectrumSpace.of(r)) == is_irreducible(SpectrumSpace.of(h))
    assert is_connected(SpectrumSpace.of(r)) == is_connected(SpectrumSpace.of(h))
    if len(classical) == 1 and classical[0] == frozenset({0}):
        assert classify(h).hyperfield


# ---------------------------------------------------------------- products


def test_product_examples():
    f2 = zmod(2)
    ff = product(f2, f2)
    assert len(spec(ff)) == 2
    assert ff.element("(1|0)") in nontrivial_idempotents(ff)
    s = SpectrumSpace.of(product(zmod(5), f2))
    assert s.size == 2 and all(s.is_closed(1 << k) and s.is_open(1 << k) for k in range(2))
    with pytest.raises(ConstructionError):
        product(zmod(8), zmod(9))


PRODUCT_PAIRS = [
    (zmod(2), zmod(3)),
    (zmod(2), zmod(4)),
    (krasner_field(), zmod(3)),
    (krasner_field(), krasner_field()),
    (zmod(2), corpus()[0]),
]


@pytest.mark.parametrize("pair", PRODUCT_PAIRS, ids=lambda p: f"{p[0].name}x{p[1].name}")
def test_product_spectrum_decomposes(pair):
    a, b = pair
    t = product(a, b)
    assert validate_axioms(t).valid
    left, right = product_embeddings(a, b, t)
    assert sorted(left + right) == sorted(prime_masks(t))
    assert len(left) == len(spec(a)) and len(right) == len(spec(b))
    assert not is_connected(SpectrumSpace.of(t))


# ---------------------------------------------------------------- CRT


def test_crt_r8_example(r8):
    rep = crt_check(r8, [r8.mask("0bdf"), r8.mask("0c")])
    assert rep.holds and rep.comaximal and rep.surjective
    assert rep.kernel == rep.intersection == rep.ideal_product == 1 << r8.zero
    assert rep.isomorphism is not None
    first, second = rep.factors
    assert first.n == 2 and classify(first).hyperfield and not first.is_ring
    assert is_isomorphic(second, zmod(4))
    assert is_isomorphic(rep.target, r8)


def test_crt_z6_and_single_ideal():
    z6 = zmod(6)
    rep = crt_check(z6, [z6.mask("024"), z6.mask("03")])
    assert rep.holds and is_isomorphic(rep.target, product(zmod(2), zmod(3)))
    single = crt_check(z6, [z6.mask("03")])
    assert single.kernel == z6.mask("03") and single.good_homomorphism


def test_crt_rejects_empty_list(r8):
    with pytest.raises(ValueError):
        crt_check(r8, [])


def test_crt_on_all_comaximal_pairs(member):
    t = member
    for a, b in comaximal_pairs(t):
        rep = crt_check(t, [a, b])
        assert rep.good_homomorphism and rep.surjective
        assert rep.kernel == rep.intersection == rep.ideal_product


def test_crt_kernel_is_intersection_always(member):
    t = member
    proper = [m for m in ideal_masks(t) if m != t.full]
    size = {m: quotient(t, m)[0].n for m in proper}
    for a in proper:
        for b in proper:
            if size[a] * size[b] <= 64:
                assert crt_check(t, [a, b]).kernel == a & b


def test_crt_map_is_not_good_without_comaximality(r8):
    # r -> (r, r) into R8 x R8 sends 1 + 1 = {a, d} to a diagonal, while
    # (1, 1) + (1, 1) is the full product {a, d} x {a, d}
    zero = 1 << r8.zero
    rep = crt_check(r8, [zero, zero])
    assert not rep.good_homomorphism and rep.violation is not None
    assert rep.kernel == zero
    assert crt_check(zmod(6), [1, 1]).good_homomorphism


# ---------------------------------------------------------------- idempotents


def test_disconnected_members_decompose(member):
    t = member
    s = SpectrumSpace.of(t)
    d = product_decomposition(t)
    assert (d is None) == is_connected(s)
    if d is None:
        return
    assert d.idempotent is not None and d.idempotent in nontrivial_idempotents(t)
    assert d.via in ("complement", "orthogonal")
    assert d.crt.isomorphism is not None
    vi, vj = d.pieces
    assert vi == vanishing_set(s, d.first) and vj == vanishing_set(s, d.second)
    q1, q2 = d.crt.factors
    assert bin(vi).count("1") == len(spec(q1)) and bin(vj).count("1") == len(spec(q2))


def test_idempotent_lifting(member):
    t = member
    nil = nilradical(t).mask
    q, proj = quotient(t, nil)
    if not nontrivial_idempotents(q):
        assert lift_idempotent(t) is None
        return
    e = lift_idempotent(t)
    assert e is not None and t.mul[e][e] == e and e not in (t.zero, t.one)


def test_power_construction_when_its_hypotheses_hold(member):
    # the (x^n), ((x - 1)^n) splitting: comaximality always holds, and when
    # the two ideals multiply to zero the CRT map yields an idempotent
    t = member
    q, proj = quotient(t, nilradical(t).mask)
    for x in range(t.n):
        c = proj(x)
        if c in (q.zero, q.one) or q.mul[c][c] != c:
            continue
        out = idempotent_lift_by_crt(t, x)
        assert out["comaximal"]
        if out["zero_product"]:
            e = out["idempotent"]
            assert e is not None and t.mul[e][e] == e and e not in (t.zero, t.one)


def test_power_construction_can_fail():
    # in K x K, x(x - 1) = {0, x} is not nilpotent, so the ideals do not multiply to zero
    kk = product(krasner_field(), krasner_field())
    x = kk.element("(1G|0G)")
    out = idempotent_lift_by_crt(kk, x)
    assert out["comaximal"] and not out["zero_product"] and out["idempotent"] is None


# ---------------------------------------------------------------- homomorphisms and spectral maps


def test_good_homomorphism_rejects_bad_maps(r8):
    z2 = zmod(2)
    with pytest.raises(HomomorphismError) as info:
        GoodHomomorphism(r8, z2, tuple([0] * 7 + [1]))
    assert info.value.witness
    with pytest.raises(HomomorphismError):
        GoodHomomorphism(z2, z2, (1, 1))


def test_inclusion_only_map_is_not_good():
    # K -> Z2 sends 1+1 = {0,1} onto {0,1} but Z2 has 1+1 = {0}
    k = krasner_field()
    with pytest.raises(HomomorphismError):
        GoodHomomorphism(k, zmod(2), (0, 1))


def test_identity_spec_map(r8):
    sm = induced_spec_map(identity(r8))
    assert sm.point_map == tuple(range(sm.domain.size))
    assert all(sm.check().values())


def test_projection_examples(r8):
    sm = induced_spec_map(projection(r8, r8.mask("0c")))
    assert sm.image(sm.domain.everything) == vanishing_set(sm.codomain, r8.mask("0c"))
    assert bin(sm.image(sm.domain.everything)).count("1") == 1
    t = product(zmod(2), zmod(3))
    ideal = t.mask(["(0|0)", "(0|1)", "(0|2)"])
    sm = induced_spec_map(projection(t, ideal))
    pt = sm.image(sm.domain.everything)
    assert bin(pt).count("1") == 1
    assert sm.codomain.is_closed(pt) and sm.codomain.is_open(pt)


def test_spec_map_rejects_non_prime_preimage():
    # the identity spec map cannot be faked with a non-homomorphism, so only
    # well-formed maps reach induced_spec_map; good maps always pull primes back
    for t in corpus():
        for m in ideal_masks(t):
            if m != t.full:
                induced_spec_map(projection(t, m))


def _projections(t):
    return [m for m in ideal_masks(t) if m != t.full]


def test_spectral_map_checks_on_all_projections(member):
    t = member
    for m in _projections(t):
        checks = induced_spec_map(projection(t, m)).check()
        assert set(checks) >= {"continuous", "extension", "basic_open", "contraction", "density"}
        assert all(checks.values()), (t.fmt(m), checks)


def test_composed_chains(member):
    t = member
    for i in _projections(t):
        f = projection(t, i)
        q = f.target
        for j in _projections(t):
            if j & i != i:
                continue
            g = projection(q, f.image_of(j))
            rep = functor_checks(f, g)
            assert rep.holds, (t.fmt(i), t.fmt(j), rep)
            composite = f.then(g)
            assert is_isomorphic(composite.target, quotient(t, j)[0])
            assert composite.kernel == j


def test_square_commutes_on_projections(member):
    t = member
    for m in _projections(t):
        assert square_commutes(projection(t, m))


def test_r8_functor_examples(r8):
    f = projection(r8, r8.mask("0c"))
    g = projection(f.target, f.image_of(r8.mask("0cad")))
    assert functor_checks(f, g).holds
    assert functor_checks(identity(r8), identity(r8)).holds
    assert square_commutes(projection(r8, r8.mask("0cad")))
    with pytest.raises(HomomorphismError):
        functor_checks(g, f)


def test_fundamental_homomorphism_of_isomorphism(member):
    t = member
    iso = find_isomorphism(t, t)
    assert iso is not None
    fs = fundamental_homomorphism(iso)
    assert fs.injective and fs.surjective


def test_surjective_homeomorphism_onto_kernel_vanishing(member):
    t = member
    for m in _projections(t):
        sm = induced_spec_map(projection(t, m))
        assert sm.check()["surjective_homeomorphism"]
        assert sm.image(sm.domain.everything) == vanishing_set(sm.codomain, m)
        for k in bits(sm.image(sm.domain.everything)):
            assert sm.codomain.points[k] & m == m
