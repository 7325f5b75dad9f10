import itertools

import pytest

from quotcat.clustergen import build_cluster_category
from quotcat.errors import NotRegular, ShapeError
from quotcat.fincat import compose
from quotcat.localization import (
    check_abelian,
    compose_fractions,
    fraction_add,
    fractions_equal,
    from_morphism,
    identity_fraction,
    invert_regular,
    localised_cokernel,
    localised_kernel,
    to_left_fraction,
    verify_rf_axioms,
    Fraction,
)
from quotcat.preabelian import (
    build_morphism_family,
    cokernel,
    is_epi,
    is_regular,
    solve_two_sided_inverse,
)
from quotcat.quotient import build_quotient


@pytest.fixture(scope="module")
def A2Q():
    A2 = build_cluster_category(2)
    qc = build_quotient(A2, A2.obj({"P1": 1, "P2": 1}), validate=False)
    return qc.presentation


@pytest.fixture(scope="module")
def A3():
    return build_cluster_category(3)


@pytest.fixture(scope="module")
def Q13(A3):
    return build_quotient(A3, A3.obj({"P1": 1, "P3": 1}), validate=False).presentation


def basis_morphisms(Q):
    for i in range(Q.n):
        for j in range(Q.n):
            for a in range(Q.hom_dim(i, j)):
                yield Q.basis_morphism(i, j, a)


def test_identity_fraction_roundtrip(A2Q):
    Q = A2Q
    X = Q.single(0)
    F = from_morphism(Q, Q.identity(X))
    assert fractions_equal(Q, F, identity_fraction(Q, X))


def test_invert_identity(A2Q):
    Q = A2Q
    X = Q.single(0)
    assert fractions_equal(Q, invert_regular(Q, Q.identity(X)), identity_fraction(Q, X))


def test_invert_requires_regular(A2Q):
    Q = A2Q
    z = Q.zero_morphism(Q.single(0), Q.single(1))
    with pytest.raises(NotRegular):
        invert_regular(Q, z)
    with pytest.raises(NotRegular):
        Fraction(Q, z, z)


def test_inverse_composes_to_identity(Q13):
    Q = Q13
    fam = build_morphism_family(Q, derived=False)
    # pick a regular non-invertible witness if one exists, else any regular
    r = next((m for m in fam.regulars if m.source != m.target), fam.regulars[0])
    F, R = from_morphism(Q, r), invert_regular(Q, r)
    assert fractions_equal(Q, compose_fractions(Q, R, F), identity_fraction(Q, r.source))
    assert fractions_equal(Q, compose_fractions(Q, F, R), identity_fraction(Q, r.target))


def test_compose_with_identity(A2Q):
    Q = A2Q
    for f in basis_morphisms(Q):
        F = from_morphism(Q, f)
        left = compose_fractions(Q, identity_fraction(Q, f.target), F)
        right = compose_fractions(Q, F, identity_fraction(Q, f.source))
        assert fractions_equal(Q, left, F)
        assert fractions_equal(Q, right, F)


def test_localisation_functoriality(A2Q):
    Q = A2Q
    for f in basis_morphisms(Q):
        for g in basis_morphisms(Q):
            if f.target != g.source:
                continue
            lhs = compose_fractions(Q, from_morphism(Q, g), from_morphism(Q, f))
            rhs = from_morphism(Q, compose(Q, g, f))
            assert fractions_equal(Q, lhs, rhs)


def test_associativity_small_triples(A2Q):
    Q = A2Q
    triples = []
    bs = list(basis_morphisms(Q))
    for f, g, h in itertools.product(bs, repeat=3):
        if f.target == g.source and g.target == h.source:
            triples.append((f, g, h))
    assert triples
    for f, g, h in triples:
        F, G, H = (from_morphism(Q, m) for m in (f, g, h))
        lhs = compose_fractions(Q, H, compose_fractions(Q, G, F))
        rhs = compose_fractions(Q, compose_fractions(Q, H, G), F)
        assert fractions_equal(Q, lhs, rhs)


def test_faithfulness_on_plain_morphisms(A2Q):
    # [id, f] = [id, f'] iff f = f'
    Q = A2Q
    bs = list(basis_morphisms(Q))
    for f in bs:
        for g in bs:
            if f.source != g.source or f.target != g.target:
                continue
            eq = fractions_equal(Q, from_morphism(Q, f), from_morphism(Q, g))
            assert eq == (f == g)


def test_amplification(Q13):
    # [r, f o r] = [id, f]
    Q = Q13
    fam = build_morphism_family(Q, derived=False)
    checked = 0
    for r in fam.regulars:
        for f in basis_morphisms(Q):
            if f.source != r.target:
                continue
            amplified = Fraction(Q, r, compose(Q, f, r))
            assert fractions_equal(Q, amplified, from_morphism(Q, f))
            checked += 1
            if checked > 25:
                return
    assert checked


def test_equality_is_equivalence_and_congruence(Q13):
    Q = Q13
    fam = build_morphism_family(Q, derived=False)
    regs = [m for m in fam.regulars][:3]
    fracs = []
    for r in regs:
        for f in basis_morphisms(Q):
            if f.source == r.source:
                fracs.append(Fraction(Q, r, f))
    fracs = fracs[:8]
    for F in fracs:
        assert fractions_equal(Q, F, F)
    for F in fracs:
        for G in fracs:
            if F.source == G.source and F.target == G.target:
                assert fractions_equal(Q, F, G) == fractions_equal(Q, G, F)
    # transitivity on the equal pairs found
    for F, G, H in itertools.permutations(fracs, 3):
        if not (F.source == G.source == H.source and F.target == G.target == H.target):
            continue
        if fractions_equal(Q, F, G) and fractions_equal(Q, G, H):
            assert fractions_equal(Q, F, H)


def test_parallel_check(A2Q):
    Q = A2Q
    F = identity_fraction(Q, Q.single(0))
    G = identity_fraction(Q, Q.single(1))
    with pytest.raises(ShapeError):
        fractions_equal(Q, F, G)


def test_additivity(A2Q):
    Q = A2Q
    for f in basis_morphisms(Q):
        g = f.scale(3)
        lhs = from_morphism(Q, f + g)
        rhs = fraction_add(Q, from_morphism(Q, f), from_morphism(Q, g))
        assert fractions_equal(Q, lhs, rhs)


def test_rf_axioms_cluster_tilting(A2Q):
    rep = verify_rf_axioms(A2Q)
    assert rep.ok, rep.as_dict()


def test_rf_axioms_two_summand(Q13):
    rep = verify_rf_axioms(Q13)
    assert rep.ok, rep.as_dict()


def test_rf_axioms_negative_control(A3):
    # quotient by add{P1, P2, I2}: preabelian but not integral, so the
    # square-completion axiom fails with a concrete witness
    q = build_quotient(A3, subcat={"P1", "P2", "I2"}, validate=False)
    rep = verify_rf_axioms(q.presentation)
    assert not rep.ok
    assert rep.clauses["RF2_square_completion"].status == "fail"
    assert "not regular" in rep.clauses["RF2_square_completion"].detail


def test_localised_cokernel_of_identity(A2Q):
    Q = A2Q
    F = identity_fraction(Q, Q.single(0))
    C = localised_cokernel(Q, F)
    assert C.target.is_zero()


def test_localised_cokernel_matches_plain(A2Q):
    Q = A2Q
    for f in basis_morphisms(Q):
        F = from_morphism(Q, f)
        C = localised_cokernel(Q, F)
        _, c = cokernel(Q, f)
        assert fractions_equal(Q, C, from_morphism(Q, c))
        # weak cokernel property at fraction level: C o F is the zero fraction
        zero = from_morphism(Q, Q.zero_morphism(F.source, C.target))
        assert fractions_equal(Q, compose_fractions(Q, C, F), zero)


def test_localised_kernel(Q13):
    Q = Q13
    for f in list(basis_morphisms(Q))[:8]:
        F = from_morphism(Q, f)
        K = localised_kernel(Q, F)
        zero = from_morphism(Q, Q.zero_morphism(K.source, F.target))
        assert fractions_equal(Q, compose_fractions(Q, F, K), zero)


def test_left_fraction_conversion_identity(Q13):
    # s o f = g o r with s regular: the conversion criterion holds exactly
    Q = Q13
    fam = build_morphism_family(Q, derived=False)
    r = fam.regulars[0]
    for f in basis_morphisms(Q):
        if f.source != r.source:
            continue
        F = Fraction(Q, r, f)
        s, g = to_left_fraction(Q, F)
        assert compose(Q, s, f) == compose(Q, g, r)
        assert is_regular(Q, s)
        break


def test_check_abelian(A2Q, Q13):
    for Q in (A2Q, Q13):
        rep = check_abelian(Q)
        assert rep.ok, rep.as_dict()


def test_regular_into_projective_is_iso(A3, Q13):
    # regular maps into add T are already invertible in the quotient
    Q = Q13
    fam = build_morphism_family(Q, derived=False)
    tnames = {"P1", "P3"}
    checked = 0
    for r in fam.regulars:
        support = {Q.objects[i] for i in r.target.support()}
        if support and support <= tnames:
            assert solve_two_sided_inverse(Q, r) is not None
            checked += 1
    assert checked


def test_epi_transfer(Q13):
    # f epi downstairs iff [f] epi upstairs, tested on cancellation instances
    Q = Q13
    fam = build_morphism_family(Q, derived=False)
    epis = [m for m in fam.epis if m.source != m.target][:2]
    for f in epis:
        F = from_morphism(Q, f)
        regs = [r for r in fam.regulars if r.source == f.target][:2]
        for r in regs:
            for g in basis_morphisms(Q):
                if g.source != r.source:
                    continue
                G = Fraction(Q, r, g)
                GF = compose_fractions(Q, G, F)
                zero_gf = from_morphism(Q, Q.zero_morphism(F.source, G.target))
                zero_g = from_morphism(Q, Q.zero_morphism(G.source, G.target))
                if fractions_equal(Q, GF, zero_gf):
                    assert fractions_equal(Q, G, zero_g)
    # converse: a non-epi f admits nonzero p with p o f = 0, so [f] is not epi
    non_epis = [m for m in fam.all if not is_epi(Q, m) and not m.is_zero()][:3]
    for f in non_epis:
        found = False
        for z in range(Q.n):
            for p in Q.hom_basis(f.target, Q.single(z)):
                if compose(Q, p, f).is_zero() and not p.is_zero():
                    P = from_morphism(Q, p)
                    zero = from_morphism(Q, Q.zero_morphism(p.source, p.target))
                    assert not fractions_equal(Q, P, zero)
                    found = True
                    break
            if found:
                break
        assert found


def test_localised_kernel_universal_property(Q13):
    # the fraction kernel is mono at fraction level and weakly universal on
    # identity-denominator test fractions
    Q = Q13
    from quotcat.preabelian import kernel

    for f in list(basis_morphisms(Q))[:6]:
        F = from_morphism(Q, f)
        K = localised_kernel(Q, F)
        # for identity-denominator fractions the kernel object agrees with
        # the plain kernel of the morphism (isomorphism invariant: equal
        # multiplicity vectors)
        plain = kernel(Q, f)
        assert plain is not None
        assert K.source.mult == plain[0].mult
        # weak kernel property: any basis g with F o [g] = 0 factors through
        # the kernel fraction at the level of the underlying quotient
        for z in range(Q.n):
            for g in Q.hom_basis(Q.single(z), f.source):
                if compose(Q, f, g).is_zero() and not g.is_zero():
                    from quotcat.preabelian import lifts_through_epi

                    # g factors through the plain kernel inclusion
                    assert lifts_through_epi(Q, g, plain[1]) is not None


def test_fraction_scalar_action(A2Q):
    # the scalar action [r, f] -> [r, c f] matches scaling before localising
    from quotcat.localization import fraction_scale

    Q = A2Q
    for f in basis_morphisms(Q):
        lhs = from_morphism(Q, f.scale(5))
        rhs = fraction_scale(Q, from_morphism(Q, f), 5)
        assert fractions_equal(Q, lhs, rhs)
