"""Acceptance criteria, one test per criterion.

Each test prints a single [criterion N] PASS/FAIL line (visible with
pytest -s or in captured output).  Arithmetic is exact everywhere; scans
marked "within budget" use the budgets pinned below.
"""

import itertools
import time

import pytest

from quotcat.clustergen import DiagonalModel, build_cluster_category
from quotcat.fincat import (
    all_rigid_supports,
    check_serre_symmetry,
    compose,
    is_cluster_tilting,
    validate_category,
)
from quotcat.linalg import GF
from quotcat.localization import (
    Fraction,
    check_abelian,
    fractions_equal,
    verify_rf_axioms,
)
from quotcat.modcat import HFunctor, h_fraction, in_s, verify_equivalence
from quotcat.preabelian import (
    Budget,
    build_morphism_family,
    cokernel,
    is_epi,
    is_regular,
    kernel,
    precompose_matrix,
    solve_two_sided_inverse,
)
from quotcat.quotient import build_quotient, x_t_objects
from quotcat.verify import run_cotorsion

SCAN_BUDGET = Budget(scan_pairs_cap=120)


def report(num: int, ok: bool, text: str):
    print(f"\n[criterion {num:2d}] {'PASS' if ok else 'FAIL'}: {text}")
    assert ok, f"criterion {num}: {text}"


@pytest.fixture(scope="module")
def A2():
    return build_cluster_category(2)


@pytest.fixture(scope="module")
def A3():
    return build_cluster_category(3)


@pytest.fixture(scope="module")
def A3_F101():
    return build_cluster_category(3, field=GF(101))


def rigid_objects(P, max_size):
    return [
        P.obj({P.objects[i]: 1 for i in supp}) for supp in all_rigid_supports(P, max_size)
    ]


def quotient_basis_morphisms(Q):
    for i in range(Q.n):
        for j in range(Q.n):
            for a in range(Q.hom_dim(i, j)):
                yield Q.basis_morphism(i, j, a)


def test_criterion_01_generator_integrity(tmp_path):
    from quotcat.catfile import load_category
    from quotcat.cli import main

    t0 = time.time()
    counts = {}
    for n, expected in ((2, 5), (3, 9), (4, 14)):
        out = tmp_path / f"a{n}.json"
        assert main(["generate", str(n), str(out)]) == 0
        P = load_category(str(out))
        counts[n] = P.n
        assert P.n == expected
        assert validate_category(P).ok
        assert check_serre_symmetry(P) == []
        model = DiagonalModel(n)
        lab = {name: tuple(d) for name, d in P.metadata["labelling"].items()}
        for x in P.objects:
            for y in P.objects:
                assert P.hom_dim(P.index(x), P.index(y)) == model.expected_dim(lab[x], lab[y])
    elapsed = time.time() - t0
    report(
        1,
        elapsed < 30,
        f"n=2,3,4 give {counts[2]},{counts[3]},{counts[4]} indecomposables; "
        f"validation, crossing oracle and 2-CY symmetry all exact ({elapsed:.1f}s < 30s)",
    )


def test_criterion_02_preabelian_every_rigid_T(A3_F101):
    P = A3_F101
    worst = 0.0
    total = 0
    for T in rigid_objects(P, 3):
        t0 = time.time()
        qc = build_quotient(P, T, validate=False)
        Q = qc.presentation
        for f in quotient_basis_morphisms(Q):
            cres = cokernel(Q, f, SCAN_BUDGET)
            assert cres is not None, (P.obj_name(T), "cokernel missing")
            M, c = cres
            # certified universal property: c kills f, is epi, and the
            # dimension count makes it a weak cokernel, hence a cokernel
            assert compose(Q, c, f).is_zero()
            assert is_epi(Q, c)
            for z in range(Q.n):
                Z = Q.single(z)
                dYZ = Q.hom_space_dim(f.target, Z)
                rk = precompose_matrix(Q, f, Z).rank() if dYZ else 0
                assert Q.hom_space_dim(M, Z) == dYZ - rk
            kres = kernel(Q, f, SCAN_BUDGET)
            assert kres is not None, (P.obj_name(T), "kernel missing")
            K, j = kres
            assert compose(Q, f, j).is_zero()
            total += 1
        worst = max(worst, time.time() - t0)
    report(
        2,
        worst < 300,
        f"kernel+cokernel certified for all {total} basis morphisms over all "
        f"{len(rigid_objects(P, 3))} rigid T in C(A_3) over F_101 "
        f"(worst T: {worst:.1f}s < 300s)",
    )


def test_criterion_03_integral_every_rigid_T(A3):
    from quotcat.preabelian import scan_properties

    checked = 0
    for T in rigid_objects(A3, 3):
        qc = build_quotient(A3, T, validate=False)
        rep = scan_properties(qc.presentation, SCAN_BUDGET)
        assert rep.preabelian, A3.obj_name(T)
        assert rep.integral, (A3.obj_name(T), rep.as_dict())
        for name, clause in rep.clauses.items():
            assert clause.status == "pass", (A3.obj_name(T), name, clause.detail)
        checked += 1
    report(3, True, f"integrality scans pass for all {checked} rigid T in C(A_3) (within budget)")


def test_criterion_04_calculus_of_fractions(A3):
    checked = 0
    for T in rigid_objects(A3, 3):
        qc = build_quotient(A3, T, validate=False)
        rep = verify_rf_axioms(qc.presentation, SCAN_BUDGET)
        assert rep.ok, (A3.obj_name(T), rep.as_dict())
        checked += 1
    report(
        4,
        True,
        f"RF1-RF3 and LF1-LF3 pass (completion legs regular) for all {checked} rigid T in C(A_3)",
    )


def test_criterion_05_abelian_localisation(A2, A3):
    counts = {}
    for label, P in (("A_2", A2), ("A_3", A3)):
        total = 0
        for T in rigid_objects(P, P.metadata["n"]):
            qc = build_quotient(P, T, validate=False)
            rep = check_abelian(qc.presentation, SCAN_BUDGET)
            assert rep.ok, (P.obj_name(T), rep.as_dict())
            total += rep.clauses["abelian_middle_maps"].checked
        counts[label] = total
    report(
        5,
        True,
        "coim-im middle maps regular and fraction-invertible for every basis "
        f"morphism: {counts['A_2']} in C(A_2), {counts['A_3']} in C(A_3), all rigid T",
    )


def test_criterion_06_equivalence(A2, A3):
    for T in rigid_objects(A2, 2):
        rep = verify_equivalence(A2, T)
        assert rep.ok, (A2.obj_name(T), rep.as_dict())
    nontrivial_seen = False
    for T in rigid_objects(A3, 3):
        rep = verify_equivalence(A3, T)
        assert rep.ok, (A3.obj_name(T), rep.as_dict())
        if any(nt for (_, _, nt) in rep.witnesses["full"]):
            nontrivial_seen = True
        # the End-dimension identity is part of the projectives clause;
        # assert it explicitly as well
        from quotcat.modcat import HFunctor, module_hom_space

        H = HFunctor(A3, T)
        assert A3.hom_space_dim(T, T) == len(module_hom_space(H.module(T), H.module(T)))
    report(
        6,
        nontrivial_seen,
        "FAITHFUL, FULL, PROJECTIVES pass for all rigid T in C(A_2) and C(A_3); "
        "End-dimension identity exact; some fraction needs a non-identity denominator",
    )


def test_criterion_07_cluster_tilting_degeneration(A3):
    count = 0
    for T in rigid_objects(A3, 3):
        if not is_cluster_tilting(A3, T):
            continue
        count += 1
        xt = x_t_objects(A3, T)
        sigma_t = {A3.sigma[i] for i in T.support()}
        assert xt == sigma_t, A3.obj_name(T)
        qc = build_quotient(A3, T, validate=False)
        Q = qc.presentation
        fam = build_morphism_family(Q, SCAN_BUDGET, derived=False)
        for r in fam.regulars:
            assert solve_two_sided_inverse(Q, r) is not None, A3.obj_name(T)
    report(
        7,
        count == 14,
        f"X_T = add Sigma T and every regular morphism invertible for all {count} "
        "cluster-tilting T in C(A_3)",
    )


def test_criterion_08_regular_noninvertible_witness(A3):
    witnesses = []
    for T in rigid_objects(A3, 3):
        if len(T.support()) != 2:
            continue
        qc = build_quotient(A3, T, validate=False)
        Q = qc.presentation
        for f in quotient_basis_morphisms(Q):
            if f.source != f.target and is_regular(Q, f) and solve_two_sided_inverse(Q, f) is None:
                witnesses.append(
                    f"T={A3.obj_name(T)}: {Q.obj_name(f.source)} -> {Q.obj_name(f.target)}"
                )
                break
    report(
        8,
        len(witnesses) > 0,
        f"regular non-invertible morphisms found for {len(witnesses)} two-summand rigid T, "
        f"e.g. {witnesses[0] if witnesses else 'none'}",
    )


def test_criterion_09_section6_counterexample(A3):
    from quotcat.fincat import perp

    U = {A3.index("P2"), A3.index("P3"), A3.index("SP3")}
    uperp = {A3.objects[i] for i in perp(A3, U, "right")}
    assert uperp == {"P1", "P2", "S2"}
    q6 = build_quotient(A3, subcat={"P1", "P2", "S2"})
    Q6 = q6.presentation
    f = q6.project(A3.basis_morphism(A3.index("P3"), A3.index("I2"), 0))
    assert not f.is_zero()
    res = cokernel(Q6, f, SCAN_BUDGET)
    assert res is None  # certified: the exhaustive bounded search excluded everything
    cot = run_cotorsion(A3, U)
    assert cot["overall"] == "pass"
    assert cot["V"] == ["P1", "P2", "S2"]
    report(
        9,
        True,
        "U-perp = {P1, P2, S2}; cokernel of P3 -> I2 in C/U-perp certified "
        "nonexistent; cotorsion clauses (a), (b) pass",
    )


def test_criterion_10_decider_agreement(A2, A3):
    # fractions_equal vs H-image equality, exhaustive over C(A_2)/X_T roofs
    pairs_checked = 0
    for T in rigid_objects(A2, 2):
        qc = build_quotient(A2, T, validate=False)
        Q = qc.presentation
        H = HFunctor(A2, T)
        regs = [Q.identity(Q.single(i)) for i in range(Q.n)]
        for f in quotient_basis_morphisms(Q):
            if is_regular(Q, f):
                regs.append(f)
        fracs = []
        for r in regs:
            for f in quotient_basis_morphisms(Q):
                if f.source == r.source:
                    fracs.append(Fraction(Q, r, f))
        for F, G in itertools.product(fracs, fracs):
            if F.source != G.source or F.target != G.target:
                continue
            eq = fractions_equal(Q, F, G)
            heq = h_fraction(H, qc, F) == h_fraction(H, qc, G)
            assert eq == heq, "decider disagreement"
            pairs_checked += 1
    # bridge identity over every rigid T in C(A_3)
    bridge_checked = 0
    for T in rigid_objects(A3, 3):
        qc = build_quotient(A3, T, validate=False)
        H = HFunctor(A3, T)
        for i in range(A3.n):
            for j in range(A3.n):
                for a in range(A3.hom_dim(i, j)):
                    f = A3.basis_morphism(i, j, a)
                    assert in_s(A3, T, f, H) == is_regular(qc.presentation, qc.project(f))
                    bridge_checked += 1
    report(
        10,
        True,
        f"pullback and H-image equality deciders agree on {pairs_checked} fraction "
        f"pairs; in_s matches regularity on {bridge_checked} morphism instances",
    )
