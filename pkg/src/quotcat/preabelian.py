"""Preabelian structure checks and constructions on finite presentations.

The central primitive is a certified search for an element of a linear
subspace of a Hom space subject to maximal-rank (Zariski-open) conditions.
Kernels, cokernels, and every projectivity/regularity witness reduce to it.

Certification strategy over Q: a failed random phase falls back to exact
grid evaluation.  A minor of size r in coefficients that enter linearly has
degree at most r in each variable, so evaluating on the grid {0..r}^d
decides whether the condition is generically satisfiable; the product
polynomial argument then yields a deterministic joint witness on the grid
{0..sum r_i}^d.  A certified negative is therefore a theorem about the
instance, not a timeout.  Over small prime fields exhaustive enumeration
replaces the grid (openness does not guarantee rational points there).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .errors import BoundsExceeded, InternalInconsistency, NoCokernel, NoKernel, ShapeError
from .fincat import (
    CategoryPresentation,
    Morphism,
    Obj,
    compose,
    op_morphism,
    opposite,
    postcompose_matrix,
    precompose_matrix,
    stack_cols,
    stack_rows,
    sum_inclusion,
    sum_projection,
)
from .linalg import Matrix, PrimeField


@dataclass
class Budget:
    """Search and scan limits; the multiplicity bounds themselves are proven."""

    seed: int = 1797
    retries: int = 10
    coeff_base: int = 4
    grid_cap: int = 500_000
    scan_random_per_pair: int = 2
    scan_pairs_cap: int = 400
    scan_double_objects: int = 4

    @classmethod
    def from_dict(cls, d: dict) -> "Budget":
        b = cls()
        for k, v in d.items():
            if not hasattr(b, k):
                raise ValueError(f"unknown budget key {k!r}")
            setattr(b, k, int(v))
        return b


DEFAULT_BUDGET = Budget()


# -- epi / mono / regular ---------------------------------------------------


def is_epi(Q: CategoryPresentation, f: Morphism) -> bool:
    """Epi iff precomposition with f is injective into every Hom(-, Z)."""
    for z in range(Q.n):
        Z = Q.single(z)
        d = Q.hom_space_dim(f.target, Z)
        if d and precompose_matrix(Q, f, Z).rank() != d:
            return False
    return True


def is_mono(Q: CategoryPresentation, f: Morphism) -> bool:
    for z in range(Q.n):
        Z = Q.single(z)
        d = Q.hom_space_dim(Z, f.source)
        if d and postcompose_matrix(Q, f, Z).rank() != d:
            return False
    return True


def is_regular(Q: CategoryPresentation, f: Morphism) -> bool:
    return is_epi(Q, f) and is_mono(Q, f)


def is_isomorphism(Q: CategoryPresentation, f: Morphism) -> bool:
    """Two-sided invertibility, decided by a linear solve."""
    inv = solve_two_sided_inverse(Q, f)
    return inv is not None


def solve_two_sided_inverse(Q: CategoryPresentation, f: Morphism):
    """Some g with g o f = id and f o g = id, or None."""
    X, Y = f.source, f.target
    dYX = Q.hom_space_dim(Y, X)
    basis = Q.hom_basis(Y, X)
    cols = []
    for g in basis:
        cols.append(compose(Q, g, f).to_vector() + compose(Q, f, g).to_vector())
    want = Q.identity(X).to_vector() + Q.identity(Y).to_vector()
    m = Matrix(
        Q.field,
        len(want),
        dYX,
        [[cols[j][i] for j in range(dYX)] for i in range(len(want))],
    )
    sol = m.solve(want)
    if sol is None:
        return None
    g = Q.zero_morphism(Y, X)
    for c, b in zip(sol, basis):
        if c != Q.field.zero:
            g = g + b.scale(c)
    return g


# -- the open-condition search engine -----------------------------------------


class RankCondition:
    """Require rank(builder(m)) >= required for the searched morphism m.

    builder must be linear in the coefficients of m for certification to be
    sound; every condition used here is a pre- or post-composition matrix.
    """

    def __init__(self, builder, required: int, label: str = ""):
        self.builder = builder
        self.required = required
        self.label = label

    def holds(self, m: Morphism) -> bool:
        if self.required <= 0:
            return True
        return self.builder(m).rank() >= self.required


class SearchResult:
    FOUND = "found"
    CERTIFIED_EMPTY = "certified-empty"

    def __init__(self, status: str, witness: Morphism | None = None):
        self.status = status
        self.witness = witness


def _combine(Q, X, Y, basis, coeffs) -> Morphism:
    m = Q.zero_morphism(X, Y)
    for c, b in zip(coeffs, basis):
        if c:
            m = m + b.scale(c)
    return m


def search_open_conditions(
    Q: CategoryPresentation,
    X: Obj,
    Y: Obj,
    subspace: list[Morphism],
    conditions: list[RankCondition],
    budget: Budget,
    salt: int = 0,
) -> SearchResult:
    """Find m in span(subspace) satisfying all rank conditions, certified.

    Returns FOUND with a witness, CERTIFIED_EMPTY when no element of the
    subspace can satisfy them, or raises BoundsExceeded.
    """
    field = Q.field
    d = len(subspace)
    live = [c for c in conditions if c.required > 0]
    if not live:
        return SearchResult(SearchResult.FOUND, _combine(Q, X, Y, subspace, [0] * d))
    if d == 0:
        zero = Q.zero_morphism(X, Y)
        if all(c.holds(zero) for c in live):
            return SearchResult(SearchResult.FOUND, zero)
        return SearchResult(SearchResult.CERTIFIED_EMPTY)

    # impossibility by shape: rank can never exceed min dimension
    for c in live:
        probe = c.builder(_combine(Q, X, Y, subspace, [0] * d))
        if c.required > min(probe.nrows, probe.ncols):
            return SearchResult(SearchResult.CERTIFIED_EMPTY)

    rng = random.Random(f"{budget.seed}:{salt}:{d}")
    for attempt in range(budget.retries):
        radius = budget.coeff_base ** (1 + attempt // 3)
        coeffs = [rng.randint(-radius, radius) for _ in range(d)]
        m = _combine(Q, X, Y, subspace, coeffs)
        if all(c.holds(m) for c in live):
            return SearchResult(SearchResult.FOUND, m)

    if isinstance(field, PrimeField):
        p = field.p
        if p**d > budget.grid_cap:
            raise BoundsExceeded(
                f"cannot certify over F_{p}: {p}^{d} exceeds the grid cap"
            )
        for coeffs in itertools.product(range(p), repeat=d):
            m = _combine(Q, X, Y, subspace, coeffs)
            if all(c.holds(m) for c in live):
                return SearchResult(SearchResult.FOUND, m)
        return SearchResult(SearchResult.CERTIFIED_EMPTY)

    # rational field: per-condition grid decides generic satisfiability
    for c in live:
        r = c.required
        if (r + 1) ** d > budget.grid_cap:
            raise BoundsExceeded(
                f"certification grid {(r + 1)}^{d} exceeds the cap"
            )
        sat = False
        for coeffs in itertools.product(range(r + 1), repeat=d):
            m = _combine(Q, X, Y, subspace, coeffs)
            if c.holds(m):
                sat = True
                break
        if not sat:
            # degree <= r per variable: vanishing on the whole grid is exact
            return SearchResult(SearchResult.CERTIFIED_EMPTY)

    # every condition is satisfiable, so their intersection is nonempty over
    # an infinite field; the product-of-minors degree bound makes the joint
    # grid below exhaustive
    D = sum(c.required for c in live)
    if (D + 1) ** d > budget.grid_cap:
        for attempt in range(4 * budget.retries):
            radius = budget.coeff_base ** (2 + attempt // 4)
            coeffs = [rng.randint(-radius, radius) for _ in range(d)]
            m = _combine(Q, X, Y, subspace, coeffs)
            if all(c.holds(m) for c in live):
                return SearchResult(SearchResult.FOUND, m)
        raise BoundsExceeded(f"joint grid {(D + 1)}^{d} exceeds the cap")
    for coeffs in itertools.product(range(D + 1), repeat=d):
        m = _combine(Q, X, Y, subspace, coeffs)
        if all(c.holds(m) for c in live):
            return SearchResult(SearchResult.FOUND, m)
    raise InternalInconsistency("joint grid missed a guaranteed witness")


# -- kernels and cokernels -----------------------------------------------------


def _candidate_multiplicities(bounds: list[int], rows: list[list[int]], targets: list[int]):
    """Solutions m of sum_i m_i * rows[z][i] = targets[z], within bounds."""
    n = len(bounds)
    out = []

    def rec(i, mult, remaining):
        if any(r < 0 for r in remaining):
            return
        if i == n:
            if all(r == 0 for r in remaining):
                out.append(tuple(mult))
            return
        # skip indecomposables that cannot contribute
        col = [rows[z][i] for z in range(len(rows))]
        for c in range(bounds[i] + 1):
            if c > 0 and all(v == 0 for v in col):
                break  # adding invisible summands never helps
            rec(i + 1, mult + [c], [r - c * v for r, v in zip(remaining, col)])

    rec(0, [], list(targets))
    out.sort(key=lambda m: (sum(m), m))
    return out


def cokernel(Q: CategoryPresentation, f: Morphism, budget: Budget = DEFAULT_BUDGET):
    """Cokernel of f by complete bounded search, or None (certified).

    The candidate target M is pinned by the exact dimension counts
    dim Hom(M, Z) = dim Hom(Y, Z) - rank(- o f) forced on any epi weak
    cokernel; the map c is then a generic element of {c : c o f = 0} subject
    to the per-object injectivity conditions.  An accepted c is an epi weak
    cokernel, hence a cokernel.
    """
    Y = f.target
    field = Q.field
    targets = []
    rows = []
    for z in range(Q.n):
        Z = Q.single(z)
        dYZ = Q.hom_space_dim(Y, Z)
        rk = precompose_matrix(Q, f, Z).rank() if dYZ else 0
        targets.append(dYZ - rk)
        rows.append([Q.hom_dim(i, z) for i in range(Q.n)])
    bounds = [Q.hom_space_dim(Y, Q.single(i)) for i in range(Q.n)]
    for mult in _candidate_multiplicities(bounds, rows, targets):
        M = Obj(mult)
        dYM = Q.hom_space_dim(Y, M)
        # subspace {c : c o f = 0}
        basis = Q.hom_basis(Y, M)
        cols = [compose(Q, b, f).to_vector() for b in basis]
        width = Q.hom_space_dim(f.source, M)
        mat = Matrix(field, width, dYM, [[cols[j][i] for j in range(dYM)] for i in range(width)])
        sub = [Q.morphism_from_vector(Y, M, v) for v in mat.kernel_basis()]
        conditions = []
        for z in range(Q.n):
            Z = Q.single(z)
            need = Q.hom_space_dim(M, Z)
            if need:
                conditions.append(
                    RankCondition(
                        lambda c, Z=Z: precompose_matrix(Q, c, Z),
                        need,
                        f"inj-into-{z}",
                    )
                )
        res = search_open_conditions(Q, Y, M, sub, conditions, budget, salt=hash(mult) & 0xFFFF)
        if res.status == SearchResult.FOUND:
            return (M, res.witness)
    return None


def kernel(Q: CategoryPresentation, f: Morphism, budget: Budget = DEFAULT_BUDGET):
    """Kernel of f: the cokernel search in the opposite presentation."""
    op = _op_of(Q)
    res = cokernel(op, op_morphism(op, f), budget)
    if res is None:
        return None
    K, c_op = res
    return (K, op_morphism(Q, c_op))


def _op_of(Q: CategoryPresentation) -> CategoryPresentation:
    cached = getattr(Q, "_op_cache", None)
    if cached is None:
        cached = opposite(Q)
        cached._op_cache = Q
        Q._op_cache = cached
    return cached


# -- limit squares ---------------------------------------------------------------


@dataclass
class LimitSquare:
    """Commuting square c o a = d o b with a: A->B, b: A->C, c: B->D, d: C->D."""

    A: Obj
    B: Obj
    C: Obj
    D: Obj
    a: Morphism
    b: Morphism
    c: Morphism
    d: Morphism

    def check_commutes(self, Q: CategoryPresentation) -> bool:
        return compose(Q, self.c, self.a) == compose(Q, self.d, self.b)


def pullback(Q: CategoryPresentation, c: Morphism, d: Morphism, budget: Budget = DEFAULT_BUDGET) -> LimitSquare:
    """Kernel-based pullback of c: B -> D and d: C -> D."""
    if c.target != d.target:
        raise ShapeError("pullback needs a common target")
    B, C = c.source, d.source
    diff = stack_cols(Q, [c, d.scale(-1)])
    res = kernel(Q, diff, budget)
    if res is None:
        raise NoKernel("difference map has no kernel: presentation is not preabelian here")
    A, j = res
    a = compose(Q, sum_projection(Q, [B, C], 0), j)
    b = compose(Q, sum_projection(Q, [B, C], 1), j)
    sq = LimitSquare(A, B, C, c.target, a, b, c, d)
    if not sq.check_commutes(Q):
        raise InternalInconsistency("pullback square does not commute")
    return sq


def pushout(Q: CategoryPresentation, a: Morphism, b: Morphism, budget: Budget = DEFAULT_BUDGET) -> LimitSquare:
    """Cokernel-based pushout of a: A -> B and b: A -> C."""
    if a.source != b.source:
        raise ShapeError("pushout needs a common source")
    B, C = a.target, b.target
    diff = stack_rows(Q, [a, b.scale(-1)])
    res = cokernel(Q, diff, budget)
    if res is None:
        raise NoCokernel("difference map has no cokernel: presentation is not preabelian here")
    D, e = res
    c = compose(Q, e, sum_inclusion(Q, [B, C], 0))
    d = compose(Q, e, sum_inclusion(Q, [B, C], 1))
    sq = LimitSquare(a.source, B, C, D, a, b, c, d)
    if not sq.check_commutes(Q):
        raise InternalInconsistency("pushout square does not commute")
    return sq


def mediating_to_pullback(Q: CategoryPresentation, sq: LimitSquare, u: Morphism, v: Morphism):
    """Solve a o w = u, b o w = v for a cone (u, v); None if no mediator."""
    W = u.source
    basis = Q.hom_basis(W, sq.A)
    cols = [
        compose(Q, sq.a, w).to_vector() + compose(Q, sq.b, w).to_vector() for w in basis
    ]
    want = u.to_vector() + v.to_vector()
    m = Matrix(
        Q.field,
        len(want),
        len(basis),
        [[cols[j][i] for j in range(len(basis))] for i in range(len(want))],
    )
    sol = m.solve(want)
    if sol is None:
        return None
    return _combine(Q, W, sq.A, basis, sol)


def factors_through_map(Q: CategoryPresentation, f: Morphism, c: Morphism):
    """Some g with g o c = f (c and f sharing their source), or None."""
    basis = Q.hom_basis(c.target, f.target)
    cols = [compose(Q, g, c).to_vector() for g in basis]
    want = f.to_vector()
    m = Matrix(
        Q.field,
        len(want),
        len(basis),
        [[cols[j][i] for j in range(len(basis))] for i in range(len(want))],
    )
    sol = m.solve(want)
    if sol is None:
        return None
    return _combine(Q, c.target, f.target, basis, sol)


def lifts_through_epi(Q: CategoryPresentation, f: Morphism, c: Morphism):
    """Some g with c o g = f (c and f sharing their target), or None."""
    basis = Q.hom_basis(f.source, c.source)
    cols = [compose(Q, c, g).to_vector() for g in basis]
    want = f.to_vector()
    m = Matrix(
        Q.field,
        len(want),
        len(basis),
        [[cols[j][i] for j in range(len(basis))] for i in range(len(want))],
    )
    sol = m.solve(want)
    if sol is None:
        return None
    return _combine(Q, f.source, c.source, basis, sol)


# -- coimage / image factorisation -------------------------------------------------


@dataclass
class Factorisation:
    """f = v o ftilde o u with u a cokernel of ker f and v a kernel of coker f."""

    coim: Obj
    im: Obj
    u: Morphism
    ftilde: Morphism
    v: Morphism


def coim_im_factorise(Q: CategoryPresentation, f: Morphism, budget: Budget = DEFAULT_BUDGET) -> Factorisation:
    kres = kernel(Q, f, budget)
    if kres is None:
        raise NoKernel("morphism has no kernel")
    K, kj = kres
    cres = cokernel(Q, f, budget)
    if cres is None:
        raise NoCokernel("morphism has no cokernel")
    Mc, ck = cres
    ures = cokernel(Q, kj, budget)
    if ures is None:
        raise NoCokernel("kernel inclusion has no cokernel")
    Coim, u = ures
    vres = kernel(Q, ck, budget)
    if vres is None:
        raise NoKernel("cokernel map has no kernel")
    Im, v = vres
    w = factors_through_map(Q, f, u)
    if w is None:
        raise InternalInconsistency("f does not factor through its coimage")
    ftilde = lifts_through_epi(Q, w, v)
    if ftilde is None:
        raise InternalInconsistency("coimage map does not factor through the image")
    if compose(Q, v, compose(Q, ftilde, u)) != f:
        raise InternalInconsistency("coim-im factorisation does not recompose")
    return Factorisation(Coim, Im, u, ftilde, v)


# -- morphism families for scans ------------------------------------------------


@dataclass
class MorphismFamily:
    all: list = dc_field(default_factory=list)
    epis: list = dc_field(default_factory=list)
    monos: list = dc_field(default_factory=list)
    regulars: list = dc_field(default_factory=list)
    cokernel_maps: list = dc_field(default_factory=list)
    kernel_maps: list = dc_field(default_factory=list)


def build_morphism_family(Q: CategoryPresentation, budget: Budget = DEFAULT_BUDGET, derived: bool = True) -> MorphismFamily:
    """Basis morphisms, identities, and seeded random maps, classified.

    With derived=True the kernel/cokernel maps of all basis morphisms are
    added, giving the scan genuine cokernel-type and kernel-type entries.
    """
    fam = MorphismFamily()
    rng = random.Random(f"{budget.seed}:family")
    singles = [Q.single(i) for i in range(Q.n)]
    pairs = []
    for i in range(Q.n):
        for j in range(i, Q.n):
            pairs.append(Q.single(i) + Q.single(j))
    objects = singles + pairs[: budget.scan_double_objects]
    for X in objects:
        for Y in objects:
            d = Q.hom_space_dim(X, Y)
            if d == 0:
                continue
            items = []
            if X.total == 1 and Y.total == 1:
                items.extend(Q.hom_basis(X, Y))
            for _ in range(budget.scan_random_per_pair):
                vec = [Q.field.of(rng.randint(-2, 2)) for _ in range(d)]
                items.append(Q.morphism_from_vector(X, Y, vec))
            for m in items:
                if m.is_zero():
                    continue
                fam.all.append(m)
    for i in range(Q.n):
        fam.all.append(Q.identity(Q.single(i)))
    for m in fam.all:
        e, mo = is_epi(Q, m), is_mono(Q, m)
        if e:
            fam.epis.append(m)
        if mo:
            fam.monos.append(m)
        if e and mo:
            fam.regulars.append(m)
    if derived:
        for i in range(Q.n):
            for j in range(Q.n):
                for a in range(Q.hom_dim(i, j)):
                    f = Q.basis_morphism(i, j, a)
                    cres = cokernel(Q, f, budget)
                    if cres is not None:
                        fam.cokernel_maps.append(cres[1])
                    kres = kernel(Q, f, budget)
                    if kres is not None:
                        fam.kernel_maps.append(kres[1])
    return fam


# -- property scans -----------------------------------------------------------------


@dataclass
class ClauseResult:
    status: str  # "pass" | "fail" | "bounds-exceeded"
    checked: int = 0
    detail: str = ""

    def as_dict(self):
        return {"status": self.status, "checked": self.checked, "detail": self.detail}


@dataclass
class PropertyReport:
    clauses: dict = dc_field(default_factory=dict)

    @property
    def preabelian(self) -> bool:
        return self.clauses.get("preabelian", ClauseResult("fail")).status == "pass"

    @property
    def integral(self) -> bool:
        return self.preabelian and all(
            self.clauses[k].status == "pass"
            for k in ("pullback_epi_leg", "pushout_mono_leg")
            if k in self.clauses
        )

    def as_dict(self):
        return {k: v.as_dict() for k, v in self.clauses.items()}


def scan_properties(Q: CategoryPresentation, budget: Budget = DEFAULT_BUDGET) -> PropertyReport:
    """Bounded exhaustive check of preabelian / semi-abelian / integral clauses."""
    report = PropertyReport()
    # preabelian: kernel + cokernel existence over all basis morphisms
    checked = 0
    failure = None
    try:
        for i in range(Q.n):
            for j in range(Q.n):
                for a in range(Q.hom_dim(i, j)):
                    f = Q.basis_morphism(i, j, a)
                    if cokernel(Q, f, budget) is None:
                        failure = f"no cokernel for basis ({Q.objects[i]} -> {Q.objects[j]}, {a})"
                        raise _ScanStop
                    if kernel(Q, f, budget) is None:
                        failure = f"no kernel for basis ({Q.objects[i]} -> {Q.objects[j]}, {a})"
                        raise _ScanStop
                    checked += 1
    except _ScanStop:
        pass
    except BoundsExceeded as e:
        report.clauses["preabelian"] = ClauseResult("bounds-exceeded", checked, str(e))
    if "preabelian" not in report.clauses:
        report.clauses["preabelian"] = (
            ClauseResult("pass", checked)
            if failure is None
            else ClauseResult("fail", checked, failure)
        )
    if failure is not None:
        # pullback clauses are meaningless without kernels
        return report

    fam = build_morphism_family(Q, budget)

    def run_pullback_clause(name, given, predicate_leg):
        # the leg a: A -> B is the pullback of the given d: C -> D along c
        count = 0
        for d in given:
            for c in fam.all:
                if c.target != d.target:
                    continue
                if count >= budget.scan_pairs_cap:
                    break
                try:
                    sq = pullback(Q, c, d, budget)
                except (NoKernel, BoundsExceeded) as e:
                    report.clauses[name] = ClauseResult("fail", count, f"pullback failed: {e}")
                    return
                count += 1
                if not predicate_leg(sq.a):
                    report.clauses[name] = ClauseResult(
                        "fail",
                        count,
                        f"leg fails for d: {Q.obj_name(d.source)} -> {Q.obj_name(d.target)}",
                    )
                    return
        report.clauses[name] = ClauseResult("pass", count)

    def run_pushout_clause(name, given, predicate_leg):
        # the leg d: C -> D is the pushout of the given a: A -> B along b
        count = 0
        for a in given:
            for b in fam.all:
                if a.source != b.source:
                    continue
                if count >= budget.scan_pairs_cap:
                    break
                try:
                    sq = pushout(Q, a, b, budget)
                except (NoCokernel, BoundsExceeded) as e:
                    report.clauses[name] = ClauseResult("fail", count, f"pushout failed: {e}")
                    return
                count += 1
                if not predicate_leg(sq.d):
                    report.clauses[name] = ClauseResult(
                        "fail",
                        count,
                        f"leg fails for a: {Q.obj_name(a.source)} -> {Q.obj_name(a.target)}",
                    )
                    return
        report.clauses[name] = ClauseResult("pass", count)

    run_pullback_clause("pullback_cokernel_leg", fam.cokernel_maps, lambda m: is_epi(Q, m))
    run_pullback_clause("pullback_epi_leg", fam.epis, lambda m: is_epi(Q, m))
    run_pullback_clause("pullback_mono_leg", fam.monos, lambda m: is_mono(Q, m))
    run_pullback_clause("pullback_regular_leg", fam.regulars, lambda m: is_regular(Q, m))
    run_pushout_clause("pushout_kernel_leg", fam.kernel_maps, lambda m: is_mono(Q, m))
    run_pushout_clause("pushout_mono_leg", fam.monos, lambda m: is_mono(Q, m))
    run_pushout_clause("pushout_epi_leg", fam.epis, lambda m: is_epi(Q, m))
    run_pushout_clause("pushout_regular_leg", fam.regulars, lambda m: is_regular(Q, m))
    return report


class _ScanStop(Exception):
    pass


# -- projective / injective objects ---------------------------------------------------


def is_projective_object(
    Q: CategoryPresentation,
    X: Obj,
    budget: Budget = DEFAULT_BUDGET,
    family: MorphismFamily | None = None,
) -> bool:
    """Lifting property of X against every epi in the enumeration budget.

    Factoring every f: X -> C through c: B -> C is the single rank condition
    rank(c o -) = dim Hom(X, C).
    """
    fam = family or build_morphism_family(Q, budget)
    for c in fam.epis:
        dXC = Q.hom_space_dim(X, c.target)
        if dXC == 0:
            continue
        if postcompose_matrix(Q, c, X).rank() != dXC:
            return False
    return True


def is_injective_object(
    Q: CategoryPresentation,
    X: Obj,
    budget: Budget = DEFAULT_BUDGET,
    family: MorphismFamily | None = None,
) -> bool:
    fam = family or build_morphism_family(Q, budget)
    for j in fam.monos:
        dAX = Q.hom_space_dim(j.source, X)
        if dAX == 0:
            continue
        if precompose_matrix(Q, j, X).rank() != dAX:
            return False
    return True
