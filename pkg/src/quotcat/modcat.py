"""The module side: End(T)-opposite algebra, the T-hom functor, equivalence.

H = Hom(T, -) sends the ambient category to right End(T)-modules, realised
as left modules over the opposite algebra via pre-composition action.  The
bridge identities (a map is inverted by H iff its image in the quotient is
regular) and the clauses of the module-category equivalence are all
checked here with exact linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import NotInS
from .fincat import (
    CategoryPresentation,
    Morphism,
    Obj,
    compose,
    postcompose_matrix,
    precompose_matrix,
)
from .linalg import Matrix, RowSpace
from .preabelian import (
    Budget,
    ClauseResult,
    DEFAULT_BUDGET,
    RankCondition,
    SearchResult,
    is_regular,
    precompose_matrix as _pre,
    search_open_conditions,
)
from .quotient import QuotientCategory, factors_through


class Algebra:
    """A finite-dimensional algebra by structure constants (here End(T)^op)."""

    def __init__(self, field, dim: int, mult, identity, labels=None):
        self.field = field
        self.dim = dim
        self.mult = mult  # mult[a][b] = coeff vector of (basis a) * (basis b)
        self.identity = list(identity)
        self.labels = labels or [str(i) for i in range(dim)]

    def multiply(self, u, v):
        f = self.field
        out = [f.zero] * self.dim
        for a, ua in enumerate(u):
            if ua == f.zero:
                continue
            row = self.mult[a]
            for b, vb in enumerate(v):
                if vb == f.zero:
                    continue
                coeff = f.mul(ua, vb)
                for c, x in enumerate(row[b]):
                    if x != f.zero:
                        out[c] = f.add(out[c], f.mul(coeff, x))
        return out

    def check_associative_unital(self) -> bool:
        f = self.field
        e = self.identity
        for a in range(self.dim):
            ua = [f.one if i == a else f.zero for i in range(self.dim)]
            if self.multiply(e, ua) != ua or self.multiply(ua, e) != ua:
                return False
        for a in range(self.dim):
            ua = [f.one if i == a else f.zero for i in range(self.dim)]
            for b in range(self.dim):
                ub = [f.one if i == b else f.zero for i in range(self.dim)]
                ab = self.multiply(ua, ub)
                for c in range(self.dim):
                    uc = [f.one if i == c else f.zero for i in range(self.dim)]
                    if self.multiply(ab, uc) != self.multiply(ua, self.multiply(ub, uc)):
                        return False
        return True


def endomorphism_algebra(P: CategoryPresentation, T: Obj) -> Algebra:
    """End(T) with the opposite multiplication: x * y is (y then x) in C."""
    d = P.hom_space_dim(T, T)
    basis = P.hom_basis(T, T)
    mult = []
    for a in range(d):
        row = []
        for b in range(d):
            # opposite product: a * b is the composite (b then a) reversed,
            # i.e. compose(b, a) in the original category
            row.append(compose(P, basis[b], basis[a]).to_vector())
        mult.append(row)
    ident = P.identity(T).to_vector()
    return Algebra(P.field, d, mult, ident)


class GammaModule:
    """Hom(T, X) with the pre-composition action of End(T)^op."""

    def __init__(self, P: CategoryPresentation, T: Obj, X: Obj):
        self.P = P
        self.T = T
        self.X = X
        self.dim = P.hom_space_dim(T, X)
        self.actions = []
        for e in P.hom_basis(T, T):
            self.actions.append(precompose_matrix(P, e, X))

    def check_module_axioms(self, algebra: Algebra) -> bool:
        f = self.P.field
        ident = Matrix.zeros(f, self.dim, self.dim)
        for k, c in enumerate(algebra.identity):
            if c != f.zero:
                ident = ident + self.actions[k].scale(c)
        if ident != Matrix.identity(f, self.dim):
            return False
        for a in range(algebra.dim):
            for b in range(algebra.dim):
                prod = algebra.mult[a][b]
                lhs = Matrix.zeros(f, self.dim, self.dim)
                for k, c in enumerate(prod):
                    if c != f.zero:
                        lhs = lhs + self.actions[k].scale(c)
                if lhs != self.actions[a] * self.actions[b]:
                    return False
        return True


@dataclass
class ModuleMap:
    source: GammaModule
    target: GammaModule
    matrix: Matrix

    def commutes_with_actions(self) -> bool:
        return all(
            self.matrix * am == an * self.matrix
            for am, an in zip(self.source.actions, self.target.actions)
        )

    def is_isomorphism(self) -> bool:
        m = self.matrix
        return m.nrows == m.ncols and m.rank() == m.nrows


class HFunctor:
    """Hom(T, -) from the parent presentation to Gamma-modules."""

    def __init__(self, P: CategoryPresentation, T: Obj):
        self.P = P
        self.T = T
        self.algebra = endomorphism_algebra(P, T)
        self._modules: dict[tuple, GammaModule] = {}

    def module(self, X: Obj) -> GammaModule:
        if X.mult not in self._modules:
            self._modules[X.mult] = GammaModule(self.P, self.T, X)
        return self._modules[X.mult]

    def mor_matrix(self, f: Morphism) -> Matrix:
        """Matrix of Hom(T, source f) -> Hom(T, target f)."""
        return postcompose_matrix(self.P, f, self.T)

    def mor(self, f: Morphism) -> ModuleMap:
        return ModuleMap(self.module(f.source), self.module(f.target), self.mor_matrix(f))


def h_object(P: CategoryPresentation, T: Obj, X: Obj) -> GammaModule:
    return GammaModule(P, T, X)


def h_mor(P: CategoryPresentation, T: Obj, f: Morphism) -> ModuleMap:
    return HFunctor(P, T).mor(f)


def in_s(P: CategoryPresentation, T: Obj, f: Morphism, H: HFunctor | None = None) -> bool:
    """Membership in the inverted class: H(f) is a module isomorphism."""
    H = H or HFunctor(P, T)
    m = H.mor_matrix(f)
    return m.nrows == m.ncols and m.rank() == m.nrows


def h_fraction(H: HFunctor, qc: QuotientCategory, F) -> Matrix:
    """H(numerator) o H(denominator)^{-1}, through arbitrary lifts.

    Lift independence: maps factoring through X_T have zero H-image, so any
    parent representatives give the same matrix.
    """
    r_lift = qc.lift(F.denom)
    f_lift = qc.lift(F.num)
    hr = H.mor_matrix(r_lift)
    if hr.nrows != hr.ncols or hr.rank() != hr.nrows:
        raise NotInS("fraction denominator is not inverted by Hom(T, -)")
    return H.mor_matrix(f_lift) * hr.inverse()


def module_hom_space(M: GammaModule, N: GammaModule) -> list[ModuleMap]:
    """Basis of the matrices commuting with every action matrix."""
    f = M.P.field
    total = N.dim * M.dim
    rows = []
    for am, an in zip(M.actions, N.actions):
        # constraint: Phi * am - an * Phi = 0
        for i in range(N.dim):
            for j in range(M.dim):
                row = [f.zero] * total
                for l in range(M.dim):
                    row[i * M.dim + l] = f.add(row[i * M.dim + l], am.data[l][j])
                for l in range(N.dim):
                    row[l * M.dim + j] = f.sub(row[l * M.dim + j], an.data[i][l])
                rows.append(row)
    mat = Matrix(f, len(rows), total, rows)
    out = []
    for v in mat.kernel_basis():
        data = [v[i * M.dim : (i + 1) * M.dim] for i in range(N.dim)]
        out.append(ModuleMap(M, N, Matrix(f, N.dim, M.dim, data)))
    return out


# -- the equivalence verifier ---------------------------------------------------


@dataclass
class EquivalenceReport:
    clauses: dict = dc_field(default_factory=dict)
    witnesses: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.clauses.values())

    def as_dict(self):
        return {k: v.as_dict() for k, v in self.clauses.items()}


def _image_rowspace(field, vectors):
    rs = RowSpace(field, len(vectors[0]) if vectors else 0)
    for v in vectors:
        rs.add(v)
    return rs


def realize_module_map(
    H: HFunctor,
    qc: QuotientCategory,
    x: int,
    y: int,
    phi: Matrix,
    budget: Budget = DEFAULT_BUDGET,
):
    """A fraction F: x => y with h_fraction(F) = phi, or None (certified).

    Searches regular denominators r: A -> x with the kernel-style bound
    mult_i(A) <= dim Hom_Q(i, x); the numerator condition is the linear
    constraint phi o H(r) in image(H on Hom(A, y)).
    """
    Q = qc.presentation
    P = qc.parent
    X, Y = Q.single(x), Q.single(y)
    bounds = [Q.hom_space_dim(Q.single(i), X) for i in range(Q.n)]
    field = Q.field

    def candidates():
        ranges = []

        def rec(prefix):
            if len(prefix) == Q.n:
                ranges.append(tuple(prefix))
                return
            for c in range(bounds[len(prefix)] + 1):
                rec(prefix + [c])

        rec([])
        ranges.sort(key=lambda m: (sum(m), m))
        return [Obj(m) for m in ranges if sum(m) > 0]

    from .localization import Fraction

    for A in candidates():
        A_par = qc.lift_obj(A)
        dAX = Q.hom_space_dim(A, X)
        if dAX == 0:
            continue
        # image of H on Hom_C(A, y), flattened
        g_basis = P.hom_basis(A_par, qc.lift_obj(Y))
        img_vecs = []
        for g in g_basis:
            hg = H.mor_matrix(g)
            img_vecs.append([hg.data[i][j] for i in range(hg.nrows) for j in range(hg.ncols)])
        # feasible denominators: phi o H(lift r) lands in that image
        r_basis = Q.hom_basis(A, X)
        cols = []
        for rq in r_basis:
            hr = H.mor_matrix(qc.lift(rq))
            prod = phi * hr
            cols.append([prod.data[i][j] for i in range(prod.nrows) for j in range(prod.ncols)])
        w = len(cols[0]) if cols else 0
        unknowns = dAX + len(g_basis)
        rows = []
        for pos in range(w):
            row = [field.zero] * unknowns
            for k in range(dAX):
                row[k] = cols[k][pos]
            for l in range(len(g_basis)):
                row[dAX + l] = field.neg(img_vecs[l][pos]) if img_vecs else field.zero
            rows.append(row)
        mat = Matrix(field, len(rows), unknowns, rows)
        proj = RowSpace(field, dAX)
        sub_vecs = []
        for v in mat.kernel_basis():
            c = v[:dAX]
            if proj.add(c):
                sub_vecs.append(c)
        subspace = [Q.morphism_from_vector(A, X, v) for v in proj.rows]
        if not subspace:
            continue
        conditions = []
        for z in range(Q.n):
            Z = Q.single(z)
            need_epi = Q.hom_space_dim(X, Z)
            if need_epi:
                conditions.append(
                    RankCondition(lambda r, Z=Z: _pre(Q, r, Z), need_epi, f"epi-{z}")
                )
            need_mono = Q.hom_space_dim(Z, A)
            if need_mono:
                conditions.append(
                    RankCondition(
                        lambda r, Z=Z: postcompose_matrix(Q, r, Z), need_mono, f"mono-{z}"
                    )
                )
        res = search_open_conditions(
            Q, A, X, subspace, conditions, budget, salt=hash(("full", x, y, A.mult)) & 0xFFFF
        )
        if res.status != SearchResult.FOUND:
            continue
        r = res.witness
        # solve the numerator: H(f_lift) = phi o H(r_lift), unique mod ker H
        hr = H.mor_matrix(qc.lift(r))
        want_m = phi * hr
        want = [want_m.data[i][j] for i in range(want_m.nrows) for j in range(want_m.ncols)]
        sol_mat = Matrix(
            field,
            len(want),
            len(g_basis),
            [[img_vecs[l][pos] for l in range(len(g_basis))] for pos in range(len(want))],
        )
        sol = sol_mat.solve(want)
        if sol is None:
            continue
        f_par = P.zero_morphism(A_par, qc.lift_obj(Y))
        for c, g in zip(sol, g_basis):
            if c != field.zero:
                f_par = f_par + g.scale(c)
        F = Fraction(Q, r, qc.project(f_par))
        got = h_fraction(H, qc, F)
        if got == phi:
            return F
    return None


def verify_equivalence(
    P: CategoryPresentation,
    T: Obj,
    qc: QuotientCategory | None = None,
    budget: Budget = DEFAULT_BUDGET,
    H: HFunctor | None = None,
) -> EquivalenceReport:
    """Certified clauses of the equivalence with mod End(T)^op.

    FAITHFUL: the kernel of H on each Hom space is exactly the maps
    factoring through X_T.  FULL: every module homomorphism between images
    of indecomposables is realised by a fraction.  PROJECTIVES: the
    localised projectives are exactly add T, and End dimensions agree.
    """
    from .quotient import build_quotient

    report = EquivalenceReport()
    qc = qc or build_quotient(P, T, validate=False)
    Q = qc.presentation
    H = H or HFunctor(P, T)

    # clause: FAITHFUL
    checked = 0
    status, detail = "pass", ""
    for i in range(P.n):
        for j in range(P.n):
            for a in range(P.hom_dim(i, j)):
                f = P.basis_morphism(i, j, a)
                hz = H.mor_matrix(f).is_zero()
                ft = factors_through(P, f, qc.xt)
                checked += 1
                if hz != ft:
                    status = "fail"
                    detail = f"kernel mismatch at basis ({P.objects[i]} -> {P.objects[j]}, {a})"
                    break
            if status == "fail":
                break
        if status == "fail":
            break
    # dimension form of the same identity, per pair
    if status == "pass":
        for i in qc.keep:
            for j in qc.keep:
                d = P.hom_dim(i, j)
                if d == 0:
                    continue
                vecs = []
                for a in range(d):
                    m = H.mor_matrix(P.basis_morphism(i, j, a))
                    vecs.append([m.data[r][c] for r in range(m.nrows) for c in range(m.ncols)])
                rs = _image_rowspace(P.field, vecs)
                if rs.dim != len(qc.rep_coords[(i, j)]):
                    status = "fail"
                    detail = f"H-image dimension mismatch on ({P.objects[i]}, {P.objects[j]})"
                    break
            if status == "fail":
                break
    report.clauses["faithful"] = ClauseResult(status, checked, detail)

    # clause: FULL
    checked = 0
    status, detail = "pass", ""
    witnesses = []
    for x in range(Q.n):
        for y in range(Q.n):
            Mx = H.module(qc.lift_obj(Q.single(x)))
            My = H.module(qc.lift_obj(Q.single(y)))
            for phi in module_hom_space(Mx, My):
                if phi.matrix.is_zero():
                    continue
                checked += 1
                try:
                    F = realize_module_map(H, qc, x, y, phi.matrix, budget)
                except NotInS as e:
                    status, detail = "fail", f"inconsistent functor data: {e}"
                    break
                if F is None:
                    status = "fail"
                    detail = f"unrealised module map {Q.objects[x]} -> {Q.objects[y]}"
                    break
                nontrivial = not is_regular(Q, F.denom) or F.denom.source != F.denom.target
                witnesses.append((Q.objects[x], Q.objects[y], nontrivial))
            if status == "fail":
                break
        if status == "fail":
            break
    report.clauses["full"] = ClauseResult(status, checked, detail)
    report.witnesses["full"] = witnesses

    # clause: PROJECTIVES (localised projectives = add T up to isomorphism)
    checked = 0
    status, detail = "pass", ""
    tsupp = {i for i in T.support()}
    from .fincat import approximation

    for x in range(Q.n):
        parent_idx = qc.keep[x]
        appr = approximation(P, sorted(tsupp), P.single(parent_idx), "right")
        qa = qc.project(appr)
        split = _fraction_split_epi(qc, qa, budget)
        in_add_t = parent_idx in tsupp or _iso_to_add_t(qc, x, tsupp, budget)
        checked += 1
        if split != in_add_t:
            status = "fail"
            detail = f"localised projectivity mismatch at {P.objects[parent_idx]}"
            break
    if status == "pass":
        dT = P.hom_space_dim(T, T)
        dMod = len(module_hom_space(H.module(T), H.module(T)))
        if dT != dMod:
            status = "fail"
            detail = f"End dimension mismatch: {dT} vs {dMod}"
    report.clauses["projectives"] = ClauseResult(status, checked, detail)
    return report


def _fraction_split_epi(qc: QuotientCategory, qa: Morphism, budget: Budget) -> bool:
    """Split-epi test for the localised image of qa: T0 -> X.

    The identity of X factors through [qa] iff some g: B -> T0 with
    regular composite qa o g exists, B bounded as in the kernel search.
    """
    Q = qc.presentation
    X = qa.target
    bounds = [Q.hom_space_dim(Q.single(i), X) for i in range(Q.n)]

    cands = []

    def rec(prefix):
        if len(prefix) == Q.n:
            cands.append(tuple(prefix))
            return
        for c in range(bounds[len(prefix)] + 1):
            rec(prefix + [c])

    rec([])
    cands.sort(key=lambda m: (sum(m), m))
    for mult in cands:
        if sum(mult) == 0:
            continue
        B = Obj(mult)
        subspace = Q.hom_basis(B, qa.source)
        if not subspace:
            continue
        conditions = []
        for z in range(Q.n):
            Z = Q.single(z)
            need_epi = Q.hom_space_dim(X, Z)
            if need_epi:
                conditions.append(
                    RankCondition(
                        lambda g, Z=Z: _pre(Q, compose(Q, qa, g), Z), need_epi, f"epi-{z}"
                    )
                )
            need_mono = Q.hom_space_dim(Z, B)
            if need_mono:
                conditions.append(
                    RankCondition(
                        lambda g, Z=Z: postcompose_matrix(Q, compose(Q, qa, g), Z),
                        need_mono,
                        f"mono-{z}",
                    )
                )
        res = search_open_conditions(
            Q, B, qa.source, subspace, conditions, budget, salt=hash(("split", X.mult, mult)) & 0xFFFF
        )
        if res.status == SearchResult.FOUND:
            return True
    return False


def _iso_to_add_t(qc: QuotientCategory, x: int, tsupp, budget: Budget) -> bool:
    """Whether x is localised-isomorphic to some object of add T.

    The partner may be decomposable (semisimple degenerations), so all
    bounded multiplicity vectors over the T-summands are tried.
    """
    Q = qc.presentation
    X = Q.single(x)
    t_q = sorted(qc._q_index[t] for t in tsupp)
    caps = {t: Q.hom_space_dim(Q.single(t), X) for t in t_q}
    partners = []

    def rec(idx, current):
        if idx == len(t_q):
            if sum(current.values()):
                partners.append(dict(current))
            return
        t = t_q[idx]
        for c in range(caps[t] + 1):
            current[t] = c
            rec(idx + 1, current)
        current.pop(t, None)

    rec(0, {})
    partners.sort(key=lambda d: sum(d.values()))
    for part in partners:
        mult = [0] * Q.n
        for t, c in part.items():
            mult[t] = c
        if iso_fraction_exists(qc, x, Obj(tuple(mult)), budget):
            return True
    return False


def iso_fraction_exists(qc: QuotientCategory, x: int, w, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Whether a roof with two regular legs connects x and w in the quotient.

    Such a roof is precisely an isomorphism of the localised category.  The
    search runs over maps into the direct sum, so both legs are linear in one
    searched element.
    """
    from .fincat import sum_projection

    Q = qc.presentation
    X = Q.single(x)
    W = Q.single(w) if isinstance(w, int) else w
    bounds = [
        min(Q.hom_space_dim(Q.single(i), X), Q.hom_space_dim(Q.single(i), W))
        for i in range(Q.n)
    ]
    cands = []

    def rec(prefix):
        if len(prefix) == Q.n:
            cands.append(tuple(prefix))
            return
        for c in range(bounds[len(prefix)] + 1):
            rec(prefix + [c])

    rec([])
    cands.sort(key=lambda m: (sum(m), m))
    target_parts = [X, W]
    for mult in cands:
        if sum(mult) == 0:
            continue
        A = Obj(mult)
        XW = X + W
        subspace = Q.hom_basis(A, XW)
        if not subspace:
            continue
        projX = sum_projection(Q, target_parts, 0)
        projW = sum_projection(Q, target_parts, 1)
        conditions = []
        for leg_proj, tgt in ((projX, X), (projW, W)):
            for z in range(Q.n):
                Z = Q.single(z)
                need_epi = Q.hom_space_dim(tgt, Z)
                if need_epi:
                    conditions.append(
                        RankCondition(
                            lambda h, Z=Z, lp=leg_proj: _pre(Q, compose(Q, lp, h), Z),
                            need_epi,
                            "leg-epi",
                        )
                    )
                need_mono = Q.hom_space_dim(Z, A)
                if need_mono:
                    conditions.append(
                        RankCondition(
                            lambda h, Z=Z, lp=leg_proj: postcompose_matrix(Q, compose(Q, lp, h), Z),
                            need_mono,
                            "leg-mono",
                        )
                    )
        res = search_open_conditions(
            Q, A, XW, subspace, conditions, budget,
            salt=hash(("iso", x, tuple(W.mult), mult)) & 0xFFFF,
        )
        if res.status == SearchResult.FOUND:
            return True
    return False
