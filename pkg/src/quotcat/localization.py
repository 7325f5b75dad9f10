"""Localisation of an integral presentation at its regular morphisms.

Morphisms of the localised category are right fractions: a roof
X <- A -> Y whose backwards leg is regular.  Composition completes squares
by pullback, equality is decided on a pullback of denominators, and
kernels/cokernels transfer from the underlying category.  All of it is
exact linear algebra on the quotient presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import NoCokernel, NoKernel, NotRegular, ShapeError
from .fincat import CategoryPresentation, Morphism, Obj, compose
from .preabelian import (
    Budget,
    ClauseResult,
    DEFAULT_BUDGET,
    build_morphism_family,
    coim_im_factorise,
    cokernel,
    is_epi,
    is_mono,
    is_regular,
    kernel,
    pullback,
    pushout,
)


class Fraction:
    """A right fraction [r, f]: the roof X <-r- A -f-> Y with r regular."""

    __slots__ = ("Q", "source", "target", "aux", "denom", "num")

    def __init__(self, Q: CategoryPresentation, denom: Morphism, num: Morphism, _checked: bool = False):
        if denom.source != num.source:
            raise ShapeError("fraction legs must share their auxiliary object")
        if not _checked and not is_regular(Q, denom):
            raise NotRegular("fraction denominator is not regular")
        self.Q = Q
        self.aux = denom.source
        self.source = denom.target
        self.target = num.target
        self.denom = denom
        self.num = num

    def __repr__(self):
        Q = self.Q
        return (
            f"Fraction({Q.obj_name(self.source)} <= {Q.obj_name(self.aux)}"
            f" => {Q.obj_name(self.target)})"
        )


def from_morphism(Q: CategoryPresentation, f: Morphism) -> Fraction:
    """The image [id, f] of f under the localisation functor."""
    return Fraction(Q, Q.identity(f.source), f, _checked=True)


def identity_fraction(Q: CategoryPresentation, X: Obj) -> Fraction:
    return from_morphism(Q, Q.identity(X))


def invert_regular(Q: CategoryPresentation, r: Morphism) -> Fraction:
    """[r, id]: the formal inverse of a regular morphism."""
    if not is_regular(Q, r):
        raise NotRegular("cannot invert: morphism is not regular")
    return Fraction(Q, r, Q.identity(r.source), _checked=True)


def compose_fractions(Q: CategoryPresentation, G: Fraction, F: Fraction, budget: Budget = DEFAULT_BUDGET) -> Fraction:
    """G o F via the square completion of (numerator of F, denominator of G).

    The pullback leg against the regular denominator is regular (integral
    presentation), which the Fraction constructor re-verifies.
    """
    if F.target != G.source:
        raise ShapeError("fractions do not compose")
    sq = pullback(Q, F.num, G.denom, budget)
    # sq.a : P -> aux(F) is the leg against the regular denominator
    return Fraction(Q, compose(Q, F.denom, sq.a), compose(Q, G.num, sq.b))


def fractions_equal(Q: CategoryPresentation, F: Fraction, G: Fraction, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Decide [r, f] = [r', f'] on the pullback of the two denominators.

    Both pullback legs are regular, the roofs agree over the common refinement
    iff the numerators agree there; faithfulness of the localisation functor
    makes this sound and complete.
    """
    if F.source != G.source or F.target != G.target:
        raise ShapeError("fractions must be parallel to compare")
    sq = pullback(Q, F.denom, G.denom, budget)
    # legs: sq.a : P -> aux(F), sq.b : P -> aux(G); r o a = r' o b
    return compose(Q, F.num, sq.a) == compose(Q, G.num, sq.b)


def fraction_add(Q: CategoryPresentation, F: Fraction, G: Fraction, budget: Budget = DEFAULT_BUDGET) -> Fraction:
    """Sum over the common denominator given by the denominator pullback."""
    if F.source != G.source or F.target != G.target:
        raise ShapeError("fractions must be parallel to add")
    sq = pullback(Q, F.denom, G.denom, budget)
    denom = compose(Q, F.denom, sq.a)
    num = compose(Q, F.num, sq.a) + compose(Q, G.num, sq.b)
    return Fraction(Q, denom, num)


def fraction_scale(Q: CategoryPresentation, F: Fraction, c) -> Fraction:
    return Fraction(Q, F.denom, F.num.scale(c), _checked=True)


def is_identity_fraction(Q: CategoryPresentation, F: Fraction, budget: Budget = DEFAULT_BUDGET) -> bool:
    if F.source != F.target:
        return False
    return fractions_equal(Q, F, identity_fraction(Q, F.source), budget)


def fraction_two_sided_inverse(Q: CategoryPresentation, F: Fraction, G: Fraction, budget: Budget = DEFAULT_BUDGET) -> bool:
    """True when G o F and F o G are both identity fractions."""
    return is_identity_fraction(Q, compose_fractions(Q, G, F, budget), budget) and is_identity_fraction(
        Q, compose_fractions(Q, F, G, budget), budget
    )


# -- kernels and cokernels in the localisation ---------------------------------


def localised_cokernel(Q: CategoryPresentation, F: Fraction, budget: Budget = DEFAULT_BUDGET) -> Fraction:
    """[coker(numerator)] is a cokernel of the fraction."""
    res = cokernel(Q, F.num, budget)
    if res is None:
        raise NoCokernel("numerator has no cokernel in the underlying category")
    _, c = res
    return from_morphism(Q, c)


def to_left_fraction(Q: CategoryPresentation, F: Fraction, budget: Budget = DEFAULT_BUDGET):
    """(s, g) with s o f = g o r and s regular: the left form of [r, f]."""
    sq = pushout(Q, F.num, F.denom, budget)
    # square: c o num = d o denom with c : Y -> D, d : X -> D; c is the leg
    # parallel to the regular denominator, hence regular
    s, g = sq.c, sq.d
    if not is_regular(Q, s):
        raise NotRegular("pushout leg is not regular; presentation is not integral")
    return s, g


def localised_kernel(Q: CategoryPresentation, F: Fraction, budget: Budget = DEFAULT_BUDGET) -> Fraction:
    """[ker g] for the left form x_s [g] of the fraction."""
    _, g = to_left_fraction(Q, F, budget)
    res = kernel(Q, g, budget)
    if res is None:
        raise NoKernel("left-form numerator has no kernel in the underlying category")
    _, j = res
    return from_morphism(Q, j)


# -- axiom scans -----------------------------------------------------------------


@dataclass
class AxiomReport:
    clauses: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.clauses.values())

    def as_dict(self):
        return {k: v.as_dict() for k, v in self.clauses.items()}


def verify_rf_axioms(Q: CategoryPresentation, budget: Budget = DEFAULT_BUDGET) -> AxiomReport:
    """RF1-RF3 for the regular class, plus the LF duals via pushouts."""
    report = AxiomReport()
    fam = build_morphism_family(Q, budget, derived=False)

    # RF1 / LF1: identities are regular and the class is composition closed
    count = 0
    detail = ""
    status = "pass"
    for i in range(Q.n):
        if not is_regular(Q, Q.identity(Q.single(i))):
            status, detail = "fail", f"identity of {Q.objects[i]} is not regular"
            break
    if status == "pass":
        for r in fam.regulars:
            for s in fam.regulars:
                if r.target != s.source:
                    continue
                if count >= budget.scan_pairs_cap:
                    break
                count += 1
                if not is_regular(Q, compose(Q, s, r)):
                    status = "fail"
                    detail = "regulars are not closed under composition"
                    break
            if status == "fail":
                break
    report.clauses["RF1_identities_and_closure"] = ClauseResult(status, count, detail)

    # RF2: any (f, r regular) into a common target completes with regular leg
    count = 0
    status, detail = "pass", ""
    for r in fam.regulars:
        for f in fam.all:
            if f.target != r.target:
                continue
            if count >= budget.scan_pairs_cap:
                break
            count += 1
            try:
                sq = pullback(Q, f, r, budget)
            except NoKernel as e:
                status, detail = "fail", f"pullback completion failed: {e}"
                break
            if not is_regular(Q, sq.a):
                status = "fail"
                detail = (
                    f"completion leg not regular for f: {Q.obj_name(f.source)}"
                    f" -> {Q.obj_name(f.target)}"
                )
                break
        if status == "fail":
            break
    report.clauses["RF2_square_completion"] = ClauseResult(status, count, detail)

    # RF3: r o f = r o f' forces f = f' (the identity refinement suffices
    # because regular morphisms are monomorphisms)
    count = 0
    status, detail = "pass", ""
    for r in fam.regulars:
        count += 1
        if not is_mono(Q, r):
            status, detail = "fail", "a regular morphism is not mono"
            break
    report.clauses["RF3_left_cancellation"] = ClauseResult(status, count, detail)

    # LF2: dual completion via pushout
    count = 0
    status, detail = "pass", ""
    for r in fam.regulars:
        for f in fam.all:
            if f.source != r.source:
                continue
            if count >= budget.scan_pairs_cap:
                break
            count += 1
            try:
                sq = pushout(Q, r, f, budget)
            except NoCokernel as e:
                status, detail = "fail", f"pushout completion failed: {e}"
                break
            if not is_regular(Q, sq.d):
                status = "fail"
                detail = (
                    f"completion leg not regular for f: {Q.obj_name(f.source)}"
                    f" -> {Q.obj_name(f.target)}"
                )
                break
        if status == "fail":
            break
    report.clauses["LF2_square_completion"] = ClauseResult(status, count, detail)

    # LF3: f o r = f' o r forces f = f' (regulars are epimorphisms)
    count = 0
    status, detail = "pass", ""
    for r in fam.regulars:
        count += 1
        if not is_epi(Q, r):
            status, detail = "fail", "a regular morphism is not epi"
            break
    report.clauses["LF3_right_cancellation"] = ClauseResult(status, count, detail)
    return report


def check_abelian(Q: CategoryPresentation, budget: Budget = DEFAULT_BUDGET) -> AxiomReport:
    """Abelianness of the localisation via the coim-im middle map.

    For every basis morphism: the middle map of the factorisation is regular
    and its fraction is two-sided invertible by the equality decider.
    """
    report = AxiomReport()
    count = 0
    status, detail = "pass", ""
    for i in range(Q.n):
        for j in range(Q.n):
            for a in range(Q.hom_dim(i, j)):
                f = Q.basis_morphism(i, j, a)
                try:
                    fac = coim_im_factorise(Q, f, budget)
                except (NoKernel, NoCokernel) as e:
                    status, detail = "fail", f"factorisation failed at ({i},{j},{a}): {e}"
                    break
                count += 1
                if not is_regular(Q, fac.ftilde):
                    status, detail = "fail", f"middle map not regular at ({i},{j},{a})"
                    break
                frac = from_morphism(Q, fac.ftilde)
                inv = invert_regular(Q, fac.ftilde)
                if not fraction_two_sided_inverse(Q, frac, inv, budget):
                    status, detail = "fail", f"middle map not invertible at ({i},{j},{a})"
                    break
            if status == "fail":
                break
        if status == "fail":
            break
    report.clauses["abelian_middle_maps"] = ClauseResult(status, count, detail)
    return report
