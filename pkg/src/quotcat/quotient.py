"""The additive quotient of a presentation by the objects killed by Hom(T, -).

For a rigid object T, X_T is the set of indecomposables i with
Hom(T, i) = 0.  The quotient keeps the remaining indecomposables and divides
every Hom space by the subspace of maps factoring through add X_T.  The
induced presentation is re-validated and representatives are chosen by
deterministic elimination, so quotient data is reproducible bit for bit.
"""

from __future__ import annotations

from .errors import NotRigid, ShapeError
from .fincat import (
    CategoryPresentation,
    Morphism,
    Obj,
    compose,
    is_rigid,
    validate_category,
)
from .linalg import RowSpace


def x_t_objects(P: CategoryPresentation, T: Obj) -> set[int]:
    """Indecomposables i with Hom(t, i) = 0 for every summand t of T."""
    supp = T.support()
    return {i for i in range(P.n) if all(P.hom_dim(t, i) == 0 for t in supp)}


def factoring_subspace(P: CategoryPresentation, X: Obj, Y: Obj, S) -> RowSpace:
    """Span of all two-step compositions X -> s -> Y with s in add S."""
    width = P.hom_space_dim(X, Y)
    rs = RowSpace(P.field, width)
    for s in sorted(S):
        Zs = P.single(s)
        for u in P.hom_basis(X, Zs):
            for v in P.hom_basis(Zs, Y):
                rs.add(compose(P, v, u).to_vector())
    return rs


def factors_through(P: CategoryPresentation, f: Morphism, S) -> bool:
    """True iff f lies in the span of compositions through add S."""
    S = {s if isinstance(s, int) else P.index(s) for s in S}
    rs = factoring_subspace(P, f.source, f.target, S)
    return rs.contains(f.to_vector())


class QuotientCategory:
    """C/X_T packaged with its induced presentation and transfer maps."""

    def __init__(self, parent: CategoryPresentation, xt: set[int], validate: bool = True):
        self.parent = parent
        self.xt = set(xt)
        self.keep = [i for i in range(parent.n) if i not in self.xt]
        self._q_index = {p: q for q, p in enumerate(self.keep)}
        field = parent.field
        # ideal subspaces F(i, j) on surviving single-object pairs
        self.f_spaces: dict[tuple[int, int], RowSpace] = {}
        self.rep_coords: dict[tuple[int, int], list[int]] = {}
        for i in self.keep:
            for j in self.keep:
                rs = factoring_subspace(parent, parent.single(i), parent.single(j), self.xt)
                self.f_spaces[(i, j)] = rs
                self.rep_coords[(i, j)] = rs.complement_indices()
        if any(not self.rep_coords[(i, i)] for i in self.keep):
            bad = [parent.objects[i] for i in self.keep if not self.rep_coords[(i, i)]]
            raise NotRigid(
                f"identity of {bad} factors through the subcategory; "
                "these objects should have been in X_T"
            )
        hom = {}
        for (i, j), coords in self.rep_coords.items():
            if coords:
                hom[(self._q_index[i], self._q_index[j])] = len(coords)
        comp = {}
        for i in self.keep:
            qi = self._q_index[i]
            for j in self.keep:
                qj = self._q_index[j]
                dij = len(self.rep_coords[(i, j)])
                if dij == 0:
                    continue
                for k in self.keep:
                    qk = self._q_index[k]
                    djk = len(self.rep_coords[(j, k)])
                    dik = len(self.rep_coords[(i, k)])
                    if djk == 0 or dik == 0:
                        continue
                    table = []
                    nonzero = False
                    for a in range(dij):
                        fa = self._lift_basis(i, j, a)
                        row = []
                        for b in range(djk):
                            gb = self._lift_basis(j, k, b)
                            vec = self._project_vector(i, k, compose(parent, gb, fa).to_vector())
                            if any(x != field.zero for x in vec):
                                nonzero = True
                            row.append(vec)
                        table.append(row)
                    if nonzero:
                        comp[(qi, qj, qk)] = table
        identities = []
        for i in self.keep:
            idv = self.parent.identity(parent.single(i)).to_vector()
            identities.append(self._project_vector(i, i, idv))
        self.presentation = CategoryPresentation(
            field,
            [parent.objects[i] for i in self.keep],
            hom,
            comp,
            identities,
            sigma=None,
            metadata={
                "quotient_of": parent.metadata.get("name", "?"),
                "xt": sorted(parent.objects[i] for i in self.xt),
                "aliases": {
                    a: n
                    for a, n in parent.metadata.get("aliases", {}).items()
                    if n not in (parent.objects[i] for i in self.xt)
                },
            },
        )
        if validate:
            rep = validate_category(self.presentation)
            if not rep.ok:
                raise ShapeError(f"induced quotient presentation invalid: {rep}")

    # -- helpers ---------------------------------------------------------

    def _lift_basis(self, i: int, j: int, a: int) -> Morphism:
        """Parent morphism representing quotient basis element a of (i, j)."""
        coord = self.rep_coords[(i, j)][a]
        return self.parent.basis_morphism(i, j, coord)

    def _project_vector(self, i: int, j: int, vec):
        red = self.f_spaces[(i, j)].reduce(vec)
        return [red[c] for c in self.rep_coords[(i, j)]]

    # -- object transfer ---------------------------------------------------

    def project_obj(self, X: Obj) -> Obj:
        return Obj(tuple(X.mult[i] for i in self.keep))

    def lift_obj(self, Xq: Obj) -> Obj:
        mult = [0] * self.parent.n
        for q, p in enumerate(self.keep):
            mult[p] = Xq.mult[q]
        return Obj(tuple(mult))

    # -- morphism transfer ---------------------------------------------------

    def project(self, f: Morphism) -> Morphism:
        """Image of a parent morphism: representative coordinates blockwise."""
        if f.P is not self.parent:
            raise ShapeError("morphism does not live in the parent presentation")
        Xq = self.project_obj(f.source)
        Yq = self.project_obj(f.target)
        src = [(pos, i) for pos, i in enumerate(f.source.copies()) if i not in self.xt]
        tgt = [(pos, j) for pos, j in enumerate(f.target.copies()) if j not in self.xt]
        blocks = []
        for tpos, j in tgt:
            row = []
            for spos, i in src:
                row.append(self._project_vector(i, j, list(f.blocks[tpos][spos])))
            blocks.append(row)
        return Morphism(self.presentation, Xq, Yq, blocks)

    def lift(self, qf: Morphism) -> Morphism:
        """The chosen parent representative of a quotient morphism."""
        if qf.P is not self.presentation:
            raise ShapeError("morphism does not live in the quotient presentation")
        X = self.lift_obj(qf.source)
        Y = self.lift_obj(qf.target)
        out = self.parent.zero_morphism(X, Y)
        srcs = qf.source.copies()
        tgts = qf.target.copies()
        for t, qj in enumerate(tgts):
            j = self.keep[qj]
            for s, qi in enumerate(srcs):
                i = self.keep[qi]
                block = [self.parent.field.zero] * self.parent.hom_dim(i, j)
                for a, coord in enumerate(self.rep_coords[(i, j)]):
                    block[coord] = qf.blocks[t][s][a]
                out.blocks[t][s] = block
        return out


def build_quotient(
    P: CategoryPresentation,
    T: Obj | None = None,
    subcat=None,
    allow_non_rigid: bool = False,
    validate: bool = True,
) -> QuotientCategory:
    """Quotient by X_T for a rigid T, or by an explicit indecomposable set.

    Rigidity of T is the standing hypothesis of every downstream result and
    is enforced whenever T is given; pass allow_non_rigid=True for
    exploratory use.  The explicit subcat form serves quotients by a
    perpendicular subcategory, as in the cotorsion counterexample.
    """
    if (T is None) == (subcat is None):
        raise ValueError("pass exactly one of T or subcat")
    if T is not None:
        if not allow_non_rigid and not is_rigid(P, T):
            raise NotRigid(f"object {P.obj_name(T)} is not rigid")
        xt = x_t_objects(P, T)
    else:
        xt = {s if isinstance(s, int) else P.index(s) for s in subcat}
    return QuotientCategory(P, xt, validate=validate)
