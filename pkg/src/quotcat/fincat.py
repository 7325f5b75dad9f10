"""Finite k-linear additive categories presented by Hom bases.

A :class:`CategoryPresentation` stores a finite list of indecomposables,
the dimension of every Hom space between them, bilinear composition as
structure constants, identity coordinates, and optionally an object-level
suspension permutation.  Objects of the additive closure are multiplicity
vectors, morphisms are block arrays of coefficient vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import MissingSuspension, ShapeError
from .linalg import Field, Matrix, vec_add, vec_is_zero, vec_scale, vec_sub


class CategoryPresentation:
    """A finite k-linear category given by Hom bases and structure constants.

    comp[(i, j, k)][a][b] is the coefficient vector (in the chosen basis of
    Hom(i, k)) of the composite (basis b of Hom(j, k)) o (basis a of
    Hom(i, j)).  Missing (i, j, k) keys mean all such composites are zero.
    """

    def __init__(
        self,
        field: Field,
        objects: list[str],
        hom_dim: dict,
        comp: dict,
        identities: list,
        sigma: list[int] | None = None,
        metadata: dict | None = None,
    ):
        self.field = field
        self.objects = list(objects)
        self.n = len(objects)
        self._index = {name: i for i, name in enumerate(objects)}
        if len(self._index) != self.n:
            raise ValueError("duplicate indecomposable names")
        self._dim = [[0] * self.n for _ in range(self.n)]
        for (i, j), d in hom_dim.items():
            self._dim[i][j] = d
        self.comp = {k: v for k, v in comp.items()}
        self.identities = [list(v) for v in identities]
        self.sigma = list(sigma) if sigma is not None else None
        if self.sigma is not None:
            if sorted(self.sigma) != list(range(self.n)):
                raise ValueError("sigma is not a permutation")
            self.sigma_inv = [0] * self.n
            for i, s in enumerate(self.sigma):
                self.sigma_inv[s] = i
        else:
            self.sigma_inv = None
        self.metadata = dict(metadata or {})

    # -- basic queries ------------------------------------------------

    def index(self, name: str) -> int:
        return self._index[name]

    def hom_dim(self, i: int, j: int) -> int:
        return self._dim[i][j]

    def comp_table(self, i: int, j: int, k: int):
        """Nested table t[a][b] -> coefficient vector, or None if all zero."""
        return self.comp.get((i, j, k))

    def compose_basis(self, i: int, j: int, k: int, a: int, b: int):
        t = self.comp.get((i, j, k))
        if t is None:
            return [self.field.zero] * self._dim[i][k]
        return list(t[a][b])

    # -- objects of the additive closure ------------------------------

    def obj(self, mult) -> "Obj":
        if isinstance(mult, dict):
            v = [0] * self.n
            for name, m in mult.items():
                v[self.index(name)] += m
            return Obj(tuple(v))
        return Obj(tuple(mult))

    def single(self, name_or_idx) -> "Obj":
        i = name_or_idx if isinstance(name_or_idx, int) else self.index(name_or_idx)
        v = [0] * self.n
        v[i] = 1
        return Obj(tuple(v))

    def zero_obj(self) -> "Obj":
        return Obj((0,) * self.n)

    def obj_name(self, X: "Obj") -> str:
        parts = []
        for i, m in enumerate(X.mult):
            if m == 1:
                parts.append(self.objects[i])
            elif m > 1:
                parts.append(f"{self.objects[i]}^{m}")
        return "+".join(parts) if parts else "0"

    # -- morphisms -----------------------------------------------------

    def hom_space_dim(self, X: "Obj", Y: "Obj") -> int:
        return sum(
            self._dim[i][j]
            for i in X.copies()
            for j in Y.copies()
        )

    def zero_morphism(self, X: "Obj", Y: "Obj") -> "Morphism":
        srcs = X.copies()
        tgts = Y.copies()
        z = self.field.zero
        blocks = [
            [[z] * self._dim[i][j] for i in srcs]
            for j in tgts
        ]
        return Morphism(self, X, Y, blocks)

    def identity(self, X: "Obj") -> "Morphism":
        m = self.zero_morphism(X, X)
        srcs = X.copies()
        for p, i in enumerate(srcs):
            m.blocks[p][p] = list(self.identities[i])
        return m

    def basis_morphism(self, i: int, j: int, a: int) -> "Morphism":
        """Basis element a of Hom(i, j) as a morphism of single objects."""
        m = self.zero_morphism(self.single(i), self.single(j))
        vec = [self.field.zero] * self._dim[i][j]
        vec[a] = self.field.one
        m.blocks[0][0] = vec
        return m

    def hom_basis(self, X: "Obj", Y: "Obj"):
        """All coordinate basis morphisms of Hom(X, Y), in flat order."""
        d = self.hom_space_dim(X, Y)
        out = []
        for k in range(d):
            v = [self.field.zero] * d
            v[k] = self.field.one
            out.append(Morphism.from_vector(self, X, Y, v))
        return out

    def morphism_from_vector(self, X: "Obj", Y: "Obj", vec) -> "Morphism":
        return Morphism.from_vector(self, X, Y, vec)

    # -- suspension ----------------------------------------------------

    def require_sigma(self):
        if self.sigma is None:
            raise MissingSuspension("presentation has no suspension permutation")

    def sigma_obj(self, X: "Obj", power: int = 1) -> "Obj":
        self.require_sigma()
        v = list(X.mult)
        perm = self.sigma if power >= 0 else self.sigma_inv
        for _ in range(abs(power)):
            w = [0] * self.n
            for i, m in enumerate(v):
                w[perm[i]] = m
            v = w
        return Obj(tuple(v))

    def ext1_dim(self, x: int, c: int) -> int:
        """dim Ext^1(x, c) = dim Hom(x, sigma c)."""
        self.require_sigma()
        return self._dim[x][self.sigma[c]]


@dataclass(frozen=True)
class Obj:
    """A formal direct sum of indecomposables: a multiplicity vector."""

    mult: tuple

    def copies(self) -> list[int]:
        """Indecomposable index of each copy, in block order."""
        out = []
        for i, m in enumerate(self.mult):
            out.extend([i] * m)
        return out

    @property
    def total(self) -> int:
        return sum(self.mult)

    def is_zero(self) -> bool:
        return self.total == 0

    def __add__(self, other: "Obj") -> "Obj":
        return Obj(tuple(a + b for a, b in zip(self.mult, other.mult)))

    def support(self) -> set[int]:
        return {i for i, m in enumerate(self.mult) if m > 0}


class Morphism:
    """A map between formal sums, stored as blocks of Hom coefficients.

    blocks[t][s] is the coefficient vector of the component from source
    copy s to target copy t.
    """

    __slots__ = ("P", "source", "target", "blocks")

    def __init__(self, P: CategoryPresentation, source: Obj, target: Obj, blocks):
        self.P = P
        self.source = source
        self.target = target
        self.blocks = blocks

    # -- construction / coordinates ------------------------------------

    @classmethod
    def from_vector(cls, P: CategoryPresentation, X: Obj, Y: Obj, vec) -> "Morphism":
        srcs, tgts = X.copies(), Y.copies()
        blocks = []
        pos = 0
        for j in tgts:
            row = []
            for i in srcs:
                d = P.hom_dim(i, j)
                row.append([P.field.of(x) if isinstance(x, (int, str)) else x for x in vec[pos : pos + d]])
                pos += d
            blocks.append(row)
        if pos != len(vec):
            raise ShapeError("coordinate vector has wrong length")
        return cls(P, X, Y, blocks)

    def to_vector(self):
        out = []
        for row in self.blocks:
            for block in row:
                out.extend(block)
        return out

    def copy(self) -> "Morphism":
        return Morphism(
            self.P, self.source, self.target, [[list(b) for b in row] for row in self.blocks]
        )

    # -- linear structure ----------------------------------------------

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check_parallel(other)
        f = self.P.field
        blocks = [
            [vec_add(f, b1, b2) for b1, b2 in zip(r1, r2)]
            for r1, r2 in zip(self.blocks, other.blocks)
        ]
        return Morphism(self.P, self.source, self.target, blocks)

    def __sub__(self, other: "Morphism") -> "Morphism":
        self._check_parallel(other)
        f = self.P.field
        blocks = [
            [vec_sub(f, b1, b2) for b1, b2 in zip(r1, r2)]
            for r1, r2 in zip(self.blocks, other.blocks)
        ]
        return Morphism(self.P, self.source, self.target, blocks)

    def scale(self, c) -> "Morphism":
        f = self.P.field
        c = f.of(c)
        blocks = [[vec_scale(f, c, b) for b in row] for row in self.blocks]
        return Morphism(self.P, self.source, self.target, blocks)

    def __eq__(self, other):
        return (
            isinstance(other, Morphism)
            and self.P is other.P
            and self.source == other.source
            and self.target == other.target
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.source, self.target, tuple(tuple(tuple(b) for b in row) for row in self.blocks)))

    def is_zero(self) -> bool:
        f = self.P.field
        return all(vec_is_zero(f, b) for row in self.blocks for b in row)

    def _check_parallel(self, other: "Morphism"):
        if self.P is not other.P or self.source != other.source or self.target != other.target:
            raise ShapeError("morphisms are not parallel")

    def __repr__(self):
        P = self.P
        return f"Morphism({P.obj_name(self.source)} -> {P.obj_name(self.target)})"


def compose(P: CategoryPresentation, g: Morphism, f: Morphism) -> Morphism:
    """g o f, blockwise bilinear via the structure constants."""
    if f.P is not P or g.P is not P:
        raise ShapeError("morphisms from a different presentation")
    if f.target != g.source:
        raise ShapeError(
            f"cannot compose: target {P.obj_name(f.target)} != source {P.obj_name(g.source)}"
        )
    fld = P.field
    zero = fld.zero
    srcs = f.source.copies()
    mids = f.target.copies()
    tgts = g.target.copies()
    out = [
        [[zero] * P.hom_dim(i, k) for i in srcs]
        for k in tgts
    ]
    for t, k in enumerate(tgts):
        for s, i in enumerate(srcs):
            acc = out[t][s]
            if not acc:
                continue
            for m, j in enumerate(mids):
                table = P.comp_table(i, j, k)
                if table is None:
                    continue
                fblock = f.blocks[m][s]
                gblock = g.blocks[t][m]
                for a, fa in enumerate(fblock):
                    if fa == zero:
                        continue
                    ta = table[a]
                    for b, gb in enumerate(gblock):
                        if gb == zero:
                            continue
                        coeff = fld.mul(fa, gb)
                        row = ta[b]
                        for c, rc in enumerate(row):
                            if rc != zero:
                                acc[c] = fld.add(acc[c], fld.mul(coeff, rc))
    return Morphism(P, f.source, g.target, out)


def precompose_matrix(P: CategoryPresentation, f: Morphism, Z: Obj) -> Matrix:
    """Matrix of Hom(target f, Z) -> Hom(source f, Z), v -> v o f."""
    dY = P.hom_space_dim(f.target, Z)
    dX = P.hom_space_dim(f.source, Z)
    cols = []
    for v in P.hom_basis(f.target, Z):
        cols.append(compose(P, v, f).to_vector())
    data = [[cols[j][i] for j in range(dY)] for i in range(dX)]
    return Matrix(P.field, dX, dY, data)


def postcompose_matrix(P: CategoryPresentation, f: Morphism, Z: Obj) -> Matrix:
    """Matrix of Hom(Z, source f) -> Hom(Z, target f), u -> f o u."""
    dX = P.hom_space_dim(Z, f.source)
    dY = P.hom_space_dim(Z, f.target)
    cols = []
    for u in P.hom_basis(Z, f.source):
        cols.append(compose(P, f, u).to_vector())
    data = [[cols[j][i] for j in range(dX)] for i in range(dY)]
    return Matrix(P.field, dY, dX, data)


# -- validation ---------------------------------------------------------


@dataclass
class ValidationReport:
    violations: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, detail):
        self.violations.append((kind, detail))

    def __str__(self):
        if self.ok:
            return "valid"
        lines = [f"{len(self.violations)} violation(s):"]
        for kind, detail in self.violations[:25]:
            lines.append(f"  {kind}: {detail}")
        if len(self.violations) > 25:
            lines.append(f"  ... and {len(self.violations) - 25} more")
        return "\n".join(lines)


def validate_category(P: CategoryPresentation) -> ValidationReport:
    """Exhaustive associativity and unit checks over basis triples."""
    rep = ValidationReport()
    f = P.field
    for i in range(P.n):
        if P.hom_dim(i, i) < 1:
            rep.add("endomorphism-space-empty", (i,))
        idv = P.identities[i]
        if len(idv) != P.hom_dim(i, i) or vec_is_zero(f, idv):
            rep.add("identity-missing", (i,))
    # unit laws: id o a = a and a o id = a for every basis element a
    for i in range(P.n):
        for j in range(P.n):
            d = P.hom_dim(i, j)
            for a in range(d):
                m = P.basis_morphism(i, j, a)
                left = compose(P, P.identity(P.single(j)), m)
                right = compose(P, m, P.identity(P.single(i)))
                if left != m:
                    rep.add("left-unit", (i, j, a))
                if right != m:
                    rep.add("right-unit", (i, j, a))
    # associativity on basis triples
    for (i, j, k) in list(P.comp.keys()):
        for l in range(P.n):
            if P.hom_dim(k, l) == 0:
                continue
            for a in range(P.hom_dim(i, j)):
                fa = P.basis_morphism(i, j, a)
                for b in range(P.hom_dim(j, k)):
                    gb = P.basis_morphism(j, k, b)
                    gf = compose(P, gb, fa)
                    for c in range(P.hom_dim(k, l)):
                        hc = P.basis_morphism(k, l, c)
                        hg = compose(P, hc, gb)
                        lhs = compose(P, hc, gf)
                        rhs = compose(P, hg, fa)
                        if lhs != rhs:
                            rep.add("associativity", (i, j, k, l, a, b, c))
    if P.sigma is not None and sorted(P.sigma) != list(range(P.n)):
        rep.add("sigma-not-bijective", tuple(P.sigma))
    if P.metadata.get("two_cy") and P.sigma is not None:
        for pair in check_serre_symmetry(P):
            rep.add("serre-symmetry", pair)
    return rep


def check_serre_symmetry(P: CategoryPresentation) -> list:
    """Pairs violating hom_dim(x, y) = hom_dim(y, sigma^2 x)."""
    P.require_sigma()
    bad = []
    for x in range(P.n):
        s2x = P.sigma[P.sigma[x]]
        for y in range(P.n):
            if P.hom_dim(x, y) != P.hom_dim(y, s2x):
                bad.append((x, y))
    return bad


# -- perpendicular categories and rigidity ------------------------------


def perp(P: CategoryPresentation, S, side: str = "right") -> set[int]:
    """Objects c with Ext^1(x, c) = 0 for all x in S (right), or dually."""
    P.require_sigma()
    S = {s if isinstance(s, int) else P.index(s) for s in S}
    out = set()
    for c in range(P.n):
        if side == "right":
            if all(P.hom_dim(x, P.sigma[c]) == 0 for x in S):
                out.add(c)
        elif side == "left":
            if all(P.hom_dim(c, P.sigma[x]) == 0 for x in S):
                out.add(c)
        else:
            raise ValueError("side must be 'right' or 'left'")
    return out


def is_rigid(P: CategoryPresentation, T: Obj) -> bool:
    P.require_sigma()
    supp = T.support()
    return all(P.hom_dim(t, P.sigma[u]) == 0 for t in supp for u in supp)


def is_cluster_tilting(P: CategoryPresentation, T: Obj) -> bool:
    P.require_sigma()
    supp = T.support()
    if not supp:
        return P.n == 0
    return supp == perp(P, supp, "right")


def all_rigid_supports(P: CategoryPresentation, max_size: int) -> list[tuple[int, ...]]:
    """All rigid multiplicity-free supports with 1..max_size summands."""
    P.require_sigma()
    selfok = [i for i in range(P.n) if P.hom_dim(i, P.sigma[i]) == 0]
    compat = {
        (i, j): P.hom_dim(i, P.sigma[j]) == 0 and P.hom_dim(j, P.sigma[i]) == 0
        for i in selfok
        for j in selfok
    }
    out = []

    def extend(prefix, start):
        if prefix:
            out.append(tuple(prefix))
        if len(prefix) == max_size:
            return
        for i in range(start, len(selfok)):
            c = selfok[i]
            if all(compat[(p, c)] for p in prefix):
                extend(prefix + [c], i + 1)

    extend([], 0)
    return out


# -- approximations ------------------------------------------------------


def _approx_is_covering(P: CategoryPresentation, S, a: Morphism) -> bool:
    """Hom(x, X0) -> Hom(x, C) surjective for every x in S."""
    for x in S:
        Zx = P.single(x)
        m = postcompose_matrix(P, a, Zx)
        if m.rank() != P.hom_space_dim(Zx, a.target):
            return False
    return True


def _delete_copy(P: CategoryPresentation, a: Morphism, pos: int) -> Morphism:
    srcs = a.source.copies()
    mult = list(a.source.mult)
    mult[srcs[pos]] -= 1
    X = Obj(tuple(mult))
    blocks = [[b for s, b in enumerate(row) if s != pos] for row in a.blocks]
    return Morphism(P, X, a.target, blocks)


def approximation(P: CategoryPresentation, S, C: Obj, side: str = "right") -> Morphism:
    """Minimal right (or left) add-S-approximation of C.

    Starts from the tautologically covering map out of the full basis sum
    and greedily deletes copies while the covering rank condition survives.
    Deterministic scan order, so the result is reproducible.
    """
    S = sorted(s if isinstance(s, int) else P.index(s) for s in S)
    if side == "left":
        op = opposite(P)
        a = approximation(op, S, C, "right")
        return op_morphism(P, a)
    if side != "right":
        raise ValueError("side must be 'right' or 'left'")
    # start object: one copy of x per basis element of Hom(x, C)
    mult = [0] * P.n
    for x in S:
        mult[x] = P.hom_space_dim(P.single(x), C)
    X0 = Obj(tuple(mult))
    blocks = [[] for _ in C.copies()]
    for x in S:
        for b in P.hom_basis(P.single(x), C):
            for t in range(len(C.copies())):
                blocks[t].append(b.blocks[t][0])
    a = Morphism(P, X0, C, blocks)
    assert _approx_is_covering(P, S, a)
    # greedy reduction
    changed = True
    while changed:
        changed = False
        for pos in range(len(a.source.copies())):
            trial = _delete_copy(P, a, pos)
            if _approx_is_covering(P, S, trial):
                a = trial
                changed = True
                break
    return a


# -- opposite presentation ----------------------------------------------


def opposite(P: CategoryPresentation) -> CategoryPresentation:
    """The opposite category; kernels there are cokernels here.

    The suspension permutation is dropped: Ext-style queries must be asked
    of the original presentation.
    """
    hom = {}
    for i in range(P.n):
        for j in range(P.n):
            d = P.hom_dim(j, i)
            if d:
                hom[(i, j)] = d
    comp = {}
    for (i, j, k), table in P.comp.items():
        # comp_op[(k, j, i)][b][a] = comp[(i, j, k)][a][b]
        comp[(k, j, i)] = [
            [list(table[a][b]) for a in range(P.hom_dim(i, j))]
            for b in range(P.hom_dim(j, k))
        ]
    op = CategoryPresentation(
        P.field,
        list(P.objects),
        hom,
        comp,
        [list(v) for v in P.identities],
        sigma=None,
        metadata={"opposite_of": P.metadata.get("name", "?")},
    )
    return op


def op_morphism(Q: CategoryPresentation, f: Morphism) -> Morphism:
    """Reinterpret a morphism of the opposite presentation in Q (or back)."""
    blocks = [
        [list(f.blocks[t][s]) for t in range(len(f.target.copies()))]
        for s in range(len(f.source.copies()))
    ]
    return Morphism(Q, f.target, f.source, blocks)


# -- direct sum plumbing --------------------------------------------------


def _sum_copy_map(parts: list[Obj]):
    """Align the copies of a sum object with (part, copy-position) pairs.

    The sum's copies are ordered by indecomposable index; within one index,
    parts contribute in order.  Returned list is parallel to
    (sum of parts).copies().
    """
    if not parts:
        return []
    n = len(parts[0].mult)
    offsets = []
    for part in parts:
        off = []
        pos = 0
        for i in range(n):
            off.append(pos)
            pos += part.mult[i]
        offsets.append(off)
    out = []
    for i in range(n):
        for pi, part in enumerate(parts):
            for c in range(part.mult[i]):
                out.append((pi, offsets[pi][i] + c))
    return out


def sum_obj(parts: list[Obj]) -> Obj:
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    return total


def sum_inclusion(P: CategoryPresentation, parts: list[Obj], k: int) -> Morphism:
    """Canonical inclusion parts[k] -> direct sum of parts."""
    S = sum_obj(parts)
    m = P.zero_morphism(parts[k], S)
    cmap = _sum_copy_map(parts)
    for t, (pi, cpos) in enumerate(cmap):
        if pi == k:
            i = parts[k].copies()[cpos]
            m.blocks[t][cpos] = list(P.identities[i])
    return m


def sum_projection(P: CategoryPresentation, parts: list[Obj], k: int) -> Morphism:
    """Canonical projection: direct sum of parts -> parts[k]."""
    S = sum_obj(parts)
    m = P.zero_morphism(S, parts[k])
    cmap = _sum_copy_map(parts)
    for s, (pi, cpos) in enumerate(cmap):
        if pi == k:
            i = parts[k].copies()[cpos]
            m.blocks[cpos][s] = list(P.identities[i])
    return m


def stack_cols(P: CategoryPresentation, fs: list[Morphism]) -> Morphism:
    """[f1 | f2 | ...]: the map (sum of sources) -> common target."""
    target = fs[0].target
    parts = [f.source for f in fs]
    S = sum_obj(parts)
    m = P.zero_morphism(S, target)
    cmap = _sum_copy_map(parts)
    for s, (pi, cpos) in enumerate(cmap):
        for t in range(len(target.copies())):
            m.blocks[t][s] = list(fs[pi].blocks[t][cpos])
    return m


def stack_rows(P: CategoryPresentation, fs: list[Morphism]) -> Morphism:
    """(f1; f2; ...): the map common source -> (sum of targets)."""
    source = fs[0].source
    parts = [f.target for f in fs]
    S = sum_obj(parts)
    m = P.zero_morphism(source, S)
    cmap = _sum_copy_map(parts)
    for t, (pi, cpos) in enumerate(cmap):
        for s in range(len(source.copies())):
            m.blocks[t][s] = list(fs[pi].blocks[cpos][s])
    return m
