"""Cluster categories of type A_n, generated from quiver representations.

The construction is the orbit one: indecomposables are the interval modules
of the path quiver together with the shifted projectives, Hom spaces are
Hom(X, Y) + Hom(X, FY) with F the composite of the inverse translate and
the shift, and composition is computed from explicit representatives
(module maps and extension cocycles).  A combinatorial polygon-diagonal
model acts as an independent oracle for every Hom dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GenerationError
from .fincat import CategoryPresentation
from .linalg import QQ, Field, Matrix, RowSpace

# ---------------------------------------------------------------------------
# quivers and representations


@dataclass(frozen=True)
class QuiverAn:
    """The path 1 - 2 - ... - n with a chosen arrow direction per edge.

    orientation[k] is '<' when the arrow between k+1 and k+2 points down
    (towards vertex 1) and '>' when it points up.  The default '<' * (n-1)
    is the linearly ordered quiver 1 <- 2 <- ... <- n.
    """

    n: int
    orientation: str

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if len(self.orientation) != self.n - 1 or any(c not in "<>" for c in self.orientation):
            raise ValueError("orientation must be a string of '<' and '>' of length n-1")

    def arrows(self):
        """List of (source, target) vertex pairs, 1-based, one per edge."""
        out = []
        for k, c in enumerate(self.orientation):
            lo, hi = k + 1, k + 2
            out.append((hi, lo) if c == "<" else (lo, hi))
        return out


def linear_quiver(n: int) -> QuiverAn:
    return QuiverAn(n, "<" * (n - 1))


class Rep:
    """A representation of a QuiverAn: one space per vertex, one map per edge.

    mats[k] is the matrix of edge k, shaped (dim target) x (dim source).
    """

    def __init__(self, quiver: QuiverAn, field: Field, dims, mats):
        self.quiver = quiver
        self.field = field
        self.dims = tuple(dims)
        if len(self.dims) != quiver.n:
            raise ValueError("dimension vector length mismatch")
        self.mats = list(mats)
        for k, (s, t) in enumerate(quiver.arrows()):
            m = self.mats[k]
            if (m.nrows, m.ncols) != (self.dims[t - 1], self.dims[s - 1]):
                raise ValueError(f"edge {k} matrix has wrong shape")

    def dim_at(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def __eq__(self, other):
        return (
            isinstance(other, Rep)
            and self.quiver == other.quiver
            and self.dims == other.dims
            and self.mats == other.mats
        )

    def __repr__(self):
        return f"Rep(dims={self.dims})"


def interval_rep(quiver: QuiverAn, field: Field, a: int, b: int) -> Rep:
    """The interval module with support {a, ..., b} and identity arrows."""
    if not (1 <= a <= b <= quiver.n):
        raise ValueError("bad interval")
    dims = [1 if a <= v <= b else 0 for v in range(1, quiver.n + 1)]
    mats = []
    for s, t in quiver.arrows():
        if a <= s <= b and a <= t <= b:
            mats.append(Matrix.identity(field, 1))
        else:
            mats.append(Matrix.zeros(field, dims[t - 1], dims[s - 1]))
    return Rep(quiver, field, dims, mats)


def proj_interval(quiver: QuiverAn, v: int) -> tuple[int, int]:
    """Support of the projective at v: all vertices reachable from v."""
    lo = v
    while lo > 1 and quiver.orientation[lo - 2] == "<":
        lo -= 1
    hi = v
    while hi < quiver.n and quiver.orientation[hi - 1] == ">":
        hi += 1
    return (lo, hi)


def inj_interval(quiver: QuiverAn, v: int) -> tuple[int, int]:
    """Support of the injective at v: all vertices reaching v."""
    lo = v
    while lo > 1 and quiver.orientation[lo - 2] == ">":
        lo -= 1
    hi = v
    while hi < quiver.n and quiver.orientation[hi - 1] == "<":
        hi += 1
    return (lo, hi)


def indecomposable_reps(quiver: QuiverAn, field: Field = QQ):
    """The n(n+1)/2 interval representations, ordered by (a, b)."""
    return [
        interval_rep(quiver, field, a, b)
        for a in range(1, quiver.n + 1)
        for b in range(a, quiver.n + 1)
    ]


def path_matrix(rep: Rep, src: int, dst: int):
    """Composite of arrow matrices along the directed path src -> dst.

    Returns None when the path from src to dst is not directed that way.
    """
    if src == dst:
        return Matrix.identity(rep.field, rep.dim_at(src))
    step = 1 if dst > src else -1
    arrows = rep.quiver.arrows()
    m = Matrix.identity(rep.field, rep.dim_at(src))
    v = src
    while v != dst:
        w = v + step
        k = min(v, w) - 1
        s, t = arrows[k]
        if s != v or t != w:
            return None
        m = rep.mats[k] * m
        v = w
    return m


class RepHom:
    """A homomorphism of representations: one matrix per vertex."""

    __slots__ = ("source", "target", "mats")

    def __init__(self, source: Rep, target: Rep, mats):
        self.source = source
        self.target = target
        self.mats = list(mats)

    def mat(self, v: int) -> Matrix:
        return self.mats[v - 1]

    def compose(self, other: "RepHom") -> "RepHom":
        """self o other."""
        return RepHom(
            other.source,
            self.target,
            [a * b for a, b in zip(self.mats, other.mats)],
        )

    def __add__(self, other):
        return RepHom(self.source, self.target, [a + b for a, b in zip(self.mats, other.mats)])

    def scale(self, c):
        return RepHom(self.source, self.target, [m.scale(c) for m in self.mats])

    def __eq__(self, other):
        return (
            isinstance(other, RepHom)
            and self.source == other.source
            and self.target == other.target
            and self.mats == other.mats
        )

    def is_zero(self):
        return all(m.is_zero() for m in self.mats)

    def is_iso(self):
        return all(
            m.nrows == m.ncols and m.rank() == m.nrows for m in self.mats
        )

    def flatten(self):
        out = []
        for m in self.mats:
            for row in m.data:
                out.extend(row)
        return out


def zero_hom(M: Rep, N: Rep) -> RepHom:
    return RepHom(M, N, [Matrix.zeros(M.field, N.dims[v], M.dims[v]) for v in range(M.quiver.n)])


def identity_hom(M: Rep) -> RepHom:
    return RepHom(M, M, [Matrix.identity(M.field, d) for d in M.dims])


def hom_flat_dim(M: Rep, N: Rep) -> int:
    return sum(a * b for a, b in zip(M.dims, N.dims))


def hom_from_flat(M: Rep, N: Rep, vec) -> RepHom:
    mats = []
    pos = 0
    for v in range(M.quiver.n):
        r, c = N.dims[v], M.dims[v]
        data = [vec[pos + i * c : pos + (i + 1) * c] for i in range(r)]
        pos += r * c
        mats.append(Matrix(M.field, r, c, data))
    return RepHom(M, N, mats)


def hom_rep(M: Rep, N: Rep) -> list[RepHom]:
    """Basis of Hom(M, N), by solving the arrow-commutation system."""
    f = M.field
    total = hom_flat_dim(M, N)
    rows = []
    arrows = M.quiver.arrows()
    # unknowns: entries of phi_v, flattened in vertex order
    offsets = []
    pos = 0
    for v in range(M.quiver.n):
        offsets.append(pos)
        pos += N.dims[v] * M.dims[v]
    for k, (s, t) in enumerate(arrows):
        sm, tm = M.mats[k], N.mats[k]
        # constraint: phi_t * M_k - N_k * phi_s = 0, entrywise
        for i in range(N.dims[t - 1]):
            for j in range(M.dims[s - 1]):
                row = [f.zero] * total
                # (phi_t * M_k)[i][j] = sum_l phi_t[i][l] * M_k[l][j]
                for l in range(M.dims[t - 1]):
                    idx = offsets[t - 1] + i * M.dims[t - 1] + l
                    row[idx] = f.add(row[idx], sm.data[l][j])
                # (N_k * phi_s)[i][j] = sum_l N_k[i][l] * phi_s[l][j]
                for l in range(N.dims[s - 1]):
                    idx = offsets[s - 1] + l * M.dims[s - 1] + j
                    row[idx] = f.sub(row[idx], tm.data[i][l])
                rows.append(row)
    mat = Matrix(f, len(rows), total, rows)
    return [hom_from_flat(M, N, v) for v in mat.kernel_basis()]


def _coords_in_homs(field: Field, basis: list[RepHom], h: RepHom):
    """Coefficients of h against a list of independent homs, or None."""
    flat = h.flatten()
    if not basis:
        return [] if all(x == field.zero for x in flat) else None
    cols = [b.flatten() for b in basis]
    m = Matrix(field, len(flat), len(cols), [[cols[j][i] for j in range(len(cols))] for i in range(len(flat))])
    return m.solve(flat)


def direct_sum(reps: list[Rep], quiver: QuiverAn, field: Field) -> tuple[Rep, list[list[int]]]:
    """Direct sum rep together with per-summand column offsets per vertex."""
    n = quiver.n
    dims = [0] * n
    offsets = []
    for r in reps:
        offsets.append([dims[v] for v in range(n)])
        for v in range(n):
            dims[v] += r.dims[v]
    mats = []
    for k, (s, t) in enumerate(quiver.arrows()):
        m = Matrix.zeros(field, dims[t - 1], dims[s - 1])
        for r, off in zip(reps, offsets):
            block = r.mats[k]
            ro, co = off[t - 1], off[s - 1]
            for i in range(block.nrows):
                for j in range(block.ncols):
                    m.data[ro + i][co + j] = block.data[i][j]
        mats.append(m)
    return Rep(quiver, field, dims, mats), offsets


def kernel_rep(f: RepHom) -> tuple[Rep, RepHom]:
    """Kernel subrepresentation with its inclusion."""
    M = f.source
    field = M.field
    n = M.quiver.n
    kbases = []
    for v in range(1, n + 1):
        kbases.append(f.mat(v).kernel_basis())
    dims = [len(kb) for kb in kbases]
    incl_mats = []
    for v in range(n):
        cols = kbases[v]
        incl_mats.append(
            Matrix(field, M.dims[v], dims[v], [[cols[j][i] for j in range(dims[v])] for i in range(M.dims[v])])
        )
    kmats = []
    for k, (s, t) in enumerate(M.quiver.arrows()):
        image = M.mats[k] * incl_mats[s - 1]
        sol = incl_mats[t - 1].solve_matrix(image)
        if sol is None:
            raise GenerationError("kernel is not a subrepresentation (impossible)")
        kmats.append(sol)
    K = Rep(M.quiver, field, dims, kmats)
    return K, RepHom(K, M, incl_mats)


def cokernel_rep(f: RepHom) -> tuple[Rep, RepHom, list[Matrix]]:
    """Cokernel with projection and a per-vertex section of the projection."""
    N = f.target
    field = N.field
    n = N.quiver.n
    proj_mats = []
    sect_mats = []
    dims = []
    spaces = []
    for v in range(n):
        img_cols = [f.mats[v].col(j) for j in range(f.mats[v].ncols)]
        rs = RowSpace.from_rows(field, N.dims[v], img_cols)
        comp = rs.complement_indices()
        dims.append(len(comp))
        spaces.append((rs, comp))
        # projection: reduce mod image, then read complement coordinates
        cols = []
        for j in range(N.dims[v]):
            e = [field.zero] * N.dims[v]
            e[j] = field.one
            red = rs.reduce(e)
            cols.append([red[c] for c in comp])
        proj_mats.append(
            Matrix(field, len(comp), N.dims[v], [[cols[j][i] for j in range(N.dims[v])] for i in range(len(comp))])
        )
        sect = Matrix.zeros(field, N.dims[v], len(comp))
        for i, c in enumerate(comp):
            sect.data[c][i] = field.one
        sect_mats.append(sect)
    cmats = []
    for k, (s, t) in enumerate(N.quiver.arrows()):
        cmats.append(proj_mats[t - 1] * N.mats[k] * sect_mats[s - 1])
    C = Rep(N.quiver, field, dims, cmats)
    return C, RepHom(N, C, proj_mats), sect_mats


# ---------------------------------------------------------------------------
# socle / top, projective presentations, injective copresentations


def socle_vertex_basis(M: Rep, v: int):
    """Basis of the socle component at v: joint kernel of outgoing arrows."""
    field = M.field
    rows = []
    for k, (s, t) in enumerate(M.quiver.arrows()):
        if s == v:
            rows.extend(M.mats[k].data)
    if not rows:
        return [list(col) for col in Matrix.identity(field, M.dims[v - 1]).data]
    m = Matrix(field, len(rows), M.dims[v - 1], rows)
    return m.kernel_basis()


def top_vertex_basis(M: Rep, v: int):
    """Lifts of a basis of the top component at v (cokernel of incoming)."""
    field = M.field
    img = []
    for k, (s, t) in enumerate(M.quiver.arrows()):
        if t == v:
            img.extend(M.mats[k].col(j) for j in range(M.mats[k].ncols))
    rs = RowSpace.from_rows(field, M.dims[v - 1], img)
    out = []
    for c in rs.complement_indices():
        e = [field.zero] * M.dims[v - 1]
        e[c] = field.one
        out.append(e)
    return out


def hom_to_injective(M: Rep, v: int, functional, I_v: Rep) -> RepHom:
    """The hom M -> I_v matching a linear functional on M_v."""
    field = M.field
    mats = []
    for w in range(1, M.quiver.n + 1):
        if I_v.dim_at(w) == 0:
            mats.append(Matrix.zeros(field, 0, M.dims[w - 1]))
            continue
        pm = path_matrix(M, w, v)
        if pm is None:
            raise GenerationError("injective support vertex without path (impossible)")
        row = [
            _dot(field, functional, pm.col(j))
            for j in range(M.dims[w - 1])
        ]
        mats.append(Matrix(field, 1, M.dims[w - 1], [row]))
    return RepHom(M, I_v, mats)


def hom_from_projective(M: Rep, v: int, value, P_v: Rep) -> RepHom:
    """The hom P_v -> M sending the generator at v to the given vector."""
    field = M.field
    mats = []
    for w in range(1, M.quiver.n + 1):
        if P_v.dim_at(w) == 0:
            mats.append(Matrix.zeros(field, M.dims[w - 1], 0))
            continue
        pm = path_matrix(M, v, w)
        if pm is None:
            raise GenerationError("projective support vertex without path (impossible)")
        col = pm.apply(value)
        mats.append(Matrix(field, M.dims[w - 1], 1, [[x] for x in col]))
    return RepHom(P_v, M, mats)


def _dot(field: Field, u, v):
    s = field.zero
    for a, b in zip(u, v):
        if a != field.zero and b != field.zero:
            s = field.add(s, field.mul(a, b))
    return s


class Presentation:
    """Short exact sequence 0 -> K -> P0 -> M -> 0 with P0 a projective sum."""

    def __init__(self, quiver: QuiverAn, field: Field, M: Rep):
        self.M = M
        parts = []
        gens = []
        for v in range(1, quiver.n + 1):
            for x in top_vertex_basis(M, v):
                parts.append(v)
                gens.append((v, x))
        preps = [interval_rep(quiver, field, *proj_interval(quiver, v)) for v in parts]
        P0, offsets = direct_sum(preps, quiver, field)
        self.parts = parts
        self.P0 = P0
        # assemble pi: P0 -> M columnwise from the generator maps
        mats = [Matrix.zeros(field, M.dims[v], P0.dims[v]) for v in range(quiver.n)]
        for (v, x), prep, off in zip(gens, preps, offsets):
            h = hom_from_projective(M, v, x, prep)
            for w in range(quiver.n):
                block = h.mats[w]
                for i in range(block.nrows):
                    for j in range(block.ncols):
                        mats[w].data[i][off[w] + j] = block.data[i][j]
        self.pi = RepHom(P0, M, mats)
        for v in range(quiver.n):
            if self.pi.mats[v].rank() != M.dims[v]:
                raise GenerationError("projective cover is not surjective")
        self.K, self.iota = kernel_rep(self.pi)


class Copresentation:
    """Short exact sequence 0 -> N -> I0 -> I1 -> 0 with injective sums.

    Keeps the summand vertex lists so the Nakayama transport to projectives
    can be applied blockwise.
    """

    def __init__(self, quiver: QuiverAn, field: Field, N: Rep):
        self.N = N
        self.i0_parts, self.iota, I0 = _inj_envelope(quiver, field, N)
        self.I0 = I0
        C, proj, _ = cokernel_rep(self.iota)
        if any(self.iota.mats[v].rank() != N.dims[v] for v in range(quiver.n)):
            raise GenerationError("socle embedding not injective")
        self.i1_parts, eps, I1 = _inj_envelope(quiver, field, C)
        if any(eps.mats[v].rank() != C.dims[v] for v in range(quiver.n)):
            raise GenerationError("cosyzygy embedding not injective")
        self.I1 = I1
        self.d = eps.compose(proj)


def _inj_envelope(quiver: QuiverAn, field: Field, M: Rep):
    """Injective envelope of M: summand vertices, embedding, sum rep."""
    parts = []
    funcs = []
    for v in range(1, quiver.n + 1):
        soc = socle_vertex_basis(M, v)
        if not soc:
            continue
        soc_m = Matrix(field, len(soc), M.dims[v - 1], soc)
        for b in range(len(soc)):
            target = [field.one if i == b else field.zero for i in range(len(soc))]
            xi = soc_m.solve(target)  # functional with xi | socle = dual basis
            if xi is None:
                raise GenerationError("cannot extend socle functional")
            parts.append(v)
            funcs.append(xi)
    ireps = [interval_rep(quiver, field, *inj_interval(quiver, v)) for v in parts]
    Isum, offsets = direct_sum(ireps, quiver, field)
    mats = [Matrix.zeros(field, Isum.dims[v], M.dims[v]) for v in range(quiver.n)]
    for (v, xi), irep, off in zip(zip(parts, funcs), ireps, offsets):
        h = hom_to_injective(M, v, xi, irep)
        for w in range(quiver.n):
            block = h.mats[w]
            for i in range(block.nrows):
                for j in range(block.ncols):
                    mats[w].data[off[w] + i][j] = block.data[i][j]
    return parts, RepHom(M, Isum, mats), Isum


# ---------------------------------------------------------------------------
# Nakayama transport and the AR translates


class _NakayamaContext:
    """Canonical bases of Hom(I_a, I_b) and Hom(P_a, P_b) plus coherence."""

    def __init__(self, quiver: QuiverAn, field: Field):
        self.quiver = quiver
        self.field = field
        self.P = {v: interval_rep(quiver, field, *proj_interval(quiver, v)) for v in range(1, quiver.n + 1)}
        self.I = {v: interval_rep(quiver, field, *inj_interval(quiver, v)) for v in range(1, quiver.n + 1)}
        self.gamma = {}
        self.delta = {}
        for a in range(1, quiver.n + 1):
            for b in range(1, quiver.n + 1):
                self.gamma[(a, b)] = _canonical_hom(self.I[a], self.I[b])
                self.delta[(a, b)] = _canonical_hom(self.P[a], self.P[b])
                if (self.gamma[(a, b)] is None) != (self.delta[(a, b)] is None):
                    raise GenerationError(f"Nakayama dimension mismatch at {(a, b)}")
        self._check_coherence()

    def _check_coherence(self):
        # the canonical bases must compose with identical structure constants
        for a in range(1, self.quiver.n + 1):
            for b in range(1, self.quiver.n + 1):
                if self.gamma[(a, b)] is None:
                    continue
                for c in range(1, self.quiver.n + 1):
                    if self.gamma[(b, c)] is None:
                        continue
                    gi = _hom_coefficient(self.gamma[(b, c)].compose(self.gamma[(a, b)]), self.gamma.get((a, c)))
                    gp = _hom_coefficient(self.delta[(b, c)].compose(self.delta[(a, b)]), self.delta.get((a, c)))
                    if gi != gp:
                        raise GenerationError(f"Nakayama coherence fails at {(a, b, c)}")

    def nu_inv(self, parts_src, parts_tgt, h: RepHom, P0src: Rep, offs, P0tgt: Rep, offt, src_offs, tgt_offs) -> RepHom:
        """Transport a map between injective sums to the projective sums."""
        field = self.field
        mats = [Matrix.zeros(field, P0tgt.dims[v], P0src.dims[v]) for v in range(self.quiver.n)]
        for bi, b in enumerate(parts_tgt):
            for ai, a in enumerate(parts_src):
                gamma = self.gamma[(a, b)]
                coeff = _block_coefficient(h, src_offs[ai], tgt_offs[bi], self.I[a], self.I[b], gamma)
                if coeff is None:
                    raise GenerationError("injective block is not a canonical multiple")
                if coeff == field.zero:
                    continue
                delta = self.delta[(a, b)]
                for v in range(self.quiver.n):
                    block = delta.mats[v]
                    ro, co = offt[bi][v], offs[ai][v]
                    for i in range(block.nrows):
                        for j in range(block.ncols):
                            mats[v].data[ro + i][co + j] = field.add(
                                mats[v].data[ro + i][co + j], field.mul(coeff, block.data[i][j])
                            )
        return RepHom(P0src, P0tgt, mats)


def _canonical_hom(A: Rep, B: Rep):
    basis = hom_rep(A, B)
    if not basis:
        return None
    if len(basis) != 1:
        raise GenerationError("interval hom space of dimension > 1")
    h = basis[0]
    # normalise: first nonzero entry (in vertex order) becomes 1
    field = A.field
    for m in h.mats:
        for row in m.data:
            for x in row:
                if x != field.zero:
                    return h.scale(field.inv(x))
    return None


def _hom_coefficient(h: RepHom, canon):
    """Scalar c with h = c * canon (canon None means the space is zero)."""
    field = h.source.field
    if canon is None:
        if not h.is_zero():
            raise GenerationError("nonzero hom in zero space")
        return field.zero
    for m, cm in zip(h.mats, canon.mats):
        for row, crow in zip(m.data, cm.data):
            for x, cx in zip(row, crow):
                if cx != field.zero:
                    c = field.div(x, cx)
                    if not _hom_equal_scaled(h, canon, c):
                        raise GenerationError("hom is not a multiple of the canonical basis")
                    return c
    if h.is_zero():
        return field.zero
    raise GenerationError("hom is not a multiple of the canonical basis")


def _hom_equal_scaled(h: RepHom, canon: RepHom, c) -> bool:
    return all(m == cm.scale(c) for m, cm in zip(h.mats, canon.mats))


def _block_coefficient(h: RepHom, src_off, tgt_off, Ia: Rep, Ib: Rep, gamma):
    """Coefficient of the (Ia -> Ib) block of h against the canonical hom."""
    field = h.source.field
    block_mats = []
    for v in range(h.source.quiver.n):
        rows = []
        for i in range(Ib.dims[v]):
            row = []
            for j in range(Ia.dims[v]):
                row.append(h.mats[v].data[tgt_off[v] + i][src_off[v] + j])
            rows.append(row)
        block_mats.append(Matrix(field, Ib.dims[v], Ia.dims[v], rows))
    block = RepHom(Ia, Ib, block_mats)
    if gamma is None:
        if not block.is_zero():
            return None
        return field.zero
    try:
        return _hom_coefficient(block, gamma)
    except GenerationError:
        return None


def _identify_interval(R: Rep) -> tuple[int, int] | None:
    """Interval (a, b) when R has an interval dimension vector, else None."""
    supp = [v for v in range(1, R.quiver.n + 1) if R.dim_at(v) != 0]
    if not supp or any(R.dim_at(v) != 1 for v in supp):
        return None
    if supp != list(range(supp[0], supp[-1] + 1)):
        return None
    return (supp[0], supp[-1])


class TauContext:
    """AR translate machinery for one quiver over one field."""

    def __init__(self, quiver: QuiverAn, field: Field):
        self.quiver = quiver
        self.field = field
        self.nak = _NakayamaContext(quiver, field)
        self._tinv = {}
        self._tinv_mor_cache = {}

    # -- object level ---------------------------------------------------

    def is_projective(self, iv: tuple[int, int]) -> bool:
        return any(proj_interval(self.quiver, v) == iv for v in range(1, self.quiver.n + 1))

    def is_injective(self, iv: tuple[int, int]) -> bool:
        return any(inj_interval(self.quiver, v) == iv for v in range(1, self.quiver.n + 1))

    def tau_inv_interval(self, iv: tuple[int, int]) -> tuple[int, int]:
        return self._tinv_data(iv)["interval"]

    def tau_interval(self, iv: tuple[int, int]) -> tuple[int, int]:
        """Translate of a non-projective interval, via the projective side."""
        if self.is_projective(iv):
            raise GenerationError("tau of a projective is undefined")
        quiver, field = self.quiver, self.field
        M = interval_rep(quiver, field, *iv)
        pres = Presentation(quiver, field, M)
        # decompose K into projectives through its (iso) projective cover
        kpres = Presentation(quiver, field, pres.K)
        if not kpres.pi.is_iso():
            raise GenerationError("syzygy cover is not an isomorphism")
        inc = pres.iota.compose(kpres.pi)  # sum of projectives -> P0
        # transport to injectives via the canonical correspondence
        src_parts = kpres.parts
        tgt_parts = pres.parts
        ireps_s = [interval_rep(quiver, field, *inj_interval(quiver, v)) for v in src_parts]
        ireps_t = [interval_rep(quiver, field, *inj_interval(quiver, v)) for v in tgt_parts]
        Isrc, offs_s = direct_sum(ireps_s, quiver, field)
        Itgt, offs_t = direct_sum(ireps_t, quiver, field)
        preps_s = [interval_rep(quiver, field, *proj_interval(quiver, v)) for v in src_parts]
        preps_t = [interval_rep(quiver, field, *proj_interval(quiver, v)) for v in tgt_parts]
        Psrc, poffs_s = direct_sum(preps_s, quiver, field)
        Ptgt, poffs_t = direct_sum(preps_t, quiver, field)
        mats = [Matrix.zeros(field, Itgt.dims[v], Isrc.dims[v]) for v in range(quiver.n)]
        for bi, b in enumerate(tgt_parts):
            for ai, a in enumerate(src_parts):
                delta = self.nak.delta[(a, b)]
                coeff = _block_coefficient(inc, poffs_s[ai], poffs_t[bi], self.nak.P[a], self.nak.P[b], delta)
                if coeff is None:
                    raise GenerationError("projective block is not a canonical multiple")
                gamma = self.nak.gamma[(a, b)]
                if coeff == field.zero or gamma is None:
                    continue
                for v in range(quiver.n):
                    block = gamma.mats[v]
                    ro, co = offs_t[bi][v], offs_s[ai][v]
                    for i in range(block.nrows):
                        for j in range(block.ncols):
                            mats[v].data[ro + i][co + j] = field.add(
                                mats[v].data[ro + i][co + j], field.mul(coeff, block.data[i][j])
                            )
        nu_inc = RepHom(Isrc, Itgt, mats)
        K, _ = kernel_rep(nu_inc)
        iv2 = _identify_interval(K)
        if iv2 is None:
            raise GenerationError("tau did not produce an interval")
        return iv2

    # -- tau inverse with morphisms --------------------------------------

    def _tinv_data(self, iv: tuple[int, int]):
        if iv in self._tinv:
            return self._tinv[iv]
        if self.is_injective(iv):
            raise GenerationError("tau^{-1} of an injective is undefined")
        quiver, field = self.quiver, self.field
        N = interval_rep(quiver, field, *iv)
        cop = Copresentation(quiver, field, N)
        preps_s = [interval_rep(quiver, field, *proj_interval(quiver, v)) for v in cop.i0_parts]
        preps_t = [interval_rep(quiver, field, *proj_interval(quiver, v)) for v in cop.i1_parts]
        Psrc, poffs_s = direct_sum(preps_s, quiver, field)
        Ptgt, poffs_t = direct_sum(preps_t, quiver, field)
        _, ioffs_s = direct_sum([self.nak.I[v] for v in cop.i0_parts], quiver, field)
        _, ioffs_t = direct_sum([self.nak.I[v] for v in cop.i1_parts], quiver, field)
        D = self.nak.nu_inv(cop.i0_parts, cop.i1_parts, cop.d, Psrc, poffs_s, Ptgt, poffs_t, ioffs_s, ioffs_t)
        R, proj, sect = cokernel_rep(D)
        iv2 = _identify_interval(R)
        if iv2 is None:
            raise GenerationError("tau^{-1} did not produce an interval")
        std = interval_rep(quiver, field, *iv2)
        isos = hom_rep(R, std)
        iso = None
        for cand in isos:
            if cand.is_iso():
                iso = cand
                break
        if iso is None:
            raise GenerationError("cannot identify tau^{-1} cokernel with its interval")
        data = {
            "interval": iv2,
            "std": std,
            "cop": cop,
            "Psrc": Psrc,
            "Ptgt": Ptgt,
            "poffs_s": poffs_s,
            "poffs_t": poffs_t,
            "ioffs_s": ioffs_s,
            "ioffs_t": ioffs_t,
            "D": D,
            "R": R,
            "proj": proj,
            "sect": sect,
            "iso": iso,
            "iso_inv": RepHom(std, R, [m.inverse() if m.nrows else Matrix.zeros(self.field, m.ncols, m.nrows) for m in iso.mats]),
        }
        self._tinv[iv] = data
        return data

    def tau_inv_std(self, iv: tuple[int, int]) -> Rep:
        """Standard interval model of the inverse translate."""
        return self._tinv_data(iv)["std"]

    def tau_inv_mor(self, ivN: tuple[int, int], ivL: tuple[int, int], u: RepHom, cache_key=None) -> RepHom:
        """Inverse translate of u between non-injective intervals.

        Lifts u to the injective copresentations, transports through the
        Nakayama correspondence, and conjugates the induced cokernel map by
        the fixed interval identifications.
        """
        if cache_key is not None and cache_key in self._tinv_mor_cache:
            return self._tinv_mor_cache[cache_key]
        dN = self._tinv_data(ivN)
        dL = self._tinv_data(ivL)
        copN, copL = dN["cop"], dL["cop"]
        u0 = _solve_right_factor(copL.iota.compose(u), copN.iota, copN.I0, copL.I0)
        u1 = _solve_right_factor(copL.d.compose(u0), copN.d, copN.I1, copL.I1)
        V = self.nak.nu_inv(
            copN.i1_parts, copL.i1_parts, u1,
            dN["Ptgt"], dN["poffs_t"], dL["Ptgt"], dL["poffs_t"],
            dN["ioffs_t"], dL["ioffs_t"],
        )
        # induced map on cokernels, then conjugate into the interval models
        field = self.field
        mats = []
        for v in range(self.quiver.n):
            sectN = dN["sect"][v]
            w = dL["proj"].mats[v] * V.mats[v] * sectN
            mats.append(w)
        induced = RepHom(dN["R"], dL["R"], mats)
        out = dL["iso"].compose(induced).compose(dN["iso_inv"])
        if cache_key is not None:
            self._tinv_mor_cache[cache_key] = out
        return out


def _solve_right_factor(target: RepHom, through: RepHom, src: Rep, dst: Rep) -> RepHom:
    """Some h with h o through = target, in Hom(src's target rep, dst)."""
    field = target.source.field
    basis = hom_rep(src, dst)
    cols = [b.compose(through).flatten() for b in basis]
    want = target.flatten()
    m = Matrix(field, len(want), len(cols), [[cols[j][i] for j in range(len(cols))] for i in range(len(want))])
    x = m.solve(want)
    if x is None:
        raise GenerationError("copresentation lift does not exist (impossible)")
    out = zero_hom(src, dst)
    for c, b in zip(x, basis):
        if c != field.zero:
            out = out + b.scale(c)
    return out


def tau(M: Rep, ctx: TauContext | None = None):
    """AR translate of an interval module; None for a projective."""
    ctx = ctx or TauContext(M.quiver, M.field)
    iv = _identify_interval(M)
    if iv is None:
        raise ValueError("tau implemented for interval modules only")
    if ctx.is_projective(iv):
        return None
    return interval_rep(M.quiver, M.field, *ctx.tau_interval(iv))


def tau_inv(M: Rep, ctx: TauContext | None = None):
    """Inverse AR translate of an interval module; None for an injective."""
    ctx = ctx or TauContext(M.quiver, M.field)
    iv = _identify_interval(M)
    if iv is None:
        raise ValueError("tau_inv implemented for interval modules only")
    if ctx.is_injective(iv):
        return None
    return ctx.tau_inv_std(iv)


def ext1_rep(M: Rep, N: Rep, pres: Presentation | None = None) -> int:
    """dim Ext^1(M, N) via a projective presentation of M."""
    pres = pres or Presentation(M.quiver, M.field, M)
    homs_k = hom_rep(pres.K, N)
    homs_p = hom_rep(pres.P0, N)
    rs = RowSpace(M.field, hom_flat_dim(pres.K, N))
    for g in homs_p:
        rs.add(g.compose(pres.iota).flatten())
    return len(homs_k) - rs.dim


# ---------------------------------------------------------------------------
# the diagonal model (independent oracle)


class DiagonalModel:
    """Diagonals of an (n+3)-gon with the rotation used as suspension."""

    def __init__(self, n: int):
        self.n = n
        self.N = n + 3
        self.diagonals = [
            (a, b)
            for a in range(self.N)
            for b in range(a + 2, self.N)
            if not (a == 0 and b == self.N - 1)
        ]

    def normalize(self, d):
        a, b = d[0] % self.N, d[1] % self.N
        a, b = min(a, b), max(a, b)
        if b - a < 2 or (a == 0 and b == self.N - 1):
            raise ValueError(f"{d} is not a diagonal")
        return (a, b)

    def rotate(self, d, k: int = 1):
        """Suspension acts as rotation by -1 on vertex labels."""
        return self.normalize(((d[0] - k) % self.N, (d[1] - k) % self.N))

    def cross(self, d, e) -> bool:
        a, b = d
        c, f = e
        if len({a, b, c, f}) < 4:
            return False
        def between(x, lo, hi):
            return (lo < x < hi) if lo < hi else (x > lo or x < hi)
        return between(c, a, b) != between(f, a, b)

    def expected_dim(self, da, db) -> int:
        """dim Hom(X, Y) = 1 iff the diagonal of X crosses the -1 rotate of Y."""
        return 1 if self.cross(da, self.rotate(db, -1)) else 0


def fan_labelling(n: int):
    """Documented convention for the linear orientation.

    Interval [a, b] maps to the diagonal {a-1, b+1}; the shifted projective
    at i maps to {i, n+2}.  The projectives then form the fan at vertex 0.
    """
    lab = {}
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            lab[("mod", a, b)] = (a - 1, b + 1)
    for i in range(1, n + 1):
        lab[("sp", i)] = (i, n + 2)
    return lab


def search_labelling(model: DiagonalModel, sigma: list[int], dims) -> list | None:
    """Rotation-equivariant labelling matching a hom-dimension table.

    Used for non-linear orientations, where the fan convention does not
    apply.  Objects are indexed 0..m-1; dims[x][y] is the table to match.
    Returns a list of diagonals per object, or None.
    """
    m = len(sigma)
    orbits = []
    seen = set()
    for x in range(m):
        if x in seen:
            continue
        orb = [x]
        seen.add(x)
        y = sigma[x]
        while y != x:
            orb.append(y)
            seen.add(y)
            y = sigma[y]
        orbits.append(orb)
    lab = [None] * m

    def consistent(xs, assigned):
        for x in xs:
            for y in assigned:
                if x != y and lab[x] == lab[y]:
                    return False
                if dims[x][y] != model.expected_dim(lab[x], lab[y]):
                    return False
                if dims[y][x] != model.expected_dim(lab[y], lab[x]):
                    return False
        return True

    def assign(oi, assigned):
        if oi == len(orbits):
            return True
        orb = orbits[oi]
        for d in model.diagonals:
            if model.rotate(d, len(orb)) != d:
                continue
            for k, x in enumerate(orb):
                lab[x] = model.rotate(d, k)
            if consistent(orb, assigned + orb) and assign(oi + 1, assigned + orb):
                return True
            for x in orb:
                lab[x] = None
        return False

    return lab if assign(0, []) else None


# ---------------------------------------------------------------------------
# assembly of the cluster category presentation


def _module_name(quiver: QuiverAn, a: int, b: int) -> str:
    for v in range(1, quiver.n + 1):
        if proj_interval(quiver, v) == (a, b):
            return f"P{v}"
    for v in range(1, quiver.n + 1):
        if inj_interval(quiver, v) == (a, b):
            return f"I{v}"
    if a == b:
        return f"S{a}"
    return f"M[{a},{b}]"


def _module_aliases(quiver: QuiverAn, a: int, b: int, canonical: str) -> list[str]:
    names = []
    for v in range(1, quiver.n + 1):
        if proj_interval(quiver, v) == (a, b):
            names.append(f"P{v}")
        if inj_interval(quiver, v) == (a, b):
            names.append(f"I{v}")
    if a == b:
        names.append(f"S{a}")
    names.append(f"M[{a},{b}]")
    return [x for x in names if x != canonical]


class _PairData:
    """Basis of one Hom space of the cluster category, with reducers."""

    def __init__(self, field: Field):
        self.field = field
        self.h0 = []  # degree-0 module homs (mm) / plain homs (ms, sm, ss)
        self.e1 = []  # degree-1 extension classes (mm only)
        self.ext = None  # _ExtReducer for the ext-type part

    @property
    def dim(self):
        return len(self.h0) + len(self.e1)

    def coords_h0(self, h: RepHom):
        c = _coords_in_homs(self.field, self.h0, h)
        if c is None:
            raise GenerationError("hom does not lie in the computed basis span")
        return list(c) + [self.field.zero] * len(self.e1)

    def coords_e1(self, e: RepHom):
        c = self.ext.reduce(e)
        return [self.field.zero] * len(self.h0) + list(c)


class _ExtReducer:
    """Ext^1(M, W) from a fixed presentation of M: basis and reduction."""

    def __init__(self, field: Field, pres: Presentation, W: Rep):
        self.field = field
        self.pres = pres
        self.W = W
        width = hom_flat_dim(pres.K, W)
        homs_k = hom_rep(pres.K, W)
        img = RowSpace(field, width)
        for g in hom_rep(pres.P0, W):
            img.add(g.compose(pres.iota).flatten())
        self.img = img
        self.basis = []
        probe = RowSpace(field, width)
        for row in img.rows:
            probe.add(row)
        for h in homs_k:
            if probe.add(h.flatten()):
                self.basis.append(h)
        # fixed solve matrix: columns are reduced basis flats
        self.reduced_cols = [img.reduce(h.flatten()) for h in self.basis]
        self.width = width

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, e: RepHom):
        v = self.img.reduce(e.flatten())
        if not self.basis:
            if any(x != self.field.zero for x in v):
                raise GenerationError("nonzero class in zero Ext space")
            return []
        m = Matrix(
            self.field,
            self.width,
            len(self.basis),
            [[self.reduced_cols[j][i] for j in range(len(self.basis))] for i in range(self.width)],
        )
        c = m.solve(v)
        if c is None:
            raise GenerationError("cocycle outside Ext span")
        return c


def _solve_left_factor(target: RepHom, through: RepHom, src: Rep, dst: Rep) -> RepHom:
    """Some h: src -> dst with through o h = target."""
    field = target.source.field
    basis = hom_rep(src, dst)
    cols = [through.compose(b).flatten() for b in basis]
    want = target.flatten()
    m = Matrix(field, len(want), len(cols), [[cols[j][i] for j in range(len(cols))] for i in range(len(want))])
    x = m.solve(want)
    if x is None:
        raise GenerationError("presentation lift does not exist (impossible)")
    out = zero_hom(src, dst)
    for c, b in zip(x, basis):
        if c != field.zero:
            out = out + b.scale(c)
    return out


class _ClusterBuilder:
    def __init__(self, n: int, orientation: str | None, field: Field):
        self.n = n
        self.quiver = QuiverAn(n, orientation if orientation is not None else "<" * (n - 1))
        self.field = field
        self.ctx = TauContext(self.quiver, field)
        self.intervals = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
        self.keys = [("mod",) + iv for iv in self.intervals] + [("sp", i) for i in range(1, n + 1)]
        self.reps = {}
        self.pres = {}
        self.names = {}
        self.aliases = {}
        for iv in self.intervals:
            key = ("mod",) + iv
            self.reps[key] = interval_rep(self.quiver, field, *iv)
            self.pres[key] = Presentation(self.quiver, field, self.reps[key])
            name = _module_name(self.quiver, *iv)
            self.names[key] = name
            for alias in _module_aliases(self.quiver, *iv, name):
                self.aliases[alias] = name
        for i in range(1, n + 1):
            self.names[("sp", i)] = f"SP{i}"
        self.pj = {i: interval_rep(self.quiver, field, *proj_interval(self.quiver, i)) for i in range(1, n + 1)}
        self.pairs = {}
        self._lift_cache = {}

    # -- basis construction ------------------------------------------------

    def _is_inj(self, key) -> bool:
        return self.ctx.is_injective((key[1], key[2]))

    def _tinv_std(self, key) -> Rep:
        return self.ctx.tau_inv_std((key[1], key[2]))

    def build_pair(self, kx, ky) -> _PairData:
        pd = _PairData(self.field)
        if kx[0] == "mod" and ky[0] == "mod":
            pd.h0 = hom_rep(self.reps[kx], self.reps[ky])
            if not self._is_inj(ky):
                pd.ext = _ExtReducer(self.field, self.pres[kx], self._tinv_std(ky))
                pd.e1 = pd.ext.basis
        elif kx[0] == "mod" and ky[0] == "sp":
            pd.ext = _ExtReducer(self.field, self.pres[kx], self.pj[ky[1]])
            pd.h0 = []
            pd.e1 = pd.ext.basis
        elif kx[0] == "sp" and ky[0] == "mod":
            if not self._is_inj(ky):
                pd.h0 = hom_rep(self.pj[kx[1]], self._tinv_std(ky))
        else:
            pd.h0 = hom_rep(self.pj[kx[1]], self.pj[ky[1]])
        return pd

    # -- composition ---------------------------------------------------------

    def _lift_syzygy(self, kx, ky, a, f: RepHom) -> RepHom:
        """f1 : K_X -> K_Y covering f : X -> Y through the presentations."""
        ck = (kx, ky, a)
        if ck in self._lift_cache:
            return self._lift_cache[ck]
        px, py = self.pres[kx], self.pres[ky]
        f0 = _solve_left_factor(f.compose(px.pi), py.pi, px.P0, py.P0)
        f1 = _solve_left_factor(f0.compose(px.iota), py.iota, px.K, py.K)
        self._lift_cache[ck] = f1
        return f1

    def _tinv_mor(self, ky, kz, b, g: RepHom) -> RepHom:
        return self.ctx.tau_inv_mor((ky[1], ky[2]), (kz[1], kz[2]), g, cache_key=(ky, kz, b))

    def compose_basis(self, kx, ky, kz, a: int, b: int):
        """Coefficient vector of (basis b of Hom(y,z)) o (basis a of Hom(x,y))."""
        px = self.pairs[(kx, ky)]
        py = self.pairs[(ky, kz)]
        pz = self.pairs[(kx, kz)]
        zero = [self.field.zero] * pz.dim
        f_isext = a >= len(px.h0)
        g_isext = b >= len(py.h0)
        f = px.e1[a - len(px.h0)] if f_isext else px.h0[a]
        g = py.e1[b - len(py.h0)] if g_isext else py.h0[b]
        tx, ty, tz = kx[0], ky[0], kz[0]
        if tx == "mod" and ty == "mod" and tz == "mod":
            if not f_isext and not g_isext:
                return pz.coords_h0(g.compose(f))
            if f_isext and g_isext:
                return zero
            if not f_isext and g_isext:
                # pull the class of g back along f
                f1 = self._lift_syzygy(kx, ky, a, f)
                return pz.coords_e1(g.compose(f1))
            # f is a class, g a module map: push forward along tau^{-1} g
            if self._is_inj(kz):
                return zero
            tg = self._tinv_mor(ky, kz, b, g)
            return pz.coords_e1(tg.compose(f))
        if tx == "mod" and ty == "mod" and tz == "sp":
            if f_isext:
                return zero
            f1 = self._lift_syzygy(kx, ky, a, f)
            return pz.coords_e1(g.compose(f1))
        if tx == "mod" and ty == "sp" and tz == "mod":
            # g : P_j -> tau^{-1} Z pushes the class of f forward
            return pz.coords_e1(g.compose(f))
        if tx == "mod" and ty == "sp" and tz == "sp":
            return pz.coords_e1(g.compose(f))
        if tx == "sp" and ty == "mod" and tz == "mod":
            if g_isext:
                return zero
            if self._is_inj(kz):
                return zero
            tg = self._tinv_mor(ky, kz, b, g)
            return pz.coords_h0(tg.compose(f))
        if tx == "sp" and ty == "mod" and tz == "sp":
            return zero
        if tx == "sp" and ty == "sp" and tz == "mod":
            return pz.coords_h0(g.compose(f))
        return pz.coords_h0(g.compose(f))

    # -- sigma ----------------------------------------------------------------

    def sigma_perm(self) -> list[int]:
        index = {k: i for i, k in enumerate(self.keys)}
        out = [0] * len(self.keys)
        for k in self.keys:
            if k[0] == "mod":
                iv = (k[1], k[2])
                if self.ctx.is_projective(iv):
                    v = next(
                        v for v in range(1, self.n + 1) if proj_interval(self.quiver, v) == iv
                    )
                    out[index[k]] = index[("sp", v)]
                else:
                    out[index[k]] = index[("mod",) + self.ctx.tau_interval(iv)]
            else:
                iv = inj_interval(self.quiver, k[1])
                out[index[k]] = index[("mod",) + iv]
        return out

    # -- final assembly ---------------------------------------------------------

    def build(self) -> CategoryPresentation:
        for kx in self.keys:
            for ky in self.keys:
                self.pairs[(kx, ky)] = self.build_pair(kx, ky)
        hom = {}
        for (kx, ky), pd in self.pairs.items():
            if pd.dim:
                hom[(self.keys.index(kx), self.keys.index(ky))] = pd.dim
        comp = {}
        for i, kx in enumerate(self.keys):
            for j, ky in enumerate(self.keys):
                dij = self.pairs[(kx, ky)].dim
                if dij == 0:
                    continue
                for k, kz in enumerate(self.keys):
                    djk = self.pairs[(ky, kz)].dim
                    dik = self.pairs[(kx, kz)].dim
                    if djk == 0 or dik == 0:
                        continue
                    table = []
                    nonzero = False
                    for a in range(dij):
                        row = []
                        for b in range(djk):
                            vec = self.compose_basis(kx, ky, kz, a, b)
                            if any(x != self.field.zero for x in vec):
                                nonzero = True
                            row.append(vec)
                        table.append(row)
                    if nonzero:
                        comp[(i, j, k)] = table
        identities = []
        for kx in self.keys:
            pd = self.pairs[(kx, kx)]
            if kx[0] == "mod":
                ident = identity_hom(self.reps[kx])
            else:
                ident = identity_hom(self.pj[kx[1]])
            identities.append(pd.coords_h0(ident))
        names = [self.names[k] for k in self.keys]
        labelling = self._labelling(hom)
        metadata = {
            "name": f"C(A{self.n})",
            "n": self.n,
            "orientation": self.quiver.orientation,
            "two_cy": True,
            "generator": "quotcat.clustergen",
            "aliases": dict(sorted(self.aliases.items())),
            "labelling": {names[i]: list(d) for i, d in enumerate(labelling)},
        }
        P = CategoryPresentation(
            self.field,
            names,
            hom,
            comp,
            identities,
            sigma=self.sigma_perm(),
            metadata=metadata,
        )
        return P

    def _labelling(self, hom) -> list:
        model = DiagonalModel(self.n)
        m = len(self.keys)
        dims = [[hom.get((i, j), 0) for j in range(m)] for i in range(m)]
        if self.quiver.orientation == "<" * (self.n - 1):
            fan = fan_labelling(self.n)
            lab = [fan[k] for k in self.keys]
            for i in range(m):
                for j in range(m):
                    if dims[i][j] != model.expected_dim(lab[i], lab[j]):
                        raise GenerationError(
                            f"oracle mismatch at ({self.names[self.keys[i]]}, {self.names[self.keys[j]]}): "
                            f"generated {dims[i][j]}, oracle {model.expected_dim(lab[i], lab[j])}"
                        )
            return lab
        lab = search_labelling(model, self.sigma_perm(), dims)
        if lab is None:
            raise GenerationError("no rotation-equivariant diagonal labelling matches the table")
        return lab


def build_cluster_category(n: int, orientation: str | None = None, field: Field = QQ) -> CategoryPresentation:
    """Generate the cluster category of A_n as a validated presentation.

    The output carries the suspension permutation, object names (P_i, I_i,
    S_i, M[a,b], SP_i) and the diagonal labelling in its metadata.  The
    construction aborts with GenerationError if any internal consistency
    check (oracle table, validation, symmetry) fails.
    """
    from .fincat import check_serre_symmetry, validate_category

    builder = _ClusterBuilder(n, orientation, field)
    P = builder.build()
    expected = n * (n + 3) // 2
    if P.n != expected:
        raise GenerationError(f"expected {expected} indecomposables, got {P.n}")
    rep = validate_category(P)
    if not rep.ok:
        raise GenerationError(f"generated presentation invalid: {rep}")
    bad = check_serre_symmetry(P)
    if bad:
        raise GenerationError(f"2-CY symmetry fails at pairs {bad[:5]}")
    for i in range(P.n):
        for j in range(P.n):
            if P.hom_dim(i, j) > 1:
                raise GenerationError(f"hom dimension > 1 at ({i}, {j})")
    return P


def diagonal_dimension_oracle(n: int):
    """Full expected-dimension table of the diagonal model, keyed by pairs."""
    model = DiagonalModel(n)
    return {
        (da, db): model.expected_dim(da, db)
        for da in model.diagonals
        for db in model.diagonals
    }
