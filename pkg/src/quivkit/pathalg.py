"""Truncated completed path algebras of Vquivers.

The algebra of a Vquiver at level n has basis all paths of length < n (words
in arrow labels with composable endpoints, including the length-0 paths, one
idempotent per vertex).  Multiplication is concatenation: p*q means "q, then
p", is zero when endpoints mismatch, and is zero when the combined length
reaches the level.  The radical is the span of paths of length >= 1 and the
m-th radical power is the span of paths of length >= m.
"""

from __future__ import annotations

from .errors import QuivkitError
from .algebra import AlgMorphism, FinAlgebra, validate_algebra, validate_morphism
from .exactlin import Mat, Subspace, vec_add, vec_is_zero, vec_scale, vec_zero
from .vquiver import POINT, Quiver, QuiverMap, VQuiver, VQuiverMap, v_of_inclusion, v_of_quiver


class _Path:
    """Immutable path: start vertex plus arrow labels in application order."""

    __slots__ = ("start", "arrows", "end")

    def __init__(self, start, arrows, end):
        self.start = start
        self.arrows = arrows
        self.end = end

    @property
    def length(self):
        return len(self.arrows)

    def key(self):
        return (self.start, self.arrows)

    def __repr__(self):
        return f"_Path({self.start}, {self.arrows})"


def _path_label(path: _Path, joiner: str) -> str:
    if not path.arrows:
        return f"e{path.start}"
    return joiner.join(reversed(path.arrows))


class TruncatedTensorAlgebra:
    """A path algebra truncated at a level, wrapping a validated FinAlgebra."""

    __slots__ = ("vq", "level", "field", "carrier", "paths", "index",
                 "grading", "vertex_idem", "arrow_index")

    def __init__(self, vq, level, field, carrier, paths, index, grading,
                 vertex_idem, arrow_index):
        self.vq = vq
        self.level = level
        self.field = field
        self.carrier = carrier
        self.paths = paths
        self.index = index
        self.grading = grading
        self.vertex_idem = vertex_idem
        self.arrow_index = arrow_index

    @property
    def dim(self):
        return self.carrier.dim

    def idempotent(self, vertex):
        return self.carrier.basis_vector(self.vertex_idem[vertex])

    def arrow_element(self, label):
        return self.carrier.basis_vector(self.arrow_index[label])

    def paths_of_length_at_least(self, m: int) -> Subspace:
        idxs = []
        for length in range(m, self.level):
            idxs.extend(self.grading[length])
        f = self.field
        vecs = [self.carrier.basis_vector(i) for i in idxs]
        return Subspace.span(f, self.dim, vecs)

    def block_of_paths(self, src, tgt, min_length=0) -> Subspace:
        """Span of paths from src to tgt of length >= min_length."""
        vecs = []
        for i, p in enumerate(self.paths):
            if p.start == src and p.end == tgt and p.length >= min_length:
                vecs.append(self.carrier.basis_vector(i))
        return Subspace.span(self.field, self.dim, vecs)

    def __repr__(self):
        return f"TruncatedTensorAlgebra(level={self.level}, dim={self.dim})"


def build_kvq(field, vq: VQuiver, level: int) -> TruncatedTensorAlgebra:
    """Path algebra of a Vquiver truncated at `level` (level >= 2)."""
    if level < 2:
        raise QuivkitError("LEVEL_TOO_SMALL", "truncation level must be at least 2")
    if not vq.vertices:
        raise QuivkitError("BAD_SHAPE",
                           "path algebra of a point-only Vquiver has dimension 0")
    arrow_info = {}
    for (src, tgt), labels in vq.spaces.items():
        for lab in labels:
            arrow_info[lab] = (src, tgt)
    joiner = "" if all(len(lab) == 1 for lab in arrow_info) else "*"

    by_length = [[_Path(v, (), v) for v in vq.vertices]]
    for length in range(1, level):
        nxt = []
        for p in by_length[length - 1]:
            for (src, tgt), labels in vq.spaces.items():
                if src != p.end:
                    continue
                for lab in labels:
                    nxt.append(_Path(p.start, p.arrows + (lab,), tgt))
        nxt.sort(key=lambda q: tuple(reversed(q.arrows)))
        by_length.append(nxt)

    paths = []
    grading = []
    for length in range(level):
        grading.append(list(range(len(paths), len(paths) + len(by_length[length]))))
        paths.extend(by_length[length])
    index = {p.key(): i for i, p in enumerate(paths)}
    dim = len(paths)
    labels = [_path_label(p, joiner) for p in paths]
    if len(set(labels)) != dim:
        labels = [f"p{i}" if p.arrows else f"e{p.start}"
                  for i, p in enumerate(paths)]

    sc = [[None] * dim for _ in range(dim)]
    for i, p in enumerate(paths):
        for j, q in enumerate(paths):
            # p * q = "q then p"
            if p.start != q.end or p.length + q.length >= level:
                sc[i][j] = vec_zero(field, dim)
            else:
                k = index[(q.start, q.arrows + p.arrows)]
                v = vec_zero(field, dim)
                v[k] = field.one
                sc[i][j] = v
    unit = vec_zero(field, dim)
    for v in vq.vertices:
        unit[index[(v, ())]] = field.one

    arrow_ideal_rows = []
    for length in range(1, level):
        for i in grading[length]:
            row = vec_zero(field, dim)
            row[i] = field.one
            arrow_ideal_rows.append(row)
    radical_hint = Subspace.span(field, dim, arrow_ideal_rows)
    ss_hint = []
    for v in vq.vertices:
        vec = vec_zero(field, dim)
        vec[index[(v, ())]] = field.one
        ss_hint.append(vec)

    carrier = validate_algebra(field, labels, sc, unit,
                               radical_hint=radical_hint, ss_class_hint=ss_hint,
                               check_associativity=False)
    vertex_idem = {v: index[(v, ())] for v in vq.vertices}
    arrow_index = {}
    for (src, tgt), labs in vq.spaces.items():
        for lab in labs:
            arrow_index[lab] = index[(src, (lab,))]
    return TruncatedTensorAlgebra(vq, level, field, carrier, paths, index,
                                  grading, vertex_idem, arrow_index)


def universal_map(t: TruncatedTensorAlgebra, target: FinAlgebra,
                  idem_images, arrow_images) -> AlgMorphism:
    """The unique morphism extending vertex and arrow images.

    `idem_images` maps each vertex to an element of the target (orthogonal
    idempotents summing to 1, zeros allowed); `arrow_images` maps each arrow
    label to an element of the target, forced to live in the matching Peirce
    block and inside the target radical.  Paths map to the products of their
    arrow images.
    """
    f = t.field
    if target.field != f:
        raise QuivkitError("BAD_FIELD", "target over a different field")
    if target.truncation_level > t.level:
        raise QuivkitError(
            "TRUNCATION_INCOMPATIBLE",
            f"target needs J^{target.truncation_level} = 0 but level is {t.level}")
    u = {}
    for v in t.vq.vertices:
        if v not in idem_images:
            raise QuivkitError("BIMODULE_CONDITION_FAIL", f"no image for vertex {v}")
        u[v] = list(idem_images[v])
    total = vec_zero(f, target.dim)
    for v in t.vq.vertices:
        uv = u[v]
        if target.mul(uv, uv) != uv:
            raise QuivkitError("BIMODULE_CONDITION_FAIL",
                               f"image of vertex {v} is not idempotent")
        total = vec_add(f, total, uv)
    if total != target.unit:
        raise QuivkitError("BIMODULE_CONDITION_FAIL",
                           "vertex images do not sum to 1")
    verts = t.vq.vertices
    for a_i in range(len(verts)):
        for b_i in range(a_i + 1, len(verts)):
            va, vb = verts[a_i], verts[b_i]
            if not vec_is_zero(f, target.mul(u[va], u[vb])) or \
                    not vec_is_zero(f, target.mul(u[vb], u[va])):
                raise QuivkitError("BIMODULE_CONDITION_FAIL",
                                   f"images of {va} and {vb} are not orthogonal")
    jt = target.radical
    x = {}
    for (src, tgt), labs in t.vq.spaces.items():
        for lab in labs:
            if lab not in arrow_images:
                raise QuivkitError("BIMODULE_CONDITION_FAIL",
                                   f"no image for arrow {lab}")
            xa = list(arrow_images[lab])
            framed = target.mul(u[tgt], target.mul(xa, u[src]))
            if framed != xa:
                raise QuivkitError("BIMODULE_CONDITION_FAIL",
                                   f"image of arrow {lab} escapes its block")
            if not jt.contains(xa):
                raise QuivkitError("TRUNCATION_INCOMPATIBLE",
                                   f"image of arrow {lab} is not in the radical")
            x[lab] = xa

    cols = []
    for p in t.paths:
        if p.length == 0:
            cols.append(u[p.start])
            continue
        acc = x[p.arrows[0]]
        for lab in p.arrows[1:]:
            acc = target.mul(x[lab], acc)
        cols.append(acc)
    m = Mat.from_cols(f, cols, rows=target.dim)
    return validate_morphism(t.carrier, target, m)


def kvq_on_map(rho: VQuiverMap, level: int, *, src: TruncatedTensorAlgebra = None,
               tgt: TruncatedTensorAlgebra = None) -> AlgMorphism:
    """Functorial morphism k[[source]] -> k[[target]] of a Vquiver map."""
    field = rho.field
    if src is None:
        src = build_kvq(field, rho.source, level)
    if tgt is None:
        tgt = build_kvq(field, rho.target, level)
    if src.vq != rho.source or tgt.vq != rho.target or src.level != level \
            or tgt.level != level:
        raise QuivkitError("BAD_ARGUMENT", "prebuilt algebras do not match the map")
    f = field
    idem_images = {}
    for v in rho.source.vertices:
        w = rho.vertex_map[v]
        idem_images[v] = vec_zero(f, tgt.dim) if w == POINT else tgt.idempotent(w)
    arrow_images = {}
    for (s, t_), labs in rho.source.spaces.items():
        ws, wt = rho.vertex_map[s], rho.vertex_map[t_]
        killed = POINT in (ws, wt) or rho.target.dim(ws, wt) == 0
        block = rho.block(s, t_) if not killed else None
        tgt_labels = rho.target.spaces.get((ws, wt), [])
        for j, lab in enumerate(labs):
            if killed:
                arrow_images[lab] = vec_zero(f, tgt.dim)
                continue
            img = vec_zero(f, tgt.dim)
            for i_t, tlab in enumerate(tgt_labels):
                c = block.data[i_t][j]
                if c != f.zero:
                    img = vec_add(f, img, vec_scale(f, c, tgt.arrow_element(tlab)))
            arrow_images[lab] = img
    return universal_map(src, tgt.carrier, idem_images, arrow_images)


def cpa(field, q: Quiver, level: int) -> TruncatedTensorAlgebra:
    """Completed path algebra of a quiver, truncated: k[[V(Q)]] at the level."""
    return build_kvq(field, v_of_quiver(q), level)


def cpa_on_inclusion(iota: QuiverMap, level: int, field, *,
                     src: TruncatedTensorAlgebra = None,
                     tgt: TruncatedTensorAlgebra = None) -> AlgMorphism:
    """CPA(R) -> CPA(Q) for an injective quiver map Q -> R.

    Computed through the Vquiver functor and cross-checked against the direct
    description (kill every path not completely inside Q).
    """
    rho = v_of_inclusion(iota, field)
    if src is None:
        src = build_kvq(field, rho.source, level)
    if tgt is None:
        tgt = build_kvq(field, rho.target, level)
    morph = kvq_on_map(rho, level, src=src, tgt=tgt)
    inv_v = {w: v for v, w in iota.vertex_map.items()}
    inv_a = {b: a for a, b in iota.arrow_map.items()}
    f = field
    cols = []
    for p in src.paths:
        if p.length == 0:
            v = inv_v.get(p.start)
            cols.append(vec_zero(f, tgt.dim) if v is None else tgt.idempotent(v))
            continue
        pre = [inv_a.get(lab) for lab in p.arrows]
        if any(a is None for a in pre):
            cols.append(vec_zero(f, tgt.dim))
            continue
        start = inv_v[p.start]
        key = (start, tuple(pre))
        cols.append(tgt.carrier.basis_vector(tgt.index[key]))
    direct = Mat.from_cols(f, cols, rows=tgt.dim)
    if direct != morph.matrix:
        raise QuivkitError("INTERNAL",
                           "path-killing map disagrees with the functorial one")
    return morph


def k2vq(field, vq: VQuiver) -> TruncatedTensorAlgebra:
    """The level-2 path algebra (vertices plus arrows, J^2 = 0)."""
    return build_kvq(field, vq, 2)


def k2vq_on_map(rho: VQuiverMap, *, src=None, tgt=None) -> AlgMorphism:
    return kvq_on_map(rho, 2, src=src, tgt=tgt)
