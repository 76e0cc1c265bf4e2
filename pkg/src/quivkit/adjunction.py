"""Hom-set bijections between Vquiver maps and algebra morphism classes.

psi turns a Vquiver map VQ -> gq(A) into an algebra morphism k[[VQ]] -> A
through a chosen splitting; phi reads a morphism back off its values on
vertices and arrows.  The unit and counit, the right adjoint on the level-2
side, the factorization of congruent surjections through an automorphism
close to the identity, and the ideal-orbit machinery all live here.
"""

from __future__ import annotations

from .errors import QuivkitError
from .algebra import (
    AlgMorphism,
    FinAlgebra,
    IdealSubspace,
    identity_morphism,
    ideal_subspace,
    quotient_algebra,
    validate_morphism,
)
from .exactlin import (
    Mat,
    Subspace,
    kernel,
    solve,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vec_zero,
)
from .gabriel import GabrielQuiverResult, check_sim, gq, gq_on_morphism
from .pathalg import TruncatedTensorAlgebra, build_kvq, kvq_on_map, universal_map
from .splittings import conjugate_element
from .vquiver import POINT, VQuiverMap, compose_vq, identity_vqmap


class IdealOrbitClass:
    """Orbit of a relation ideal under the identity class, by representative."""

    __slots__ = ("parent", "representative")

    def __init__(self, parent: TruncatedTensorAlgebra, representative: IdealSubspace):
        from .algebra import is_relation_ideal

        if not representative.parent.same_as(parent.carrier):
            raise QuivkitError("BAD_ARGUMENT", "ideal lives in a different algebra")
        if not is_relation_ideal(representative):
            raise QuivkitError("BAD_ARGUMENT", "representative is not inside J^2")
        self.parent = parent
        self.representative = representative

    def __repr__(self):
        return f"IdealOrbitClass(dim={self.representative.dim})"


# ---------------------------------------------------------------------------
# psi and phi
# ---------------------------------------------------------------------------

def psi(t: TruncatedTensorAlgebra, rho: VQuiverMap,
        gq_a: GabrielQuiverResult) -> AlgMorphism:
    """Morphism k[[VQ]] -> A attached to a Vquiver map VQ -> gq(A).

    Vertices go to the splitting's idempotents, arrows through the chosen
    section of J -> J/J^2; the class of the result is independent of the
    splitting.
    """
    a = gq_a.algebra
    if rho.source != t.vq:
        raise QuivkitError("TARGET_MISMATCH", "map source is not the path algebra's Vquiver")
    if rho.target != gq_a.vquiver:
        raise QuivkitError("TARGET_MISMATCH", "map target is not gq(A)")
    if a.truncation_level > t.level:
        raise QuivkitError("TRUNCATION_INCOMPATIBLE",
                           "path algebra level below the target truncation")
    f = t.field
    idem_images = {}
    for v in t.vq.vertices:
        w = rho.vertex_map[v]
        if w == POINT:
            idem_images[v] = vec_zero(f, a.dim)
        else:
            idem_images[v] = gq_a.idempotent_of_vertex(w)
    arrow_images = {}
    for (src, tgt), labs in t.vq.spaces.items():
        ws, wt = rho.vertex_map[src], rho.vertex_map[tgt]
        killed = POINT in (ws, wt) or gq_a.vquiver.dim(ws, wt) == 0
        block = None if killed else rho.block(src, tgt)
        basis_vecs = None if killed else gq_a.arrow_bases[(ws, wt)]
        for j, lab in enumerate(labs):
            if killed:
                arrow_images[lab] = vec_zero(f, a.dim)
                continue
            img = vec_zero(f, a.dim)
            for i_t, bvec in enumerate(basis_vecs):
                c = block.data[i_t][j]
                if c != f.zero:
                    img = vec_add(f, img, vec_scale(f, c, bvec))
            arrow_images[lab] = img
    return universal_map(t, a, idem_images, arrow_images)


def phi(t: TruncatedTensorAlgebra, alpha: AlgMorphism,
        gq_a: GabrielQuiverResult) -> VQuiverMap:
    """Vquiver map VQ -> gq(A) read off a morphism k[[VQ]] -> A."""
    a = gq_a.algebra
    if not alpha.source.same_as(t.carrier):
        raise QuivkitError("BAD_ARGUMENT", "morphism source is not the path algebra")
    if not alpha.target.same_as(a):
        raise QuivkitError("BAD_ARGUMENT", "morphism target is not gq's algebra")
    f = t.field
    vertex_map = {}
    for v in t.vq.vertices:
        img = alpha.apply(t.idempotent(v))
        if vec_is_zero(f, img):
            vertex_map[v] = POINT
            continue
        name = gq_a.vertex_of_idempotent(img)
        if name is None:
            raise QuivkitError("INTERNAL", "vertex image matches no orbit")
        vertex_map[v] = name
    mats = {}
    for (src, tgt), labs in t.vq.spaces.items():
        ws, wt = vertex_map[src], vertex_map[tgt]
        if POINT in (ws, wt):
            continue
        d = gq_a.vquiver.dim(ws, wt)
        if d == 0:
            continue
        cols = []
        for lab in labs:
            img = alpha.apply(t.arrow_element(lab))
            coords = gq_a.arrow_class_coords(ws, wt, img)
            if coords is None:
                raise QuivkitError("INTERNAL", "arrow image class escapes its block")
            cols.append(coords)
        mats[(src, tgt)] = Mat.from_cols(f, cols, rows=d)
    return VQuiverMap(f, t.vq, gq_a.vquiver, vertex_map, mats)


def unit_map(t: TruncatedTensorAlgebra):
    """Unit component at a Vquiver: VQ -> gq(k[[VQ]]), an isomorphism.

    Returns (map, gq result); the isomorphism property is asserted.
    """
    gq_t = gq(t.carrier)
    eta = phi(t, identity_morphism(t.carrier), gq_t)
    if not eta.is_isomorphism():
        raise QuivkitError("INTERNAL", "unit map failed to be an isomorphism")
    return eta, gq_t


class CounitResult:
    """Counit representative plus its kernel and construction data."""

    __slots__ = ("morphism", "kernel_ideal", "source_algebra", "gq_result")

    def __init__(self, morphism, kernel_ideal, source_algebra, gq_result):
        self.morphism = morphism
        self.kernel_ideal = kernel_ideal
        self.source_algebra = source_algebra
        self.gq_result = gq_result


def counit(a: FinAlgebra, *, level: int = None,
           splitting=None) -> CounitResult:
    """Counit representative k[[gq(A)]] -> A with its kernel (a relation ideal)."""
    from .algebra import is_relation_ideal

    gq_a = gq(a, splitting)
    if level is None:
        level = max(2, a.truncation_level)
    t = build_kvq(a.field, gq_a.vquiver, level)
    eps = psi(t, identity_vqmap(gq_a.vquiver, a.field), gq_a)
    if not eps.surjective:
        raise QuivkitError("INTERNAL", "counit representative is not surjective")
    ker = ideal_subspace(t.carrier, kernel(eps.matrix))
    if not is_relation_ideal(ker):
        raise QuivkitError("INTERNAL", "counit kernel is not a relation ideal")
    return CounitResult(eps, ker, t, gq_a)


# ---------------------------------------------------------------------------
# naturality checks
# ---------------------------------------------------------------------------

def naturality_check_second_var(t: TruncatedTensorAlgebra, alpha: AlgMorphism,
                                gq_a: GabrielQuiverResult,
                                gq_b: GabrielQuiverResult, rhos) -> bool:
    """psi(gq(alpha) . rho) ~1 alpha . psi(rho) for each sampled rho."""
    gqalpha = gq_on_morphism(alpha, gq_a, gq_b)
    for rho in rhos:
        lhs = psi(t, compose_vq(gqalpha, rho), gq_b)
        rhs = alpha.compose(psi(t, rho, gq_a))
        if not check_sim(lhs, rhs, 1):
            return False
    return True


def naturality_check_first_var(rho: VQuiverMap, gq_a: GabrielQuiverResult,
                               level: int, sigmas, *, t_src=None,
                               t_tgt=None) -> bool:
    """psi(sigma . rho) ~1 psi(sigma) . k[[rho]] for each sampled sigma.

    Here rho: VR -> VQ and sigma: VQ -> gq(A)."""
    if t_src is None:
        t_src = build_kvq(rho.field, rho.source, level)
    if t_tgt is None:
        t_tgt = build_kvq(rho.field, rho.target, level)
    krho = kvq_on_map(rho, level, src=t_src, tgt=t_tgt)
    for sigma in sigmas:
        lhs = psi(t_src, compose_vq(sigma, rho), gq_a)
        rhs = psi(t_tgt, sigma, gq_a).compose(krho)
        if not check_sim(lhs, rhs, 1):
            return False
    return True


# ---------------------------------------------------------------------------
# the right adjoint on the level-2 side
# ---------------------------------------------------------------------------

def right_adjoint_phi(rho: VQuiverMap, gq_a: GabrielQuiverResult, *,
                      k2_target: TruncatedTensorAlgebra = None) -> AlgMorphism:
    """Morphism A -> k2[[VQ]] attached to a Vquiver map gq(A) -> VQ.

    Decomposes A as (splitting) + (arrow sections) + J^2, sends the splitting
    part through the vertex map, the arrow part through the arrow matrices,
    and kills J^2.  Multiplicativity is checked at validation rather than
    assumed.
    """
    a = gq_a.algebra
    if rho.source != gq_a.vquiver:
        raise QuivkitError("SOURCE_MISMATCH", "map source is not gq(A)")
    f = a.field
    if k2_target is None:
        k2_target = build_kvq(f, rho.target, 2)
    b = k2_target.carrier
    # columns of the decomposition: idempotents, block sections, J^2 basis
    cols = []
    tags = []
    for pos, e in enumerate(gq_a.splitting.idems.elements):
        cols.append(list(e))
        tags.append(("idem", pos))
    for (src, tgt), vecs in sorted(gq_a.arrow_bases.items()):
        for k, v in enumerate(vecs):
            cols.append(list(v))
            tags.append(("arrow", (src, tgt, k)))
    j2 = a.radical_power(2)
    for v in j2.basis:
        cols.append(list(v))
        tags.append(("j2", None))
    decomp = Mat.from_cols(f, cols, rows=a.dim)
    out_cols = []
    for bidx in range(a.dim):
        coords = solve(decomp, a.basis_vector(bidx))
        if coords is None:
            raise QuivkitError("INTERNAL", "splitting decomposition failed")
        out = vec_zero(f, b.dim)
        for c, tag in zip(coords, tags):
            if c == f.zero:
                continue
            kind, info = tag
            if kind == "idem":
                w = rho.vertex_map[gq_a.vertex_names[info]]
                if w != POINT:
                    out = vec_add(f, out,
                                  vec_scale(f, c, k2_target.idempotent(w)))
            elif kind == "arrow":
                src, tgt, k = info
                ws, wt = rho.vertex_map[src], rho.vertex_map[tgt]
                if POINT in (ws, wt) or rho.target.dim(ws, wt) == 0:
                    continue
                block = rho.block(src, tgt)
                tgt_labels = rho.target.spaces[(ws, wt)]
                for i_t, tlab in enumerate(tgt_labels):
                    cc = block.data[i_t][k]
                    if cc != f.zero:
                        out = vec_add(
                            f, out,
                            vec_scale(f, f.mul(c, cc),
                                      k2_target.arrow_element(tlab)))
        out_cols.append(out)
    m = Mat.from_cols(f, out_cols, rows=b.dim)
    return validate_morphism(a, b, m)


# ---------------------------------------------------------------------------
# factorization of congruent surjections
# ---------------------------------------------------------------------------

def conjugation_automorphism(t: TruncatedTensorAlgebra, v) -> AlgMorphism:
    """The automorphism x -> (1+v) x (1+v)^{-1} of the path algebra, v in J."""
    a = t.carrier
    if not a.radical.contains(v):
        raise QuivkitError("BAD_ARGUMENT", "conjugation element must lie in J")
    cols = [conjugate_element(a, v, a.basis_vector(i)) for i in range(a.dim)]
    m = Mat.from_cols(a.field, cols, rows=a.dim)
    return validate_morphism(a, a, m)


def factor_delta(t: TruncatedTensorAlgebra, alpha: AlgMorphism,
                 beta: AlgMorphism) -> AlgMorphism:
    """delta in the identity class with alpha = beta . delta, exactly.

    Both inputs must be surjective morphisms k[[VQ]] -> A congruent at level
    1; non-surjective inputs are refused (the factorization genuinely fails
    for them).  Construction: first conjugate so the vertex images agree,
    then correct the arrows by a section of the target's J^2 layer.
    """
    a = alpha.target
    f = t.field
    if not alpha.source.same_as(t.carrier) or not beta.source.same_as(t.carrier):
        raise QuivkitError("BAD_ARGUMENT", "morphism sources must be the path algebra")
    if not alpha.target.same_as(beta.target):
        raise QuivkitError("BAD_ARGUMENT", "morphism targets differ")
    if not alpha.surjective or not beta.surjective:
        raise QuivkitError("NOT_SURJECTIVE",
                           "factorization requires surjective morphisms")
    if not check_sim(alpha, beta, 1):
        raise QuivkitError("NOT_SIM1", "morphisms are not congruent at level 1")

    verts = t.vq.vertices
    ua = {v: alpha.apply(t.idempotent(v)) for v in verts}
    ub = {v: beta.apply(t.idempotent(v)) for v in verts}

    # step 1: one w in J(A) conjugating all beta vertex images to alpha's
    jbasis = a.radical.basis
    w = vec_zero(f, a.dim)
    if jbasis:
        rows = []
        rhs = []
        for v in verts:
            cols = [vec_sub(f, a.mul(jb, ub[v]), a.mul(ua[v], jb))
                    for jb in jbasis]
            rows.extend(Mat.from_cols(f, cols, rows=a.dim).data)
            rhs.extend(vec_sub(f, ua[v], ub[v]))
        sol = solve(Mat.from_rows(f, rows, cols=len(jbasis)), rhs)
        if sol is None:
            raise QuivkitError("INTERNAL", "vertex conjugation system inconsistent")
        for c, jb in zip(sol, jbasis):
            if c != f.zero:
                w = vec_add(f, w, vec_scale(f, c, jb))
    for v in verts:
        if conjugate_element(a, w, ub[v]) != ua[v]:
            raise QuivkitError("INTERNAL", "vertex conjugation failed")

    # step 2: lift w through beta (beta maps J onto J(A))
    jt_basis = t.carrier.radical.basis
    lift_cols = [beta.apply(jb) for jb in jt_basis]
    lift_sys = Mat.from_cols(f, lift_cols, rows=a.dim) if lift_cols \
        else Mat.zeros(f, a.dim, 0)
    lift_sol = solve(lift_sys, w)
    if lift_sol is None:
        raise QuivkitError("INTERNAL", "radical lift through beta failed")
    v_lift = vec_zero(f, t.dim)
    for c, jb in zip(lift_sol, jt_basis):
        if c != f.zero:
            v_lift = vec_add(f, v_lift, vec_scale(f, c, jb))
    delta1 = conjugation_automorphism(t, v_lift)
    beta1 = beta.compose(delta1)

    # step 3: arrow corrections through a blockwise section of beta1 on J^2
    j2a = a.radical_power(2)
    arrow_images = {}
    for (src, tgt), labs in t.vq.spaces.items():
        block_idx = [i for i, p in enumerate(t.paths)
                     if p.start == src and p.end == tgt and p.length >= 2]
        block_cols = [beta1.apply(t.carrier.basis_vector(i)) for i in block_idx]
        block_sys = Mat.from_cols(f, block_cols, rows=a.dim) if block_cols \
            else Mat.zeros(f, a.dim, 0)
        for lab in labs:
            avec = t.arrow_element(lab)
            defect = vec_sub(f, alpha.apply(avec), beta1.apply(avec))
            if vec_is_zero(f, defect):
                arrow_images[lab] = avec
                continue
            if not j2a.contains(defect):
                raise QuivkitError("INTERNAL", "arrow defect escapes J^2")
            corr = solve(block_sys, defect)
            if corr is None:
                raise QuivkitError("INTERNAL", "arrow defect has no blockwise lift")
            img = list(avec)
            for c, i in zip(corr, block_idx):
                if c != f.zero:
                    img = vec_add(f, img,
                                  vec_scale(f, c, t.carrier.basis_vector(i)))
            arrow_images[lab] = img
    idem_images = {v: t.idempotent(v) for v in verts}
    delta2 = universal_map(t, t.carrier, idem_images, arrow_images)
    delta = delta1.compose(delta2)
    if beta.compose(delta).matrix != alpha.matrix:
        raise QuivkitError("INTERNAL", "factorization identity failed")
    if not check_sim(delta, identity_morphism(t.carrier), 1):
        raise QuivkitError("INTERNAL", "delta left the identity class")
    return delta


# ---------------------------------------------------------------------------
# relation ideals and the ideal-orbit equivalence
# ---------------------------------------------------------------------------

def apply_to_ideal(delta: AlgMorphism, ideal: IdealSubspace) -> IdealSubspace:
    """Image of an ideal under an automorphism."""
    a = delta.source
    imgs = [delta.apply(v) for v in ideal.space.basis]
    return ideal_subspace(delta.target,
                          Subspace.span(a.field, delta.target.dim, imgs))


def gamma(delta: AlgMorphism, pi_i: AlgMorphism, pi_iprime: AlgMorphism,
          ) -> AlgMorphism:
    """Induced isomorphism on quotients for delta mapping I onto I'.

    `pi_i` and `pi_iprime` are the canonical projections; delta must be in
    the identity class with delta(ker pi_i) = ker pi_iprime (else
    DELTA_INVALID).
    """
    t_alg = delta.source
    if not delta.target.same_as(t_alg) or not pi_i.source.same_as(t_alg) \
            or not pi_iprime.source.same_as(t_alg):
        raise QuivkitError("BAD_ARGUMENT", "mismatched algebras")
    if not check_sim(delta, identity_morphism(t_alg), 1):
        raise QuivkitError("DELTA_INVALID", "delta is not in the identity class")
    ker_i = kernel(pi_i.matrix)
    ker_ip = kernel(pi_iprime.matrix)
    img = Subspace.span(t_alg.field, t_alg.dim,
                        [delta.apply(v) for v in ker_i.basis])
    if img != ker_ip:
        raise QuivkitError("DELTA_INVALID", "delta does not map I onto I'")
    f = t_alg.field
    q_i, q_ip = pi_i.target, pi_iprime.target
    # columns: send each quotient basis class through delta
    cols = []
    for bidx in range(q_i.dim):
        pre = solve(pi_i.matrix, q_i.basis_vector(bidx))
        if pre is None:
            raise QuivkitError("INTERNAL", "projection is not surjective")
        cols.append(pi_iprime.apply(delta.apply(pre)))
    m = Mat.from_cols(f, cols, rows=q_ip.dim)
    g = validate_morphism(q_i, q_ip, m)
    if not g.surjective or q_i.dim != q_ip.dim:
        raise QuivkitError("INTERNAL", "induced quotient map is not invertible")
    return g


def counit_factorization(cu: CounitResult) -> AlgMorphism:
    """The isomorphism k[[gq(A)]]/K -> A through which the counit factors."""
    t_alg = cu.source_algebra.carrier
    q, pi = quotient_algebra(t_alg, cu.kernel_ideal)
    f = t_alg.field
    cols = []
    for bidx in range(q.dim):
        pre = solve(pi.matrix, q.basis_vector(bidx))
        if pre is None:
            raise QuivkitError("INTERNAL", "projection not surjective")
        cols.append(cu.morphism.apply(pre))
    m = Mat.from_cols(f, cols, rows=cu.morphism.target.dim)
    eps_inf = validate_morphism(q, cu.morphism.target, m)
    eps_inf.inverse()  # raises if singular
    return eps_inf


def gq_infty(a: FinAlgebra, *, level: int = None):
    """(Gabriel quiver, orbit class of the counit kernel), plus the counit."""
    cu = counit(a, level=level)
    orbit = IdealOrbitClass(cu.source_algebra, cu.kernel_ideal)
    return cu.gq_result, orbit, cu


def kinfty_on_map(rho: VQuiverMap, src_cls: IdealOrbitClass,
                  tgt_cls: IdealOrbitClass, *,
                  witness_src=None, witness_tgt=None) -> AlgMorphism:
    """Morphism k[[VQ]]/I -> k[[VR]]/K induced by rho on ideal-orbit pairs.

    `witness_src` is (I', delta_I) with delta_I(I) = I', and likewise for the
    target; defaults take the representatives themselves with the identity.
    Requires rho surjective and k[[rho]](I') contained in K'
    (WITNESS_INVALID otherwise).
    """
    t_src, t_tgt = src_cls.parent, tgt_cls.parent
    if rho.source != t_src.vq or rho.target != t_tgt.vq:
        raise QuivkitError("BAD_ARGUMENT", "map endpoints do not match the classes")
    if not rho.is_surjective():
        raise QuivkitError("NOT_SURJECTIVE",
                           "only surjective maps are admitted here")
    if t_src.level != t_tgt.level:
        raise QuivkitError("TRUNCATION_INCOMPATIBLE", "levels differ")
    ident_src = identity_morphism(t_src.carrier)
    ident_tgt = identity_morphism(t_tgt.carrier)
    i_rep = src_cls.representative
    k_rep = tgt_cls.representative
    iprime, delta_i = witness_src if witness_src is not None else (i_rep, ident_src)
    kprime, delta_k = witness_tgt if witness_tgt is not None else (k_rep, ident_tgt)
    if apply_to_ideal(delta_i, i_rep) != iprime:
        raise QuivkitError("WITNESS_INVALID", "source witness does not map I to I'")
    if apply_to_ideal(delta_k, k_rep) != kprime:
        raise QuivkitError("WITNESS_INVALID", "target witness does not map K to K'")
    krho = kvq_on_map(rho, t_src.level, src=t_src, tgt=t_tgt)
    for v in iprime.space.basis:
        if not kprime.space.contains(krho.apply(v)):
            raise QuivkitError("WITNESS_INVALID",
                               "k[[rho]] does not take I' into K'")
    q_i, pi_i = quotient_algebra(t_src.carrier, i_rep)
    q_ip, pi_ip = quotient_algebra(t_src.carrier, iprime)
    q_k, pi_k = quotient_algebra(t_tgt.carrier, k_rep)
    q_kp, pi_kp = quotient_algebra(t_tgt.carrier, kprime)
    gamma_i = gamma(delta_i, pi_i, pi_ip)
    gamma_k = gamma(delta_k, pi_k, pi_kp)
    # induced map on the primed quotients
    f = t_src.field
    cols = []
    for bidx in range(q_ip.dim):
        pre = solve(pi_ip.matrix, q_ip.basis_vector(bidx))
        if pre is None:
            raise QuivkitError("INTERNAL", "projection not surjective")
        cols.append(pi_kp.apply(krho.apply(pre)))
    mid = validate_morphism(q_ip, q_kp, Mat.from_cols(f, cols, rows=q_kp.dim))
    return gamma_k.inverse().compose(mid).compose(gamma_i)


def same_ideal_orbit(t: TruncatedTensorAlgebra, ideal_a: IdealSubspace,
                     ideal_b: IdealSubspace, budget: int = 200):
    """Search for delta in the identity class with delta(I) = I'.

    Bounded search over conjugations by 1+v and single-arrow perturbations
    (small coefficient menus); returns the witness automorphism or None when
    the budget is exhausted, which is not a disproof.
    """
    f = t.field
    a = t.carrier
    if ideal_a.space == ideal_b.space:
        return identity_morphism(a)
    if ideal_a.dim != ideal_b.dim:
        return None
    if f.char == 0:
        coeffs = [f.of(1), f.of(-1), f.of(2), f.of(-2)]
    else:
        coeffs = [f.of(c) for c in range(1, f.char)]
    tried = 0

    def check(delta):
        img = Subspace.span(f, a.dim,
                            [delta.apply(v) for v in ideal_a.space.basis])
        return img == ideal_b.space

    # conjugations by single scaled arrows
    for lab in t.vq.arrow_labels():
        base = t.arrow_element(lab)
        for c in coeffs:
            if tried >= budget:
                return None
            tried += 1
            delta = conjugation_automorphism(t, vec_scale(f, c, base))
            if check(delta):
                return delta
    # single-arrow perturbations a -> a + c * (longer path in the same block)
    for lab in t.vq.arrow_labels():
        src, tgt, _ = t.vq.arrow_location(lab)
        deeper = [i for i, p in enumerate(t.paths)
                  if p.start == src and p.end == tgt and p.length >= 2]
        for i in deeper:
            zvec = a.basis_vector(i)
            for c in coeffs:
                if tried >= budget:
                    return None
                tried += 1
                arrow_images = {}
                for lab2 in t.vq.arrow_labels():
                    img = t.arrow_element(lab2)
                    if lab2 == lab:
                        img = vec_add(f, img, vec_scale(f, c, zvec))
                    arrow_images[lab2] = img
                idem_images = {v: t.idempotent(v) for v in t.vq.vertices}
                delta = universal_map(t, a, idem_images, arrow_images)
                if check(delta):
                    return delta
    return None
