"""Seeded random instance generation for property suites.

Everything takes an explicit `random.Random`; the CLI and the tests seed it
from QUIVKIT_SEED (default 20240901) so runs are reproducible.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction

from .algebra import AlgMorphism, IdealSubspace, ideal_generated_by, identity_morphism
from .adjunction import conjugation_automorphism
from .exactlin import Mat, vec_add, vec_scale, vec_zero
from .gabriel import GabrielQuiverResult
from .pathalg import TruncatedTensorAlgebra, universal_map
from .splittings import conjugate_element
from .vquiver import POINT, VQuiver, VQuiverMap

DEFAULT_SEED = 20240901


def seeded_rng(seed=None) -> random.Random:
    if seed is None:
        seed = int(os.environ.get("QUIVKIT_SEED", DEFAULT_SEED))
    return random.Random(seed)


def random_scalar(rng: random.Random, field, *, nonzero=False):
    if field.char == 0:
        while True:
            num = rng.randint(-3, 3)
            den = rng.choice([1, 1, 1, 2, 3])
            if not nonzero or num != 0:
                return Fraction(num, den)
    while True:
        v = rng.randrange(field.char)
        if not nonzero or v != 0:
            return v


def random_vquiver(rng: random.Random, *, max_vertices=4, max_total_arrows=4,
                   prefix="v") -> VQuiver:
    n = rng.randint(1, max_vertices)
    vertices = [f"{prefix}{i + 1}" for i in range(n)]
    total = rng.randint(0, max_total_arrows)
    spaces = {}
    for k in range(total):
        src = rng.choice(vertices)
        tgt = rng.choice(vertices)
        spaces.setdefault((src, tgt), []).append(f"{prefix}x{k}")
    return VQuiver(vertices, spaces)


def random_radical_element(rng, t: TruncatedTensorAlgebra, *, min_length=1):
    f = t.field
    out = vec_zero(f, t.dim)
    for length in range(min_length, t.level):
        for i in t.grading[length]:
            if rng.random() < 0.4:
                c = random_scalar(rng, f)
                if c != f.zero:
                    out = vec_add(f, out,
                                  vec_scale(f, f.of(c), t.carrier.basis_vector(i)))
    return out


def random_relation_ideal(rng, t: TruncatedTensorAlgebra) -> IdealSubspace:
    """Ideal generated by a few random elements of J^2 (possibly zero)."""
    k = rng.randint(0, 2)
    gens = [random_radical_element(rng, t, min_length=2) for _ in range(k)]
    return ideal_generated_by(t.carrier, gens)


def random_identity_class_automorphism(rng, t: TruncatedTensorAlgebra,
                                       ) -> AlgMorphism:
    """Random member of the identity class: conjugation then arrow shifts."""
    f = t.field
    delta = identity_morphism(t.carrier)
    if rng.random() < 0.8 and t.carrier.radical.dim > 0:
        v = random_radical_element(rng, t, min_length=1)
        delta = conjugation_automorphism(t, v)
    if rng.random() < 0.8:
        arrow_images = {}
        for lab in t.vq.arrow_labels():
            src, tgt, _ = t.vq.arrow_location(lab)
            img = t.arrow_element(lab)
            for i, p in enumerate(t.paths):
                if p.start == src and p.end == tgt and p.length >= 2 \
                        and rng.random() < 0.3:
                    c = random_scalar(rng, f)
                    if c != f.zero:
                        img = vec_add(f, img,
                                      vec_scale(f, f.of(c),
                                                t.carrier.basis_vector(i)))
            arrow_images[lab] = img
        idem_images = {v_: t.idempotent(v_) for v_ in t.vq.vertices}
        shift = universal_map(t, t.carrier, idem_images, arrow_images)
        delta = delta.compose(shift)
    return delta


def random_vqmap_to_gq(rng, vq: VQuiver, gq_a: GabrielQuiverResult,
                       field) -> VQuiverMap | None:
    """Random Vquiver map vq -> gq(A); None when no map can exist."""
    tgt = gq_a.vquiver
    n_t = len(tgt.vertices)
    if n_t > len(vq.vertices):
        return None
    kept = rng.sample(range(len(vq.vertices)), n_t)
    image = list(tgt.vertices)
    rng.shuffle(image)
    vm = {v: POINT for v in vq.vertices}
    for pos, idx in enumerate(sorted(kept)):
        vm[vq.vertices[idx]] = image[pos]
    mats = {}
    for (s, t_) in vq.arrow_pairs():
        ws, wt = vm[s], vm[t_]
        if POINT in (ws, wt):
            continue
        d = tgt.dim(ws, wt)
        m = vq.dim(s, t_)
        if d == 0:
            continue
        data = [[field.of(random_scalar(rng, field)) for _ in range(m)]
                for _ in range(d)]
        mats[(s, t_)] = Mat(field, d, m, data)
    return VQuiverMap(field, vq, tgt, vm, mats)


def random_surjective_vqmap_to_gq(rng, vq, gq_a, field, attempts=40):
    for _ in range(attempts):
        rho = random_vqmap_to_gq(rng, vq, gq_a, field)
        if rho is not None and rho.is_surjective():
            return rho
    return None


def random_padm_morphism(rng, t: TruncatedTensorAlgebra, gq_a, *,
                         conjugate=True) -> AlgMorphism | None:
    """Random admissible morphism k[[VQ]] -> A.

    Built from a random vertex assignment onto a (possibly conjugated) copy
    of the lifted idempotents, with random block-compatible radical elements
    for the arrows.
    """
    from .adjunction import psi

    a = gq_a.algebra
    f = t.field
    rho = random_vqmap_to_gq(rng, t.vq, gq_a, f)
    if rho is None:
        return None
    alpha = psi(t, rho, gq_a)
    if conjugate and a.radical.dim > 0 and rng.random() < 0.7:
        w = vec_zero(f, a.dim)
        for v in a.radical.basis:
            c = random_scalar(rng, f)
            if c != f.zero:
                w = vec_add(f, w, vec_scale(f, f.of(c), v))
        cols = [conjugate_element(a, w, col) for col in alpha.matrix.columns()]
        from .algebra import validate_morphism

        alpha = validate_morphism(t.carrier, a,
                                  Mat.from_cols(f, cols, rows=a.dim))
    return alpha


def random_sim1_pair(rng, t: TruncatedTensorAlgebra, gq_a):
    """A pair of morphisms congruent at level 1 (by construction)."""
    alpha = random_padm_morphism(rng, t, gq_a)
    if alpha is None:
        return None
    delta = random_identity_class_automorphism(rng, t)
    beta = alpha.compose(delta)
    return alpha, beta
