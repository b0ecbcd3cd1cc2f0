"""Finite-dimensional representations of bound quiver algebras.

A representation assigns a vector space F_p^{d_v} to each vertex and a
matrix of shape (d_target, d_source) to each arrow; a path acts by the
product of its arrow matrices, first arrow rightmost.  In these terms the
projective P_v has basis the paths starting at v, and the injective I_v has
the dual basis of the paths ending at v.

Vertex arguments of the public constructors ``simple``/``projective``/
``injective`` are 1-based; everything else indexes vertices from 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import fp
from .algebra import BoundQuiverAlgebra
from .errors import NotProjective
from .fitting import find_idempotent


@dataclass(frozen=True, eq=False)
class Representation:
    alg: BoundQuiverAlgebra
    dims: tuple[int, ...]
    mats: tuple[np.ndarray, ...]

    def __post_init__(self):
        for k, m in enumerate(self.mats):
            s, t = self.alg.arrow_src[k], self.alg.arrow_tgt[k]
            if m.shape != (self.dims[t], self.dims[s]):
                raise ValueError("arrow %d has matrix shape %s, expected %s"
                                 % (k, m.shape, (self.dims[t], self.dims[s])))

    @property
    def p(self) -> int:
        return self.alg.prime

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    @cached_property
    def offsets(self) -> np.ndarray:
        return np.concatenate([[0], np.cumsum(self.dims)]).astype(np.int64)

    def path_matrix(self, b: int) -> np.ndarray:
        """Action of the basis path b: matrix from vertex src(b) to tgt(b)."""
        start, word = self.alg.basis[b]
        out = np.eye(self.dims[start], dtype=np.int64)
        for a in word:
            out = fp.matmul(self.mats[a], out, self.p)
        return out

    def relations_hold(self) -> bool:
        alg = self.alg
        for rel in alg.relations:
            s = rel.terms[0][1].start - 1
            word0 = tuple(alg.quiver.arrow_index(l) for l in rel.terms[0][1].arrows)
            t = int(alg.arrow_tgt[word0[-1]])
            acc = np.zeros((self.dims[t], self.dims[s]), dtype=np.int64)
            for c, pw in rel.terms:
                m = np.eye(self.dims[s], dtype=np.int64)
                for l in pw.arrows:
                    m = fp.matmul(self.mats[alg.quiver.arrow_index(l)], m, self.p)
                acc = (acc + c * m) % self.p
            if np.any(acc):
                return False
        return True

    def key(self) -> tuple:
        return (self.dims, tuple(m.tobytes() for m in self.mats))

    def __repr__(self):
        return "Representation(dims=%s)" % (self.dims,)


@dataclass(frozen=True, eq=False)
class ModuleMorphism:
    source: Representation
    target: Representation
    maps: tuple[np.ndarray, ...]   # per vertex, shape (target dim, source dim)

    @property
    def p(self) -> int:
        return self.source.p

    def is_zero(self) -> bool:
        return not any(np.any(m) for m in self.maps)

    def is_morphism(self) -> bool:
        s, t, p = self.source, self.target, self.p
        alg = s.alg
        for k in range(len(s.mats)):
            u, w = alg.arrow_src[k], alg.arrow_tgt[k]
            lhs = fp.matmul(t.mats[k], self.maps[u], p)
            rhs = fp.matmul(self.maps[w], s.mats[k], p)
            if np.any((lhs - rhs) % p):
                return False
        return True

    def compose(self, other: "ModuleMorphism") -> "ModuleMorphism":
        """self ∘ other."""
        return ModuleMorphism(other.source, self.target,
                              tuple(fp.matmul(a, b, self.p) for a, b in zip(self.maps, other.maps)))

    def __add__(self, other):
        return ModuleMorphism(self.source, self.target,
                              tuple((a + b) % self.p for a, b in zip(self.maps, other.maps)))

    def scale(self, c: int) -> "ModuleMorphism":
        return ModuleMorphism(self.source, self.target, tuple((c * a) % self.p for a in self.maps))


# ---------------------------------------------------------------------------
# constructors

def _check_vertex(alg, i):
    if not 1 <= i <= alg.n:
        raise IndexError("vertex %d out of range 1..%d" % (i, alg.n))


def zero_rep(alg: BoundQuiverAlgebra) -> Representation:
    return from_matrices(alg, (0,) * alg.n, {})


def from_matrices(alg: BoundQuiverAlgebra, dims: Sequence[int], mats: dict) -> Representation:
    """Build a representation; ``mats`` maps arrow label -> matrix (missing arrows are zero)."""
    dims = tuple(int(d) for d in dims)
    out = []
    for k, a in enumerate(alg.quiver.arrows):
        shape = (dims[a.target - 1], dims[a.source - 1])
        m = mats.get(a.label)
        out.append(np.zeros(shape, dtype=np.int64) if m is None
                   else fp.asmat(np.asarray(m).reshape(shape), alg.prime))
    return Representation(alg, dims, tuple(out))


def simple(alg: BoundQuiverAlgebra, i: int) -> Representation:
    _check_vertex(alg, i)
    dims = [0] * alg.n
    dims[i - 1] = 1
    return from_matrices(alg, dims, {})


def projective_sum(alg: BoundQuiverAlgebra, verts: Sequence[int]) -> Representation:
    """⊕ P_v over 0-based vertices; basis at w ordered by (summand, path)."""
    return _proj_sum(alg, tuple(int(v) for v in verts))


def _proj_layout(alg, verts):
    """For each vertex w: arrays (summand index, path index) spanning (⊕P_v)_w."""
    layout = []
    for w in range(alg.n):
        ss, bs = [], []
        for s, v in enumerate(verts):
            for b in alg.paths_between(v, w):
                ss.append(s)
                bs.append(int(b))
        layout.append((np.array(ss, dtype=np.int64), np.array(bs, dtype=np.int64)))
    return layout


def _proj_sum(alg, verts):
    layout = _proj_layout(alg, verts)
    c = alg.mult_tensor
    mats = []
    for k in range(len(alg.quiver.arrows)):
        u, w = alg.arrow_src[k], alg.arrow_tgt[k]
        arrow_idx = alg.index[(int(u), (k,))]
        su, bu = layout[u]
        sw, bw = layout[w]
        # path b at u goes to b*arrow at w, inside the same summand
        m = c[bu[None, :], arrow_idx, bw[:, None]] * (sw[:, None] == su[None, :])
        mats.append(m % alg.prime)
    dims = tuple(len(layout[w][0]) for w in range(alg.n))
    return Representation(alg, dims, tuple(mats))


def projective(alg: BoundQuiverAlgebra, i: int) -> Representation:
    _check_vertex(alg, i)
    return _proj_sum(alg, (i - 1,))


def _inj_layout(alg, verts):
    layout = []
    for w in range(alg.n):
        ss, bs = [], []
        for s, v in enumerate(verts):
            for b in alg.paths_between(w, v):
                ss.append(s)
                bs.append(int(b))
        layout.append((np.array(ss, dtype=np.int64), np.array(bs, dtype=np.int64)))
    return layout


def injective_sum(alg: BoundQuiverAlgebra, verts: Sequence[int]) -> Representation:
    verts = tuple(int(v) for v in verts)
    layout = _inj_layout(alg, verts)
    c = alg.mult_tensor
    mats = []
    for k in range(len(alg.quiver.arrows)):
        u, w = alg.arrow_src[k], alg.arrow_tgt[k]
        arrow_idx = alg.index[(int(u), (k,))]
        su, ru = layout[u]
        sw, qw = layout[w]
        # (phi . arrow)(q) = phi(arrow * q)
        m = c[arrow_idx, qw[:, None], ru[None, :]] * (sw[:, None] == su[None, :])
        mats.append(m % alg.prime)
    dims = tuple(len(layout[w][0]) for w in range(alg.n))
    return Representation(alg, dims, tuple(mats))


def injective(alg: BoundQuiverAlgebra, i: int) -> Representation:
    _check_vertex(alg, i)
    return injective_sum(alg, (i - 1,))


def direct_sum(*reps: Representation) -> Representation:
    alg = reps[0].alg
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(alg.n))
    mats = []
    for k in range(len(alg.quiver.arrows)):
        blocks = [r.mats[k] for r in reps]
        rows = sum(b.shape[0] for b in blocks)
        cols = sum(b.shape[1] for b in blocks)
        m = np.zeros((rows, cols), dtype=np.int64)
        i = j = 0
        for b in blocks:
            m[i:i + b.shape[0], j:j + b.shape[1]] = b
            i += b.shape[0]
            j += b.shape[1]
        mats.append(m)
    return Representation(alg, dims, tuple(mats))


def dual(m: Representation) -> Representation:
    """Linear dual, a representation of the opposite algebra."""
    return Representation(m.alg.opposite, m.dims, tuple(x.T.copy() for x in m.mats))


def identity(m: Representation) -> ModuleMorphism:
    return ModuleMorphism(m, m, tuple(np.eye(d, dtype=np.int64) for d in m.dims))


def zero_morphism(m: Representation, n: Representation) -> ModuleMorphism:
    return ModuleMorphism(m, n, tuple(np.zeros((n.dims[v], m.dims[v]), dtype=np.int64)
                                      for v in range(m.alg.n)))


# ---------------------------------------------------------------------------
# morphisms between projective and injective sums

def lam_matrix_morphism(alg: BoundQuiverAlgebra, d: np.ndarray, plus: Sequence[int],
                        minus: Sequence[int]) -> ModuleMorphism:
    """Module map ⊕P_minus -> ⊕P_plus given by left multiplication with the Λ-matrix d.

    d has shape (len(plus), len(minus), dim Λ); entry (r, c) lies in e_plus[r] Λ e_minus[c].
    """
    src = projective_sum(alg, minus)
    tgt = projective_sum(alg, plus)
    if len(plus) == 0 or len(minus) == 0:
        return zero_morphism(src, tgt)
    t = alg.left_tensor(d)  # (r, c, b, b')
    ls, lt = _proj_layout(alg, minus), _proj_layout(alg, plus)
    maps = []
    for w in range(alg.n):
        sc, sb = ls[w]
        tr, tb = lt[w]
        maps.append(t[tr[:, None], sc[None, :], sb[None, :], tb[:, None]] % alg.prime)
    return ModuleMorphism(src, tgt, tuple(maps))


def nakayama(alg: BoundQuiverAlgebra, d: np.ndarray, plus: Sequence[int],
             minus: Sequence[int]) -> ModuleMorphism:
    """ν of the map ⊕P_minus -> ⊕P_plus: the induced map ⊕I_minus -> ⊕I_plus."""
    src = injective_sum(alg, minus)
    tgt = injective_sum(alg, plus)
    if len(plus) == 0 or len(minus) == 0:
        return zero_morphism(src, tgt)
    u = alg.right_tensor(d)  # (r, c, q', q): coefficient of q in q' * d[r, c]
    ls, lt = _inj_layout(alg, minus), _inj_layout(alg, plus)
    maps = []
    for w in range(alg.n):
        sc, sq = ls[w]
        tr, tq = lt[w]
        maps.append(u[tr[:, None], sc[None, :], tq[:, None], sq[None, :]] % alg.prime)
    return ModuleMorphism(src, tgt, tuple(maps))


def nakayama_of(f: ModuleMorphism, plus: Sequence[int], minus: Sequence[int]) -> ModuleMorphism:
    """ν applied to a module map between explicit projective sums."""
    alg = f.source.alg
    if f.source.dims != projective_sum(alg, minus).dims or f.target.dims != projective_sum(alg, plus).dims:
        raise NotProjective("source/target are not the declared projective sums")
    return nakayama(alg, lam_matrix_from_morphism(f, plus, minus), plus, minus)


def lam_matrix_from_morphism(f: ModuleMorphism, plus, minus) -> np.ndarray:
    """Recover the Λ-matrix of a map between projective sums from the images of generators."""
    alg = f.source.alg
    d = np.zeros((len(plus), len(minus), alg.dim), dtype=np.int64)
    lt = _proj_layout(alg, plus)
    ls = _proj_layout(alg, minus)
    for c, v in enumerate(minus):
        sc, sb = ls[v]
        col = np.nonzero((sc == c) & (sb == alg.trivial[v]))[0][0]
        img = f.maps[v][:, col]
        tr, tb = lt[v]
        for pos in np.nonzero(img)[0]:
            d[tr[pos], c, tb[pos]] = img[pos]
    return d


# ---------------------------------------------------------------------------
# hom spaces

def hom_system(m: Representation, n: Representation) -> tuple[np.ndarray, list[tuple[int, int, int]]]:
    """Linear system whose kernel is Hom(m, n); also the per-vertex block layout."""
    alg, p = m.alg, m.p
    layout = []
    off = 0
    for v in range(alg.n):
        layout.append((off, n.dims[v], m.dims[v]))
        off += n.dims[v] * m.dims[v]
    rows = []
    for k in range(len(alg.quiver.arrows)):
        u, w = alg.arrow_src[k], alg.arrow_tgt[k]
        nr = n.dims[w] * m.dims[u]
        if nr == 0:
            continue
        block = np.zeros((nr, off), dtype=np.int64)
        ou, _, _ = layout[u]
        ow, _, _ = layout[w]
        if n.dims[u] * m.dims[u]:
            block[:, ou:ou + n.dims[u] * m.dims[u]] += np.kron(n.mats[k], np.eye(m.dims[u], dtype=np.int64))
        if n.dims[w] * m.dims[w]:
            block[:, ow:ow + n.dims[w] * m.dims[w]] -= np.kron(np.eye(n.dims[w], dtype=np.int64), m.mats[k].T)
        rows.append(block % p)
    mat = np.concatenate(rows, axis=0) if rows else np.zeros((0, off), dtype=np.int64)
    return mat, layout


def hom_space(m: Representation, n: Representation) -> list[ModuleMorphism]:
    mat, layout = hom_system(m, n)
    ns = fp.nullspace(mat, m.p)
    out = []
    for k in range(ns.shape[1]):
        vec = ns[:, k]
        maps = tuple(vec[o:o + r * c].reshape(r, c) for o, r, c in layout)
        out.append(ModuleMorphism(m, n, maps))
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    if m.total_dim == 0 or n.total_dim == 0:
        return 0
    mat, layout = hom_system(m, n)
    return mat.shape[1] - fp.rank(mat, m.p)


def random_morphism(basis: list[ModuleMorphism], rng: np.random.Generator,
                    m: Representation = None, n: Representation = None) -> ModuleMorphism:
    if not basis:
        return zero_morphism(m, n)
    p = basis[0].p
    coeffs = rng.integers(0, p, size=len(basis))
    out = basis[0].scale(int(coeffs[0]))
    for c, f in zip(coeffs[1:], basis[1:]):
        out = out + f.scale(int(c))
    return out


# ---------------------------------------------------------------------------
# kernels, images, cokernels, subquotients

def sub_rep(m: Representation, spaces: Sequence[np.ndarray]) -> tuple[Representation, ModuleMorphism]:
    """Subrepresentation spanned by the given column bases (assumed arrow-stable)."""
    alg, p = m.alg, m.p
    mats = []
    for k in range(len(alg.quiver.arrows)):
        u, w = alg.arrow_src[k], alg.arrow_tgt[k]
        if spaces[u].shape[1] == 0 or spaces[w].shape[1] == 0:
            mats.append(np.zeros((spaces[w].shape[1], spaces[u].shape[1]), dtype=np.int64))
            continue
        img = fp.matmul(m.mats[k], spaces[u], p)
        a = fp.solve(spaces[w], img, p)
        if a is None:
            raise ValueError("subspaces are not closed under arrow %d" % k)
        mats.append(a)
    sub = Representation(alg, tuple(s.shape[1] for s in spaces), tuple(mats))
    return sub, ModuleMorphism(sub, m, tuple(s % p for s in spaces))


def quotient_rep(m: Representation, spaces: Sequence[np.ndarray]) -> tuple[Representation, ModuleMorphism]:
    """Quotient by an arrow-stable family of subspaces, with the projection."""
    alg, p = m.alg, m.p
    sections, projs = [], []
    for v in range(alg.n):
        b = fp.column_basis(spaces[v], p) if spaces[v].size else np.zeros((m.dims[v], 0), dtype=np.int64)
        comp = fp.complement_rows(b.T, m.dims[v], p).T  # columns completing b
        full = np.concatenate([b, comp], axis=1)
        if full.shape[1]:
            q = fp.inverse(full, p)[b.shape[1]:, :]
        else:
            q = np.zeros((0, 0), dtype=np.int64)
        sections.append(comp)
        projs.append(q)
    mats = []
    for k in range(len(alg.quiver.arrows)):
        u, w = alg.arrow_src[k], alg.arrow_tgt[k]
        mats.append(fp.matmul(fp.matmul(projs[w], m.mats[k], p), sections[u], p))
    q = Representation(alg, tuple(s.shape[1] for s in sections), tuple(mats))
    return q, ModuleMorphism(m, q, tuple(projs))


def kernel(f: ModuleMorphism) -> tuple[Representation, ModuleMorphism]:
    spaces = [fp.nullspace(f.maps[v], f.p) if f.source.dims[v] else np.zeros((0, 0), dtype=np.int64)
              for v in range(f.source.alg.n)]
    spaces = [s for v, s in enumerate(spaces)]
    return sub_rep(f.source, spaces)


def image(f: ModuleMorphism) -> tuple[Representation, ModuleMorphism]:
    spaces = [fp.column_basis(f.maps[v], f.p)
              for v in range(f.source.alg.n)]
    return sub_rep(f.target, spaces)


def cokernel(f: ModuleMorphism) -> tuple[Representation, ModuleMorphism]:
    spaces = [f.maps[v] for v in range(f.source.alg.n)]
    return quotient_rep(f.target, spaces)


def radical_spaces(m: Representation) -> list[np.ndarray]:
    alg, p = m.alg, m.p
    spaces = []
    for w in range(alg.n):
        cols = [m.mats[k] for k in range(len(alg.quiver.arrows)) if alg.arrow_tgt[k] == w]
        if cols:
            cat = np.concatenate(cols, axis=1)
            spaces.append(fp.column_basis(cat, p))
        else:
            spaces.append(np.zeros((m.dims[w], 0), dtype=np.int64))
    return spaces


def top_dims(m: Representation) -> tuple[int, ...]:
    return tuple(m.dims[v] - s.shape[1] for v, s in enumerate(radical_spaces(m)))


def socle_dims(m: Representation) -> tuple[int, ...]:
    alg, p = m.alg, m.p
    out = []
    for v in range(alg.n):
        outs = [m.mats[k] for k in range(len(alg.quiver.arrows)) if alg.arrow_src[k] == v]
        if not outs or m.dims[v] == 0:
            out.append(m.dims[v])
        else:
            out.append(m.dims[v] - fp.rank(np.concatenate(outs, axis=0), p))
    return tuple(out)


# ---------------------------------------------------------------------------
# projective covers and presentations

def projective_cover(m: Representation) -> tuple[tuple[int, ...], ModuleMorphism]:
    """(vertices of the cover summands, surjection ⊕P_v -> m)."""
    alg, p = m.alg, m.p
    rad = radical_spaces(m)
    gens = []  # (vertex, vector)
    for v in range(alg.n):
        comp = fp.complement_rows(rad[v].T, m.dims[v], p) if rad[v].shape[1] else np.eye(m.dims[v], dtype=np.int64)
        if rad[v].shape[1]:
            comp = fp.complement_rows(fp.column_basis(rad[v], p).T, m.dims[v], p)
        for row in comp:
            gens.append((v, row))
    verts = tuple(v for v, _ in gens)
    cover = projective_sum(alg, verts)
    layout = _proj_layout(alg, verts)
    maps = []
    for w in range(alg.n):
        ss, bs = layout[w]
        cols = []
        for s, b in zip(ss, bs):
            cols.append(fp.matmul(m.path_matrix(int(b)), gens[s][1][:, None], p)[:, 0])
        maps.append(np.stack(cols, axis=1) if cols else np.zeros((m.dims[w], 0), dtype=np.int64))
    return verts, ModuleMorphism(cover, m, tuple(maps))


def presentation_data(m: Representation) -> tuple[tuple[int, ...], tuple[int, ...], np.ndarray]:
    """Minimal projective presentation as (plus vertices, minus vertices, Λ-matrix)."""
    alg, p = m.alg, m.p
    plus, cover = projective_cover(m)
    k, inc = kernel(cover)
    minus, kcover = projective_cover(k)
    into = inc.compose(kcover)  # ⊕P_minus -> ⊕P_plus
    d = lam_matrix_from_morphism(into, plus, minus)
    return plus, minus, d


def minimal_presentation(m: Representation):
    from .presentations import TwoTermPresentation
    plus, minus, d = presentation_data(m)
    return TwoTermPresentation(m.alg, plus, minus, d)


def g_vector(m: Representation) -> tuple[int, ...]:
    plus = projective_cover(m)[0]
    k = kernel(projective_cover(m)[1])[0]
    minus = top_dims(k)
    out = [0] * m.alg.n
    for v in plus:
        out[v] += 1
    return tuple(out[v] - minus[v] for v in range(m.alg.n))


def tau(m: Representation) -> Representation:
    if m.is_zero():
        return m
    plus, minus, d = presentation_data(m)
    return kernel(nakayama(m.alg, d, plus, minus))[0]


def tau_inverse(m: Representation) -> Representation:
    if m.is_zero():
        return m
    t = tau(dual(m))
    back = Representation(m.alg, t.dims, tuple(x.T.copy() for x in t.mats))
    return back


# ---------------------------------------------------------------------------
# torsion classes generated by a module

def trace_spaces(c: Representation, x: Representation) -> list[np.ndarray]:
    """Per-vertex column bases of the trace of c in x (sum of images of all maps c -> x)."""
    basis = hom_space(c, x)
    out = []
    for v in range(x.alg.n):
        if not basis or x.dims[v] == 0:
            out.append(np.zeros((x.dims[v], 0), dtype=np.int64))
            continue
        cat = np.concatenate([f.maps[v] for f in basis], axis=1)
        out.append(fp.column_basis(cat, x.p))
    return out


def reject_spaces(x: Representation, k: Representation) -> list[np.ndarray]:
    """Per-vertex column bases of the reject of k in x (intersection of kernels of maps x -> k)."""
    basis = hom_space(x, k)
    out = []
    for v in range(x.alg.n):
        if not basis or k.dims[v] == 0:
            out.append(np.eye(x.dims[v], dtype=np.int64))
            continue
        stacked = np.concatenate([f.maps[v] for f in basis], axis=0)
        out.append(fp.nullspace(stacked, x.p))
    return out


def in_smallest_torsion_class(c: Representation, x: Representation) -> bool:
    """x ∈ T(c): peel off the trace of c until nothing is left."""
    while not x.is_zero():
        tr = trace_spaces(c, x)
        if sum(s.shape[1] for s in tr) == 0:
            return False
        x = quotient_rep(x, tr)[0]
    return True


def in_smallest_torsionfree_class(k: Representation, x: Representation) -> bool:
    """x ∈ F(k): shrink to the reject of k until nothing is left."""
    while not x.is_zero():
        rj = reject_spaces(x, k)
        if sum(s.shape[1] for s in rj) == x.total_dim:
            return False
        x = sub_rep(x, rj)[0]
    return True


def in_fac(c: Representation, x: Representation) -> bool:
    """x is a quotient of a finite direct sum of copies of c."""
    tr = trace_spaces(c, x)
    return sum(s.shape[1] for s in tr) == x.total_dim


# ---------------------------------------------------------------------------
# isomorphism and Krull-Schmidt

def iso_certificate(m: Representation, n: Representation, rng: np.random.Generator | None = None,
                    trials: int = 32) -> ModuleMorphism | None:
    """An explicit isomorphism m -> n found by random search, or None."""
    if m.dims != n.dims:
        return None
    if m.is_zero():
        return zero_morphism(m, n)
    rng = rng or np.random.default_rng(0x150)
    hb = hom_space(m, n)
    if not hb:
        return None
    for _ in range(trials):
        f = random_morphism(hb, rng)
        if all(fp.rank(f.maps[v], m.p) == m.dims[v] for v in range(m.alg.n) if m.dims[v]):
            return f
    return None


def is_isomorphic(m: Representation, n: Representation, rng=None) -> bool:
    return iso_certificate(m, n, rng) is not None


def endomorphism_operators(m: Representation, basis: list[ModuleMorphism]) -> np.ndarray:
    n = m.total_dim
    off = m.offsets
    ops = np.zeros((len(basis), n, n), dtype=np.int64)
    for k, f in enumerate(basis):
        for v in range(m.alg.n):
            ops[k, off[v]:off[v + 1], off[v]:off[v + 1]] = f.maps[v]
    return ops


def decompose_module(m: Representation, rng: np.random.Generator | None = None,
                     attempts: int = 64) -> list[Representation]:
    """Indecomposable direct summands (Fitting splitting of random endomorphisms)."""
    if m.is_zero():
        return []
    if sum(top_dims(m)) == 1 or sum(socle_dims(m)) == 1:
        return [m]  # simple top or socle: local endomorphism ring
    rng = rng or np.random.default_rng(0xD3C)
    basis = hom_space(m, m)
    ops = endomorphism_operators(m, basis)
    e, _ = find_idempotent(ops, m.p, rng, attempts)
    if e is None:
        return [m]
    off = m.offsets
    p = m.p
    pieces = []
    for proj in (e, (np.eye(e.shape[0], dtype=np.int64) - e) % p):
        spaces = []
        for v in range(m.alg.n):
            blk = proj[off[v]:off[v + 1], off[v]:off[v + 1]]
            spaces.append(fp.column_basis(blk, p))
        pieces.append(sub_rep(m, spaces)[0])
    return [x for piece in pieces for x in decompose_module(piece, rng, attempts)]
