"""Two-term presentations P^{-1} -> P^0 and generic decompositions of g-vectors.

A presentation is stored as the vertex lists ``plus`` (summands of P^0) and
``minus`` (summands of P^{-1}) together with a Λ-matrix ``d`` of shape
``(len(plus), len(minus), dim Λ)``; entry ``d[r, c]`` is an element of
e_{plus[r]} Λ e_{minus[c]} and acts on P_{minus[c]} by left multiplication.
Maps between projective sums compose as matrix products with the algebra
product, so ``G ∘ F`` is ``lam_mul(G, F)``.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse

from . import fp
from .algebra import BoundQuiverAlgebra
from .errors import NoConsensus, SplitUncertain
from .fitting import find_idempotent, residue_field_degree

GVec = tuple  # tuple[int, ...]


# ---------------------------------------------------------------------------
# Λ-matrix spaces

class MapSpace:
    """Coordinates on Hom(⊕P_cols, ⊕P_rows): the entries of a Λ-matrix at valid positions."""

    def __init__(self, alg: BoundQuiverAlgebra, rows: tuple, cols: tuple):
        self.alg, self.rows, self.cols = alg, rows, cols
        r, c, b = [], [], []
        for i, y in enumerate(rows):
            for j, x in enumerate(cols):
                for path in alg.paths_between(y, x):
                    r.append(i)
                    c.append(j)
                    b.append(int(path))
        self.r = np.array(r, dtype=np.int64)
        self.c = np.array(c, dtype=np.int64)
        self.b = np.array(b, dtype=np.int64)

    @property
    def dim(self) -> int:
        return len(self.b)

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.cols), self.alg.dim)

    def to_vec(self, m: np.ndarray) -> np.ndarray:
        return m[self.r, self.c, self.b]

    def from_vec(self, v: np.ndarray) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.int64)
        out[self.r, self.c, self.b] = v
        return out

    def random(self, rng: np.random.Generator) -> np.ndarray:
        return self.from_vec(rng.integers(0, self.alg.prime, size=self.dim))


@lru_cache(maxsize=4096)
def map_space(alg: BoundQuiverAlgebra, rows: tuple, cols: tuple) -> MapSpace:
    return MapSpace(alg, rows, cols)


def lam_mul(alg: BoundQuiverAlgebra, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of Λ-matrices, (Z,Y,D) x (Y,X,D) -> (Z,X,D)."""
    if a.shape[0] == 0 or b.shape[1] == 0 or a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1], alg.dim), dtype=np.int64)
    t = alg.left_tensor(a)  # z y b c
    return np.einsum("zybc,yxb->zxc", t, b, optimize=True) % alg.prime


def left_operator(alg, a: np.ndarray, src: MapSpace, tgt: MapSpace) -> np.ndarray:
    """Matrix of h -> a·h from src = MS(Y, X) to tgt = MS(Z, X)."""
    if src.dim == 0 or tgt.dim == 0:
        return np.zeros((tgt.dim, src.dim), dtype=np.int64)
    t = alg.left_tensor(a)
    m = t[tgt.r[:, None], src.r[None, :], src.b[None, :], tgt.b[:, None]]
    return m * (tgt.c[:, None] == src.c[None, :])


def right_operator(alg, b: np.ndarray, src: MapSpace, tgt: MapSpace) -> np.ndarray:
    """Matrix of h -> h·b from src = MS(Z, Y) to tgt = MS(Z, X)."""
    if src.dim == 0 or tgt.dim == 0:
        return np.zeros((tgt.dim, src.dim), dtype=np.int64)
    u = alg.right_tensor(b)  # y x a c
    m = u[src.c[None, :], tgt.c[:, None], src.b[None, :], tgt.b[:, None]]
    return m * (tgt.r[:, None] == src.r[None, :])


# ---------------------------------------------------------------------------
# presentations

def _vertices_of(g: Sequence[int], sign: int) -> tuple:
    return tuple(v for v, x in enumerate(g) for _ in range(max(0, sign * int(x))))


@dataclass(frozen=True, eq=False)
class TwoTermPresentation:
    alg: BoundQuiverAlgebra
    plus: tuple
    minus: tuple
    d: np.ndarray
    galois: int = 1  # splits into this many conjugate summands over the algebraic closure

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(int(v) for v in self.plus))
        object.__setattr__(self, "minus", tuple(int(v) for v in self.minus))
        d = np.asarray(self.d, dtype=np.int64).reshape(len(self.plus), len(self.minus), self.alg.dim)
        object.__setattr__(self, "d", d % self.alg.prime)

    @property
    def p_plus(self) -> tuple:
        return tuple(self.plus.count(v) for v in range(self.alg.n))

    @property
    def p_minus(self) -> tuple:
        return tuple(self.minus.count(v) for v in range(self.alg.n))

    @property
    def g_vector(self) -> GVec:
        return tuple(a - b for a, b in zip(self.p_plus, self.p_minus))

    @property
    def summand_g_vectors(self) -> list:
        """g-vectors of the summands over the algebraic closure."""
        g = self.g_vector
        return [tuple(x // self.galois for x in g)] * self.galois

    @property
    def size(self) -> int:
        return len(self.plus) + len(self.minus)

    def module_map(self):
        from .reps import lam_matrix_morphism
        return lam_matrix_morphism(self.alg, self.d, self.plus, self.minus)

    def cokernel(self):
        from .reps import cokernel
        return cokernel(self.module_map())[0]

    def ker_nu(self):
        from .reps import kernel, nakayama
        return kernel(nakayama(self.alg, self.d, self.plus, self.minus))[0]

    def transport(self, alg: BoundQuiverAlgebra) -> "TwoTermPresentation":
        """Same integer coefficients over another field with identical path basis."""
        return TwoTermPresentation(alg, self.plus, self.minus, self.d % alg.prime)

    def __repr__(self):
        return "TwoTermPresentation(g=%s)" % (self.g_vector,)


def zero_presentation(alg) -> TwoTermPresentation:
    return TwoTermPresentation(alg, (), (), np.zeros((0, 0, alg.dim), dtype=np.int64))


def direct_sum(*parts: TwoTermPresentation) -> TwoTermPresentation:
    alg = parts[0].alg
    plus = sum((a.plus for a in parts), ())
    minus = sum((a.minus for a in parts), ())
    d = np.zeros((len(plus), len(minus), alg.dim), dtype=np.int64)
    i = j = 0
    for a in parts:
        d[i:i + len(a.plus), j:j + len(a.minus)] = a.d
        i += len(a.plus)
        j += len(a.minus)
    return TwoTermPresentation(alg, plus, minus, d)


def sample_presentation(alg: BoundQuiverAlgebra, g: Sequence[int], seed=None) -> TwoTermPresentation:
    """Uniform random element of Hom(P^{g-}, P^{g+}); ``seed`` may be an int or a Generator."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    plus, minus = _vertices_of(g, 1), _vertices_of(g, -1)
    return TwoTermPresentation(alg, plus, minus, map_space(alg, plus, minus).random(rng))


def e_invariant(a: TwoTermPresentation, b: TwoTermPresentation) -> int:
    """dim Hom_K(a, b[1]) = Hom(A^{-1}, B^0) modulo d_b·Hom(A^{-1},B^{-1}) + Hom(A^0,B^0)·d_a."""
    alg = a.alg
    tgt = map_space(alg, b.plus, a.minus)
    if tgt.dim == 0:
        return 0
    s1 = map_space(alg, b.minus, a.minus)
    s0 = map_space(alg, b.plus, a.plus)
    m = np.concatenate([left_operator(alg, b.d, s1, tgt), right_operator(alg, a.d, s0, tgt)], axis=1)
    return tgt.dim - fp.rank(m, alg.prime)


# ---------------------------------------------------------------------------
# Krull-Schmidt in the homotopy category

def _unit_inverse(alg, u: np.ndarray) -> np.ndarray:
    """Inverse of u = λe_v + n in the local ring e_vΛe_v."""
    p = alg.prime
    v = int(alg.src[np.nonzero(u)[0][0]])
    lam = int(u[alg.trivial[v]])
    li = fp.inv(lam, p)
    n = u.copy()
    n[alg.trivial[v]] = 0
    step = (-li * n) % p
    term = alg.idempotent(v)
    total = term.copy()
    for _ in range(int(alg.lengths.max()) + 1):
        term = alg.multiply(term, step)
        if not np.any(term):
            break
        total = (total + term) % p
    return (li * total) % p


def find_unit(a: TwoTermPresentation):
    alg = a.alg
    for r, y in enumerate(a.plus):
        for c, x in enumerate(a.minus):
            if y == x and a.d[r, c, alg.trivial[y]] % alg.prime:
                return r, c
    return None


def strip_contractible(a: TwoTermPresentation) -> TwoTermPresentation:
    """Remove summands P_v --id--> P_v by Gaussian elimination on unit entries."""
    alg, p = a.alg, a.alg.prime
    plus, minus, d = list(a.plus), list(a.minus), a.d.copy()
    while True:
        hit = find_unit(TwoTermPresentation(alg, plus, minus, d))
        if hit is None:
            break
        r, c = hit
        uinv = _unit_inverse(alg, d[r, c])
        col = d[:, c:c + 1]
        row = d[r:r + 1, :]
        corr = lam_mul(alg, lam_mul(alg, col, uinv[None, None, :]), row)
        d = (d - corr) % p
        d = np.delete(np.delete(d, r, axis=0), c, axis=1)
        del plus[r]
        del minus[c]
    return TwoTermPresentation(alg, plus, minus, d)


def _total_layout(alg, verts):
    """Basis of the vector space ⊕P_verts: arrays (summand, path)."""
    s, b = [], []
    for i, v in enumerate(verts):
        for path in np.nonzero(alg.src == v)[0]:
            s.append(i)
            b.append(int(path))
    return np.array(s, dtype=np.int64), np.array(b, dtype=np.int64)


def _operator_map(alg, space: MapSpace, layout) -> sparse.csr_matrix:
    """Sparse linear map: MS(X, X) coordinates -> flattened operator on the vector space ⊕P_X."""
    s, b = layout
    n = len(s)
    c = alg.mult_triples  # (a, b, c, coef) arrays
    ta, tb, tc, tv = c
    rows, cols, vals = [], [], []
    # index of (summand, path) in the layout
    where = {(int(i), int(q)): k for k, (i, q) in enumerate(zip(s, b))}
    by_a = {}
    for a_, b_, c_, v_ in zip(ta, tb, tc, tv):
        by_a.setdefault(int(a_), []).append((int(b_), int(c_), int(v_)))
    for k in range(space.dim):
        y, x, a = int(space.r[k]), int(space.c[k]), int(space.b[k])
        for b_, c_, v_ in by_a.get(a, ()):
            src = where.get((x, b_))
            tgt = where.get((y, c_))
            if src is None or tgt is None:
                continue
            rows.append(k)
            cols.append(tgt * n + src)
            vals.append(v_)
    return sparse.csr_matrix((np.array(vals, dtype=np.float64), (rows, cols)), shape=(space.dim, n * n))


def chain_endomorphisms(a: TwoTermPresentation) -> tuple[MapSpace, MapSpace, np.ndarray]:
    """Basis (rows of a coefficient matrix) of pairs (F1, F0) with d·F1 = F0·d."""
    alg = a.alg
    s1 = map_space(alg, a.minus, a.minus)
    s0 = map_space(alg, a.plus, a.plus)
    tgt = map_space(alg, a.plus, a.minus)
    m = np.concatenate([left_operator(alg, a.d, s1, tgt),
                        (-right_operator(alg, a.d, s0, tgt)) % alg.prime], axis=1)
    if tgt.dim == 0:
        basis = np.eye(s1.dim + s0.dim, dtype=np.int64)
    else:
        basis = fp.nullspace(m, alg.prime).T
    return s1, s0, basis


def _endo_operators(a: TwoTermPresentation):
    alg, p = a.alg, a.alg.prime
    s1, s0, basis = chain_endomorphisms(a)
    lay1, lay0 = _total_layout(alg, a.minus), _total_layout(alg, a.plus)
    n1, n0 = len(lay1[0]), len(lay0[0])
    ops = np.zeros((basis.shape[0], n1 + n0, n1 + n0), dtype=np.int64)
    if basis.shape[0]:
        if n1:
            phi1 = _operator_map(alg, s1, lay1)
            o1 = np.rint(phi1.T.dot(basis[:, :s1.dim].T.astype(np.float64)).T).astype(np.int64) % p
            ops[:, :n1, :n1] = o1.reshape(-1, n1, n1)
        if n0:
            phi0 = _operator_map(alg, s0, lay0)
            o0 = np.rint(phi0.T.dot(basis[:, s1.dim:].T.astype(np.float64)).T).astype(np.int64) % p
            ops[:, n1:, n1:] = o0.reshape(-1, n0, n0)
    return ops, lay1, lay0


def _lam_from_operator(alg, op: np.ndarray, verts: tuple, layout) -> np.ndarray:
    """Read a Λ-matrix off an operator on ⊕P_verts via the images of the generators."""
    s, b = layout
    out = np.zeros((len(verts), len(verts), alg.dim), dtype=np.int64)
    for x, v in enumerate(verts):
        col = np.nonzero((s == x) & (b == alg.trivial[v]))[0][0]
        out[s, x, b] = op[:, col]
    return out


def _summand(a: TwoTermPresentation, f1: np.ndarray, f0: np.ndarray) -> TwoTermPresentation:
    """Image of the idempotent chain map (f1, f0) as a presentation."""
    alg, p = a.alg, a.alg.prime

    def gens(f, verts):
        top = np.zeros((len(verts), len(verts)), dtype=np.int64)
        for y, vy in enumerate(verts):
            for x, vx in enumerate(verts):
                if vx == vy:
                    top[y, x] = f[y, x, alg.trivial[vx]]
        if top.size == 0:
            return []
        return fp.rref(top, p)[1]

    j1, j0 = gens(f1, a.minus), gens(f0, a.plus)
    sec1 = f1[:, j1]
    sec0 = f0[:, j0]
    new_minus = tuple(a.minus[j] for j in j1)
    new_plus = tuple(a.plus[j] for j in j0)
    src = map_space(alg, new_plus, new_minus)
    if src.dim == 0:
        return TwoTermPresentation(alg, new_plus, new_minus, src.from_vec(np.zeros(0, dtype=np.int64)))
    tgt = map_space(alg, a.plus, new_minus)
    rhs = tgt.to_vec(lam_mul(alg, a.d, sec1))
    sol = fp.solve(left_operator(alg, sec0, src, tgt), rhs, p)
    if sol is None:
        raise SplitUncertain("summand differential not solvable")
    return TwoTermPresentation(alg, new_plus, new_minus, src.from_vec(sol))


def decompose_presentation(a: TwoTermPresentation, rng: np.random.Generator | None = None,
                           attempts: int = 64) -> list[TwoTermPresentation]:
    """Indecomposable summands of a minimal version of ``a`` in the homotopy category."""
    rng = rng if rng is not None else np.random.default_rng(0x5EED)
    a = strip_contractible(a)
    if a.size == 0:
        return []
    if a.size == 1:
        return [a]
    # zero rows and columns are bare (shifted) projective summands
    live_r = [i for i in range(len(a.plus)) if a.d[i].any()]
    live_c = [j for j in range(len(a.minus)) if a.d[:, j].any()]
    if len(live_r) < len(a.plus) or len(live_c) < len(a.minus):
        alg = a.alg
        out = [TwoTermPresentation(alg, (a.plus[i],), (), np.zeros((1, 0, alg.dim), dtype=np.int64))
               for i in range(len(a.plus)) if i not in live_r]
        out += [TwoTermPresentation(alg, (), (a.minus[j],), np.zeros((0, 1, alg.dim), dtype=np.int64))
                for j in range(len(a.minus)) if j not in live_c]
        if live_r or live_c:
            core = TwoTermPresentation(alg, tuple(a.plus[i] for i in live_r),
                                       tuple(a.minus[j] for j in live_c), a.d[np.ix_(live_r, live_c)])
            out += [core] if core.size == 1 else _split(core, rng, attempts)
        return out
    return _split(a, rng, attempts)


def _split(a, rng, attempts):
    alg, p = a.alg, a.alg.prime
    ops, lay1, lay0 = _endo_operators(a)
    e, local = find_idempotent(ops, p, rng, attempts)
    if e is None:
        if not local:
            r = residue_field_degree(ops, p, rng)
            if r and all(x % r == 0 for x in a.g_vector):
                return [TwoTermPresentation(alg, a.plus, a.minus, a.d, galois=r)]
            raise SplitUncertain("no idempotent found and locality not certified for g=%s"
                                 % (a.g_vector,))
        return [a]
    n1 = len(lay1[0])
    out = []
    ident = np.eye(e.shape[0], dtype=np.int64)
    for proj in (e, (ident - e) % p):
        f1 = _lam_from_operator(alg, proj[:n1, :n1], a.minus, lay1)
        f0 = _lam_from_operator(alg, proj[n1:, n1:], a.plus, lay0)
        piece = _summand(a, f1, f0)
        out.extend([piece] if piece.size == 1 else _split(piece, rng, attempts))
    return out


# ---------------------------------------------------------------------------
# generic decomposition

@dataclass(frozen=True)
class GenericDecomposition:
    g: GVec
    summands: tuple  # sorted ((g_i, multiplicity), ...)
    samples_used: int
    consensus: bool
    method: str = "direct"
    tallies: tuple = ()

    @property
    def multiset(self) -> Counter:
        return Counter({h: m for h, m in self.summands})

    @property
    def ind_set(self) -> frozenset:
        return frozenset(h for h, _ in self.summands)

    def total(self) -> GVec:
        n = len(self.g)
        return tuple(sum(m * h[i] for h, m in self.summands) for i in range(n))


def _freeze(counter: Counter) -> tuple:
    return tuple(sorted(counter.items()))


def _seed_for(seed: int, tag: str, g: Sequence[int]) -> np.random.Generator:
    h = hashlib.sha256(("%d|%s|%s" % (seed, tag, ",".join(map(str, g)))).encode()).digest()
    return np.random.default_rng(int.from_bytes(h[:16], "little"))


def _scale(g, t):
    return tuple(t * x for x in g)


class PresentationEngine:
    """Generic decompositions over one algebra, memoized per (g, n_samples, seed).

    For multiples ``t·g`` larger than ``direct_budget`` summands the engine first
    tries the candidate ``t × decomposition(g)``, accepted only when fresh samples
    of every pair of its summands (self-pairs included) have vanishing E-invariants;
    otherwise it samples ``t·g`` directly.
    """

    def __init__(self, alg: BoundQuiverAlgebra, direct_budget: int = 14, cross_checks: int = 2):
        self.alg = alg
        self.direct_budget = direct_budget
        self.cross_checks = cross_checks
        self._cache: dict = {}

    # fresh independent samples of a summand class
    def _fresh(self, h, seed, k):
        return sample_presentation(self.alg, h, _seed_for(seed, "fresh%d" % k, h))

    def pair_vanishes(self, h1, h2, seed: int, rounds: int | None = None) -> bool:
        for k in range(rounds or self.cross_checks):
            a = self._fresh(h1, seed, 2 * k)
            b = self._fresh(h2, seed, 2 * k + 1)
            if e_invariant(a, b) or e_invariant(b, a):
                return False
        return True

    def _direct(self, g, n_samples, seed):
        tallies = Counter()
        rng = _seed_for(seed, "split", g)
        for k in range(n_samples):
            a = sample_presentation(self.alg, g, _seed_for(seed, "sample%d" % k, g))
            parts = decompose_presentation(a, rng)
            tallies[_freeze(Counter(h for x in parts for h in x.summand_g_vectors))] += 1
        return tallies

    def _cross_ok(self, summands, seed):
        keys = [h for h, _ in summands]
        for i in range(len(keys)):
            for j in range(i + 1, len(keys)):
                if not self.pair_vanishes(keys[i], keys[j], seed):
                    return False
        return True

    def decompose(self, g: Sequence[int], n_samples: int = 8, seed: int = 0) -> GenericDecomposition:
        g = tuple(int(x) for x in g)
        if len(g) != self.alg.n:
            raise ValueError("g has length %d, algebra has %d vertices" % (len(g), self.alg.n))
        if n_samples < 3:
            raise ValueError("n_samples must be at least 3")
        key = (g, n_samples, seed)
        if key in self._cache:
            return self._cache[key]
        res = self._compute(g, n_samples, seed)
        self._cache[key] = res
        return res

    def _compute(self, g, n_samples, seed):
        if not any(g):
            return GenericDecomposition(g, (), 0, True)
        size = sum(abs(x) for x in g)
        if size > self.direct_budget:
            cert = self._certified_multiple(g, n_samples, seed)
            if cert is not None:
                return cert
        used = 0
        for ns in (n_samples, max(32, 2 * n_samples)):
            tallies = self._direct(g, ns, seed + used)
            used += ns
            if len(tallies) == 1:
                summands = next(iter(tallies))
                if self._cross_ok(summands, seed):
                    return GenericDecomposition(g, summands, used, True, "direct", tuple(tallies.items()))
        raise NoConsensus("no consensus for g=%s" % (g,), dict(tallies))

    def _certified_multiple(self, g, n_samples, seed):
        from math import gcd
        t = 0
        for x in g:
            t = gcd(t, abs(x))
        if t <= 1:
            return None
        for f in sorted({d for d in range(2, t + 1) if t % d == 0}, reverse=True):
            base = tuple(x // f for x in g)
            dec = self.decompose(base, n_samples, seed)
            keys = [h for h, _ in dec.summands]
            ok = all(self.pair_vanishes(h1, h2, seed) for i, h1 in enumerate(keys) for h2 in keys[i:])
            if ok:
                summands = tuple((h, m * f) for h, m in dec.summands)
                return GenericDecomposition(g, summands, dec.samples_used, True, "certified-multiple")
            # a self-pair that does not vanish means no multiple of base is certifiable
            return None
        return None

    def ind_set(self, g, n_samples=8, seed=0) -> frozenset:
        return self.decompose(g, n_samples, seed).ind_set

    def is_tame(self, g, n_samples=8, seed=0) -> bool:
        g = tuple(int(x) for x in g)
        one = self.decompose(g, n_samples, seed).multiset
        two = self.decompose(_scale(g, 2), n_samples, seed).multiset
        return two == Counter({h: 2 * m for h, m in one.items()})


_ENGINES: dict = {}


def engine_for(alg: BoundQuiverAlgebra) -> PresentationEngine:
    eng = _ENGINES.get(id(alg))
    if eng is None or eng.alg is not alg:
        eng = PresentationEngine(alg)
        _ENGINES[id(alg)] = eng
    return eng


def generic_decomposition(alg, g, n_samples: int = 8, seed: int = 0) -> GenericDecomposition:
    return engine_for(alg).decompose(g, n_samples, seed)


def ind_set(alg, g, n_samples: int = 8, seed: int = 0) -> frozenset:
    return engine_for(alg).ind_set(g, n_samples, seed)


def is_tame(alg, g, n_samples: int = 8, seed: int = 0) -> bool:
    return engine_for(alg).is_tame(g, n_samples, seed)


# ---------------------------------------------------------------------------
# morphisms in the homotopy category

def hom_k_basis(a: TwoTermPresentation, b: TwoTermPresentation) -> list[tuple[np.ndarray, np.ndarray]]:
    """Chain maps (F1, F0): a -> b representing a basis of Hom_K(a, b)."""
    alg, p = a.alg, a.alg.prime
    s1 = map_space(alg, b.minus, a.minus)
    s0 = map_space(alg, b.plus, a.plus)
    tgt = map_space(alg, b.plus, a.minus)
    if s1.dim + s0.dim == 0:
        return []
    cond = np.concatenate([left_operator(alg, b.d, s1, tgt),
                           (-right_operator(alg, a.d, s0, tgt)) % p], axis=1)
    chains = fp.nullspace(cond, p) if tgt.dim else np.eye(s1.dim + s0.dim, dtype=np.int64)
    hs = map_space(alg, b.minus, a.plus)  # homotopies X^0 -> Y^{-1}
    if hs.dim:
        ht1 = right_operator(alg, a.d, hs, s1)   # h·d_a
        ht0 = left_operator(alg, b.d, hs, s0)    # d_b·h
        homot = fp.column_basis(np.concatenate([ht1, ht0], axis=0), p)
    else:
        homot = np.zeros((s1.dim + s0.dim, 0), dtype=np.int64)
    out = []
    cur = homot
    for k in range(chains.shape[1]):
        col = chains[:, k:k + 1]
        if not fp.span_contains(cur, col, p):
            cur = np.concatenate([cur, col], axis=1)
            out.append((s1.from_vec(col[:s1.dim, 0]), s0.from_vec(col[s1.dim:, 0])))
    return out


def hom_k_dim(a: TwoTermPresentation, b: TwoTermPresentation) -> int:
    return len(hom_k_basis(a, b))


def eliminate(d: np.ndarray, rows: list, cols: list, alg, r: int, c: int) -> np.ndarray:
    """Schur complement of the unit entry d[r, c]; returns d without row r and column c."""
    uinv = _unit_inverse(alg, d[r, c])
    corr = lam_mul(alg, lam_mul(alg, d[:, c:c + 1], uinv[None, None, :]), d[r:r + 1, :])
    d = (d - corr) % alg.prime
    return np.delete(np.delete(d, r, axis=0), c, axis=1)


def unit_position(d: np.ndarray, rows, cols, alg):
    for r, y in enumerate(rows):
        for c, x in enumerate(cols):
            if y == x and d[r, c, alg.trivial[y]] % alg.prime:
                return r, c
    return None
