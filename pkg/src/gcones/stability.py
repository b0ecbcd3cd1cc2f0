"""Semistable torsion pairs, module catalogs and TF-equivalence probes.

Submodule enumeration needs a small field, so everything here runs over a
twin of the algebra defined over F_q with q in {2, 3}: the same quiver and
relations, hence the same path basis and integral structure constants.
Verdicts drawn from a finite catalog are probes, never proofs; each one
carries the catalog hash so it can be reproduced.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import fp
from . import reps as R
from .algebra import BoundQuiverAlgebra
from .cones import rank as q_rank
from .errors import CapExceeded

DEFAULT_DIM_CAP = 10
DEFAULT_MEMBER_CAP = 500


# ---------------------------------------------------------------------------
# subspace enumeration over F_q

def _subspaces(q: int, k: int):
    """Every subspace of F_q^k as a (k, r) column basis (reduced echelon form)."""
    for r in range(k + 1):
        for piv in itertools.combinations(range(k), r):
            free = [(i, c) for i in range(r) for c in range(piv[i] + 1, k) if c not in piv]
            for vals in itertools.product(range(q), repeat=len(free)):
                m = np.zeros((r, k), dtype=np.int64)
                for i, c in enumerate(piv):
                    m[i, c] = 1
                for (i, c), v in zip(free, vals):
                    m[i, c] = v
                yield m.T


@lru_cache(maxsize=64)
def _subspace_list(q: int, k: int) -> tuple:
    return tuple(_subspaces(q, k))


def _interval(lo: np.ndarray, hi: np.ndarray, q: int):
    """Subspaces U with span(lo) ⊆ U ⊆ span(hi); both given by column bases."""
    lo = fp.column_basis(lo, q)
    hi = fp.column_basis(hi, q)
    if not fp.span_contains(hi, lo, q):
        return
    comp = []
    cur = lo
    for j in range(hi.shape[1]):
        col = hi[:, j:j + 1]
        if not fp.span_contains(cur, col, q):
            comp.append(col)
            cur = np.concatenate([cur, col], axis=1)
    c = np.concatenate(comp, axis=1) if comp else np.zeros((lo.shape[0], 0), dtype=np.int64)
    k = c.shape[1]
    subs = _subspace_list(q, k) if k <= 6 else _subspaces(q, k)
    for w in subs:
        yield np.concatenate([lo, fp.matmul(c, w, q)], axis=1) if w.shape[1] else lo


def subdimvecs(m: R.Representation, dim_cap: int = DEFAULT_DIM_CAP) -> frozenset:
    """Dimension vectors of all subrepresentations of ``m`` (exact, by DFS over subspaces)."""
    if m.total_dim > dim_cap:
        raise CapExceeded("module of total dimension %d exceeds dim_cap %d" % (m.total_dim, dim_cap))
    if m.p > 3:
        raise CapExceeded("submodule enumeration runs over F_2 or F_3 only (got p=%d)" % m.p)
    return _subdimvecs_cached(m.alg, m.key(), m)


_SD_CACHE: dict = {}


def _subdimvecs_cached(alg, key, m):
    ck = (id(alg), key)
    hit = _SD_CACHE.get(ck)
    if hit is not None:
        return hit
    res = frozenset(_enumerate_subdims(m))
    if len(_SD_CACHE) > 20000:
        _SD_CACHE.clear()
    _SD_CACHE[ck] = res
    return res


def _enumerate_subdims(m: R.Representation) -> set:
    alg, q = m.alg, m.p
    n = alg.n
    arrows = [(int(alg.arrow_src[k]), int(alg.arrow_tgt[k]), m.mats[k]) for k in range(len(m.mats))]
    found: set = set()
    chosen: list = [None] * n
    order = sorted(range(n), key=lambda v: -m.dims[v])

    def rec(pos: int):
        if pos == n:
            found.add(tuple(chosen[v].shape[1] for v in range(n)))
            return
        v = order[pos]
        dv = m.dims[v]
        lo = [np.zeros((dv, 0), dtype=np.int64)]
        hi_rows = []
        for u, w, a in arrows:
            if w == v and u != v and chosen[u] is not None and dv:
                lo.append(fp.matmul(a, chosen[u], q))
            if u == v and w != v and chosen[w] is not None and dv:
                ann = fp.left_nullspace(chosen[w], q) if m.dims[w] else np.zeros((0, 0), dtype=np.int64)
                if ann.shape[0]:
                    hi_rows.append(fp.matmul(ann, a, q))
        lo_m = np.concatenate(lo, axis=1)
        if hi_rows:
            hi = fp.nullspace(np.concatenate(hi_rows, axis=0), q)
        else:
            hi = np.eye(dv, dtype=np.int64)
        for u_v in _interval(lo_m, hi, q):
            ok = True
            for u, w, a in arrows:
                if u == v and w == v and not fp.span_contains(u_v, fp.matmul(a, u_v, q), q):
                    ok = False
                    break
            if not ok:
                continue
            chosen[v] = u_v
            rec(pos + 1)
        chosen[v] = None

    rec(0)
    return found


def quotdimvecs(m: R.Representation, dim_cap: int = DEFAULT_DIM_CAP) -> frozenset:
    return frozenset(tuple(a - b for a, b in zip(m.dims, s)) for s in subdimvecs(m, dim_cap))


# ---------------------------------------------------------------------------
# the four classes

def pair(theta: Sequence, d: Sequence) -> Fraction:
    return sum(Fraction(t) * x for t, x in zip(theta, d))


def in_Tbar(theta, m, dim_cap=DEFAULT_DIM_CAP) -> bool:
    return all(pair(theta, qv) >= 0 for qv in quotdimvecs(m, dim_cap))


def in_T(theta, m, dim_cap=DEFAULT_DIM_CAP) -> bool:
    return all(pair(theta, qv) > 0 for qv in quotdimvecs(m, dim_cap) if any(qv))


def in_Fbar(theta, m, dim_cap=DEFAULT_DIM_CAP) -> bool:
    return all(pair(theta, s) <= 0 for s in subdimvecs(m, dim_cap))


def in_F(theta, m, dim_cap=DEFAULT_DIM_CAP) -> bool:
    return all(pair(theta, s) < 0 for s in subdimvecs(m, dim_cap) if any(s))


def is_semistable(theta, m, dim_cap=DEFAULT_DIM_CAP) -> bool:
    return in_Tbar(theta, m, dim_cap) and in_Fbar(theta, m, dim_cap)


def classes(theta, m, dim_cap=DEFAULT_DIM_CAP) -> tuple[bool, bool, bool, bool]:
    """(in T̄, in F̄, in T, in F) from one subdimension-vector enumeration."""
    subs = subdimvecs(m, dim_cap)
    quots = [tuple(a - b for a, b in zip(m.dims, s)) for s in subs]
    sv = [pair(theta, s) for s in subs]
    qv = [pair(theta, x) for x in quots]
    tbar = all(x >= 0 for x in qv)
    fbar = all(x <= 0 for x in sv)
    t = all(x > 0 for x, d in zip(qv, quots) if any(d))
    f = all(x < 0 for x, s in zip(sv, subs) if any(s))
    return tbar, fbar, t, f


# ---------------------------------------------------------------------------
# catalog

@dataclass
class ModuleCatalog:
    alg: BoundQuiverAlgebra              # the small-field twin
    members: list = field(default_factory=list)
    provenance: list = field(default_factory=list)
    dim_cap: int = DEFAULT_DIM_CAP
    complete: bool = True                # False when the member cap cut construction short

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def hash(self) -> str:
        h = hashlib.sha256(self.alg.fingerprint.encode())
        for m in sorted(self.members, key=lambda x: (x.dims, x.key())):
            h.update(repr(m.dims).encode())
            for a in m.mats:
                h.update(a.astype(np.int64).tobytes())
        return h.hexdigest()[:16]

    def dims(self) -> list:
        return [m.dims for m in self.members]


def _is_new(cands: list, m: R.Representation, rng) -> bool:
    return not any(c.dims == m.dims and R.is_isomorphic(c, m, rng) for c in cands)


def build_catalog(alg: BoundQuiverAlgebra, q: int = 2, dim_cap: int = DEFAULT_DIM_CAP,
                  max_members: int = DEFAULT_MEMBER_CAP, random_morphisms: int = 200,
                  orbit_length: int = 8, seed: int = 0) -> ModuleCatalog:
    """Indecomposable modules over the F_q twin reachable by cheap constructions."""
    twin = alg if alg.prime == q else alg.with_prime(q)
    rng = np.random.default_rng(seed)
    cat = ModuleCatalog(twin, dim_cap=dim_cap)

    def add(m, tag):
        if m.is_zero() or m.total_dim > dim_cap:
            return
        for piece in R.decompose_module(m, rng):
            if piece.total_dim > dim_cap or piece.is_zero():
                continue
            if len(cat.members) >= max_members:
                cat.complete = False
                return
            if _is_new(cat.members, piece, rng):
                cat.members.append(piece)
                cat.provenance.append(tag)

    n = twin.n
    base = []
    for i in range(1, n + 1):
        base += [(R.simple(twin, i), "simple"), (R.projective(twin, i), "projective"),
                 (R.injective(twin, i), "injective")]
    for m, tag in base:
        add(m, tag)
    # radical layers rad^k P and quotients P / rad^k P
    for i in range(1, n + 1):
        p = R.projective(twin, i)
        for k in range(1, int(twin.lengths.max()) + 2):
            spaces = _radical_power(p, k)
            if sum(s.shape[1] for s in spaces) == 0:
                break
            add(R.sub_rep(p, spaces)[0], "sub-quotient")
            add(R.quotient_rep(p, spaces)[0], "sub-quotient")
    # τ and τ⁻ orbits
    for m in list(cat.members):
        cur = m
        for _ in range(orbit_length):
            cur = R.tau(cur)
            if cur.is_zero() or cur.total_dim > dim_cap:
                break
            add(cur, "tau-orbit")
        cur = m
        for _ in range(orbit_length):
            cur = R.tau_inverse(cur)
            if cur.is_zero() or cur.total_dim > dim_cap:
                break
            add(cur, "tau-orbit")
    # kernels and cokernels of random morphisms
    for _ in range(random_morphisms):
        if len(cat.members) < 1:
            break
        i, j = rng.integers(0, len(cat.members), size=2)
        a, b = cat.members[i], cat.members[j]
        basis = R.hom_space(a, b)
        if not basis:
            continue
        f = R.random_morphism(basis, rng)
        add(R.kernel(f)[0], "random")
        add(R.cokernel(f)[0], "random")
        add(R.image(f)[0], "random")
    return cat


def _radical_power(p: R.Representation, k: int) -> list:
    """Column bases of rad^k p."""
    cur_spaces = [np.eye(d, dtype=np.int64) for d in p.dims]
    for _ in range(k):
        nxt = []
        for w in range(p.alg.n):
            cols = []
            for a in range(len(p.mats)):
                if p.alg.arrow_tgt[a] == w:
                    u = p.alg.arrow_src[a]
                    cols.append(fp.matmul(p.mats[a], cur_spaces[u], p.p))
            if cols:
                nxt.append(fp.column_basis(np.concatenate(cols, axis=1), p.p))
            else:
                nxt.append(np.zeros((p.dims[w], 0), dtype=np.int64))
        cur_spaces = nxt
    return cur_spaces


# ---------------------------------------------------------------------------
# signatures and probes

@dataclass(frozen=True)
class TorsionSignature:
    theta: tuple
    rows: tuple          # per member (T̄, F̄, T, F)
    catalog_hash: str

    @property
    def tf_columns(self) -> tuple:
        return tuple((r[0], r[1]) for r in self.rows)

    def tbar(self) -> frozenset:
        return frozenset(i for i, r in enumerate(self.rows) if r[0])

    def fbar(self) -> frozenset:
        return frozenset(i for i, r in enumerate(self.rows) if r[1])


def tf_signature(theta, catalog: ModuleCatalog) -> TorsionSignature:
    theta = tuple(Fraction(x) for x in theta)
    rows = []
    for m in catalog.members:
        tbar, fbar, t, f = classes(theta, m, catalog.dim_cap)
        if (t and not tbar) or (f and not fbar) or (tbar and f):
            raise AssertionError("inconsistent torsion signature at %s for %s" % (theta, m))
        rows.append((tbar, fbar, t, f))
    return TorsionSignature(theta, tuple(rows), catalog.hash)


@dataclass(frozen=True)
class ProbeVerdict:
    distinguished: bool
    witness: int | None = None        # catalog index
    reason: str = ""
    catalog_hash: str = ""

    @property
    def label(self) -> str:
        return "distinguished" if self.distinguished else "indistinguishable_on_catalog"


def compare_signatures(s1: TorsionSignature, s2: TorsionSignature) -> ProbeVerdict:
    for i, (a, b) in enumerate(zip(s1.rows, s2.rows)):
        if a[0] != b[0]:
            return ProbeVerdict(True, i, "T̄ membership differs", s1.catalog_hash)
        if a[1] != b[1]:
            return ProbeVerdict(True, i, "F̄ membership differs", s1.catalog_hash)
    return ProbeVerdict(False, None, "", s1.catalog_hash)


def tf_equivalent_probe(theta, eta, catalog: ModuleCatalog) -> ProbeVerdict:
    return compare_signatures(tf_signature(theta, catalog), tf_signature(eta, catalog))


@dataclass(frozen=True)
class WSpaceEstimate:
    theta: tuple
    semistable: tuple    # catalog indices
    span: int


def w_space_estimate(theta, catalog: ModuleCatalog) -> WSpaceEstimate:
    idx = tuple(i for i, m in enumerate(catalog.members) if is_semistable(theta, m, catalog.dim_cap))
    span = q_rank([catalog.members[i].dims for i in idx], catalog.alg.n) if idx else 0
    return WSpaceEstimate(tuple(Fraction(x) for x in theta), idx, span)


# ---------------------------------------------------------------------------
# presentations on the twin field

def twin_generic_sample(a_big, twin: BoundQuiverAlgebra, g: Sequence[int], rng: np.random.Generator,
                        attempts: int = 64):
    """A presentation over the twin whose cokernel and Ker ν have the generic dimension vectors."""
    from .presentations import sample_presentation
    want = (a_big.cokernel().dims, a_big.ker_nu().dims)
    for _ in range(attempts):
        b = sample_presentation(twin, g, rng)
        if (b.cokernel().dims, b.ker_nu().dims) == want:
            return b
    return None


def presentation_torsion_membership(a, x: R.Representation) -> dict:
    """Membership of x in T_a, T̄_a, F_a, F̄_a (a over the same field as x)."""
    if a.alg is not x.alg:
        a = a.transport(x.alg)
    cok, knu = a.cokernel(), a.ker_nu()
    return {
        "Tbar": R.hom_dim(x, knu) == 0,
        "Fbar": R.hom_dim(cok, x) == 0,
        "T": R.in_smallest_torsion_class(cok, x),
        "F": R.in_smallest_torsionfree_class(knu, x),
    }


@dataclass(frozen=True)
class DgReport:
    h: tuple
    g: tuple
    value: bool
    witness_s: int | None
    lemma_check: bool | None      # Coker a ∈ T̄_h and Ker νa ∈ F̄_h on a twin sample
    anomaly: bool


def dg_report(alg, h, g, s_max: int = 4, n_samples: int = 8, seed: int = 0,
              twin_q: int = 2, dim_cap: int = DEFAULT_DIM_CAP) -> DgReport:
    from collections import Counter
    from .presentations import engine_for, sample_presentation
    eng = engine_for(alg)
    h = tuple(int(x) for x in h)
    g = tuple(int(x) for x in g)
    dg = eng.decompose(g, n_samples, seed).multiset
    value, witness = False, None
    for s in range(1, s_max + 1):
        sh = tuple(s * x for x in h)
        lhs = eng.decompose(tuple(a + b for a, b in zip(g, sh)), n_samples, seed).multiset
        rhs = dg + eng.decompose(sh, n_samples, seed).multiset
        if lhs == rhs:
            value, witness = True, s
            break
    lemma = None
    try:
        twin = alg.with_prime(twin_q)
        rng = np.random.default_rng(seed)
        big = sample_presentation(alg, g, rng)
        small = twin_generic_sample(big, twin, g, rng)
        if small is not None:
            cok, knu = small.cokernel(), small.ker_nu()
            lemma = in_Tbar(h, cok, dim_cap) and in_Fbar(h, knu, dim_cap)
    except CapExceeded:
        lemma = None
    anomaly = lemma is not None and lemma != value
    return DgReport(h, g, value, witness, lemma, anomaly)


def in_Dg(alg, h, g, s_max: int = 4, n_samples: int = 8, seed: int = 0) -> bool:
    return dg_report(alg, h, g, s_max, n_samples, seed).value


def count_semistable_tp_signatures(g, grid: Iterable[Sequence[int]], catalog: ModuleCatalog) -> int:
    sg = tf_signature(g, catalog)
    tb, fb = sg.tbar(), sg.fbar()
    seen = set()
    for h in grid:
        sh = tf_signature(h, catalog)
        if tb <= sh.tbar() and fb <= sh.fbar():
            seen.add(sh.tf_columns)
    return len(seen)


def box_grid(n: int, lo: int, hi: int) -> list:
    return [tuple(v) for v in itertools.product(range(lo, hi + 1), repeat=n)]
