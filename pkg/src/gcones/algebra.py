"""Bound quiver algebras kQ/I over prime fields.

Paths compose left to right: the word ``a.b`` traverses ``a`` first, so
``target(a) == source(b)``.  A relation written right to left in the
literature, e.g. (αγβ)³ with β: 2→3, γ: 3→1, α: 1→2, becomes the word
``beta.gamma.alpha.beta.gamma.alpha.beta.gamma.alpha`` here.

Normal forms come from a length-lex rewriting system (longer words, then
larger label sequences, are rewritten to smaller ones), completed by
overlap resolution up to ``length_bound``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse

from . import fp
from .errors import (CompletionOverflow, NotAdmissible, NotFiniteDimensional,
                     NotPrime, ParseError)

DEFAULT_PRIME = 32003
DEFAULT_LENGTH_BOUND = 64


@dataclass(frozen=True)
class Arrow:
    label: str
    source: int  # 1-based
    target: int  # 1-based


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ParseError("a quiver needs at least one vertex")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise ParseError("arrow labels must be distinct")
        for a in self.arrows:
            if not (1 <= a.source <= self.vertex_count and 1 <= a.target <= self.vertex_count):
                raise ParseError("arrow %s has an endpoint outside 1..%d" % (a.label, self.vertex_count))

    def arrow_index(self, label: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.label == label:
                return i
        raise ParseError("unknown arrow %r" % label)


@dataclass(frozen=True)
class PathWord:
    """A path given by its start vertex (1-based) and arrow labels, left to right."""
    start: int
    arrows: tuple[str, ...] = ()


@dataclass(frozen=True)
class Relation:
    terms: tuple[tuple[int, PathWord], ...]


Word = tuple  # tuple of arrow indices


@dataclass(frozen=True, eq=False)
class BoundQuiverAlgebra:
    quiver: Quiver
    relations: tuple[Relation, ...]
    prime: int
    length_bound: int
    basis: tuple[tuple[int, Word], ...]      # (start vertex 0-based, word)
    rules: dict = field(repr=False)          # leading word -> {word: coeff}
    confluent: bool = True

    # -- shape ---------------------------------------------------------
    @property
    def n(self) -> int:
        return self.quiver.vertex_count

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def arrow_src(self) -> np.ndarray:
        return np.array([a.source - 1 for a in self.quiver.arrows], dtype=np.int64)

    @cached_property
    def arrow_tgt(self) -> np.ndarray:
        return np.array([a.target - 1 for a in self.quiver.arrows], dtype=np.int64)

    def _word_end(self, start: int, word: Word) -> int:
        return int(self.arrow_tgt[word[-1]]) if word else start

    @cached_property
    def src(self) -> np.ndarray:
        return np.array([s for s, _ in self.basis], dtype=np.int64)

    @cached_property
    def tgt(self) -> np.ndarray:
        return np.array([self._word_end(s, w) for s, w in self.basis], dtype=np.int64)

    @cached_property
    def lengths(self) -> np.ndarray:
        return np.array([len(w) for _, w in self.basis], dtype=np.int64)

    @cached_property
    def index(self) -> dict:
        return {b: i for i, b in enumerate(self.basis)}

    @cached_property
    def trivial(self) -> np.ndarray:
        """Basis index of the idempotent e_v for each vertex v (0-based)."""
        return np.array([self.index[(v, ())] for v in range(self.n)], dtype=np.int64)

    def paths_between(self, i: int, j: int) -> np.ndarray:
        """Basis indices of paths from vertex i to vertex j (0-based)."""
        return np.nonzero((self.src == i) & (self.tgt == j))[0]

    def path_label(self, b: int) -> str:
        start, word = self.basis[b]
        if not word:
            return "e%d" % (start + 1)
        return ".".join(self.quiver.arrows[a].label for a in word)

    # -- rewriting -----------------------------------------------------
    def _order_key(self, word: Word):
        return _order_key(self.quiver, word)

    def reduce_word(self, start: int, word: Word) -> np.ndarray:
        """Normal form of a path as a coefficient vector in the basis."""
        out = np.zeros(self.dim, dtype=np.int64)
        if not word:
            out[self.index[(start, ())]] = 1
            return out
        for w, c in _reduce(self.quiver, self.rules, {tuple(word): 1}, self.prime).items():
            out[self.index[(int(self.arrow_src[w[0]]), w)]] = c
        return out

    # -- structure constants -------------------------------------------
    @cached_property
    def mult_triples(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        ia, ib, ic, cc = [], [], [], []
        for a, (sa, wa) in enumerate(self.basis):
            end = self._word_end(sa, wa)
            for b in np.nonzero(self.src == end)[0]:
                sb, wb = self.basis[b]
                if not wa:
                    vec = {b: 1}
                elif not wb:
                    vec = {a: 1}
                else:
                    nf = self.reduce_word(sa, wa + wb)
                    vec = {int(k): int(nf[k]) for k in np.nonzero(nf)[0]}
                for c, v in vec.items():
                    ia.append(a)
                    ib.append(int(b))
                    ic.append(c)
                    cc.append(v)
        arr = lambda x: np.array(x, dtype=np.int64)
        return arr(ia), arr(ib), arr(ic), arr(cc)

    @cached_property
    def mult_matrix(self) -> sparse.csr_matrix:
        """Sparse (D, D*D) matrix with entry [a, b*D + c] = coefficient of c in a*b."""
        ia, ib, ic, cc = self.mult_triples
        d = self.dim
        return sparse.csr_matrix((cc.astype(np.float64), (ia, ib * d + ic)), shape=(d, d * d))

    @cached_property
    def mult_tensor(self) -> np.ndarray:
        ia, ib, ic, cc = self.mult_triples
        t = np.zeros((self.dim,) * 3, dtype=np.int64)
        np.add.at(t, (ia, ib, ic), cc)
        return t % self.prime

    def left_tensor(self, a: np.ndarray) -> np.ndarray:
        """T[..., b, c] = sum_x a[..., x] * C[x, b, c]  (left multiplication by a)."""
        d = self.dim
        flat = np.asarray(a, dtype=np.int64).reshape(-1, d)
        if flat.shape[0] == 0:
            return np.zeros(a.shape[:-1] + (d, d), dtype=np.int64)
        out = self.mult_matrix.T.dot(flat.T.astype(np.float64)).T  # (rows, D*D)
        out = np.rint(out).astype(np.int64) % self.prime
        return out.reshape(a.shape[:-1] + (d, d))

    def right_tensor(self, b: np.ndarray) -> np.ndarray:
        """U[..., a, c] = sum_x C[a, x, c] * b[..., x]  (right multiplication by b)."""
        t = self.mult_tensor  # (a, x, c)
        flat = np.asarray(b, dtype=np.int64).reshape(-1, self.dim)
        out = np.einsum("axc,rx->rac", t, flat, optimize=True) % self.prime
        return out.reshape(b.shape[:-1] + (self.dim, self.dim))

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product x*y of algebra elements given as coefficient vectors."""
        t = self.left_tensor(np.asarray(x)[None, :])[0]
        return fp.matmul(np.asarray(y, dtype=np.int64)[None, :], t, self.prime)[0]

    def element(self, terms: Iterable[tuple[int, str]]) -> np.ndarray:
        """Element from (coeff, 'a.b' or 'e<v>') pairs."""
        out = np.zeros(self.dim, dtype=np.int64)
        for c, text in terms:
            out = (out + c * self.path_vector(text)) % self.prime
        return out

    def path_vector(self, text: str) -> np.ndarray:
        text = text.strip()
        if text.startswith("e") and text[1:].isdigit():
            v = np.zeros(self.dim, dtype=np.int64)
            v[self.trivial[int(text[1:]) - 1]] = 1
            return v
        word = tuple(self.quiver.arrow_index(t) for t in text.split("."))
        _check_composable(self.quiver, word)
        return self.reduce_word(int(self.arrow_src[word[0]]), word)

    def one(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.trivial] = 1
        return v

    def idempotent(self, v: int) -> np.ndarray:
        e = np.zeros(self.dim, dtype=np.int64)
        e[self.trivial[v]] = 1
        return e

    # -- derived algebras ------------------------------------------------
    def with_prime(self, prime: int) -> "BoundQuiverAlgebra":
        return build_algebra(self.quiver, self.relations, prime, self.length_bound)

    @cached_property
    def opposite(self) -> "BoundQuiverAlgebra":
        q = Quiver(self.n, tuple(Arrow(a.label, a.target, a.source) for a in self.quiver.arrows))
        rels = []
        for rel in self.relations:
            terms = []
            for c, pw in rel.terms:
                end = self._word_end(pw.start - 1, tuple(self.quiver.arrow_index(l) for l in pw.arrows))
                terms.append((c, PathWord(end + 1, tuple(reversed(pw.arrows)))))
            rels.append(Relation(tuple(terms)))
        return build_algebra(q, tuple(rels), self.prime, self.length_bound)

    def to_text(self) -> str:
        lines = ["vertices %d" % self.n]
        for a in self.quiver.arrows:
            lines.append("arrow %s %d %d" % (a.label, a.source, a.target))
        for rel in self.relations:
            lines.append("relation " + " ".join("%d*%s" % (c, ".".join(pw.arrows)) for c, pw in rel.terms))
        lines.append("prime %d" % self.prime)
        return "\n".join(lines) + "\n"

    @cached_property
    def fingerprint(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()[:16]

    def __repr__(self):
        return "BoundQuiverAlgebra(n=%d, dim=%d, p=%d)" % (self.n, self.dim, self.prime)


# ---------------------------------------------------------------------------
# rewriting machinery

def _order_key(quiver: Quiver, word: Word):
    ranks = _label_ranks(quiver)
    return (len(word), tuple(ranks[a] for a in word))


_RANK_CACHE: dict = {}


def _label_ranks(quiver: Quiver) -> list[int]:
    r = _RANK_CACHE.get(quiver)
    if r is None:
        order = sorted(range(len(quiver.arrows)), key=lambda i: quiver.arrows[i].label)
        r = [0] * len(order)
        for k, i in enumerate(order):
            r[i] = k
        _RANK_CACHE[quiver] = r
    return r


def _find(word: Word, sub: Word) -> int:
    n, m = len(word), len(sub)
    for i in range(n - m + 1):
        if word[i:i + m] == sub:
            return i
    return -1


def _reduce(quiver: Quiver, rules: dict, poly: dict, p: int) -> dict:
    work = {w: c % p for w, c in poly.items() if c % p}
    result = {}
    key = lambda w: _order_key(quiver, w)
    while work:
        w = max(work, key=key)
        c = work.pop(w)
        if c == 0:
            continue
        hit = None
        for lw in rules:
            pos = _find(w, lw)
            if pos >= 0:
                hit = (pos, lw)
                break
        if hit is None:
            result[w] = c
            continue
        pos, lw = hit
        pre, post = w[:pos], w[pos + len(lw):]
        for rw, rc in rules[lw].items():
            nw = pre + rw + post
            work[nw] = (work.get(nw, 0) + c * rc) % p
    return {w: c for w, c in result.items() if c}


def _check_composable(quiver: Quiver, word: Word):
    for a, b in zip(word, word[1:]):
        if quiver.arrows[a].target != quiver.arrows[b].source:
            raise NotAdmissible("path %s is not composable"
                                % ".".join(quiver.arrows[i].label for i in word))


def _complete(quiver: Quiver, polys: list[dict], p: int, bound: int) -> dict:
    rules: dict = {}
    key = lambda w: _order_key(quiver, w)
    pending = list(polys)
    done_pairs: set = set()

    def insert(poly):
        poly = _reduce(quiver, rules, poly, p)
        if not poly:
            return
        lw = max(poly, key=key)
        if len(lw) > bound:
            raise CompletionOverflow("rewriting completion produced a rule of length %d > %d"
                                     % (len(lw), bound))
        lc_inv = fp.inv(poly[lw], p)
        rhs = {w: (-c * lc_inv) % p for w, c in poly.items() if w != lw}
        # rules whose leading word contains lw become reducible; re-queue them
        for old in [o for o in rules if _find(o, lw) >= 0]:
            back = dict(rules.pop(old))
            back = {w: (-c) % p for w, c in back.items()}
            back[old] = 1
            pending.append(back)
        rules[lw] = rhs

    while True:
        while pending:
            insert(pending.pop())
        new = []
        for u in list(rules):
            for v in list(rules):
                if (u, v) in done_pairs:
                    continue
                done_pairs.add((u, v))
                for k in range(1, min(len(u), len(v))):
                    if u[-k:] != v[:k]:
                        continue
                    left = {w + v[k:]: c for w, c in rules[u].items()}
                    right = {u[:-k] + w: c for w, c in rules[v].items()}
                    diff = dict(left)
                    for w, c in right.items():
                        diff[w] = (diff.get(w, 0) - c) % p
                    diff = _reduce(quiver, rules, diff, p)
                    if diff:
                        new.append(diff)
        if not new:
            return rules
        pending.extend(new)
        done_pairs = {pr for pr in done_pairs if pr[0] in rules and pr[1] in rules}


def build_algebra(quiver: Quiver, relations: Sequence[Relation], prime: int = DEFAULT_PRIME,
                  length_bound: int = DEFAULT_LENGTH_BOUND) -> BoundQuiverAlgebra:
    if not fp.is_prime(prime):
        raise NotPrime("%d is not prime" % prime)
    if length_bound < 2:
        raise ParseError("length_bound must be at least 2")
    polys = []
    for rel in relations:
        poly: dict = {}
        ends = set()
        for c, pw in rel.terms:
            if len(pw.arrows) < 2:
                raise NotAdmissible("relation term of length %d < 2" % len(pw.arrows))
            word = tuple(quiver.arrow_index(l) for l in pw.arrows)
            _check_composable(quiver, word)
            if quiver.arrows[word[0]].source != pw.start:
                raise NotAdmissible("relation path does not start at vertex %d" % pw.start)
            ends.add((pw.start, quiver.arrows[word[-1]].target))
            poly[word] = (poly.get(word, 0) + c) % prime
        if len(ends) > 1:
            raise NotAdmissible("relation paths must share source and target")
        poly = {w: c for w, c in poly.items() if c}
        if poly:
            polys.append(poly)
    rules = _complete(quiver, polys, prime, length_bound)

    basis: list[tuple[int, Word]] = [(v, ()) for v in range(quiver.vertex_count)]
    frontier = [(v, ()) for v in range(quiver.vertex_count)]
    by_source: dict = {}
    for i, a in enumerate(quiver.arrows):
        by_source.setdefault(a.source - 1, []).append(i)
    while frontier:
        nxt = []
        for start, word in frontier:
            end = quiver.arrows[word[-1]].target - 1 if word else start
            for a in by_source.get(end, []):
                w = word + (a,)
                if any(_find(w, lw) >= 0 for lw in rules):
                    continue
                if len(w) >= length_bound:
                    raise NotFiniteDimensional("irreducible path of length %d reached the bound"
                                               % len(w))
                nxt.append((start, w))
        basis.extend(nxt)
        frontier = nxt
    ranks = _label_ranks(quiver)
    basis.sort(key=lambda b: (len(b[1]), tuple(ranks[a] for a in b[1]), b[0]))
    alg = BoundQuiverAlgebra(quiver, tuple(relations), prime, length_bound, tuple(basis), rules)
    return alg


# ---------------------------------------------------------------------------
# text format

def parse_algebra(text: str, prime: int | None = None,
                  length_bound: int = DEFAULT_LENGTH_BOUND) -> BoundQuiverAlgebra:
    """Parse the line-oriented algebra format.

    ``prime`` overrides the ``prime`` line when given.
    """
    n = None
    arrows: list[Arrow] = []
    raw_rel: list[list[tuple[int, str]]] = []
    file_prime = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            if head == "vertices":
                n = int(rest[0])
            elif head == "arrow":
                label, s, t = rest
                arrows.append(Arrow(label, int(s), int(t)))
            elif head == "relation":
                terms = []
                for tok in rest:
                    c, _, path = tok.partition("*")
                    if not path:
                        c, path = "1", tok
                    terms.append((int(c), path))
                if not terms:
                    raise ValueError("empty relation")
                raw_rel.append(terms)
            elif head == "prime":
                file_prime = int(rest[0])
            else:
                raise ValueError("unknown keyword %r" % head)
        except (ValueError, IndexError) as exc:
            raise ParseError("line %d: %s" % (lineno, exc)) from None
    if n is None:
        raise ParseError("missing 'vertices' line")
    quiver = Quiver(n, tuple(arrows))
    p = prime if prime is not None else (file_prime if file_prime is not None else DEFAULT_PRIME)
    rels = []
    for terms in raw_rel:
        rterms = []
        for c, path in terms:
            labels = tuple(path.split("."))
            start = quiver.arrows[quiver.arrow_index(labels[0])].source
            rterms.append((c, PathWord(start, labels)))
        rels.append(Relation(tuple(rterms)))
    return build_algebra(quiver, rels, p, length_bound)


def load_algebra(path, prime: int | None = None) -> BoundQuiverAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read(), prime)


def multiply(alg: BoundQuiverAlgebra, x, y) -> np.ndarray:
    return alg.multiply(x, y)


BUILTIN_NAMES = ("a2", "a3", "kronecker2", "kronecker3", "cycle3", "semisimple2")


def builtin_text(name: str) -> str:
    from importlib import resources
    if name not in BUILTIN_NAMES:
        raise ParseError("unknown builtin algebra %r (choose from %s)" % (name, ", ".join(BUILTIN_NAMES)))
    return resources.files("gcones").joinpath("data", name + ".alg").read_text(encoding="utf-8")


def builtin_algebra(name: str, prime: int | None = None) -> BoundQuiverAlgebra:
    return parse_algebra(builtin_text(name), prime)
