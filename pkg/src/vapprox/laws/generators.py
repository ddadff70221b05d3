"""Instance generators: posets, lattices, V-categories and spaces.

Exhaustive generators return instances up to isomorphism via a canonical form
(the lexicographically least adjacency bit-string over all relabellings).
Random generators take a ``numpy.random.Generator``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

import numpy as np

from ..quantale import QuantaleTable, two
from ..vcat import VCategory


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    le = np.asarray(rel, dtype=bool) | np.eye(len(rel), dtype=bool)
    for k in range(len(le)):
        le = le | (le[:, [k]] & le[[k], :])
    return le


def canonical_form(le: np.ndarray) -> bytes:
    n = len(le)
    best = None
    for p in permutations(range(n)):
        key = np.asarray(le)[np.ix_(p, p)].tobytes()
        if best is None or key < best:
            best = key
    return best if best is not None else b""


def is_partial_order(le: np.ndarray) -> bool:
    le = np.asarray(le, dtype=bool)
    n = len(le)
    if not le.diagonal().all():
        return False
    if (le & le.T & ~np.eye(n, dtype=bool)).any():
        return False
    return not (transitive_closure(le) & ~le).any()


@lru_cache(maxsize=None)
def _posets(n: int) -> tuple:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen, out = set(), []
    # every finite order has a linear extension, so upper-triangular relations suffice
    for bits in product((False, True), repeat=len(pairs)):
        le = np.eye(n, dtype=bool)
        for b, (i, j) in zip(bits, pairs):
            le[i, j] = b
        if (transitive_closure(le) != le).any():
            continue
        key = canonical_form(le)
        if key not in seen:
            seen.add(key)
            out.append(le)
    return tuple(out)


def gen_poset(n: int) -> list:
    """All partial orders on ``n`` points up to isomorphism (``n <= 5``)."""
    if n > 5:
        raise ValueError("exhaustive poset generation is limited to n <= 5")
    return [p.copy() for p in _posets(n)]


def random_poset(n: int, rng: np.random.Generator, density: float | None = None) -> np.ndarray:
    p = rng.uniform(0.2, 0.7) if density is None else density
    rel = np.triu(rng.random((n, n)) < p, k=1)
    le = transitive_closure(rel)
    perm = rng.permutation(n)
    return le[np.ix_(perm, perm)]


def poset_category(le, quantale: QuantaleTable | None = None, names=None) -> VCategory:
    q = quantale or two()
    le = np.asarray(le, dtype=bool)
    names = names or [chr(ord("a") + i) for i in range(len(le))]
    return VCategory.from_preorder(q, names, le)


def is_lattice(le: np.ndarray) -> bool:
    le = np.asarray(le, dtype=bool)
    n = len(le)
    for a in range(n):
        for b in range(n):
            ub = np.flatnonzero(le[a] & le[b])
            if not any(le[u, ub].all() for u in ub):
                return False
    return n > 0


def _bounded(p: np.ndarray) -> np.ndarray:
    """``0 + P + 1``."""
    n = len(p) + 2
    le = np.zeros((n, n), dtype=bool)
    le[0, :] = True
    le[:, -1] = True
    le[1:-1, 1:-1] = p
    return le


@lru_cache(maxsize=None)
def _lattices(max_size: int) -> tuple:
    out, seen = [], set()
    singleton = np.ones((1, 1), dtype=bool)
    out.append(singleton)
    seen.add(canonical_form(singleton))
    for k in range(0, max_size - 1):
        inner = gen_poset(k) if k else [np.zeros((0, 0), dtype=bool)]
        for p in inner:
            le = _bounded(p)
            if not is_lattice(le):
                continue
            key = canonical_form(le)
            if key not in seen:
                seen.add(key)
                out.append(le)
    return tuple(out)


def gen_lattice(max_size: int = 6) -> list:
    """All lattices with at most ``max_size`` elements, up to isomorphism."""
    return [m.copy() for m in _lattices(max_size)]


def is_distributive(le: np.ndarray) -> bool:
    le = np.asarray(le, dtype=bool)
    n = len(le)
    join = np.empty((n, n), dtype=np.int64)
    meet = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            ub = np.flatnonzero(le[a] & le[b])
            lb = np.flatnonzero(le[:, a] & le[:, b])
            join[a, b] = next(u for u in ub if le[u, ub].all())
            meet[a, b] = next(w for w in lb if le[lb, w].all())
    return all(meet[a, join[b, c]] == join[meet[a, b], meet[a, c]]
               for a in range(n) for b in range(n) for c in range(n))


def m3() -> np.ndarray:
    return _bounded(np.eye(3, dtype=bool))


def n5() -> np.ndarray:
    return _bounded(np.array([[1, 1, 0], [0, 1, 0], [0, 0, 1]], dtype=bool))


def chain(n: int) -> np.ndarray:
    return np.triu(np.ones((n, n), dtype=bool))


def gen_vcategory(q: QuantaleTable, n: int, rng: np.random.Generator) -> VCategory:
    """Random structure with unit diagonal, closed under ``X v X.X``."""
    s = rng.integers(0, len(q), size=(n, n))
    np.fill_diagonal(s, q.unit)
    while True:
        comp = q.join_reduce(q.tensor[s[:, :, None], s[None, :, :]], axis=1)
        nxt = q.join[s, comp]
        if np.array_equal(nxt, s):
            break
        s = nxt
    return VCategory(q, [chr(ord("a") + i) for i in range(n)], s)


def enumerate_vcategories(q: QuantaleTable, n: int) -> list:
    """Every structure on ``n`` labelled objects satisfying the axioms."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    if len(q) ** len(off) > 100_000:
        raise ValueError("too many candidate structures")
    out = []
    for vals in product(range(len(q)), repeat=len(off)):
        s = np.full((n, n), q.unit, dtype=np.int64)
        for v, (i, j) in zip(vals, off):
            s[i, j] = v
        comp = q.join_reduce(q.tensor[s[:, :, None], s[None, :, :]], axis=1) if n else s
        if q.le(comp, s) and all(q.leq[q.unit, s[i, i]] for i in range(n)):
            out.append(VCategory(q, [chr(ord("a") + i) for i in range(n)], s))
    return out


def random_space_opens(n: int, rng: np.random.Generator) -> list:
    """Opens generated by a few random subsets (closed under unions and intersections)."""
    gens = [frozenset(np.flatnonzero(rng.random(n) < 0.5).tolist())
            for _ in range(rng.integers(0, 4))]
    fam = {frozenset(), frozenset(range(n))} | set(gens)
    changed = True
    while changed:
        changed = False
        for a in list(fam):
            for b in list(fam):
                for c in (a | b, a & b):
                    if c not in fam:
                        fam.add(c)
                        changed = True
    return [sorted(s) for s in fam]
