"""Brute-force reference implementations, written independently of the package.

Everything here works on plain Python values with explicit loops so that it
shares no code paths with the vectorised implementation under test.
"""

from itertools import chain, combinations, permutations, product


def subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def q_join(q, items):
    out = q.bottom
    for i in items:
        out = q.join[out, i]
    return out


def hom_oracle(q, a, b):
    """Largest c with a (x) c <= b, by scanning."""
    good = [c for c in range(len(q)) if q.leq[q.tensor[a, c], b]]
    best = [c for c in good if all(q.leq[d, c] for d in good)]
    return best[0]


def totally_below_oracle(q, b, a):
    for S in subsets(range(len(q))):
        if q.leq[a, q_join(q, S)] and not any(q.leq[b, s] for s in S):
            return False
    return True


def _directed(q, S):
    if not S:
        return False
    return all(any(q.leq[x, z] and q.leq[y, z] for z in S) for x in S for y in S)


def way_below_oracle(q, b, a):
    for S in subsets(range(len(q))):
        if _directed(q, S) and q.leq[a, q_join(q, S)] and not any(q.leq[b, s] for s in S):
            return False
    return True


def compose_oracle(q, phi, psi):
    """(psi . phi)(x, z) = join_y phi(x, y) (x) psi(y, z), with loops."""
    rows, mid, cols = len(phi), len(psi), len(psi[0]) if len(psi) else 0
    out = [[q.bottom] * cols for _ in range(rows)]
    for x in range(rows):
        for z in range(cols):
            acc = q.bottom
            for y in range(mid):
                acc = q.join[acc, q.tensor[phi[x][y], psi[y][z]]]
            out[x][z] = acc
    return out


def leq_matrix(q, a, b):
    return all(q.leq[a[i][j], b[i][j]] for i in range(len(a)) for j in range(len(a[i])))


def is_distributor(q, sx, sy, m):
    nx, ny = len(sx), len(sy)
    for x2, x, y, y2 in product(range(nx), range(nx), range(ny), range(ny)):
        if not q.leq[q.tensor[q.tensor[sx[x2][x], m[x][y]], sy[y][y2]], m[x2][y2]]:
            return False
    return True


def all_distributors(q, sx, sy):
    nx, ny = len(sx), len(sy)
    out = []
    for vals in product(range(len(q)), repeat=nx * ny):
        m = [list(vals[i * ny:(i + 1) * ny]) for i in range(nx)]
        if is_distributor(q, sx, sy, m):
            out.append(m)
    return out


def presheaves_oracle(q, s):
    n = len(s)
    out = []
    for vals in product(range(len(q)), repeat=n):
        if all(q.leq[q.tensor[s[x2][x], vals[x]], vals[x2]] for x in range(n) for x2 in range(n)):
            out.append(vals)
    return out


def is_upper_set(le, U):
    n = len(le)
    return all(j in U for i in U for j in range(n) if le[i][j])


def poset_join(le, items):
    n = len(le)
    ub = [u for u in range(n) if all(le[i][u] for i in items)]
    least = [u for u in ub if all(le[u][w] for w in ub)]
    return least[0] if least else None


def directed_subsets(le):
    n = len(le)
    for S in subsets(range(n)):
        if S and all(any(le[x][z] and le[y][z] for z in S) for x in S for y in S):
            yield S


def scott_open_oracle(le, U):
    """Upper set, inaccessible by joins of directed subsets."""
    if not is_upper_set(le, U):
        return False
    for D in directed_subsets(le):
        j = poset_join(le, D)
        if j is not None and j in U and not set(D) & set(U):
            return False
    return True


def classical_way_below(le, x, y):
    """x << y: every directed set with a join above y meets the up-set of x."""
    for D in directed_subsets(le):
        j = poset_join(le, D)
        if j is not None and le[y][j] and not any(le[x][d] for d in D):
            return False
    return True


def count_posets_up_to_iso(n):
    """Labelled partial orders, deduplicated by the sorted relation pair set."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    seen = set()
    for bits in product((0, 1), repeat=len(pairs)):
        rel = {p for p, b in zip(pairs, bits) if b}
        if any((j, i) in rel for (i, j) in rel):
            continue
        if any((i, k) not in rel for (i, j) in rel for (j2, k) in rel if j == j2 and i != k):
            continue
        key = min(tuple(sorted((p[i], p[j]) for i, j in rel)) for p in permutations(range(n)))
        seen.add(key)
    return len(seen)
