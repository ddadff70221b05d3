"""Direct, loop-based reference computations used by the law checks."""

from __future__ import annotations

import numpy as np


def downsets(le: np.ndarray) -> list:
    le = np.asarray(le, dtype=bool)
    n = len(le)
    out = []
    for mask in range(1 << n):
        s = {i for i in range(n) if mask >> i & 1}
        if all(j in s for i in s for j in range(n) if le[j, i]):
            out.append(s)
    return out


def join_in(le: np.ndarray, items) -> int | None:
    le = np.asarray(le, dtype=bool)
    ub = [u for u in range(len(le)) if all(le[i, u] for i in items)]
    least = [u for u in ub if all(le[u, w] for w in ub)]
    return least[0] if least else None


def totally_below_relation(le: np.ndarray) -> np.ndarray:
    """``R[y, x]``: ``y`` belongs to every down-set whose join is above ``x``."""
    le = np.asarray(le, dtype=bool)
    n = len(le)
    R = np.ones((n, n), dtype=bool)
    for D in downsets(le):
        j = join_in(le, D)
        for x in range(n):
            if le[x, j]:
                for y in range(n):
                    if y not in D:
                        R[y, x] = False
    return R


def totally_below_reconstruction(le: np.ndarray) -> bool:
    """Every element is the join of the elements totally below it."""
    R = totally_below_relation(le)
    return all(join_in(le, np.flatnonzero(R[:, x])) == x for x in range(len(le)))
