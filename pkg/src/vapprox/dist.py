"""Distributors between finite V-categories.

A distributor ``phi: X -/-> Y`` is stored as ``phi.matrix[x, y]``, contravariant
in the source object and covariant in the target object.  Composition follows
``(psi . phi)(x, z) = join_y phi(x, y) (x) psi(y, z)``.
"""

from __future__ import annotations

import numpy as np

from .report import StructureError, ValidationReport
from .vcat import VCategory, VFunctor


class Distributor:
    def __init__(self, source: VCategory, target: VCategory, matrix):
        if source.quantale != target.quantale:
            raise StructureError("distributor between categories over different quantales")
        arr = np.asarray(matrix, dtype=np.int64)
        if arr.size != len(source) * len(target) or (arr.ndim == 2 and arr.shape != (
                len(source), len(target))):
            raise StructureError(f"distributor matrix must be {len(source)}x{len(target)}")
        arr = arr.reshape(len(source), len(target))
        if arr.size and ((arr < 0) | (arr >= len(source.quantale))).any():
            raise StructureError("distributor entry is not an element index")
        arr = arr.copy()
        arr.setflags(write=False)
        self.source, self.target, self.matrix = source, target, arr

    @property
    def quantale(self):
        return self.source.quantale

    def __repr__(self) -> str:
        q = self.quantale
        rows = [[q.name(v) for v in row] for row in self.matrix]
        return f"Distributor({rows!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Distributor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and np.array_equal(self.matrix, other.matrix))

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.matrix.tobytes()))

    def __le__(self, other: "Distributor") -> bool:
        _check_parallel(self, other)
        return self.quantale.le(self.matrix, other.matrix)

    def __ge__(self, other: "Distributor") -> bool:
        return other <= self

    def __mul__(self, other: "Distributor") -> "Distributor":
        """``psi * phi`` is ``psi . phi`` (apply ``phi`` first)."""
        return compose(self, other)


def _check_parallel(a: Distributor, b: Distributor) -> None:
    if a.source != b.source or a.target != b.target:
        raise StructureError("distributors are not parallel")


def identity(X: VCategory) -> Distributor:
    return Distributor(X, X, X.structure)


def constant(source: VCategory, target: VCategory, value: int) -> Distributor:
    return Distributor(source, target, np.full((len(source), len(target)), value))


def bottom(source: VCategory, target: VCategory) -> Distributor:
    return constant(source, target, source.quantale.bottom)


def validate_distributor(phi: Distributor) -> ValidationReport:
    """Bimodule laws ``X(x',x) (x) phi(x,y) <= phi(x',y)`` and
    ``phi(x,y) (x) Y(y,y') <= phi(x,y')``."""
    q = phi.quantale
    X, Y, m = phi.source, phi.target, phi.matrix
    rep = ValidationReport("distributor")
    w = None
    if m.size:
        left = q.tensor[X.structure[:, :, None], m[None, :, :]]  # (x', x, y)
        bad = ~q.leq[left, m[:, None, :]]
        if bad.any():
            a, b, c = np.argwhere(bad)[0]
            w = (X.objects[a], X.objects[b], Y.objects[c])
    rep.add("source-action", w is None, w)
    w = None
    if m.size:
        right = q.tensor[m[:, :, None], Y.structure[None, :, :]]  # (x, y, y')
        bad = ~q.leq[right, m[:, None, :]]
        if bad.any():
            a, b, c = np.argwhere(bad)[0]
            w = (X.objects[a], Y.objects[b], Y.objects[c])
    rep.add("target-action", w is None, w)
    return rep


def compose_matrices(q, phi: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """Matrix of ``psi . phi`` for index arrays ``phi (X,Y)`` and ``psi (Y,Z)``."""
    return q.join_reduce(q.tensor[phi[:, :, None], psi[None, :, :]], axis=1)


def compose(psi: Distributor, phi: Distributor) -> Distributor:
    """``psi . phi`` for ``phi: X -/-> Y`` and ``psi: Y -/-> Z``."""
    if phi.target != psi.source:
        raise StructureError("middle categories do not match")
    return Distributor(phi.source, psi.target,
                       compose_matrices(phi.quantale, phi.matrix, psi.matrix))


def lower_star(f: VFunctor) -> Distributor:
    """``f_*(x, y) = Y(fx, y)``."""
    m = np.asarray(f.mapping, dtype=np.int64)
    return Distributor(f.source, f.target, f.target.structure[m, :])


def upper_star(f: VFunctor) -> Distributor:
    """``f^*(y, x) = Y(y, fx)``."""
    m = np.asarray(f.mapping, dtype=np.int64)
    return Distributor(f.target, f.source, f.target.structure[:, m])


def lifting(phi: Distributor, psi: Distributor) -> Distributor:
    """Lifting of ``psi: Z -/-> Y`` along ``phi: X -/-> Y``.

    ``(phi lift psi)(z, x) = meet_y hom(phi(x, y), psi(z, y))``; the largest
    ``gamma: Z -/-> X`` with ``phi . gamma <= psi``.
    """
    if phi.target != psi.target:
        raise StructureError("lifting needs a common target")
    q = phi.quantale
    vals = q.hom[phi.matrix[None, :, :], psi.matrix[:, None, :]]  # (z, x, y)
    return Distributor(psi.source, phi.source, q.meet_reduce(vals, axis=2))


def right_extension(psi: Distributor, phi: Distributor) -> Distributor:
    """Right extension of ``psi: X -/-> Z`` along ``phi: X -/-> Y``.

    ``(psi ext phi)(y, z) = meet_x hom(phi(x, y), psi(x, z))``; the largest
    ``gamma: Y -/-> Z`` with ``gamma . phi <= psi``.
    """
    if phi.source != psi.source:
        raise StructureError("right extension needs a common source")
    q = phi.quantale
    vals = q.hom[phi.matrix[:, :, None], psi.matrix[:, None, :]]  # (x, y, z)
    return Distributor(phi.target, psi.target, q.meet_reduce(vals, axis=0))


def adjoint_check(phi: Distributor, psi: Distributor) -> bool:
    """``phi: Z -/-> X`` is left adjoint to ``psi: X -/-> Z``:
    ``phi . psi <= X`` and ``psi . phi >= Z``."""
    if phi.source != psi.target or phi.target != psi.source:
        raise StructureError("adjoint_check needs opposite types")
    return compose(phi, psi) <= identity(phi.target) and \
        compose(psi, phi) >= identity(phi.source)


def mate(phi: Distributor) -> VFunctor:
    """The functor ``Y -> hat X``, ``y |-> phi(-, y)``."""
    from .ideals import presheaf_category

    hat = presheaf_category(phi.source)
    return VFunctor(phi.target, hat.category, [hat.lookup(col) for col in phi.matrix.T])
