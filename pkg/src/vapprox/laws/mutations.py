"""Deliberately broken implementations, one per lemma law.

Each fixture is a context manager that patches a single function and clears
the memo caches on entry and exit.  Running the targeted law inside it must
produce a counterexample; this is how the law checks are shown to have teeth.
"""

from __future__ import annotations

from contextlib import contextmanager
from unittest import mock

from .. import cocomplete, continuity, dist
from .registry import clear_caches


@contextmanager
def _patched(module, name, replacement):
    clear_caches()
    try:
        with mock.patch.object(module, name, replacement):
            yield
    finally:
        clear_caches()


def _extension_is_target(psi, phi):
    # ignores phi: every Mod J member then passes as approximating
    return dist.Distributor(phi.target, psi.target, psi.matrix)


_real_compose = dist.compose


def _compose_first_middle(psi, phi):
    if len(phi.target) <= 1:
        return _real_compose(psi, phi)
    q = phi.quantale
    m = q.tensor[phi.matrix[:, 1:2, None], psi.matrix[None, 1:2, :]][:, 0, :]
    return dist.Distributor(phi.source, psi.target, m)


def _lifting_top(phi, psi):
    return dist.constant(psi.source, phi.source, phi.quantale.top)


def _waybelow_bottom(X, ideal_class=None):
    return continuity.WayBelow(X, ideal_class, dist.bottom(X, X))


MUTATIONS = {
    "approximating-is-auxiliary":
        lambda: _patched(dist, "right_extension", _extension_is_target),
    "approximating-closed-under-composition":
        lambda: _patched(dist, "compose", _compose_first_middle),
    "approximating-cocontinuous-is-interpolative":
        lambda: _patched(continuity, "is_cocontinuous_dist", lambda v, c=None: True),
    "waybelow-below-approximating":
        lambda: _patched(dist, "lifting", _lifting_top),
    "auxiliary-cocontinuous-below-waybelow":
        lambda: _patched(continuity, "way_below", _waybelow_bottom),
    "interpolative-below-waybelow-is-cocontinuous":
        lambda: _patched(continuity, "is_cocontinuous_dist", lambda v, c=None: False),
    "split-cocontinuous-is-left-adjoint":
        lambda: _patched(cocomplete, "is_cocontinuous_functor", lambda f, c=None: True),
}


def mutation(law_id: str):
    """The fixture targeting ``law_id``."""
    return MUTATIONS[law_id]()


__all__ = ["MUTATIONS", "mutation"]
