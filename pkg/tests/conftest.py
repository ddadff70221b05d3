import numpy as np
import pytest

from vapprox.laws import generators as gen
from vapprox.quantale import chain_plus, frame_of_downsets, lukasiewicz, two
from vapprox.vcat import VCategory


@pytest.fixture(scope="session")
def B():
    return two()


@pytest.fixture(scope="session")
def L4():
    return lukasiewicz(4)


@pytest.fixture(scope="session")
def small_quantales():
    return [two(), lukasiewicz(2), lukasiewicz(4), chain_plus(3),
            frame_of_downsets(["a", "b"], [[1, 0], [0, 1]])]


@pytest.fixture(scope="session")
def chain2(B):
    return VCategory.from_preorder(B, ["0", "1"], [[1, 1], [0, 1]])


@pytest.fixture(scope="session")
def antichain2(B):
    return VCategory.from_preorder(B, ["a", "b"], np.eye(2, dtype=bool))


@pytest.fixture(scope="session")
def m3_cat(B):
    return gen.poset_category(gen.m3(), B)


@pytest.fixture(scope="session")
def n5_cat(B):
    return gen.poset_category(gen.n5(), B)
