import functools

import pytest

from u21 import grp, modrep


@functools.lru_cache(maxsize=None)
def induced(q, ell, e1, rank):
    spec = grp.unitary_group(q, rank)
    table = grp.flag_table(spec)
    chi = modrep.torus_character(q, e1, 0, ell)
    return modrep.induced_module(spec, table, chi)


@pytest.fixture(scope="session")
def make_module():
    return induced
