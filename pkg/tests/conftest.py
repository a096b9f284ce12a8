import itertools

import pytest
from hypothesis import settings

from semitrace.semigroup import NumericalSemigroup

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def brute_members(gens, upto):
    """Members of <gens> in [0, upto] by closing under addition."""
    inside = [False] * (upto + 1)
    inside[0] = True
    for s in range(1, upto + 1):
        inside[s] = any(s >= g and inside[s - g] for g in gens)
    return inside


def brute_gap_sets(genus):
    """All numerical semigroups of the given genus, by brute force over gap sets."""
    out = set()
    top = 2 * genus
    for gaps in itertools.combinations(range(1, top + 1), genus):
        gapset = set(gaps)
        members = [s for s in range(1, top + 2) if s not in gapset]
        closed = all((x + y) not in gapset for x in members for y in members)
        if closed:
            out.add(frozenset(gapset))
    return out


@pytest.fixture
def s35():
    return NumericalSemigroup([3, 5])


@pytest.fixture
def s345():
    return NumericalSemigroup([3, 4, 5])
