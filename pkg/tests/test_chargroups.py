"""Component groups, characters, and the F2 solver."""

import itertools

import pytest
from hypothesis import given, strategies as st

from mp4spectrum.chargroups import (
    ComponentGroup,
    F2Character,
    LocalizationMap,
    rref,
    solve_affine,
    span_iter,
)


def test_free_group_characters():
    g = ComponentGroup(("a1", "a2"))
    chars = g.characters()
    assert [c.values for c in chars] == [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    assert g.rank == 2 and g.order() == 4


def test_trivial_group():
    g = ComponentGroup(())
    assert [c.values for c in g.characters()] == [()]
    assert g.rank == 0


def test_diagonal_quotient_characters():
    g = ComponentGroup(("a1", "a2"), ((1, 1),))
    assert [c.values for c in g.characters()] == [(1, 1), (-1, -1)]
    assert g.rank == 1


def test_first_factor_quotient_characters():
    g = ComponentGroup(("a1", "a2"), ((1, 0),))
    assert [c.values for c in g.characters()] == [(1, 1), (1, -1)]


def test_character_respects_relations():
    g = ComponentGroup(("a1", "a2"), ((1, 1),))
    with pytest.raises(ValueError):
        F2Character(g, (1, -1))


def test_character_product_and_on():
    g = ComponentGroup(("a1", "a2"))
    c1 = F2Character(g, (1, -1))
    c2 = F2Character(g, (-1, -1))
    assert (c1 * c2).values == (-1, 1)
    assert c1.on((1, 1)) == -1
    assert c1.on((0, 0)) == 1
    assert (c1 * c2).on((1, 0)) == c1.on((1, 0)) * c2.on((1, 0))


def test_rref_and_affine_solver():
    rows = [(1, 1, 0), (0, 1, 1), (1, 0, 1)]
    assert len(rref(rows, 3)) == 2
    sol = solve_affine([(1, 1, 0), (0, 1, 1)], [1, 0], 3)
    assert sol is not None
    x0, kernel = sol
    assert len(kernel) == 1
    for delta in span_iter(kernel, 3):
        x = tuple(a ^ b for a, b in zip(x0, delta))
        assert (x[0] ^ x[1]) == 1 and (x[1] ^ x[2]) == 0
    assert solve_affine([(1, 0), (1, 0)], [0, 1], 2) is None


def test_localization_map_linearity():
    g = ComponentGroup(("b1", "b2"), ((1, 1),))
    iota = LocalizationMap(("a1", "a2"), g, ((1, 0), (1, 1)))
    for x in itertools.product((0, 1), repeat=2):
        for y in itertools.product((0, 1), repeat=2):
            xy = tuple(a ^ b for a, b in zip(x, y))
            assert iota.image(xy) == tuple(
                a ^ b for a, b in zip(iota.image(x), iota.image(y))
            )


def test_pullback_functorial():
    g = ComponentGroup(("b1", "b2"))
    iota = LocalizationMap(("a1", "a2"), g, ((1, 1), (0, 1)))
    for eta in g.characters():
        pulled = iota.pullback(eta)
        # the pullback is again a character of the free global group
        for x in itertools.product((0, 1), repeat=2):
            for y in itertools.product((0, 1), repeat=2):
                xy = tuple(a ^ b for a, b in zip(x, y))
                val = lambda v: eta.on(iota.image(v))
                assert val(xy) == val(x) * val(y)
        assert pulled == tuple(eta.on(r) for r in iota.rows)


@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1)), max_size=4))
def test_characters_are_exactly_relation_orthogonal_vectors(relations):
    g = ComponentGroup(("x", "y", "z"), tuple(relations))
    chars = g.characters()
    assert len(chars) == g.order()
    seen = {c.values for c in chars}
    for values in itertools.product((1, -1), repeat=3):
        bits = tuple(0 if v == 1 else 1 for v in values)
        ok = all(sum(a & b for a, b in zip(bits, r)) % 2 == 0 for r in relations)
        assert (values in seen) == ok
