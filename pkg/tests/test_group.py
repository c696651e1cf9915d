import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import cycle_map, even_perms, inverse, sign_by_inversions, then
from picturecube.errors import BoundExceededError, MalformedCycleError
from picturecube.group import (DOWN, LEFT, RIGHT, UP, Perm4, alternating_table, commutator,
                               cube_elements, cyclic_table, derived_subgroup, format_cycles,
                               group_from_generators, is_simple, parse_cycles, perm_parity,
                               s4_table)

perms4 = st.permutations([1, 2, 3, 4]).map(lambda p: Perm4(tuple(p)))


def as_dict(p: Perm4):
    return {i + 1: x for i, x in enumerate(p.images)}


def test_s4_order_and_indexing():
    g = s4_table()
    assert g.order == 24
    assert g.identity == 0
    assert g.elements[0] == (1, 2, 3, 4)
    assert list(g.elements) == sorted(g.elements)


def test_up_one_line_form():
    # (1423): 1->4, 4->2, 2->3, 3->1
    expected = cycle_map([(1, 4, 2, 3)])
    assert as_dict(UP) == {k: expected[k] for k in range(1, 5)}
    assert UP.images == (4, 3, 1, 2)


def test_up_times_down_is_identity():
    g = s4_table()
    c = cube_elements()
    assert g.multiply(c["u"], c["d"]) == g.identity
    assert UP * DOWN == Perm4.identity()


def test_moves_pair_up_as_inverses():
    g = s4_table()
    c = cube_elements()
    assert g.inv[c["u"]] == c["d"]
    assert g.inv[c["l"]] == c["r"]


def test_product_matches_dict_composition():
    for p, q in itertools.product([UP, DOWN, LEFT, RIGHT], repeat=2):
        assert as_dict(p * q) == then(as_dict(p), as_dict(q))


@pytest.mark.parametrize("p, sign", [(Perm4.identity(), 1), (UP, -1), (DOWN, -1), (LEFT, -1),
                                     (RIGHT, -1), (parse_cycles("(12)(34)"), 1)])
def test_parity_examples(p, sign):
    assert perm_parity(p) == sign


def test_parity_is_homomorphism_exhaustive():
    elements = s4_table().elements
    for p, q in itertools.product(elements, repeat=2):
        pq = Perm4(p) * Perm4(q)
        assert perm_parity(pq) == perm_parity(p) * perm_parity(q)
        assert perm_parity(p) == sign_by_inversions(p)


def test_commutator_trivial_cases():
    g = s4_table()
    for x in range(g.order):
        assert commutator(g, g.identity, x) == g.identity
        assert commutator(g, x, x) == g.identity


def test_commutator_u_l_is_even():
    g = s4_table()
    c = cube_elements()
    u, l = as_dict(UP), as_dict(LEFT)
    oracle = then(then(then(u, l), inverse(u)), inverse(l))
    got = g.elements[commutator(g, c["u"], c["l"])]
    assert got == tuple(oracle[k] for k in range(1, 5))
    assert sign_by_inversions(got) == 1


@pytest.mark.parametrize("text, images", [
    ("()", (1, 2, 3, 4)),
    ("(1423)", (4, 3, 1, 2)),
    ("(12)(34)", (2, 1, 4, 3)),
    ("(1342)", (3, 1, 4, 2)),
])
def test_parse_cycles(text, images):
    assert parse_cycles(text).images == images


@pytest.mark.parametrize("bad", ["(1123)", "(15)", "(12", "12", "(1)(1)", "", "(a)", "()(12)"])
def test_parse_cycles_rejects(bad):
    with pytest.raises(MalformedCycleError):
        parse_cycles(bad)


@given(perms4)
def test_cycle_round_trip(p):
    assert parse_cycles(format_cycles(p)) == p


def test_paper_rotations_round_trip():
    assert [format_cycles(p) for p in (UP, DOWN, LEFT, RIGHT)] == ["(1423)", "(1324)", "(1342)", "(1243)"]


def test_closure_examples():
    assert group_from_generators(10, [], degree=4).order == 1
    assert group_from_generators(24, [UP]).order == 4
    a4 = group_from_generators(24, [parse_cycles("(123)"), parse_cycles("(12)(34)")])
    assert a4.order == 12
    assert set(a4.elements) == even_perms(4)
    assert a4.index(Perm4.identity()) == 0


def test_closure_bound():
    with pytest.raises(BoundExceededError):
        group_from_generators(10, [UP, LEFT])


def test_cyclic_subgroups_of_moves():
    for a, b in ((UP, DOWN), (LEFT, RIGHT)):
        h = group_from_generators(24, [a, b])
        assert h.order == 4
        powers = {Perm4.identity(), a, a * a, a * a * a}
        assert {Perm4(e) for e in h.elements} == powers


@pytest.mark.parametrize("table", [s4_table(), cyclic_table(2), cyclic_table(6), alternating_table(4),
                                   alternating_table(5)], ids=["S4", "Z2", "Z6", "A4", "A5"])
def test_group_axioms(table):
    table.check_axioms()


def test_named_orders():
    assert alternating_table(4).order == 12
    assert alternating_table(5).order == 60
    assert set(alternating_table(5).elements) == even_perms(5)


def test_simplicity():
    assert is_simple(alternating_table(5))
    assert not is_simple(alternating_table(4))
    assert not is_simple(s4_table())
    assert len(derived_subgroup(s4_table())) == 12
    assert len(derived_subgroup(alternating_table(5))) == 60


def test_perm4_rejects_non_permutations():
    with pytest.raises(ValueError):
        Perm4((1, 1, 2, 3))
