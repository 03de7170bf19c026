import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusscat import oracles
from fusscat.partition import (
    Arc,
    PartitionError,
    box_count,
    comb_partition,
    contract,
    from_blocks,
    identity,
    is_noncrossing,
    is_refinement,
    nc_join,
    parse,
    serialize,
    standard_arcs,
)

from conftest import partitions

WORKED_P = from_blocks(12, [[1, 2, 7, 12], [3, 4, 5, 6], [8, 9, 10, 11]])


def test_from_blocks_canonicalizes():
    P = from_blocks(4, [[4, 3], [2, 1]])
    assert P.blocks == ((1, 2), (3, 4))
    assert from_blocks(0, []).blocks == ()


@pytest.mark.parametrize(
    "n, blocks, message",
    [
        (4, [[1, 2], [2, 3, 4]], "duplicated"),
        (3, [[1, 2], [3, 4]], "outside"),
        (3, [[1, 2], []], "empty"),
        (4, [[1, 2], [3]], "not covered"),
    ],
)
def test_from_blocks_rejects(n, blocks, message):
    with pytest.raises(PartitionError, match=message):
        from_blocks(n, blocks)


def test_serialization():
    assert serialize(WORKED_P) == "1,2,7,12/3,4,5,6/8,9,10,11"
    assert serialize(from_blocks(0, [])) == ""
    assert parse("") == from_blocks(0, [])
    assert parse("3,4/1,2") == from_blocks(4, [[1, 2], [3, 4]])


@given(partitions())
def test_serialize_roundtrip(P):
    assert parse(serialize(P), P.n) == P
    assert from_blocks(P.n, P.blocks) == P


@pytest.mark.parametrize(
    "P, expected",
    [
        (from_blocks(4, [[1, 3], [2, 4]]), False),
        (WORKED_P, True),
        (from_blocks(6, [[1, 4, 5], [2, 3, 6]]), False),
        (from_blocks(0, []), True),
    ],
)
def test_is_noncrossing_examples(P, expected):
    assert is_noncrossing(P) is expected


@given(partitions())
def test_is_noncrossing_matches_quadruple_search(P):
    assert is_noncrossing(P) == (not oracles.crossing(P))


def test_standard_arcs():
    assert standard_arcs(WORKED_P) == [
        Arc(1, 2), Arc(2, 7), Arc(3, 4), Arc(4, 5), Arc(5, 6),
        Arc(7, 12), Arc(8, 9), Arc(9, 10), Arc(10, 11),
    ]
    assert standard_arcs(identity(3)) == []
    assert standard_arcs(from_blocks(3, [[1, 3], [2]])) == [Arc(1, 3)]


def test_box_count_examples():
    assert box_count(WORKED_P) == 1
    assert box_count(identity(5)) == 5
    assert box_count(from_blocks(0, [])) == 0
    with pytest.raises(PartitionError):
        box_count(from_blocks(4, [[1, 3], [2, 4]]))


@given(partitions())
def test_box_count_matches_nesting_definition(P):
    if is_noncrossing(P):
        assert box_count(P) == oracles.boxes(P)
        if P.n:
            assert 1 <= box_count(P) <= len(P)


def test_refinement_examples():
    P = from_blocks(4, [[1, 2], [3, 4]])
    assert is_refinement(identity(4), P)
    assert is_refinement(
        from_blocks(6, [[1, 4], [2, 3], [5, 6]]), from_blocks(6, [[1, 4, 5, 6], [2, 3]])
    )
    assert not is_refinement(P, from_blocks(4, [[1, 3], [2, 4]]))
    with pytest.raises(PartitionError):
        is_refinement(identity(3), identity(4))


def test_nc_join_worked_example():
    joined = nc_join(WORKED_P, comb_partition(12, 2, 2))
    assert joined == from_blocks(12, [[1, 2, 7, 8, 9, 10, 11, 12], [3, 4, 5, 6]])
    assert contract(joined, 2) == from_blocks(6, [[1, 4, 5, 6], [2, 3]])


def test_nc_join_rejects_crossing():
    with pytest.raises(PartitionError):
        nc_join(from_blocks(4, [[1, 3], [2, 4]]), identity(4))


@pytest.mark.parametrize("n", range(0, 7))
def test_nc_join_is_the_lattice_join(n):
    nc = oracles.noncrossing(n)
    for P1, P2 in itertools.product(nc, repeat=2):
        J = nc_join(P1, P2)
        assert J == oracles.join_by_scan(P1, P2)
        assert J == nc_join(P2, P1)


@pytest.mark.parametrize("n", range(0, 7))
def test_nc_join_laws(n):
    nc = oracles.noncrossing(n)
    unit = identity(n)
    for P in nc:
        assert nc_join(P, P) == P
        assert nc_join(unit, P) == P
    for P1, P2 in itertools.product(nc, repeat=2):
        J = nc_join(P1, P2)
        assert is_refinement(P1, J) and is_refinement(P2, J)
    if n <= 5:
        for P1, P2, P3 in itertools.product(nc, repeat=3):
            assert nc_join(nc_join(P1, P2), P3) == nc_join(P1, nc_join(P2, P3))


NC6 = st.sampled_from(oracles.noncrossing(6))


@settings(max_examples=300)
@given(NC6, NC6, NC6)
def test_nc_join_associative_sampled(P1, P2, P3):
    assert nc_join(nc_join(P1, P2), P3) == nc_join(P1, nc_join(P2, P3))


def test_contract_examples():
    assert contract(WORKED_P, 2) == from_blocks(6, [[1, 4], [2, 3], [5, 6]])
    assert contract(WORKED_P, 1) == WORKED_P
    assert contract(from_blocks(6, [[1, 2, 3, 4, 5, 6]]), 3) == from_blocks(2, [[1, 2]])


@pytest.mark.parametrize("k", [0, -1, 5])
def test_contract_rejects(k):
    with pytest.raises(PartitionError):
        contract(WORKED_P, k)


@given(partitions())
def test_contract_keeps_planarity(P):
    if is_noncrossing(P):
        for k in range(1, P.n + 1):
            if P.n % k == 0:
                assert is_noncrossing(contract(P, k))


def test_comb_partition():
    assert comb_partition(12, 2, 2) == from_blocks(12, [[2 * j - 1, 2 * j] for j in range(1, 7)])
    assert comb_partition(6, 3, 1) == identity(6)
    assert comb_partition(6, 3, 2) == from_blocks(6, [[1, 2], [3], [4, 5], [6]])
    for bad in [(7, 3, 1), (6, 3, 0), (6, 3, 4), (6, 0, 1)]:
        with pytest.raises(PartitionError):
            comb_partition(*bad)
