import re

import pytest
from hypothesis import given, strategies as st

from fock_mullineux import (
    EMPTY,
    INF,
    Partition,
    ParameterError,
    PartitionParseError,
    concat,
    conjugate,
    format_partition,
    is_regular,
    parse_partition,
    partitions,
    power,
)
from fock_mullineux.partitions import Node, partitions_up_to

from conftest import partitions_st

P = parse_partition


def count_partitions(n, largest=None):
    # independent of the library enumerator
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(count_partitions(n - k, k) for k in range(1, min(n, largest) + 1))


@pytest.mark.parametrize("text, parts", [
    ("3^2.1^7", (3, 3, 1, 1, 1, 1, 1, 1, 1)),
    ("0", ()),
    ("(2,2,1)", (2, 2, 1)),
    ("5", (5,)),
    (" 2 ^ 2 . 1 ", (2, 2, 1)),
])
def test_parse(text, parts):
    assert parse_partition(text).parts == parts


@pytest.mark.parametrize("text, token", [
    ("(2,3)", "'3'"),
    ("1.2", "'2'"),
    ("2^0.1", "'2^0'"),
    ("(2,0)", "'0'"),
    ("3^x", "'x'"),
    ("(2,-1)", "'-1'"),
    ("", "empty"),
])
def test_parse_errors_name_token(text, token):
    with pytest.raises(PartitionParseError, match=re.escape(token)):
        parse_partition(text)


@pytest.mark.parametrize("lam, style, text", [
    ((3, 3, 1, 1, 1, 1, 1, 1, 1), "exponent", "3^2.1^7"),
    ((), "exponent", "0"),
    ((2, 1), "comma", "(2,1)"),
    ((2, 2, 1), "exponent", "2^2.1"),
])
def test_format(lam, style, text):
    assert format_partition(Partition(lam), style) == text


def test_invalid_parts_rejected():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


@pytest.mark.parametrize("lam, conj", [
    ((3,), (1, 1, 1)),
    ((), ()),
    ((2, 2, 1, 1, 1, 1, 1, 1, 1), (9, 2)),
])
def test_conjugate(lam, conj):
    assert conjugate(Partition(lam)) == Partition(conj)


def test_concat_examples():
    assert concat(P("2.1"), P("2")) == P("2^2.1")
    assert concat(P("3.1"), EMPTY) == P("3.1")
    assert concat(P("1"), power(P("2"), 2), power(P("1"), 6)) == P("2^2.1^7")


def test_power_examples():
    assert power(P("2.1"), 2) == P("2^2.1^2")
    assert power(P("1"), 6) == P("1^6")
    assert power(P("4.2"), 0) == EMPTY
    assert power(P("4.2"), 1) == P("4.2")


def test_is_regular():
    assert not is_regular(P("2^2.1^7"), 3)
    assert is_regular(P("2.1"), 2)
    assert is_regular(P("1^50"), INF)
    with pytest.raises(ParameterError):
        is_regular(P("1"), 1)


def test_nodes():
    lam = P("3.1")
    assert Node(2, 1) in lam and Node(1, 3) in lam and Node(2, 2) not in lam
    assert lam.addable_nodes() == [Node(1, 4), Node(2, 2), Node(3, 1)]
    assert lam.removable_nodes() == [Node(1, 3), Node(2, 1)]
    assert EMPTY.addable_nodes() == [Node(1, 1)]
    assert lam.add_node(Node(2, 2)) == P("3.2")
    assert lam.remove_node(Node(2, 1)) == P("3")
    with pytest.raises(ValueError):
        lam.add_node(Node(2, 3))


@pytest.mark.parametrize("n", range(13))
def test_enumeration_counts(n):
    lams = list(partitions(n))
    assert len(lams) == len(set(lams)) == count_partitions(n)
    assert all(lam.rank == n for lam in lams)
    assert lams == sorted(lams, reverse=True)


@given(partitions_st(), partitions_st())
def test_concat_rank_and_commutative(lam, mu):
    assert concat(lam, mu).rank == lam.rank + mu.rank
    assert concat(lam, mu) == concat(mu, lam)


@given(partitions_st(), partitions_st(), partitions_st())
def test_concat_associative(a, b, c):
    assert concat(concat(a, b), c) == concat(a, concat(b, c))


@given(partitions_st(max_part=10, max_len=10))
def test_conjugate_involutive(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).rank == lam.rank


@given(partitions_st(4, 5), st.integers(0, 5))
def test_power_matches_concat(lam, k):
    assert power(lam, k) == concat(*([lam] * k))
    expected = {i: r * k for i, r in lam.multiplicities().items() if k}
    assert power(lam, k).multiplicities() == expected


@pytest.mark.parametrize("style", ["exponent", "comma"])
def test_parse_format_round_trip_exhaustive(style):
    for lam in partitions_up_to(15):
        assert parse_partition(format_partition(lam, style)) == lam
