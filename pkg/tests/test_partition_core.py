import pytest
from hypothesis import given

from conftest import EXAMPLE1, EXAMPLE2_INPUT, EXAMPLE2_OUTPUT, partitions, moduli, random_partition
from test_config import PROPERTY_K, PROPERTY_MAX_N, RANDOM_CASES
from PartitionPlaygroundCode.combinatorics.identities import enumerate_partitions
from PartitionPlaygroundCode.combinatorics.partition_core import (
    EMPTY,
    Partition,
    conjugate,
    format_partition,
    from_multiplicities,
    has_initial_k_repetitions,
    has_strong_initial_repetitions,
    is_k_flat,
    is_repetition_bounded,
    largest_k_repeated_part,
    make_partition,
    multiplicities,
    multiplicity,
    parse_partition,
)
from PartitionPlaygroundCode.utils.errors import InvalidParameter, NotAPartition, PartitionSyntaxError


def test_example1_weight(example1_partition):
    assert example1_partition.weight == 145
    assert example1_partition.length == 10
    assert example1_partition.largest == 29


def test_part_is_one_based_and_zero_padded(example1_partition):
    assert example1_partition.part(1) == 29
    assert example1_partition.part(10) == 1
    assert example1_partition.part(11) == 0
    with pytest.raises(IndexError):
        example1_partition.part(0)


@pytest.mark.parametrize(
    'parts, reason',
    (
        ((1, 2), 'smaller than the next part'),
        ((3, 0), 'not positive'),
        ((3, -1), 'not positive'),
        ((2, True), 'not an integer'),
        ((2.0,), 'not an integer'),
    ),
)
def test_invalid_parts_are_rejected(parts, reason):
    with pytest.raises(NotAPartition, match=reason):
        make_partition(parts)


def test_not_a_partition_reports_index():
    with pytest.raises(NotAPartition) as info:
        make_partition((5, 4, 6))
    assert info.value.index == 1
    assert info.value.value == 4


def test_list_input_is_stored_as_tuple():
    assert Partition([3, 1]).parts == (3, 1)


@pytest.mark.parametrize(
    'parts, expected',
    (
        ((), ()),
        ((1,), (1,)),
        ((3, 3, 3), (3, 3, 3)),
        ((4, 2, 1), (3, 2, 1, 1)),
        (EXAMPLE2_INPUT, EXAMPLE1),
    ),
)
def test_conjugate(parts, expected):
    assert conjugate(Partition(parts)) == Partition(expected)


@given(partitions)
def test_conjugate_is_an_involution_and_keeps_weight(p):
    q = conjugate(p)
    assert q.weight == p.weight
    assert conjugate(q) == p


def test_conjugation_involution_on_random_partitions(rng):
    for _ in range(RANDOM_CASES):
        p = random_partition(rng)
        assert conjugate(conjugate(p)) == p


def test_multiplicities_round_trip(example1_partition):
    counts = multiplicities(example1_partition)
    assert counts[8] == 2
    assert multiplicity(example1_partition, 8) == 2
    assert multiplicity(example1_partition, 6) == 0
    assert from_multiplicities(counts) == example1_partition
    assert from_multiplicities({3: 0, 1: 2}) == Partition((1, 1))


@pytest.mark.parametrize(
    'parts, k, expected',
    (
        ((), 1, True),
        ((2, 1, 1, 1), 2, True),
        ((2, 1, 1, 1, 1), 2, False),
        ((1, 1), 1, False),
        (EXAMPLE1, 1, False),
        (EXAMPLE1, 2, True),
    ),
)
def test_is_repetition_bounded(parts, k, expected):
    assert is_repetition_bounded(Partition(parts), k) is expected


@pytest.mark.parametrize(
    'parts, k, expected',
    (
        ((), 3, 0),
        (EXAMPLE1, 2, 8),
        (EXAMPLE1, 3, 0),
        (EXAMPLE2_OUTPUT, 4, 5),
        (EXAMPLE2_OUTPUT, 5, 1),
        ((3, 3, 2, 2, 2), 2, 3),
    ),
)
def test_largest_k_repeated_part(parts, k, expected):
    assert largest_k_repeated_part(Partition(parts), k) == expected


@pytest.mark.parametrize(
    'parts, k, expected',
    (
        ((), 2, True),
        ((9, 7), 2, True),
        ((3, 3), 2, False),
        ((2, 2, 2), 2, False),
        ((3, 3, 2, 2, 1, 1), 2, True),
        ((3, 1, 1, 1, 1, 1, 1), 2, True),
        (EXAMPLE2_OUTPUT, 5, True),
        (EXAMPLE2_OUTPUT, 4, False),
        (EXAMPLE2_INPUT, 5, False),
    ),
)
def test_has_initial_k_repetitions(parts, k, expected):
    assert has_initial_k_repetitions(Partition(parts), k) is expected


@pytest.mark.parametrize(
    'parts, k, expected',
    (
        ((), 1, True),
        ((3, 3, 2, 2, 1, 1), 2, False),
        ((3, 3, 2, 2, 2, 2, 1, 1, 1, 1), 2, True),
        ((5, 1, 1), 2, True),
        ((2, 2, 1, 1, 1), 2, False),
    ),
)
def test_has_strong_initial_repetitions(parts, k, expected):
    assert has_strong_initial_repetitions(Partition(parts), k) is expected


@given(partitions, moduli)
def test_strong_implies_initial(p, k):
    if has_strong_initial_repetitions(p, k):
        assert has_initial_k_repetitions(p, k)


@pytest.mark.parametrize(
    'parts, k, expected',
    (
        ((), 5, True),
        ((24, 22, 20, 16, 12, 8, 8, 5, 4, 1), 5, True),
        (EXAMPLE1, 5, False),
        ((5,), 5, False),
        ((4,), 5, True),
        ((1, 1, 1), 1, False),
    ),
)
def test_is_k_flat(parts, k, expected):
    assert is_k_flat(Partition(parts), k) is expected


@pytest.mark.parametrize('predicate', (is_repetition_bounded, has_initial_k_repetitions, is_k_flat))
def test_predicates_reject_non_positive_k(predicate):
    with pytest.raises(InvalidParameter):
        predicate(EMPTY, 0)


@pytest.mark.parametrize(
    'text, expected',
    (
        ('', ()),
        ('   ', ()),
        ('29,27,25', (29, 27, 25)),
        (' 5^3 , 4, 1^2 ', (5, 5, 5, 4, 1, 1)),
        ('3,1^6', (3, 1, 1, 1, 1, 1, 1)),
    ),
)
def test_parse_partition(text, expected):
    assert parse_partition(text) == Partition(expected)


@pytest.mark.parametrize('text', ('3,,1', '3,a', '2^x', '2^0', '4^-1', '3,'))
def test_parse_partition_syntax_errors(text):
    with pytest.raises(PartitionSyntaxError):
        parse_partition(text)


@pytest.mark.parametrize('text', ('1,2', '3,0', '-1'))
def test_parse_partition_order_errors(text):
    with pytest.raises(NotAPartition):
        parse_partition(text)


@pytest.mark.parametrize(
    'parts, expected',
    (
        ((), ''),
        ((3, 3, 3), '3,3,3'),
        ((3, 1, 1, 1, 1, 1, 1), '3,1^6'),
        (EXAMPLE2_OUTPUT, '10,9,9,9,8,7,7,7,5^4,4^4,3^4,2,2,1^27'),
    ),
)
def test_format_partition(parts, expected):
    assert format_partition(Partition(parts)) == expected
    assert str(Partition(parts)) == expected


@given(partitions)
def test_format_then_parse_is_identity(p):
    assert parse_partition(format_partition(p)) == p


def _conjugate_gaps(p):
    # gaps of the conjugate, its last part measured against 0
    padded = conjugate(p).parts + (0,)
    return [padded[i] - padded[i + 1] for i in range(len(padded) - 1)]


def test_multiplicity_is_a_conjugate_gap():
    for n in range(PROPERTY_MAX_N + 1):
        for p in enumerate_partitions(n):
            c = conjugate(p)
            for j in range(1, p.largest + 2):
                assert multiplicity(p, j) == c.part(j) - c.part(j + 1), (p, j)


@pytest.mark.parametrize('k', PROPERTY_K)
def test_k_flat_iff_conjugate_multiplicities_below_k(k):
    for n in range(PROPERTY_MAX_N + 1):
        for p in enumerate_partitions(n):
            below = all(count < k for count in multiplicities(conjugate(p)).values())
            assert is_k_flat(p, k) == below, (p, k)


@pytest.mark.parametrize('k', PROPERTY_K)
def test_repetition_bounded_iff_conjugate_gaps_below_2k(k):
    for n in range(PROPERTY_MAX_N + 1):
        for p in enumerate_partitions(n):
            gaps = _conjugate_gaps(p)
            assert is_repetition_bounded(p, k) == all(gap < 2 * k for gap in gaps), (p, k)
            if is_repetition_bounded(p, k) and p:
                # the smallest conjugate part counts the copies of the largest part
                assert conjugate(p).parts[-1] < 2 * k, (p, k)
