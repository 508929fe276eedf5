import pytest

from test_config import CAPPED_ORACLE_N, EXHAUSTIVE_K, EXHAUSTIVE_MAX_N, IDENTITY_LIMIT, SERIES_LIMIT
from PartitionPlaygroundCode.combinatorics import identities
from PartitionPlaygroundCode.combinatorics.identities import PartitionClass
from PartitionPlaygroundCode.combinatorics.partition_core import Partition
from PartitionPlaygroundCode.combinatorics.series import equal_up_to, finite_geometric_factor, product_over
from PartitionPlaygroundCode.utils.errors import CapExceeded, InvalidParameter


def test_enumerate_small_weights():
    assert identities.enumerate_partitions(0) == (Partition(()),)
    assert len(identities.enumerate_partitions(4)) == 5
    assert len(identities.enumerate_partitions(6)) == 11


def test_enumeration_order_is_lexicographically_decreasing():
    parts = [p.parts for p in identities.enumerate_partitions(5)]
    assert parts == [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        identities.enumerate_partitions(61)
    with pytest.raises(CapExceeded):
        identities.enumerate_partitions(10, cap=9)


@pytest.mark.parametrize(
    'n, k, partition_class, m, expected',
    (
        (6, 2, PartitionClass.REPETITION_BOUNDED, None, 9),
        (6, 2, PartitionClass.INITIAL_REPS, None, 9),
        (0, 3, PartitionClass.INITIAL_REPS, None, 1),
        (0, 1, PartitionClass.STRONG_INITIAL_REPS, None, 1),
        (5, 1, PartitionClass.REPETITION_BOUNDED, None, 3),
        (4, 2, PartitionClass.K_FLAT_CONJUGATE, None, 2),
        (6, 2, PartitionClass.INITIAL_REPS_CAPPED, 0, 4),
    ),
)
def test_count_class(n, k, partition_class, m, expected):
    assert identities.count_class(n, k, partition_class, m) == expected


def test_count_class_accepts_names():
    assert identities.count_class(6, 2, 'initial-reps') == 9


@pytest.mark.parametrize('partition_class', (PartitionClass.INITIAL_REPS_CAPPED, PartitionClass.STRIP_CAPPED))
def test_capped_classes_require_m(partition_class):
    with pytest.raises(InvalidParameter):
        identities.count_class(4, 2, partition_class)


@pytest.mark.parametrize('k', EXHAUSTIVE_K)
def test_equinumerosity(k):
    for n in range(EXHAUSTIVE_MAX_N + 1):
        assert (identities.count_class(n, k, PartitionClass.REPETITION_BOUNDED)
                == identities.count_class(n, k, PartitionClass.INITIAL_REPS))


@pytest.mark.parametrize('k, m', ((2, 1), (3, 2)))
def test_capped_classes_are_equinumerous(k, m):
    for n in range(CAPPED_ORACLE_N + 1):
        assert (identities.count_class(n, k, PartitionClass.INITIAL_REPS_CAPPED, m)
                == identities.count_class(n, k, PartitionClass.STRIP_CAPPED, m))


@pytest.mark.parametrize('n', range(6))
def test_strong_exponent_is_k_n_squared(n):
    for k in (1, 2, 3, 7):
        assert identities.strong_exponent(k, n) == k * n * n


def test_initial_exponent():
    assert identities.initial_exponent(2, 3) == 12


def test_identity1_coefficients_at_six():
    lhs, rhs = identities.identity1_sides(2, 10)
    assert lhs.coefficient(6) == 9
    assert rhs.coefficient(6) == 9


@pytest.mark.parametrize('k', (1, 2, 3, 4, 5))
def test_identity1_sides_agree(k):
    lhs, rhs = identities.identity1_sides(k, SERIES_LIMIT)
    assert equal_up_to(lhs, rhs).equal


def test_identity1_at_k1_is_distinct_parts():
    lhs, rhs = identities.identity1_sides(1, 30)
    distinct = product_over(1, None, lambda j: finite_geometric_factor(j, 1, 30), 30)
    assert lhs == distinct == rhs


@pytest.mark.parametrize('k', EXHAUSTIVE_K)
def test_identity1_oracle(k):
    report = identities.verify(1, k, None, EXHAUSTIVE_MAX_N, oracle_cap=EXHAUSTIVE_MAX_N)
    assert report.holds
    assert report.oracle_checked_up_to == EXHAUSTIVE_MAX_N


@pytest.mark.parametrize('k', (2, 3))
@pytest.mark.parametrize('m', (0, 1, 2, 3))
def test_identity2(k, m):
    lhs, rhs = identities.identity2_sides(k, m, IDENTITY_LIMIT)
    assert equal_up_to(lhs, rhs).equal
    report = identities.verify(2, k, m, CAPPED_ORACLE_N, oracle_cap=CAPPED_ORACLE_N)
    assert report.holds
    assert report.oracle_checked_up_to == CAPPED_ORACLE_N


def test_identity2_with_large_m_is_identity1():
    lhs2, _ = identities.identity2_sides(2, 50, 30)
    lhs1, _ = identities.identity1_sides(2, 30)
    assert lhs2 == lhs1


def test_identity2_with_m_zero_is_flat_product():
    lhs, rhs = identities.identity2_sides(3, 0, 20)
    flat = product_over(1, None, lambda j: finite_geometric_factor(j, 2, 20), 20)
    assert lhs == rhs == flat


@pytest.mark.parametrize('k', (1, 2, 3))
def test_identity3_forms_agree(k):
    forms = identities.identity3_forms(k, IDENTITY_LIMIT)
    assert list(forms) == ['sum', 'middle', 'rr_product', 'final_product']
    reference = forms['sum']
    for name in ('middle', 'rr_product', 'final_product'):
        assert equal_up_to(reference, forms[name]).equal, name


def test_identity3_oracle():
    report = identities.verify(3, 2, None, CAPPED_ORACLE_N, oracle_cap=CAPPED_ORACLE_N)
    assert report.holds
    assert report.oracle_checked_up_to == CAPPED_ORACLE_N


@pytest.mark.parametrize(
    'identity, k, m',
    ((1, 2, None), (2, 3, 2), (3, 2, None)),
)
def test_verify_reports(identity, k, m):
    report = identities.verify(identity, k, m, IDENTITY_LIMIT, oracle_cap=12)
    assert report.holds
    assert report.mismatch is None
    data = report.to_dict()
    assert data['holds'] is True
    assert data['trunc'] == IDENTITY_LIMIT
    assert set(data['forms']) == set(identities.FORM_DESCRIPTIONS[identity])


def test_verify_detects_oracle_mismatch(monkeypatch):
    real = identities.count_class

    def off_by_one(n, k, partition_class, m=None, cap=None):
        return real(n, k, partition_class, m, cap) + (1 if n == 5 else 0)

    monkeypatch.setattr(identities, 'count_class', off_by_one)
    report = identities.verify(1, 2, None, 10, oracle_cap=10)
    assert not report.holds
    assert report.oracle_mismatch['exponent'] == 5
    assert report.oracle_checked_up_to == 4


def test_verify_requires_m_for_identity2():
    with pytest.raises(InvalidParameter):
        identities.verify(2, 2, None, 10)


def test_verify_rejects_unknown_identity():
    with pytest.raises(InvalidParameter):
        identities.verify(4, 2, None, 10)


def test_explicit_cap_cannot_raise_configured_limit():
    with pytest.raises(CapExceeded):
        identities.enumerate_partitions(61, cap=100)
    with pytest.raises(CapExceeded):
        identities.count_class(61, 2, PartitionClass.REPETITION_BOUNDED, cap=100)


def test_verify_rejects_oracle_cap_above_enumeration_cap():
    with pytest.raises(CapExceeded):
        identities.verify(1, 2, None, 100, oracle_cap=61)


def test_iter_partitions_streams_in_enumeration_order():
    stream = identities.iter_partitions(5)
    assert next(stream) == Partition((5,))
    assert tuple(identities.iter_partitions(5)) == identities.enumerate_partitions(5)
    assert identities.enumerate_partitions(7) == identities.enumerate_partitions(7)


def test_verify_keeps_built_series():
    report = identities.verify(1, 2, None, 20, oracle_cap=5)
    lhs, rhs = identities.identity1_sides(2, 20)
    assert set(report.series) == {'lhs', 'rhs'}
    assert report.series['lhs'] == lhs
    assert report.series['rhs'] == rhs
    assert 'series' not in report.to_dict()
