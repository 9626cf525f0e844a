import math

import pytest

from singzeta.partitions import (Partition, box_complement, iterate_box,
                                 iterate_bounded_parts, partitions_of)


def test_conjugate_examples():
    assert Partition().conjugate() == Partition()
    assert Partition([3, 1]).conjugate() == Partition([2, 1, 1])
    assert Partition.box(4, 2).conjugate() == Partition.box(2, 4)


def test_conjugate_involution():
    for m in range(4):
        for d in range(4):
            for mu in iterate_box(m, d):
                assert mu.conjugate().conjugate() == mu


def test_contains():
    assert Partition([2, 2]).contains(Partition())
    assert Partition([2, 2]).contains(Partition([2, 1]))
    assert not Partition([2, 2]).contains(Partition([3]))


def test_containment_preserved_by_conjugation():
    for mu in iterate_box(3, 3):
        for lam in iterate_box(3, 3):
            assert lam.contains(mu) == lam.conjugate().contains(mu.conjugate())


def test_box_complement():
    assert box_complement(2, 2, Partition()) == Partition([2, 2])
    assert box_complement(2, 2, Partition([2, 2])) == Partition()
    assert box_complement(3, 2, Partition([2])) == Partition([3, 1])
    with pytest.raises(ValueError):
        box_complement(2, 2, Partition([3]))


def test_box_complement_involution_and_size():
    for m in range(4):
        for d in range(4):
            for mu in iterate_box(m, d):
                comp = box_complement(m, d, mu)
                assert box_complement(m, d, comp) == mu
                assert mu.size() + comp.size() == m * d


def test_iterate_box():
    assert [str(p) for p in iterate_box(1, 1)] == ["[]", "[1]"]
    assert [str(p) for p in iterate_box(1, 2)] == ["[]", "[1]", "[1,1]"]
    # 2x2 box: [], [1], [1,1], [2], [2,1], [2,2]
    assert len(list(iterate_box(2, 2))) == 6


def test_iterate_box_counts_lattice_paths():
    for m in range(5):
        for d in range(5):
            got = list(iterate_box(m, d))
            assert len(got) == len(set(p.parts for p in got))
            assert len(got) == math.comb(m + d, d)


def test_iterate_box_graded_order():
    sizes = [p.size() for p in iterate_box(3, 3)]
    assert sizes == sorted(sizes)


def test_iterate_bounded_parts():
    assert [str(p) for p in iterate_bounded_parts(1, 3)] == ["[]", "[1]", "[1,1]", "[1,1,1]"]
    assert [str(p) for p in iterate_bounded_parts(2, 2)] == ["[]", "[1]", "[1,1]", "[2]"]
    assert list(iterate_bounded_parts(0, 5)) == [Partition()]


def test_partitions_of():
    assert len(partitions_of(6)) == 11
    assert partitions_of(0) == [Partition()]
    assert all(p.size() == 4 for p in partitions_of(4))


def test_parse_and_str():
    assert Partition.parse("3,1") == Partition([3, 1])
    assert Partition.parse("[3,1]") == Partition([3, 1])
    assert Partition.parse("") == Partition()
    assert str(Partition([3, 1])) == "[3,1]"
    with pytest.raises(ValueError):
        Partition([1, 2])
