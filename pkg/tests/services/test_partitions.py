"""
Tests for set partitions, tableaux and the Bell and Brauer arrays
"""
import pytest
from hypothesis import given
from hypothesis import settings as hypothesis_settings
from hypothesis import strategies as st

from pascal_arrays.core.exceptions import (
    IllegalEdgeError,
    InvalidSpecError,
    SizeMismatchError,
)
from pascal_arrays.services.graphs import Plus
from pascal_arrays.services.partitions import (
    BellFamily,
    BellHalf,
    BellSequence,
    BrauerFamily,
    BrauerHalf,
    BrauerSequence,
    bell,
    bell_braket,
    bell_compose,
    branching_bijection,
    conjugate,
    enum_pair_partitions,
    enum_plus_partitions,
    enum_set_partitions,
    format_set_partition,
    format_tableau,
    ground,
    hook_dim,
    integer_partitions,
    is_standard_tableau,
    parse_set_partition,
    parse_tableau,
    rs_insert,
    rs_inverse,
    shape_of,
    standard_tableaux,
    weight_dim_check,
    yp_edge,
)
from pascal_arrays.services.pascal import layer_sizes, verify_catalan, verify_family


def test_set_partition_text():
    """Test the text form of set partitions over primed points"""
    blocks = parse_set_partition("{2,1'}|{1}")

    # Verify canonical order: unprimed points first
    assert blocks == ((1,), (2, -1))
    assert format_set_partition(blocks) == "{1}|{2,1'}"
    assert parse_set_partition("∅") == ()

    # Verify overlapping and malformed blocks
    with pytest.raises(InvalidSpecError):
        parse_set_partition("{1}|{1}")
    with pytest.raises(InvalidSpecError):
        parse_set_partition("{1,x}")


def test_set_partition_counts():
    """Test set and pair partition enumeration"""
    assert len(enum_set_partitions([1, 2, 3])) == 5
    assert len(enum_set_partitions(ground(2))) == 15
    assert len(enum_pair_partitions(ground(2))) == 3
    assert len(enum_plus_partitions(2)) == 5
    assert [bell(n) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_integer_partitions():
    """Test integer partitions and conjugates"""
    assert integer_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert integer_partitions(4, max_rows=2) == [(4,), (3, 1), (2, 2)]
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()


def test_hook_lengths():
    """Test that the hook formula counts standard tableaux"""
    assert hook_dim((3, 2)) == 5
    assert hook_dim((2, 2)) == 2
    for shape in integer_partitions(6):
        # Verify the formula against enumeration
        assert hook_dim(shape) == len(standard_tableaux(shape))


def test_tableau_text():
    """Test the text form of tableaux"""
    t = parse_tableau("1,2/3")

    # Verify rows and the inverse
    assert t == ((1, 2), (3,))
    assert format_tableau(t) == "1,2/3"
    assert is_standard_tableau(t)
    with pytest.raises(InvalidSpecError):
        parse_tableau("2,1")


def test_robinson_schensted():
    """Test row insertion on a small permutation"""
    p, q = rs_insert((3, 1, 2))

    # Verify both tableaux and the inverse
    assert p == ((1, 2), (3,))
    assert q == ((1, 3), (2,))
    assert rs_inverse(p, q) == (3, 1, 2)

    with pytest.raises(InvalidSpecError):
        rs_insert((1, 1))
    with pytest.raises(SizeMismatchError):
        rs_inverse(((1, 2),), ((1,), (2,)))


@hypothesis_settings(max_examples=50, deadline=None)
@given(st.permutations(list(range(1, 8))))
def test_robinson_schensted_inverts(word):
    """Test that insertion is inverted and yields tableaux of one shape"""
    p, q = rs_insert(word)

    assert shape_of(p) == shape_of(q)
    assert is_standard_tableau(p)
    assert is_standard_tableau(q)
    assert rs_inverse(p, q) == tuple(word)


def test_branching_bijection():
    """Test that the branching sides are matched one to one"""
    for nu in [(), (1,), (2, 1), (2, 2)]:
        bijection = branching_bijection(nu)

        # Verify forward and backward maps invert each other
        assert len(bijection.forward) == (sum(nu) + 1) * hook_dim(nu)
        for pair, t in bijection.forward.items():
            assert bijection.backward[t] == pair


def test_bell_edges():
    """Test the Bell edge maps out of the empty partition"""
    origin = BellHalf(0, (), (), ())
    marked = yp_edge(origin, Plus(()))

    # Verify the new marked singleton
    assert marked == BellHalf(1, (), ((1,),), (), True)

    # Verify closing it and opening it as a propagating block
    assert yp_edge(marked, ()) == BellHalf(1, ((1,),), (), (), False)
    assert yp_edge(marked, (1,)) == BellHalf(1, (), ((1,),), ((1,),), False)

    with pytest.raises(IllegalEdgeError):
        yp_edge(origin, (1,))


def test_bell_layers():
    """Test Bell family cell sizes"""
    f = BellFamily()

    assert layer_sizes(f, 2) == {(): 1, (1,): 1}
    assert layer_sizes(f, 3) == {Plus(()): 2, Plus((1,)): 1}


def test_bell_family_verifies():
    """Test the Bell family against the double Young graph"""
    report = verify_family(BellFamily(), 6)

    assert report.ok, report.failures


def test_bell_sequence():
    """Test the Bell bra-ket decomposition"""
    report = verify_catalan(BellSequence(), 4)

    # Verify counts are Bell numbers
    assert report.ok, report.failures
    assert report.member_counts == [1, 1, 2, 5, 15]


def test_bell_braket_round_trip():
    """Test splitting and gluing a partition of 3 ∪ 3'"""
    for blocks in enum_set_partitions(ground(3)):
        top, bottom = bell_braket(blocks, 3)

        # Verify both halves lie over one vertex and glue back
        assert shape_of(top.tableau) == shape_of(bottom.tableau)
        assert bell_compose(top, bottom) == blocks


def test_bell_half_text():
    """Test the text form of Bell halves"""
    f = BellFamily()
    half = yp_edge(yp_edge(BellHalf(0, (), (), ()), Plus(())), (1,))

    # Verify decode inverts encode
    assert f.decode(f.encode(half)) == half
    with pytest.raises(InvalidSpecError):
        f.decode("{1}")


def test_brauer_family_verifies():
    """Test the Brauer family against the Young graph"""
    report = verify_family(BrauerFamily(), 6)

    assert report.ok, report.failures


def test_brauer_sequence():
    """Test the Brauer bra-ket decomposition"""
    report = verify_catalan(BrauerSequence(), 4)

    # Verify double factorial counts
    assert report.ok, report.failures
    assert report.member_counts == [1, 1, 3, 15, 105]


def test_brauer_half_text():
    """Test the text form of Brauer halves"""
    f = BrauerFamily()
    half = BrauerHalf(3, ((1, 3),), (2,), ((1,),))

    # Verify the cell and the inverse
    assert f.classify(half) == (3, (1,))
    assert f.decode(f.encode(half)) == half


def test_weight_dimension_check():
    """Test hook dimensions against walks on the sl3 weight lattice"""
    report = weight_dim_check(4)

    # Verify all three sides agree
    assert report.ok
    assert report.hook_side == report.walk_side == report.permutation_side == 23
    assert report.dimensions["(2,2)"] == 2
    assert weight_dim_check(5).hook_side == 103
