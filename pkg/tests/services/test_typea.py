"""
Tests for the classical Catalan families
"""
import pytest

from pascal_arrays.core.exceptions import (
    InvalidSpecError,
    LabelCountError,
    NoPropagatingLineError,
    SizeMismatchError,
    UnderflowError,
)
from pascal_arrays.services.diagrams import (
    HalfDiagram,
    PairDiagram,
    dyck_words,
    enum_ncpp,
    half_diagrams,
    identity_diagram,
    mirror,
    standard_sequences,
    tl_cut,
    tl_edge,
    tl_join,
    unmatched,
)
from pascal_arrays.services.typea import (
    NCPFamily,
    NCPHalf,
    TLFamily,
    TreeFamily,
    bracket_compose,
    bracket_decompose,
    bracket_edge,
    format_partition,
    half_trees,
    halftree_encode,
    halftree_size,
    interval_combine,
    interval_from_brackets,
    interval_orders,
    interval_to_brackets,
    is_noncrossing,
    is_uipo,
    ncp_from_ncpp,
    ncp_restrict,
    ncpp_from_ncp,
    noncrossing_partitions,
    planar_trees,
    tl_region_tree,
    tree_cut,
    tree_decode,
    tree_encode,
    tree_splice,
)


def test_standard_sequences():
    """Test standard sequences and their unmatched opens"""
    assert list(standard_sequences(3)) == ["(((", "(()", "()("]
    assert list(standard_sequences(4, 0)) == ["(())", "()()"]
    assert unmatched("(()(") == 2

    # Verify a close without an open
    with pytest.raises(InvalidSpecError):
        unmatched("())")


def test_dyck_words_and_mirror():
    """Test closed words and the mirror involution"""
    assert dyck_words(3) == ["((()))", "(()())", "(())()", "()(())", "()()()"]
    assert mirror(")()") == "()("
    assert mirror(mirror("(()")) == "(()"


def test_half_diagram_order():
    """Test the order of half-diagrams with one propagating line"""
    halves = half_diagrams(3, 1)

    # Verify arcs and propagating points
    assert [(h.arcs, h.propagating) for h in halves] == [
        (((2, 3),), (1,)),
        (((1, 2),), (3,)),
    ]
    assert [h.render() for h in halves] == ["|()", "()|"]


def test_tl_edges():
    """Test adding and bending propagating lines"""
    h = HalfDiagram.from_sequence("(()")

    # Verify both edge maps
    assert tl_edge("up", h).encode() == "(()("
    assert tl_edge("down", h).encode() == "(())"

    # Verify that a closed half-diagram has nothing to bend
    with pytest.raises(NoPropagatingLineError):
        tl_edge("down", HalfDiagram.from_sequence("()"))


def test_tl_cut_and_join():
    """Test cutting a diagram along its propagating lines"""
    d = identity_diagram(2)
    top, bottom = tl_cut(d)

    # Verify the identity cuts into two fully propagating halves
    assert top.propagating == (1, 2)
    assert bottom.propagating == (1, 2)
    assert tl_join(top, bottom) == d

    # Verify every member of D(3, 3) rejoins
    for x in enum_ncpp(3):
        assert tl_join(*tl_cut(x)) == x

    with pytest.raises(SizeMismatchError):
        tl_join(HalfDiagram.from_sequence("(("), HalfDiagram.from_sequence("()"))


def test_pair_diagram_disk_word():
    """Test disk positions of a pair diagram"""
    d = PairDiagram.from_disk_word(2, 2, "(())")

    # Verify the two propagating lines of the identity
    assert d == identity_diagram(2)
    assert d.propagating_count == 2
    assert d.disk_word() == "(())"

    with pytest.raises(SizeMismatchError):
        PairDiagram.from_disk_word(2, 2, "()")


def test_bracket_edges():
    """Test bracket edge maps and underflow"""
    assert bracket_edge("open", "(") == "(("
    assert bracket_edge("close", "(") == "()"

    with pytest.raises(UnderflowError):
        bracket_edge("close", "()")


def test_bracket_decomposition():
    """Test splitting a closed word into a bra-ket pair"""
    left, right = bracket_decompose("(())()")

    # Verify both halves and the inverse
    assert (left, right) == ("(()", "()(")
    assert bracket_compose(left, right) == "(())()"

    with pytest.raises(SizeMismatchError):
        bracket_compose("((", "()")


def test_planar_trees():
    """Test planar tree enumeration and boundary words"""
    trees = planar_trees(3)

    # Verify the Catalan count and a boundary word
    assert len(trees) == 5
    assert tree_encode(tree_decode("(())()")) == "(())()"
    assert tree_decode("(())()") == (((),), ())


def test_half_trees():
    """Test half-trees by size and trunk length"""
    halves = half_trees(4, 2)

    # Verify the count and sizes
    assert len(halves) == 3
    assert all(halftree_size(h) == 4 for h in halves)
    assert half_trees(3, 2) == []


def test_tree_cut_and_splice():
    """Test cutting a planar tree along its middle"""
    t = tree_decode("(())()")
    left, right = tree_cut(t)

    # Verify both half-trees and the inverse
    assert left == ((), ((),))
    assert right == (((),), ())
    assert halftree_encode(left) == "(()"
    assert tree_splice(left, right) == t


def test_region_tree_matches_diagram():
    """Test the dual tree of a Temperley-Lieb half-diagram"""
    trees = TreeFamily()
    diagrams = TLFamily()
    for h in half_diagrams(6):
        region = tl_region_tree(h)

        # Verify the boundary word and the cell agree
        assert halftree_encode(region) == h.encode()
        assert trees.classify(region) == diagrams.classify(h)


def test_interval_orders_from_brackets():
    """Test reading interval orders off bracket words"""
    chain = interval_from_brackets("()()")
    antichain = interval_from_brackets("(())")

    # Verify relations and labels
    assert chain.relation == frozenset({(0, 1)})
    assert antichain.relation == frozenset()
    assert chain.points == 0
    assert interval_from_brackets("(()(").points == 2
    assert interval_to_brackets(chain) == "()()"

    # Verify the empty order
    empty = interval_from_brackets("")
    assert empty.labels == () and empty.relation == frozenset()


def test_interval_orders_are_unit_orders():
    """Test that every enumerated order is a unit interval-point order"""
    for n in range(7):
        orders = interval_orders(n)

        # Verify the property and distinctness
        assert all(is_uipo(x) for x in orders)
        assert len(set(orders)) == len(orders)


def test_interval_combine():
    """Test gluing a bra order to a reversed ket order"""
    x1 = interval_from_brackets("((")
    x2 = interval_from_brackets("((")

    # Verify two fused points become incomparable intervals
    combined = interval_combine(x1, x2)
    assert combined == interval_from_brackets("(())")

    # Verify one interval below another
    single = interval_from_brackets("()")
    assert interval_combine(single, single) == interval_from_brackets("()()")

    with pytest.raises(LabelCountError):
        interval_combine(interval_from_brackets("("), single)


def test_noncrossing_partitions():
    """Test noncrossing partition enumeration"""
    partitions = noncrossing_partitions(range(1, 5))

    # Verify the count and the crossing partition is absent
    assert len(partitions) == 14
    assert ((1, 3), (2, 4)) not in partitions
    assert not is_noncrossing([(1, 3), (2, 4)])
    assert is_noncrossing([(1, 4), (2, 3)])
    assert format_partition(((1, 3), (2,))) == "{1,3}|{2}"


def test_noncrossing_partitions_and_pairings():
    """Test the partition to pairing correspondence"""
    for blocks in noncrossing_partitions(range(1, 5)):
        # Verify the round trip through a perfect matching of 8 points
        assert ncp_from_ncpp(ncpp_from_ncp(blocks)) == blocks


def test_ncp_restriction():
    """Test restricting a partition to its first points"""
    half = ncp_restrict(((1, 2),), 2)

    # Verify the open block and its dangling points
    assert half == NCPHalf(2, ((1,),), frozenset({1}))
    assert half.dangling() == [1, 2]
    assert half.word() == "(("
    assert ncp_restrict(((1,), (2,)), 2).word() == "()"


def test_ncp_family_codec():
    """Test the text form of half partitions"""
    f = NCPFamily()
    half = ncp_restrict(((1, 3), (2,)), 3)

    # Verify decode inverts encode
    assert f.decode(f.encode(half)) == half
    with pytest.raises(InvalidSpecError):
        f.decode("x:{1}")
