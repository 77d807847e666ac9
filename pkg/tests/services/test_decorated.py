"""
Tests for the decorated Catalan families
"""
import pytest
import sympy

from pascal_arrays.core.exceptions import (
    ColourError,
    DecorationError,
    InvalidSpecError,
    ParityError,
    SizeMismatchError,
)
from pascal_arrays.services.decorated import (
    BLOB,
    SQUARE,
    BlobDiagram,
    BlobFamily,
    BlobHalf,
    BlobSequence,
    ColouredTreeFamily,
    ContourDiagram,
    ContourFamily,
    ContourHalf,
    ContourSequence,
    DBlobFamily,
    DBlobSequence,
    DDiagram,
    DHalf,
    LambdaBracketFamily,
    LambdaBracketSequence,
    blob_cut,
    blob_delta_prime,
    blob_join,
    blob_vertex,
    contour_cut,
    contour_stitch,
    dblob_cut,
    dblob_join,
    enum_blob,
    enum_contour,
    enum_dblob,
    quantum_integer,
)
from pascal_arrays.services.diagrams import HalfDiagram
from pascal_arrays.services.graphs import Primed
from pascal_arrays.services.pascal import (
    layer,
    layer_sizes,
    transport,
    verify_catalan,
    verify_family,
)


def test_blob_half_vertices():
    """Test that the first line's decoration picks the sign of the vertex"""
    f = BlobFamily()

    # Verify both signs and a closed half
    assert f.classify(f.decode("(•(")) == (2, 2)
    assert f.classify(f.decode("(□(")) == (2, -2)
    assert f.classify(f.decode("(•)")) == (2, 0)
    assert layer_sizes(f, 2) == {-2: 1, 0: 2, 2: 1}


def test_blob_half_needs_marks():
    """Test that every west-exposed line carries a mark"""
    bare = BlobHalf(HalfDiagram.from_sequence("(("), ())

    with pytest.raises(DecorationError) as exc_info:
        blob_vertex(bare)
    assert exc_info.value.error_code == "DECORATION"


def test_blob_edge_maps():
    """Test the edge maps out of the origin and out of vertex 1"""
    f = BlobFamily()
    first = layer(f, 1)

    # Verify the square goes to -1 and the blob to +1
    assert [(x.vertex, f.encode(x.payload)) for x in first] == [(-1, "(□"), (1, "(•")]

    # Verify bending keeps the mark on the new arc
    closed = layer(f, 2, 0)
    assert sorted(f.encode(x.payload) for x in closed) == ["(•)", "(□)"]


def test_blob_family_verifies():
    """Test the blob family against the full line"""
    report = verify_family(BlobFamily(), 6)

    assert report.ok, report.failures


def test_blob_sequence():
    """Test the blob bra-ket decomposition"""
    report = verify_catalan(BlobSequence(), 4)

    # Verify the central binomial counts
    assert report.ok, report.failures
    assert report.member_counts == [1, 2, 6, 20, 70]


def test_blob_diagram_codec():
    """Test reading blob diagrams from text"""
    d = BlobDiagram.decode("(•)(□)")

    # Verify the marks and the encoding
    assert d.marks == (BLOB, SQUARE)
    assert d.encode() == "(•)(□)"
    assert BlobDiagram.decode("(•)").marks == (BLOB,)

    # Verify missing marks and odd lengths
    with pytest.raises(DecorationError):
        BlobDiagram.decode("()")
    with pytest.raises(DecorationError):
        BlobDiagram.decode("()(•)")
    with pytest.raises(SizeMismatchError):
        BlobDiagram.decode("(•)(")


def test_blob_cut_and_join():
    """Test cutting blob diagrams and gluing them back"""
    for d in enum_blob(3):
        top, bottom = blob_cut(d)

        # Verify both halves lie over one vertex and rejoin
        assert blob_vertex(top) == blob_vertex(bottom)
        assert blob_join(top, bottom) == d


def test_quantum_integers():
    """Test quantum integers and the blob parameter"""
    q = sympy.Symbol("q")

    assert sympy.simplify(quantum_integer(2, q) - (q + 1 / q)) == 0
    assert sympy.simplify(quantum_integer(3, q) - (q**2 + 1 + q ** (-2))) == 0
    assert sympy.simplify(blob_delta_prime(1, q) - (q + 1 / q)) == 0
    with pytest.raises(InvalidSpecError):
        blob_delta_prime(0, q)


def test_lambda_bracket_codec():
    """Test bracket types on the tree graph of (2,1)"""
    f = LambdaBracketFamily((2, 1))
    word = ((True, 2), (True, 1))

    # Verify the inner bracket repeats the outer type
    assert f.name == "lambda:2,1"
    assert f.encode(word) == "[["
    assert f.decode("[[") == word
    assert f.classify(word) == (2, (2, 1))

    # Verify a changed inner type and a mismatched close
    with pytest.raises(InvalidSpecError):
        f.decode("[(")
    with pytest.raises(InvalidSpecError):
        f.decode("[)")


def test_lambda_bracket_type_limit():
    """Test that five bracket types are too many"""
    with pytest.raises(InvalidSpecError):
        LambdaBracketFamily((5,))


@pytest.mark.parametrize("lam", [(2, 1), (2, 2, 1), (3,)])
def test_lambda_bracket_families_verify(lam):
    """Test λ-bracket families against their tree graphs"""
    report = verify_family(LambdaBracketFamily(lam), 5)

    assert report.ok, report.failures


def test_lambda_bracket_sequence():
    """Test the λ-bracket bra-ket decomposition"""
    report = verify_catalan(LambdaBracketSequence((2, 1)), 4)

    assert report.ok, report.failures
    assert report.member_counts == [1, 2, 6, 20, 70]


def test_coloured_trees():
    """Test coloured half-trees on the tree graph of (2,1)"""
    f = ColouredTreeFamily((2, 1))
    half = ((0, ()), (2, ()))

    # Verify the cell and the bracket form
    assert f.name == "coloured:2,1"
    assert f.classify(half) == (1, (2,))
    assert f.encode(half) == "["
    assert f.decode("[") == half

    # Verify an out-of-range colour
    with pytest.raises(ColourError):
        f.classify(((0, ()), (3, ())))


def test_coloured_tree_family_verifies():
    """Test the coloured tree family against its tree graph"""
    report = verify_family(ColouredTreeFamily((2, 1)), 5)

    assert report.ok, report.failures


def test_coloured_trees_transport_to_brackets():
    """Test that transport agrees with the boundary-walk bijection"""
    brackets = LambdaBracketFamily((2, 1))
    trees = ColouredTreeFamily((2, 1))
    for x in layer(brackets, 4):
        y = transport(brackets, trees, x)

        # Verify the boundary word of the tree is the bracket word
        assert trees.encode(y.payload) == brackets.encode(x.payload)


def test_contour_halves():
    """Test blob counts on contour half-diagrams"""
    f = ContourFamily(2, 1)
    half = ContourHalf.decode("(1")

    # Verify the cell of a blobbed line
    assert f.name == "contour:2,1"
    assert f.classify(half) == (1, (2,))
    assert half.encode() == "(1"

    # Verify a blob on a line below the level limit
    with pytest.raises(DecorationError):
        f.classify(ContourHalf.decode("((1"))
    with pytest.raises(InvalidSpecError):
        ContourFamily(0, 1)


@pytest.mark.parametrize("d,k,n_max", [(2, 1, 6), (2, 2, 6), (3, 2, 4)])
def test_contour_families_verify(d, k, n_max):
    """Test contour families against their tree graphs"""
    report = verify_family(ContourFamily(d, k), n_max)

    assert report.ok, report.failures


def test_contour_diagrams():
    """Test contour diagram enumeration and decoding"""
    assert len(enum_contour(1, 1, 2)) == 2
    assert len(enum_contour(2, 1, 2)) == 6
    assert ContourDiagram.decode("(1)").blobs == (1,)

    # Verify a count written after a closing point
    with pytest.raises(DecorationError):
        ContourDiagram.decode("()1")


@pytest.mark.parametrize("d,k", [(2, 1), (2, 2), (3, 2)])
def test_contour_sequence(d, k):
    """Test the contour bra-ket decomposition"""
    report = verify_catalan(ContourSequence(d, k), 6)

    assert report.ok, report.failures
    if (d, k) == (2, 1):
        assert report.member_counts == [1, 2, 6, 20, 70, 252, 924]


def test_contour_cut_inverts_stitch():
    """Test cutting stitched halves over every common vertex"""
    f = ContourFamily(2, 2)
    for n in range(5):
        halves = layer(f, n)
        for top in halves:
            for bottom in halves:
                if top.vertex != bottom.vertex:
                    continue

                # Verify both halves come back
                x = contour_stitch(top.payload, bottom.payload)
                assert contour_cut(x) == (top.payload, bottom.payload)


def test_dblob_halves():
    """Test the split of closed halves into even and odd"""
    f = DBlobFamily()

    # Verify both closed vertices and a line
    assert f.classify(f.decode("()")) == (2, 0)
    assert f.classify(f.decode("(b)")) == (2, Primed(0))
    assert f.classify(f.decode("((")) == (2, 2)
    with pytest.raises(ParityError):
        f.classify(DHalf(HalfDiagram.from_sequence("("), (True,)))


def test_dblob_family_verifies():
    """Test the D-type blob family against D-infinity"""
    report = verify_family(DBlobFamily(), 6)

    assert report.ok, report.failures


def test_dblob_diagrams():
    """Test D-type diagrams with an even number of blobs"""
    d = DDiagram.decode("(b)(b)")

    # Verify both blobs and the parity rule
    assert d.blobs == (True, True)
    with pytest.raises(ParityError):
        DDiagram.decode("(b)")
    with pytest.raises(ParityError):
        DDiagram.decode("(b)()")
    with pytest.raises(DecorationError):
        DDiagram.decode("(x)")
    assert len(enum_dblob(2)) == 3


def test_dblob_cut_and_join():
    """Test cutting D-type diagrams and gluing them back"""
    for d in enum_dblob(3):
        assert dblob_join(*dblob_cut(d)) == d


def test_dblob_sequence():
    """Test the D-type bra-ket decomposition"""
    report = verify_catalan(DBlobSequence(), 4)

    assert report.ok, report.failures
    assert report.member_counts == [1, 1, 3, 10, 35]
