"""
Tests for diagram algebras, Gram matrices and simple-module dimensions
"""
from itertools import product

import pytest
import sympy

from pascal_arrays.core.exceptions import InvalidSpecError, SizeMismatchError
from pascal_arrays.services.algebra import (
    DELTA,
    ContourAlgebra,
    TemperleyLieb,
    blob_simple_dim,
    blob_simple_dim_shifted,
    brauer_delta_one_graph,
    dimension_identity,
    gram,
    gram_det,
    gram_rank,
    get_algebra,
    rollet_simple_graph,
    tl_lemma_violations,
    tl_simple_dim,
)
from pascal_arrays.services.graphs import a_inf, catalan_numbers, layer_counts


def test_tl_generator_relations():
    """Test the defining relations of the Temperley-Lieb generators"""
    algebra = TemperleyLieb(3)
    u1, u2 = algebra.parse("U1"), algebra.parse("U2")

    # Verify a loop for each repeated generator
    assert u1 * u1 == DELTA * u1
    assert u1 * u2 * u1 == u1
    assert u2 * u1 * u2 == u2
    assert u1 * u2 != u2 * u1

    # Verify the unit
    assert algebra.one() * u1 == u1


def test_tl_product_text():
    """Test the printed form of a product"""
    algebra = get_algebra("tl", 2)
    u = algebra.parse("U")

    assert str(u * u) == "δ * U"
    assert str(algebra.parse("1")) == "1 * 1"


def test_mixed_algebras_do_not_multiply():
    """Test that elements of different algebras cannot be combined"""
    with pytest.raises(SizeMismatchError):
        TemperleyLieb(2).one() * TemperleyLieb(3).one()


def test_partition_algebra_loops():
    """Test the idempotent of the partition algebra on one point"""
    algebra = get_algebra("partition", 1)
    p = algebra.parse("{1}|{1'}")

    # Verify the middle block closes into a loop
    assert p * p == DELTA * p
    assert str(p * p) == "δ * {1}|{1'}"

    with pytest.raises(InvalidSpecError):
        algebra.parse("{1}|{2'}")


def test_brauer_rejects_blocks_of_three():
    """Test that Brauer diagrams are pair partitions"""
    with pytest.raises(InvalidSpecError):
        get_algebra("brauer", 2).parse("{1,2,1'}|{2'}")


def test_blob_products_on_one_point():
    """Test that the blob and its complement are orthogonal idempotents"""
    algebra = get_algebra("blob", 1)
    blob, square = algebra.parse("(•)"), algebra.parse("(□)")

    # Verify both squares and the cross term
    assert blob * blob == blob
    assert square * square == square
    assert str(blob * square) == "0"
    assert algebra.one() == blob + square


def test_contour_products():
    """Test blob counts on loops and lines in both modes"""
    blob_mode = ContourAlgebra(1, k=1, d=2, mode="blob")
    cyclotomic = ContourAlgebra(1, k=1, d=2, mode="cyclotomic")

    # Verify blobs saturate in one mode and wrap in the other
    assert str(blob_mode.parse("(1)") * blob_mode.parse("(1)")) == "1 * (1)"
    assert str(cyclotomic.parse("(1)") * cyclotomic.parse("(1)")) == "1 * ()"

    # Verify a blobbed loop
    two = get_algebra("contour:2,1", 2)
    x = two.parse("()(1)")
    assert str(x * x) == "δ1 * ()(1)"

    with pytest.raises(InvalidSpecError):
        ContourAlgebra(1, mode="other")


def test_contour_mode_from_settings(test_settings, monkeypatch):
    """Test that the contour mode defaults to the configured one"""
    monkeypatch.setattr(test_settings, "contour_mode", "cyclotomic")

    assert get_algebra("contour:2,1", 1).mode == "cyclotomic"


def test_unknown_algebras():
    """Test malformed algebra names"""
    for name in ["bogus", "contour:2", "contour:x,1"]:
        with pytest.raises(InvalidSpecError):
            get_algebra(name, 2)
    with pytest.raises(InvalidSpecError):
        get_algebra("tl", -1)


@pytest.mark.parametrize(
    "name,n,expected",
    [
        ("tl", 4, 14),
        ("blob", 3, 20),
        ("partition", 2, 15),
        ("brauer", 3, 15),
        ("dn", 3, 10),
        ("contour:2,1", 3, 20),
    ],
)
def test_dimension_identities(name, n, expected):
    """Test basis sizes against sums of squared half counts"""
    report = dimension_identity(get_algebra(name, n))

    assert report.ok
    assert report.basis_count == report.sum_of_squares == expected


def test_gram_matrices():
    """Test small Gram matrices and their determinants"""
    assert gram(3, 1) == sympy.Matrix([[DELTA, 1], [1, DELTA]])
    assert gram(2, 0) == sympy.Matrix([[DELTA]])
    assert gram(2, 2) == sympy.Matrix([[1]])
    assert gram_det(3, 1) == DELTA**2 - 1
    assert gram_det(4, 0) == DELTA**4 - DELTA**2

    # Verify the rank drops where the determinant vanishes
    assert gram_rank(3, 1, 1) == 1
    assert gram_rank(3, 1, 2) == 2

    with pytest.raises(InvalidSpecError):
        gram(3, 0)


def test_cut_and_pair_lemma():
    """Test that products of cut diagrams follow the pairing"""
    assert tl_lemma_violations(4) == []


def test_rollet_rows():
    """Test walk counts on the Rollet graph for l = 3"""
    g = rollet_simple_graph(3)
    table = layer_counts(g, 8)

    # Verify rows 4 to 8
    assert table.layer(4) == {0: 1, 2: 3, 4: 1}
    assert table.layer(6) == {0: 1, 2: 9, 4: 4, 6: 1}
    assert table.layer(7) == {1: 1, 3: 13, 5: 6, 7: 1}
    assert table.layer(8) == {0: 1, 2: 27, 4: 13, 6: 7, 8: 1}

    with pytest.raises(InvalidSpecError):
        rollet_simple_graph(1)


def test_tl_simple_dims_match_rollet():
    """Test restricted walks against the Rollet graph up to n = 7"""
    table = layer_counts(rollet_simple_graph(3), 7)
    for n in range(8):
        for lam, count in table.layer(n).items():
            # Verify each count by both methods
            assert tl_simple_dim(n, lam, 3) == count
            assert tl_simple_dim(n, lam, 3, "enumerate") == count


def test_tl_simple_dim_row_eight():
    """Test the restricted count at n = 8 where every ballot walk survives"""
    assert tl_simple_dim(8, 2, 3) == 28


def test_blob_simple_dims():
    """Test blob simple dimensions on the full and shifted lines"""
    assert blob_simple_dim(2, 0, -3) == 2
    assert blob_simple_dim(4, -4, -3) == 0
    for n in range(7):
        for lam in range(-n, n + 1):
            # Verify both readings agree
            assert blob_simple_dim(n, lam, -2) == blob_simple_dim_shifted(n, lam, -2)

    with pytest.raises(InvalidSpecError):
        blob_simple_dim(2, 0, 1)


def test_brauer_delta_one_graph():
    """Test the Young graph cut down to ∅ and (1)"""
    assert catalan_numbers(brauer_delta_one_graph(), 3) == [1, 1, 1, 1]


def _algebra(name, n):
    if name.startswith("contour-"):
        return ContourAlgebra(n, k=1, d=2, mode=name.split("-", 1)[1])
    return get_algebra(name, n)


EXHAUSTIVE = [
    ("tl", 1),
    ("tl", 2),
    ("tl", 3),
    ("blob", 1),
    ("blob", 2),
    ("partition", 1),
    ("partition", 2),
    ("brauer", 1),
    ("brauer", 2),
    ("brauer", 3),
    ("dn", 2),
    ("dn", 3),
    ("contour-blob", 1),
    ("contour-blob", 2),
    ("contour-cyclotomic", 1),
    ("contour-cyclotomic", 2),
]


@pytest.mark.parametrize("name,n", EXHAUSTIVE)
def test_associativity_and_unit(name, n):
    """Test every triple of basis diagrams and the two-sided unit"""
    algebra = _algebra(name, n)
    elements = [algebra.element(d) for d in algebra.basis()]
    one = algebra.one()

    for x in elements:
        assert one * x == x == x * one
    for x, y, z in product(elements, repeat=3):
        assert (x * y) * z == x * (y * z)


@pytest.mark.parametrize("name,n", EXHAUSTIVE)
def test_propagating_lines_never_increase(name, n):
    """Test that products of two diagrams keep at most the smaller line count"""
    algebra = _algebra(name, n)
    basis = algebra.basis()

    for a, b in product(basis, repeat=2):
        bound = min(algebra.propagating(a), algebra.propagating(b))
        for d in algebra.product(a, b):
            assert algebra.propagating(d) <= bound


def test_gram_determinants_are_generically_nonzero():
    """Test that every standard module is simple at a generic loop value"""
    for n in range(6):
        for l in range(n % 2, n + 1, 2):
            det = gram_det(n, l)

            # Verify the size and a generic evaluation
            assert gram(n, l).rows == layer_counts(a_inf(), n).get(n, l)
            assert det.subs(DELTA, sympy.Rational(7, 3)) != 0
