"""
Tests for type-A clusters and the tagged cluster array
"""
import pytest

from pascal_arrays.core.exceptions import ClusterError, IllegalEdgeError, InvalidSpecError
from pascal_arrays.services.clusters import (
    APRoot,
    ClusterFamily,
    ClusterSequence,
    TaggedCluster,
    almost_positive_roots,
    braket_table,
    cluster_braket,
    cluster_edge,
    compatible,
    enumerate_clusters,
    extract_braket,
    format_cluster,
    is_cluster,
    matched_clusters,
    parse_cluster,
    parse_root,
    sigma,
)
from pascal_arrays.services.pascal import layer_sizes, verify_catalan, verify_family

A1, A2 = APRoot.pos(1), APRoot.pos(2)
A12 = APRoot.pos(1, 2)
N1, N2 = APRoot.neg(1), APRoot.neg(2)


def test_root_text():
    """Test reading and writing almost positive roots"""
    assert parse_root("a1+a2") == (A12, False)
    assert parse_root("-a1~") == (N1, True)
    assert format_cluster([A12, N1]) == "-a1,a1+a2"
    assert format_cluster([]) == "φ"
    assert parse_cluster("a1+a2,-a1") == (N1, A12)

    # Verify gaps, unknown letters and tags on plain clusters
    for text in ["a1+a3", "b1", "-x1"]:
        with pytest.raises(InvalidSpecError):
            parse_root(text)
    with pytest.raises(InvalidSpecError):
        parse_cluster("-a1~")


def test_almost_positive_roots():
    """Test the root list of type A2"""
    assert almost_positive_roots(2) == [N1, N2, A1, A12, A2]


def test_sigma():
    """Test the piecewise-linear reflections"""
    assert sigma(2, A1) == A12
    assert sigma(1, A1) == N1
    assert sigma(1, N1) == A1
    assert sigma(1, N2) == N2
    assert sigma(2, A12) == A1

    with pytest.raises(InvalidSpecError):
        sigma(3, A1, rank=2)


def test_compatibility_in_rank_two():
    """Test compatibility of simple roots and their sum"""
    assert not compatible(A1, A2, 2)
    assert compatible(A1, A12, 2)
    assert compatible(N1, N2, 2)
    assert not compatible(N1, A1, 2)
    assert is_cluster([A1, A12], 2)
    assert not is_cluster([A1, A2], 2)


def test_cluster_counts(test_settings):
    """Test that clusters are counted by Catalan numbers"""
    assert [len(enumerate_clusters(r)) for r in range(4)] == [1, 2, 5, 14]
    assert len(enumerate_clusters(5)) == 132
    assert len(enumerate_clusters(6)) == 429


def test_cluster_rank_cap(test_settings, monkeypatch):
    """Test the configured rank limit"""
    with pytest.raises(InvalidSpecError):
        enumerate_clusters(7)

    monkeypatch.setattr(test_settings, "cluster_max_rank", 2)
    with pytest.raises(InvalidSpecError):
        enumerate_clusters(3)


def test_tagged_cluster_checks():
    """Test tags that do not fit the cluster"""
    with pytest.raises(ClusterError):
        TaggedCluster(3, (), frozenset({1}))
    with pytest.raises(ClusterError):
        TaggedCluster(3, (), plus=True)


def test_cluster_edges():
    """Test the first edge maps out of the empty cluster"""
    origin = TaggedCluster(0, ())
    first = cluster_edge("up", origin)

    # Verify both edges out of layer 1
    assert first == TaggedCluster(1, ())
    assert cluster_edge("up", first).encode() == "φ,+"
    assert cluster_edge("down", first).encode() == "φ"

    with pytest.raises(IllegalEdgeError):
        cluster_edge("down", origin)
    with pytest.raises(InvalidSpecError):
        cluster_edge("sideways", first)


def test_cluster_family_verifies():
    """Test tagged clusters against the half-line"""
    report = verify_family(ClusterFamily(), 8)

    assert report.ok, report.failures


def test_cluster_layers():
    """Test tagged cluster cell sizes"""
    f = ClusterFamily()

    assert layer_sizes(f, 4) == {0: 2, 2: 3, 4: 1}
    assert layer_sizes(f, 5) == {1: 5, 3: 4, 5: 1}
    assert layer_sizes(f, 6) == {0: 5, 2: 9, 4: 5, 6: 1}


def test_cluster_payload_text():
    """Test the layer-prefixed text form of tagged clusters"""
    f = ClusterFamily()
    t = f.decode("5:-a1~,a2")

    # Verify the tag and the vertex
    assert t.bars == frozenset({1})
    assert f.classify(t) == (5, 3)
    assert f.encode(t) == "5:-a1~,a2"

    # Verify an incompatible pair and a missing prefix
    with pytest.raises(ClusterError):
        f.decode("5:a1,a2")
    with pytest.raises(InvalidSpecError):
        f.decode("-a1")


@pytest.mark.parametrize(
    "cluster,bra,ket",
    [
        ((N1, N2), "-a1", "-a1"),
        ((N2, A1), "a1", "-a1"),
        ((N1, A2), "-a1", "a1"),
        ((A1, A12), "a1", "a1"),
        ((A12, A2), "-a1~", "-a1~"),
    ],
)
def test_rank_two_brakets(cluster, bra, ket):
    """Test the bra-ket pairs of all clusters of type A2"""
    c, d = cluster_braket(cluster, 3)

    assert (c.encode(), d.encode()) == (bra, ket)
    assert c.vertex == d.vertex


def test_rank_one_brakets():
    """Test the global tag on the middle root"""
    c, d = cluster_braket((N1,), 2)
    assert (c.encode(), d.encode(), c.vertex) == ("φ", "φ", 0)

    c, d = cluster_braket((A1,), 2)
    assert (c.encode(), d.encode(), c.vertex) == ("φ,+", "φ,+", 2)

    with pytest.raises(ClusterError):
        cluster_braket((A1, A2), 3)


def test_cluster_sequence(catalan):
    """Test the cluster bra-ket decomposition"""
    report = verify_catalan(ClusterSequence(), 6)

    # Verify Catalan counts one layer down
    assert report.ok, report.failures
    assert report.member_counts == catalan[:7]


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_sigma_is_an_involution(rank):
    """Test that every σ_i undoes itself"""
    for i in range(1, rank + 1):
        for root in almost_positive_roots(rank):
            assert sigma(i, sigma(i, root, rank), rank) == root


@pytest.mark.parametrize(
    "cluster,bra,ket",
    [
        ("-a1,-a2,-a3", "-a1", "-a1"),
        ("-a1,-a2,a3", "-a1", "a1"),
        ("a1,-a2,-a3", "a1", "-a1"),
        ("a1,-a2,a3", "a1", "a1"),
        # Listed elsewhere as (a1,+ ; -a1,+), which repeats the a1,a1+a2,-a3 row
        ("-a1,a2,-a3", "-a1,+", "-a1,+"),
        ("-a1,a2,a2+a3", "-a1,+", "a1,+"),
        ("-a1,a2+a3,a3", "-a1,+", "-a1~"),
        ("a1,a1+a2,-a3", "a1,+", "-a1,+"),
        ("a1,a1+a2,a1+a2+a3", "a1,+", "a1,+"),
        ("a1,a1+a2+a3,a3", "a1,+", "-a1~"),
        ("a1+a2,a2,-a3", "-a1~", "-a1,+"),
        ("a1+a2,a2,a1+a2+a3", "-a1~", "a1,+"),
        ("a1+a2+a3,a2+a3,a3", "-a1~", "-a1~"),
        ("a1+a2+a3,a2,a2+a3", "-a1~,+", "-a1~,+"),
    ],
)
def test_rank_three_brakets(cluster, bra, ket):
    """Test the bra-ket pairs of all fourteen clusters of type A3"""
    x = parse_cluster(cluster)
    c, d = cluster_braket(x, 4)

    # Verify the pair comes straight from the replacement procedure
    assert (c.encode(), d.encode()) == (bra, ket)
    assert extract_braket(x, 4) == (c, d)


def test_extraction_needs_no_matching_up_to_rank_three():
    """Test that every small cluster is split by the replacement procedure"""
    for n in range(5):
        assert matched_clusters(n) == []


@pytest.mark.parametrize("n", [5, 6])
def test_braket_is_a_bijection(n, catalan):
    """Test that bra-ket pairs are distinct, balanced and exhaust the cells"""
    table = braket_table(n)
    pairs = set(table.values())

    # Verify one pair per cluster over a common vertex
    assert len(table) == len(pairs) == catalan[n]
    assert all(c.vertex == d.vertex for c, d in pairs)
    assert set(matched_clusters(n)) <= set(table)


def test_unbalanced_extraction_is_matched():
    """Test a cluster whose replacement roots leave C and D with different tags"""
    x = parse_cluster("-a1,a2,a2+a3+a4,a4")

    assert extract_braket(x, 5) is None
    assert x in matched_clusters(5)

    # Verify the matched pair still round-trips
    sequence = ClusterSequence()
    bra, ket = sequence.decompose(5, x)
    assert bra.vertex == ket.vertex
    assert sequence.compose(5, bra, ket) == x
