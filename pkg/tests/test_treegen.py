import networkx as nx
import pytest

from kmdis.canon import automorphism_count, canonical_form
from kmdis.treegen import (
    TreeStream,
    count_free_trees,
    level_sequences,
    stream_partition,
    t,
    tree_from_levels,
)

import oracles

OEIS_TREES = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]


def test_counts_match_known_sequence():
    assert [t(n) for n in range(1, 15)] == OEIS_TREES[:14]


def test_otter_formula():
    assert [count_free_trees(n) for n in range(1, 17)] == OEIS_TREES
    assert count_free_trees(36) == 6226306037178


@pytest.mark.parametrize("n", range(1, 12))
def test_stream_has_no_duplicates(n):
    keys = [canonical_form(x) for x in TreeStream(n)]
    assert len(keys) == len(set(keys)) == OEIS_TREES[n - 1]


def test_matches_networkx_generator():
    for n in range(2, 13):
        ours = {canonical_form(x) for x in TreeStream(n)}
        theirs = sum(1 for _ in nx.nonisomorphic_trees(n))
        assert len(ours) == theirs


def test_prufer_oracle_small():
    assert [oracles.unlabeled_tree_count(n) for n in range(1, 9)] == OEIS_TREES[:8]


def test_prufer_transversal_agrees_with_full_enumeration():
    assert oracles.unlabeled_tree_count(7, exhaustive_limit=6) == oracles.unlabeled_tree_count(7)


def test_cayley_cross_check():
    for n in range(2, 10):
        classes = [(n, automorphism_count(x)) for x in TreeStream(n)]
        assert oracles.labeled_count_by_classes(classes) == n ** (n - 2)


def test_shards_partition_stream():
    whole = [canonical_form(x) for x in TreeStream(10)]
    parts = [canonical_form(x) for i in range(3) for x in stream_partition(10, i, 3)]
    assert sorted(parts) == sorted(whole)
    assert [canonical_form(x) for x in TreeStream(10)] == whole


def test_level_sequences_rooted_at_centre():
    for seq in level_sequences(9):
        tr = tree_from_levels(seq)
        assert tr.n == 9


@pytest.mark.parametrize("bad", [(0, 0, 1), (21, 0, 1), (5, 2, 2), (5, 0, 0)])
def test_invalid_streams(bad):
    with pytest.raises(ValueError):
        TreeStream(*bad)
