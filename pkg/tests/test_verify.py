import pytest

from kmdis.canon import canonical_form
from kmdis.families import f
from kmdis.treegen import TreeStream
from kmdis.mdis import mdi
from kmdis.verify import (
    CSV_HEADER,
    LEMMAS,
    VerificationReport,
    check_counts,
    check_forests,
    check_lemma,
    count_rules,
    isolate_free_forests,
    lemma_failures,
    merge_reports,
    partitions,
    predicted_descriptors,
    predicted_minimizers,
    reports_to_csv,
    sweep,
    two_p2_values,
)


def brute_minimizers(k, n):
    counts = {canonical_form(x): mdi(x, k) for x in TreeStream(n)}
    best = min(counts.values())
    return best, sorted(key for key, c in counts.items() if c == best)


@pytest.mark.parametrize("k,n", [(1, 6), (2, 7), (2, 8), (3, 8), (4, 9), (4, 10), (5, 9), (6, 10)])
def test_sweep_against_direct_scan(k, n):
    r = sweep(k, n)
    best, keys = brute_minimizers(k, n)
    assert (r.min_mdi, r.minimizers) == (best, keys)
    assert r.f_value == f(k, n)
    assert r.verdict == "match"


def test_prediction_branches():
    assert predicted_descriptors(4, 5) is None
    assert predicted_descriptors(4, 6) == ["P(n=6)"]
    assert len(predicted_descriptors(4, 7)) == 2
    assert predicted_descriptors(3, 9) == ["S(p=4,m=2)"]
    assert len(predicted_minimizers(2, 3)) == 1


def test_report_json_round_trip():
    r = sweep(3, 8)
    back = VerificationReport.from_json(r.to_json(include_timing=True))
    assert back == r
    assert '"timing": null' in r.to_json()


def test_csv():
    text = reports_to_csv([sweep(3, 8)])
    assert text.splitlines() == [",".join(CSV_HEADER), "3,8,6,6,3,match"]


def test_shards_merge_to_full_sweep():
    whole = sweep(3, 10)
    parts = [sweep(3, 10, shard=(i, 3)) for i in range(3)]
    merged = merge_reports(parts)
    assert merged.to_json() == whole.to_json()
    with pytest.raises(ValueError):
        merge_reports([sweep(2, 5), sweep(3, 5)])


def test_sweep_rejects_out_of_range():
    with pytest.raises(ValueError):
        sweep(2, 17)
    with pytest.raises(ValueError):
        sweep(0, 5)


def test_parallel_sweep_equal():
    assert sweep(2, 11, jobs=3).to_json() == sweep(2, 11).to_json()


def test_count_rules():
    names = [name for name, _ in count_rules(3, 10)]
    assert any("floor" in name for name in names)
    for k in (2, 3, 4):
        for n in range(1, 12):
            assert check_counts(k, n)


def test_partitions():
    assert list(partitions(4)) == [(1, 1, 1, 1), (1, 1, 2), (1, 3), (2, 2), (4,)]
    assert list(partitions(6, 2)) == [(2, 2, 2), (2, 4), (3, 3), (6,)]


def test_forest_enumeration_counts():
    # isolate-free forests with >= 2 components on 6 and 7 vertices
    assert sum(1 for _ in isolate_free_forests(6)) == 4    # 3P2, P2+P4, P2+S4, 2P3
    assert sum(1 for _ in isolate_free_forests(7)) == 1 + 3 + 2 * 1


def test_forests():
    assert two_p2_values(2) == (4, 4)
    assert two_p2_values(4) == (4, 4)
    for k in (2, 3):
        for n in range(5, 9):
            assert check_forests(k, n)


def test_lemma_registry():
    assert sorted(LEMMAS) == list(range(1, 18))
    with pytest.raises(ValueError):
        lemma_failures(99)


@pytest.mark.parametrize("lemma", sorted(LEMMAS))
def test_lemmas_hold_on_small_ranges(lemma):
    ranges = {"ks": [2, 3, 4], "ns": range(4, 10), "ps": [2, 3]}
    assert lemma_failures(lemma, **ranges) == []


@pytest.mark.slow
@pytest.mark.parametrize("lemma", sorted(LEMMAS))
def test_lemmas_default_ranges(lemma):
    assert check_lemma(lemma)
