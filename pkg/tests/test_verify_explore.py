from satseq import explore, verify
from satseq.bounds import Zeta
from satseq.saturation import SaturationRecord


def test_quick_item_suite_passes():
    results = verify.run()
    assert [r.label for r in results if not r.ok] == []


def test_published_table_is_non_increasing():
    for d, row in verify.PUBLISHED_TABLE.items():
        assert list(row) == sorted(row, reverse=True)
        assert len(row) == d // 2 - 1


class _FakeEngine:
    """Serves fixed sequences so the counterexample paths can be exercised."""

    def __init__(self, rows):
        self.rows = rows

    def saturation_sequence(self, d):
        alphas = self.rows[d]
        return SaturationRecord(d, alphas, alphas, max(alphas), Zeta(d))


def test_explore_flags_counterexamples():
    rows = {4: [3], 5: [3], 6: [3, 5], 7: [4, 4]}
    rep = explore.explore(7, 1, engine=_FakeEngine(rows))
    assert rep.non_increasing_counterexamples == [6]
    assert rep.alpha_gap_counterexamples == [6, 7]
    assert rep.counterexamples_found
    assert rep.as_dict()["status"] == "counterexample found"


def test_explore_clean_run():
    rep = explore.explore(10, 3)
    assert not rep.counterexamples_found
    assert {s: t["threshold"] for s, t in rep.thresholds.items()} == {1: 4, 2: 8, 3: 10}
