import pytest

from strongclique.campaign import PRESETS, run_preset, sat_instances
from strongclique.errors import StrongCliqueError


@pytest.mark.parametrize("preset", sorted(set(PRESETS) - {"small-exhaustive"}))
def test_quick_presets_match_oracle(preset):
    recs = list(run_preset(preset, seed=1, quick=True))
    assert recs
    bad = [r for r in recs if r.status != "ok"]
    assert not bad, bad[:3]


def test_small_exhaustive_quick():
    recs = list(run_preset("small-exhaustive", quick=True))
    assert len(recs) >= 4 * 2 ** 10
    assert all(r.status == "ok" for r in recs)


def test_campaigns_are_deterministic():
    def strip(recs):
        return [(r.instance, r.problem, r.answer, r.method, r.expected, str(r.certificate)) for r in recs]
    a = strip(run_preset("cubic-families", seed=3, quick=True))
    assert a == strip(run_preset("cubic-families", seed=3, quick=True))
    assert sat_instances(3, 50) == sat_instances(3, 50) != sat_instances(4, 50)


def test_unknown_preset():
    with pytest.raises(StrongCliqueError):
        run_preset("everything")
