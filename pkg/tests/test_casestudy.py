from subreg.casestudy import badgraph_case_study
from subreg.extract import augment_with_balloons
from subreg.families import badgraph
from subreg.matching import is_tutte_set, tutte_set
from subreg.oracle import brute_force_f2, has_two_factor


def test_all_claims_hold():
    study = badgraph_case_study()
    failed = [c.text for c in study.claims if not c.holds]
    assert not failed
    assert len(study.claims) >= 10


def test_badgraph_f2_and_tutte_sets():
    bad = badgraph()
    assert not has_two_factor(bad.graph)
    assert brute_force_f2(bad.graph).f2_exact == 6
    aug, _ = augment_with_balloons(bad.graph)
    assert is_tutte_set(aug, bad.X)
    without_x = [v for v in bad.X if v != bad.x]
    assert is_tutte_set(aug, without_x)
    assert list(tutte_set(aug, minimal=True).S) == without_x
