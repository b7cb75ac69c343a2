import json

import numpy as np
import pytest

from pcmentropy import (
    GeneratorSpec,
    IncompleteMatrixError,
    generate_random_pcm,
    hci,
    induce,
    make_pcm,
    report,
    saaty_ci,
)
from conftest import TENNIS_F, consistent_pcm, oracle_sdot

# closed-form oracles for the worked 3x3 (cycle product c = 0.5), computed
# before the build: eta = 1 + c^(1/3) + c^(-1/3); column sums t = (13/8, 7/2, 11)
CI_3X3 = (1.0 + 0.5 ** (1 / 3) + 0.5 ** (-1 / 3) - 3.0) / 2.0
HCI_3X3 = 16.0 / 993.0


def test_ci_zero_on_consistent():
    pcm = consistent_pcm([1.0, 2.0, 3.0, 4.0])
    assert abs(saaty_ci(pcm)) <= 1e-9


def test_ci_3x3_closed_form(worked_3x3):
    assert saaty_ci(worked_3x3) == pytest.approx(CI_3X3, abs=1e-10)
    assert saaty_ci(worked_3x3) == pytest.approx(0.0268, abs=1e-4)


def test_ci_transpose_invariant(worked_3x3):
    transposed = make_pcm(worked_3x3.entries.T.copy())
    assert saaty_ci(transposed) == pytest.approx(saaty_ci(worked_3x3), abs=1e-10)


def test_ci_requires_complete(tennis):
    with pytest.raises(IncompleteMatrixError):
        saaty_ci(tennis)


def test_hci_zero_on_consistent():
    for scale in ([1.0, 2.0, 3.0], [0.2, 5.0, 1.0, 2.5], [1.0, 1.0]):
        assert abs(hci(consistent_pcm(scale))) <= 1e-9


def test_hci_3x3_hand_oracle(worked_3x3):
    t = worked_3x3.entries.sum(axis=0)
    assert np.allclose(t, [1.625, 3.5, 11.0])
    assert hci(worked_3x3) == pytest.approx(HCI_3X3, abs=1e-12)
    assert hci(worked_3x3) == pytest.approx(0.0161, abs=1e-4)


def test_hci_2x2_always_zero():
    assert hci(make_pcm([[1, 7], [1 / 7, 1]])) == pytest.approx(0.0, abs=1e-12)


def test_hci_requires_complete(tennis):
    with pytest.raises(IncompleteMatrixError):
        hci(tennis)


def test_report_tennis(tennis):
    rep = report(tennis, 1.0)
    assert rep.complete is False
    assert rep.ci is None
    assert rep.hci is None
    assert np.allclose(rep.scale, TENNIS_F, atol=2e-3)
    assert rep.scale.sum() == pytest.approx(1.0, abs=1e-12)
    assert sum(v for _, _, v in rep.per_comparison) == pytest.approx(rep.sdot, abs=1e-10)
    assert rep.per_alternative.sum() == pytest.approx(rep.sdot, abs=1e-10)


def test_report_consistent_complete():
    rep = report(consistent_pcm([1.0, 2.0, 4.0]), 1.0)
    assert 0.0 <= rep.sdot <= 1e-10
    assert abs(rep.ci) <= 1e-9
    assert abs(rep.hci) <= 1e-9
    assert np.allclose(rep.scale, [1 / 7, 2 / 7, 4 / 7], atol=1e-9)


def test_report_worked_3x3(worked_3x3):
    rep = report(worked_3x3, 1.0)
    assert rep.ci == pytest.approx(CI_3X3, abs=1e-10)
    assert rep.hci == pytest.approx(HCI_3X3, abs=1e-12)
    assert rep.sdot == pytest.approx(oracle_sdot(worked_3x3, 1.0), abs=1e-10)


def test_report_json_shape(tennis):
    body = json.loads(json.dumps(report(tennis, 1.0).to_dict()))
    assert set(body) == {
        "sdot", "ci", "hci", "scale", "perComparison", "perAlternative", "complete", "gamma",
    }
    assert body["ci"] is None and body["hci"] is None
    assert body["complete"] is False
    assert body["gamma"] == 1.0
    assert len(body["scale"]) == 6
    assert len(body["perAlternative"]) == 6
    assert {tuple(sorted(d)) for d in map(dict, body["perComparison"])} == {("a", "b", "value")}


def test_report_permutation_equivariance(tennis):
    perm = np.array([3, 0, 5, 1, 4, 2])
    permuted = make_pcm(tennis.entries[np.ix_(perm, perm)], tuple(tennis.labels[i] for i in perm))
    rep = report(tennis, 1.0)
    rep_p = report(permuted, 1.0)
    assert rep_p.sdot == pytest.approx(rep.sdot, abs=1e-10)
    assert np.allclose(rep_p.scale, rep.scale[perm], atol=1e-10)
    inv = np.argsort(perm)
    mapped = {(min(inv[a], inv[b]), max(inv[a], inv[b])): v for a, b, v in rep.per_comparison}
    for a, b, v in rep_p.per_comparison:
        assert v == pytest.approx(mapped[(a, b)], abs=1e-10)


def test_indices_vanish_together_on_generator():
    for pcm in generate_random_pcm(GeneratorSpec(n=5, alpha_range=(0.0, 0.0), seed=13, count=40)):
        assert induce(pcm).sdot <= 1e-10
        assert abs(saaty_ci(pcm)) <= 1e-9
        assert abs(hci(pcm)) <= 1e-9
    for pcm in generate_random_pcm(GeneratorSpec(n=5, alpha_range=(0.5, 2.0), seed=14, count=40)):
        assert induce(pcm).sdot > 1e-6
        assert saaty_ci(pcm) > 1e-9
        assert hci(pcm) > 1e-9
