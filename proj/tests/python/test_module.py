import filiform
import pytest

ALL_LABELS = filiform.labels(5) + filiform.labels(6)


def test_labels():
    assert filiform.labels(5) == [f"U5_{i}" for i in range(1, 10)]
    assert len(filiform.labels(6)) == 19
    with pytest.raises(filiform.FiliformError):
        filiform.labels(7)


def test_classify_examples():
    r = filiform.classify(filiform.tleib(1, 0, 1, 0))
    assert r["label"] == "U5_2"
    assert r["canonical"] == {"b00": "1", "b01": "0", "b11": "1", "b12": "0"}
    assert not r["degenerate"]

    r = filiform.classify(filiform.tleib(1, 2, 1, 1))
    assert r["label"] == "U5_1"
    assert r["invariants"] == {"I1": "0"}


def test_degenerate_flag():
    # 2*b11 - b01*b23 = 0 with b11, b23 nonzero.
    r = filiform.classify(filiform.tleib(0, 2, 1, 0, 0, 1))
    assert r["label"] == "U6_1"
    assert r["degenerate"]
    assert "degenerate_reason" in r


def test_float_mode():
    r = filiform.classify(filiform.tleib(1.0, 0.0, 1.0, 0.0))
    assert r["label"] == "U5_2"


def test_sample_is_deterministic():
    assert filiform.sample("U6_7", 11) == filiform.sample("U6_7", 11)
    assert filiform.sample("U6_7", 11) != filiform.sample("U6_7", 12)


@pytest.mark.parametrize("label", ALL_LABELS)
def test_classify_recovers_sampled_label(label):
    for seed in range(50):
        member = filiform.sample(label, seed)
        assert filiform.classify(member)["label"] == label


def test_representative_is_fixed_point():
    rep = filiform.representative("U6_11", ["3/2"])
    r = filiform.classify(rep)
    assert r["label"] == "U6_11"
    assert r["canonical"] == rep["params"]
    assert r["invariants"] == {"I1": "6"}


def test_isomorphic_members_of_one_orbit():
    rep = filiform.representative("U6_7", ["2", "1+i"])
    member = filiform.sample("U6_7", 3)
    res = filiform.isomorphic(rep, rep)
    assert res["isomorphic"] and res["decided"]
    other = filiform.isomorphic(filiform.sample("U6_3", 1), filiform.sample("U6_4", 1))
    assert not other["isomorphic"]
    assert filiform.classify(member)["label"] == "U6_7"


def test_table_and_verify_round_trip():
    params = filiform.tleib(1, "1/2", "i", 0, 3, -1)
    t = filiform.table(params)
    assert t["dim"] == 6
    v = filiform.verify(t)
    assert v == filiform.verify(params)
    assert v["leibniz_defect"] == "0"
    assert v["filiform"]
    assert v["lower_central_series"] == [6, 4, 3, 2, 1, 0]


def test_scalar_text():
    assert filiform.normalize_scalar("2/4 + 0i") == "1/2"
    with pytest.raises(filiform.ParseError):
        filiform.normalize_scalar("1//2")


def test_errors():
    with pytest.raises(filiform.ParseError):
        filiform.classify({"family": "TLeib", "dim": 5, "params": {"b99": "1"}})
    with pytest.raises(filiform.ParseError):
        filiform.classify("{not json")
    with pytest.raises(filiform.FiliformError):
        filiform.sample("U7_1", 0)
