import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from satseq.config import CACHE_ENV, ConfigError, RunConfig, build_config, load_config_file
from satseq.report import jsonable, rational, to_csv, to_json
from satseq.store import ResultCache


def test_cache_roundtrip(tmp_path):
    c = ResultCache(tmp_path)
    c.put("k", {"dim": 3})
    c.flush()
    again = ResultCache(tmp_path)
    assert again.get("k") == {"dim": 3} and again.hits == 1
    assert again.get("missing") is None and again.misses == 1


def test_version_bump_invalidates(tmp_path):
    c = ResultCache(tmp_path, version=1)
    c.put("k", 1)
    c.flush()
    assert len(ResultCache(tmp_path, version=2)) == 0


def test_corrupt_file_is_ignored(tmp_path):
    (tmp_path / "satseq-cache.json").write_text("{not json")
    assert len(ResultCache(tmp_path)) == 0


def test_flush_leaves_no_temporaries(tmp_path):
    c = ResultCache(tmp_path)
    for i in range(5):
        c.put(str(i), i)
        c.flush()
    assert [p.name for p in tmp_path.iterdir()] == ["satseq-cache.json"]


def test_cache_dir_resolution(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path / "env"))
    assert RunConfig().resolved_cache_dir() == tmp_path / "env"
    assert RunConfig(cache_dir=str(tmp_path / "flag")).resolved_cache_dir() == tmp_path / "flag"
    assert RunConfig(no_cache=True).resolved_cache_dir() is None


def test_flags_override_file(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"seed": 3, "max_rows": 10}))
    cfg = build_config(load_config_file(p), {"seed": 4, "max_rows": None})
    assert (cfg.seed, cfg.max_rows) == (4, 10)


def test_invalid_config():
    with pytest.raises(ConfigError):
        RunConfig(format="xml")
    with pytest.raises(ConfigError):
        build_config({"bogus": 1}, {})


def test_report_excludes_presentation_fields():
    d = RunConfig(cache_dir="/x", format="csv").as_dict()
    assert "cache_dir" not in d and "format" not in d and "seed" in d


@given(st.fractions())
def test_rationals_serialize_exactly(x):
    s = rational(x)
    assert Fraction(s) == x and "/" in s


def test_json_is_sorted_and_exact():
    out = to_json({"b": Fraction(1, 3), "a": [Fraction(2)]})
    assert out.index('"a"') < out.index('"b"')
    assert json.loads(out) == {"a": ["2/1"], "b": "1/3"}


def test_csv():
    assert to_csv(("a", "b"), [(1, "x;y")]) == "a,b\n1,x;y\n"


def test_jsonable_rejects_unknown():
    with pytest.raises(TypeError):
        jsonable(object())
