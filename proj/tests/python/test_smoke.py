import json
from pathlib import Path

import jsonschema
import pytest

import cogscope

ROOT = Path(__file__).resolve().parents[2]
FIXTURES = ROOT / "tests" / "fixtures"
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())


def test_eg1_information_content():
    report = cogscope.analyze_file(FIXTURES / "eg1.ml1")
    assert report["metrics"]["I(L)"] == 3
    assert report["tool_version"] == cogscope.__version__


def test_esciu():
    report = cogscope.analyze("void main() { int a; a = 1; }")
    assert report["metrics"]["escim"] == 1


@pytest.mark.parametrize("name", sorted(p.name for p in FIXTURES.glob("*.ml1")))
def test_reports_match_schema(name):
    report = cogscope.analyze_file(FIXTURES / name, granules=True)
    jsonschema.validate(report, SCHEMA)


def test_metric_filter():
    report = cogscope.analyze_file(FIXTURES / "eg1.ml1", metric="cfs")
    assert set(report["metrics"]) == {"loc", "wc", "n_i", "n_o", "cfs"}


def test_errors_raise():
    with pytest.raises(cogscope.AnalysisError):
        cogscope.analyze("void main() { x = 1; }")
    with pytest.raises(ValueError):
        cogscope.analyze("void main() { int a = ; }")


def test_generated_programs_analyze():
    for seed in range(20):
        report = cogscope.analyze(cogscope.generate(seed))
        assert report["metrics"]["escim"] >= 0


def test_weyuker_escim():
    table = cogscope.weyuker(seed=1, trials=200, metrics=["escim"])
    assert table["all_match"] is True
    statuses = {p["property"]: p["status"] for p in table["metrics"][0]["properties"]}
    assert set(statuses) == set(cogscope.property_ids())
    assert set(statuses.values()) == {"satisfied"}


def test_weyuker_is_deterministic():
    assert cogscope.weyuker(seed=4, trials=50) == cogscope.weyuker(seed=4, trials=50)
