import pytest

from spgames import engine as E
from spgames.verify import FixtureError, check_fixture, load_fixtures, run_all


@pytest.fixture(scope="module")
def rows():
    return {r.key: r for r in run_all()}


def test_packaged_fixtures_load():
    fixtures = load_fixtures()
    assert len(fixtures) >= 20
    assert any(f.impartial for f in fixtures)


def test_all_fixture_rows_pass(rows):
    fixture_rows = [r for k, r in rows.items() if k.startswith("fixture")]
    assert fixture_rows and all(r.ok for r in fixture_rows)


def test_every_criterion_reports(rows):
    for key in ["c1", "c1b"] + [f"c{i}" for i in range(2, 12)]:
        assert key in rows


def test_empty_and_missing_fixture_dirs(tmp_path):
    with pytest.raises(FixtureError):
        load_fixtures(tmp_path)
    with pytest.raises(FixtureError):
        load_fixtures(tmp_path / "nope")
    (tmp_path / "a.cx").write_text("x1\n")
    with pytest.raises(FixtureError, match="expect"):
        load_fixtures(tmp_path)


def test_custom_fixture(tmp_path):
    (tmp_path / "half.cx").write_text("# expect: 1/2\nx1 y1\nx2\n")
    (tmp_path / "wrong.cx").write_text("# expect: 1\nx1 y1\nx2\n")
    got = {f.name: check_fixture(f)[2] for f in load_fixtures(tmp_path)}
    assert got == {"half": True, "wrong": False}


def test_disabling_domination_is_caught(monkeypatch):
    monkeypatch.setattr(E, "_undominated_left", lambda opts: set(opts))
    monkeypatch.setattr(E, "_undominated_right", lambda opts: set(opts))
    try:
        rows = {r.key: r for r in run_all()}
    finally:
        monkeypatch.undo()
        E.reset()
    assert not rows["c2"].ok
    for name in ("day2_08", "day2_09", "day2_10", "day2_12"):
        assert not rows[f"fixture {name}"].ok
