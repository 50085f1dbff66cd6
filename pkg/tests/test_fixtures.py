"""Golden-fixture tests: the stored files must match both the recomputation
and the hand-derived values pinned here."""
from __future__ import annotations

import json

from tamelift.fixtures import (
    FIXTURE_BUILDERS,
    fixture_path,
    run_fixture_suite,
    write_fixture_files,
)
from tamelift.jsonio import canonical_json, load_json_file


def test_suite_passes_against_stored_files():
    outcomes = run_fixture_suite()
    assert [o.name for o in outcomes] == sorted(FIXTURE_BUILDERS)
    for outcome in outcomes:
        assert outcome.passed, outcome.name


def test_gl4_fixture_values():
    data = load_json_file(fixture_path("gl4_parabolic"))
    assert data["orbit_sum"] == [7, 3, 7, 3]
    assert data["parabolic"]["nonneg"] == [1, 3, 4, 6, 8, 9, 10, 11]
    assert data["parabolic"]["levi"] == [1, 3, 8, 10]
    assert data["parabolic"]["unipotent"] == [4, 6, 9, 11]
    assert data["normalizer_in_parabolic"] is True
    # unipotent indices decode to the cross-block roots out of {1,3} x {2,4}
    roots = [tuple(r) for r in data["roots"]]
    assert {roots[i] for i in data["parabolic"]["unipotent"]} == {
        (0, -1, 1, 0), (0, 0, 1, -1), (1, -1, 0, 0), (1, 0, 0, -1)}


def test_multiset_fixture_values():
    data = load_json_file(fixture_path("multiset_halving"))
    assert data == {"input": [1, 1, 2, 2, 2, 2], "divisor": 2,
                    "output": [1, 2, 2]}


def test_lubin_tate_fixture_values():
    data = load_json_file(fixture_path("lubin_tate_ht"))
    assert data["1"] == {"0": [-1, 0]}
    assert data["2"] == {"0": [-1, 0], "1": [0, 0]}
    assert data["3"] == {"0": [-1, 0], "1": [0, 0], "2": [0, 0]}


def test_induced_fixture_values():
    data = load_json_file(fixture_path("induced_weights"))
    assert sorted(data) == ["1", "2", "3", "5"]
    for d_str, block in data.items():
        d = int(d_str)
        assert block["labeled"]["0"] == [-1] + [0] * (d - 1)
        assert block["labeled"]["1"] == [0] * d
        for sigma_str, items in block["colabeled"].items():
            expected = [-1] + [0] * (d - 1) if int(sigma_str) % 2 == 0 \
                else [0] * d
            assert items == expected


def test_stored_files_are_canonical_json():
    for name in FIXTURE_BUILDERS:
        text = fixture_path(name).read_text(encoding="utf-8")
        assert text == canonical_json(json.loads(text))


def test_write_fixture_files_roundtrip(tmp_path):
    written = write_fixture_files(tmp_path)
    assert len(written) == len(FIXTURE_BUILDERS)
    for path in written:
        stored = fixture_path(path.stem).read_text(encoding="utf-8")
        assert path.read_text(encoding="utf-8") == stored
