import pytest

from rm3.curves import PlaneCurve, fixture_path, load_curve, load_table
from rm3.errors import InputError
from rm3.exact import parse_poly


def test_default_quartic_is_integral_primitive(quartic):
    assert quartic.degree == 4
    assert all(float(c).is_integer() for c in quartic.form.terms.values())
    assert quartic.scale * quartic.source == quartic.form


def test_fixture_override(tmp_path, monkeypatch):
    (tmp_path / "quartic.txt").write_text("x^4 + y^4 + z^4\n")
    monkeypatch.setenv("RM3_FIXTURES", str(tmp_path))
    assert fixture_path("quartic.txt") == tmp_path / "quartic.txt"
    assert load_curve().form == parse_poly("x^4+y^4+z^4", ("x", "y", "z"))


def test_non_homogeneous_rejected():
    with pytest.raises(InputError):
        PlaneCurve.from_poly(parse_poly("x^4 + y", ("x", "y", "z")))


def test_missing_and_malformed_files(tmp_path):
    with pytest.raises(InputError):
        load_curve(tmp_path / "nope.txt")
    bad = tmp_path / "t.tsv"
    bad.write_text("p\tu\n5\t1\n")
    with pytest.raises(InputError):
        load_table(bad)


def test_content_removed_before_reduction():
    C = PlaneCurve.from_poly(parse_poly("5x^4 + 10 y^4 + 5/2 z^4", ("x", "y", "z")))
    assert C.reduce(5) == {(4, 0, 0): 2, (0, 4, 0): 4, (0, 0, 4): 1}
