import io
import logging
from pathlib import Path

import pandas as pd
import pytest

from src import cli, density
from src.golden import TAU

ROOT = Path(__file__).resolve().parents[1]
QUERIES = str(ROOT / "config" / "patterson_shifts.txt")


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def read_csv(text):
    return pd.read_csv(io.StringIO(text))


def test_table_default(capsys):
    code, out = run(capsys, "table")
    assert code == cli.EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "N,eta1,eta2,eta3,F1,F2,F3"
    assert len(lines) == 26
    assert lines[13] == "12,0.4318,0.1554,0.7082,1.9508,2.3511,0.8067"


def test_table_precision(capsys):
    code, out = run(capsys, "table", "--precision", "2", "--horizon", "3")
    assert code == cli.EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[1].startswith("0,-0.17,-0.45,0.11,")


def test_table_with_occupancy(capsys):
    code, out = run(capsys, "table", "--occupancy")
    assert code == cli.EXIT_OK
    frame = read_csv(out)
    assert frame.loc[frame["face_i"] == False, "N"].tolist() == [  # noqa: E712
        6, 11, 14, 19,
    ]
    assert frame.loc[frame["vertex_iii"], "N"].tolist() == [1, 4, 9, 17, 22]
    assert frame.loc[9, "terrace"] == 1
    assert "".join(frame["tile"].fillna("").iloc[9:19]) == "LLSLLSLSLL"


def test_table_to_file(capsys, tmp_path):
    target = tmp_path / "out" / "table.csv"
    code, out = run(capsys, "table", "--out", str(target))
    assert code == cli.EXIT_OK
    assert out == ""
    assert target.read_text(encoding="utf-8").startswith("N,eta1")


def test_table_pretty(capsys):
    code, out = run(capsys, "table", "--format", "pretty", "--horizon", "2")
    assert code == cli.EXIT_OK
    assert "eta1" in out.splitlines()[0]
    assert "," not in out


def test_table_svg_is_a_usage_error(capsys):
    code, _ = run(capsys, "table", "--format", "svg")
    assert code == cli.EXIT_USAGE


def test_config_file(capsys):
    code, out = run(
        capsys, "table", "--config", str(ROOT / "config" / "table_default.json")
    )
    assert code == cli.EXIT_OK
    assert len(out.splitlines()) == 26


def test_search_logs_first_match(capsys, caplog):
    caplog.set_level(logging.INFO)
    code, out = run(capsys, "search")
    assert code == cli.EXIT_OK
    assert "first match N=9" in caplog.text
    frame = read_csv(out)
    assert frame["start"].tolist() == [9]
    assert frame.loc[0, "shift_up_eta"] == pytest.approx(0.0807, abs=1e-4)
    assert frame.loc[0, "shift_down_eta"] == pytest.approx(-0.0498, abs=1e-4)


def test_search_all_occurrences(capsys):
    code, out = run(capsys, "search", "--all")
    assert code == cli.EXIT_OK
    frame = read_csv(out)
    assert frame["start"].tolist() == [1, 9]
    assert frame["interior"].tolist() == [False, True]


def test_search_invalid_pattern(capsys):
    code, _ = run(capsys, "search", "--pattern", "LLX")
    assert code == cli.EXIT_DOMAIN


def test_search_pattern_absent(capsys):
    code, _ = run(capsys, "search", "--pattern", "SS")
    assert code == cli.EXIT_DOMAIN


def test_spacing(capsys):
    code, out = run(capsys, "spacing")
    assert code == cli.EXIT_OK
    frame = read_csv(out)
    assert len(frame) == 10
    assert "".join(frame["tile"]) == "LLSLLSLSLL"
    assert frame["spacing_angstrom"].sum() == pytest.approx(58.43, abs=0.01)
    assert frame.loc[0, "from_terrace"] == 1
    assert frame.loc[9, "to_terrace"] == 11


def test_section_decagon(capsys):
    code, out = run(capsys, "section", "--eta", "0")
    assert code == cli.EXIT_OK
    frame = read_csv(out)
    assert list(frame.columns) == ["index", "x", "y"]
    assert len(frame) == 10


def test_section_golden_expression(capsys):
    code, out = run(capsys, "section", "--eta", "tau/(tau+2)")
    assert code == cli.EXIT_OK
    assert len(read_csv(out)) >= 3


def test_section_svg(capsys, tmp_path):
    target = tmp_path / "section.svg"
    code, _ = run(
        capsys, "section", "--eta", "0.3", "--format", "svg", "--out",
        str(target),
    )
    assert code == cli.EXIT_OK
    text = target.read_text(encoding="utf-8")
    assert text.startswith("<?xml")
    assert 'id="section"' in text
    assert "eta=0.3" in text


def test_section_outside_is_a_domain_error(capsys):
    code, _ = run(capsys, "section", "--eta", "2")
    assert code == cli.EXIT_DOMAIN


def test_unreadable_eta_is_a_usage_error(capsys):
    code, _ = run(capsys, "section", "--eta", "abc")
    assert code == cli.EXIT_USAGE


def test_density_profile(capsys):
    code, out = run(capsys, "density", "--step", "1/10")
    assert code == cli.EXIT_OK
    frame = read_csv(out)
    # 11 grid points plus the three breakpoints
    assert len(frame) == 14
    limit = frame[frame["marker"] == "fibonacci_limit"]
    assert limit["F"].tolist() == pytest.approx([0.7265], abs=1e-4)
    assert (frame["marker"] == "breakpoint").sum() == 2
    assert frame.loc[0, "D_absolute"] == pytest.approx(density.D0(), abs=1e-4)


def test_density_by_kind(capsys):
    code, out = run(
        capsys, "density", "--step", "1/2", "--kind", "bergman_face_vertex"
    )
    assert code == cli.EXIT_OK
    frame = read_csv(out)
    assert frame.loc[0, "D_absolute"] == pytest.approx(
        5 * density.D0(), abs=1e-4
    )


def test_patterson_report(capsys):
    code, out = run(capsys, "patterson", "--queries", QUERIES)
    assert code == cli.EXIT_OK
    frame = read_csv(out)
    assert frame["label"].tolist() == ["0", "I'", "A", "B", "C"]
    assert list(frame.columns[2:]) == ["P(eta1)", "P(eta2)", "P(eta3)"]
    assert frame.loc[1, "v_par_angstrom"] == pytest.approx(7.758, abs=1e-3)


def test_patterson_normalized_circle(capsys):
    code, out = run(
        capsys, "patterson", "--queries", QUERIES, "--mode", "circle",
        "--normalize",
    )
    assert code == cli.EXIT_OK
    frame = read_csv(out)
    assert frame.loc[0, ["P(eta1)", "P(eta2)", "P(eta3)"]].tolist() == [
        1.0, 1.0, 1.0,
    ]


def test_patterson_missing_query_file(capsys, tmp_path):
    code, _ = run(
        capsys, "patterson", "--queries", str(tmp_path / "missing.txt")
    )
    assert code == cli.EXIT_USAGE


def test_surface_needs_two_distances(capsys):
    code, _ = run(capsys, "surface", "--step", "1/2", "--d-points", "1")
    assert code == cli.EXIT_USAGE


def test_patterson_negative_row(capsys):
    code, _ = run(capsys, "patterson", "--queries", QUERIES, "--row", "-1")
    assert code == cli.EXIT_USAGE


def test_surface(capsys):
    code, out = run(
        capsys, "surface", "--step", "1/2", "--d-points", "5"
    )
    assert code == cli.EXIT_OK
    frame = read_csv(out)
    # five grid points plus six signed breakpoints
    assert frame.shape == (11, 6)
    assert frame.columns[0] == "eta"


def test_constants(capsys):
    code, out = run(
        capsys, "constants", "--reference", str(ROOT / "reference_values.yaml")
    )
    assert code == cli.EXIT_OK
    frame = read_csv(out).set_index("name")
    assert frame.loc["D0", "computed"] == pytest.approx(0.0126, abs=1e-4)
    assert frame.loc["t_eq", "computed"] == pytest.approx(9.56, abs=0.01)
    assert frame.loc["pentagon_vertex_ratio", "computed"] == pytest.approx(
        float(TAU + 2), abs=1e-4
    )
    assert frame.loc["spacing_short", "experimental"] == 4.22
    assert frame.loc["hole_density", "experimental"] == pytest.approx(4.2e-3)


def test_extra_planes(capsys):
    code, out = run(capsys, "extra")
    assert code == cli.EXIT_OK
    frame = read_csv(out)
    assert frame["label"].tolist() == ["1-", "3+", "6+", "9-", "11+"]


def test_figures(capsys, tmp_path):
    code, _ = run(
        capsys, "figures", "--figure", "area", "--out-dir", str(tmp_path),
        "--queries", QUERIES,
    )
    assert code == cli.EXIT_OK
    assert (tmp_path / "area_profile.svg").exists()


def test_patterson_profile_figure(capsys, tmp_path):
    code, _ = run(
        capsys, "figures", "--figure", "profile", "--out-dir", str(tmp_path),
        "--queries", QUERIES,
    )
    assert code == cli.EXIT_OK
    assert (tmp_path / "patterson_profile.svg").exists()


def test_unknown_figure(capsys, tmp_path):
    code, _ = run(
        capsys, "figures", "--figure", "nope", "--out-dir", str(tmp_path),
        "--queries", QUERIES,
    )
    assert code == cli.EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        [],
        ["table", "--precision", "0"],
        ["table", "--horizon", "ten"],
    ],
)
def test_usage_errors(capsys, argv):
    assert cli.main(argv) == cli.EXIT_USAGE


def test_eta0_outside_window_is_a_domain_error(capsys):
    assert cli.main(["table", "--eta0", "3"]) == cli.EXIT_DOMAIN


def test_help_exits_cleanly(capsys):
    assert cli.main(["--help"]) == cli.EXIT_OK
