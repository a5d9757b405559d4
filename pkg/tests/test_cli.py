import json

import pytest

from nodalcodes import gf2
from nodalcodes.cli import run
from nodalcodes.gf2 import de, format_code, permute, simplex


def invoke(capsys, *argv):
    rc = run(list(argv))
    out = capsys.readouterr().out
    return rc, json.loads(out)


def write_code(tmp_path, name, code):
    path = tmp_path / name
    path.write_text(format_code(code))
    return str(path)


def test_report_shape(capsys):
    rc, rep = invoke(capsys, "code", "de", "3")
    assert rc == 0
    assert set(rep) == {"command", "inputs", "outputs", "derivation",
                        "status"}
    assert rep["command"] == "code de"
    assert rep["status"] == "ok"
    assert rep["outputs"]["length"] == 6
    assert rep["outputs"]["dim"] == 2


def test_report_round_trips(capsys):
    rc, rep = invoke(capsys, "classify", "involution", "--k2", "8")
    assert rep == json.loads(json.dumps(rep))


def test_pretty_flag(capsys):
    rc = run(["--pretty", "solve", "md"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "\n  " in out
    json.loads(out)
    rc = run(["solve", "md", "--pretty"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "\n  " in out


def test_code_analyze(capsys, tmp_path):
    path = write_code(tmp_path, "c.txt", de(2))
    rc, rep = invoke(capsys, "code", "analyze", path)
    assert rc == 0
    out = rep["outputs"]
    assert out["dim"] == 1
    assert out["is_doubly_even"] is True
    assert out["de_n"] == 2
    assert out["reduced_length"] == 4


def test_code_equiv(capsys, tmp_path):
    a = de(3)
    b = permute(a, (5, 4, 3, 2, 1, 0))
    pa = write_code(tmp_path, "a.txt", a)
    pb = write_code(tmp_path, "b.txt", b)
    rc, rep = invoke(capsys, "code", "equiv", pa, pb)
    assert rc == 0
    assert rep["outputs"]["equivalent"] is True
    perm = rep["outputs"]["permutation"]
    assert sorted(perm) == list(range(6))
    assert permute(a, tuple(perm)) == b


def test_code_equiv_negative(capsys, tmp_path):
    pa = write_code(tmp_path, "a.txt", de(2))
    pb = write_code(tmp_path, "b.txt", simplex(2))
    rc, rep = invoke(capsys, "code", "equiv", pa, pb)
    assert rc == 0
    assert rep["outputs"]["equivalent"] is False
    assert rep["outputs"]["permutation"] is None


def test_code_recognize_de(capsys, tmp_path):
    path = write_code(tmp_path, "s.txt", simplex(3))
    rc, rep = invoke(capsys, "code", "recognize-de", path)
    assert rc == 0
    assert rep["outputs"] == {"n": None, "essentially_de": False}


def test_enumerate_cache_is_deterministic(capsys, tmp_path):
    args = ("code", "enumerate", "--length", "6", "--weights", "4",
            "--dim-min", "1", "--dim-max", "6",
            "--cache", str(tmp_path))
    rc, rep = invoke(capsys, *args)
    assert rc == 0
    cache_file = rep["outputs"]["cache_file"]
    first = open(cache_file, "rb").read()
    assert first
    rc2, rep2 = invoke(capsys, *args)
    second = open(cache_file, "rb").read()
    assert first == second
    assert rep["outputs"]["codes"] == rep2["outputs"]["codes"]
    lines = first.decode().splitlines()
    assert len(lines) == rep["outputs"]["count"]
    for line in lines:
        row = json.loads(line)
        assert set(row) == {"length", "dim", "generators",
                            "weight_enumerator"}


def test_enumerate_cache_hit_skips_recomputation(capsys, tmp_path):
    args = ("code", "enumerate", "--length", "4", "--weights", "4",
            "--dim-min", "1", "--dim-max", "4",
            "--cache", str(tmp_path))
    rc, rep = invoke(capsys, *args)
    path = rep["outputs"]["cache_file"]
    sentinel = json.dumps(
        {"length": 4, "dim": 1, "generators": ["0000"],
         "weight_enumerator": {"0": 1}},
        sort_keys=True, separators=(",", ":"),
    )
    with open(path, "w") as fh:
        fh.write(sentinel + "\n" + sentinel + "\n")
    rc, rep = invoke(capsys, *args)
    assert rep["outputs"]["count"] == 2  # served from the cache verbatim


def test_enumerate_env_overrides_cache_flag(capsys, tmp_path, monkeypatch):
    flag_dir = tmp_path / "flag"
    env_dir = tmp_path / "env"
    monkeypatch.setenv("NODALCODES_CACHE", str(env_dir))
    rc, rep = invoke(capsys, "code", "enumerate", "--length", "4",
                     "--weights", "4", "--dim-min", "1", "--dim-max", "4",
                     "--cache", str(flag_dir))
    assert rc == 0
    assert rep["outputs"]["cache_file"].startswith(str(env_dir))
    assert not flag_dir.exists()


def test_lattice_build_and_identify(capsys, tmp_path):
    code_path = write_code(tmp_path, "de2.txt", de(2))
    lat_path = str(tmp_path / "lat.json")
    rc, rep = invoke(capsys, "lattice", "build", code_path,
                     "--scaling", "half", "--out", lat_path)
    assert rc == 0
    assert rep["outputs"]["rank"] == 4
    rc, rep = invoke(capsys, "lattice", "identify", lat_path)
    assert rc == 0
    out = rep["outputs"]
    assert out["root_count"] == 24
    assert out["components"] == ["D4"]
    assert out["discriminant"] == "4"


def test_cover_invariants_cli(capsys):
    rc, rep = invoke(capsys, "cover", "invariants", "--chi", "1",
                     "--k2", "4", "--r", "1", "--m", "4")
    assert rc == 0
    assert rep["outputs"]["contracted"]["K2"] == 8
    assert rep["outputs"]["cover"]["chi"] == 1
    assert rep["outputs"]["blowdowns"] == 4
    assert rep["derivation"]


def test_cover_invariants_non_integral_chi_is_error(capsys):
    rc, rep = invoke(capsys, "cover", "invariants", "--chi", "1",
                     "--k2", "4", "--r", "1", "--m", "2")
    assert rc == 1
    assert rep["status"] == "error"
    assert rep["outputs"] == {}
    assert rep["error"]


def test_bounds(capsys):
    rc, rep = invoke(capsys, "bound", "isotropic", "--k", "8",
                     "--rho", "10")
    assert (rc, rep["outputs"]["bound"]) == (0, 3)
    rc, rep = invoke(capsys, "bound", "miyaoka", "--k2", "0", "--c2", "12")
    assert (rc, rep["outputs"]["max_nodes"]) == (0, 8)
    assert rep["outputs"]["assumptions"]
    rc, rep = invoke(capsys, "bound", "min-m", "--r", "4")
    assert (rc, rep["outputs"]["min_m"]) == (0, 8)


def test_classify_involution_9_contradiction(capsys):
    rc, rep = invoke(capsys, "classify", "involution", "--k2", "9")
    assert rc == 2
    assert rep["status"] == "contradiction"
    assert rep["derivation"][-1]["values"]["rho_Y"] == 8
    assert len(rep["outputs"]["cases"]) == 1


def test_classify_involution_8_ok(capsys):
    rc, rep = invoke(capsys, "classify", "involution", "--k2", "8")
    assert rc == 0
    assert rep["status"] == "ok"
    labels = [c["label"] for c in rep["outputs"]["cases"]]
    assert labels.count("contradiction") == 1
    assert len(labels) == 6


def test_classify_fibers(capsys):
    rc, rep = invoke(capsys, "classify", "fibers", "--euler", "12",
                     "--nodes", "8")
    assert rc == 0
    assert rep["outputs"]["multisets"] == [["I0star", "I0star"]]


def test_classify_kr_pairs(capsys):
    rc, rep = invoke(capsys, "classify", "kr-pairs")
    assert rc == 0
    assert rep["outputs"]["pairs"] == [
        [4, 1, 4], [6, 2, 6], [7, 3, 7], [8, 3, 7]
    ]


def test_classify_thm_mt(capsys):
    rc, rep = invoke(capsys, "classify", "thm-mt", "--rho", "9")
    assert rc == 2
    assert rep["status"] == "contradiction"
    rc, rep = invoke(capsys, "classify", "thm-mt", "--rho", "8")
    assert rc == 0
    assert rep["outputs"]["survives"] is True
    assert rep["outputs"]["attained_r"] == [3]
    rc, rep = invoke(capsys, "classify", "thm-mt", "--rho", "2")
    assert rc == 0


def test_classify_small_rho(capsys):
    rc, rep = invoke(capsys, "classify", "small-rho", "--rho", "3")
    assert rc == 0
    assert len(rep["outputs"]["cases"]) == 2


def test_solve_md_cli(capsys):
    rc, rep = invoke(capsys, "solve", "md")
    assert rc == 0
    assert rep["outputs"]["solutions"] == [
        {"m": 3, "d": 3, "genus": 5},
        {"m": 4, "d": 2, "genus": 3},
    ]
    assert rep["derivation"]


def test_missing_file_is_error(capsys, tmp_path):
    rc, rep = invoke(capsys, "code", "analyze",
                     str(tmp_path / "absent.txt"))
    assert rc == 1
    assert rep["status"] == "error"
    assert rep["outputs"] == {}
    assert "absent" in rep["error"]


def test_malformed_code_file_is_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("not a code\n")
    rc, rep = invoke(capsys, "code", "analyze", str(path))
    assert rc == 1
    assert rep["status"] == "error"


def test_unknown_subcommand_is_error(capsys):
    rc, rep = invoke(capsys, "frobnicate")
    assert rc == 1
    assert rep["status"] == "error"


def test_missing_leaf_subcommand_is_error(capsys):
    rc, rep = invoke(capsys, "code")
    assert rc == 1
    assert rep["status"] == "error"


def test_code_file_round_trip_through_cli(capsys, tmp_path):
    # the on-disk format written here must be what analyze parses
    code = gf2.make_code(["1111"], 4)
    path = write_code(tmp_path, "c.txt", code)
    with open(path) as fh:
        assert fh.read() == "4 1\n1111\n"
    rc, rep = invoke(capsys, "code", "analyze", path)
    assert rc == 0
    assert rep["outputs"]["generators"] == ["1111"]
