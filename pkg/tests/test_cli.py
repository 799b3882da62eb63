"""JSON round trips and command line behavior, including exit codes."""

from __future__ import annotations

import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from diffchar import fixtures, io
from diffchar.cli import main
from diffchar.simplicial import identity_map, mapping_cone, staircase_product
from diffchar.cochain import Cochain
from diffchar.characters import iota, random_character
from diffchar.relative import find_section


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


# -- serialization round trips ------------------------------------------------


def test_fraction_strings_round_trip():
    for x in (Fraction(0), Fraction(1, 3), Fraction(-7, 2), Fraction(5)):
        assert io.parse_fraction(io.fraction_to_str(x)) == x


def test_complex_round_trip_over_all_fixtures():
    for name in fixtures.complex_names():
        K = fixtures.complex_by_name(name)
        assert io.complex_from_json(io.complex_to_json(K)) == K


def test_chain_round_trip():
    for z in (fixtures.gamma_first(), fixtures.torsion_loop(),
              fixtures.vertex_difference()):
        back = io.chain_from_json(io.chain_to_json(z), z.complex)
        assert back == z


def test_cochain_round_trip():
    rng = random.Random(71)
    h = random_character(fixtures.projective_plane(), 2, rng)
    for c in (h.curvature, h.lift, h.mu):
        back = io.cochain_from_json(io.cochain_to_json(c), c.complex)
        assert back == c


def test_map_round_trip():
    phi = fixtures.torsion_loop_map()
    back = io.map_from_json(io.map_to_json(phi), phi.source, phi.target)
    assert back == phi


def test_character_round_trip():
    rng = random.Random(73)
    for name in ("S1_3", "T2_9", "RP2_6"):
        K = fixtures.complex_by_name(name)
        h = random_character(K, 1, rng)
        assert io.character_from_json(io.character_to_json(h), K) == h


def test_relative_character_round_trip():
    cone = fixtures.equator_cone()
    rng = random.Random(79)
    s = find_section(random_character(cone.phi.target, 2, rng), cone)
    back = io.rel_character_from_json(io.rel_character_to_json(s), cone)
    assert back == s


# -- commands -----------------------------------------------------------------


def test_homology_torus(capsys):
    code, rep = _run(capsys, ["homology", "--complex", "T2_9", "--degree", "1"])
    assert code == 0
    assert rep["result"]["betti"] == 2
    assert rep["result"]["torsion"] == []
    assert len(rep["result"]["generators"]) == 2


def test_homology_projective_plane(capsys):
    code, rep = _run(capsys, ["homology", "--complex", "RP2_6", "--degree", "1"])
    assert code == 0
    assert rep["result"]["betti"] == 0
    assert rep["result"]["torsion"] == [2]


def test_homology_point(capsys):
    code, rep = _run(capsys, ["homology", "--complex", "point", "--degree", "0"])
    assert code == 0
    assert rep["result"]["betti"] == 1


def test_eval_winding(capsys):
    code, rep = _run(capsys, ["eval", "--character", "i", "--chain", "v1_minus_v0"])
    assert code == 0
    assert rep["result"]["phase"] == "1/3"


def test_eval_torus_loops(capsys):
    for chain in ("gamma1", "gamma2"):
        code, rep = _run(capsys, ["eval", "--character", "ixi", "--chain", chain])
        assert code == 0
        assert rep["result"]["phase"] == "0"


def test_eval_degree_mismatch_is_an_input_error(capsys):
    code, rep = _run(capsys, ["eval", "--character", "i", "--chain", "circle_fund"])
    assert code == 2
    assert "error" in rep


def test_eval_rejects_non_cycles(capsys, tmp_path):
    chain = tmp_path / "open.json"
    chain.write_text(json.dumps({"degree": 1, "coeffs": {"[0,1]": 1}}))
    code, rep = _run(capsys, ["eval", "--character", "ju",
                              "--complex", "RP2_6", "--chain", str(chain)])
    assert code == 2
    assert "not a cycle" in rep["error"]


def test_iota_command(capsys, tmp_path):
    S1 = fixtures.circle()
    eta = Cochain(S1, 0, {(1,): Fraction(1, 3), (2,): Fraction(2, 3)}, "Q")
    f = tmp_path / "eta.json"
    f.write_text(json.dumps(io.cochain_to_json(eta)))
    code, rep = _run(capsys, ["iota", "--complex", "S1_3", "--cochain", str(f)])
    assert code == 0
    h = io.character_from_json(rep["result"]["character"], S1)
    assert h == iota(eta)


def test_j_command(capsys, tmp_path):
    ju = fixtures.rp2_flat_character()
    f = tmp_path / "u.json"
    f.write_text(json.dumps(io.cochain_to_json(ju.lift)))
    code, rep = _run(capsys, ["j", "--complex", "RP2_6", "--cochain", str(f)])
    assert code == 0
    h = io.character_from_json(rep["result"]["character"], fixtures.projective_plane())
    assert h == ju


def test_product_command(capsys):
    code, rep = _run(capsys, ["product", "--complex", "RP2_6",
                              "--character", "ju", "--character", "ju"])
    assert code == 0
    h = io.character_from_json(rep["result"]["character"], fixtures.projective_plane())
    assert h.degree == 4


def test_xproduct_command(capsys):
    from diffchar.cochain import pair
    from diffchar.simplicial import fundamental_cycle

    code, rep = _run(capsys, ["xproduct", "--character", "i", "--character", "i"])
    assert code == 0
    P = io.complex_from_json(rep["result"]["product_complex"])
    h = io.character_from_json(rep["result"]["character"], P)
    assert h.degree == 2
    # total curvature is the winding product; sign follows the chosen orientation
    assert pair(h.curvature, fundamental_cycle(P)) in (1, -1)


def test_fiber_integrate_command(capsys):
    code, rep = _run(capsys, ["fiber-integrate", "--character", "ixi",
                              "--complex", "S1_3", "--fiber", "S1_3"])
    assert code == 0
    h = io.character_from_json(rep["result"]["character"], fixtures.circle())
    assert h == fixtures.winding_character()


def test_boundary_fiber_integrate_command(capsys, tmp_path):
    S1 = fixtures.circle()
    E = staircase_product(S1, fixtures.interval())
    rng = random.Random(83)
    h = random_character(E, 2, rng)
    f = tmp_path / "h.json"
    f.write_text(json.dumps(io.character_to_json(h)))
    code, rep = _run(capsys, ["boundary-fiber-integrate", "--character", str(f),
                              "--complex", "S1_3", "--fiber", "interval"])
    assert code == 0
    cone = mapping_cone(identity_map(S1))
    rel = io.rel_character_from_json(rep["result"]["relative"], cone)
    cov = io.cochain_from_json(rep["result"]["cov"], S1)
    assert rel.cov == cov


def test_find_section_success(capsys):
    code, rep = _run(capsys, ["find-section", "--character", "ju",
                              "--map", "torsion_loop"])
    assert code == 0
    assert rep["result"]["section"] is not None


def test_find_section_obstruction(capsys, tmp_path):
    f = tmp_path / "id.json"
    f.write_text(json.dumps({"vertex_map": [0, 1, 2, 3, 4, 5]}))
    code, rep = _run(capsys, ["find-section", "--character", "ju",
                              "--map", str(f),
                              "--map-source", "RP2_6", "--complex", "RP2_6"])
    assert code == 1
    assert rep["result"]["section"] is None
    witness = io.cochain_from_json(rep["result"]["obstruction"],
                                   fixtures.projective_plane())
    assert witness.value((3, 4, 5)) == -1


def test_holonomy_command(capsys):
    code, rep = _run(capsys, ["holonomy", "--character", "ju",
                              "--map", "torsion_loop", "--chain", "circle_fund"])
    assert code == 0
    assert rep["result"]["phase"] == "1/2"


def test_verify_command(capsys):
    code, rep = _run(capsys, ["verify", "--suite", "relative-exact"])
    assert code == 0
    assert rep["result"]["pass"] is True
    assert all(c["pass"] for c in rep["result"]["checks"])


def test_verify_unknown_suite(capsys):
    code, rep = _run(capsys, ["verify", "--suite", "nope"])
    assert code == 2
    assert "nope" in rep["error"]


def test_unknown_fixture_is_an_input_error(capsys):
    code, rep = _run(capsys, ["homology", "--complex", "S3_9000", "--degree", "1"])
    assert code == 2


def test_malformed_json_reports_the_line(capsys, tmp_path):
    f = tmp_path / "broken.json"
    f.write_text('{"degree": 1,\n  "values": }')
    code, rep = _run(capsys, ["iota", "--complex", "S1_3", "--cochain", str(f)])
    assert code == 2
    assert "line 2" in rep["error"]


def test_missing_file_is_an_input_error(capsys, tmp_path):
    code, rep = _run(capsys, ["eval", "--character", str(tmp_path / "gone.json"),
                              "--complex", "S1_3", "--chain", "v1_minus_v0"])
    assert code == 2
    assert "no such file" in rep["error"]


def test_reports_are_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        code = main(["homology", "--complex", "RP2_6", "--degree", "1",
                     "--out", str(out)])
        capsys.readouterr()
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-c",
         "import sys; from diffchar.cli import main; "
         "sys.exit(main(['eval', '--character', 'i', '--chain', 'v1_minus_v0']))"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["phase"] == "1/3"