"""Command-line surface: formats, pipelines, exit codes, determinism."""

import json
import subprocess
import sys

from tcircle import CircleElement, pseudo_rotation, random_element
from tcircle.cli import run_command


def run(argv, stdin=""):
    return run_command(argv, stdin)


def test_gamma_and_rot_pipeline():
    code, out, err = run(["el", "gamma", "3"])
    assert code == 0 and err == ""
    code2, out2, _ = run(["dyn", "rot", "-"], stdin=out)
    assert code2 == 0
    assert out2 == "1/3\n"


def test_kth_commands():
    assert run(["kth", "wh", "5"]) == (0, "1\n", "")
    assert run(["kth", "theta", "6", "1"]) == (0, "0\n", "")
    assert run(["kth", "morphisms", "2", "4"]) == (0, "1\n", "")
    code, out, _ = run(["kth", "growth", "5"])
    assert out == "0 0 1 4 11\n"
    code, out, _ = run(["kth", "fj", "1", "--kmax", "6", "--json"])
    assert json.loads(out)["total"] == 1
    code, out, _ = run(["kth", "fj", "0", "--kmax", "3"])
    assert out.endswith("total 3\n")


def test_el_commands():
    g3 = pseudo_rotation(3).to_json()
    code, out, _ = run(["el", "pow", "-", "3"], stdin=g3)
    assert code == 0
    assert CircleElement.from_json(out) == pseudo_rotation(3) ** 3
    code, out, _ = run(["el", "eval", "-", "1/2"], stdin=g3)
    assert out == "3/4\n"
    code, out, _ = run(["el", "eq", "-", "-"], stdin=g3)
    assert code == 3  # stdin may only feed one element
    code, out, _ = run(["el", "random", "--seed", "5", "--complexity", "2"])
    assert CircleElement.from_json(out) == random_element(5, 2)


def test_cent_and_conj_commands(tmp_path):
    g2 = tmp_path / "g2.json"
    g2.write_text(pseudo_rotation(2).to_json())
    g3 = tmp_path / "g3.json"
    g3.write_text(pseudo_rotation(3).to_json())

    code, out, _ = run(["cent", "ctx", str(g2)])
    assert out == "q=2 p=1 s=1 a=1/2\n"
    code, out, _ = run(["cent", "check", str(g2), str(g3)])
    assert out == "false\n"
    code, out, _ = run(["cent", "lift", str(g2), str(g3)])
    sigma = CircleElement.from_json(out)
    code, out, _ = run(["cent", "pi", str(g2), "-"], stdin=sigma.to_json())
    assert CircleElement.from_json(out) == pseudo_rotation(3)
    code, out, _ = run(["cent", "defect", str(g2), str(g3), str(g3)])
    assert code == 0 and out.strip().isdigit()
    code, out, _ = run(["conj", "to-gamma", str(g3)])
    assert CircleElement.from_json(out) == CircleElement.from_json('{"bp":[["0","0"]]}')


def test_exit_codes():
    # validation failure: slope 3/4 is not a power of two
    bad = '{"bp":[["0","0"],["1/2","3/8"]]}'
    code, out, err = run(["el", "eval", "-", "0"], stdin=bad)
    assert code == 1 and "invalid element" in err

    # domain error: conjugating a non-torsion element
    fgen = '{"bp":[["0","0"],["1/2","1/4"],["3/4","1/2"]]}'
    code, out, err = run(["conj", "to-gamma", "-"], stdin=fgen)
    assert code == 2

    # usage/parse errors
    code, _, _ = run(["el", "eval", "nonexistent.json", "0"])
    assert code == 3
    code, _, _ = run(["el", "eval", "-", "1/3"], stdin=pseudo_rotation(2).to_json())
    assert code == 3
    code, _, _ = run(["dyn", "rot", "-"], stdin="{not json")
    assert code == 3
    code, _, _ = run(["el", "bogus"])
    assert code == 3


def test_round_trip_and_determinism():
    for seed in range(25):
        g = random_element(seed, 3)
        text = g.to_json() + "\n"
        code, out, _ = run(["el", "pow", "-", "1"], stdin=text)
        assert code == 0 and out == text
    a = run(["kth", "fj", "4", "--kmax", "12"])
    b = run(["kth", "fj", "4", "--kmax", "12"])
    assert a == b


def test_json_flag():
    code, out, _ = run(["kth", "wh", "5", "--json"])
    assert json.loads(out) == {"rank": 1}
    code, out, _ = run(["dyn", "rot", "-", "--json"], stdin=pseudo_rotation(3).to_json())
    assert json.loads(out) == {"rotation": "1/3"}
    code, out, _ = run(["dyn", "rot", "-", "--estimate", "4", "--json"],
                       stdin=pseudo_rotation(3).to_json())
    assert json.loads(out) == {"estimate": "3/8", "bound": "1/4"}


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tcircle", "kth", "wh", "12"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1\n"
