"""Regenerate the golden fan corpus and its expected reports.

Run from the repository root: ``python scripts/make_golden.py``.
"""
import contextlib
import io as _io
import json
from pathlib import Path

from torus_roots.cli import main

GOLDEN = Path(__file__).resolve().parents[1] / "src" / "torus_roots" / "golden"

E = lambda n: [[int(i == j) for j in range(n)] for i in range(n)]  # noqa: E731

FANS = {
    "a1": (1, E(1), [[0]], "affine line"),
    "a2": (2, E(2), [[0, 1]], "affine plane"),
    "a3": (3, E(3), [[0, 1, 2]], "affine 3-space"),
    "a2_minus_origin": (2, E(2), [[0], [1]], "punctured plane"),
    "a3_minus_origin": (3, E(3), [[0, 1], [0, 2], [1, 2]], "punctured 3-space"),
    "a3_minus_line": (3, E(3), [[0, 1], [0, 2]], "3-space minus the first coordinate axis"),
    "a2_mod_mu2": (2, [[1, 0], [1, 2]], [[0, 1]], "quadric cone A2/mu2"),
    "cylinder_2": (2, [[1, 0]], [[0]], "A1 x torus of rank 1"),
    "cylinder_3": (3, [[1, 0, 0]], [[0]], "A1 x torus of rank 2"),
    "torus_2": (2, [], [[]], "two-dimensional torus"),
}

COMMANDS = {"quasi-affine": [], "roots": ["--bound", "2"], "reconstruct": []}


def run(cmd, path):
    buf = _io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main([cmd, "--input", str(path), *COMMANDS[cmd]])
    assert code == 0, (cmd, path, code)
    return buf.getvalue()


def write_all():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, (rank, rays, cones, desc) in FANS.items():
        doc = {"schema_version": "torus-roots/1", "lattice_rank": rank, "rays": rays,
               "max_cones": cones, "metadata": {"name": name, "description": desc}}
        path = GOLDEN / f"{name}.json"
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        for cmd in COMMANDS:
            (GOLDEN / f"{name}.{cmd}.expected.json").write_text(run(cmd, path), encoding="utf-8")


if __name__ == "__main__":
    write_all()
