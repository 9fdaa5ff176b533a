"""
JSON documents, the CLI and the verification harness
====================================================

Fans travel as ``torus-roots/1`` documents. The same commands are available
as ``torus-roots <command>`` on the shell.
"""

import json

from torus_roots import io
from torus_roots.cli import main
from torus_roots.golden_corpus import golden_paths
from torus_roots.harness import run_verify

path = golden_paths()["a3_minus_line"]
doc = io.parse_fan_document(path.read_text())
print("document:", doc.to_json())
fan = io.document_to_fan(doc)
# Documents may list rays in any order; the fan they describe is canonical.
again = io.document_to_fan(io.parse_fan_document(io.dump_fan_document(io.fan_to_document(fan))))
print("round trip:", again == fan)

# Same as: torus-roots reconstruct --input a3_minus_line.json --json
code = main(["reconstruct", "--input", str(path), "--json"])
print("exit code", code)

# Seeded random suites; every instance seed is recorded for replay.
rep = run_verify("all", instances=3, seed=42)
print(json.dumps({k: rep[k] for k in ("suite", "passed", "failed")}),
      [r["seed"] for r in rep["results"]])
