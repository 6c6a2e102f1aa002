"""
Driving the command line in batch mode
======================================

The CLI mirrors the library.  Every subcommand renders both text and
JSON, and the JSON form round-trips byte for byte, which makes it safe
to archive verdicts and diff them across versions.  Batches validate
every entry before running any, so a typo late in the file cannot
waste a long run.
"""

import json
import pathlib
import tempfile

from lagcut.cli import run

# One subcommand, both formats.
code, text = run(["check", "lens", "--p", "7", "--n", "3"])
print(text)

code, out = run(["check", "lens", "--p", "7", "--n", "3", "--format", "json"])
doc = json.loads(out)
print("admissible m from JSON:", doc["constraints"]["m"])
print()

# Negative rationals work after the flag even though they start with
# a dash; the parser merges them into --level=... before argparse.
code, out = run(["classes", "--euler", "2", "--level", "-1/3", "--format", "json"])
doc = json.loads(out)
print("K_L at euler 2, level -1/3:", doc["K_L"])
print()

# A batch file is a JSON array of {"command": ..., "args": [...]}.
entries = [
    {"command": "identity", "args": ["--d", "8", "--modulus", "4"]},
    {"command": "check", "args": ["sphere", "--d", "5", "--euler", "4", "--grading", "8"]},
    {"command": "fold", "args": ["--candidate", "prodsph:l=2,m=4", "--modulus", "8"]},
]
with tempfile.TemporaryDirectory() as tmp:
    path = pathlib.Path(tmp) / "jobs.json"
    path.write_text(json.dumps(entries), encoding="ascii")
    code, out = run(["--batch", str(path)])

# Batch output is always canonical JSON, one report per entry.
summary_key = {"identity": "holds", "check": "status", "fold": "two_periodic"}
print("aggregate exit code:", code)
for entry in json.loads(out):
    key = summary_key[entry["command"]]
    print("%-10s exit %d  %s = %s" % (entry["command"], entry["exit"], key, entry["report"][key]))
