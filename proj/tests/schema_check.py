"""Validates CLI JSON reports of the fixtures against docs/report.schema.json."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

cli, root = sys.argv[1], Path(sys.argv[2])
schema = json.loads((root / "docs" / "report.schema.json").read_text())
validator = jsonschema.Draft202012Validator(schema)
fixtures = sorted((root / "tests" / "fixtures").glob("*.ml1"))
for args in (["--granules"], ["--metric", "cpcm"], []):
    for f in fixtures:
        out = subprocess.run([cli, "analyze", str(f), "--format", "json", *args], check=True,
                             capture_output=True, text=True).stdout
        validator.validate(json.loads(out))
out = subprocess.run([cli, "analyze", *map(str, fixtures), "--format", "json"], check=True,
                     capture_output=True, text=True).stdout
docs = json.loads(out)
assert isinstance(docs, list) and len(docs) == len(fixtures)
for d in docs:
    validator.validate(d)
print(f"{len(fixtures)} fixtures validate")
