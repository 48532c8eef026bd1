import json
import os
import pathlib
import shutil
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "schemas"


@pytest.fixture(scope="session")
def validate():
    jsonschema = pytest.importorskip("jsonschema")
    referencing = pytest.importorskip("referencing")
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], referencing.Resource.from_contents(doc)))
    registry = referencing.Registry().with_resources(resources)

    def check(document):
        schema = registry.contents(document["schema"] + ".schema.json")
        jsonschema.Draft202012Validator(schema, registry=registry).validate(document)
        return document

    return check


@pytest.fixture(scope="session")
def cli():
    exe = os.environ.get("ZROUPOID_CLI") or shutil.which("zroupoid")
    if not exe:
        pytest.skip("zroupoid executable not available")

    def run(*args, stdin=None):
        return subprocess.run([exe, *args], input=stdin, capture_output=True, text=True)

    return run
