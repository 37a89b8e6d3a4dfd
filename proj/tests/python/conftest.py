import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "schemas"


@pytest.fixture(scope="session")
def edp_cli():
    exe = os.environ.get("EDP_CLI")
    if not exe or not pathlib.Path(exe).exists():
        pytest.skip("EDP_CLI not set")

    def run(*args, env=None):
        full_env = dict(os.environ)
        full_env.pop("EDP_THREADS", None)
        if env:
            full_env.update(env)
        return subprocess.run([exe, *map(str, args)], capture_output=True, text=True, env=full_env)

    return run


@pytest.fixture(scope="session")
def schema():
    def load(name):
        return json.loads((SCHEMAS / f"{name}.schema.json").read_text())

    return load
