"""JSON schema bundle generated from the pydantic response models.

The schemas shipped under ``starq/schemas`` are a frozen copy of this
bundle; a test keeps the two in sync.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Dict

from . import models

_PUBLISHED = {
    "verdict": models.VerdictResponse,
    "orbit": models.OrbitResponse,
    "enumerate": models.EnumerateResponse,
    "families": models.FamiliesResponse,
    "degree": models.DegreeResponse,
    "jh": models.JHResponse,
    "fock_check": models.FockCheckResponse,
    "cuspidal": models.CuspidalResponse,
    "selftest": models.SelftestResponse,
    "error": models.ErrorResponse,
}


def bundle() -> Dict[str, dict]:
    return {name: model.model_json_schema() for name, model in _PUBLISHED.items()}


def render() -> Dict[str, str]:
    return {
        f"{name}.json": json.dumps(schema, indent=2, sort_keys=True) + "\n"
        for name, schema in bundle().items()
    }


def shipped() -> Dict[str, str]:
    out = {}
    root = resources.files("starq") / "schemas"
    for entry in root.iterdir():
        if entry.name.endswith(".json"):
            out[entry.name] = entry.read_text()
    return out


def write(directory) -> None:
    from pathlib import Path

    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    for name, text in render().items():
        (target / name).write_text(text)


if __name__ == "__main__":  # pragma: no cover
    import pathlib
    import sys

    where = sys.argv[1] if len(sys.argv) > 1 else \
        pathlib.Path(__file__).resolve().parent.parent / "schemas"
    write(where)
    print(f"wrote schemas to {where}")
