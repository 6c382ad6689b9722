"""JSON schemas for the CLI outputs."""

import json
from importlib import resources

NAMES = ("field-info", "algebra", "homs", "classify", "codes", "scorecard")


def load(name: str) -> dict:
    if name not in NAMES:
        raise KeyError(name)
    return json.loads(resources.files(__name__).joinpath(f"{name}.json").read_text())
