"""Canonical JSON: sorted keys, two-space indent, trailing newline, integers
only.  Golden files and CLI output share this form so byte comparison works."""
from __future__ import annotations

import json


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def load_json_file(path) -> object:
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)
