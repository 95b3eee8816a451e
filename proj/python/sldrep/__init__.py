"""Decorated singular link diagrams: certificate checks, decoration search and obstructions.

Reports are plain dicts with the same layout as the JSON printed by the
``sldrep`` command-line tool.
"""

import json
from pathlib import Path

from . import _sldrep
from ._sldrep import canonicalize, group_order, perm_matrix, run_cli

__all__ = [
    "bundle",
    "canon",
    "canonicalize",
    "check",
    "exit_code",
    "group_order",
    "obstruct",
    "perm_matrix",
    "run_cli",
    "search",
]


def _text(source):
    if isinstance(source, Path):
        return source.read_text()
    return source


def check(source, all_sw_paths=False):
    return json.loads(_sldrep.check_json(_text(source), all_sw_paths))


def search(source, group="", dedup="so3_canonical", allow_any_hopf=False, threads=1):
    return json.loads(_sldrep.search_json(_text(source), group, dedup, allow_any_hopf, threads))


def obstruct(b2=None, summands=()):
    return json.loads(_sldrep.obstruct_json(b2, list(summands)))


def bundle(b1, b2, c2):
    return json.loads(_sldrep.bundle_json(b1, b2, c2))


def canon(source):
    return json.loads(_sldrep.canon_json(_text(source)))


def exit_code(report):
    return _sldrep.exit_code(json.dumps(report))
