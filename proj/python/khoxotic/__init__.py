"""Exact Khovanov homology over Z.

Thin wrapper over the C++ engine. Reports come back as dicts with the same
schema the command line writes with --json.
"""

import json
import os
import re
from pathlib import Path

from . import _core
from ._core import (
    CONVENTION_VERSION,
    InfeasibleError,
    InputError,
    MapError,
    ParseError,
    braid_pd,
    components,
    crossings,
    grq,
    jones,
    mirror_pd,
    normalize_pd,
    pretzel_pd,
    torus_link_pd,
    two_saddle_value,
)

__all__ = [
    "CONVENTION_VERSION",
    "InfeasibleError",
    "InputError",
    "MapError",
    "ParseError",
    "braid_pd",
    "components",
    "crossings",
    "data_dir",
    "grq",
    "homology",
    "jones",
    "mirror_pd",
    "movie_check",
    "normalize_pd",
    "pretzel_pd",
    "snappy_pd",
    "theorem1",
    "torus_link_pd",
    "torus_table",
    "two_saddle_value",
    "verify_hs",
]


def data_dir():
    env = os.environ.get("KHOXOTIC_DATA_DIR")
    if env:
        return env
    here = Path(__file__).resolve().parent / "data"
    if here.is_dir():
        return str(here)
    # running from a source checkout
    return str(Path(__file__).resolve().parents[2] / "data")


def snappy_pd(pd):
    """X entries as a list of 4-tuples, the form snappy.Link accepts.

    Crossingless components have no PD entry and are dropped.
    """
    text = normalize_pd(pd)
    return [tuple(int(a) for a in m.split(",")) for m in re.findall(r"X\[([^\]]*)\]", text)]


def homology(pd, window=""):
    """Nonzero groups as a list of dicts {i, j, rank, torsion}."""
    return [
        {"i": i, "j": j, "rank": r, "torsion": [int(t) for t in tors]}
        for i, j, r, tors in _core.homology(pd, window)
    ]


def _report(packed):
    text, code, summary = packed
    out = json.loads(text)
    out["exit_code"] = code
    out["summary"] = summary
    return out


def verify_hs(k=1, cache_dir="", force=False, self_test=False):
    return _report(_core.verify_hs(k, data_dir(), cache_dir, force, self_test))


def theorem1(k=1, cache_dir="", force=False, self_test=False):
    return _report(_core.theorem1(k, data_dir(), cache_dir, force, self_test))


def torus_table(max_n, cache_dir=""):
    return _report(_core.torus_table(max_n, cache_dir))


def movie_check(path):
    return _report(_core.movie_check(str(path)))
