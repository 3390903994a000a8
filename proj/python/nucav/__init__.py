"""Thin-film x-ray cavity toolkit: effective two-level parameters, Fano
reflectance, complex-angle mode structure and inverse design."""

import os

try:
    from . import _core  # installed package layout
except ImportError:  # in-tree build: the extension sits on sys.path
    import _core

for _name in dir(_core):
    if not _name.startswith("_"):
        globals()[_name] = getattr(_core, _name)
design = _core.design


def default_db_dir():
    """Database directory: $NUCAV_DB, the packaged data, or ./data."""
    env = os.environ.get("NUCAV_DB")
    if env:
        return env
    packaged = os.path.join(os.path.dirname(__file__), "data")
    if os.path.isdir(packaged):
        return packaged
    return "data"


def load_default_db():
    return _core.MaterialDB.load_dir(default_db_dir())
