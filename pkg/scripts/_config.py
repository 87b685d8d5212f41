"""Tiny helper: turn a dataclass of defaults into command-line flags."""

import argparse
from dataclasses import fields


def parse_config(cls, argv=None, description=None):
    ap = argparse.ArgumentParser(description=description or cls.__doc__)
    for f in fields(cls):
        flag = "--" + f.name.replace("_", "-")
        if f.type in (bool, "bool"):
            ap.add_argument(flag, action="store_true", default=f.default)
        else:
            kind = {"int": int, "float": float, "str": str}.get(f.type if isinstance(f.type, str) else f.type.__name__, str)
            ap.add_argument(flag, type=kind, default=f.default)
    return cls(**vars(ap.parse_args(argv)))
