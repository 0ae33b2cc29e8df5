"""Euler elements, abstract wedges and standard subspaces at desk scale."""

__version__ = "0.1.0"

from . import errors  # noqa: E402

__all__ = [
    "errors",
    "rootsys",
    "liealg",
    "cones",
    "wedgespace",
    "causal",
    "stdsp",
    "nets",
    "models",
    "cli",
]
