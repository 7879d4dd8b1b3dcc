"""Exact-arithmetic engine for pinwheel substitution tilings."""

__version__ = "0.1.0"

from .scalars import ExactScalar, RealQuad
from .motions import RigidMotion
from .tiles import Chirality, Tile
from .substitution import Supertile, inflate, subdivision_rule, supertile

__all__ = [
    "Chirality",
    "ExactScalar",
    "RealQuad",
    "RigidMotion",
    "Supertile",
    "Tile",
    "inflate",
    "subdivision_rule",
    "supertile",
    "__version__",
]
