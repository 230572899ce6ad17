"""Reversible composite group codes over GF(4) and the DNA codes built from them."""

from . import codes, composite, dna, gf4, groupring, groups, search
from .codes import LinearCode, min_distance, is_reversible, weight_enumerators
from .composite import CompositeSpec, build_family, omega
from .groupring import GroupRingElement, sigma

__all__ = [
    "codes", "composite", "dna", "gf4", "groupring", "groups", "search",
    "LinearCode", "min_distance", "is_reversible", "weight_enumerators",
    "CompositeSpec", "build_family", "omega", "GroupRingElement", "sigma",
]
__version__ = "0.1.0"
