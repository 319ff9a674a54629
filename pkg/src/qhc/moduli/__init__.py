"""Point configurations, the groups acting on them, orbit searches and canonical keys.

Curve-level equivalence lives in :mod:`qhc.moduli.curves`, which builds on
:mod:`qhc.quasihom` and is imported from there directly.
"""

from qhc.moduli.configuration import Configuration, ConfigurationError, Space
from qhc.moduli.equivalence import (
    affine_equivalent,
    configurations_equivalent,
    p1_equivalent,
    scaling_equivalent,
)
from qhc.moduli.groups import Affine, GroupElement, Mobius, Scaling, mobius_from_triples
from qhc.moduli.keys import canonical_key

__all__ = [
    "Affine",
    "Configuration",
    "ConfigurationError",
    "GroupElement",
    "Mobius",
    "Scaling",
    "Space",
    "affine_equivalent",
    "canonical_key",
    "configurations_equivalent",
    "mobius_from_triples",
    "p1_equivalent",
    "scaling_equivalent",
]
