"""Exact computations over prime fields for special Gushel-Mukai fourfolds.

Modules:

- :mod:`gmforge.arith`: prime fields, polynomial rings, monomial orders.
- :mod:`gmforge.ideals`: Groebner bases, Hilbert series, saturation,
  elimination, singular loci.
- :mod:`gmforge.geom`: projective schemes, rational maps, images, points.
- :mod:`gmforge.grass`: Pluecker ideals and Schubert calculus on G(1,n).
- :mod:`gmforge.gmtheory`: double point formula, discriminants, labels.
- :mod:`gmforge.recipes`: the construction chain of a GM fourfold of
  discriminant 26 containing a one-nodal surface.
- :mod:`gmforge.cli`: the ``gm`` command.
"""

from .arith import DEFAULT_PRIME, LARGE_PRIME, GF, MonomialOrder, Polynomial, Ring, parse_polynomial
from .geom import PointP, RationalMap, Scheme, image, make_map, projective_space
from .gmtheory import SurfaceNumerics, component_label, discriminant, gm_record, self_intersection
from .grass import SchubertCycle, integral, pluecker_ideal, surface_class
from .ideals import Ideal, eliminate, node_count, saturate, singular_locus

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PRIME",
    "LARGE_PRIME",
    "GF",
    "MonomialOrder",
    "Polynomial",
    "Ring",
    "parse_polynomial",
    "Ideal",
    "eliminate",
    "saturate",
    "singular_locus",
    "node_count",
    "PointP",
    "Scheme",
    "RationalMap",
    "make_map",
    "image",
    "projective_space",
    "SchubertCycle",
    "integral",
    "pluecker_ideal",
    "surface_class",
    "SurfaceNumerics",
    "self_intersection",
    "discriminant",
    "component_label",
    "gm_record",
]
