"""Casson invariant variation under Borromean surgery.

A library and CLI computing the variation of the Casson invariant of
homology spheres under Borromean surgery through three independent routes,
with a PD-code diagram pipeline extracting every formula input (framings,
linking numbers, Milnor's triple linking number, Alexander polynomial
data) from planar link-diagram codes.  All arithmetic is exact.
"""

from .algebra import (FreeWord, LaurentPoly, MagnusSeries, det,
                      magnus_expand, poly_eval_derivatives)
from .alexander import (alexander_knot, alexander_link, half_ddelta1,
                        seifert_matrix, zeta)
from .casson import (BorromeanConfig, CrossLinkMatrix, DeltaReport,
                     KirbyFacts, RecursionStep, TwoComponentSurgeryData,
                     config_from_leaves, delta_from_leaves, delta_multi,
                     delta_report, delta_single, delta_single_lescop,
                     delta_single_recursive, fti_bracket, johannes_delta,
                     kirby_reduce, mazur_family, pairwise_correction,
                     rochlin_delta)
from .diagram import (Crossing, DiagramError, FramedLinkDiagram, LeafTriple,
                      add_clasp, add_kink, crossing_change, framing,
                      linking_matrix, linking_number, mirror, parse_pd,
                      permute_components, reverse_component, serialize_pd,
                      smooth_crossing, writhe)
from .milnor import build_f0, longitude_word, mu123, mu123_of_leaves
from .wirtinger import WirtingerPresentation, wirtinger

__version__ = "0.1.0"
