"""Milnor's triple linking number and the associated split link.

For an algebraically split ordered 3-component link the triple linking
number is read off the third longitude: rewrite the longitude as a word in
the designated meridians (conjugator rewriting to depth 2), expand through
the Magnus embedding, and take the coefficient of ``X1 X2``.  A single
global sign ``MU_SIGN`` calibrates the result so that the standard
Borromean rings (the bundled convention-bearing fixture) have value +1.

``build_f0`` realizes the associated algebraically split link of a leaf
triple by splicing clasp tangles that cancel the pairwise linking numbers.
"""

from __future__ import annotations

from .algebra import FreeWord, magnus_expand
from .diagram import (DiagramError, FramedLinkDiagram, LeafTriple, add_clasp,
                      linking_number)
from .wirtinger import WirtingerPresentation, wirtinger

__all__ = ["build_f0", "wirtinger", "WirtingerPresentation",
           "longitude_word", "mu123", "mu123_of_leaves", "MU_SIGN"]

# Calibration: coefficient sign fixed once on the Borromean-rings fixture.
MU_SIGN = 1


def build_f0(leaves: LeafTriple) -> FramedLinkDiagram:
    """Associated algebraically split link of a leaf triple.

    For each pair ``i < j`` with linking number ``l``, splice ``|l|`` clasps
    of sign ``-sgn(l)`` into the first arcs of leaves ``i`` and ``j``; the
    result has all pairwise linking numbers zero.
    """
    d = leaves.diagram
    for i, j in ((1, 2), (1, 3), (2, 3)):
        l = linking_number(d, i, j)
        s = -1 if l > 0 else 1
        for _ in range(abs(l)):
            d = add_clasp(d, d.components[i - 1][0], d.components[j - 1][0], s)
    return d


def _letter_as_meridian_word(p: WirtingerPresentation, gen: int, exp: int,
                             depth: int) -> list[tuple[int, int]]:
    """Rewrite one generator letter as a meridian conjugate.

    At depth 1 the letter collapses to its component's meridian; deeper
    levels expand the conjugator with every letter rewritten one level
    lower.  The returned letters are indexed by component (one Magnus symbol
    per component).
    """
    comp = p.gen_components[gen - 1]
    if depth <= 1:
        return [(comp, exp)]
    conj: list[tuple[int, int]] = []
    for g2, e2 in p.conjugators[gen - 1].letters:
        conj.extend(_letter_as_meridian_word(p, g2, e2, depth - 1))
    return conj + [(comp, exp)] + [(g, -e) for g, e in reversed(conj)]


def longitude_word(p: WirtingerPresentation, i: int, depth: int = 2) -> FreeWord:
    """The ``i``-th longitude as a word in the designated meridians.

    The word is the product of over-strand conjugators collected while
    walking the component, corrected by a meridian power that cancels the
    blackboard framing, with every arc generator rewritten as a meridian
    conjugate to the given depth.  Letters are indexed by component.

    Requires all linking numbers of component ``i`` to vanish, since the
    degree-2 Magnus coefficients are otherwise not well-defined.
    """
    if not (1 <= i <= p.n_components):
        raise DiagramError(f"component index {i} out of range")
    letters: list[tuple[int, int]] = []
    for over, sign in p.underpasses[i - 1]:
        letters.extend(_letter_as_meridian_word(p, over, sign, depth))
    word = FreeWord(letters) * FreeWord.generator(i, -p.framings[i - 1])
    for j in range(1, p.n_components + 1):
        if j != i and word.exponent_sum(j) != 0:
            raise DiagramError(
                f"longitude of component {i} has linking number "
                f"{word.exponent_sum(j)} with component {j}; "
                "the triple linking number needs an algebraically split link")
    return word


def mu123(d: FramedLinkDiagram) -> int:
    """Milnor's triple linking number of an algebraically split 3-link.

    Computed as the calibrated coefficient of ``X1 X2`` in the degree-2
    Magnus expansion of the third longitude.
    """
    if d.n_components() != 3:
        raise DiagramError(
            f"triple linking number needs 3 components, got {d.n_components()}")
    for i, j in ((1, 2), (1, 3), (2, 3)):
        l = linking_number(d, i, j)
        if l != 0:
            raise DiagramError(
                f"triple linking number needs an algebraically split link; "
                f"lk({i},{j}) = {l}")
    p = wirtinger(d, allow_split=True)
    word = longitude_word(p, 3, depth=2)
    series = magnus_expand(word, 2, rank=3)
    return MU_SIGN * series.coefficient((1, 2))


def mu123_of_leaves(leaves: LeafTriple) -> int:
    """Triple linking number of the associated algebraically split link."""
    return mu123(build_f0(leaves))
