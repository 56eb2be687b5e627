"""Wirtinger presentations of link groups from PD diagrams.

Generators are the arcs of the diagram in the classical sense: maximal
overpasses, i.e. PD arcs merged along the over-strand of each crossing.
Each crossing contributes one conjugation relation

    g_out = o^e  g_in  o^-e        (e = crossing sign)

where ``o`` is the generator of the strand passing over.  The designated
meridian of a component is the generator of its first arc.

The presentation also records, per generator, a conjugator word ``w`` with
``g = w m w^-1`` (``m`` the component's meridian), read off by walking the
component from its first arc; longitude computations rewrite through these
conjugators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FreeWord
from .diagram import DiagramError, FramedLinkDiagram, framing


@dataclass(frozen=True)
class WirtingerPresentation:
    """Link group presentation with the bookkeeping needed for longitudes.

    Generators are numbered 1..m and tagged with their owning component;
    relations are in bijection with the crossings.
    """

    n_components: int
    gen_components: tuple[int, ...]          # owning component per generator
    relations: tuple[FreeWord, ...]          # o^e g_in o^-e g_out^-1, reduced
    relation_data: tuple[tuple[int, int, int, int], ...]  # (over, sign, src, dst)
    meridians: tuple[int, ...]               # designated generator per component
    conjugators: tuple[FreeWord, ...]        # per generator, in generator letters
    underpasses: tuple[tuple[tuple[int, int], ...], ...]  # per component: (over, sign)
    framings: tuple[int, ...]

    def n_generators(self) -> int:
        return len(self.gen_components)


def wirtinger(d: FramedLinkDiagram, allow_split: bool = False
              ) -> WirtingerPresentation:
    """Wirtinger presentation of the link group of ``d``.

    Raises on disconnected diagrams unless ``allow_split`` is set (the
    triple-linking pipeline tolerates split pieces, where the invariant
    vanishes component-wise).
    """
    if not allow_split and not d.is_connected():
        raise DiagramError("Wirtinger presentation needs a connected diagram")

    # merge PD arcs along overpasses
    arcs = sorted({a for cyc in d.components for a in cyc})
    parent = {a: a for a in arcs}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in d.crossings:
        ra, rb = find(x.over_in), find(x.over_out)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    comp_of_arc = d.component_of_arc()
    class_index: dict[int, int] = {}
    gen_components: list[int] = []
    # enumerate classes component by component, first arc first, so the
    # designated meridian of each component is simply its first class
    meridians: list[int] = []
    for ci, cyc in enumerate(d.components, start=1):
        first = True
        for arc in cyc:
            rep = find(arc)
            if rep not in class_index:
                class_index[rep] = len(gen_components) + 1
                gen_components.append(ci)
            if first:
                meridians.append(class_index[rep])
                first = False

    def gen_of(arc: int) -> int:
        return class_index[find(arc)]

    relations: list[FreeWord] = []
    relation_data: list[tuple[int, int, int, int]] = []
    for x in d.crossings:
        over = gen_of(x.over_in)
        src = gen_of(x.under_in)
        dst = gen_of(x.under_out)
        e = x.sign
        relation_data.append((over, e, src, dst))
        relations.append(FreeWord(
            [(over, e), (src, 1), (over, -e), (dst, -1)]))

    # conjugator words by walking each component from its first arc
    head_of: dict[int, tuple[int, bool]] = {}  # arc -> (crossing idx, is_under)
    for ci, x in enumerate(d.crossings):
        head_of[x.under_in] = (ci, True)
        head_of[x.over_in] = (ci, False)

    conjugators: dict[int, FreeWord] = {}
    underpasses: list[tuple[tuple[int, int], ...]] = []
    for cyc in d.components:
        w: list[tuple[int, int]] = []
        passes: list[tuple[int, int]] = []
        for arc in cyc:
            g = gen_of(arc)
            if g not in conjugators:
                conjugators[g] = FreeWord(w)
            if arc in head_of:
                ci, is_under = head_of[arc]
                if is_under:
                    x = d.crossings[ci]
                    letter = (gen_of(x.over_in), x.sign)
                    passes.append(letter)
                    w = [letter] + w
        underpasses.append(tuple(passes))

    return WirtingerPresentation(
        n_components=len(d.components),
        gen_components=tuple(gen_components),
        relations=tuple(relations),
        relation_data=tuple(relation_data),
        meridians=tuple(meridians),
        conjugators=tuple(conjugators[g]
                          for g in range(1, len(gen_components) + 1)),
        underpasses=tuple(underpasses),
        framings=tuple(framing(d, i) for i in range(1, len(d.components) + 1)),
    )
