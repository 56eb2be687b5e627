"""Seifert's algorithm on PD diagrams via braid form.

The Seifert matrix of a knot diagram is computed in three stages:

1. *Seifert circles and regions.*  Smoothing every crossing coherently with
   orientation splits the diagram into disjoint Seifert circles; the
   complementary regions of that circle family form a tree with one edge per
   circle (directed from the region on the right of the circle to the one on
   its left).

2. *Reduction to braid form.*  The diagram is a closed braid exactly when
   that tree is a directed path.  While it is not, there is a diagram face
   carrying two arcs of different Seifert circles with the face on the same
   side of both; pulling one across the other (a type II move on
   anti-parallel strands) reorganizes the circles without changing the link.
   Iterating terminates with nested, coherently oriented circles.

3. *Band pairing.*  In braid form the surface is a stack of discs joined by
   twisted bands, one band per crossing.  A homology basis is given by
   consecutive band pairs in each channel between adjacent discs, and the
   linking numbers of pushoffs follow the classical band-pairing rules
   (diagonal from band signs, shared-band pairs, staggered pairs on adjacent
   channels).

Faces are computed from the counterclockwise slot order at each crossing
(the PD code is a rotation system); planarity is checked via Euler's
formula.
"""

from __future__ import annotations

from .algebra import det
from .diagram import (Crossing, DiagramError, FramedLinkDiagram, State,
                      arc_side_faces, faces_of_crossings, slot_roles,
                      splice_tangle_raw, _PUSH_TEMPLATES)


# ---------------------------------------------------------------------------
# Seifert circles, faces, regions
# ---------------------------------------------------------------------------

def _smoothing_successor(x: Crossing) -> list[tuple[int, int]]:
    """Arc transitions of the oriented smoothing at one crossing."""
    a, b, c, d = x.arcs
    if x.sign > 0:
        return [(a, b), (d, c)]
    return [(a, d), (b, c)]


def seifert_circles(crossings: list[Crossing]
                    ) -> tuple[list[tuple[int, ...]], dict[int, int], dict[int, int]]:
    """Seifert circles of the smoothed diagram.

    Returns (circles as arc cycles, arc -> circle index,
    arc -> crossing index where the arc terminates).
    """
    succ: dict[int, int] = {}
    head_of: dict[int, int] = {}
    for ci, x in enumerate(crossings):
        for src, dst in _smoothing_successor(x):
            succ[src] = dst
        head_of[x.under_in] = ci
        head_of[x.over_in] = ci
    circles: list[tuple[int, ...]] = []
    circle_of: dict[int, int] = {}
    for arc in succ:
        if arc in circle_of:
            continue
        cycle = [arc]
        circle_of[arc] = len(circles)
        cur = succ[arc]
        while cur != arc:
            circle_of[cur] = len(circles)
            cycle.append(cur)
            cur = succ[cur]
        circles.append(tuple(cycle))
    return circles, circle_of, head_of


def _sector_face(face_of: dict[State, int], ci: int, sector: int) -> int:
    """Face holding the sector between slots ``sector`` and ``sector + 1``."""
    return face_of[(ci, (sector + 1) % 4)]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def circle_regions(crossings: list[Crossing],
                   faces: list[list[State]],
                   face_of: dict[State, int]) -> _UnionFind:
    """Merge diagram faces into the complementary regions of the circles.

    Smoothing a crossing fuses the two sectors lying between the smoothed
    strands: sectors 1 and 3 at a positive crossing, 0 and 2 at a negative.
    """
    uf = _UnionFind(len(faces))
    for ci, x in enumerate(crossings):
        if x.sign > 0:
            uf.union(_sector_face(face_of, ci, 1), _sector_face(face_of, ci, 3))
        else:
            uf.union(_sector_face(face_of, ci, 0), _sector_face(face_of, ci, 2))
    return uf


def region_edges(crossings: list[Crossing],
                 circles: list[tuple[int, ...]],
                 face_of: dict[State, int],
                 regions: _UnionFind) -> list[tuple[int, int]]:
    """Directed tree edge (right region -> left region) per Seifert circle."""
    edges = []
    for cycle in circles:
        sides = {(arc_side_faces(crossings, face_of, arc)) for arc in cycle}
        region_sides = {(regions.find(l), regions.find(r)) for l, r in sides}
        if len(region_sides) != 1:
            raise DiagramError(
                "inconsistent circle sides; diagram is not a planar PD code")
        left, right = next(iter(region_sides))
        edges.append((right, left))
    return edges


def _chain_order(edges: list[tuple[int, int]]) -> list[int] | None:
    """Circle indices in chain order when the region tree is a directed path."""
    tails = {}
    heads = set()
    for idx, (tail, head) in enumerate(edges):
        if tail in tails:
            return None
        tails[tail] = idx
        heads.add(head)
    starts = [tail for tail in tails if tail not in heads]
    if len(starts) != 1:
        return None
    order = []
    region = starts[0]
    while region in tails:
        idx = tails[region]
        order.append(idx)
        region = edges[idx][1]
    if len(order) != len(edges):
        return None
    return order


# ---------------------------------------------------------------------------
# The reduction move
# ---------------------------------------------------------------------------

def _find_reduction_pair(crossings: list[Crossing],
                         circle_of: dict[int, int],
                         faces: list[list[State]]
                         ) -> tuple[int, int, bool] | None:
    """Two arcs of different circles on one face with the face on the same
    side of both.  Returns (arc_alpha, arc_beta, face_is_left) or None."""
    for orbit in faces:
        side_seen: dict[bool, dict[int, int]] = {True: {}, False: {}}
        for ci, slot in orbit:
            x = crossings[ci]
            _, outgoing = slot_roles(x)
            arc = x.arcs[slot]
            face_is_left = slot not in outgoing  # tail slot: face on the right
            bucket = side_seen[face_is_left]
            circ = circle_of[arc]
            for other_circ, other_arc in bucket.items():
                if other_circ != circ:
                    return other_arc, arc, face_is_left
            bucket.setdefault(circ, arc)
    return None


def _apply_reduction_move(crossings: list[Crossing], arc_a: int, arc_b: int,
                          face_is_left: bool) -> list[Crossing]:
    """Pull a finger of ``arc_a`` across the shared face and over ``arc_b``."""
    side = "L" if face_is_left else "R"
    template = _PUSH_TEMPLATES[(side, side)]
    out, _, _ = splice_tangle_raw(crossings, arc_a, arc_b, template)
    return out


# ---------------------------------------------------------------------------
# Braid word extraction
# ---------------------------------------------------------------------------

def _circle_walk(cycle: tuple[int, ...], head_of: dict[int, int]) -> list[int]:
    """Crossings met when walking once around a Seifert circle."""
    return [head_of[arc] for arc in cycle]


def _is_rotation(a: list[int], b: list[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    n = len(a)
    for shift in range(n):
        if all(a[(shift + i) % n] == b[i] for i in range(n)):
            return True
    return False


def _extract_braid_word(crossings: list[Crossing]) -> list[tuple[int, int]]:
    """Braid word [(generator index, sign), ...] of a braid-form diagram."""
    circles, circle_of, head_of = seifert_circles(crossings)
    faces, face_of = faces_of_crossings(crossings)
    regions = circle_regions(crossings, faces, face_of)
    edges = region_edges(crossings, circles, face_of, regions)
    order = _chain_order(edges)
    if order is None:
        raise DiagramError("diagram is not in braid form")
    strand_of_circle = {circ: pos + 1 for pos, circ in enumerate(order)}

    channel: dict[int, int] = {}
    for ci, x in enumerate(crossings):
        s1 = strand_of_circle[circle_of[x.under_in]]
        s2 = strand_of_circle[circle_of[x.over_in]]
        if abs(s1 - s2) != 1:
            raise DiagramError(
                "crossing joins non-adjacent Seifert circles in braid form")
        channel[ci] = min(s1, s2)

    walks = [_circle_walk(circles[circ], head_of) for circ in order]

    word_order: list[int] = list(walks[0])
    for strand in range(2, len(order) + 1):
        walk = walks[strand - 1]
        old = [ci for ci in walk if channel[ci] == strand - 1]
        new = [ci for ci in walk if channel[ci] == strand]
        if len(old) + len(new) != len(walk):
            raise DiagramError("unexpected channel structure in braid form")
        if not old:
            raise DiagramError("disconnected braid-form diagram")
        in_cl = [ci for ci in word_order if channel[ci] == strand - 1]
        if not _is_rotation(in_cl, old):
            raise DiagramError("incoherent circle walks in braid form")
        if not new:
            continue
        start = walk.index(old[0])
        walk = walk[start:] + walk[:start]
        run: list[int] = []
        anchor = walk[0]
        for ci in walk[1:] + [walk[0]]:
            if channel[ci] == strand - 1 or ci == walk[0]:
                if run:
                    at = word_order.index(anchor)
                    word_order[at + 1:at + 1] = run
                    run = []
                anchor = ci
            else:
                run.append(ci)
    return [(channel[ci], crossings[ci].sign) for ci in word_order]


# ---------------------------------------------------------------------------
# Band pairing in braid form
# ---------------------------------------------------------------------------

def braid_seifert_matrix(word: list[tuple[int, int]]) -> list[list[int]]:
    """Seifert matrix of a closed braid from its word.

    Basis elements are consecutive band pairs within each channel; entries
    follow the band-pairing rules for the disc-and-band surface.
    """
    channels: dict[int, list[tuple[int, int]]] = {}
    for height, (gen, sign) in enumerate(word):
        channels.setdefault(gen, []).append((height, sign))
    gens: list[tuple[int, int, int, int, int]] = []  # (channel, a, sa, b, sb)
    for g in sorted(channels):
        bands = channels[g]
        for (a, sa), (b, sb) in zip(bands, bands[1:]):
            gens.append((g, a, sa, b, sb))
    n = len(gens)
    v = [[0] * n for _ in range(n)]
    for i, (g, a, sa, b, sb) in enumerate(gens):
        if sa == sb:
            v[i][i] = -sa
        for j, (g2, a2, sa2, b2, sb2) in enumerate(gens):
            if g2 == g and a2 == b:
                # consecutive pair sharing the band at height b
                if sb > 0:
                    v[j][i] = 1
                else:
                    v[i][j] = -1
            elif g2 == g + 1:
                if a2 < a < b2 < b:
                    v[j][i] = 1
                elif a < a2 < b < b2:
                    v[j][i] = -1
    return v


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------

def pd_to_braid_word(d: FramedLinkDiagram,
                     max_moves: int | None = None) -> list[tuple[int, int]]:
    """Convert a connected diagram to a braid word via reduction moves."""
    if not d.crossings:
        raise DiagramError("cannot braid a crossingless diagram")
    if not d.is_connected():
        raise DiagramError("cannot braid a disconnected diagram")
    crossings = list(d.crossings)
    nfaces = len(faces_of_crossings(crossings)[0])
    if nfaces != len(crossings) + 2:
        raise DiagramError(
            f"diagram is not planar: {nfaces} faces for {len(crossings)} "
            "crossings (expected crossings + 2)")
    n_circles = len(seifert_circles(crossings)[0])
    if max_moves is None:
        max_moves = 4 * n_circles * n_circles + 16
    for _ in range(max_moves + 1):
        circles, circle_of, _ = seifert_circles(crossings)
        faces, face_of = faces_of_crossings(crossings)
        regions = circle_regions(crossings, faces, face_of)
        edges = region_edges(crossings, circles, face_of, regions)
        if _chain_order(edges) is not None:
            return _extract_braid_word(crossings)
        pair = _find_reduction_pair(crossings, circle_of, faces)
        if pair is None:
            raise DiagramError("no reduction move found on a non-braid diagram")
        crossings = _apply_reduction_move(crossings, *pair)
    raise DiagramError("braid-form reduction did not terminate")


def seifert_matrix(d: FramedLinkDiagram) -> list[list[int]]:
    """Seifert matrix of a knot diagram (Seifert's algorithm).

    The basis is the independent cycles of the disc-and-band surface, so the
    matrix has size ``crossings - circles + 1`` (twice the surface genus)
    and ``det(V - t V^T)`` is the Alexander polynomial up to units.
    """
    if d.n_components() != 1:
        raise DiagramError(
            f"seifert_matrix needs a knot diagram, got {d.n_components()} "
            "components")
    if not d.crossings:
        return []
    word = pd_to_braid_word(d)
    v = braid_seifert_matrix(word)
    vv = [[v[i][j] - v[j][i] for j in range(len(v))] for i in range(len(v))]
    if det(vv) not in (1, -1):
        raise DiagramError("Seifert matrix failed the unimodularity check")
    return v


def braid_closure_diagram(word: list[int], strands: int) -> FramedLinkDiagram:
    """PD diagram of the closure of a braid word.

    ``word`` lists generators as nonzero integers (negative for inverses),
    e.g. ``[1, 1, 1]`` on 2 strands closes to a trefoil.
    """
    if strands < 1:
        raise DiagramError("need at least one strand")
    for letter in word:
        if letter == 0 or abs(letter) >= strands:
            raise DiagramError(f"generator {letter} out of range for "
                               f"{strands} strands")
    start = list(range(1, strands + 1))
    cur = list(start)
    nxt_id = strands + 1
    crossings: list[list] = []
    for letter in word:
        g = abs(letter)
        left_in, right_in = cur[g - 1], cur[g]
        left_out, right_out = nxt_id, nxt_id + 1
        nxt_id += 2
        if letter > 0:
            crossings.append([(left_in, left_out, right_out, right_in), 1])
        else:
            crossings.append([(right_in, left_in, left_out, right_out), -1])
        cur[g - 1], cur[g] = left_out, right_out
    rename = {c: s for c, s in zip(cur, start) if c != s}
    fixed = []
    for arcs, sign in crossings:
        fixed.append(Crossing(tuple(rename.get(a, a) for a in arcs), sign))
    d = FramedLinkDiagram.build(fixed)
    idle = [p for p in range(strands) if cur[p] == start[p]
            and all(start[p] not in x.arcs for x in fixed)]
    if idle:
        components = list(d.components) + [(start[p],) for p in idle]
        d = FramedLinkDiagram.build(fixed, components)
    return d
