"""Oriented framed link diagrams as PD codes.

Conventions
-----------
A crossing stores its four incident arc identifiers counterclockwise starting
at the incoming under-strand, so ``arcs = (a, b, c, d)`` means the under
strand runs ``a -> c``.  The sign is the usual right-hand rule:

* ``sign = +1``: the over strand enters at ``d`` and leaves at ``b``
  (rotate the over direction counterclockwise by 90 degrees to get the
  under direction);
* ``sign = -1``: the over strand enters at ``b`` and leaves at ``d``.

The sign is redundant given the orientation data and is validated on input.
Components are oriented arc cycles; framings use the blackboard convention,
i.e. the framing of a component is its self-writhe.  Degenerate crossingless
components are stored as single closed arcs.

All values are immutable; operations return new diagrams.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class DiagramError(ValueError):
    """Raised on malformed or inconsistent diagram input."""


@dataclass(frozen=True)
class Crossing:
    """One crossing: arcs counterclockwise from the incoming under-strand."""

    arcs: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if len(self.arcs) != 4 or any(not isinstance(a, int) or a < 1
                                      for a in self.arcs):
            raise DiagramError(f"crossing arcs must be 4 positive ints: {self.arcs}")
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +-1, got {self.sign}")

    @property
    def under_in(self) -> int:
        return self.arcs[0]

    @property
    def under_out(self) -> int:
        return self.arcs[2]

    @property
    def over_in(self) -> int:
        return self.arcs[3] if self.sign > 0 else self.arcs[1]

    @property
    def over_out(self) -> int:
        return self.arcs[1] if self.sign > 0 else self.arcs[3]


@dataclass(frozen=True)
class FramedLinkDiagram:
    """Validated oriented link diagram with blackboard framing.

    ``components`` is an ordered tuple of oriented arc cycles; component
    indices in the public API are 1-based.
    """

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]

    # -- construction ---------------------------------------------------------

    @classmethod
    def build(cls, crossings: Iterable[Crossing | tuple],
              components: Sequence[Sequence[int]] | None = None
              ) -> "FramedLinkDiagram":
        """Validate crossing data and assemble a diagram.

        When ``components`` is omitted the arc cycles are derived from the
        crossings in first-appearance order (crossingless circles cannot be
        derived and must be given explicitly).
        """
        xs = tuple(c if isinstance(c, Crossing) else Crossing(tuple(c[0]), c[1])
                   for c in crossings)
        appearances: dict[int, list[tuple[int, int]]] = {}
        for ci, x in enumerate(xs):
            for slot, arc in enumerate(x.arcs):
                appearances.setdefault(arc, []).append((ci, slot))

        for arc, where in appearances.items():
            if len(where) != 2:
                raise DiagramError(
                    f"arc {arc} appears {len(where)} times in crossings "
                    f"(at {where}); every arc must appear exactly twice")

        # Orientation coherence: with the stored signs, every arc must have
        # exactly one head (incoming end) and one tail (outgoing end).
        heads: dict[int, tuple[int, int]] = {}
        tails: dict[int, tuple[int, int]] = {}
        for ci, x in enumerate(xs):
            over_in_slot = 3 if x.sign > 0 else 1
            for slot, arc in enumerate(x.arcs):
                incoming = slot == 0 or slot == over_in_slot
                store = heads if incoming else tails
                if arc in store:
                    raise DiagramError(
                        f"sign/orientation mismatch at crossing {ci}: arc {arc} "
                        f"has two {'heads' if incoming else 'tails'}")
                store[arc] = (ci, slot)
        # every crossing arc now has one head and one tail by counting

        nxt = {x.under_in: x.under_out for x in xs}
        for x in xs:
            nxt[x.over_in] = x.over_out

        if components is None:
            comps = cls._trace_components(xs, nxt)
        else:
            comps = tuple(tuple(int(a) for a in cyc) for cyc in components)
            cls._validate_components(xs, nxt, appearances, comps)
        return cls(xs, comps)

    @staticmethod
    def _trace_components(xs: Sequence[Crossing],
                          nxt: Mapping[int, int]) -> tuple[tuple[int, ...], ...]:
        comps: list[tuple[int, ...]] = []
        seen: set[int] = set()
        for x in xs:
            for arc in x.arcs:
                if arc in seen:
                    continue
                cycle = [arc]
                seen.add(arc)
                cur = nxt[arc]
                while cur != arc:
                    if cur in seen:
                        raise DiagramError(
                            f"non-closed cycle: arc {arc} never returns to itself")
                    cycle.append(cur)
                    seen.add(cur)
                    cur = nxt[cur]
                comps.append(tuple(cycle))
        return tuple(comps)

    @staticmethod
    def _validate_components(xs, nxt, appearances, comps) -> None:
        listed: set[int] = set()
        for cyc in comps:
            if not cyc:
                raise DiagramError("empty component cycle")
            for arc in cyc:
                if arc in listed:
                    raise DiagramError(f"arc {arc} listed in two components")
                listed.add(arc)
            if len(cyc) == 1 and cyc[0] not in appearances:
                continue  # crossingless circle
            for arc in cyc:
                if arc not in appearances:
                    raise DiagramError(
                        f"arc {arc} is in a multi-arc cycle but meets no crossing")
            for i, arc in enumerate(cyc):
                succ = cyc[(i + 1) % len(cyc)]
                if nxt.get(arc) != succ:
                    raise DiagramError(
                        f"non-closed cycle: component lists {arc} -> {succ} but "
                        f"the crossings connect {arc} -> {nxt.get(arc)}")
        missing = set(appearances) - listed
        if missing:
            raise DiagramError(f"arcs {sorted(missing)} missing from components")

    # -- derived data ----------------------------------------------------------

    def component_of_arc(self) -> dict[int, int]:
        """Map each arc to its 1-based component index."""
        out: dict[int, int] = {}
        for idx, cyc in enumerate(self.components, start=1):
            for arc in cyc:
                out[arc] = idx
        return out

    def n_components(self) -> int:
        return len(self.components)

    def _check_index(self, i: int) -> None:
        if not (1 <= i <= len(self.components)):
            raise DiagramError(
                f"component index {i} out of range 1..{len(self.components)}")

    def is_connected(self) -> bool:
        """Connectivity of the underlying 4-valent graph."""
        if len(self.components) <= 1:
            return True
        if not self.crossings:
            return False
        comp_of = self.component_of_arc()
        adj: dict[int, set[int]] = {i: set() for i in range(1, len(self.components) + 1)}
        for x in self.crossings:
            a = comp_of[x.under_in]
            b = comp_of[x.over_in]
            adj[a].add(b)
            adj[b].add(a)
        # crossingless circles have no adjacencies at all
        seen = {1}
        stack = [1]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(self.components)


# ---------------------------------------------------------------------------
# Parsing and serialization
# ---------------------------------------------------------------------------

def diagram_from_dict(doc: Mapping) -> FramedLinkDiagram:
    if not isinstance(doc, Mapping):
        raise DiagramError("PD document must be a JSON object")
    raw_crossings = doc.get("crossings", [])
    if not isinstance(raw_crossings, list):
        raise DiagramError("'crossings' must be a list")
    crossings = []
    for ci, item in enumerate(raw_crossings):
        try:
            arcs = tuple(int(a) for a in item["arcs"])
            sign = int(item["sign"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DiagramError(f"malformed crossing {ci}: {item!r}") from exc
        try:
            crossings.append(Crossing(arcs, sign))
        except DiagramError as exc:
            raise DiagramError(f"crossing {ci}: {exc}") from exc
    components = doc.get("components")
    if components is not None:
        if (not isinstance(components, list)
                or any(not isinstance(c, list) for c in components)):
            raise DiagramError("'components' must be a list of arc lists")
    return FramedLinkDiagram.build(crossings, components)


def parse_pd(text: str) -> FramedLinkDiagram:
    """Parse a PD-code JSON document into a validated diagram."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"malformed PD document: {exc}") from exc
    return diagram_from_dict(doc)


def diagram_to_dict(d: FramedLinkDiagram) -> dict:
    """Canonical form: crossings sorted lexicographically by (arcs, sign)."""
    crossings = sorted(({"arcs": list(x.arcs), "sign": x.sign}
                        for x in d.crossings),
                       key=lambda item: (item["arcs"], item["sign"]))
    return {"components": [list(c) for c in d.components],
            "crossings": crossings}


def serialize_pd(d: FramedLinkDiagram) -> str:
    return json.dumps(diagram_to_dict(d), separators=(", ", ": "))


# ---------------------------------------------------------------------------
# Elementary invariants
# ---------------------------------------------------------------------------

def writhe(d: FramedLinkDiagram) -> int:
    return sum(x.sign for x in d.crossings)


def framing(d: FramedLinkDiagram, i: int) -> int:
    """Blackboard framing of component ``i``: its self-writhe."""
    d._check_index(i)
    comp_of = d.component_of_arc()
    return sum(x.sign for x in d.crossings
               if comp_of[x.under_in] == i and comp_of[x.over_in] == i)


def linking_number(d: FramedLinkDiagram, i: int, j: int) -> int:
    """Half the signed count of crossings between components ``i`` and ``j``."""
    d._check_index(i)
    d._check_index(j)
    if i == j:
        raise DiagramError("linking_number needs two distinct components; "
                           "use framing() for the self-linking")
    comp_of = d.component_of_arc()
    total = 0
    for x in d.crossings:
        pair = {comp_of[x.under_in], comp_of[x.over_in]}
        if pair == {i, j}:
            total += x.sign
    if total % 2:
        raise DiagramError(
            f"odd signed crossing count {total} between components {i},{j}; "
            "diagram is inconsistent")
    return total // 2


def linking_matrix(d: FramedLinkDiagram) -> list[list[int]]:
    """Symmetric linking matrix with blackboard framings on the diagonal."""
    n = len(d.components)
    m = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        m[i - 1][i - 1] = framing(d, i)
        for j in range(i + 1, n + 1):
            m[i - 1][j - 1] = m[j - 1][i - 1] = linking_number(d, i, j)
    return m


# ---------------------------------------------------------------------------
# Local moves
# ---------------------------------------------------------------------------

def _check_crossing_index(d: FramedLinkDiagram, c: int) -> None:
    if not (0 <= c < len(d.crossings)):
        raise DiagramError(
            f"crossing index {c} out of range 0..{len(d.crossings) - 1}")


def crossing_change(d: FramedLinkDiagram, c: int) -> FramedLinkDiagram:
    """Switch over and under strand at crossing ``c`` (sign flips)."""
    _check_crossing_index(d, c)
    x = d.crossings[c]
    a, b, cc, dd = x.arcs
    if x.sign > 0:
        new = Crossing((dd, a, b, cc), -1)
    else:
        new = Crossing((b, cc, dd, a), 1)
    crossings = d.crossings[:c] + (new,) + d.crossings[c + 1:]
    return FramedLinkDiagram(crossings, d.components)


def mirror(d: FramedLinkDiagram) -> FramedLinkDiagram:
    """Mirror image: switch every crossing (all signs flip)."""
    out = d
    for c in range(len(d.crossings)):
        out = crossing_change(out, c)
    return out


def smooth_crossing(d: FramedLinkDiagram, c: int) -> FramedLinkDiagram:
    """Oriented smoothing of crossing ``c``.

    The crossing is deleted and the strands reconnected respecting
    orientation (under-in joins over-out, over-in joins under-out); fused
    arcs are merged under the smallest id and the component partition is
    recomputed in a stable order.
    """
    _check_crossing_index(d, c)
    x = d.crossings[c]
    # union-find over arc ids
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra > rb:
                ra, rb = rb, ra
            parent[rb] = ra

    union(x.under_in, x.over_out)
    union(x.over_in, x.under_out)

    rest = [Crossing(tuple(find(a) for a in y.arcs), y.sign)
            for ci, y in enumerate(d.crossings) if ci != c]

    remaining_arcs: set[int] = set()
    for y in rest:
        remaining_arcs.update(y.arcs)

    # stable ranks of old arcs for ordering the new partition
    rank: dict[int, tuple[int, int]] = {}
    for comp_idx, cyc in enumerate(d.components):
        for pos, arc in enumerate(cyc):
            rank[arc] = (comp_idx, pos)

    def class_rank(rep: int) -> tuple[int, int]:
        members = [a for a in parent if find(a) == rep] or [rep]
        return min(rank[a] for a in members if a in rank)

    nxt = {y.under_in: y.under_out for y in rest}
    for y in rest:
        nxt[y.over_in] = y.over_out

    new_cycles: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for arc in sorted(remaining_arcs):
        if arc in seen:
            continue
        cycle = [arc]
        seen.add(arc)
        cur = nxt[arc]
        while cur != arc:
            cycle.append(cur)
            seen.add(cur)
            cur = nxt[cur]
        new_cycles.append(tuple(cycle))

    # circles created by the smoothing (merged classes with no crossings left)
    for rep in sorted({find(a) for a in x.arcs}):
        if rep not in remaining_arcs:
            new_cycles.append((rep,))
    # untouched crossingless circles persist
    for cyc in d.components:
        if len(cyc) == 1 and cyc[0] not in {a for y in d.crossings for a in y.arcs}:
            new_cycles.append(cyc)

    def cycle_key(cyc: tuple[int, ...]) -> tuple[int, int]:
        best = None
        for arc in cyc:
            members = [a for a in parent if find(a) == arc] + [arc]
            for a in members:
                if a in rank and (best is None or rank[a] < best):
                    best = rank[a]
        return best if best is not None else (len(d.components), 0)

    ordered = []
    for cyc in sorted(new_cycles, key=cycle_key):
        # rotate each cycle to start at its smallest-rank arc
        pivot = min(range(len(cyc)), key=lambda k: cycle_key((cyc[k],)))
        ordered.append(cyc[pivot:] + cyc[:pivot])
    return FramedLinkDiagram.build(rest, ordered)


def reverse_component(d: FramedLinkDiagram, i: int) -> FramedLinkDiagram:
    """Reverse the orientation of component ``i``."""
    d._check_index(i)
    comp_of = d.component_of_arc()
    crossings = []
    for x in d.crossings:
        a, b, cc, dd = x.arcs
        under_rev = comp_of[x.under_in] == i
        over_rev = comp_of[x.over_in] == i
        if under_rev and over_rev:
            crossings.append(Crossing((cc, dd, a, b), x.sign))
        elif under_rev:
            crossings.append(Crossing((cc, dd, a, b), -x.sign))
        elif over_rev:
            crossings.append(Crossing((a, b, cc, dd), -x.sign))
        else:
            crossings.append(x)
    components = tuple(
        tuple(reversed(cyc)) if idx == i else cyc
        for idx, cyc in enumerate(d.components, start=1))
    return FramedLinkDiagram.build(crossings, components)


def permute_components(d: FramedLinkDiagram,
                       order: Sequence[int]) -> FramedLinkDiagram:
    """Reorder components; ``order`` lists old 1-based indices in new order."""
    if sorted(order) != list(range(1, len(d.components) + 1)):
        raise DiagramError(f"order {order} is not a permutation of components")
    return FramedLinkDiagram(d.crossings,
                             tuple(d.components[i - 1] for i in order))


# ---------------------------------------------------------------------------
# Rotation system: faces, sides, planarity
# ---------------------------------------------------------------------------

State = tuple[int, int]  # (crossing index, slot the walk leaves from)


def slot_roles(x: Crossing) -> tuple[set[int], set[int]]:
    """(incoming slots, outgoing slots) of a crossing."""
    if x.sign > 0:
        return {0, 3}, {1, 2}
    return {0, 1}, {2, 3}


def faces_of_crossings(crossings: Sequence[Crossing]
                       ) -> tuple[list[list[State]], dict[State, int]]:
    """Faces of the rotation system.

    A face is an orbit of leave-states under "traverse the arc, then turn to
    the next counterclockwise slot"; the face lies on the right of each
    traversal.
    """
    other_end: dict[State, State] = {}
    seen_arc: dict[int, State] = {}
    for ci, x in enumerate(crossings):
        for slot, arc in enumerate(x.arcs):
            if arc in seen_arc:
                other_end[(ci, slot)] = seen_arc[arc]
                other_end[seen_arc[arc]] = (ci, slot)
            else:
                seen_arc[arc] = (ci, slot)
    faces: list[list[State]] = []
    face_of: dict[State, int] = {}
    for ci in range(len(crossings)):
        for slot in range(4):
            start = (ci, slot)
            if start in face_of:
                continue
            orbit = []
            cur = start
            while cur not in face_of:
                face_of[cur] = len(faces)
                orbit.append(cur)
                cj, sj = other_end[cur]
                cur = (cj, (sj + 1) % 4)
            faces.append(orbit)
    return faces, face_of


def arc_side_faces(crossings: Sequence[Crossing], face_of: dict[State, int],
                   arc: int) -> tuple[int, int]:
    """(left face, right face) of an oriented arc.

    The walk keeps its face on the right, so the leave-state at the arc's
    tail slot sees the right face and the one at its head slot the left.
    """
    left = right = None
    for ci, x in enumerate(crossings):
        _, outgoing = slot_roles(x)
        for slot, a in enumerate(x.arcs):
            if a != arc:
                continue
            if slot in outgoing:
                right = face_of[(ci, slot)]
            else:
                left = face_of[(ci, slot)]
    if left is None or right is None:
        raise DiagramError(f"arc {arc} does not meet two crossing slots")
    return left, right


def is_planar(d: FramedLinkDiagram) -> bool:
    """Euler-characteristic planarity check of the rotation system.

    Applied per connected piece of the 4-valent graph; a piece with c
    crossings must have exactly c + 2 faces.
    """
    if not d.crossings:
        return True
    comp_of = d.component_of_arc()
    # group components into connected pieces
    parent = list(range(len(d.components) + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in d.crossings:
        ra, rb = find(comp_of[x.under_in]), find(comp_of[x.over_in])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    pieces: dict[int, list[Crossing]] = {}
    for x in d.crossings:
        pieces.setdefault(find(comp_of[x.under_in]), []).append(x)
    for crossings in pieces.values():
        faces, _ = faces_of_crossings(crossings)
        if len(faces) != len(crossings) + 2:
            return False
    return True


# ---------------------------------------------------------------------------
# Splicing: kinks, finger pushes, clasps
# ---------------------------------------------------------------------------

def _fresh_arc_ids(d: FramedLinkDiagram, count: int) -> list[int]:
    used = {a for cyc in d.components for a in cyc}
    top = max(used, default=0)
    return list(range(top + 1, top + 1 + count))


def _head_in_crossings(crossings: Sequence[Crossing],
                       arc: int) -> tuple[int, int] | None:
    """(crossing index, slot) where ``arc`` terminates, or None for circles."""
    for ci, x in enumerate(crossings):
        over_in_slot = 3 if x.sign > 0 else 1
        for slot in (0, over_in_slot):
            if x.arcs[slot] == arc:
                return (ci, slot)
    return None


def _replace_slot(crossings: list[Crossing], where: tuple[int, int],
                  new_arc: int) -> None:
    ci, slot = where
    arcs = list(crossings[ci].arcs)
    arcs[slot] = new_arc
    crossings[ci] = Crossing(tuple(arcs), crossings[ci].sign)


def add_kink(d: FramedLinkDiagram, arc: int, sign: int) -> FramedLinkDiagram:
    """Splice a single kink of the given sign into ``arc``.

    Changes the framing of the arc's component by ``sign`` and nothing else.
    """
    if sign not in (1, -1):
        raise DiagramError("kink sign must be +-1")
    comp_of = d.component_of_arc()
    if arc not in comp_of:
        raise DiagramError(f"unknown arc {arc}")
    head = _head_in_crossings(d.crossings, arc)
    crossings = list(d.crossings)
    if head is None:
        # crossingless circle: two arcs suffice (the loop closes on itself)
        v, = _fresh_arc_ids(d, 1)
        u = w = arc
        pieces = (arc, v)
    else:
        v, w = _fresh_arc_ids(d, 2)
        u = arc
        _replace_slot(crossings, head, w)
        pieces = (arc, v, w)
    if sign > 0:
        crossings.append(Crossing((u, w, v, v), 1))
    else:
        crossings.append(Crossing((u, v, v, w), -1))
    components = tuple(
        tuple(a2 for a1 in cyc for a2 in (pieces if a1 == arc else (a1,)))
        for cyc in d.components)
    return FramedLinkDiagram.build(crossings, components)


# Two-crossing tangle templates.  Pieces: the moving strand splits into
# (a1, m, a3) along its orientation, the static strand into (b1, b2, b3).
# Each template lists its crossings as (arcs, sign) with arcs in the usual
# counterclockwise-from-under-in order.
#
# Finger pushes (R2 pairs, moving strand passes over): keyed by
# (side of the moving arc facing the shared face, side of the crossed arc).
_PUSH_TEMPLATES = {
    ("R", "L"): (lambda a1, m, a3, b1, b2, b3:
                 [((b1, m, b2, a1), 1), ((b2, m, b3, a3), -1)]),
    ("R", "R"): (lambda a1, m, a3, b1, b2, b3:
                 [((b2, a1, b3, m), -1), ((b1, a3, b2, m), 1)]),
    ("L", "R"): (lambda a1, m, a3, b1, b2, b3:
                 [((b1, a1, b2, m), -1), ((b2, a3, b3, m), 1)]),
    ("L", "L"): (lambda a1, m, a3, b1, b2, b3:
                 [((b2, m, b3, a1), 1), ((b1, m, b2, a3), -1)]),
}

# Clasps (two crossings of equal sign): keyed by (side of the moving arc,
# side of the hooked arc, clasp sign).  The missing ("L", "R") case is the
# ("R", "L") template with the two strand roles swapped.
_CLASP_TEMPLATES = {
    ("R", "L", 1): (lambda a1, m, a3, b1, b2, b3:
                    [((b1, m, b2, a1), 1), ((m, b3, a3, b2), 1)]),
    ("R", "L", -1): (lambda a1, m, a3, b1, b2, b3:
                     [((a1, b1, m, b2), -1), ((b2, m, b3, a3), -1)]),
    ("R", "R", 1): (lambda a1, m, a3, b1, b2, b3:
                    [((a1, b3, m, b2), 1), ((b1, a3, b2, m), 1)]),
    ("R", "R", -1): (lambda a1, m, a3, b1, b2, b3:
                     [((b2, a1, b3, m), -1), ((m, b1, a3, b2), -1)]),
    ("L", "L", 1): (lambda a1, m, a3, b1, b2, b3:
                    [((b2, m, b3, a1), 1), ((m, b2, a3, b1), 1)]),
    ("L", "L", -1): (lambda a1, m, a3, b1, b2, b3:
                     [((a1, b2, m, b3), -1), ((b1, m, b2, a3), -1)]),
}


def splice_tangle_raw(crossings: Sequence[Crossing], arc_a: int, arc_b: int,
                      template, extra_used: Iterable[int] = ()
                      ) -> tuple[list[Crossing], tuple[int, ...], tuple[int, ...]]:
    """Core splice on a bare crossing list.

    Splits the moving strand ``arc_a`` into (a1, m, a3) and the static
    strand ``arc_b`` into (b1, b2, b3), rewires the original head slots, and
    appends the template's two crossings.  Closed circles keep their single
    arc id as both first and last piece.  Returns the new crossing list and
    the piece tuples for component splicing.
    """
    out = list(crossings)
    used = {a for x in crossings for a in x.arcs}
    used.update(extra_used)
    used.update((arc_a, arc_b))
    fresh = iter(range(max(used) + 1, max(used) + 5))
    head_a = _head_in_crossings(out, arc_a)
    head_b = _head_in_crossings(out, arc_b)
    m = next(fresh)
    b2 = next(fresh)
    if head_a is None:
        a3 = arc_a
        pieces_a = (arc_a, m)
    else:
        a3 = next(fresh)
        _replace_slot(out, head_a, a3)
        pieces_a = (arc_a, m, a3)
    if head_b is None:
        b3 = arc_b
        pieces_b = (arc_b, b2)
    else:
        b3 = next(fresh)
        _replace_slot(out, head_b, b3)
        pieces_b = (arc_b, b2, b3)
    for arcs, sign in template(arc_a, m, a3, arc_b, b2, b3):
        out.append(Crossing(arcs, sign))
    return out, pieces_a, pieces_b


def _splice_tangle(d: FramedLinkDiagram, arc_a: int, arc_b: int, template
                   ) -> FramedLinkDiagram:
    """Splice a two-crossing tangle joining ``arc_a`` (moving) to ``arc_b``."""
    all_arcs = {a for cyc in d.components for a in cyc}
    crossings, pieces_a, pieces_b = splice_tangle_raw(
        d.crossings, arc_a, arc_b, template, all_arcs)

    def splice(cyc: tuple[int, ...]) -> tuple[int, ...]:
        out: list[int] = []
        for a in cyc:
            if a == arc_a:
                out.extend(pieces_a)
            elif a == arc_b:
                out.extend(pieces_b)
            else:
                out.append(a)
        return tuple(out)

    return FramedLinkDiagram.build(crossings,
                                   tuple(splice(cyc) for cyc in d.components))


def _side_states(crossings: Sequence[Crossing], face_of: dict[State, int],
                 arc: int) -> dict[str, int]:
    left, right = arc_side_faces(crossings, face_of, arc)
    return {"L": left, "R": right}


def _direct_clasp(d: FramedLinkDiagram, arc_a: int, arc_b: int, sign: int,
                  side_a: str, side_b: str) -> FramedLinkDiagram:
    if (side_a, side_b) == ("L", "R"):
        template = _CLASP_TEMPLATES[("R", "L", sign)]
        return _splice_tangle(d, arc_b, arc_a, template)
    return _splice_tangle(d, arc_a, arc_b, _CLASP_TEMPLATES[(side_a, side_b, sign)])


def add_clasp(d: FramedLinkDiagram, arc_a: int, arc_b: int,
              sign: int) -> FramedLinkDiagram:
    """Hook a clasp (two crossings of equal sign) between two arcs.

    Changes the linking number between the arcs' components by ``sign`` and
    nothing else.  When the arcs do not bound a common face, a finger of
    the first strand is pushed across intervening arcs (cancelling crossing
    pairs passing over them) until the clasp can be attached; the result is
    always a planar diagram representing the honest clasping.
    """
    if sign not in (1, -1):
        raise DiagramError("clasp sign must be +-1")
    if arc_a == arc_b:
        raise DiagramError("clasp needs two distinct arcs")
    comp_of = d.component_of_arc()
    for arc in (arc_a, arc_b):
        if arc not in comp_of:
            raise DiagramError(f"unknown arc {arc}")

    out = d
    tip = arc_a
    for _ in range(4 * len(d.crossings) + 8):
        faces, face_of = faces_of_crossings(out.crossings)
        tip_floating = _head_in_crossings(out.crossings, tip) is None
        b_floating = _head_in_crossings(out.crossings, arc_b) is None
        if tip_floating or b_floating:
            # a crossingless circle can be placed in any face next to the
            # other strand, so the direct template applies
            result = _direct_clasp(out, tip, arc_b, sign, "R", "L")
            break
        tip_sides = _side_states(out.crossings, face_of, tip)
        b_sides = _side_states(out.crossings, face_of, arc_b)
        shared = None
        for sa in ("R", "L"):
            for sb in ("L", "R"):
                if tip_sides[sa] == b_sides[sb]:
                    shared = (sa, sb)
                    break
            if shared:
                break
        if shared:
            result = _direct_clasp(out, tip, arc_b, sign, *shared)
            break
        out, tip = _push_toward(out, tip, tip_sides, set(b_sides.values()),
                                face_of)
    else:
        raise DiagramError("clasp routing did not terminate")
    if not is_planar(result):
        raise DiagramError("clasp splice produced a non-planar diagram")
    return result


def _push_toward(d: FramedLinkDiagram, tip: int, tip_sides: dict[str, int],
                 targets: set[int], face_of: dict[State, int]
                 ) -> tuple["FramedLinkDiagram", int]:
    """One routing step: push a finger of ``tip`` across the first arc on a
    shortest dual path toward the target faces.  Returns the new diagram and
    the new tip arc (the finger segment beyond the crossed arc)."""
    # dual adjacency: faces joined across arcs
    arcs = sorted({a for x in d.crossings for a in x.arcs})
    sides = {a: arc_side_faces(d.crossings, face_of, a) for a in arcs}
    adjacency: dict[int, list[tuple[int, int]]] = {}
    for a, (left, right) in sides.items():
        adjacency.setdefault(left, []).append((right, a))
        adjacency.setdefault(right, []).append((left, a))
    starts = [(tip_sides["R"], "R"), (tip_sides["L"], "L")]
    from collections import deque
    best: tuple[int, str, int] | None = None  # (first face, tip side, arc)
    for start_face, side in starts:
        seen = {start_face}
        queue = deque([(start_face, None)])
        while queue:
            face, entry = queue.popleft()
            if face in targets and entry is not None:
                best = (face, side, entry)
                break
            for nxt_face, via in sorted(adjacency.get(face, [])):
                if nxt_face in seen or via == tip:
                    continue
                seen.add(nxt_face)
                queue.append((nxt_face, entry if entry is not None else via))
        if best:
            break
    if best is None:
        raise DiagramError("no planar route for the clasp")
    _, side, crossed = best
    crossed_side = "L" if sides[crossed][0] == tip_sides[side] else "R"
    template = _PUSH_TEMPLATES[(side, crossed_side)]
    pushed = _splice_tangle(d, tip, crossed, template)
    # the new tip is the finger segment beyond the crossed arc: the piece
    # spliced in right after the old tip on its component
    for cyc in pushed.components:
        if tip in cyc:
            return pushed, cyc[(cyc.index(tip) + 1) % len(cyc)]
    raise DiagramError(f"arc {tip} vanished during the push")


# ---------------------------------------------------------------------------
# Leaf triples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LeafTriple:
    """A 3-component diagram with an explicit order on its leaves."""

    diagram: FramedLinkDiagram

    def __post_init__(self):
        if self.diagram.n_components() != 3:
            raise DiagramError(
                f"a leaf triple needs exactly 3 components, "
                f"got {self.diagram.n_components()}")

    @classmethod
    def from_diagram(cls, d: FramedLinkDiagram,
                     order: Sequence[int] = (1, 2, 3)) -> "LeafTriple":
        """Designate the leaves; ``order`` lists component indices as F1,F2,F3."""
        if d.n_components() != 3:
            raise DiagramError(
                f"a leaf triple needs exactly 3 components, got {d.n_components()}")
        return cls(permute_components(d, order))

    def framings(self) -> tuple[int, int, int]:
        return tuple(framing(self.diagram, i) for i in (1, 2, 3))

    def linkings(self) -> tuple[int, int, int]:
        """(l12, l13, l23)."""
        d = self.diagram
        return (linking_number(d, 1, 2), linking_number(d, 1, 3),
                linking_number(d, 2, 3))
