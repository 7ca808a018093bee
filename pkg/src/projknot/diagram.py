"""Diagram data model for projective and virtual link diagrams.

A projective link diagram is a tangle in a disk whose boundary points are
identified antipodally: position k pairs with position k+n (mod 2n).  A
virtual diagram is closed (no boundary); virtual crossings are never stored
as nodes, only as a display count, since every invariant computed here
depends only on the underlying 4-valent incidence structure.

Crossing slot convention (fixed once, used everywhere): the four slots of a
crossing are arc ends listed in counterclockwise cyclic order; slots 0 and 2
carry the under-strand, slots 1 and 3 the over-strand.  When the diagram is
oriented, "under enters at slot 0" style statements become meaningful and
crossing signs are defined.

Arc ends are addressed by ``("x", crossing_id, slot)`` or ``("b", position)``
tuples; every arc identifier occurs exactly twice among crossing slots and
boundary positions.  Crossing-free closed components are kept as a bare
``free_loops`` count rather than as degenerate arcs.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class DiagramError(Exception):
    """Malformed diagram file or structurally invalid diagram."""


class OrientationError(Exception):
    """An operation that needs an orientation got an unoriented diagram."""


def crossing_end(cid, slot):
    return ("x", cid, slot)


def boundary_end(pos):
    return ("b", pos)


class Diagram:
    """Shared structure of projective and virtual diagrams.

    crossings: dict id -> tuple of 4 arc ids (slot order as above).
    free_loops: number of crossing-free closed components.
    orientation: optional dict arc -> head end (the end the arc points at).
    """

    is_projective = False

    def __init__(self, crossings=None, free_loops=0, orientation=None):
        self.crossings = {str(k): tuple(str(a) for a in v)
                          for k, v in (crossings or {}).items()}
        self.free_loops = int(free_loops)
        self.orientation = None if orientation is None else dict(orientation)

    # -- incidence ------------------------------------------------------

    def boundary_seq(self):
        return ()

    def arc_ids(self):
        ids = set()
        for slots in self.crossings.values():
            ids.update(slots)
        ids.update(self.boundary_seq())
        return ids

    def arc_ends(self):
        """Map arc id -> list of end tuples (in a fixed scan order)."""
        ends = {}
        for cid in sorted(self.crossings):
            for k, arc in enumerate(self.crossings[cid]):
                ends.setdefault(arc, []).append(crossing_end(cid, k))
        for p, arc in enumerate(self.boundary_seq()):
            ends.setdefault(arc, []).append(boundary_end(p))
        return ends

    def arc_at(self, end):
        if end[0] == "x":
            return self.crossings[end[1]][end[2]]
        return self.boundary_seq()[end[1]]

    def strand_continuation(self, end):
        """The end position where a strand arriving at `end` carries on."""
        if end[0] == "x":
            return ("x", end[1], (end[2] + 2) % 4)
        half = len(self.boundary_seq()) // 2
        return ("b", (end[1] + half) % (2 * half))

    # -- validation -------------------------------------------------------

    def violations(self):
        """All invariant violations, as human-readable strings."""
        out = []
        bseq = self.boundary_seq()
        if len(bseq) % 2:
            out.append("boundary length %d is odd" % len(bseq))
        if self.free_loops < 0:
            out.append("negative free loop count")
        ends = self.arc_ends()
        for arc in sorted(ends):
            if len(ends[arc]) != 2:
                where = ", ".join(_end_str(e) for e in ends[arc])
                out.append("arc %r has %d ends (%s), expected 2"
                           % (arc, len(ends[arc]), where))
        if self.orientation is not None:
            for arc in sorted(ends):
                head = self.orientation.get(arc)
                if head is None:
                    out.append("oriented diagram misses arc %r" % arc)
                elif head not in ends[arc]:
                    out.append("arc %r oriented toward a non-incident end" % arc)
        return out

    def check_valid(self):
        problems = self.violations()
        if problems:
            raise DiagramError("; ".join(problems))
        return self

    # -- components and orientation ------------------------------------

    def components(self):
        """Arc sets of the strand components (free loops not included)."""
        ends = self.arc_ends()
        seen = set()
        comps = []
        for start in sorted(ends):
            if start in seen:
                continue
            comp = set()
            # walk the strand cycle through crossings (and boundary pairs)
            arc, end = start, ends[start][0]
            while arc not in comp:
                comp.add(arc)
                seen.add(arc)
                cont = self.strand_continuation(end)
                arc = self.arc_at(cont)
                e1, e2 = ends[arc]
                end = e2 if e1 == cont else e1
            comps.append(comp)
        return comps

    def is_oriented(self):
        return self.orientation is not None

    def oriented(self):
        """Deterministically oriented copy.

        Each component is directed so that its lowest-id arc points toward
        its lexicographically smaller end; everything else follows.
        """
        ends = self.arc_ends()
        head = {}
        for comp in self.components():
            seed = min(comp)
            e1, e2 = sorted(ends[seed])
            head[seed] = e1
            # walk forward around the strand until the component closes up
            arc, h = seed, e1
            while True:
                cont = self.strand_continuation(h)
                nxt = self.arc_at(cont)
                if nxt in head:
                    break
                a, b = ends[nxt]
                head[nxt] = b if a == cont else a
                arc, h = nxt, head[nxt]
        return self.replace(orientation=head)

    def unoriented(self):
        return self.replace(orientation=None)

    def head(self, arc):
        if self.orientation is None:
            raise OrientationError("diagram is not oriented")
        return self.orientation[arc]

    def crossing_sign(self, cid):
        """+1 or -1; requires an orientation."""
        if self.orientation is None:
            raise OrientationError("crossing sign needs an orientation")
        slots = self.crossings[cid]
        under_in = self.orientation[slots[0]] == crossing_end(cid, 0)
        over_in_3 = self.orientation[slots[3]] == crossing_end(cid, 3)
        return 1 if under_in == over_in_3 else -1

    def writhe(self):
        return sum(self.crossing_sign(c) for c in self.crossings)

    def positive_crossings(self):
        return sum(1 for c in self.crossings if self.crossing_sign(c) == 1)

    def negative_crossings(self):
        return sum(1 for c in self.crossings if self.crossing_sign(c) == -1)

    # -- state smoothing helpers -----------------------------------------

    def oriented_smoothing_kind(self, cid):
        """Smoothing type that respects the strand orientations."""
        return "A" if self.crossing_sign(cid) == 1 else "B"

    # -- misc -------------------------------------------------------------

    def crossing_count(self):
        return len(self.crossings)

    def replace(self, **kw):
        raise NotImplementedError

    def __eq__(self, other):
        return (type(self) is type(other)
                and self.crossings == other.crossings
                and self.free_loops == other.free_loops
                and self.boundary_seq() == other.boundary_seq()
                and self.orientation == other.orientation)


class VirtualDiagram(Diagram):
    """Closed diagram: classical crossings plus edge connectivity.

    ``virtual_count`` is display-only; no invariant reads it.  ``arc_transits``
    and ``free_loop_transits``, when present, record how many antipodal
    boundary gluings each fused arc / crossing-free loop of a projective
    preimage passed through (parities drive the marked homology variant).
    """

    is_projective = False

    def __init__(self, crossings=None, free_loops=0, orientation=None,
                 virtual_count=0, arc_transits=None, free_loop_transits=None):
        super().__init__(crossings, free_loops, orientation)
        self.virtual_count = int(virtual_count)
        self.arc_transits = None if arc_transits is None else {
            str(k): int(v) for k, v in arc_transits.items()}
        self.free_loop_transits = None if free_loop_transits is None else tuple(
            int(v) for v in free_loop_transits)

    def replace(self, **kw):
        args = dict(
            crossings=self.crossings, free_loops=self.free_loops,
            orientation=self.orientation, virtual_count=self.virtual_count,
            arc_transits=self.arc_transits,
            free_loop_transits=self.free_loop_transits)
        args.update(kw)
        return VirtualDiagram(**args)

    def violations(self):
        out = super().violations()
        if self.virtual_count < 0:
            out.append("negative virtual crossing count")
        if (self.free_loop_transits is not None
                and len(self.free_loop_transits) != self.free_loops):
            out.append("free loop transit list does not match loop count")
        return out


class ProjectiveDiagram(Diagram):
    """Tangle in a disk with antipodal boundary identification.

    The boundary is a cyclic sequence of 2n arc ends; position k is glued to
    position k+n (mod 2n).  The pairing is positional and never stored.
    """

    is_projective = True

    def __init__(self, crossings=None, boundary=(), free_loops=0,
                 orientation=None):
        super().__init__(crossings, free_loops, orientation)
        self.boundary = tuple(str(a) for a in boundary)

    def boundary_seq(self):
        return self.boundary

    def replace(self, **kw):
        args = dict(crossings=self.crossings, boundary=self.boundary,
                    free_loops=self.free_loops, orientation=self.orientation)
        args.update(kw)
        return ProjectiveDiagram(**args)

    def homotopy_class(self):
        """0 or 1: the mod-2 class of half the number of boundary points."""
        return (len(self.boundary) // 2) % 2


class UnionFind:
    """Plain union-find over hashable items, path halving + size union."""

    def __init__(self):
        self.parent = {}
        self.size = {}
        self.classes = 0

    def add(self, item):
        if item not in self.parent:
            self.parent[item] = item
            self.size[item] = 1
            self.classes += 1

    def find(self, item):
        parent = self.parent
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    def union(self, a, b):
        self.add(a)
        self.add(b)
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.classes -= 1
        return ra

    def class_count(self):
        return self.classes


# -- file formats --------------------------------------------------------
#
# Line-oriented UTF-8 text.  Projective (.pkd):
#     boundary <arcId> ... (cyclic order, length 2n, pairing k <-> k+n)
#     crossing <id> <a> <b> <c> <d>
#     loop <count>
#     # comment
# Virtual (.vpd): same minus `boundary`, plus optional `virtual <count>`.


def parse_projective(text):
    return _parse(text, projective=True)


def parse_virtual(text):
    return _parse(text, projective=False)


def _parse(text, projective):
    crossings = {}
    boundary = None
    loops = 0
    virtual_count = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "boundary":
            if not projective:
                raise DiagramError("line %d: boundary not allowed in a "
                                   "virtual diagram" % lineno)
            if boundary is not None:
                raise DiagramError("line %d: duplicate boundary line" % lineno)
            boundary = args
        elif kind == "crossing":
            if len(args) != 5:
                raise DiagramError("line %d: crossing needs an id and 4 arcs"
                                   % lineno)
            cid = args[0]
            if cid in crossings:
                raise DiagramError("line %d: duplicate crossing %r"
                                   % (lineno, cid))
            crossings[cid] = tuple(args[1:])
        elif kind == "loop":
            if len(args) != 1 or not args[0].isdigit():
                raise DiagramError("line %d: loop needs one count" % lineno)
            loops += int(args[0])
        elif kind == "virtual":
            if projective:
                raise DiagramError("line %d: virtual count not allowed in a "
                                   "projective diagram" % lineno)
            if len(args) != 1 or not args[0].isdigit():
                raise DiagramError("line %d: virtual needs one count" % lineno)
            virtual_count += int(args[0])
        else:
            raise DiagramError("line %d: unknown record %r" % (lineno, kind))
    if projective:
        d = ProjectiveDiagram(crossings, boundary or (), loops)
    else:
        d = VirtualDiagram(crossings, loops, virtual_count=virtual_count)
    problems = d.violations()
    if problems:
        raise DiagramError("; ".join(problems))
    return d


def serialize(d):
    """Canonical text form; parse(serialize(d)) == d for valid diagrams."""
    lines = []
    if d.is_projective and d.boundary:
        lines.append("boundary " + " ".join(d.boundary))
    for cid in sorted(d.crossings):
        lines.append("crossing %s %s" % (cid, " ".join(d.crossings[cid])))
    if d.free_loops:
        lines.append("loop %d" % d.free_loops)
    if not d.is_projective and d.virtual_count:
        lines.append("virtual %d" % d.virtual_count)
    return "\n".join(lines) + "\n" if lines else ""


def _end_str(end):
    if end[0] == "x":
        return "crossing %s slot %d" % (end[1], end[2])
    return "boundary position %d" % end[1]


def map_genus(d):
    """Genus of the surface carrying the 4-valent incidence structure.

    Closed virtual diagrams: 0 means the classical part embeds in the
    sphere.  Projective diagrams are capped with a single boundary vertex
    (rotation reversed relative to the stored order, i.e. viewed from the
    cap side); 0 then means the tangle is drawable in the disk.
    """
    darts = []
    for cid in d.crossings:
        darts.extend(("x", cid, k) for k in range(4))
    bseq = d.boundary_seq()
    darts.extend(("b", p) for p in range(len(bseq)))
    if not darts:
        return 0

    def rot(dart):
        if dart[0] == "x":
            return ("x", dart[1], (dart[2] + 1) % 4)
        return ("b", (dart[1] - 1) % len(bseq))

    ends = d.arc_ends()
    other = {}
    for pair in ends.values():
        if len(pair) != 2:
            raise DiagramError("map genus needs a valid diagram")
        e1, e2 = pair
        other[e1] = e2
        other[e2] = e1

    # connected components of the map (crossings+boundary as vertices)
    uf = UnionFind()
    for dart in darts:
        uf.add(_vertex(dart))
    for e1, e2 in other.items():
        uf.union(_vertex(e1), _vertex(e2))
    ncomp = uf.class_count()

    # faces: orbits of rot . other
    seen = set()
    faces = 0
    for dart in darts:
        if dart in seen:
            continue
        faces += 1
        cur = dart
        while cur not in seen:
            seen.add(cur)
            cur = rot(other[cur])
    nvert = len(d.crossings) + (1 if bseq else 0)
    nedge = len(ends)
    euler = nvert - nedge + faces
    genus2 = 2 * ncomp - euler
    if genus2 % 2:
        raise DiagramError("map is not orientable-consistent")
    return genus2 // 2


def _vertex(end):
    return ("x", end[1]) if end[0] == "x" else ("b",)
