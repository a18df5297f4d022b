"""Combinatorial planar and annular diagrams with word-labelled edges.

A map is stored as darts (oriented edges): each dart has a twin carrying
the inverse label, face boundary cycles are dart sequences read clockwise,
and the map boundary is a list of dart cycles (clockwise for the outer
boundary, counterclockwise for inner ones).  A boundary edge is traversed
in the same direction by its face and by the boundary cycle, so the same
dart appears once in each; an interior edge contributes one dart to each
of its two incident face cycles.  Every unoriented edge therefore shows
up exactly twice across all cycles, which is what the curvature counts
below rely on.

Planarity is only enforced combinatorially: closed cycles, the edge
occurrence rule, and the Euler relation 1 - holes = V - E + F.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .farey import Slope
from .relator import riley_word, s_of_slope
from .words import (CyclicSequence, cyclic_s_sequence, free_reduce,
                    inverse_word, is_cyclically_reduced, is_reduced,
                    reconstruct)
from .cancel import SymmetrizedSet, symmetrize


class MapError(ValueError):
    """The combinatorial data does not describe a valid map."""


class StructureError(RuntimeError):
    """A diagram violated the layered structure during decomposition."""


@dataclass(frozen=True)
class Dart:
    id: int
    twin: int
    origin: int
    label: str


class PlanarMap:
    """A finite 2-complex given by darts, face cycles and boundary cycles."""

    def __init__(self, darts, faces, boundaries):
        self.darts = {d.id: d for d in darts}
        self.faces = tuple(tuple(cycle) for cycle in faces)
        self.boundaries = tuple(tuple(cycle) for cycle in boundaries)
        self._validate()

    # -- basic queries -------------------------------------------------

    def dart(self, dart_id) -> Dart:
        return self.darts[dart_id]

    def dest(self, dart_id) -> int:
        return self.darts[self.darts[dart_id].twin].origin

    @property
    def vertices(self):
        return sorted({d.origin for d in self.darts.values()})

    @property
    def edge_count(self) -> int:
        return len(self.darts) // 2

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def holes(self) -> int:
        return len(self.boundaries) - 1

    def vertex_degree(self, v) -> int:
        deg = sum(1 for d in self.darts.values() if d.origin == v)
        if deg == 0:
            raise KeyError(f"unknown vertex {v!r}")
        return deg

    def face_degree(self, index) -> int:
        return len(self.faces[index])

    def boundary_vertices(self):
        seen = set()
        for cycle in self.boundaries:
            for d in cycle:
                seen.add(self.darts[d].origin)
        return seen

    def interior_vertices(self):
        return set(self.vertices) - self.boundary_vertices()

    def path_label(self, dart_ids) -> str:
        return "".join(self.darts[d].label for d in dart_ids)

    def is_connected(self) -> bool:
        if not self.darts:
            return True
        adjacency = {}
        for d in self.darts.values():
            adjacency.setdefault(d.origin, set()).add(self.dest(d.id))
        start = next(iter(adjacency))
        seen = {start}
        stack = [start]
        while stack:
            for nxt in adjacency.get(stack.pop(), ()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return len(seen) == len(adjacency)

    def __eq__(self, other):
        if not isinstance(other, PlanarMap):
            return NotImplemented
        return (self.darts == other.darts and self.faces == other.faces
                and self.boundaries == other.boundaries)

    def __repr__(self):
        return (f"PlanarMap(V={len(self.vertices)}, E={self.edge_count}, "
                f"F={self.face_count}, holes={self.holes})")

    # -- validation ----------------------------------------------------

    def _validate(self):
        if not self.darts:
            raise MapError("a map needs at least one edge")
        if not self.boundaries:
            raise MapError("a planar map has at least one boundary cycle")
        for d in self.darts.values():
            if d.twin not in self.darts:
                raise MapError(f"dart {d.id} has missing twin {d.twin}")
            twin = self.darts[d.twin]
            if twin.twin != d.id or twin.id == d.id:
                raise MapError(f"twin pairing broken at dart {d.id}")
            if twin.label != inverse_word(d.label):
                raise MapError(f"labels of dart {d.id} and its twin disagree")
            if not d.label:
                raise MapError(f"dart {d.id} has an empty label")
            if not is_reduced(d.label):
                raise MapError(f"dart {d.id} has an unreduced label")
        for cycle in list(self.faces) + list(self.boundaries):
            if not cycle:
                raise MapError("empty cycle")
            for here, there in zip(cycle, cycle[1:] + cycle[:1]):
                if self.dest(here) != self.darts[there].origin:
                    raise MapError(f"cycle broken between darts {here} and {there}")
        occurrences = {}
        for cycle in list(self.faces) + list(self.boundaries):
            for d in cycle:
                edge = min(d, self.darts[d].twin)
                occurrences[edge] = occurrences.get(edge, 0) + 1
        for d in self.darts.values():
            edge = min(d.id, d.twin)
            if occurrences.get(edge, 0) != 2:
                raise MapError(
                    f"edge {edge} appears {occurrences.get(edge, 0)} times "
                    "across face and boundary cycles (expected 2)")
        euler = len(self.vertices) - self.edge_count + self.face_count
        if euler != 1 - self.holes:
            raise MapError(
                f"Euler relation fails: V-E+F = {euler}, 1-holes = {1 - self.holes}")


def degree(m: PlanarMap, *, vertex=None, face=None) -> int:
    """Degree of a vertex (outgoing darts) or of a face (cycle length)."""
    if (vertex is None) == (face is None):
        raise ValueError("pass exactly one of vertex=, face=")
    if vertex is not None:
        return m.vertex_degree(vertex)
    return m.face_degree(face)


def is_pq_map(m: PlanarMap, p: int, q: int) -> bool:
    """Interior vertices have degree >= p and all faces degree >= q."""
    for v in m.interior_vertices():
        if m.vertex_degree(v) < p:
            return False
    return all(m.face_degree(i) >= q for i in range(m.face_count))


class AnnularDiagram:
    """A map with one hole; boundaries[0] is outer, boundaries[1] inner."""

    def __init__(self, planar_map: PlanarMap):
        if planar_map.holes != 1:
            raise MapError("an annular diagram has exactly one hole")
        self.map = planar_map

    @property
    def outer_cycle(self):
        return self.map.boundaries[0]

    @property
    def inner_cycle(self):
        return self.map.boundaries[1]

    def outer_label(self) -> str:
        return self.map.path_label(self.outer_cycle)

    def inner_label(self) -> str:
        return self.map.path_label(self.inner_cycle)

    def face_label(self, index) -> str:
        return self.map.path_label(self.map.faces[index])

    def __eq__(self, other):
        if not isinstance(other, AnnularDiagram):
            return NotImplemented
        return self.map == other.map

    def __repr__(self):
        return (f"AnnularDiagram(faces={self.map.face_count}, "
                f"outer={self.outer_label()!r}, inner={self.inner_label()!r})")


def is_reduced_diagram(diagram, R: SymmetrizedSet) -> bool:
    """No interior edge has mirror-inverse complements in its two faces.

    For faces D1, D2 sharing an edge e, with boundary cycles e.d1 and
    d2.e^{-1}, the diagram is reduced when label(d2) never equals
    label(d1)^{-1}.  Every face boundary label must lie in R.
    """
    m = diagram.map if isinstance(diagram, AnnularDiagram) else diagram
    for index in range(m.face_count):
        if m.path_label(m.faces[index]) not in R:
            raise ValueError(f"face {index} label is not in the relator set")
    location = {}
    for index, cycle in enumerate(m.faces):
        for pos, d in enumerate(cycle):
            location[d] = (index, pos)
    for d, (i1, p1) in location.items():
        twin = m.darts[d].twin
        if twin not in location:
            continue
        i2, p2 = location[twin]
        cycle1 = m.faces[i1]
        cycle2 = m.faces[i2]
        rest1 = cycle1[p1 + 1:] + cycle1[:p1]
        rest2 = cycle2[p2 + 1:] + cycle2[:p2]
        if m.path_label(rest2) == inverse_word(m.path_label(rest1)):
            return False
    return True


@dataclass(frozen=True)
class CurvatureReport:
    """Both sides of the combinatorial curvature identity.

    lhs = 4 - 4*holes; rhs adds the boundary-vertex terms (3 - deg), the
    interior-vertex terms (4 - deg), the face terms (4 - deg), and the
    correction V* - E*, where E* counts boundary edges with multiplicity.
    On consistent data lhs == rhs, and lhs <= rhs without the correction
    exactly captures the nonpositively-curved case.
    """

    lhs: int
    rhs: int
    holds: bool
    boundary_term: int
    interior_term: int
    face_term: int
    v_boundary: int
    e_boundary: int


def gauss_bonnet_check(m: PlanarMap) -> CurvatureReport:
    if not m.is_connected():
        raise MapError("curvature counts need a connected map")
    boundary = m.boundary_vertices()
    boundary_term = sum(3 - m.vertex_degree(v) for v in boundary)
    interior_term = sum(4 - m.vertex_degree(v) for v in m.interior_vertices())
    face_term = sum(4 - m.face_degree(i) for i in range(m.face_count))
    v_dot = len(boundary)
    e_dot = sum(len(cycle) for cycle in m.boundaries)
    lhs = 4 - 4 * m.holes
    rhs = boundary_term + interior_term + face_term + v_dot - e_dot
    return CurvatureReport(lhs=lhs, rhs=rhs, holds=lhs <= rhs,
                           boundary_term=boundary_term,
                           interior_term=interior_term, face_term=face_term,
                           v_boundary=v_dot, e_boundary=e_dot)


# -- fan construction ---------------------------------------------------


def build_fan(p: int, s: Slope, layers: int = 1) -> AnnularDiagram:
    """The layered annular diagram joining the loop of s to its partner.

    Each ring carries one face per block pair of the current rim label;
    every face label is a rotation of the base relator of 1/p or of its
    inverse, read as an alternating word of length 2p.  The outer label
    is the relator of s read from the basepoint; the inner label is an
    alternating word whose cyclic block sequence is the entrywise
    complement (p - block) of the outer one, flipping back and forth as
    further rings are attached.
    """
    if p < 2:
        raise ValueError("need p >= 2")
    if layers < 1:
        raise ValueError("need at least one layer")
    if not isinstance(s, Slope):
        s = Slope.from_fraction(s)
    if s.is_infinity or s.numerator <= 0:
        raise ValueError(f"slope {s} is not in the fundamental intervals of 1/{p}")
    from .farey import fundamental_intervals
    fd = fundamental_intervals(Slope(1, p))
    if not fd.contains(s):
        raise ValueError(f"slope {s} is not in the fundamental intervals of 1/{p}")
    relators = symmetrize(riley_word(Slope(1, p)).word)
    blocks = s_of_slope(s)
    if max(blocks) >= p:
        raise MapError(f"blocks of {s} reach {max(blocks)} >= p")
    n = s.numerator
    u_s = riley_word(s).word

    darts = {}
    next_dart = 0
    next_vertex = 2 * n

    def add_edge(v_from, v_to, label):
        nonlocal next_dart
        d = Dart(next_dart, next_dart + 1, v_from, label)
        t = Dart(next_dart + 1, next_dart, v_to, inverse_word(label))
        darts[d.id] = d
        darts[t.id] = t
        next_dart += 2
        return d.id

    # Outer ring: one dart per block of the outer label.
    rim = []
    pos = 0
    for i, size in enumerate(blocks):
        rim.append(add_edge(i, (i + 1) % (2 * n), u_s[pos:pos + size]))
        pos += size
    outer_cycle = tuple(rim)

    faces = []
    interface = rim
    for ring in range(layers):
        new_interface = []
        for j in range(n):
            d0, d1 = interface[2 * j], interface[2 * j + 1]
            lbl0, lbl1 = darts[d0].label, darts[d1].label
            a_len, b_len = len(lbl0), len(lbl1)
            face_word = reconstruct(lbl0[0], (a_len, p, p - a_len))
            if face_word not in relators:
                raise MapError(f"face label {face_word!r} is not a relator")
            part_x = face_word[a_len + b_len:a_len + p]
            part_y = face_word[a_len + p:]
            mid = next_vertex
            next_vertex += 1
            origin0 = darts[d0].origin
            dest1 = darts[darts[d1].twin].origin
            g0 = add_edge(origin0, mid, inverse_word(part_y))
            g1 = add_edge(mid, dest1, inverse_word(part_x))
            faces.append((d0, d1, darts[g1].twin, darts[g0].twin))
            new_interface.extend((g0, g1))
        if ring + 1 < layers:
            interface = new_interface[1:] + new_interface[:1]
        else:
            interface = new_interface
    inner_cycle = tuple(darts[g].twin for g in reversed(interface))

    planar = PlanarMap(darts.values(), faces, (outer_cycle, inner_cycle))
    return AnnularDiagram(planar)


# -- structure validation ------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    """Outcome of the four structural clauses for an annular diagram."""

    annular: bool
    boundaries_simple: bool
    no_shared_boundary_edge: bool
    boundary_degrees_alternate: bool
    interior_degrees_four: bool
    face_degrees_four: bool

    @property
    def ok(self) -> bool:
        return (self.annular and self.boundaries_simple
                and self.no_shared_boundary_edge
                and self.boundary_degrees_alternate
                and self.interior_degrees_four and self.face_degrees_four)

    @property
    def clauses(self):
        return (self.boundaries_simple and self.no_shared_boundary_edge,
                self.boundary_degrees_alternate,
                self.interior_degrees_four,
                self.face_degrees_four)


def validate_structure(diagram) -> StructureReport:
    """Check the layered-annulus conclusions on a concrete diagram.

    (1) both boundary cycles are simple and share no edge, (2) boundary
    vertices have degree 2 or 4 and the two values alternate along each
    cycle, (3) interior vertices have degree 4, (4) faces have degree 4.
    """
    if isinstance(diagram, AnnularDiagram):
        m = diagram.map
        annular = True
    else:
        m = diagram
        annular = m.holes == 1 and len(m.boundaries) == 2
    if not annular:
        return StructureReport(False, False, False, False, False, False)

    simple = True
    for cycle in m.boundaries:
        verts = [m.darts[d].origin for d in cycle]
        if len(verts) != len(set(verts)):
            simple = False

    outer_edges = {min(d, m.darts[d].twin) for d in m.boundaries[0]}
    inner_edges = {min(d, m.darts[d].twin) for d in m.boundaries[1]}
    no_shared_edge = not (outer_edges & inner_edges)

    alternate = True
    for cycle in m.boundaries:
        degs = [m.vertex_degree(m.darts[d].origin) for d in cycle]
        if any(deg not in (2, 4) for deg in degs):
            alternate = False
            continue
        size = len(degs)
        if size % 2 == 1 and size > 1:
            alternate = False
            continue
        if any(degs[i] == degs[(i + 1) % size] for i in range(size)) and size > 1:
            alternate = False

    interior_four = all(m.vertex_degree(v) == 4 for v in m.interior_vertices())
    faces_four = all(m.face_degree(i) == 4 for i in range(m.face_count))
    return StructureReport(annular=annular, boundaries_simple=simple,
                           no_shared_boundary_edge=no_shared_edge,
                           boundary_degrees_alternate=alternate,
                           interior_degrees_four=interior_four,
                           face_degrees_four=faces_four)


@dataclass(frozen=True)
class Layer:
    """One ring of faces peeled from the outer boundary inward."""

    faces: tuple[int, ...]
    outer_rim: tuple[int, ...]
    inner_rim: tuple[int, ...]


def layer_decomposition(diagram: AnnularDiagram):
    """Peel rings of faces meeting the current outer boundary in an edge.

    Every face must meet the rim in exactly two darts and contribute two
    rim darts inward; the peeled rings partition the faces and the last
    rim must coincide with the inner boundary.
    """
    m = diagram.map
    remaining = set(range(m.face_count))
    current = list(diagram.outer_cycle)
    layers = []
    while remaining:
        rim_set = set(current)
        ring = sorted(i for i in remaining if set(m.faces[i]) & rim_set)
        if not ring:
            raise StructureError("no face meets the outer rim")
        inner_darts = []
        covered = set()
        for i in ring:
            on_rim = [d for d in m.faces[i] if d in rim_set]
            off_rim = [d for d in m.faces[i] if d not in rim_set]
            if len(on_rim) != 2 or len(off_rim) != 2:
                raise StructureError(
                    f"face {i} meets the rim in {len(on_rim)} darts, not 2")
            covered.update(on_rim)
            inner_darts.extend(off_rim)
        if covered != rim_set:
            raise StructureError("peeled ring does not cover the outer rim")
        ordered = _order_cycle(m, inner_darts)
        layers.append(Layer(faces=tuple(ring), outer_rim=tuple(current),
                            inner_rim=tuple(ordered)))
        remaining -= set(ring)
        if remaining:
            current = [m.darts[d].twin for d in ordered]
    if set(layers[-1].inner_rim) != set(diagram.inner_cycle):
        raise StructureError("final rim does not match the inner boundary")
    return layers


def _order_cycle(m, dart_ids):
    by_origin = {}
    for d in dart_ids:
        if m.darts[d].origin in by_origin:
            raise StructureError("rim darts do not form a simple cycle")
        by_origin[m.darts[d].origin] = d
    start = min(dart_ids)
    ordered = [start]
    while len(ordered) < len(dart_ids):
        nxt = by_origin.get(m.dest(ordered[-1]))
        if nxt is None or nxt == start:
            raise StructureError("rim darts do not close up into one cycle")
        ordered.append(nxt)
    if m.dest(ordered[-1]) != m.darts[start].origin:
        raise StructureError("rim darts do not close up into one cycle")
    return ordered


# -- serialization -------------------------------------------------------


def emit(diagram: AnnularDiagram, fmt: str) -> bytes:
    """Serialize a diagram as lossless JSON or as a dot/svg rendering."""
    if not isinstance(diagram, AnnularDiagram) or not diagram.map.faces:
        raise ValueError("cannot emit an empty diagram")
    if fmt == "json":
        return _emit_json(diagram)
    if fmt == "dot":
        return _emit_dot(diagram)
    if fmt == "svg":
        return _emit_svg(diagram)
    raise ValueError(f"unknown format {fmt!r}")


def to_dict(diagram: AnnularDiagram) -> dict:
    m = diagram.map
    return {
        "vertices": m.vertices,
        "darts": [{"id": d.id, "twin": d.twin, "origin": d.origin,
                   "label": d.label}
                  for d in sorted(m.darts.values(), key=lambda d: d.id)],
        "faces": [list(cycle) for cycle in m.faces],
        "outer": list(diagram.outer_cycle),
        "inner": list(diagram.inner_cycle),
    }


def _emit_json(diagram: AnnularDiagram) -> bytes:
    return (json.dumps(to_dict(diagram), separators=(",", ":")) + "\n").encode()


def parse_json(data) -> AnnularDiagram:
    if isinstance(data, bytes):
        data = data.decode()
    payload = json.loads(data)
    darts = [Dart(d["id"], d["twin"], d["origin"], d["label"])
             for d in payload["darts"]]
    planar = PlanarMap(darts, [tuple(c) for c in payload["faces"]],
                       (tuple(payload["outer"]), tuple(payload["inner"])))
    return AnnularDiagram(planar)


def _emit_dot(diagram: AnnularDiagram) -> bytes:
    m = diagram.map
    lines = ["digraph annular_diagram {"]
    for v in m.vertices:
        lines.append(f'  v{v} [shape=circle,label="v{v}"];')
    for index in range(m.face_count):
        lines.append(f'  f{index} [shape=box,label="{diagram.face_label(index)}"];')
    for cycle in (diagram.outer_cycle, diagram.inner_cycle):
        for d in cycle:
            dart = m.darts[d]
            lines.append(
                f'  v{dart.origin} -> v{m.dest(d)} [label="{dart.label}"];')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def _vertex_layout(diagram: AnnularDiagram):
    """Radial coordinates: boundary rings at fixed radii, rims between."""
    import math as _math

    m = diagram.map
    try:
        rings = [layer.outer_rim for layer in layer_decomposition(diagram)]
        rings.append(diagram.inner_cycle)
    except StructureError:
        rings = [diagram.outer_cycle, diagram.inner_cycle]
    placed = {}
    depth_count = len(rings)
    for depth, ring in enumerate(rings):
        radius = 200.0 - (120.0 * depth / max(1, depth_count - 1))
        cycle_vertices = [m.darts[d].origin for d in ring]
        for k, v in enumerate(cycle_vertices):
            if v not in placed:
                angle = 2 * _math.pi * k / len(cycle_vertices)
                placed[v] = (250 + radius * _math.cos(angle),
                             250 - radius * _math.sin(angle))
    for k, v in enumerate(m.vertices):
        if v not in placed:
            placed[v] = (250 + 10.0 * k, 250.0)
    return placed


def _emit_svg(diagram: AnnularDiagram) -> bytes:
    m = diagram.map
    pos = _vertex_layout(diagram)
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="500" height="500" '
             'viewBox="0 0 500 500">']
    seen = set()
    for d in sorted(m.darts):
        dart = m.darts[d]
        edge = min(d, dart.twin)
        if edge in seen:
            continue
        seen.add(edge)
        x1, y1 = pos[dart.origin]
        x2, y2 = pos[m.dest(d)]
        parts.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" '
                     f'y2="{y2:.1f}" stroke="black"/>')
        parts.append(f'<text x="{(x1 + x2) / 2:.1f}" y="{(y1 + y2) / 2:.1f}" '
                     f'font-size="10">{dart.label}</text>')
    for v in m.vertices:
        x, y = pos[v]
        parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="3" fill="black"/>')
        parts.append(f'<text x="{x + 4:.1f}" y="{y - 4:.1f}" '
                     f'font-size="9">v{v}</text>')
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode()


# -- derived invariants ---------------------------------------------------


def outer_block_sequence(diagram: AnnularDiagram) -> tuple[int, ...]:
    from .words import s_sequence
    return s_sequence(diagram.outer_label())


def inner_cyclic_blocks(diagram: AnnularDiagram) -> CyclicSequence:
    label = diagram.inner_label()
    if not is_cyclically_reduced(label):
        raise MapError("inner label is not cyclically reduced")
    return cyclic_s_sequence(label)
