"""Closed-surface recognition and classification for 2-complexes.

A complex is a closed surface iff it is pure 2-dimensional, connected,
every edge lies in exactly two triangles and every vertex link is a single
cycle.  Closed surfaces are classified by Euler characteristic and
orientability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .complexes import ComplexError, HypothesisError, SimplicialComplex


@dataclass(frozen=True)
class SurfaceClass:
    orientable: bool
    genus: int
    euler: int

    def __post_init__(self):
        expected = 2 - 2 * self.genus if self.orientable else 2 - self.genus
        if expected != self.euler:
            raise ComplexError(
                f"inconsistent surface class: orientable={self.orientable} "
                f"genus={self.genus} euler={self.euler}")

    def describe(self) -> str:
        side = "orientable" if self.orientable else "non-orientable"
        return f"{side} genus {self.genus} (euler {self.euler})"


@dataclass(frozen=True)
class SurfaceDefect:
    kind: str            # not-pure | edge-degree | bad-link | disconnected
    detail: str


@dataclass(frozen=True)
class SurfaceVerdict:
    is_surface: bool
    witness: Optional[SurfaceDefect] = None
    surface: Optional[SurfaceClass] = None


def _link_is_single_cycle(K: SimplicialComplex, v: int,
                          tris: set[frozenset[int]]) -> bool:
    # link edges of v: pairs (a, b) with {v,a,b} a triangle
    link_adj: dict[int, set[int]] = {}
    for t in tris:
        if v in t:
            a, b = sorted(t - {v})
            link_adj.setdefault(a, set()).add(b)
            link_adj.setdefault(b, set()).add(a)
    if not link_adj:
        return False
    if any(len(nb) != 2 for nb in link_adj.values()):
        return False
    # single cycle: connected 2-regular
    start = next(iter(link_adj))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in link_adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(link_adj)


def check_surface(K: SimplicialComplex) -> SurfaceVerdict:
    """Combinatorial closed-surface test; defects are returned, not raised."""
    for f in K.facets:
        if len(f) != 3:
            return SurfaceVerdict(False, SurfaceDefect(
                "not-pure", f"facet of size {len(f)}: "
                f"{tuple(K.labels[v] for v in sorted(f))}"))
    tris = K.triangles()
    edge_count: dict[frozenset[int], int] = {}
    for t in tris:
        for e in (frozenset(p) for p in
                  ((a, b) for a in t for b in t if a < b)):
            edge_count[e] = edge_count.get(e, 0) + 1
    for e, c in sorted(edge_count.items(), key=lambda kv: sorted(kv[0])):
        if c != 2:
            u, v = sorted(e)
            return SurfaceVerdict(False, SurfaceDefect(
                "edge-degree",
                f"edge ({K.labels[u]},{K.labels[v]}) in {c} triangles"))
    for v in range(K.num_vertices):
        if not _link_is_single_cycle(K, v, tris):
            return SurfaceVerdict(False, SurfaceDefect(
                "bad-link", f"link of {K.labels[v]} is not a single cycle"))
    skel = K.skeleton_graph()
    from .graphs import connected_components
    comps = connected_components(skel)
    if len(comps) != 1:
        return SurfaceVerdict(False, SurfaceDefect(
            "disconnected", f"{len(comps)} components"))
    chi = euler_characteristic(K)
    orient = orientability(K, _checked=True)
    genus = (2 - chi) // 2 if orient else 2 - chi
    return SurfaceVerdict(True, None, SurfaceClass(orient, genus, chi))


def euler_characteristic(K: SimplicialComplex) -> int:
    """V - E + F for complexes of dimension at most 2."""
    if K.dimension() > 2:
        raise ComplexError(
            f"euler characteristic limited to dimension <= 2, got "
            f"{K.dimension()}")
    return K.num_vertices - len(K.edge_set()) + len(K.triangles())


def orientability(K: SimplicialComplex, _checked: bool = False) -> bool:
    """Whether coherent triangle orientations exist (surface input only).

    Propagates orientations across shared edges breadth-first; a conflict
    means non-orientable.
    """
    if not _checked:
        v = check_surface(K)
        if not v.is_surface:
            raise HypothesisError("complex is a closed surface",
                                  v.witness.detail if v.witness else "")
    tris = sorted(K.triangles(), key=sorted)
    by_edge: dict[frozenset[int], list[int]] = {}
    for i, t in enumerate(tris):
        for e in (frozenset(p) for p in
                  ((a, b) for a in t for b in t if a < b)):
            by_edge.setdefault(e, []).append(i)
    # orientation of triangle i: an ordered tuple of its vertices
    orient: list[Optional[tuple[int, int, int]]] = [None] * len(tris)

    def induced(o: tuple[int, int, int]) -> set[tuple[int, int]]:
        a, b, c = o
        return {(a, b), (b, c), (c, a)}

    for start in range(len(tris)):
        if orient[start] is not None:
            continue
        a, b, c = sorted(tris[start])
        orient[start] = (a, b, c)
        queue = [start]
        while queue:
            i = queue.pop(0)
            oi = orient[i]
            assert oi is not None
            darts = induced(oi)
            for e in (frozenset(p) for p in
                      ((x, y) for x in tris[i] for y in tris[i] if x < y)):
                for j in by_edge[e]:
                    if j == i:
                        continue
                    u, v = sorted(e)
                    # i induces (u,v) or (v,u); j must induce the reverse
                    need = (v, u) if (u, v) in darts else (u, v)
                    w = next(iter(tris[j] - e))
                    oj = (need[0], need[1], w)
                    if orient[j] is None:
                        orient[j] = oj
                        queue.append(j)
                    else:
                        if induced(orient[j]) != induced(oj):
                            return False
    return True


def classify(K: SimplicialComplex) -> SurfaceClass:
    """Surface class from Euler characteristic and orientability."""
    v = check_surface(K)
    if not v.is_surface:
        raise HypothesisError("complex is a closed surface",
                              v.witness.detail if v.witness else "")
    assert v.surface is not None
    return v.surface
