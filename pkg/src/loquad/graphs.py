"""Finite simple graphs and common-neighbor machinery.

Vertices are dense integer indices 0..n-1; optional display names are kept
separately.  Adjacency is stored both as frozensets (for iteration) and as
integer bitmasks (for the common-neighbor kernels).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Malformed graph data (asymmetric adjacency, loops, bad indices)."""


class CapExceeded(RuntimeError):
    """An exact computation was requested beyond its configured size cap."""


@dataclass(frozen=True)
class Graph:
    """Immutable finite simple undirected graph."""

    n: int
    adj: tuple[frozenset[int], ...]
    names: tuple[str, ...]
    masks: tuple[int, ...] = field(repr=False, default=())

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]],
                   names: Optional[Sequence[str]] = None) -> "Graph":
        if n < 1:
            raise GraphError("graph must have at least one vertex")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        if names is None:
            names = tuple(str(i) for i in range(n))
        else:
            names = tuple(names)
            if len(names) != n:
                raise GraphError("names length must equal vertex count")
        masks = tuple(sum(1 << w for w in a) for a in adj)
        return Graph(n, tuple(frozenset(a) for a in adj), names, masks)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Image under the vertex bijection v -> perm[v]."""
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        names = [""] * self.n
        for v in range(self.n):
            names[perm[v]] = self.names[v]
        return Graph.from_edges(self.n, edges, names)


def _to_mask(vertices: Iterable[int]) -> int:
    return sum(1 << v for v in set(vertices))


def _from_mask(mask: int) -> frozenset[int]:
    out = set()
    v = 0
    while mask:
        if mask & 1:
            out.add(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def common_neighbors_mask(g: Graph, mask: int) -> int:
    """Bitmask kernel: vertices adjacent to every vertex of `mask`.

    The empty set has every vertex as a (vacuous) common neighbor.
    """
    result = g.full_mask()
    v = 0
    while mask:
        if mask & 1:
            result &= g.masks[v]
            if not result:
                return 0
        mask >>= 1
        v += 1
    return result


def common_neighbors(g: Graph, a: Iterable[int]) -> frozenset[int]:
    """Vertices adjacent to every vertex of `a` (all of V for empty `a`)."""
    return _from_mask(common_neighbors_mask(g, _to_mask(a)))


def cn_closure(g: Graph, a: Iterable[int]) -> frozenset[int]:
    """The double common-neighbor image CN(CN(a))."""
    m = common_neighbors_mask(g, common_neighbors_mask(g, _to_mask(a)))
    return _from_mask(m)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


@dataclass(frozen=True)
class BipartiteVerdict:
    bipartite: bool
    coloring: Optional[tuple[int, ...]] = None
    odd_walk: Optional[tuple[int, ...]] = None   # closed walk of odd length


def is_bipartite(g: Graph) -> BipartiteVerdict:
    """2-colorability check; a failing run returns an odd closed walk."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop(0)
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    # Tree paths to the common root close an odd walk.
                    pu, pw = [u], [w]
                    while pu[-1] != -1:
                        pu.append(parent[pu[-1]])
                    while pw[-1] != -1:
                        pw.append(parent[pw[-1]])
                    pu, pw = pu[:-1], pw[:-1]
                    walk = tuple(reversed(pu)) + tuple(pw[:-1])
                    return BipartiteVerdict(False, odd_walk=walk)
    return BipartiteVerdict(True, coloring=tuple(color))


def find_k23(g: Graph) -> Optional[tuple[tuple[int, int], tuple[int, int, int]]]:
    """A K(2,3) subgraph as shore tuples, or None.

    Scans vertex pairs for >= 3 common neighbors, which is equivalent to
    containing K(2,3) as a subgraph.
    """
    for u, v in itertools.combinations(range(g.n), 2):
        cn = common_neighbors(g, (u, v))
        if len(cn) >= 3:
            b = tuple(sorted(cn)[:3])
            return ((u, v), b)  # type: ignore[return-value]
    return None


def find_domination(g: Graph) -> Optional[tuple[int, int]]:
    """Distinct (u, v) with N(u) a subset of N(v), or None."""
    for u in range(g.n):
        for v in range(g.n):
            if u != v and g.adj[u] <= g.adj[v]:
                return (u, v)
    return None


def is_k23(g: Graph) -> bool:
    """Whether g is (isomorphic to) the complete bipartite graph K(2,3)."""
    if g.n != 5 or g.num_edges != 6:
        return False
    degs = sorted(g.degree(v) for v in range(g.n))
    if degs != [2, 2, 2, 3, 3]:
        return False
    big = [v for v in range(g.n) if g.degree(v) == 3]
    small = [v for v in range(g.n) if g.degree(v) == 2]
    return all(g.adj[a] == frozenset(small) for a in big)


# ---------------------------------------------------------------------------
# Exact chromatic number
# ---------------------------------------------------------------------------

DEFAULT_CHROMATIC_CAP = 64


def _greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily from the highest-degree vertex."""
    order = sorted(range(g.n), key=g.degree, reverse=True)
    clique: list[int] = []
    for v in order:
        if all(v in g.adj[u] for u in clique):
            clique.append(v)
    return clique


def _greedy_coloring(g: Graph) -> list[int]:
    order = sorted(range(g.n), key=g.degree, reverse=True)
    color = [-1] * g.n
    for v in order:
        used = {color[w] for w in g.adj[v] if color[w] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def _try_k_coloring(g: Graph, k: int, seed: Sequence[int]) -> Optional[list[int]]:
    """Backtracking k-coloring with the seed clique pre-colored."""
    color = [-1] * g.n
    for i, v in enumerate(seed):
        if i >= k:
            return None
        color[v] = i
    rest = sorted((v for v in range(g.n) if color[v] < 0),
                  key=g.degree, reverse=True)

    def extend(i: int, used: int) -> bool:
        if i == len(rest):
            return True
        v = rest[i]
        forbidden = {color[w] for w in g.adj[v] if color[w] >= 0}
        for c in range(min(used + 1, k)):
            if c not in forbidden:
                color[v] = c
                if extend(i + 1, max(used, c + 1)):
                    return True
                color[v] = -1
        return False

    return color if extend(0, len(seed)) else None


def chromatic_number(g: Graph, cap: int = DEFAULT_CHROMATIC_CAP
                     ) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number with an optimal coloring as certificate."""
    if g.n > cap:
        raise CapExceeded(f"exact coloring capped at n <= {cap}, got n={g.n}")
    if g.num_edges == 0:
        return 1, tuple([0] * g.n)
    clique = _greedy_clique(g)
    lo = len(clique)
    greedy = _greedy_coloring(g)
    hi = max(greedy) + 1
    best = tuple(greedy)
    k = lo
    while k < hi:
        attempt = _try_k_coloring(g, k, clique)
        if attempt is not None:
            best = tuple(attempt)
            hi = k
            break
        k += 1
    else:
        k = hi
    assert max(best) + 1 == k and all(best[u] != best[v] for u, v in g.edges)
    return k, best


# ---------------------------------------------------------------------------
# Kronecker (bipartite) double cover
# ---------------------------------------------------------------------------

def kronecker_cover(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """The bipartite double cover on (v, layer), with the layer-flip involution.

    Vertex (v, layer) is encoded as v + layer * n.
    """
    edges = []
    for u, v in g.edges:
        edges.append((u, v + g.n))
        edges.append((v, u + g.n))
    names = tuple(f"{g.names[v]}+" for v in range(g.n)) + \
        tuple(f"{g.names[v]}-" for v in range(g.n))
    cover = Graph.from_edges(2 * g.n, edges, names)
    involution = tuple((v + g.n) % (2 * g.n) for v in range(2 * g.n))
    return cover, involution


# ---------------------------------------------------------------------------
# Cycle space over GF(2)
# ---------------------------------------------------------------------------

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CycleSpaceBasis:
    """Spanning tree plus the fundamental cycle of each non-tree edge."""

    tree_edges: frozenset[Edge]
    nontree_edges: tuple[Edge, ...]
    cycles: tuple[tuple[int, ...], ...]     # vertex sequences, one per chord

    def cycle_edges(self, i: int) -> frozenset[Edge]:
        c = self.cycles[i]
        return frozenset(norm_edge(c[j], c[(j + 1) % len(c)])
                         for j in range(len(c)))

    def decompose(self, edge_set: frozenset[Edge]) -> tuple[int, ...]:
        """GF(2) coordinates of a cycle-space element in this basis."""
        return tuple(1 if e in edge_set else 0 for e in self.nontree_edges)


def cycle_space_basis(g: Graph) -> CycleSpaceBasis:
    """BFS spanning tree and its fundamental cycles (connected graphs only)."""
    if not is_connected(g):
        raise GraphError("cycle space basis requires a connected graph")
    parent = [-1] * g.n
    depth = [0] * g.n
    seen = [False] * g.n
    seen[0] = True
    order = [0]
    queue = [0]
    tree: set[Edge] = set()
    while queue:
        u = queue.pop(0)
        for w in sorted(g.adj[u]):
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                depth[w] = depth[u] + 1
                tree.add(norm_edge(u, w))
                order.append(w)
                queue.append(w)
    chords = [e for e in g.edges if e not in tree]
    cycles = []
    for u, v in chords:
        pu, pv = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
            pu.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            pv.append(b)
        while a != b:
            a, b = parent[a], parent[b]
            pu.append(a)
            pv.append(b)
        # pu ends at the meeting vertex; pv's copy of it is dropped.
        cycles.append(tuple(pu + list(reversed(pv[:-1]))))
    return CycleSpaceBasis(frozenset(tree), tuple(chords), tuple(cycles))


# ---------------------------------------------------------------------------
# Simple cycle enumeration
# ---------------------------------------------------------------------------

def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically minimal rotation/reflection of a vertex cycle."""
    k = len(cycle)
    best = None
    for seq in (list(cycle), list(reversed(cycle))):
        for s in range(k):
            rot = tuple(seq[(s + j) % k] for j in range(k))
            if best is None or rot < best:
                best = rot
    assert best is not None
    return best


def enumerate_simple_cycles(g: Graph, max_count: int = 100000
                            ) -> tuple[list[tuple[int, ...]], bool]:
    """All simple cycles as canonical vertex tuples, plus an overflow flag.

    Backtracks from each minimal vertex, visiting only larger vertices, and
    kills reflections by requiring second vertex < last vertex.  When the
    count would exceed `max_count` the search stops and the flag is True.
    """
    cycles: list[tuple[int, ...]] = []
    overflow = False
    for root in range(g.n):
        path = [root]
        on_path = {root}

        def dfs(u: int) -> bool:
            for w in sorted(g.adj[u]):
                if w == root and len(path) >= 3 and path[1] < path[-1]:
                    if len(cycles) >= max_count:
                        return False
                    cycles.append(canonical_cycle(path))
                elif w > root and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    ok = dfs(w)
                    path.pop()
                    on_path.remove(w)
                    if not ok:
                        return False
            return True

        if not dfs(root):
            overflow = True
            break
    return cycles, overflow


def four_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All simple 4-cycles, via common-neighbor pairs of the diagonals."""
    out = set()
    for a, c in itertools.combinations(range(g.n), 2):
        cn = sorted(common_neighbors(g, (a, c)))
        for b, d in itertools.combinations(cn, 2):
            out.add(canonical_cycle((a, b, c, d)))
    return sorted(out)


# ---------------------------------------------------------------------------
# Graph isomorphism (desk scale)
# ---------------------------------------------------------------------------

def _iso_signature(g: Graph, v: int) -> tuple:
    return (g.degree(v), tuple(sorted(g.degree(w) for w in g.adj[v])))


def find_isomorphism(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """A vertex bijection g -> h preserving adjacency, or None.

    Plain backtracking with degree-profile pruning; intended for the small
    instances this library works with.
    """
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    sig_g = [_iso_signature(g, v) for v in range(g.n)]
    sig_h = [_iso_signature(h, v) for v in range(h.n)]
    if sorted(sig_g) != sorted(sig_h):
        return None
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used[w] or sig_g[v] != sig_h[w]:
                continue
            ok = True
            for x in g.adj[v]:
                if mapping[x] >= 0 and mapping[x] not in h.adj[w]:
                    ok = False
                    break
            if ok:
                for x in range(g.n):
                    if mapping[x] >= 0 and x not in g.adj[v] \
                            and mapping[x] in h.adj[w]:
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return tuple(mapping) if extend(0) else None
