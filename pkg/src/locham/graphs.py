"""Bounded-degree graphs: girth, powers, random ensembles, coarse-graining.

Also the edge-coloring scheduler used for circuit rounds and the heuristic
search for triangle-free coarse-grainings.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

INF = math.inf


class Graph:
    """Simple undirected graph on vertices 0..N-1 with a degree bound."""

    def __init__(self, vertex_count: int, edges, degree_bound: int | None = None):
        self.vertex_count = int(vertex_count)
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range")
            es.add((min(u, v), max(u, v)))
        self.edges = frozenset(es)
        self._adj = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            self._adj[u].append(v)
            self._adj[v].append(u)
        for a in self._adj:
            a.sort()
        maxdeg = max((len(a) for a in self._adj), default=0)
        self.degree_bound = maxdeg if degree_bound is None else int(degree_bound)
        if maxdeg > self.degree_bound:
            raise ValueError(f"degree {maxdeg} exceeds bound {self.degree_bound}")

    def neighbors(self, v: int) -> list:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def bfs_distances(self, source: int, cutoff: float = INF) -> dict:
        """Distances from source, truncated at cutoff."""
        dist = {source: 0}
        q = deque([source])
        while q:
            u = q.popleft()
            if dist[u] >= cutoff:
                continue
            for w in self._adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return dist

    def connected_components(self) -> list:
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            comp = []
            q = deque([s])
            seen[s] = True
            while q:
                u = q.popleft()
                comp.append(u)
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        q.append(w)
            comps.append(comp)
        return comps

    def __repr__(self):
        return f"Graph(N={self.vertex_count}, E={self.edge_count}, d<={self.degree_bound})"


@dataclass
class Clustering:
    """Disjoint vertex sets covering all vertices of a graph."""

    clusters: list
    max_cluster_size: int = 0

    def __post_init__(self):
        self.clusters = [sorted(int(v) for v in c) for c in self.clusters]
        seen = set()
        for c in self.clusters:
            for v in c:
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two clusters")
                seen.add(v)
        size = max((len(c) for c in self.clusters), default=0)
        if self.max_cluster_size == 0:
            self.max_cluster_size = size
        elif size > self.max_cluster_size:
            raise ValueError("cluster exceeds max_cluster_size")
        self._vertices = seen

    def covers(self, n: int) -> bool:
        return self._vertices == set(range(n))

    def assignment(self, n: int) -> list:
        out = [-1] * n
        for i, c in enumerate(self.clusters):
            for v in c:
                out[v] = i
        return out

    @classmethod
    def singletons(cls, n: int) -> "Clustering":
        return cls([[v] for v in range(n)])


@dataclass
class EnsembleParams:
    """Parameters of the random high-girth graph ensemble."""

    n: int
    d: int
    r: int
    seed: int = 0

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("n must be positive")
        if self.d < 4 or self.d % 4 != 0:
            raise ValueError("d must be >= 4 and divisible by 4")
        if self.r < 1:
            raise ValueError("r must be >= 1")


# ---------------------------------------------------------------------------
# Basic operations
# ---------------------------------------------------------------------------


def girth(g: Graph) -> float:
    """Length of the shortest cycle; math.inf for forests.

    BFS from every vertex; a non-tree edge at depths (a, b) witnesses a
    cycle of length a + b + 1 through the root's ball.
    """
    best = INF
    for s in range(g.vertex_count):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best - 1:
                continue
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def power(g: Graph, R: int) -> Graph:
    """G^R: same vertices, edge (i,j) iff 0 < dist(i,j) <= R."""
    if R < 1:
        raise ValueError("R must be >= 1")
    if R == 1:
        return Graph(g.vertex_count, g.edges, g.degree_bound)
    edges = set(g.edges)
    for s in range(g.vertex_count):
        dist = g.bfs_distances(s, cutoff=R)
        for v, d in dist.items():
            if 0 < d <= R and v > s:
                edges.add((s, v))
    return Graph(g.vertex_count, edges)


def count_triangles(g: Graph) -> int:
    """Number of 3-cliques."""
    count = 0
    adj = [set(g.neighbors(v)) for v in range(g.vertex_count)]
    for u, v in sorted(g.edges):
        for w in adj[u] & adj[v]:
            if w > v:
                count += 1
    return count


def triangles(g: Graph) -> list:
    out = []
    adj = [set(g.neighbors(v)) for v in range(g.vertex_count)]
    for u, v in sorted(g.edges):
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                out.append((u, v, w))
    return out


def coarse_grain(g: Graph, c: Clustering) -> Graph:
    """One vertex per cluster; edge iff some underlying edge crosses."""
    if not c.covers(g.vertex_count):
        raise ValueError("clustering does not cover the graph's vertices")
    assign = c.assignment(g.vertex_count)
    edges = set()
    for u, v in g.edges:
        a, b = assign[u], assign[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph(len(c.clusters), edges)


def edge_color(g: Graph) -> list:
    """Greedy partition of edges into matchings Y_1..Y_k, k <= 2*maxdeg - 1.

    Each round greedily packs a maximal matching from the remaining edges.
    """
    remaining = sorted(g.edges)
    rounds = []
    while remaining:
        used = set()
        this = []
        rest = []
        for u, v in remaining:
            if u in used or v in used:
                rest.append((u, v))
            else:
                this.append((u, v))
                used.add(u)
                used.add(v)
        rounds.append(this)
        remaining = rest
    if g.edge_count:
        assert len(rounds) <= 2 * g.max_degree() - 1
    return rounds


# ---------------------------------------------------------------------------
# Random ensemble
# ---------------------------------------------------------------------------


def _short_cycle_vertices(g: Graph, max_len: int) -> set:
    """Vertices lying on some cycle of length <= max_len (exact).

    A cycle of length L through s enters and leaves s via two distinct
    neighbors n1, n2 with dist(n1, n2) <= L - 2 in the graph without s,
    so a truncated BFS from each neighbor inside G - s decides it.
    """
    bad = set()
    cutoff = max_len - 2
    if cutoff < 1:
        return bad
    for s in range(g.vertex_count):
        nbrs = g.neighbors(s)
        if len(nbrs) < 2:
            continue
        nbr_set = set(nbrs)
        found = False
        for n1 in nbrs:
            dist = {n1: 0}
            q = deque([n1])
            while q:
                u = q.popleft()
                if dist[u] >= cutoff:
                    continue
                for w in g.neighbors(u):
                    if w == s or w in dist:
                        continue
                    dist[w] = dist[u] + 1
                    if w in nbr_set and w != n1:
                        found = True
                        break
                    q.append(w)
                if found:
                    break
            if found:
                break
        if found:
            bad.add(s)
    return bad


def sample_counterexample_graph(p: EnsembleParams):
    """Random graph sampler whose square resists triangle-free clustering.

    Build e0 by giving every vertex d/4 random partners (repeats kept
    once), then delete every vertex on a cycle of length <= 2r and every
    vertex of degree > d, with attached edges.  Returns
    (e0, e, removed_loop_vertices, removed_degree_edges).
    """
    rng = np.random.default_rng(p.seed)
    n, d, r = p.n, p.d, p.r
    edges = set()
    for i in range(n):
        if n == 1:
            break  # no valid partner exists
        for _ in range(d // 4):
            k = int(rng.integers(0, n - 1))
            if k >= i:
                k += 1
            edges.add((min(i, k), max(i, k)))
    e0 = Graph(n, edges)

    bad = _short_cycle_vertices(e0, 2 * r)
    removed_loop = len(bad)
    over = {v for v in range(n) if e0.degree(v) > d}
    # edges lost to the degree deletion alone (not already lost to loops)
    removed_degree_edges = sum(
        1
        for u, v in edges
        if (u in over or v in over) and u not in bad and v not in bad
    )
    dead = bad | over
    kept = [v for v in range(n) if v not in dead]
    relabel = {v: i for i, v in enumerate(kept)}
    new_edges = [
        (relabel[u], relabel[v]) for u, v in edges if u not in dead and v not in dead
    ]
    e = Graph(len(kept), new_edges, degree_bound=d)
    return e0, e, removed_loop, removed_degree_edges


# ---------------------------------------------------------------------------
# Triangle-free clustering search
# ---------------------------------------------------------------------------


@dataclass
class ClusterSearchResult:
    success: bool
    clustering: Clustering
    residual_triangles: int
    restarts_used: int
    seed: int = 0
    notes: list = field(default_factory=list)


def _residual(g: Graph, clustering: Clustering) -> int:
    return count_triangles(coarse_grain(g, clustering))


def _greedy_star_clustering(g: Graph, maxC: int, rng) -> Clustering:
    """Random-order star clustering: anchors absorb unclustered neighbors."""
    order = rng.permutation(g.vertex_count)
    assigned = [-1] * g.vertex_count
    clusters = []
    for v in order:
        v = int(v)
        if assigned[v] >= 0:
            continue
        members = [v]
        assigned[v] = len(clusters)
        free = [w for w in g.neighbors(v) if assigned[w] < 0]
        rng.shuffle(free)
        for w in free[: maxC - 1]:
            members.append(w)
            assigned[w] = len(clusters)
        clusters.append(members)
    return Clustering(clusters, maxC)


def _recover_tree_square_root(g: Graph):
    """Parent map of a tree T with g = T^2, or None.

    Strips leaf sibling groups iteratively: in T^2 the leaves below one
    parent form a closed-twin class dominated by the parent, and the
    induced graph on the non-leaves is the square of the stripped tree.
    """
    n = g.vertex_count
    if n == 0:
        return None
    active = set(range(n))
    adj = {v: set(g.neighbors(v)) for v in range(n)}
    parent = {}
    while len(active) > 2:
        closed = {v: (adj[v] & active) | {v} for v in active}
        classes = {}
        for v in active:
            classes.setdefault(frozenset(closed[v]), []).append(v)
        stripped = False
        # smallest closed neighborhoods first: deepest leaves
        for key, group in sorted(classes.items(), key=lambda kv: (len(kv[0]), min(kv[1]))):
            doms = [
                p
                for p in (key - set(group))
                if all(closed[c] - {c} - set(group) <= closed[p] for c in group)
            ]
            if not doms:
                continue
            p = min(doms, key=lambda u: len(closed[u]))
            for c in group:
                parent[c] = p
                active.discard(c)
            stripped = True
            break
        if not stripped:
            break
    rest = sorted(active)
    if not rest:
        return None
    # Terminal ambiguity: the leftover vertices are mutually within
    # distance 2 (e.g. a root with its children); try each as the hub and
    # keep the first parent map whose tree squares back to g.
    hubs = rest if len(rest) > 2 else rest[:1]
    for hub in hubs:
        cand = dict(parent)
        ok = True
        for v in rest:
            if v != hub:
                if hub not in adj[v] | {v}:
                    ok = False
                    break
                cand[v] = hub
        if not ok:
            continue
        cand[hub] = -1
        if len(cand) != n:
            continue
        tree_edges = [(v, p) for v, p in cand.items() if p >= 0]
        try:
            t = Graph(n, tree_edges)
        except ValueError:
            continue
        if t.edge_count == n - 1 and power(t, 2).edges == g.edges:
            return cand, hub
    return None


def _tree_power_clustering(g: Graph, maxC: int) -> Clustering | None:
    """Deterministic attempt assuming g is the square of a tree.

    Clusters are sibling groups at alternating depths together with all
    their children; such slices collapse T^2 to a tree.  Returns None
    when g is not recognized as a tree square or the slices exceed maxC.
    """
    rec = _recover_tree_square_root(g)
    if rec is None:
        return None
    parent, root = rec
    n = g.vertex_count
    children = {v: [] for v in range(n)}
    depth = {root: 0}
    for v, p in parent.items():
        if p >= 0:
            children[p].append(v)
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for c in children[v]:
            depth[c] = depth[v] + 1
            order.append(c)
    if len(depth) != n:
        return None
    best = None
    for parity in (0, 1):
        # groups keyed by parent among anchor-parity vertices
        groups = {}
        for v in range(n):
            if depth[v] % 2 == parity:
                groups.setdefault(parent[v], []).append(v)
        used = set()
        clusters = []
        for p, group in sorted(groups.items()):
            members = list(group)
            for v in group:
                members.extend(children[v])
            clusters.append(members)
            used.update(members)
        leftovers = [v for v in range(n) if v not in used]
        for v in leftovers:
            clusters.append([v])
        size = max(len(c) for c in clusters)
        if size > maxC:
            continue
        cand = Clustering(clusters, maxC)
        if _residual(g, cand) == 0:
            if best is None or cand.max_cluster_size < best.max_cluster_size:
                best = cand
    return best


def _local_repair(g: Graph, clustering: Clustering, maxC: int, rng, passes: int = 4):
    """Merge clusters of coarse triangles while sizes allow."""
    clusters = [list(c) for c in clustering.clusters]
    for _ in range(passes):
        cl = Clustering([c for c in clusters if c], maxC)
        coarse = coarse_grain(g, cl)
        tris = triangles(coarse)
        if not tris:
            break
        live = [c for c in clusters if c]
        merged = False
        rng.shuffle(tris)
        for a, b, c in tris:
            pairs = [(a, b), (a, c), (b, c)]
            rng.shuffle(pairs)
            for i, j in pairs:
                if len(live[i]) + len(live[j]) <= maxC:
                    live[i] = live[i] + live[j]
                    live[j] = []
                    merged = True
                    break
            if merged:
                break
        clusters = [c for c in live if c]
        if not merged:
            break
    return Clustering([c for c in clusters if c], maxC)


def search_triangle_free_clustering(
    g: Graph, maxC: int, budget: int, seed: int = 0
) -> ClusterSearchResult:
    """Greedy + local-search attempts at a triangle-free coarse-graining.

    Returns the first clustering whose coarse-graining is triangle-free,
    or the best attempt with its residual triangle count once the restart
    budget is exhausted.
    """
    if maxC < 1:
        raise ValueError("maxC must be >= 1")
    rng = np.random.default_rng(seed)
    best = Clustering.singletons(g.vertex_count)
    best_res = _residual(g, best)
    notes = []
    if best_res == 0:
        return ClusterSearchResult(True, best, 0, 0, seed, ["input already triangle-free"])

    attempts_used = 0
    if maxC >= 2:
        tw = _tree_power_clustering(g, maxC)
        attempts_used += 1
        if tw is not None:
            res = _residual(g, tw)
            if res < best_res:
                best, best_res = tw, res
            if res == 0:
                return ClusterSearchResult(
                    True, tw, 0, attempts_used, seed, ["tree-power sibling clustering"]
                )

    for restart in range(max(0, budget - attempts_used)):
        cand = _greedy_star_clustering(g, maxC, rng)
        cand = _local_repair(g, cand, maxC, rng)
        res = _residual(g, cand)
        attempts_used += 1
        if res < best_res:
            best, best_res = cand, res
        if res == 0:
            return ClusterSearchResult(True, cand, 0, attempts_used, seed, notes)
    notes.append("budget exhausted")
    return ClusterSearchResult(False, best, best_res, attempts_used, seed, notes)


# ---------------------------------------------------------------------------
# File format
# ---------------------------------------------------------------------------


def save_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{g.vertex_count} {g.degree_bound}\n")
        for u, v in sorted(g.edges):
            fh.write(f"{u} {v}\n")


def load_graph(path) -> Graph:
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty graph file")
    try:
        n, d = (int(tok) for tok in lines[0].split())
    except Exception as exc:
        raise ValueError(f"{path}:1: expected 'N d' header") from exc
    edges = []
    for ln_no, ln in enumerate(lines[1:], start=2):
        toks = ln.split()
        if len(toks) != 2:
            raise ValueError(f"{path}:{ln_no}: expected 'i j'")
        edges.append((int(toks[0]), int(toks[1])))
    return Graph(n, edges, degree_bound=d)


def save_clustering(c: Clustering, path) -> None:
    with open(path, "w") as fh:
        for cl in c.clusters:
            fh.write(" ".join(str(v) for v in cl) + "\n")


def load_clustering(path) -> Clustering:
    clusters = []
    with open(path) as fh:
        for ln in fh:
            if ln.strip():
                clusters.append([int(tok) for tok in ln.split()])
    return Clustering(clusters)


# -- small constructors used throughout the tests ---------------------------


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def binary_tree(depth: int) -> Graph:
    """Complete binary tree with 2^(depth+1) - 1 vertices, root 0."""
    n = 2 ** (depth + 1) - 1
    edges = []
    for v in range(1, n):
        edges.append(((v - 1) // 2, v))
    return Graph(n, edges)
