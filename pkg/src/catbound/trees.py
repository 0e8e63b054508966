"""Immutable trees on dense integer vertex ids.

A :class:`Tree` stores a vertex count and a normalized edge tuple, validates
itself on construction (contiguous ids, no loops or duplicates, acyclic and
therefore connected at n-1 edges), and caches adjacency and degree tables on
first use.  Operations that shrink the vertex set -- edge contraction and
vertex removal -- return explicit old-to-new id mappings so callers can track
witnesses across transformations.

The text interchange format is one edge per line: two base-10 vertex ids
separated by whitespace.  Blank lines and lines whose first non-space
character is ``#`` are ignored.

Isomorphism is decided by canonical codes: rooted subtree codes are
parenthesis strings with children sorted, the root is the centroid, and a
bicentroidal tree takes the lexicographically smaller of its two centroid
rootings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class TreeParseError(ValueError):
    """Raised by parse_tree for malformed input; message carries a line number
    when one applies."""


# ======================================================================
# core types
# ======================================================================


@dataclass(frozen=True)
class Tree:
    """An unrooted tree on vertices 0..vertex_count-1.

    Edges are normalized to (min, max) pairs in sorted order, so two equal
    trees compare and hash equal.  Construction validates shape: exactly
    vertex_count - 1 edges, ids in range, no self-loops or duplicates, and
    no cycles (which at n-1 edges forces connectivity).
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("a tree needs at least one vertex")
        norm = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        object.__setattr__(self, "edges", norm)
        n = self.vertex_count
        if len(norm) != n - 1:
            raise ValueError(
                f"{n} vertices need {n - 1} edges, got {len(norm)}"
            )
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        seen: set[tuple[int, int]] = set()
        for u, v in norm:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError(f"edge ({u}, {v}) closes a cycle")
            parent[ru] = rv

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class RootedTree:
    """A tree with a distinguished root vertex."""

    tree: Tree
    root: int

    def __post_init__(self) -> None:
        if not (0 <= self.root < self.tree.vertex_count):
            raise ValueError(f"root {self.root} out of range")


@dataclass(frozen=True)
class CanonicalCode:
    """Isomorphism-invariant code of a tree (nested-parenthesis bytes)."""

    code: bytes

    def __str__(self) -> str:
        return self.code.decode("ascii")


# ======================================================================
# text format
# ======================================================================


def parse_tree(text: str) -> Tree:
    """Parse the edge-list text format into a Tree.

    Raises TreeParseError with a line number for malformed lines, self-loops,
    duplicate edges, edges closing a cycle, and for id sets that do not form
    the contiguous range 0..n-1.
    """
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise TreeParseError(
                f"line {lineno}: expected two vertex ids, got {stripped!r}"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise TreeParseError(
                f"line {lineno}: vertex ids must be base-10 integers"
            ) from None
        if u < 0 or v < 0:
            raise TreeParseError(f"line {lineno}: vertex ids must be non-negative")
        if u == v:
            raise TreeParseError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((min(u, v), max(u, v)))
        lines.append(lineno)

    if not edges:
        raise TreeParseError("no edges found")
    n = len(edges) + 1
    ids = {u for e in edges for u in e}
    high = max(ids)
    if high > n - 1:
        raise TreeParseError(
            f"vertex id {high} out of range: {len(edges)} edges allow ids 0..{n - 1}"
        )
    missing = set(range(n)) - ids
    if missing:
        raise TreeParseError(
            f"vertex ids are not contiguous: missing {sorted(missing)}"
        )

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    seen: set[tuple[int, int]] = set()
    for (u, v), lineno in zip(edges, lines):
        if (u, v) in seen:
            raise TreeParseError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        ru, rv = find(u), find(v)
        if ru == rv:
            raise TreeParseError(f"line {lineno}: edge ({u}, {v}) closes a cycle")
        parent[ru] = rv
    return Tree(n, tuple(edges))


def format_tree(t: Tree) -> str:
    """Inverse of parse_tree: one 'u v' line per edge, sorted."""
    return "".join(f"{u} {v}\n" for u, v in t.edges)


# ======================================================================
# basic measurements
# ======================================================================


def leaves(t: Tree) -> frozenset[int]:
    """Degree-1 vertices. Raises on the single-vertex tree."""
    if t.vertex_count < 2:
        raise ValueError("leaf set undefined for a single-vertex tree")
    return frozenset(v for v in range(t.vertex_count) if t.degrees[v] == 1)


def _bfs_dists(t: Tree, src: int) -> list[int]:
    dist = [-1] * t.vertex_count
    dist[src] = 0
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for w in t.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def diameter_path(t: Tree) -> tuple[int, ...]:
    """A longest path, endpoint pair lexicographically smallest among all
    longest paths."""
    n = t.vertex_count
    if n == 1:
        return (0,)
    best = -1
    pair = (0, 0)
    for a in range(n):
        dist = _bfs_dists(t, a)
        for b in range(a + 1, n):
            if dist[b] > best:
                best = dist[b]
                pair = (a, b)
    a, b = pair
    # unique tree path from a to b via parent pointers
    par = [-1] * n
    par[a] = a
    frontier = [a]
    while frontier:
        nxt = []
        for u in frontier:
            for w in t.adjacency[u]:
                if par[w] < 0:
                    par[w] = u
                    nxt.append(w)
        frontier = nxt
    path = [b]
    while path[-1] != a:
        path.append(par[path[-1]])
    path.reverse()
    return tuple(path)


def diameter(t: Tree) -> int:
    """Edge count of a longest path."""
    return len(diameter_path(t)) - 1


# ======================================================================
# transformations
# ======================================================================


def contract_edge(t: Tree, edge: tuple[int, int]) -> tuple[Tree, dict[int, int]]:
    """Contract one edge; the merged vertex keeps the smaller id and higher
    ids shift down to stay dense.  Returns the new tree and the old-to-new
    vertex mapping."""
    u, v = min(edge), max(edge)
    if (u, v) not in t.edge_set:
        raise ValueError(f"({u}, {v}) is not an edge")
    mapping: dict[int, int] = {}
    for x in range(t.vertex_count):
        if x == v:
            mapping[x] = u
        elif x > v:
            mapping[x] = x - 1
        else:
            mapping[x] = x
    new_edges = [
        (mapping[a], mapping[b]) for a, b in t.edges if (a, b) != (u, v)
    ]
    return Tree(t.vertex_count - 1, tuple(new_edges)), mapping


def remove_vertices(
    t: Tree, victims: Iterable[int]
) -> list[tuple[Tree, dict[int, int]]]:
    """Induced subgraph on the complement of ``victims``, split into connected
    components.  Components are ordered by smallest surviving original id;
    each comes with its old-to-new mapping."""
    gone = set(victims)
    for x in gone:
        if not (0 <= x < t.vertex_count):
            raise ValueError(f"vertex {x} out of range")
    alive = [v for v in range(t.vertex_count) if v not in gone]
    if not alive:
        raise ValueError("removal leaves no vertices")
    unvisited = set(alive)
    out: list[tuple[Tree, dict[int, int]]] = []
    for start in alive:
        if start not in unvisited:
            continue
        comp = [start]
        unvisited.discard(start)
        queue = [start]
        while queue:
            u = queue.pop()
            for w in t.adjacency[u]:
                if w in unvisited:
                    unvisited.discard(w)
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        mapping = {old: new for new, old in enumerate(comp)}
        edges = [
            (mapping[a], mapping[b])
            for a, b in t.edges
            if a in mapping and b in mapping
        ]
        out.append((Tree(len(comp), tuple(edges)), mapping))
    return out


# ======================================================================
# shape predicates
# ======================================================================


def is_caterpillar(t: Tree) -> tuple[bool, tuple[int, ...] | None]:
    """Whether removing all leaves yields a (possibly empty) path; returns the
    spine (the non-leaf vertices in path order) as witness."""
    n = t.vertex_count
    if n == 1:
        return True, (0,)
    inner = [v for v in range(n) if t.degrees[v] >= 2]
    if not inner:
        return True, ()  # single edge: every vertex is a leaf
    inner_set = set(inner)
    deg_in = {v: sum(1 for w in t.adjacency[v] if w in inner_set) for v in inner}
    if any(d > 2 for d in deg_in.values()):
        return False, None
    # the non-leaf set of a tree is always connected, so degree <= 2 suffices;
    # walk it from its smaller endpoint for a deterministic spine order
    if len(inner) == 1:
        return True, (inner[0],)
    ends = sorted(v for v in inner if deg_in[v] <= 1)
    start = ends[0]
    spine = [start]
    prev = -1
    cur = start
    while True:
        nxts = [w for w in t.adjacency[cur] if w in inner_set and w != prev]
        if not nxts:
            break
        prev, cur = cur, nxts[0]
        spine.append(cur)
    if len(spine) != len(inner):
        return False, None
    return True, tuple(spine)


def is_spider(t: Tree) -> bool:
    """At most one vertex of degree greater than two."""
    return sum(1 for d in t.degrees if d > 2) <= 1


# ======================================================================
# canonical codes
# ======================================================================


def _subtree_sizes(t: Tree, root: int) -> tuple[list[int], list[int], list[int]]:
    """Iterative DFS from root: (preorder, parent, size) arrays."""
    n = t.vertex_count
    parent = [-1] * n
    order = [root]
    parent[root] = root
    stack = [root]
    while stack:
        u = stack.pop()
        for w in t.adjacency[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
                stack.append(w)
    size = [1] * n
    for u in reversed(order):
        if u != root:
            size[parent[u]] += size[u]
    parent[root] = -1
    return order, parent, size


def centroids(t: Tree) -> tuple[int, ...]:
    """The one or two vertices minimizing the largest component left by their
    removal."""
    n = t.vertex_count
    if n == 1:
        return (0,)
    order, parent, size = _subtree_sizes(t, 0)
    best = n + 1
    out: list[int] = []
    for v in range(n):
        parts = [n - size[v]] if v != 0 else []
        parts += [size[w] for w in t.adjacency[v] if parent[w] == v]
        worst = max(parts)
        if worst < best:
            best = worst
            out = [v]
        elif worst == best:
            out.append(v)
    return tuple(sorted(out))


def _ahu_code(t: Tree, root: int) -> bytes:
    order, parent, _ = _subtree_sizes(t, root)
    codes: list[bytes | None] = [None] * t.vertex_count
    children: list[list[int]] = [[] for _ in range(t.vertex_count)]
    for v in order:
        if v != root:
            children[parent[v]].append(v)
    for v in reversed(order):
        parts = sorted(codes[c] for c in children[v])  # type: ignore[type-var]
        codes[v] = b"(" + b"".join(parts) + b")"  # type: ignore[arg-type]
    out = codes[root]
    assert out is not None
    return out


def canonical_code(t: Tree) -> CanonicalCode:
    """Centroid-rooted canonical code; equal exactly for isomorphic trees."""
    cents = centroids(t)
    return CanonicalCode(min(_ahu_code(t, c) for c in cents))
