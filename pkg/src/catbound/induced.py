"""Caterpillar bounds under vertex removal (induced subtrees).

The induced side of the story.  For a tree ``t``, ``max_caterpillar(t)``
finds the largest caterpillar appearing as an induced subgraph: it equals
the maximum over paths P of ``sum(deg(v) - 1 for v in P) + 1``, because the
optimal caterpillar with spine inside P grabs every edge incident to P.

The extremal constructions are built out of *branches*: a branch of
parameter k is a rooted tree whose root meets a single edge and whose
largest very hungry caterpillar (all edges incident to a root-to-leaf path)
has exactly k edges.  ``max_branch_size(k)`` is the largest such branch,
``beautiful_tree(k)`` builds it (every level has a uniform child count,
recorded in a :class:`BeautifulProfile`), and gluing ``r`` branches at a
shared root gives the extremal trees for the induced bound
(``extremal_branch_star``).  ``induced_guarantee(m)`` inverts the extremal
sizes: the caterpillar size certain to appear induced in any m-edge tree.

Everything is exact integer arithmetic; the base-3 logarithms in the
guarantee formulas are evaluated by comparing sixth powers against powers
of three, never through floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .trees import RootedTree, Tree


# ======================================================================
# induced caterpillar maximum, with witness
# ======================================================================


@dataclass(frozen=True)
class CaterpillarWitness:
    """An induced caterpillar inside a host tree: its vertex set, its spine
    (host-tree labels, path order), and its edge count."""

    vertex_set: frozenset[int]
    spine: tuple[int, ...]
    size: int


def _best_path_value(t: Tree) -> int:
    # one pass up the tree: down[v] = best sum of (deg - 1) on a path going
    # down from v; combine the two best child values at each vertex
    n = t.vertex_count
    weight = [d - 1 for d in t.degrees]
    parent = [-2] * n
    order = []
    parent[0] = -1
    stack = [0]
    while stack:
        u = stack.pop()
        order.append(u)
        for w in t.adjacency[u]:
            if parent[w] == -2:
                parent[w] = u
                stack.append(w)
    down = [0] * n
    best = 0
    for u in reversed(order):
        top1 = top2 = 0
        for w in t.adjacency[u]:
            if parent[w] == u:
                d = down[w]
                if d > top1:
                    top1, top2 = d, top1
                elif d > top2:
                    top2 = d
        down[u] = weight[u] + top1
        through = weight[u] + top1 + top2
        if through > best:
            best = through
    return best + 1


def max_caterpillar(t: Tree) -> CaterpillarWitness:
    """Largest caterpillar among induced subgraphs of ``t``.

    Ties between maximum witnesses break toward the lexicographically
    smallest spine endpoint pair.
    """
    if t.m < 1:
        raise ValueError("needs at least one edge")
    n = t.vertex_count
    best = _best_path_value(t)
    weight = [d - 1 for d in t.degrees]

    path: list[int] = []
    for a in range(n):
        # depth-first sweep from a, tracking the unique a..b path value
        hit = -1
        parent = [-2] * n
        parent[a] = -1
        acc = [0] * n
        acc[a] = weight[a]
        stack = [a]
        while stack:
            u = stack.pop()
            if u >= a and acc[u] + 1 == best and (hit < 0 or u < hit):
                hit = u
            for w in t.adjacency[u]:
                if parent[w] == -2:
                    parent[w] = u
                    acc[w] = acc[u] + weight[w]
                    stack.append(w)
        if hit >= 0:
            path = [hit]
            while path[-1] != a:
                path.append(parent[path[-1]])
            path.reverse()
            break
    assert path, "witness scan failed"

    vertex_set = set(path)
    for v in path:
        vertex_set.update(t.adjacency[v])
    spine = list(path)
    while len(spine) > 1 and t.degrees[spine[0]] == 1:
        spine.pop(0)
    while len(spine) > 1 and t.degrees[spine[-1]] == 1:
        spine.pop()
    induced = sum(1 for u, v in t.edges if u in vertex_set and v in vertex_set)
    assert induced == best, "witness edge count disagrees with optimum"
    return CaterpillarWitness(frozenset(vertex_set), tuple(spine), best)


def very_hungry_max(rt: RootedTree) -> int:
    """Largest number of edges incident to a single root-to-leaf path."""
    t = rt.tree
    if t.m < 1:
        raise ValueError("needs at least one edge")
    weight = [d - 1 for d in t.degrees]
    best = 0
    stack: list[tuple[int, int, int]] = [(rt.root, -1, weight[rt.root])]
    while stack:
        u, par, acc = stack.pop()
        if t.degrees[u] == 1 and u != rt.root:
            best = max(best, acc + 1)
            continue
        for w in t.adjacency[u]:
            if w != par:
                stack.append((w, u, acc + weight[w]))
    return best


# ======================================================================
# branches (rooted extremal pieces)
# ======================================================================

_BRANCH_SMALL = (0, 1, 2, 3, 5, 7)  # index k for k <= 5
_ARITY_SMALL = {2: 1, 3: 1, 4: 2, 5: 2, 6: 2, 7: 3, 8: 2}


def max_branch_size(k: int) -> int:
    """Largest edge count of a branch whose very hungry maximum is k:
    1, 2, 3, 5, 7 up to k = 5, then one closed form per residue mod 3."""
    if k < 1:
        raise ValueError("k must be positive")
    if k <= 5:
        return _BRANCH_SMALL[k]
    r = k % 3
    if r == 0:
        return (23 * 3 ** ((k - 6) // 3) - 1) // 2
    if r == 1:
        return (33 * 3 ** ((k - 7) // 3) - 1) // 2
    return (47 * 3 ** ((k - 8) // 3) - 1) // 2


def branch_arity(k: int) -> int:
    """Smallest child count c realizing max_branch_size(k) as
    c * max_branch_size(k - c) + 1; equals 3 for every k >= 9."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return _ARITY_SMALL.get(k, 3)


@dataclass(frozen=True)
class BeautifulProfile:
    """Level profile <c_0, ..., c_h> of a beautiful tree: every depth-d
    vertex has exactly counts[d] children, with counts[0] == 1,
    counts[h] == 0, and 3 >= c_1 >= ... >= c_{h-1} >= 1."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        c = self.counts
        if len(c) < 2 or c[0] != 1 or c[-1] != 0:
            raise ValueError("profile must start with 1 and end with 0")
        body = c[1:-1]
        if any(not 1 <= x <= 3 for x in body):
            raise ValueError("interior counts must lie in 1..3")
        if any(a < b for a, b in zip(body, body[1:])):
            raise ValueError("interior counts must be non-increasing")

    @property
    def height(self) -> int:
        return len(self.counts) - 1

    def edge_count(self) -> int:
        total = 0
        width = 1
        for c in self.counts[:-1]:
            width *= c
            total += width
        return total

    def hungry_size(self) -> int:
        return sum(self.counts)


def beautiful_profile(k: int) -> BeautifulProfile:
    """Profile of the size-maximal branch with very hungry maximum k."""
    if k < 1:
        raise ValueError("k must be positive")
    counts = [1]
    rest = k
    while rest >= 2:
        c = branch_arity(rest)
        counts.append(c)
        rest -= c
    counts.append(0)
    return BeautifulProfile(tuple(counts))


def tree_from_profile(profile: BeautifulProfile) -> RootedTree:
    """Materialize a profile as a rooted tree, vertices numbered level by
    level (root is 0)."""
    edges: list[tuple[int, int]] = []
    level = [0]
    nxt = 1
    for c in profile.counts[:-1]:
        new_level = []
        for v in level:
            for _ in range(c):
                edges.append((v, nxt))
                new_level.append(nxt)
                nxt += 1
        level = new_level
    return RootedTree(Tree(nxt, tuple(edges)), 0)


def beautiful_tree(k: int) -> tuple[RootedTree, BeautifulProfile]:
    """The extremal branch for very hungry maximum k, with its profile.
    Its edge count is max_branch_size(k) and its largest induced
    caterpillar has at most 2k - 1 edges."""
    profile = beautiful_profile(k)
    return tree_from_profile(profile), profile


# ======================================================================
# stars of branches (unrooted extremal trees)
# ======================================================================


def star_of_branches_size(r: int, x: int, y: int) -> int:
    """Edge count of r branches glued at a shared root, one of parameter y
    and r - 1 of parameter x: max_branch_size(y) + (r-1)*max_branch_size(x).
    Spines through two of the branches bound the induced caterpillar."""
    if r < 2:
        raise ValueError("need at least two branches")
    return max_branch_size(y) + (r - 1) * max_branch_size(x)


_STAR_BOUND_SMALL = (2, 3, 4, 6, 8, 10, 12, 15, 20, 25, 30, 35, 44)  # k = 2..14
_STAR_SHAPE_SMALL = (
    (2, 1), (3, 1), (4, 1), (3, 2), (4, 2), (5, 2), (4, 3),
    (3, 4), (4, 4), (5, 4), (6, 4), (5, 5), (4, 6),
)  # (r, x) for k = 2..14


def branch_star_bound(k: int) -> int:
    """Largest edge count of a star of equal branches whose induced
    caterpillar maximum is k: tabulated through k = 14, then
    5*max_branch_size((k-3)/2) for odd k and 6*max_branch_size((k-4)/2)
    for even k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if k <= 14:
        return _STAR_BOUND_SMALL[k - 2]
    if k % 2 == 1:
        return 5 * max_branch_size((k - 3) // 2)
    return 6 * max_branch_size((k - 4) // 2)


def extremal_branch_star(k: int) -> Tree:
    """The extremal tree for the induced bound: r copies of the beautiful
    branch of parameter x sharing one root (k = 1 is the single edge).
    Shared root is vertex 0; copies are numbered consecutively."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return Tree(2, ((0, 1),))
    if k <= 14:
        r, x = _STAR_SHAPE_SMALL[k - 2]
    elif k % 2 == 1:
        r, x = 5, (k - 3) // 2
    else:
        r, x = 6, (k - 4) // 2
    branch = beautiful_tree(x)[0].tree
    edges: list[tuple[int, int]] = []
    offset = 1
    for _ in range(r):
        remap = lambda v: 0 if v == 0 else offset + v - 1
        edges.extend((remap(u), remap(v)) for u, v in branch.edges)
        offset += branch.vertex_count - 1
    return Tree(offset, tuple(edges))


# ======================================================================
# extremal sizes and the guarantee
# ======================================================================


@lru_cache(maxsize=None)
def extremal_size_induced(k: int) -> int:
    """Largest edge count m such that some m-edge tree has no induced
    caterpillar bigger than k.  Equals 1 at k = 1 and branch_star_bound(k)
    beyond; for k >= 15 there is one closed form per residue mod 6."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k <= 1:
        return k
    if k <= 14:
        return _STAR_BOUND_SMALL[k - 2]
    r = k % 6
    if r == 0:
        return 3 * (11 * 3 ** ((k - 12) // 6) - 1)
    if r == 1:
        return 5 * (47 * 3 ** ((k - 19) // 6) - 1) // 2
    if r == 2:
        return 3 * (47 * 3 ** ((k - 20) // 6) - 1)
    if r == 3:
        return 5 * (23 * 3 ** ((k - 15) // 6) - 1) // 2
    if r == 4:
        return 3 * (23 * 3 ** ((k - 16) // 6) - 1)
    return 5 * (11 * 3 ** ((k - 11) // 6) - 1) // 2


def induced_guarantee_reference(m: int) -> int:
    """Reference definition of the guarantee: the largest k with
    extremal_size_induced(k - 1) < m."""
    if m < 1:
        raise ValueError("m must be positive")
    k = 1
    while extremal_size_induced(k) < m:
        k += 1
    return k


# upper ends of the constant runs of the guarantee through m = 170
_GUARANTEE_TABLE = (
    (6, 5), (8, 6), (10, 7), (12, 8), (15, 9), (20, 10), (25, 11),
    (30, 12), (35, 13), (44, 14), (55, 15), (66, 16), (80, 17),
    (96, 18), (115, 19), (138, 20), (170, 21),
)

# residue r -> (c, s, gamma, add): the guarantee restricted to k = r (mod 6)
# is 6 * floor(N / 6) + r with N = ceil(6 * log3((c*m + s) / gamma)) + add
_RESIDUE_PARAMS = {
    0: (2, 5, 55, 11),
    1: (1, 3, 33, 11),
    2: (2, 5, 235, 17),
    3: (1, 3, 141, 17),
    4: (2, 5, 115, 11),
    5: (1, 3, 69, 11),
}

_POW3 = [1]


def _ceil_6log3(num: int, den: int) -> int:
    """ceil(6 * log3(num/den)) for num >= den >= 1, exactly: the least j
    with den^6 * 3^j >= num^6."""
    target = num**6
    base = den**6
    while _POW3[-1] * base < target:
        _POW3.append(_POW3[-1] * 3)
    lo, hi = 0, len(_POW3) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _POW3[mid] * base >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def induced_guarantee_residue(r: int, m: int) -> int:
    """Largest k congruent to r mod 6 with extremal_size_induced(k-1) < m,
    by the exact closed form (valid for m >= 171)."""
    if not 0 <= r <= 5:
        raise ValueError("residue out of range 0..5")
    if m < 171:
        raise ValueError("closed forms apply for m >= 171")
    c, s, gamma, add = _RESIDUE_PARAMS[r]
    n_val = _ceil_6log3(c * m + s, gamma) + add
    return 6 * (n_val // 6) + r


def induced_guarantee(m: int) -> int:
    """The caterpillar size certain to appear as an induced subgraph of any
    tree with m edges: tabulated through m = 170, the best residue closed
    form beyond.  Agrees with induced_guarantee_reference everywhere."""
    if m < 1:
        raise ValueError("m must be positive")
    if m <= 4:
        return m
    if m <= 170:
        for upper, value in _GUARANTEE_TABLE:
            if m <= upper:
                return value
        raise AssertionError("unreachable")
    return max(induced_guarantee_residue(r, m) for r in range(6))


# ======================================================================
# table emission
# ======================================================================


def format_table(
    key_label: str, value_label: str, rows: list[tuple[int, int]], csv: bool = False
) -> str:
    """Render (key, value) rows as CSV or aligned two-column text."""
    if csv:
        out = [f"{key_label},{value_label}"]
        out += [f"{k},{v}" for k, v in rows]
        return "\n".join(out) + "\n"
    kw = max(len(key_label), *(len(str(k)) for k, _ in rows)) if rows else len(key_label)
    vw = max(len(value_label), *(len(str(v)) for _, v in rows)) if rows else len(value_label)
    out = [f"{key_label:>{kw}}  {value_label:>{vw}}"]
    out += [f"{k:>{kw}}  {v:>{vw}}" for k, v in rows]
    return "\n".join(out) + "\n"
