"""Caterpillar bounds under edge contraction.

Contracting edges can flatten any tree into a caterpillar; how large a
caterpillar is guaranteed depends only on the edge count.  The quantities
here:

* ``max_caterpillar_by_contraction(t)``: the largest caterpillar size
  reachable from ``t`` by contractions, which equals
  ``leaves + diameter - 2``.
* ``extremal_size_contraction(k)``: the largest edge count a tree can have
  while no contraction yields a caterpillar bigger than ``k``; spiders with
  balanced legs are the extremal trees (``extremal_spider``).
* ``contraction_guarantee(m)``: the caterpillar size every m-edge tree can
  reach, computed with exact integer square roots.

``contract_to_caterpillar`` produces a replayable :class:`ContractionPlan`
witnessing the bound: keep all leaf edges plus one diameter path, contract
everything else, then contract surplus edges down to the requested size.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .trees import Tree, contract_edge, diameter_path, is_caterpillar, leaves


# ======================================================================
# the tree functional: leaves + diameter - 2
# ======================================================================


def max_caterpillar_by_contraction(t: Tree) -> int:
    """Largest caterpillar size reachable from ``t`` by edge contractions."""
    if t.m < 1:
        raise ValueError("needs at least one edge")
    return len(leaves(t)) + (len(diameter_path(t)) - 1) - 2


# ======================================================================
# contraction plans
# ======================================================================


@dataclass(frozen=True)
class ContractionStep:
    """One contraction: the edge in the source tree's labeling, plus the
    cumulative old-to-current vertex mapping after the step."""

    edge: tuple[int, int]
    mapping: tuple[int, ...]


@dataclass(frozen=True)
class ContractionPlan:
    """An ordered, replayable recipe turning a source tree into a caterpillar
    with ``target_size`` edges."""

    target_size: int
    contract_sequence: tuple[ContractionStep, ...]
    kept_caterpillar: Tree

    def apply(self, source: Tree) -> Tree:
        """Replay the plan against ``source``, checking each recorded mapping,
        and return the final tree (equal to ``kept_caterpillar``)."""
        current = source
        acc = list(range(source.vertex_count))
        for step in self.contract_sequence:
            u0, v0 = step.edge
            cu, cv = acc[u0], acc[v0]
            if cu == cv:
                raise ValueError(f"edge {step.edge} already collapsed")
            current, mp = contract_edge(current, (cu, cv))
            acc = [mp[x] for x in acc]
            if tuple(acc) != step.mapping:
                raise ValueError(f"mapping mismatch replaying {step.edge}")
        if current != self.kept_caterpillar:
            raise ValueError("replay did not reproduce kept_caterpillar")
        return current


def contract_to_caterpillar(t: Tree, k: int) -> ContractionPlan:
    """A plan contracting ``t`` to a caterpillar with exactly ``k`` edges,
    for any 1 <= k <= max_caterpillar_by_contraction(t).

    Keeps every leaf edge and the edges of the deterministic diameter path;
    the rest is contracted in DFS order from the diameter path's first
    vertex.  Any surplus (when k is below the maximum) is then contracted
    away in sorted-edge order; caterpillars are closed under contraction, so
    the order does not affect validity, only reproducibility.
    """
    cap = max_caterpillar_by_contraction(t)
    if not 1 <= k <= cap:
        raise ValueError(f"target size {k} outside 1..{cap}")
    dpath = diameter_path(t)
    keep = {(min(a, b), max(a, b)) for a, b in zip(dpath, dpath[1:])}
    leaf_set = leaves(t)
    for u, v in t.edges:
        if u in leaf_set or v in leaf_set:
            keep.add((u, v))

    # DFS from the diameter path's first vertex, ascending neighbors
    contracted: list[tuple[int, int]] = []
    seen = [False] * t.vertex_count
    seen[dpath[0]] = True
    stack = [dpath[0]]
    while stack:
        u = stack.pop()
        for w in reversed(t.adjacency[u]):
            if not seen[w]:
                seen[w] = True
                e = (min(u, w), max(u, w))
                if e not in keep:
                    contracted.append(e)
                stack.append(w)
    contracted += sorted(keep)[: cap - k]

    steps: list[ContractionStep] = []
    current = t
    acc = list(range(t.vertex_count))
    for u0, v0 in contracted:
        current, mp = contract_edge(current, (acc[u0], acc[v0]))
        acc = [mp[x] for x in acc]
        steps.append(ContractionStep((u0, v0), tuple(acc)))

    ok, _ = is_caterpillar(current)
    if not ok or current.m != k:
        raise AssertionError("contraction plan failed to reach a caterpillar")
    return ContractionPlan(k, tuple(steps), current)


# ======================================================================
# extremal sizes and constructions
# ======================================================================


def max_edges_diameter_leaves(d: int, l: int) -> int:
    """Largest edge count of a tree with diameter ``d`` and ``l`` leaves:
    d*l/2 for even d, (d-1)*l/2 + 1 for odd d."""
    if d < 2 or l < 2:
        raise ValueError("need diameter >= 2 and >= 2 leaves")
    if d % 2 == 0:
        return d * l // 2
    return (d - 1) * l // 2 + 1


def build_spider(d: int, l: int) -> Tree:
    """The extremal spider with diameter ``d`` and ``l`` leaves: center 0,
    legs laid out longest first, vertices numbered leg by leg.

    Even d: l legs of length d/2.  Odd d: one leg of length (d+1)/2 and
    l-1 legs of length (d-1)/2 (so odd d needs d >= 3).
    """
    if d < 2 or l < 2:
        raise ValueError("need diameter >= 2 and >= 2 leaves")
    if d % 2 == 0:
        lengths = [d // 2] * l
    else:
        if d < 3:
            raise ValueError("odd diameter needs d >= 3")
        lengths = [(d + 1) // 2] + [(d - 1) // 2] * (l - 1)
    edges: list[tuple[int, int]] = []
    nxt = 1
    for length in lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, tuple(edges))


def extremal_size_contraction(k: int) -> int:
    """Largest edge count m such that some m-edge tree admits no contraction
    to a caterpillar with more than k edges.

    k % 4 == 0: k(k+4)/8; k % 4 == 2: (k+2)^2/8; odd k: (k+1)(k+3)/8.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k % 2 == 1:
        return (k + 1) * (k + 3) // 8
    if k % 4 == 0:
        return k * (k + 4) // 8
    return (k + 2) ** 2 // 8


def extremal_spider(k: int) -> Tree:
    """The spider of extremal_size_contraction(k) edges whose contraction
    maximum is exactly k.  k = 1 is the single edge; otherwise an even
    diameter d and leaf count l with d + l - 2 = k are balanced so that
    d*l/2 is maximal."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return Tree(2, ((0, 1),))
    if k % 4 == 0:
        d, l = k // 2, (k + 4) // 2
    elif k % 4 == 2:
        d, l = (k + 2) // 2, (k + 2) // 2
    elif k % 4 == 1:
        d, l = (k + 3) // 2, (k + 1) // 2
    else:  # k % 4 == 3
        d, l = (k + 1) // 2, (k + 3) // 2
    return build_spider(d, l)


def contraction_guarantee(m: int) -> int:
    """The caterpillar size every tree with m edges can be contracted to:
    ceil(sqrt(8m) - 2), evaluated exactly with integer square roots."""
    if m < 1:
        raise ValueError("m must be positive")
    r = isqrt(8 * m)
    return r - 2 if r * r == 8 * m else r - 1
