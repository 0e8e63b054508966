"""Brute-force oracles and the exhaustive verification harness.

Everything the package computes by formula or by greedy construction is
re-derivable here the slow way: free trees come from the
Wright–Richmond–Odlyzko–McKay successor on canonical level sequences (with
a Prüfer-code route as an independent second opinion), maximum induced
caterpillars from exhaustive subset search, and branch sizes from the
defining recurrence.  ``verify_all`` runs the whole battery and returns a
line-per-check report instead of raising, so a regression shows up as a
FAIL row with a canonical-code witness attached.

Guarantee functions are step functions of the edge budget, so the sweep
section compares implementation and reference only at change points: both
are nondecreasing, and the candidate set below contains every index where
either side can step, hence agreement at the candidates (each checked with
its predecessor) implies agreement everywhere in the range.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import isqrt
from typing import Iterator

from .contraction import (
    contraction_guarantee,
    extremal_size_contraction,
    extremal_spider,
    max_caterpillar_by_contraction,
)
from .duality import among_path, compatible_path, segments_to_tree, tree_to_segments
from .induced import (
    beautiful_tree,
    branch_star_bound,
    extremal_branch_star,
    extremal_size_induced,
    induced_guarantee,
    induced_guarantee_reference,
    max_branch_size,
    max_caterpillar,
    very_hungry_max,
)
from .trees import Tree, canonical_code

#: isomorphism classes of trees with 0, 1, 2, ... edges (A000055 shifted)
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301)


# ======================================================================
# free-tree enumeration
# ======================================================================


def _levels_to_tree(layout: list[int]) -> Tree:
    """Vertices in preorder; layout[i] is the depth of vertex i."""
    edges = []
    stack = [0]
    for i in range(1, len(layout)):
        del stack[layout[i] :]
        edges.append((stack[-1], i))
        stack.append(i)
    return Tree(len(layout), tuple(edges))


def _next_rooted_layout(layout: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a canonical rooted level sequence (descending order)."""
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    out = list(layout)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_layout(layout: list[int]) -> tuple[list[int], list[int]]:
    """First root subtree (re-rooted) and the remainder (still rooted)."""
    cut = None
    seen_one = False
    for i, level in enumerate(layout):
        if level == 1:
            if seen_one:
                cut = i
                break
            seen_one = True
    if cut is None:
        cut = len(layout)
    left = [layout[i] - 1 for i in range(1, cut)]
    rest = [0] + layout[cut:]
    return left, rest


def _jump_to_free(layout: list[int]) -> list[int] | None:
    """Return layout unchanged if it canonically encodes a free tree;
    otherwise skip ahead past the whole invalid stretch."""
    left, rest = _split_layout(layout)
    left_height = max(left)
    rest_height = max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return layout
    p = len(left)
    succ = _next_rooted_layout(layout, p)
    if succ is None:
        return None
    if layout[p] > 2:
        new_left, _ = _split_layout(succ)
        suffix = range(1, max(new_left) + 2)
        succ[-len(suffix) :] = suffix
    return succ


def tree_from_pruefer(seq: tuple[int, ...], vertex_count: int) -> Tree:
    """The labeled tree with the given Prüfer code."""
    n = vertex_count
    if n < 2:
        raise ValueError("Prüfer codes describe trees on at least 2 vertices")
    if len(seq) != n - 2:
        raise ValueError(f"code for {n} vertices must have length {n - 2}")
    if any(not 0 <= x < n for x in seq):
        raise ValueError("code entry out of range")
    import heapq

    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        v = heapq.heappop(leaves)
        edges.append((v, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree(n, tuple(edges))


def free_trees(edge_count: int, via: str = "levels") -> Iterator[Tree]:
    """All isomorphism classes of trees with the given number of edges.

    The default route walks canonical level sequences; ``via='prufer'``
    instead generates every labeled tree and deduplicates by canonical
    code, which is exponentially slower but shares no machinery.
    """
    if edge_count < 0:
        raise ValueError("edge count must be non-negative")
    if edge_count == 0:
        yield Tree(1, ())
        return
    if via == "prufer":
        n = edge_count + 1
        seen = set()
        for seq in itertools.product(range(n), repeat=n - 2):
            t = tree_from_pruefer(seq, n)
            code = canonical_code(t)
            if code not in seen:
                seen.add(code)
                yield t
        return
    if via != "levels":
        raise ValueError(f"unknown enumeration route {via!r}")
    n = edge_count + 1
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        cand = _jump_to_free(layout)
        if cand is None:
            return
        if cand == layout:
            yield _levels_to_tree(layout)
            layout = _next_rooted_layout(layout)
        else:
            layout = cand


# ======================================================================
# brute-force oracles
# ======================================================================


def brute_max_caterpillar(t: Tree) -> int:
    """Most edges over all induced caterpillar subtrees, by subset search.

    Subsets are tried largest first; inside a tree, a vertex subset is a
    subtree exactly when its induced degree sum is twice its size minus
    two, so connectivity needs no traversal.
    """
    n = t.vertex_count
    if t.m < 1:
        raise ValueError("needs at least one edge")
    if n > 20:
        raise ValueError("exhaustive search is limited to 20 vertices")
    nbr = [0] * n
    for a, b in t.edges:
        nbr[a] |= 1 << b
        nbr[b] |= 1 << a
    for size in range(n, 1, -1):
        for combo in itertools.combinations(range(n), size):
            inside = 0
            for v in combo:
                inside |= 1 << v
            if sum((nbr[v] & inside).bit_count() for v in combo) != 2 * (size - 1):
                continue
            heavy = 0
            for v in combo:
                if (nbr[v] & inside).bit_count() >= 2:
                    heavy |= 1 << v
            if all(
                (nbr[v] & heavy).bit_count() <= 2
                for v in combo
                if (1 << v) & heavy
            ):
                return size - 1
    raise AssertionError("unreachable: every edge is a caterpillar")


def brute_contraction_guarantee(edge_count: int) -> int:
    """Worst contraction score over every tree with that many edges."""
    if edge_count < 1:
        raise ValueError("edge count must be positive")
    return min(max_caterpillar_by_contraction(t) for t in free_trees(edge_count))


def brute_induced_guarantee(edge_count: int) -> int:
    """Worst induced-caterpillar size over every tree with that many
    edges."""
    if edge_count < 1:
        raise ValueError("edge count must be positive")
    return min(brute_max_caterpillar(t) for t in free_trees(edge_count))


def branch_size_recurrence(k: int) -> int:
    """Largest branch a score-k budget supports, from the defining
    recurrence: spend one edge to the root, then split the remaining score
    over equal children."""
    if k < 1:
        raise ValueError("score must be positive")
    best = [0, 1]
    for j in range(2, k + 1):
        best.append(max(c * best[j - c] + 1 for c in range(1, j)))
    return best[k]


# ======================================================================
# guarantee sweep change points
# ======================================================================


def _icbrt(x: int) -> int:
    if x < 0:
        raise ValueError("cube root of negative")
    if x < 2:
        return x
    r = 1 << ((x.bit_length() + 2) // 3)
    while True:
        nr = (2 * r + x // (r * r)) // 3
        if nr >= r:
            break
        r = nr
    while r * r * r > x:
        r -= 1
    while (r + 1) ** 3 <= x:
        r += 1
    return r


def _iroot6(x: int) -> int:
    return _icbrt(isqrt(x))


def guarantee_change_points(limit: int) -> list[int]:
    """Every edge budget in [1, limit] where ``induced_guarantee`` or its
    reference can change value, padded with both neighbours of each
    candidate so each constant interval gets its endpoints checked."""
    if limit < 1:
        raise ValueError("limit must be positive")
    pts = {1, 2, 3, 4, 5, 170, 171, 172, limit}
    k = 1
    while True:
        e = extremal_size_induced(k)
        pts.update((e, e + 1))
        if e >= limit:
            break
        k += 1
    from .induced import _RESIDUE_PARAMS

    for c, s, gamma, _add in _RESIDUE_PARAMS.values():
        g6 = gamma**6
        j = 0
        while True:
            t = _iroot6(g6 * 3**j)
            m_change = (t + 1 - s + c - 1) // c
            if m_change > limit:
                break
            pts.update((m_change - 1, m_change, m_change + 1))
            j += 1
    return sorted(x for x in pts if 1 <= x <= limit)


# ======================================================================
# verification report
# ======================================================================


@dataclass(frozen=True)
class CheckRecord:
    """One verified fact: what was expected, what came out."""

    section: str
    label: str
    passed: bool
    expected: str
    actual: str
    note: str = ""

    def line(self) -> str:
        status = "ok  " if self.passed else "FAIL"
        text = (
            f"{status} {self.section:<20} {self.label:<18} "
            f"expected {self.expected}  actual {self.actual}"
        )
        if self.note:
            text += f"  [{self.note}]"
        return text


@dataclass(frozen=True)
class VerificationReport:
    records: tuple[CheckRecord, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> tuple[CheckRecord, ...]:
        return tuple(r for r in self.records if not r.passed)

    def to_text(self) -> str:
        lines = [r.line() for r in self.records]
        bad = len(self.failures())
        if bad:
            lines.append(f"{bad} of {len(self.records)} checks FAILED")
        else:
            lines.append(f"all {len(self.records)} checks passed")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "total": len(self.records),
            "failed": len(self.failures()),
            "checks": [asdict(r) for r in self.records],
        }


def _scan_edge_count(edge_count: int, stride: int, offset: int) -> dict:
    """Fold one residue class of the free-tree stream.

    Returns per-slice minima keyed for an order-independent merge, so the
    same totals come out whatever the worker count.
    """
    count = 0
    best_contract: tuple[int, str] | None = None
    best_induced: tuple[int, str] | None = None
    dp_clash: str | None = None
    duality_clash: str | None = None
    for idx, t in enumerate(free_trees(edge_count)):
        if idx % stride != offset:
            continue
        count += 1
        code = str(canonical_code(t))
        score = max_caterpillar_by_contraction(t)
        witness = max_caterpillar(t)
        brute = brute_max_caterpillar(t)
        if witness.size != brute and (dp_clash is None or code < dp_clash):
            dp_clash = code
        ok = True
        try:
            family = tree_to_segments(t, 0)
            back, _ = segments_to_tree(family)
            if canonical_code(back) != canonical_code(t):
                ok = False
            else:
                compatible_path(family, witness)
                among_path(family)
        except Exception:
            ok = False
        if not ok and (duality_clash is None or code < duality_clash):
            duality_clash = code
        if best_contract is None or (score, code) < best_contract:
            best_contract = (score, code)
        if best_induced is None or (brute, code) < best_induced:
            best_induced = (brute, code)
    return {
        "count": count,
        "contract": best_contract,
        "induced": best_induced,
        "dp_clash": dp_clash,
        "duality_clash": duality_clash,
    }


def _merge_scans(parts: list[dict]) -> dict:
    out = {
        "count": sum(p["count"] for p in parts),
        "contract": min(
            (p["contract"] for p in parts if p["contract"] is not None), default=None
        ),
        "induced": min(
            (p["induced"] for p in parts if p["induced"] is not None), default=None
        ),
        "dp_clash": min(
            (p["dp_clash"] for p in parts if p["dp_clash"] is not None), default=None
        ),
        "duality_clash": min(
            (p["duality_clash"] for p in parts if p["duality_clash"] is not None),
            default=None,
        ),
    }
    return out


def verify_all(
    max_edges: int = 10,
    max_score: int = 21,
    sweep_limit: int = 200_000,
    workers: int = 1,
    branch_size_override: dict[int, int] | None = None,
) -> VerificationReport:
    """Re-derive the package's guarantees and constructions from scratch
    and compare.  ``branch_size_override`` substitutes claimed branch
    sizes, which is how the tests prove a wrong table cannot slip through.
    """
    if max_edges < 1 or max_score < 1 or workers < 1:
        raise ValueError("bounds and worker count must be positive")
    claimed = dict(branch_size_override or {})
    records: list[CheckRecord] = []

    for m in range(1, max_edges + 1):
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [
                    pool.submit(_scan_edge_count, m, workers, off)
                    for off in range(workers)
                ]
                scan = _merge_scans([f.result() for f in futures])
        else:
            scan = _scan_edge_count(m, 1, 0)

        if m < len(FREE_TREE_COUNTS):
            records.append(
                CheckRecord(
                    "tree-census",
                    f"m={m}",
                    scan["count"] == FREE_TREE_COUNTS[m],
                    str(FREE_TREE_COUNTS[m]),
                    str(scan["count"]),
                )
            )
        low, code = scan["contract"]
        records.append(
            CheckRecord(
                "contraction-bound",
                f"m={m}",
                low == contraction_guarantee(m),
                str(contraction_guarantee(m)),
                str(low),
                f"worst tree {code}",
            )
        )
        low, code = scan["induced"]
        records.append(
            CheckRecord(
                "induced-bound",
                f"m={m}",
                low == induced_guarantee(m),
                str(induced_guarantee(m)),
                str(low),
                f"worst tree {code}",
            )
        )
        records.append(
            CheckRecord(
                "caterpillar-search",
                f"m={m}",
                scan["dp_clash"] is None,
                "dp equals subset search",
                "agree" if scan["dp_clash"] is None else f"clash at {scan['dp_clash']}",
            )
        )
        records.append(
            CheckRecord(
                "duality",
                f"m={m}",
                scan["duality_clash"] is None,
                "round trips and valid paths",
                "ok"
                if scan["duality_clash"] is None
                else f"failed at {scan['duality_clash']}",
            )
        )

    for k in range(1, max_score + 1):
        want = branch_size_recurrence(k)
        got = claimed.get(k, max_branch_size(k))
        records.append(
            CheckRecord(
                "branch-size", f"k={k}", got == want, str(want), str(got)
            )
        )

    bad_ratio = None
    for k in range(2, max_score + 1):
        if 5 * max_branch_size(k) < 7 * max_branch_size(k - 1):
            bad_ratio = f"5*size({k}) < 7*size({k - 1})"
            break
        if k >= 7 and 2 * max_branch_size(k) >= 3 * max_branch_size(k - 1):
            bad_ratio = f"2*size({k}) >= 3*size({k - 1})"
            break
    records.append(
        CheckRecord(
            "branch-ratio",
            f"k<={max_score}",
            bad_ratio is None,
            "growth stays within [7/5, 3/2)",
            "ok" if bad_ratio is None else bad_ratio,
        )
    )

    bad = None
    for k in range(1, max_score + 1):
        spider = extremal_spider(k)
        score = max_caterpillar_by_contraction(spider)
        if spider.m != extremal_size_contraction(k) or score != k:
            bad = f"k={k}: {spider.m} edges, score {score}"
            break
    records.append(
        CheckRecord(
            "extremal-spider",
            f"k<={max_score}",
            bad is None,
            "sizes and scores match",
            "ok" if bad is None else bad,
        )
    )

    bad = None
    for k in range(2, min(max_score, 26) + 1):
        star = extremal_branch_star(k)
        found = max_caterpillar(star).size
        if (
            star.m != branch_star_bound(k)
            or star.m != extremal_size_induced(k)
            or found != k
        ):
            bad = f"k={k}: {star.m} edges, caterpillar {found}"
            break
    records.append(
        CheckRecord(
            "extremal-branch-star",
            f"k<={min(max_score, 26)}",
            bad is None,
            "sizes and caterpillars match",
            "ok" if bad is None else bad,
        )
    )

    bad = None
    for k in range(1, min(max_score, 18) + 1):
        rooted, _profile = beautiful_tree(k)
        fed = very_hungry_max(rooted)
        cat = max_caterpillar(rooted.tree).size
        want_edges = claimed.get(k, max_branch_size(k))
        if rooted.tree.m != want_edges or fed != k or cat > 2 * k - 1:
            bad = f"k={k}: {rooted.tree.m} edges, hungry {fed}, caterpillar {cat}"
            break
    records.append(
        CheckRecord(
            "beautiful-tree",
            f"k<={min(max_score, 18)}",
            bad is None,
            "sizes, appetites, caterpillar cap",
            "ok" if bad is None else bad,
        )
    )

    points = guarantee_change_points(sweep_limit)
    bad = None
    for m in points:
        if induced_guarantee(m) != induced_guarantee_reference(m):
            bad = f"m={m}: {induced_guarantee(m)} vs {induced_guarantee_reference(m)}"
            break
    records.append(
        CheckRecord(
            "guarantee-sweep",
            f"m<={sweep_limit}",
            bad is None,
            "closed form equals reference",
            "ok" if bad is None else bad,
            f"{len(points)} change points",
        )
    )

    return VerificationReport(tuple(records))
