"""Duality between segment families and trees.

``n`` pairwise disjoint segments whose 2n endpoints lie in convex position
cut the convex region into n + 1 cells; the cell-adjacency graph is a tree
with one edge per segment.  Everything here is combinatorial: endpoints are
the labels 0..2n-1 in convex position, a segment is an endpoint pair, and
two segments cross exactly when their endpoint pairs interleave in cyclic
order (and share no endpoint).  Geometry enters only through
``realize_coordinates``, which places label i at (i, i*i) on a strictly
convex parabola.

The dictionary:

* tree vertex  <->  cell (outer cell is vertex 0, the cell behind each
  segment is ranked by the segment's opening label),
* tree edge    <->  segment,
* induced caterpillar in the tree  <->  alternating path compatible with
  the family (crossing no unused segment),
* caterpillar reached by contraction  <->  alternating path among the
  family (self-avoiding, unused segments may be crossed).

``compatible_path`` walks the witness caterpillar spine cell by cell and
chains each cell's segments in boundary order.  Within a cell the chords
bordering it occupy pairwise non-interleaving intervals of the cell
boundary, and consecutive boundary chords have label-free gaps, so visiting
chords in boundary order keeps connectors crossing-free; when the chord
leading to the next spine cell is not last in boundary order, the chain
visits the chords before it, jumps to the far end, sweeps back, and leaves
through the exit chord (the jump connector nests the skipped intervals
instead of interleaving them).
"""

from __future__ import annotations

from dataclasses import dataclass

from .contraction import (
    ContractionPlan,
    contract_to_caterpillar,
    max_caterpillar_by_contraction,
)
from .induced import CaterpillarWitness, max_caterpillar
from .trees import Tree


# ======================================================================
# families and paths
# ======================================================================


@dataclass(frozen=True)
class SegmentFamily:
    """n pairwise non-crossing segments on endpoint labels 0..2n-1.

    Pairs are normalized to (low, high) sorted by low.  Construction rejects
    anything that is not a perfect matching of the labels and any pair of
    interleaving (crossing) segments.
    """

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one segment")
        norm = tuple(sorted((min(a, b), max(a, b)) for a, b in self.pairs))
        object.__setattr__(self, "pairs", norm)
        if len(norm) != self.n:
            raise ValueError(f"expected {self.n} segments, got {len(norm)}")
        seen: list[int] = []
        for a, b in norm:
            if a == b:
                raise ValueError(f"degenerate segment ({a}, {b})")
            seen += [a, b]
        if sorted(seen) != list(range(2 * self.n)):
            raise ValueError("segments must perfectly match labels 0..2n-1")
        # parenthesis scan: on a convex label circle, non-crossing means
        # properly nested in linear order
        partner = {}
        for a, b in norm:
            partner[a] = b
            partner[b] = a
        stack: list[int] = []
        for x in range(2 * self.n):
            if partner[x] > x:
                stack.append(x)
            else:
                if not stack or stack[-1] != partner[x]:
                    raise ValueError(
                        f"segments ({partner[x]}, {x}) and "
                        f"({stack[-1]}, {partner[stack[-1]]}) cross"
                    )
                stack.pop()

    def segment_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.pairs)


@dataclass(frozen=True)
class AlternatingPath:
    """A polygonal chain e0, e1, ..., e_{2k-1} over endpoint labels whose
    edges alternate family segments (even positions) and connectors."""

    endpoints: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1 or len(self.endpoints) != 2 * self.k:
            raise ValueError("endpoint count must be twice the segment count")

    def edges(self) -> list[tuple[int, int]]:
        e = self.endpoints
        return [(e[i], e[i + 1]) for i in range(len(e) - 1)]


@dataclass(frozen=True)
class GeometricRealization:
    """Exact integer coordinates for the labels, strictly convex in label
    order."""

    coordinates: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PathReport:
    """Outcome of validate_path: failures are entries, not exceptions."""

    ok: bool
    mode: str
    issues: tuple[str, ...]


def _interleave(p: tuple[int, int], q: tuple[int, int]) -> bool:
    """Cyclic interleaving of two endpoint pairs sharing no endpoint."""
    a, b = min(p), max(p)
    c, d = q
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


# ======================================================================
# family structure: nesting forest, cells, boundary cycles
# ======================================================================


@dataclass(frozen=True)
class _Structure:
    chords: tuple[tuple[int, int], ...]  # sorted by opening label
    parent: tuple[int, ...]  # chord index -> enclosing chord index or -1
    cell_cycles: tuple[tuple[tuple[int, int, int], ...], ...]
    # cell id -> boundary chords in walk order as (chord, first, second)
    tree: Tree
    edge_chord: dict[tuple[int, int], int]  # tree edge -> chord index


def _structure(s: SegmentFamily) -> _Structure:
    chords = s.pairs  # already sorted by opening label
    index_of_open = {a: i for i, (a, b) in enumerate(chords)}
    parent = [-1] * s.n
    children: list[list[int]] = [[] for _ in range(s.n)]
    top: list[int] = []
    stack: list[int] = []
    opens = {a for a, _ in chords}
    for x in range(2 * s.n):
        if x in opens:
            i = index_of_open[x]
            if stack:
                parent[i] = stack[-1]
                children[stack[-1]].append(i)
            else:
                top.append(i)
            stack.append(i)
        else:
            stack.pop()

    # cell id: 0 = outer; chord i's inner cell = i + 1
    cycles: list[tuple[tuple[int, int, int], ...]] = []
    cycles.append(tuple((i, chords[i][0], chords[i][1]) for i in top))
    for i in range(s.n):
        cyc = [(j, chords[j][0], chords[j][1]) for j in children[i]]
        cyc.append((i, chords[i][1], chords[i][0]))
        cycles.append(tuple(cyc))

    edges = []
    edge_chord: dict[tuple[int, int], int] = {}
    for i in range(s.n):
        u = parent[i] + 1 if parent[i] >= 0 else 0
        v = i + 1
        e = (min(u, v), max(u, v))
        edges.append(e)
        edge_chord[e] = i
    tree = Tree(s.n + 1, tuple(edges))
    return _Structure(chords, tuple(parent), tuple(cycles), tree, edge_chord)


def segments_to_tree(
    s: SegmentFamily,
) -> tuple[Tree, dict[tuple[int, int], tuple[int, int]]]:
    """The cell-adjacency tree, plus the segment behind each tree edge."""
    st = _structure(s)
    return st.tree, {e: st.chords[i] for e, i in st.edge_chord.items()}


def tree_to_segments(t: Tree, root: int = 0) -> SegmentFamily:
    """A family whose cell tree is ``t``: depth-first interval embedding
    rooted at ``root``, children in ascending order; each edge opens a label
    on entry to the child subtree and closes one on exit."""
    if t.m < 1:
        raise ValueError("needs at least one edge")
    if not 0 <= root < t.vertex_count:
        raise ValueError("root out of range")
    pairs: list[tuple[int, int]] = []
    counter = 0
    # stack holds (vertex, parent, open_label or -1 for 'not yet entered')
    stack: list[tuple[int, int, int]] = [(root, -1, -1)]
    opened: dict[int, int] = {}
    seen = [False] * t.vertex_count
    while stack:
        v, par, phase = stack.pop()
        if phase == -1:
            seen[v] = True
            if par >= 0:
                opened[v] = counter
                counter += 1
            stack.append((v, par, 1))
            for w in reversed(t.adjacency[v]):
                if not seen[w]:
                    stack.append((w, v, -1))
        else:
            if par >= 0:
                pairs.append((opened[v], counter))
                counter += 1
    return SegmentFamily(t.m, tuple(sorted(pairs)))


def realize_coordinates(s: SegmentFamily) -> GeometricRealization:
    """Label i sits at (i, i*i): integer points, strictly convex in label
    order, so segment crossings match pair interleavings exactly."""
    return GeometricRealization(tuple((i, i * i) for i in range(2 * s.n)))


# ======================================================================
# path validation
# ======================================================================


def validate_path(s: SegmentFamily, p: AlternatingPath, mode: str) -> PathReport:
    """Check ``p`` against ``s``.  Mode 'simple' (alias 'among') checks the
    alternation structure and self-crossings; 'compatible' additionally
    forbids crossing any family segment absent from the chain."""
    if mode == "among":
        mode = "simple"
    if mode not in ("simple", "compatible"):
        raise ValueError(f"unknown mode {mode!r}")
    issues: list[str] = []
    e = p.endpoints
    limit = 2 * s.n
    for x in e:
        if not 0 <= x < limit:
            issues.append(f"label {x} out of range 0..{limit - 1}")
    if len(set(e)) != len(e):
        dups = sorted({x for x in e if e.count(x) > 1})
        issues.append(f"repeated labels {dups}")
    family = s.segment_set()
    for i in range(0, len(e) - 1, 2):
        seg = (min(e[i], e[i + 1]), max(e[i], e[i + 1]))
        if seg not in family:
            issues.append(f"position {i}: ({e[i]}, {e[i + 1]}) is not a segment")
    edges = p.edges()
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if _interleave(edges[i], edges[j]):
                issues.append(f"chain edges {edges[i]} and {edges[j]} cross")
    if mode == "compatible":
        used = {(min(a, b), max(a, b)) for a, b in edges}
        for seg in s.pairs:
            if seg in used:
                continue
            for edge in edges:
                if _interleave(seg, edge):
                    issues.append(f"chain edge {edge} crosses unused segment {seg}")
    return PathReport(not issues, mode, tuple(issues))


# ======================================================================
# compatible paths from caterpillar witnesses
# ======================================================================


def _chain_cell(
    cycle: tuple[tuple[int, int, int], ...],
    wanted: set[int],
    entry: int | None,
    entry_point: int | None,
    exit_chord: int | None,
) -> list[tuple[int, int, int]]:
    """Order the wanted chords of one cell into a traversal (chord, enter,
    leave).  See the module docstring for why the result cannot cross."""
    if entry is None:
        items = [it for it in cycle if it[0] in wanted]
        if exit_chord is not None:
            at = next(i for i, it in enumerate(items) if it[0] == exit_chord)
            items = items[at + 1 :] + items[:at] + [items[at]]
        return items

    pos = next(i for i, it in enumerate(cycle) if it[0] == entry)
    _, p_e, q_e = cycle[pos]
    size = len(cycle)
    if entry_point == q_e:  # walk on, in boundary order
        sweep = [cycle[(pos + 1 + i) % size] for i in range(size - 1)]
    elif entry_point == p_e:  # walk back against boundary order
        sweep = [
            (c, q, p)
            for c, p, q in (cycle[(pos - 1 - i) % size] for i in range(size - 1))
        ]
    else:
        raise AssertionError("entry point not on entry chord")
    items = [it for it in sweep if it[0] in wanted]
    if exit_chord is None:
        return items
    at = next(i for i, it in enumerate(items) if it[0] == exit_chord)
    if at == len(items) - 1:
        return items
    tail = [(c, q, p) for c, p, q in reversed(items[at + 1 :])]
    c, p, q = items[at]
    return items[:at] + tail + [(c, q, p)]


def compatible_path(s: SegmentFamily, w: CaterpillarWitness) -> AlternatingPath:
    """An alternating path through exactly the segments of the witness
    caterpillar (a witness over the cell tree of ``s``), crossing no other
    segment of the family."""
    st = _structure(s)
    t = st.tree
    cells = set(range(t.vertex_count))
    if not w.vertex_set <= cells or not set(w.spine) <= w.vertex_set:
        raise ValueError("witness does not fit this family's cell tree")

    vs = w.vertex_set
    witness_chords = {
        i for e, i in st.edge_chord.items() if e[0] in vs and e[1] in vs
    }
    if len(witness_chords) != w.size or w.size < 1:
        raise ValueError("witness size disagrees with its induced edges")

    spine = list(w.spine)
    if not spine:
        if w.size != 1:
            raise ValueError("empty spine only fits a single-segment witness")
        only = next(iter(witness_chords))
        spine = [min(e for e, i in st.edge_chord.items() if i == only)[0]]
    spine_set = set(spine)

    # chord -> cells it borders; split witness chords into spine connectors
    # and per-cell leaf chords
    link: dict[tuple[int, int], int] = {}
    at_cell: dict[int, list[int]] = {c: [] for c in spine}
    for e, i in st.edge_chord.items():
        if i not in witness_chords:
            continue
        a, b = e
        both = a in spine_set and b in spine_set
        if both:
            link[e] = i
        else:
            host = a if a in spine_set else (b if b in spine_set else None)
            if host is None:
                raise ValueError(f"witness segment {st.chords[i]} misses the spine")
            at_cell[host].append(i)
    for u, v in zip(spine, spine[1:]):
        if (min(u, v), max(u, v)) not in link:
            raise ValueError("spine cells are not joined by witness segments")
    if len(link) != max(len(spine) - 1, 0):
        raise ValueError("witness segments join non-consecutive spine cells")

    out: list[tuple[int, int, int]] = []
    point: int | None = None
    entry: int | None = None
    for idx, cell in enumerate(spine):
        exit_chord = None
        if idx + 1 < len(spine):
            u, v = spine[idx], spine[idx + 1]
            exit_chord = link[(min(u, v), max(u, v))]
        wanted = set(at_cell[cell])
        if exit_chord is not None:
            wanted.add(exit_chord)
        if entry is None and not wanted:
            raise ValueError("spine cell carries no witness segment")
        if wanted:
            chained = _chain_cell(
                st.cell_cycles[cell], wanted, entry, point, exit_chord
            )
            out.extend(chained)
            point = out[-1][2]
        entry = exit_chord

    endpoints: list[int] = []
    for _, a, b in out:
        endpoints += [a, b]
    path = AlternatingPath(tuple(endpoints), w.size)
    report = validate_path(s, path, "compatible")
    if not report.ok:
        raise AssertionError(
            "constructed path failed validation: " + "; ".join(report.issues)
        )
    return path


# ======================================================================
# among paths via contraction
# ======================================================================


def among_path(s: SegmentFamily) -> tuple[AlternatingPath, ContractionPlan]:
    """A self-avoiding alternating path through
    ``max_caterpillar_by_contraction`` many segments of ``s``, paired with
    the contraction plan that witnesses the count.  Contracting a tree edge
    is deleting a segment: the path is built compatible with the surviving
    subfamily and may cross only the deleted segments."""
    st = _structure(s)
    cap = max_caterpillar_by_contraction(st.tree)
    plan = contract_to_caterpillar(st.tree, cap)
    dropped = {
        st.edge_chord[(min(u, v), max(u, v))]
        for (u, v) in (step.edge for step in plan.contract_sequence)
    }
    keep = [st.chords[i] for i in range(s.n) if i not in dropped]
    labels = sorted(x for pair in keep for x in pair)
    rank = {x: i for i, x in enumerate(labels)}
    sub = SegmentFamily(len(keep), tuple((rank[a], rank[b]) for a, b in keep))

    sub_tree, _ = segments_to_tree(sub)
    witness = max_caterpillar(sub_tree)
    if witness.size != cap:
        raise AssertionError("contracted family is not the expected caterpillar")
    inner = compatible_path(sub, witness)
    endpoints = tuple(labels[x] for x in inner.endpoints)
    path = AlternatingPath(endpoints, cap)
    report = validate_path(s, path, "simple")
    if not report.ok:
        raise AssertionError(
            "constructed path failed validation: " + "; ".join(report.issues)
        )
    return path, plan
