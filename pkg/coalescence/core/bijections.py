# coalescence/core/bijections.py

"""
The constructive bijection chain between colored cycles and arrangements of
the ground set S = {(i, j) : 1 <= i <= r, 1 <= j <= s_i}.

    colored cycle
      -> (labeled digraph, pair of Eulerian tours)      step 1
      -> Euler structure (root, wirings, exit orders)   step 2
      -> (sequence of r-1 labels, cycle of the rest)    step 3

plus the extension to colored subsets (cut-and-sort into a marked strip) and
the strip relabeling that splits a marked strip into three plain pieces.

Conventions used throughout:

* Edge j of the digraph leaves the j-th element x_j = σ^{j-1}(1) of the
  cycle. Its uncircled label is j (this is also its edge id everywhere in the
  chain) and its circled label is x_j.
* The first tour lists edges by circled label and defines the wirings. The
  second lists them by uncircled label and defines the exit orderings. Both
  start at edge 1.
* In step 3 an edge is named by (tail, rank in the tail's exit ordering), so
  the last exit of vertex i is (i, s_i).
"""

import itertools
import logging
import random
from collections import Counter
from dataclasses import dataclass
from typing import Any, Iterator, Sequence

from ..errors import (
    ArborescenceError,
    BijectionError,
    PartitionError,
    StripError,
    WiringError,
)
from .colored import (
    ColoredCycle,
    ColoredStrip,
    ColoredSubsetInstance,
    svector_of,
    validate_colored_cycle,
)
from .permutations import Permutation

logger = logging.getLogger("cycle_coalescence.core.bijections")

Label = tuple[int, int]


# --- Digraphs and tours ---


@dataclass(frozen=True)
class LabeledArc:
    uncircled: int
    circled: int
    tail: int
    head: int


@dataclass(frozen=True)
class Arc:
    id: int
    tail: int
    head: int


def _check_degrees(r: int, ends: Sequence[tuple[int, int]]) -> None:
    out_deg = Counter(tail for tail, _ in ends)
    in_deg = Counter(head for _, head in ends)
    for vertex in range(1, r + 1):
        if out_deg[vertex] == 0 or out_deg[vertex] != in_deg[vertex]:
            raise BijectionError(
                f"Vertex {vertex} has outdegree {out_deg[vertex]} and indegree {in_deg[vertex]}"
            )
    if any(not 1 <= x <= r for end in ends for x in end):
        raise BijectionError(f"An edge endpoint lies outside the vertex set 1..{r}")


@dataclass(frozen=True)
class LabeledDigraph:
    """r vertices and n edges, each with an uncircled and a circled label. Arcs are kept in uncircled order."""
    r: int
    arcs: tuple[LabeledArc, ...]

    def __post_init__(self):
        arcs = tuple(sorted(self.arcs, key=lambda a: a.uncircled))
        object.__setattr__(self, "arcs", arcs)
        n = len(arcs)
        expected = list(range(1, n + 1))
        if [a.uncircled for a in arcs] != expected:
            raise BijectionError("Uncircled labels are not a permutation of 1..n")
        if sorted(a.circled for a in arcs) != expected:
            raise BijectionError("Circled labels are not a permutation of 1..n")
        _check_degrees(self.r, [(a.tail, a.head) for a in arcs])

    @property
    def n(self) -> int:
        return len(self.arcs)

    def arc(self, uncircled: int) -> LabeledArc:
        return self.arcs[uncircled - 1]

    def svector(self) -> tuple[int, ...]:
        counts = Counter(a.tail for a in self.arcs)
        return tuple(counts[i] for i in range(1, self.r + 1))

    def to_digraph(self) -> "Digraph":
        return Digraph(self.r, tuple(Arc(a.uncircled, a.tail, a.head) for a in self.arcs))

    def to_dict(self) -> dict[str, Any]:
        return {
            "r": self.r,
            "edges": [
                {"uncircled": a.uncircled, "circled": a.circled, "tail": a.tail, "head": a.head}
                for a in self.arcs
            ],
        }


@dataclass(frozen=True)
class Digraph:
    """Unlabeled multigraph; an arc's id identifies it among parallel edges and loops."""
    r: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        arcs = tuple(sorted(self.arcs, key=lambda a: a.id))
        object.__setattr__(self, "arcs", arcs)
        if [a.id for a in arcs] != list(range(1, len(arcs) + 1)):
            raise BijectionError("Arc ids are not 1..n")
        _check_degrees(self.r, [(a.tail, a.head) for a in arcs])

    @property
    def n(self) -> int:
        return len(self.arcs)

    def arc(self, arc_id: int) -> Arc:
        return self.arcs[arc_id - 1]

    def to_dict(self) -> dict[str, Any]:
        return {"r": self.r, "edges": [{"id": a.id, "tail": a.tail, "head": a.head} for a in self.arcs]}


@dataclass(frozen=True)
class EulerianTourPair:
    """Two Eulerian tours given as sequences of edge ids."""
    first: tuple[int, ...]
    second: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"first": list(self.first), "second": list(self.second)}


def _check_tour(graph, tour: Sequence[int], name: str) -> None:
    if sorted(tour) != list(range(1, graph.n + 1)):
        raise BijectionError(f"The {name} tour does not use every edge exactly once")
    for a, b in zip(tour, tour[1:] + tour[:1]):
        if graph.arc(a).head != graph.arc(b).tail:
            raise BijectionError(f"The {name} tour breaks between edges {a} and {b}")


def _check_tour_pair(graph, tours: EulerianTourPair) -> None:
    _check_tour(graph, tours.first, "first")
    _check_tour(graph, tours.second, "second")
    if tours.first[0] != tours.second[0]:
        raise BijectionError("The two tours do not share a starting edge")


# --- Euler structures ---


@dataclass(frozen=True)
class EulerStructure:
    """
    A digraph with a root vertex, a wiring at every vertex and an exit
    ordering at every vertex.

    `wiring` holds (incoming edge, outgoing edge) pairs sorted by incoming
    edge; `exit_orders[i - 1]` is the exit ordering of vertex i.
    """
    digraph: Digraph
    root: int
    wiring: tuple[tuple[int, int], ...]
    exit_orders: tuple[tuple[int, ...], ...]

    def successor(self) -> dict[int, int]:
        return dict(self.wiring)

    def last_exits(self) -> dict[int, int]:
        """Last exit of every non-root vertex."""
        return {
            vertex: order[-1]
            for vertex, order in enumerate(self.exit_orders, start=1)
            if vertex != self.root
        }

    def wiring_cycle(self, start: int) -> list[int]:
        succ = self.successor()
        cycle = [start]
        while len(cycle) <= self.digraph.n:
            nxt = succ[cycle[-1]]
            if nxt == start:
                break
            cycle.append(nxt)
        return cycle

    def check(self) -> None:
        """Raises WiringError or ArborescenceError when a structural condition fails."""
        g = self.digraph
        if not 1 <= self.root <= g.r:
            raise BijectionError(f"Root {self.root} is not a vertex")
        if len(self.exit_orders) != g.r:
            raise BijectionError("One exit ordering per vertex is required")
        for vertex, order in enumerate(self.exit_orders, start=1):
            if sorted(order) != sorted(a.id for a in g.arcs if a.tail == vertex):
                raise BijectionError(f"Exit ordering of vertex {vertex} is not a total order of its outgoing edges")

        incoming = [pair[0] for pair in self.wiring]
        outgoing = [pair[1] for pair in self.wiring]
        every = list(range(1, g.n + 1))
        if sorted(incoming) != every or sorted(outgoing) != every:
            raise WiringError("Wirings must pair every edge once as incoming and once as outgoing")
        for into, out in self.wiring:
            if g.arc(into).head != g.arc(out).tail:
                raise WiringError(f"Edge {into} is wired to edge {out} at a different vertex")
        if len(self.wiring_cycle(1)) != g.n:
            raise WiringError("The wirings do not concatenate the edges into a single cycle")

        parent = {vertex: g.arc(edge).head for vertex, edge in self.last_exits().items()}
        for vertex in parent:
            seen = {vertex}
            current = vertex
            while current != self.root:
                current = parent[current]
                if current in seen:
                    raise ArborescenceError(
                        f"Last exits contain a cycle through vertex {current}; they do not reach root {self.root}"
                    )
                seen.add(current)

    def to_dict(self) -> dict[str, Any]:
        return {
            "digraph": self.digraph.to_dict(),
            "root": self.root,
            "wiring": [list(pair) for pair in self.wiring],
            "exit_orders": [list(order) for order in self.exit_orders],
        }


# --- Sequence/cycle arrangements ---


def ground_set(svector: Sequence[int]) -> tuple[Label, ...]:
    return tuple((i, j) for i, s in enumerate(svector, start=1) for j in range(1, s + 1))


def canonical_rotation(cycle: Sequence[Label]) -> tuple[Label, ...]:
    """Rotates a cyclic arrangement so that its minimum element comes first."""
    if not cycle:
        return ()
    start = cycle.index(min(cycle))
    return tuple(cycle[start:]) + tuple(cycle[:start])


@dataclass(frozen=True)
class SequenceCyclePair:
    """
    An (r-1)-term sequence and a cycle that together use every element of S
    once. The cycle is stored rotated so that its minimum comes first.
    """
    svector: tuple[int, ...]
    sequence: tuple[Label, ...]
    cycle: tuple[Label, ...]

    def __post_init__(self):
        svector = tuple(int(s) for s in self.svector)
        sequence = tuple(tuple(x) for x in self.sequence)
        cycle = canonical_rotation([tuple(x) for x in self.cycle])
        object.__setattr__(self, "svector", svector)
        object.__setattr__(self, "sequence", sequence)
        object.__setattr__(self, "cycle", cycle)

        if not svector or any(s < 1 for s in svector):
            raise PartitionError(f"s-vector {list(svector)} must be a nonempty list of positive integers")
        r, n = len(svector), sum(svector)
        if len(sequence) != r - 1:
            raise PartitionError(f"Sequence has {len(sequence)} terms, expected r-1 = {r - 1}")
        if len(cycle) != n - r + 1:
            raise PartitionError(f"Cycle has {len(cycle)} elements, expected n-r+1 = {n - r + 1}")
        if sorted(sequence + cycle) != list(ground_set(svector)):
            raise PartitionError("Sequence and cycle do not partition the ground set")

    @property
    def r(self) -> int:
        return len(self.svector)

    @property
    def n(self) -> int:
        return sum(self.svector)

    def to_dict(self) -> dict[str, Any]:
        return {
            "svector": list(self.svector),
            "sequence": [list(x) for x in self.sequence],
            "cycle": [list(x) for x in self.cycle],
        }


# --- Step 1: colored cycle <-> labeled digraph with two tours ---


def step1_forward(c: ColoredCycle) -> tuple[LabeledDigraph, EulerianTourPair]:
    order = c.sigma.cycle_order()
    n = c.n
    arcs = tuple(
        LabeledArc(
            uncircled=j + 1,
            circled=order[j],
            tail=c.color_of(order[j]),
            head=c.color_of(order[(j + 1) % n]),
        )
        for j in range(n)
    )
    g = LabeledDigraph(c.r, arcs)
    first = tuple(a.uncircled for a in sorted(arcs, key=lambda a: a.circled))
    second = tuple(range(1, n + 1))
    return g, EulerianTourPair(first, second)


def step1_inverse(g: LabeledDigraph, tours: EulerianTourPair) -> ColoredCycle:
    _check_tour_pair(g, tours)
    n = g.n
    if tours.second != tuple(range(1, n + 1)):
        raise BijectionError("The second tour must follow the uncircled labels")
    if tours.first != tuple(a.uncircled for a in sorted(g.arcs, key=lambda a: a.circled)):
        raise BijectionError("The first tour must follow the circled labels")
    if g.arc(1).circled != 1:
        raise BijectionError("The common starting edge must carry circled label 1")

    order = [g.arc(j).circled for j in range(1, n + 1)]
    colors = [0] * n
    for a in g.arcs:
        colors[a.circled - 1] = a.tail
    for j, a in enumerate(g.arcs):
        if a.head != colors[order[(j + 1) % n] - 1]:
            raise BijectionError(f"Edge {a.uncircled} ends at vertex {a.head}, inconsistent with its successor")

    sigma = Permutation.from_cycle_order(order)
    if not validate_colored_cycle(sigma, colors):
        raise BijectionError("Labels and tours do not describe a colored cycle")
    return ColoredCycle(sigma, tuple(colors))


def label_tours(digraph: Digraph, tours: EulerianTourPair) -> tuple[LabeledDigraph, EulerianTourPair]:
    """
    Attaches labels implied by a tour pair: the uncircled label of an edge is
    its position in the second tour, the circled label its position in the
    first. Returns the labeled digraph and the tours in uncircled numbering.
    """
    _check_tour_pair(digraph, tours)
    uncircled = {edge: pos for pos, edge in enumerate(tours.second, start=1)}
    circled = {edge: pos for pos, edge in enumerate(tours.first, start=1)}
    arcs = tuple(
        LabeledArc(uncircled[a.id], circled[a.id], a.tail, a.head) for a in digraph.arcs
    )
    relabeled = EulerianTourPair(
        first=tuple(uncircled[e] for e in tours.first),
        second=tuple(range(1, digraph.n + 1)),
    )
    return LabeledDigraph(digraph.r, arcs), relabeled


# --- Step 2: tour pair <-> Euler structure ---


def step2_forward(g: LabeledDigraph, tours: EulerianTourPair) -> EulerStructure:
    _check_tour_pair(g, tours)
    first = tours.first
    n = g.n
    root = g.arc(first[0]).tail
    wiring = tuple(sorted((first[j], first[(j + 1) % n]) for j in range(n)))
    exit_orders = tuple(
        tuple(e for e in tours.second if g.arc(e).tail == vertex)
        for vertex in range(1, g.r + 1)
    )
    return EulerStructure(g.to_digraph(), root, wiring, exit_orders)


def greedy_tour(e: EulerStructure) -> list[int]:
    """Walks from the root, always leaving by the first untraversed exit."""
    position = [0] * (e.digraph.r + 1)
    tour = []
    vertex = e.root
    while position[vertex] < len(e.exit_orders[vertex - 1]):
        edge = e.exit_orders[vertex - 1][position[vertex]]
        position[vertex] += 1
        tour.append(edge)
        vertex = e.digraph.arc(edge).head
    return tour


def step2_inverse(e: EulerStructure) -> EulerianTourPair:
    e.check()
    second = greedy_tour(e)
    if len(second) != e.digraph.n:
        raise ArborescenceError(
            f"The exit orderings stall after {len(second)} of {e.digraph.n} edges"
        )
    first = tuple(e.wiring_cycle(second[0]))
    return EulerianTourPair(first, tuple(second))


# --- Step 3: Euler structure <-> sequence/cycle pair ---


def step3_forward(e: EulerStructure) -> SequenceCyclePair:
    e.check()
    g = e.digraph
    label: dict[int, Label] = {
        edge: (vertex, rank)
        for vertex, order in enumerate(e.exit_orders, start=1)
        for rank, edge in enumerate(order, start=1)
    }
    succ = e.successor()
    tree = e.last_exits()
    skipped = {label[succ[edge]] for edge in tree.values()}

    start = e.exit_orders[e.root - 1][0]
    cycle = [label[edge] for edge in e.wiring_cycle(start) if label[edge] not in skipped]

    parent = {vertex: g.arc(edge).head for vertex, edge in tree.items()}
    children = Counter(parent.values())
    remaining = set(parent)
    sequence = []
    while remaining:
        leaf = min(vertex for vertex in remaining if children[vertex] == 0)
        sequence.append(label[succ[tree[leaf]]])
        remaining.discard(leaf)
        children[parent[leaf]] -= 1

    svector = tuple(len(order) for order in e.exit_orders)
    return SequenceCyclePair(svector, tuple(sequence), tuple(cycle))


def step3_inverse(s: SequenceCyclePair) -> EulerStructure:
    svector, r, n = s.svector, s.r, s.n
    root = s.sequence[-1][0] if r > 1 else 1

    # Decode the last-exit tree; each tree edge remembers the label wired after it.
    after_tree_edge: dict[Label, Label] = {}
    removed: set[int] = set()
    for idx, label in enumerate(s.sequence):
        pending = {x[0] for x in s.sequence[idx:]}
        candidates = [v for v in range(1, r + 1) if v != root and v not in removed and v not in pending]
        if not candidates:
            raise PartitionError("Sequence colors do not decode to a tree")
        leaf = candidates[0]
        after_tree_edge[(leaf, svector[leaf - 1])] = label
        removed.add(leaf)

    wired: list[Label] = []
    for label in s.cycle:
        wired.append(label)
        while label in after_tree_edge:
            label = after_tree_edge[label]
            wired.append(label)
    if len(wired) != n or len(set(wired)) != n:
        raise WiringError("Reinserted labels do not form a single cycle over the ground set")
    succ = {wired[j]: wired[(j + 1) % n] for j in range(n)}

    # Edge ids follow the greedy traversal from the root.
    exits = {v: [(v, j) for j in range(1, svector[v - 1] + 1)] for v in range(1, r + 1)}
    position = dict.fromkeys(exits, 0)
    ids: dict[Label, int] = {}
    vertex = root
    while position[vertex] < len(exits[vertex]):
        label = exits[vertex][position[vertex]]
        position[vertex] += 1
        ids[label] = len(ids) + 1
        vertex = succ[label][0]
    if len(ids) != n:
        raise ArborescenceError(f"The decoded exit orderings stall after {len(ids)} of {n} edges")

    arcs = tuple(Arc(ids[label], label[0], succ[label][0]) for label in wired)
    wiring = tuple(sorted((ids[label], ids[succ[label]]) for label in wired))
    exit_orders = tuple(tuple(ids[label] for label in exits[v]) for v in range(1, r + 1))
    return EulerStructure(Digraph(r, arcs), root, wiring, exit_orders)


# --- Full chain ---


def full_bijection(c: ColoredCycle) -> SequenceCyclePair:
    g, tours = step1_forward(c)
    return step3_forward(step2_forward(g, tours))


def full_inverse(s: SequenceCyclePair) -> ColoredCycle:
    structure = step3_inverse(s)
    tours = step2_inverse(structure)
    g, tours = label_tours(structure.digraph, tours)
    return step1_inverse(g, tours)


def trace_pipeline(c: ColoredCycle) -> dict[str, Any]:
    """Every intermediate object of the chain, in JSON-ready form."""
    g, tours = step1_forward(c)
    structure = step2_forward(g, tours)
    pair = step3_forward(structure)
    logger.debug(f"Traced colored {c.n}-cycle with s-vector {svector_of(c)}")
    return {
        "colored_cycle": {**c.to_dict(), "cycle_notation": c.sigma.to_cycle_notation()},
        "svector": list(svector_of(c)),
        "labeled_digraph": g.to_dict(),
        "tours": tours.to_dict(),
        "euler_structure": structure.to_dict(),
        "sequence_cycle_pair": pair.to_dict(),
    }


def enumerate_sequence_cycle_pairs(svector: Sequence[int]) -> Iterator[SequenceCyclePair]:
    """Every arrangement of S into an (r-1)-sequence and a cycle of the remaining elements."""
    svector = tuple(svector)
    if not svector or any(s < 1 for s in svector):
        raise PartitionError(f"s-vector {list(svector)} must be a nonempty list of positive integers")
    elements = ground_set(svector)
    r = len(svector)
    for sequence in itertools.permutations(elements, r - 1):
        rest = [x for x in elements if x not in sequence]
        head, tail = rest[0], rest[1:]
        for arrangement in itertools.permutations(tail):
            yield SequenceCyclePair(svector, sequence, (head,) + arrangement)


def random_composition(n: int, rng: random.Random) -> tuple[int, ...]:
    """A uniform composition of n: each of the n-1 gaps is cut with probability 1/2."""
    parts, current = [], 1
    for _ in range(n - 1):
        if rng.random() < 0.5:
            parts.append(current)
            current = 1
        else:
            current += 1
    parts.append(current)
    return tuple(parts)


def random_sequence_cycle_pair(svector: Sequence[int], rng: random.Random) -> SequenceCyclePair:
    elements = list(ground_set(svector))
    rng.shuffle(elements)
    r = len(svector)
    return SequenceCyclePair(tuple(svector), tuple(elements[: r - 1]), tuple(elements[r - 1:]))


# --- Colored subsets: cut-and-sort into marked strips ---


def _cut_and_sort(base: ColoredCycle) -> list[int]:
    """Element of the cycle sitting at each strip position, cutting the cycle before 1."""
    order = base.sigma.cycle_order()
    return sorted(order, key=lambda x: base.color_of(x))


def extended_forward(inst: ColoredSubsetInstance) -> tuple[ColoredStrip, ColoredCycle]:
    base = inst.base
    placed = _cut_and_sort(base)
    members = set(inst.subset)
    marked = tuple(p for p, x in enumerate(placed, start=1) if x in members)
    strip = ColoredStrip(tuple(base.color_of(x) for x in placed), marked)
    return strip, base


def extended_inverse(strip: ColoredStrip, base: ColoredCycle) -> ColoredSubsetInstance:
    if strip.marked is None:
        raise StripError("Extended inverse needs a marked strip")
    placed = _cut_and_sort(base)
    if strip.colors != tuple(base.color_of(x) for x in placed):
        raise StripError("Strip colors do not match the color multiplicities of the cycle")
    return ColoredSubsetInstance(base, tuple(sorted(placed[p - 1] for p in strip.marked)))


# --- Marked strips <-> (plain strip, color subset, selection strip) ---


@dataclass(frozen=True)
class StripTriple:
    """
    A plain (r+k)-colored (n+t)-strip, the t colors holding selections and a
    t-colored k-strip recording how many selections each of them holds.
    """
    plain: ColoredStrip
    color_subset: tuple[int, ...]
    selection: ColoredStrip

    def __post_init__(self):
        subset = tuple(self.color_subset)
        object.__setattr__(self, "color_subset", subset)
        if self.plain.marked is not None or self.selection.marked is not None:
            raise StripError("Strips in a triple carry no marks")
        if list(subset) != sorted(set(subset)) or not subset or subset[0] < 1:
            raise StripError(f"Color subset {list(subset)} must be increasing positive colors")
        if len(subset) != self.selection.r:
            raise StripError(
                f"Color subset has {len(subset)} colors but the selection strip uses {self.selection.r}"
            )
        r = self.plain.r - self.selection.n
        if r < subset[-1]:
            raise StripError(f"Color {subset[-1]} exceeds the r = {r} colors implied by the plain strip")

    def to_dict(self) -> dict[str, Any]:
        return {
            "plain": list(self.plain.colors),
            "color_subset": list(self.color_subset),
            "selection": list(self.selection.colors),
        }


def strip_bijection(strip: ColoredStrip) -> StripTriple:
    if not strip.marked:
        raise StripError("Strip bijection needs at least one marked box")
    marked = set(strip.marked)
    selected: Counter = Counter()
    boxes: list[tuple[int, int]] = []
    for position, color in enumerate(strip.colors, start=1):
        if position in marked:
            selected[color] += 1
        boxes.append((color, selected[color]))
    holding = sorted(selected)
    boxes.extend((color, 0) for color in holding)
    boxes.sort()

    renumber = {pair: idx for idx, pair in enumerate(sorted(set(boxes)), start=1)}
    plain = ColoredStrip(tuple(renumber[b] for b in boxes))
    selection = ColoredStrip(
        tuple(idx for idx, color in enumerate(holding, start=1) for _ in range(selected[color]))
    )
    return StripTriple(plain, tuple(holding), selection)


def strip_inverse(triple: StripTriple) -> ColoredStrip:
    k = triple.selection.n
    r = triple.plain.r - k
    per_color = dict(zip(triple.color_subset, triple.selection.block_lengths()))
    classes = [(c, label) for c in range(1, r + 1) for label in range(per_color.get(c, 0) + 1)]
    boxes = [classes[color - 1] for color in triple.plain.colors]

    for color in triple.color_subset:
        try:
            boxes.remove((color, 0))
        except ValueError as e:
            raise StripError(f"Color {color} has no box labeled 0 to delete") from e

    colors, marked, seen = [], [], set()
    for position, (color, label) in enumerate(boxes, start=1):
        colors.append(color)
        if label >= 1 and (color, label) not in seen:
            seen.add((color, label))
            marked.append(position)
    return ColoredStrip(tuple(colors), tuple(marked))
