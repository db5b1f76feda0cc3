"""Connected components, highest-weight structure, and weight-determined
isomorphism of components.

The isomorphism construction follows the uniqueness argument: starting from
the two highest-weight vertices it extends the map down lowering edges, and
only claims success after an independent re-verification of the finished map.
Inputs that break the underlying theorems raise TheoremViolation instead of
returning wrong answers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graphcore import AxiomReport, QuasiCrystalGraph, Witness, ext_str
from .weightlattice import pairing, rho, sub


class TheoremViolation(Exception):
    """The input contradicts a theorem the caller relied on."""

    def __init__(self, message: str, details: list[str] | None = None):
        super().__init__(message)
        self.details = details or []

    def lines(self) -> list[str]:
        return [str(self)] + self.details


@dataclass
class Component:
    """One connected component, with its highest-weight data precomputed."""

    graph: QuasiCrystalGraph
    vertices: tuple[str, ...]
    hw_vertices: tuple[str, ...]
    _subgraph: QuasiCrystalGraph | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def min_vertex(self) -> str:
        return self.vertices[0]

    def subgraph(self) -> QuasiCrystalGraph:
        if self._subgraph is None:
            g = self.graph
            sub_g = QuasiCrystalGraph(g.n)
            members = set(self.vertices)
            for x in self.vertices:
                sub_g.add_vertex(x, g.wt(x), [g.eps(x, i) for i in g.index_set], [g.phi(x, i) for i in g.index_set])
            for x in self.vertices:
                for i in g.index_set:
                    y = g.f(x, i)
                    if y is not None and y in members:
                        sub_g.add_edge(x, i, y)
            self._subgraph = sub_g
        return self._subgraph


def components(g: QuasiCrystalGraph) -> list[Component]:
    """Connected components under e and f jointly, ordered by least vertex id."""
    seen: set[str] = set()
    comps: list[Component] = []
    for start in g.vertex_ids():
        if start in seen:
            continue
        block = []
        queue = deque([start])
        seen.add(start)
        while queue:
            x = queue.popleft()
            block.append(x)
            for i in g.index_set:
                for nbr in (g.e(x, i), g.f(x, i)):
                    if nbr is not None and nbr not in seen:
                        seen.add(nbr)
                        queue.append(nbr)
        block.sort()
        hw = tuple(x for x in block if all(g.e(x, i) is None for i in g.index_set))
        comps.append(Component(g, tuple(block), hw))
    comps.sort(key=lambda c: c.min_vertex)
    return comps


def unique_highest_weight(c: Component) -> str:
    """The single highest-weight vertex; anything else breaks the theorem."""
    if len(c.hw_vertices) == 1:
        return c.hw_vertices[0]
    raise TheoremViolation(
        f"component at {c.min_vertex!r} has {len(c.hw_vertices)} highest-weight vertices",
        [f"highest-weight\t{x}" for x in c.hw_vertices],
    )


def is_bounded_above(c: Component) -> bool:
    """Every vertex must reach some highest-weight vertex by raising steps.

    On a coherent graph raising from x reaches hw iff lowering from hw
    reaches x, so this walks lowering edges from the highest-weight set.
    """
    g = c.graph
    reached: set[str] = set(c.hw_vertices)
    queue = deque(c.hw_vertices)
    while queue:
        x = queue.popleft()
        for i in g.index_set:
            y = g.f(x, i)
            if y is not None and y not in reached:
                reached.add(y)
                queue.append(y)
    return reached >= set(c.vertices)


def rank_of(c: Component, x: str) -> int:
    """Number of lowering steps below the highest weight: <wt(u)-wt(x), rho>."""
    u = unique_highest_weight(c)
    g = c.graph
    r = pairing(sub(g.wt(u), g.wt(x)), rho(g.n))
    if r < 0:
        raise TheoremViolation(
            f"vertex {x!r} sits above the highest weight of its component",
            [f"wt({u})={g.wt(u)} wt({x})={g.wt(x)}"],
        )
    return r


def rank_table(c: Component) -> dict[str, int]:
    return {x: rank_of(c, x) for x in c.vertices}


def check_degree_one(c: Component) -> AxiomReport:
    """The highest-weight vertex carries at most one lowering edge."""
    u = unique_highest_weight(c)
    g = c.graph
    out = [i for i in g.index_set if g.f(u, i) is not None]
    ws = []
    if len(out) > 1:
        ws.append(
            Witness(
                "degree",
                (u,),
                tuple(out),
                f"{len(out)} lowering edges at the top",
                "at most one",
            )
        )
    return AxiomReport("degree", ws)


@dataclass
class IsoWitness:
    """A vertex bijection claimed to preserve all structure; self-checking."""

    mapping: dict[str, str]

    def verify(self, c1: Component, c2: Component) -> list[str]:
        """Re-check the claim from scratch; returns problems, empty when good."""
        g1, g2 = c1.graph, c2.graph
        problems = []
        if sorted(self.mapping) != list(c1.vertices):
            problems.append("domain does not cover the first component")
        img = sorted(self.mapping.values())
        if img != list(c2.vertices):
            problems.append("image does not cover the second component exactly once")
        if problems:
            return problems
        if g1.n != g2.n:
            return [f"rank mismatch: {g1.n} vs {g2.n}"]
        for x, y in sorted(self.mapping.items()):
            if g1.wt(x) != g2.wt(y):
                problems.append(f"wt\t{x}\t{y}\t{g1.wt(x)} vs {g2.wt(y)}")
            for i in g1.index_set:
                if g1.eps(x, i) != g2.eps(y, i):
                    problems.append(
                        f"eps_{i}\t{x}\t{y}\t{ext_str(g1.eps(x, i))} vs {ext_str(g2.eps(y, i))}"
                    )
                if g1.phi(x, i) != g2.phi(y, i):
                    problems.append(
                        f"phi_{i}\t{x}\t{y}\t{ext_str(g1.phi(x, i))} vs {ext_str(g2.phi(y, i))}"
                    )
                for tag, step1, step2 in (("e", g1.e, g2.e), ("f", g1.f, g2.f)):
                    a, b = step1(x, i), step2(y, i)
                    a_img = self.mapping.get(a) if a is not None else None
                    if a_img != b:
                        problems.append(f"{tag}_{i}\t{x}\t{y}\t{a}->{a_img} vs {b}")
        return problems


def isomorphic(c1: Component, c2: Component) -> IsoWitness | None:
    """Equal highest weights force an isomorphism; build and verify it.

    Returns None when the highest weights differ. Raises TheoremViolation when
    the construction gets stuck or the finished map fails verification, since
    for compliant components neither can happen.
    """
    g1, g2 = c1.graph, c2.graph
    u1 = unique_highest_weight(c1)
    u2 = unique_highest_weight(c2)
    if g1.n != g2.n or g1.wt(u1) != g2.wt(u2):
        return None

    theta = {u1: u2}
    queue = deque([u1])
    while queue:
        x = queue.popleft()
        y = theta[x]
        for i in g1.index_set:
            a, b = g1.f(x, i), g2.f(y, i)
            if (a is None) != (b is None):
                raise TheoremViolation(
                    "equal highest weights but mismatched lowering edges",
                    [f"stuck\t{x}\t{y}\t{i}\t{a} vs {b}"],
                )
            if a is None:
                continue
            if a in theta:
                if theta[a] != b:
                    raise TheoremViolation(
                        "lowering edges disagree with an earlier assignment",
                        [f"conflict\t{a}\t{theta[a]} vs {b}"],
                    )
            else:
                theta[a] = b
                queue.append(a)

    if len(theta) != c1.size:
        raise TheoremViolation(
            "component not reachable from its highest weight by lowering edges",
            [f"covered {len(theta)} of {c1.size} vertices"],
        )
    witness = IsoWitness(theta)
    problems = witness.verify(c1, c2)
    if problems:
        raise TheoremViolation(
            "constructed vertex map fails verification", problems
        )
    return witness
