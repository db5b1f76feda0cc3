"""Single-entry graph corruption and the detector battery run against it.

Each mutation copies the graph and changes exactly one stored entry: a string
length, one side of one edge, or one weight coordinate. Detection means at
least one checker reports a witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .axioms import (
    check_cor_infs,
    check_lemma_ij,
    check_local_ax_cases,
    check_lq1,
    check_lq2,
    check_lq3,
    check_lq3p,
    check_stembridge,
)
from .graphcore import (
    POS_INF,
    QuasiCrystalGraph,
    ext_str,
    is_crystal,
    is_seminormal,
    validate,
)

_LENGTH_POOL = [0, 1, 2, 3, -1, POS_INF]


@dataclass
class Mutation:
    kind: str
    vertex: str
    index: int
    detail: str

    def describe(self) -> str:
        return f"{self.kind}\t{self.vertex}\t{self.index}\t{self.detail}"


def _mutate_length(g: QuasiCrystalGraph, rng: random.Random) -> Mutation:
    x = rng.choice(g.vertex_ids())
    i = rng.choice(list(g.index_set))
    which = rng.choice(["eps", "phi"])
    old = g.eps(x, i) if which == "eps" else g.phi(x, i)
    pool = [v for v in _LENGTH_POOL if v != old]
    if isinstance(old, int):
        pool.extend([old + 1, old - 1])
    new = rng.choice(pool)
    if which == "eps":
        g.set_epsilon(x, i, new)
    else:
        g.set_phi(x, i, new)
    return Mutation(which, x, i, f"{ext_str(old)}->{ext_str(new)}")


def _mutate_edge(g: QuasiCrystalGraph, rng: random.Random) -> Mutation | None:
    entries = []
    for x in g.vertex_ids():
        for i in g.index_set:
            if g.e(x, i) is not None:
                entries.append((x, i, "e"))
            if g.f(x, i) is not None:
                entries.append((x, i, "f"))
    if not entries:
        return None
    x, i, side = rng.choice(entries)
    old = g.e(x, i) if side == "e" else g.f(x, i)
    targets = [v for v in g.vertex_ids() if v != old]
    targets.append(None)
    new = rng.choice(targets)
    if side == "e":
        g.set_raising(x, i, new)
    else:
        g.set_lowering(x, i, new)
    return Mutation(f"edge-{side}", x, i, f"{old}->{new}")


def _mutate_weight(g: QuasiCrystalGraph, rng: random.Random) -> Mutation:
    x = rng.choice(g.vertex_ids())
    coord = rng.randrange(g.n)
    delta = rng.choice([-2, -1, 1, 2])
    wt = list(g.wt(x))
    old = tuple(wt)
    wt[coord] += delta
    g.set_weight(x, wt)
    return Mutation("weight", x, coord + 1, f"{old}->{tuple(wt)}")


def random_mutation(
    g: QuasiCrystalGraph, rng: random.Random
) -> tuple[QuasiCrystalGraph, Mutation]:
    """One uniformly chosen single-entry corruption of a copy of g."""
    mutant = g.copy()
    kind = rng.choice(["length", "edge", "weight"])
    if kind == "edge":
        m = _mutate_edge(mutant, rng)
        if m is not None:
            return mutant, m
        # graphs without edges fall back to a length poke
    if kind == "weight":
        return mutant, _mutate_weight(mutant, rng)
    return mutant, _mutate_length(mutant, rng)


def _lengths_are_counting(g: QuasiCrystalGraph) -> bool:
    for x in g.vertex_ids():
        for i in g.index_set:
            for v in (g.eps(x, i), g.phi(x, i)):
                if v == POS_INF:
                    continue
                if not isinstance(v, int) or v < 0:
                    return False
    return True


def run_detectors(g: QuasiCrystalGraph) -> list[str]:
    """Names of the checkers that flag this graph, in battery order.

    The battery depends on what the graph claims to be: a graph without
    frozen indices is held to the local crystal axioms, one with frozen
    indices to the local quasi-crystal axioms.
    """
    failing = []
    ok_core = True
    if not validate(g).passed:
        failing.append("validate")
        ok_core = False
    if not is_seminormal(g).passed:
        failing.append("seminormal")
        ok_core = False
    if is_crystal(g):
        if ok_core:
            for name, rep in sorted(check_stembridge(g).items()):
                if not rep.passed:
                    failing.append(name)
        return failing
    for name, chk in (
        ("lq1", check_lq1),
        ("lq2", check_lq2),
        ("lq3", check_lq3),
        ("lq3p", check_lq3p),
    ):
        if not chk(g).passed:
            failing.append(name)
    if _lengths_are_counting(g):
        for name, chk in (
            ("cases", check_local_ax_cases),
            ("infs", check_cor_infs),
            ("lemij", check_lemma_ij),
        ):
            if not chk(g).passed:
                failing.append(name)
    return failing


@dataclass
class FuzzResult:
    total: int
    detected: int
    silent: list[tuple[Mutation, str]]

    @property
    def rate(self) -> float:
        return self.detected / self.total if self.total else 1.0

    def lines(self) -> list[str]:
        out = [
            f"total\t{self.total}",
            f"detected\t{self.detected}",
            f"silent\t{len(self.silent)}",
            f"rate\t{self.rate:.4f}",
        ]
        for m, note in self.silent:
            out.append(f"silent-case\t{m.describe()}\t{note}")
        return out


def _triage(mutant: QuasiCrystalGraph) -> str:
    """Why did no checker fire? Valid mutants are possible for a few edits."""
    if validate(mutant).passed and is_seminormal(mutant).passed:
        return "mutant is itself a coherent seminormal quasi-crystal"
    return "unclassified gap"


def fuzz_graph(g: QuasiCrystalGraph, count: int, seed: int) -> FuzzResult:
    """Mutate count times with a seeded generator and run the battery."""
    rng = random.Random(seed)
    detected = 0
    silent: list[tuple[Mutation, str]] = []
    for _ in range(count):
        mutant, m = random_mutation(g, rng)
        if run_detectors(mutant):
            detected += 1
        else:
            silent.append((m, _triage(mutant)))
    return FuzzResult(count, detected, silent)
