"""Exact multivariate characters: graph characters, content characters, and
fundamental quasisymmetric polynomials, with the decomposition verifier.

Polynomials are sparse dicts from exponent vectors to nonzero ints; no floats
anywhere, so equality is honest equality.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .quasify import crystal_of_content, quasify
from .structure import Component, components, unique_highest_weight
from .weightlattice import check_composition, check_partition, descent_composition, enumerate_syt


class IntPolynomial:
    """Polynomial in x1..xn with int coefficients, exponent-vector keyed."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms=None):
        if not isinstance(n, int) or n < 1:
            raise ValueError("n must be a positive integer")
        self.n = n
        clean: dict[tuple[int, ...], int] = {}
        for expo, coeff in (terms or {}).items():
            expo = tuple(expo)
            if len(expo) != n:
                raise ValueError(f"exponent vector {expo} has length != {n}")
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise ValueError(f"coefficient must be int, got {coeff!r}")
            if coeff:
                clean[expo] = clean.get(expo, 0) + coeff
                if not clean[expo]:
                    del clean[expo]
        self._terms = clean

    @classmethod
    def zero(cls, n: int) -> "IntPolynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "IntPolynomial":
        return cls.monomial(n, (0,) * n)

    @classmethod
    def monomial(cls, n: int, expo, coeff: int = 1) -> "IntPolynomial":
        return cls(n, {tuple(expo): coeff})

    @classmethod
    def variables_sum(cls, n: int) -> "IntPolynomial":
        """x1 + x2 + ... + xn."""
        terms = {}
        for k in range(n):
            expo = [0] * n
            expo[k] = 1
            terms[tuple(expo)] = 1
        return cls(n, terms)

    def terms(self):
        """Canonical (exponent, coefficient) pairs, leading monomial first."""
        return tuple(sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True))

    def coefficient(self, expo) -> int:
        return self._terms.get(tuple(expo), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def _check_rank(self, other: "IntPolynomial") -> None:
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        self._check_rank(other)
        out = dict(self._terms)
        for expo, coeff in other._terms.items():
            out[expo] = out.get(expo, 0) + coeff
        return IntPolynomial(self.n, out)

    def __sub__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        self._check_rank(other)
        out = dict(self._terms)
        for expo, coeff in other._terms.items():
            out[expo] = out.get(expo, 0) - coeff
        return IntPolynomial(self.n, out)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPolynomial(self.n, {e: other * c for e, c in self._terms.items()})
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        self._check_rank(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return IntPolynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = IntPolynomial.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for expo, coeff in self.terms():
            vars_part = "*".join(
                f"x{k + 1}" if p == 1 else f"x{k + 1}^{p}"
                for k, p in enumerate(expo)
                if p
            )
            if not vars_part:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = vars_part
            else:
                body = f"{abs(coeff)}*{vars_part}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"IntPolynomial({self.n}, {dict(self.terms())!r})"


def character(obj) -> IntPolynomial:
    """Sum of x^wt over the vertices of a graph or component."""
    if isinstance(obj, Component):
        g = obj.graph
        vertices = obj.vertices
    else:
        g = obj
        vertices = g.vertex_ids()
    terms: dict[tuple[int, ...], int] = {}
    for x in vertices:
        wt = g.wt(x)
        if any(c < 0 for c in wt):
            raise ValueError(
                f"character needs non-negative weights; vertex {x!r} has {wt}"
            )
        terms[wt] = terms.get(wt, 0) + 1
    return IntPolynomial(g.n, terms)


def schur(shape, n: int) -> IntPolynomial:
    """Character of the content crystal: the Schur polynomial in n variables."""
    return character(crystal_of_content(shape, n))


def fundamental_qsym(alpha, n: int) -> IntPolynomial:
    """Gessel's fundamental quasisymmetric polynomial F_alpha in n variables:
    weakly increasing words of length |alpha| with a strict rise at every
    descent position (the partial sums of alpha except the last)."""
    comp = check_composition(alpha)
    m = sum(comp)
    descents = set()
    acc = 0
    for part in comp[:-1]:
        acc += part
        descents.add(acc)
    terms: dict[tuple[int, ...], int] = {}

    def walk(pos: int, prev: int, expo: list[int]) -> None:
        if pos == m:
            key = tuple(expo)
            terms[key] = terms.get(key, 0) + 1
            return
        lo = prev + 1 if pos in descents else prev
        for v in range(max(lo, 1), n + 1):
            expo[v - 1] += 1
            walk(pos + 1, v, expo)
            expo[v - 1] -= 1

    walk(0, 1, [0] * n)
    return IntPolynomial(n, terms)


@dataclass
class SchurDecompositionReport:
    """Everything the decomposition identity asserts, checked exactly."""

    shape: tuple[int, ...]
    n: int
    identity_ok: bool
    multiset_ok: bool
    term_compositions: list[tuple[int, ...]]
    component_records: list[tuple[str, tuple[int, ...] | None, bool]]
    mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.identity_ok and self.multiset_ok and not self.mismatches

    def lines(self) -> list[str]:
        out = [
            f"shape\t{','.join(map(str, self.shape))}\tn\t{self.n}",
            f"identity\t{'PASS' if self.identity_ok else 'FAIL'}",
        ]
        for comp in self.term_compositions:
            out.append(f"term\tF({','.join(map(str, comp))})")
        for hw, alpha, ok in self.component_records:
            shown = ",".join(map(str, alpha)) if alpha is not None else "-"
            out.append(f"component\t{hw}\tF({shown})\t{'PASS' if ok else 'FAIL'}")
        out.append(f"multiset\t{'PASS' if self.multiset_ok else 'FAIL'}")
        out.extend(f"mismatch\t{m}" for m in self.mismatches)
        out.append(f"result\t{'PASS' if self.passed else 'FAIL'}")
        return out


def verify_schur_decomposition(shape, n: int) -> SchurDecompositionReport:
    """Check that the content character equals the sum of fundamental terms
    over standard tableaux, and that the quasified components realize those
    terms one-for-one."""
    parts = check_partition(shape)
    tableaux = enumerate_syt(parts)
    term_comps = sorted(descent_composition(t) for t in tableaux)
    f_terms = [fundamental_qsym(a, n) for a in term_comps]

    lhs = schur(parts, n)
    rhs = IntPolynomial.zero(n)
    for poly in f_terms:
        rhs = rhs + poly
    identity_ok = lhs == rhs

    q = quasify(crystal_of_content(parts, n))
    comps = components(q)
    mismatches: list[str] = []
    records: list[tuple[str, tuple[int, ...] | None, bool]] = []
    comp_chars: list[IntPolynomial] = []
    for comp in comps:
        ch = character(comp)
        comp_chars.append(ch)
        hw = comp.hw_vertices[0] if len(comp.hw_vertices) == 1 else comp.min_vertex
        if len(comp.hw_vertices) != 1:
            mismatches.append(f"component {comp.min_vertex} has {len(comp.hw_vertices)} highest weights")
            records.append((hw, None, False))
            continue
        wt = q.wt(hw)
        trimmed = list(wt)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        if not trimmed or any(c <= 0 for c in trimmed):
            mismatches.append(f"highest weight {wt} of {hw} is not a composition")
            records.append((hw, None, False))
            continue
        alpha = tuple(trimmed)
        ok = fundamental_qsym(alpha, n) == ch
        if not ok:
            mismatches.append(f"component {hw}: character differs from F({alpha})")
        records.append((hw, alpha, ok))

    multiset_ok = Counter(p for p in f_terms) == Counter(comp_chars)

    return SchurDecompositionReport(
        shape=parts,
        n=n,
        identity_ok=identity_ok,
        multiset_ok=multiset_ok,
        term_compositions=term_comps,
        component_records=records,
        mismatches=mismatches,
    )
