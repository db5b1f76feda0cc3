"""Quasi-crystal graph container, coherence checks, and file formats.

A graph holds, per vertex: a weight vector of length n, raising/lowering string
lengths (eps/phi, values in Z extended by +-inf) per index 1..n-1, and partial
raising/lowering maps (e/f) per index. Loops are a derived notion (both string
lengths +inf at an index), never stored as edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .weightlattice import Weight, add, pairing, simple_root

FORMAT_NAME = "qck-graph"
FORMAT_VERSION = 1


class ExtIntArithmeticError(ArithmeticError):
    """Raised for (+inf) + (-inf) and friends; validation reports it, never guesses."""


class Infinity:
    """Signed infinity that mixes with ints in comparisons and sums."""

    __slots__ = ("positive",)

    def __init__(self, positive: bool):
        self.positive = positive

    def __repr__(self):
        return "+inf" if self.positive else "-inf"

    def __eq__(self, other):
        return isinstance(other, Infinity) and other.positive == self.positive

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(("qck.Infinity", self.positive))

    def __lt__(self, other):
        if isinstance(other, Infinity):
            return not self.positive and other.positive
        if isinstance(other, int):
            return not self.positive
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, (Infinity, int)):
            return self == other or self.__lt__(other)
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, Infinity):
            return self.positive and not other.positive
        if isinstance(other, int):
            return self.positive
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (Infinity, int)):
            return self == other or self.__gt__(other)
        return NotImplemented

    def __neg__(self):
        return NEG_INF if self.positive else POS_INF

    def __add__(self, other):
        if isinstance(other, int):
            return self
        if isinstance(other, Infinity):
            if other.positive != self.positive:
                raise ExtIntArithmeticError("(+inf) + (-inf) is undefined")
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        if isinstance(other, Infinity):
            if other.positive == self.positive:
                raise ExtIntArithmeticError("inf - inf of equal sign is undefined")
            return self
        return NotImplemented

    def __rsub__(self, other):
        # other - self with other an int
        if isinstance(other, int):
            return -self
        return NotImplemented

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


POS_INF = Infinity(True)
NEG_INF = Infinity(False)

# An extended integer is a plain int or one of the two Infinity values.
ExtInt = int | Infinity


def is_finite(v) -> bool:
    return isinstance(v, int)


def ext_str(v) -> str:
    if isinstance(v, Infinity):
        return repr(v)
    return str(v)


class GraphFormatError(ValueError):
    """Malformed interchange text/JSON."""


def parse_ext(tok: str):
    if tok == "+inf":
        return POS_INF
    if tok == "-inf":
        return NEG_INF
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"not an extended integer: {tok!r}") from None


def _check_ext(v):
    if isinstance(v, bool) or not isinstance(v, (int, Infinity)):
        raise ValueError(f"expected int or +-inf, got {v!r}")
    return v


@dataclass(frozen=True)
class Witness:
    """One concrete axiom violation, printable as a single tab-separated line."""

    axiom: str
    vertices: tuple[str, ...]
    indices: tuple[int, ...]
    observed: str
    required: str

    def line(self) -> str:
        return "\t".join(
            [
                self.axiom,
                ",".join(self.vertices),
                ",".join(str(i) for i in self.indices),
                self.observed,
                self.required,
            ]
        )

    def sort_key(self):
        return (self.axiom, self.vertices, self.indices, self.observed, self.required)


@dataclass
class AxiomReport:
    """Result of one checker: its name and every witness found, sorted."""

    name: str
    witnesses: list[Witness] = field(default_factory=list)

    def __post_init__(self):
        self.witnesses = sorted(self.witnesses, key=Witness.sort_key)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def __bool__(self) -> bool:
        return self.passed

    def lines(self) -> list[str]:
        return [w.line() for w in self.witnesses]


def merge_reports(name: str, reports) -> "AxiomReport":
    ws: list[Witness] = []
    for r in reports:
        ws.extend(r.witnesses)
    return AxiomReport(name, ws)


class QuasiCrystalGraph:
    """Mutable container for a finite quasi-crystal graph of rank n.

    The container enforces shape (lengths, known targets) but not the
    coherence axioms; those live in validate() so that broken graphs can be
    represented, loaded, and reported on.
    """

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise ValueError("n must be a positive integer")
        self.n = n
        self._wt: dict[str, Weight] = {}
        self._eps: dict[str, list] = {}
        self._phi: dict[str, list] = {}
        self._e: dict[str, list] = {}
        self._f: dict[str, list] = {}

    @property
    def index_set(self) -> range:
        return range(1, self.n)

    def __len__(self) -> int:
        return len(self._wt)

    def __contains__(self, vid) -> bool:
        return vid in self._wt

    def vertex_ids(self) -> list[str]:
        return sorted(self._wt)

    def add_vertex(self, vid: str, wt, eps, phi) -> None:
        if not isinstance(vid, str) or not vid or any(c.isspace() for c in vid):
            raise ValueError(f"vertex id must be a non-empty string without spaces: {vid!r}")
        if vid in self._wt:
            raise ValueError(f"duplicate vertex id {vid!r}")
        wt = tuple(wt)
        if len(wt) != self.n or any(isinstance(c, bool) or not isinstance(c, int) for c in wt):
            raise ValueError(f"weight of {vid!r} must be {self.n} ints, got {wt!r}")
        eps = [_check_ext(v) for v in eps]
        phi = [_check_ext(v) for v in phi]
        if len(eps) != self.n - 1 or len(phi) != self.n - 1:
            raise ValueError(f"{vid!r}: need {self.n - 1} eps and phi entries")
        self._wt[vid] = wt
        self._eps[vid] = eps
        self._phi[vid] = phi
        self._e[vid] = [None] * (self.n - 1)
        self._f[vid] = [None] * (self.n - 1)

    def _slot(self, i: int) -> int:
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"operator index {i} out of range 1..{self.n - 1}")
        return i - 1

    def _known(self, vid: str) -> str:
        if vid not in self._wt:
            raise KeyError(f"unknown vertex {vid!r}")
        return vid

    # -- accessors ---------------------------------------------------------

    def wt(self, x: str) -> Weight:
        return self._wt[self._known(x)]

    def eps(self, x: str, i: int):
        return self._eps[self._known(x)][self._slot(i)]

    def phi(self, x: str, i: int):
        return self._phi[self._known(x)][self._slot(i)]

    def e(self, x: str, i: int):
        return self._e[self._known(x)][self._slot(i)]

    def f(self, x: str, i: int):
        return self._f[self._known(x)][self._slot(i)]

    def is_loop(self, x: str, i: int) -> bool:
        """Derived: an index where both string lengths are +inf."""
        return self.eps(x, i) == POS_INF and self.phi(x, i) == POS_INF

    def edges(self) -> list[tuple[str, int, str]]:
        """All lowering edges (x, i, f_i(x)), sorted."""
        out = []
        for x in self.vertex_ids():
            for i in self.index_set:
                y = self._f[x][i - 1]
                if y is not None:
                    out.append((x, i, y))
        return out

    def raising_edges(self) -> list[tuple[str, int, str]]:
        """All raising edges (x, i, e_i(x)), sorted; the e-table's own view."""
        out = []
        for x in self.vertex_ids():
            for i in self.index_set:
                y = self._e[x][i - 1]
                if y is not None:
                    out.append((x, i, y))
        return out

    # -- low-level mutation (used by constructors and the fuzz harness) ----

    def set_raising(self, x: str, i: int, y) -> None:
        if y is not None:
            self._known(y)
        self._e[self._known(x)][self._slot(i)] = y

    def set_lowering(self, x: str, i: int, y) -> None:
        if y is not None:
            self._known(y)
        self._f[self._known(x)][self._slot(i)] = y

    def set_epsilon(self, x: str, i: int, v) -> None:
        self._eps[self._known(x)][self._slot(i)] = _check_ext(v)

    def set_phi(self, x: str, i: int, v) -> None:
        self._phi[self._known(x)][self._slot(i)] = _check_ext(v)

    def set_weight(self, x: str, wt) -> None:
        wt = tuple(wt)
        if len(wt) != self.n or any(isinstance(c, bool) or not isinstance(c, int) for c in wt):
            raise ValueError(f"weight must be {self.n} ints")
        self._wt[self._known(x)] = wt

    def add_edge(self, x: str, i: int, y: str) -> None:
        """Record f_i(x) = y together with its inverse e_i(y) = x."""
        s = self._slot(i)
        self._known(x)
        self._known(y)
        if self._f[x][s] is not None:
            raise ValueError(f"f_{i}({x!r}) already set")
        if self._e[y][s] is not None:
            raise ValueError(f"e_{i}({y!r}) already set")
        self._f[x][s] = y
        self._e[y][s] = x

    def copy(self) -> "QuasiCrystalGraph":
        g = QuasiCrystalGraph(self.n)
        g._wt = dict(self._wt)
        g._eps = {v: list(row) for v, row in self._eps.items()}
        g._phi = {v: list(row) for v, row in self._phi.items()}
        g._e = {v: list(row) for v, row in self._e.items()}
        g._f = {v: list(row) for v, row in self._f.items()}
        return g

    def __eq__(self, other):
        if not isinstance(other, QuasiCrystalGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self._wt == other._wt
            and self._eps == other._eps
            and self._phi == other._phi
            and self._e == other._e
            and self._f == other._f
        )

    def __repr__(self):
        return f"QuasiCrystalGraph(n={self.n}, vertices={len(self)})"


# -- coherence ---------------------------------------------------------------


def validate(g: QuasiCrystalGraph) -> AxiomReport:
    """Check the defining coherence conditions of a quasi-crystal graph.

    Covers: e/f mutually inverse with the weight/string-length bookkeeping
    across each edge; phi = eps + <wt, alpha_i> everywhere; indices with an
    infinite string length carry no edge. Structural problems (dangling
    targets, undefined extended arithmetic) are reported rather than raised.
    """
    ws: list[Witness] = []
    ids = set(g.vertex_ids())
    for x in g.vertex_ids():
        for i in g.index_set:
            eps, phi = g.eps(x, i), g.phi(x, i)
            ex, fx = g.e(x, i), g.f(x, i)
            for tag, target in (("e", ex), ("f", fx)):
                if target is not None and target not in ids:
                    ws.append(
                        Witness("structural", (x,), (i,), f"{tag}->{target}", "target must be a vertex")
                    )
            # phi = eps + <wt, alpha_i>
            try:
                expected_phi = eps + pairing(g.wt(x), simple_root(i, g.n))
            except ExtIntArithmeticError as exc:
                ws.append(Witness("structural", (x,), (i,), str(exc), "defined extended sum"))
                expected_phi = None
            if expected_phi is not None and phi != expected_phi:
                ws.append(
                    Witness(
                        "Q2",
                        (x,),
                        (i,),
                        f"phi={ext_str(phi)}",
                        f"eps+<wt,alpha>={ext_str(expected_phi)}",
                    )
                )
            # infinite string lengths forbid edges
            if eps == NEG_INF or phi == NEG_INF:
                if ex is not None or fx is not None:
                    ws.append(
                        Witness("Q3", (x,), (i,), "edge at -inf index", "no e/f where a length is -inf")
                    )
            if eps == POS_INF or phi == POS_INF:
                if ex is not None or fx is not None:
                    ws.append(
                        Witness("Q4", (x,), (i,), "edge at +inf index", "no e/f where a length is +inf")
                    )
            # mutual inverse + bookkeeping along the raising edge
            if ex is not None and ex in ids:
                y = ex
                if g.f(y, i) != x:
                    ws.append(
                        Witness(
                            "Q1",
                            (x, y),
                            (i,),
                            f"f_{i}({y})={g.f(y, i)}",
                            f"inverse of e_{i}({x})={y}",
                        )
                    )
                if g.wt(y) != add(g.wt(x), simple_root(i, g.n)):
                    ws.append(
                        Witness(
                            "Q1",
                            (x, y),
                            (i,),
                            f"wt({y})={g.wt(y)}",
                            f"wt({x})+alpha_{i}",
                        )
                    )
                if g.eps(y, i) != eps - 1:
                    ws.append(
                        Witness(
                            "Q1",
                            (x, y),
                            (i,),
                            f"eps_{i}({y})={ext_str(g.eps(y, i))}",
                            f"eps_{i}({x})-1={ext_str(eps - 1)}",
                        )
                    )
                if g.phi(y, i) != phi + 1:
                    ws.append(
                        Witness(
                            "Q1",
                            (x, y),
                            (i,),
                            f"phi_{i}({y})={ext_str(g.phi(y, i))}",
                            f"phi_{i}({x})+1={ext_str(phi + 1)}",
                        )
                    )
            if fx is not None and fx in ids and g.e(fx, i) != x:
                ws.append(
                    Witness(
                        "Q1",
                        (x, fx),
                        (i,),
                        f"e_{i}({fx})={g.e(fx, i)}",
                        f"inverse of f_{i}({x})={fx}",
                    )
                )
    return AxiomReport("validate", ws)


def _chain_length(g: QuasiCrystalGraph, x: str, i: int, step) -> tuple[int, bool]:
    """Length of the strict operator chain from x; flags chains exceeding |V|."""
    k = 0
    z = x
    limit = len(g)
    while True:
        nxt = step(z, i)
        if nxt is None:
            return k, False
        k += 1
        if k > limit:
            return k, True
        z = nxt


def is_seminormal(g: QuasiCrystalGraph) -> AxiomReport:
    """Finite string lengths must equal actual operator chain lengths."""
    ws: list[Witness] = []
    for x in g.vertex_ids():
        for i in g.index_set:
            for field_name, length, step in (
                ("eps", g.eps(x, i), g.e),
                ("phi", g.phi(x, i), g.f),
            ):
                if length == POS_INF:
                    continue
                k, cyclic = _chain_length(g, x, i, step)
                if cyclic:
                    ws.append(
                        Witness(
                            "seminormal",
                            (x,),
                            (i,),
                            f"{field_name} chain exceeds {len(g)} vertices",
                            "finite acyclic chain",
                        )
                    )
                elif length != k:
                    ws.append(
                        Witness(
                            "seminormal",
                            (x,),
                            (i,),
                            f"{field_name}={ext_str(length)}",
                            f"chain length {k}",
                        )
                    )
    return AxiomReport("seminormal", ws)


def is_crystal(g: QuasiCrystalGraph) -> bool:
    """True when no string length is +inf (hence no loops anywhere)."""
    return all(
        g.eps(x, i) != POS_INF and g.phi(x, i) != POS_INF
        for x in g.vertex_ids()
        for i in g.index_set
    )


def highest_weight_vertices(g: QuasiCrystalGraph) -> list[str]:
    """Vertices with no raising edge at any index (loops do not count)."""
    return [
        x for x in g.vertex_ids() if all(g.e(x, i) is None for i in g.index_set)
    ]


# -- interchange formats -------------------------------------------------------


def _csv(values) -> str:
    values = list(values)
    if not values:
        return "-"
    return ",".join(values)


def _parse_csv(tok: str, what: str, where: str):
    if tok == "-":
        return []
    try:
        return [parse_ext(t) for t in tok.split(",")]
    except ValueError as exc:
        raise GraphFormatError(f"{where}: bad {what}: {exc}") from None


def to_text(g: QuasiCrystalGraph) -> str:
    lines = [f"{FORMAT_NAME} v{FORMAT_VERSION}", f"n {g.n}"]
    for x in g.vertex_ids():
        lines.append(
            "vertex {} {} {} {}".format(
                x,
                _csv(str(c) for c in g.wt(x)),
                _csv(ext_str(g.eps(x, i)) for i in g.index_set),
                _csv(ext_str(g.phi(x, i)) for i in g.index_set),
            )
        )
    for x, i, y in g.edges():
        lines.append(f"edge {x} {y} {i}")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> QuasiCrystalGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != FORMAT_NAME:
        raise GraphFormatError(f"bad header {lines[0]!r}; expected '{FORMAT_NAME} v{FORMAT_VERSION}'")
    if head[1] != f"v{FORMAT_VERSION}":
        raise GraphFormatError(f"unsupported format version {head[1]!r}")
    if len(lines) < 2 or not lines[1].startswith("n "):
        raise GraphFormatError("missing 'n <rank>' line")
    try:
        n = int(lines[1].split()[1])
    except (IndexError, ValueError):
        raise GraphFormatError(f"bad rank line {lines[1]!r}") from None
    g = QuasiCrystalGraph(n)
    edges = []
    for ln in lines[2:]:
        parts = ln.split()
        if parts[0] == "vertex":
            if len(parts) != 5:
                raise GraphFormatError(f"bad vertex line {ln!r}")
            _, vid, wt_tok, eps_tok, phi_tok = parts
            wt = _parse_csv(wt_tok, "weight", vid)
            if any(not isinstance(c, int) for c in wt):
                raise GraphFormatError(f"{vid}: weight entries must be finite ints")
            eps = _parse_csv(eps_tok, "eps", vid)
            phi = _parse_csv(phi_tok, "phi", vid)
            try:
                g.add_vertex(vid, wt, eps, phi)
            except ValueError as exc:
                raise GraphFormatError(str(exc)) from None
        elif parts[0] == "edge":
            if len(parts) != 4:
                raise GraphFormatError(f"bad edge line {ln!r}")
            edges.append(parts[1:])
        else:
            raise GraphFormatError(f"unknown record {parts[0]!r}")
    for src, dst, label in edges:
        try:
            i = int(label)
        except ValueError:
            raise GraphFormatError(f"bad edge label {label!r}") from None
        if src not in g or dst not in g:
            raise GraphFormatError(f"edge references unknown vertex: {src} -> {dst}")
        try:
            g.add_edge(src, i, dst)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None
    return g


def _ext_json(v):
    return repr(v) if isinstance(v, Infinity) else v


def _ext_from_json(v, where: str):
    if isinstance(v, bool):
        raise GraphFormatError(f"{where}: expected int or '+inf'/'-inf', got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return parse_ext(v)
        except ValueError as exc:
            raise GraphFormatError(f"{where}: {exc}") from None
    raise GraphFormatError(f"{where}: expected int or '+inf'/'-inf', got {v!r}")


def to_json(g: QuasiCrystalGraph) -> str:
    doc = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "n": g.n,
        "vertices": [
            {
                "id": x,
                "wt": list(g.wt(x)),
                "eps": [_ext_json(g.eps(x, i)) for i in g.index_set],
                "phi": [_ext_json(g.phi(x, i)) for i in g.index_set],
            }
            for x in g.vertex_ids()
        ],
        "edges": [
            {"from": x, "to": y, "label": i} for x, i, y in g.edges()
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def from_json(text: str) -> QuasiCrystalGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_NAME:
        raise GraphFormatError(f"not a {FORMAT_NAME} document")
    if doc.get("version") != FORMAT_VERSION:
        raise GraphFormatError(f"unsupported format version {doc.get('version')!r}")
    if not isinstance(doc.get("n"), int):
        raise GraphFormatError("missing integer field 'n'")
    g = QuasiCrystalGraph(doc["n"])
    for rec in doc.get("vertices", []):
        try:
            vid = rec["id"]
            wt = rec["wt"]
            eps = [_ext_from_json(v, vid) for v in rec["eps"]]
            phi = [_ext_from_json(v, vid) for v in rec["phi"]]
        except (KeyError, TypeError) as exc:
            raise GraphFormatError(f"bad vertex record {rec!r}: {exc}") from None
        if not isinstance(wt, list) or any(isinstance(c, bool) or not isinstance(c, int) for c in wt):
            raise GraphFormatError(f"{vid}: weight entries must be finite ints")
        try:
            g.add_vertex(vid, wt, eps, phi)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None
    for rec in doc.get("edges", []):
        try:
            src, dst, label = rec["from"], rec["to"], rec["label"]
        except (KeyError, TypeError) as exc:
            raise GraphFormatError(f"bad edge record {rec!r}: {exc}") from None
        if src not in g or dst not in g:
            raise GraphFormatError(f"edge references unknown vertex: {src} -> {dst}")
        if isinstance(label, bool) or not isinstance(label, int):
            raise GraphFormatError(f"bad edge label {label!r}")
        try:
            g.add_edge(src, label, dst)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None
    return g


_DOT_PALETTE = [
    "#e41a1c",
    "#377eb8",
    "#4daf4a",
    "#984ea3",
    "#ff7f00",
    "#a65628",
    "#f781bf",
    "#999999",
]


def to_dot(g: QuasiCrystalGraph) -> str:
    """Graphviz digraph: lowering edges labelled/coloured by index, loops as
    dashed self-edges, vertex labels carrying the weight."""
    out = ["digraph quasicrystal {", "  rankdir=TB;"]
    for x in g.vertex_ids():
        wt = ",".join(str(c) for c in g.wt(x))
        out.append(f'  "{x}" [label="{x}\\n({wt})"];')
    for x, i, y in g.edges():
        color = _DOT_PALETTE[(i - 1) % len(_DOT_PALETTE)]
        out.append(f'  "{x}" -> "{y}" [label="{i}", color="{color}"];')
    for x in g.vertex_ids():
        for i in g.index_set:
            if g.is_loop(x, i):
                color = _DOT_PALETTE[(i - 1) % len(_DOT_PALETTE)]
                out.append(
                    f'  "{x}" -> "{x}" [label="{i}", color="{color}", style=dashed];'
                )
    out.append("}")
    return "\n".join(out) + "\n"


def loads(text: str) -> QuasiCrystalGraph:
    """Parse either interchange format, sniffing JSON by the leading brace."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json(text)
    return from_text(text)


def read_graph(path: str) -> QuasiCrystalGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def write_graph(g: QuasiCrystalGraph, path: str, fmt: str = "text") -> None:
    if fmt == "text":
        payload = to_text(g)
    elif fmt == "json":
        payload = to_json(g)
    elif fmt == "dot":
        payload = to_dot(g)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(payload)
