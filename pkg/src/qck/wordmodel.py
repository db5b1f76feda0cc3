"""Standard rank-n crystal, tensor and quasi-tensor products, and their powers.

Vertices of products are identified with words over {1..n}: the pair (x, y)
with x on the left carries the word of y followed by the word of x, so the
left-iterated k-th power has the length-k words as vertex ids (digit strings
for n <= 9, dash-separated otherwise).
"""

from __future__ import annotations

import os

from .graphcore import POS_INF, QuasiCrystalGraph, is_crystal
from .weightlattice import Weight, pairing, simple_root

Word = tuple[int, ...]

DEFAULT_SIZE_CAP = 10**6
SIZE_CAP_ENV = "QCK_SIZE_CAP"


class SizeCapExceeded(ValueError):
    """A requested power would have more vertices than the cap allows."""


def default_size_cap() -> int:
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{SIZE_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{SIZE_CAP_ENV} must be positive")
    return cap


def word_to_id(word: Word, n: int) -> str:
    if any(not 1 <= a <= n for a in word):
        raise ValueError(f"word letters must lie in 1..{n}: {word}")
    if n <= 9:
        return "".join(str(a) for a in word)
    return "-".join(str(a) for a in word)


def id_to_word(vid: str, n: int) -> Word:
    if n <= 9:
        letters = tuple(int(c) for c in vid)
    else:
        letters = tuple(int(c) for c in vid.split("-"))
    if any(not 1 <= a <= n for a in letters):
        raise ValueError(f"id {vid!r} is not a word over 1..{n}")
    return letters


def word_content(word: Word, n: int) -> Weight:
    wt = [0] * n
    for a in word:
        wt[a - 1] += 1
    return tuple(wt)


def _join_ids(left_id: str, right_id: str, n: int) -> str:
    # the pair (left, right) reads as the word "right then left"
    if n <= 9:
        return right_id + left_id
    return f"{right_id}-{left_id}"


def standard_crystal(n: int) -> QuasiCrystalGraph:
    """The n-vertex chain: wt(j) = e_j, lowering edges j -> j+1 labelled j."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    g = QuasiCrystalGraph(n)
    for j in range(1, n + 1):
        wt = [0] * n
        wt[j - 1] = 1
        eps = [1 if i + 1 == j else 0 for i in range(1, n)]
        phi = [1 if i == j else 0 for i in range(1, n)]
        g.add_vertex(word_to_id((j,), n), wt, eps, phi)
    for j in range(1, n):
        g.add_edge(word_to_id((j,), n), j, word_to_id((j + 1,), n))
    return g


def _product(a: QuasiCrystalGraph, b: QuasiCrystalGraph, blocking: bool) -> QuasiCrystalGraph:
    """Shared product core; blocking=True gives the quasi version.

    Per index i on a pair (x, x'):
      - with blocking, phi_i(x) > 0 and eps_i(x') > 0 freezes the index: both
        string lengths become +inf and no edge exists there;
      - otherwise eps = max(eps_i(x), eps_i(x') - <wt(x), alpha_i>),
        phi = max(phi_i(x) + <wt(x'), alpha_i>, phi_i(x')),
        e acts on the left iff phi_i(x) >= eps_i(x'), f on the left iff
        phi_i(x) > eps_i(x').
    Raising/lowering tables are built independently from those rules; their
    mutual inverseness is a checked property, not an assumption.
    """
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    n = a.n
    g = QuasiCrystalGraph(n)
    roots = {i: simple_root(i, n) for i in range(1, n)}

    pairs = [(xa, xb) for xa in a.vertex_ids() for xb in b.vertex_ids()]
    ids = {(xa, xb): _join_ids(xa, xb, n) for xa, xb in pairs}

    actions: dict[tuple[str, str], list] = {}
    for xa, xb in pairs:
        wt_a, wt_b = a.wt(xa), b.wt(xb)
        eps_row, phi_row, acts = [], [], []
        for i in range(1, n):
            phi_a, eps_b = a.phi(xa, i), b.eps(xb, i)
            if blocking and phi_a > 0 and eps_b > 0:
                eps_row.append(POS_INF)
                phi_row.append(POS_INF)
                acts.append((None, None))
                continue
            eps_row.append(max(a.eps(xa, i), eps_b - pairing(wt_a, roots[i])))
            phi_row.append(max(phi_a + pairing(wt_b, roots[i]), b.phi(xb, i)))
            if phi_a >= eps_b:
                ea = a.e(xa, i)
                e_target = (ea, xb) if ea is not None else None
            else:
                eb = b.e(xb, i)
                e_target = (xa, eb) if eb is not None else None
            if phi_a > eps_b:
                fa = a.f(xa, i)
                f_target = (fa, xb) if fa is not None else None
            else:
                fb = b.f(xb, i)
                f_target = (xa, fb) if fb is not None else None
            acts.append((e_target, f_target))
        g.add_vertex(
            ids[(xa, xb)],
            tuple(p + q for p, q in zip(wt_a, wt_b)),
            eps_row,
            phi_row,
        )
        actions[(xa, xb)] = acts

    for pair, acts in actions.items():
        for slot, (e_target, f_target) in enumerate(acts):
            i = slot + 1
            if e_target is not None:
                g.set_raising(ids[pair], i, ids[e_target])
            if f_target is not None:
                g.set_lowering(ids[pair], i, ids[f_target])
    return g


def tensor(a: QuasiCrystalGraph, b: QuasiCrystalGraph) -> QuasiCrystalGraph:
    """Classical tensor product; both operands must be crystals."""
    if not is_crystal(a) or not is_crystal(b):
        raise ValueError("classical tensor requires crystal operands (no +inf lengths)")
    return _product(a, b, blocking=False)


def quasi_tensor(a: QuasiCrystalGraph, b: QuasiCrystalGraph) -> QuasiCrystalGraph:
    """Quasi-tensor product (the blocking clause may introduce loops)."""
    return _product(a, b, blocking=True)


def _power(n: int, k: int, size_cap, blocking: bool) -> QuasiCrystalGraph:
    if not isinstance(n, int) or n < 2:
        raise ValueError("power constructions need n >= 2")
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    cap = default_size_cap() if size_cap is None else size_cap
    if n**k > cap:
        raise SizeCapExceeded(f"{n}^{k} = {n**k} vertices exceeds the size cap {cap}")
    base = standard_crystal(n)
    g = base
    for _ in range(k - 1):
        g = _product(g, base, blocking=blocking)
    return g


def tensor_power(n: int, k: int, size_cap: int | None = None) -> QuasiCrystalGraph:
    """Left-iterated classical power of the standard crystal."""
    return _power(n, k, size_cap, blocking=False)


def quasi_tensor_power(n: int, k: int, size_cap: int | None = None) -> QuasiCrystalGraph:
    """Left-iterated quasi power; vertex ids are the length-k words."""
    return _power(n, k, size_cap, blocking=True)
