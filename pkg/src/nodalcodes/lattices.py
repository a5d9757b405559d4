"""Positive definite integral lattices built from binary codes.

A lattice of rank n is stored by its *doubled* Gram matrix, the integer
matrix of 2<x_i, x_j> on a basis.  Doubling keeps half-integral forms exact:
the lattice obtained from a doubly even code by rescaling the preimage
p^{-1}(V) of V under reduction mod 2 by 1/sqrt(2) has half-integral basis
products, but its doubled Gram matrix is integral.

Root vectors (norm 2) are enumerated completely with a rational
Cholesky-style completion of the form, so results are exact and
deterministic; no floating point is used anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Sequence, Tuple

from .gf2 import BinaryCode, is_doubly_even, is_even

MAX_ROOT_RANK = 16

SCALINGS = ("unscaled", "half")

__all__ = [
    "MAX_ROOT_RANK",
    "SCALINGS",
    "GramLattice",
    "RootSystemReport",
    "construction_a",
    "roots",
    "identify_root_system",
    "discriminant",
    "lattice_to_json",
    "lattice_from_json",
]


@dataclass(frozen=True)
class GramLattice:
    """A lattice given by the doubled Gram matrix of a basis.

    ``scaling`` records which Construction-A convention produced it:
    "unscaled" for the plain preimage of a code, "half" for the preimage
    rescaled by 1/sqrt(2).  Lattices built directly from a Gram matrix may
    use either tag.
    """

    rank: int
    doubled_gram: Tuple[Tuple[int, ...], ...]
    scaling: str

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be positive: {self.rank}")
        if self.scaling not in SCALINGS:
            raise ValueError(f"unknown scaling tag: {self.scaling!r}")
        g = self.doubled_gram
        if len(g) != self.rank or any(len(row) != self.rank for row in g):
            raise ValueError("doubled_gram must be a rank x rank matrix")
        for i in range(self.rank):
            if g[i][i] <= 0:
                raise ValueError("basis vectors must have positive norm")
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("doubled_gram must be symmetric")

    def inner(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """True inner product <x, y> of two coordinate vectors."""
        total = 0
        for i, xi in enumerate(x):
            if xi:
                row = self.doubled_gram[i]
                total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
        return Fraction(total, 2)


def _gram_from_basis(basis: List[List[int]], doubled: bool) -> Tuple[Tuple[int, ...], ...]:
    n = len(basis)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            dot = sum(a * b for a, b in zip(basis[i], basis[j]))
            row.append(2 * dot if doubled else dot)
        out.append(tuple(row))
    return tuple(out)


def construction_a(code: BinaryCode, scaling: str) -> GramLattice:
    """Lattice of integer vectors reducing mod 2 into the code.

    A basis is the 0/1 lift of the RREF generators together with 2e_i for
    each non-pivot coordinate, so the rank equals the code length.  With
    scaling "half" the lattice is rescaled by 1/sqrt(2), which requires the
    code to be doubly even (otherwise the result is not even integral);
    "unscaled" requires all weights even so that roots are meaningful.
    """
    if scaling not in SCALINGS:
        raise ValueError(f"unknown scaling tag: {scaling!r}")
    k = code.length
    if k < 1:
        raise ValueError("code must have positive length")
    if scaling == "half" and not is_doubly_even(code):
        raise ValueError("scaling 'half' needs a doubly even code")
    if scaling == "unscaled" and not is_even(code):
        raise ValueError("scaling 'unscaled' needs an even-weight code")

    pivots = {(g & -g).bit_length() - 1 for g in code.generators}
    basis: List[List[int]] = []
    for g in code.generators:
        basis.append([(g >> c) & 1 for c in range(k)])
    for c in range(k):
        if c not in pivots:
            basis.append([2 if i == c else 0 for i in range(k)])
    # doubled gram: 2<.,.> with <.,.> the dot product, halved once for "half"
    return GramLattice(k, _gram_from_basis(basis, doubled=(scaling == "unscaled")), scaling)


# ---------------------------------------------------------------------------
# Exact root enumeration.
# ---------------------------------------------------------------------------


def _decompose(gram: List[List[Fraction]]) -> List[List[Fraction]]:
    """Write the form as sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2.

    Raises if the form is not positive definite.
    """
    n = len(gram)
    q = [row[:] for row in gram]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("form is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for l in range(i + 1, n):
            for m in range(l, n):
                q[l][m] = q[l][m] - q[l][i] * q[i][m]
    return q


def _reduce_basis(
    g2: Tuple[Tuple[int, ...], ...],
) -> Tuple[List[List[int]], List[List[int]]]:
    """Greedy pairwise size reduction of a doubled Gram matrix.

    Returns (reduced doubled gram, U) with U unimodular and the reduced
    basis equal to U times the old one.  Keeps the enumeration bounds tight
    when the caller's basis is badly skewed.  Exact integer arithmetic; each
    accepted step strictly shrinks the trace, so the sweep terminates.
    """
    n = len(g2)
    g = [list(row) for row in g2]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j or g[j][j] <= 0:
                    continue
                mu = (2 * g[i][j] + g[j][j]) // (2 * g[j][j])
                if mu == 0:
                    continue
                new_ii = g[i][i] - 2 * mu * g[i][j] + mu * mu * g[j][j]
                if new_ii >= g[i][i]:
                    continue
                for t in range(n):
                    u[i][t] -= mu * u[j][t]
                for t in range(n):
                    g[i][t] -= mu * g[j][t]
                for t in range(n):
                    g[t][i] -= mu * g[t][j]
                changed = True
    return g, u


def _max_shift(u: Fraction, bound: Fraction) -> int:
    """Largest integer t with (t + u)^2 <= bound (bound >= 0)."""
    # integer floor of sqrt(bound) as a first guess, then exact adjustment
    s = isqrt(bound.numerator * bound.denominator) // bound.denominator
    t = s - (-(-u.numerator // u.denominator))  # s - ceil(u)
    while (t + 1 + u) * (t + 1 + u) <= bound:
        t += 1
    while (t + u) * (t + u) > bound:
        t -= 1
    return t


def roots(lat: GramLattice) -> List[Tuple[int, ...]]:
    """All lattice vectors of norm 2, as sorted coordinate tuples.

    Complete by construction: the decomposition bounds each coordinate in
    turn, innermost first, so every vector with Q(x) = 2 is visited.
    """
    n = lat.rank
    if n > MAX_ROOT_RANK:
        raise ValueError(f"rank {n} exceeds root-search limit {MAX_ROOT_RANK}")
    reduced, u = _reduce_basis(lat.doubled_gram)
    gram = [[Fraction(reduced[i][j], 2) for j in range(n)] for i in range(n)]
    q = _decompose(gram)
    target = Fraction(2)
    found: List[Tuple[int, ...]] = []
    x = [0] * n

    def sweep(i: int, budget: Fraction) -> None:
        u = Fraction(0)
        for j in range(i + 1, n):
            if x[j]:
                u += q[i][j] * x[j]
        if budget < 0:
            return
        hi = _max_shift(u, budget / q[i][i])
        lo = -_max_shift(-u, budget / q[i][i])
        for t in range(lo, hi + 1):
            x[i] = t
            spent = q[i][i] * (t + u) * (t + u)
            if i == 0:
                if spent == budget:
                    found.append(tuple(x))
            else:
                sweep(i - 1, budget - spent)
        x[i] = 0

    sweep(n - 1, target)
    # convert from the reduced basis back to the caller's basis
    out = []
    for y in found:
        if not any(y):
            continue
        v = tuple(
            sum(y[i] * u[i][j] for i in range(n)) for j in range(n)
        )
        out.append(v)
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Root system identification.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootSystemReport:
    root_count: int
    components: Tuple[str, ...]
    full_rank: bool

    def as_dict(self) -> Dict[str, object]:
        return {
            "root_count": self.root_count,
            "components": list(self.components),
            "full_rank": self.full_rank,
        }


_COMPONENT_ROOTS = {
    "A": lambda n: n * (n + 1),
    "D": lambda n: 2 * n * (n - 1),
    "E": {6: 72, 7: 126, 8: 240},
}


def _component_label(vertices: List[int], adj: Dict[int, List[int]]) -> str:
    n = len(vertices)
    degs = {v: len(adj[v]) for v in vertices}
    if any(d > 3 for d in degs.values()):
        raise ValueError("root graph is not of ADE type (degree > 3)")
    edges = sum(degs.values()) // 2
    if edges != n - 1:
        raise ValueError("root graph is not of ADE type (contains a cycle)")
    branch = [v for v in vertices if degs[v] == 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1:
        raise ValueError("root graph is not of ADE type (two branch nodes)")
    b = branch[0]
    arms = []
    for start in adj[b]:
        ln, prev, cur = 1, b, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        arms.append(ln)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    if arms == [1, 2, 2]:
        return "E6"
    if arms == [1, 2, 3]:
        return "E7"
    if arms == [1, 2, 4]:
        return "E8"
    raise ValueError(f"root graph is not of ADE type (arms {arms})")


def identify_root_system(lat: GramLattice) -> RootSystemReport:
    """Match the norm-2 vectors to a sum of ADE root systems.

    Simple roots are taken to be the positive roots (lexicographically
    positive coordinate vector) that are not sums of two positive roots.
    Raises if the configuration is not simply laced.
    """
    all_roots = roots(lat)
    positive = [v for v in all_roots if v > tuple([0] * lat.rank)]
    pos_set = set(positive)
    simple = []
    for v in positive:
        if not any(
            tuple(a - b for a, b in zip(v, w)) in pos_set for w in positive
        ):
            simple.append(v)

    m = len(simple)
    adj: Dict[int, List[int]] = {i: [] for i in range(m)}
    for i in range(m):
        for j in range(i + 1, m):
            p = lat.inner(simple[i], simple[j])
            if p == 0:
                continue
            if p == -1:
                adj[i].append(j)
                adj[j].append(i)
            else:
                raise ValueError(
                    f"simple roots meet with product {p}; not simply laced"
                )

    unseen = set(range(m))
    labels: List[str] = []
    accounted = 0
    while unseen:
        v0 = min(unseen)
        comp = [v0]
        unseen.discard(v0)
        queue = [v0]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w in unseen:
                    unseen.discard(w)
                    comp.append(w)
                    queue.append(w)
        label = _component_label(comp, adj)
        labels.append(label)
        family, size = label[0], int(label[1:])
        if family == "E":
            accounted += _COMPONENT_ROOTS["E"][size]
        else:
            accounted += _COMPONENT_ROOTS[family](size)
    if accounted != len(all_roots):
        raise ValueError(
            f"{len(all_roots)} roots but components account for {accounted}"
        )
    return RootSystemReport(
        root_count=len(all_roots),
        components=tuple(sorted(labels)),
        full_rank=(m == lat.rank),
    )


# ---------------------------------------------------------------------------
# Discriminant.
# ---------------------------------------------------------------------------


def _int_det(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    a = [list(row) for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for j in range(i + 1, n):
                if a[j][i] != 0:
                    a[i], a[j] = a[j], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                a[j][k] = (a[j][k] * a[i][i] - a[j][i] * a[i][k]) // prev
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def discriminant(lat: GramLattice) -> Fraction:
    """Determinant of the true Gram matrix, as an exact rational."""
    return Fraction(_int_det(lat.doubled_gram), 2 ** lat.rank)


# ---------------------------------------------------------------------------
# JSON serialization: {"rank": n, "doubled_gram": [[...]], "scaling": tag}.
# ---------------------------------------------------------------------------


def lattice_to_json(lat: GramLattice) -> str:
    payload = {
        "rank": lat.rank,
        "doubled_gram": [list(row) for row in lat.doubled_gram],
        "scaling": lat.scaling,
    }
    return json.dumps(payload, sort_keys=True)


def lattice_from_json(text: str) -> GramLattice:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"not valid JSON: {e}") from None
    try:
        rank = payload["rank"]
        gram = tuple(tuple(int(v) for v in row) for row in payload["doubled_gram"])
        scaling = payload["scaling"]
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed lattice object: {e}") from None
    return GramLattice(rank, gram, scaling)
