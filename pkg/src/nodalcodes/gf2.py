"""Binary linear codes on up to 32 coordinates, stored as integer bitmasks.

A codeword on ``k`` coordinates is a Python int whose bit ``i`` is the value
at coordinate ``i`` (so coordinate 0 is the *lowest* bit; in the string form
``"0110"`` coordinate 0 is the leftmost character).  A code is held by its
reduced row echelon generator matrix, which is unique per subspace, so two
``BinaryCode`` objects are equal iff they span the same subspace.

The module provides the usual structural toolkit -- weight enumerators,
support reduction, doubled even-weight codes, canonical forms under
coordinate permutation, and isomorph-free exhaustive enumeration of codes
whose nonzero weights are constrained (all equal to 4, or divisible by 4).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

MAX_LENGTH = 32

__all__ = [
    "MAX_LENGTH",
    "BinaryCode",
    "make_code",
    "zero_code",
    "de",
    "simplex",
    "codewords",
    "contains",
    "weight_enumerator",
    "is_even",
    "is_doubly_even",
    "reduce",
    "permute",
    "canonical_form",
    "equivalent",
    "essentially_isomorphic",
    "recognize_de",
    "enumerate_codes",
    "word_from_string",
    "word_to_string",
    "parse_code",
    "format_code",
]


def _lsb(x: int) -> int:
    """Index of the lowest set bit of a nonzero int."""
    return (x & -x).bit_length() - 1


def _rref(rows: Iterable[int]) -> Tuple[int, ...]:
    """Reduced row echelon basis (pivots strictly increasing) of a span."""
    pivots: Dict[int, int] = {}
    for w in rows:
        for p, b in pivots.items():
            if (w >> p) & 1:
                w ^= b
        if w:
            p = _lsb(w)
            for q in list(pivots):
                if (pivots[q] >> p) & 1:
                    pivots[q] ^= w
            pivots[p] = w
    return tuple(pivots[p] for p in sorted(pivots))


@dataclass(frozen=True)
class BinaryCode:
    """A linear code over GF(2), normalised to its RREF generator matrix."""

    length: int
    generators: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.length <= MAX_LENGTH:
            raise ValueError(f"length out of range: {self.length}")
        last_pivot = -1
        pivot_mask = 0
        for g in self.generators:
            if not 0 < g < (1 << self.length):
                raise ValueError(f"generator out of range: {g:#x}")
            p = _lsb(g)
            if p <= last_pivot:
                raise ValueError("generator rows are not in echelon order")
            last_pivot = p
            pivot_mask |= 1 << p
        for g in self.generators:
            if (g & pivot_mask) != (g & -g):
                raise ValueError("generator matrix is not fully reduced")

    @property
    def dim(self) -> int:
        return len(self.generators)


def make_code(generators: Sequence[int | str], length: int) -> BinaryCode:
    """Build a code from generator words (ints or '0101'-style strings).

    The words are row reduced, so the result does not depend on the order or
    redundancy of the input.
    """
    if not 0 <= length <= MAX_LENGTH:
        raise ValueError(f"length out of range: {length}")
    rows = []
    for g in generators:
        if isinstance(g, str):
            g = word_from_string(g, length)
        if not 0 <= g < (1 << length):
            raise ValueError(f"word does not fit in length {length}: {g}")
        rows.append(g)
    return BinaryCode(length, _rref(rows))


def zero_code(length: int) -> BinaryCode:
    return BinaryCode(length, ())


def word_from_string(s: str, length: Optional[int] = None) -> int:
    """Parse '0110...' (coordinate 0 leftmost) into a bitmask int."""
    if length is not None and len(s) != length:
        raise ValueError(f"word {s!r} has length {len(s)}, expected {length}")
    w = 0
    for i, ch in enumerate(s):
        if ch == "1":
            w |= 1 << i
        elif ch != "0":
            raise ValueError(f"invalid character {ch!r} in word {s!r}")
    return w


def word_to_string(w: int, length: int) -> str:
    return "".join("1" if (w >> i) & 1 else "0" for i in range(length))


def de(n: int) -> BinaryCode:
    """Doubled even-weight code: length 2n, dimension n - 1, weights in 4Z.

    Image of the even-weight code of GF(2)^n under the doubling map sending
    coordinate j to the pair (2j, 2j+1).
    """
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    gens = []
    for i in range(n - 1):
        # doubled image of e_i + e_{n-1}, the i-th RREF row of the even code
        gens.append((0b11 << (2 * i)) | (0b11 << (2 * n - 2)))
    return BinaryCode(2 * n, tuple(gens))


def simplex(r: int) -> BinaryCode:
    """Simplex code of dimension r: the 2^r - 1 nonzero columns of GF(2)^r.

    Every nonzero word has weight 2^(r-1); for r = 3 this is the [7,3] code
    with all nonzero weights 4.
    """
    if not 1 <= r <= 5:
        raise ValueError(f"r out of range: {r}")
    gens = []
    for i in range(r):
        g = 0
        for v in range(1, 1 << r):
            if (v >> i) & 1:
                g |= 1 << (v - 1)
        gens.append(g)
    return BinaryCode((1 << r) - 1, tuple(gens))


def codewords(code: BinaryCode) -> List[int]:
    """All 2^dim codewords, in a deterministic order."""
    words = [0]
    for g in code.generators:
        words += [w ^ g for w in words]
    return words


def contains(code: BinaryCode, word: int) -> bool:
    for g in code.generators:
        if (word >> _lsb(g)) & 1:
            word ^= g
    return word == 0


def weight_enumerator(code: BinaryCode) -> Dict[int, int]:
    """Map weight -> number of codewords of that weight."""
    counts: Dict[int, int] = {}
    for w in codewords(code):
        h = w.bit_count()
        counts[h] = counts.get(h, 0) + 1
    return dict(sorted(counts.items()))


def is_even(code: BinaryCode) -> bool:
    return all(g.bit_count() % 2 == 0 for g in code.generators)


def is_doubly_even(code: BinaryCode) -> bool:
    """True iff every codeword weight is divisible by 4.

    It suffices that every generator has weight in 4Z and generators pairwise
    meet in an even number of coordinates (weights then stay in 4Z under
    addition, by induction on wt(a+b) = wt(a) + wt(b) - 2|a&b|).
    """
    gens = code.generators
    if any(g.bit_count() % 4 for g in gens):
        return False
    return all(
        (a & b).bit_count() % 2 == 0 for a, b in combinations(gens, 2)
    )


def reduce(code: BinaryCode) -> Tuple[BinaryCode, Tuple[int, ...]]:
    """Delete coordinates where the code vanishes identically.

    Returns the shortened code and the tuple of surviving coordinates (the
    support), in increasing order.
    """
    mask = 0
    for g in code.generators:
        mask |= g
    support = tuple(c for c in range(code.length) if (mask >> c) & 1)
    gens = []
    for g in code.generators:
        w = 0
        for pos, c in enumerate(support):
            if (g >> c) & 1:
                w |= 1 << pos
        gens.append(w)
    return BinaryCode(len(support), tuple(gens)), support


def permute(code: BinaryCode, images: Sequence[int]) -> BinaryCode:
    """Apply a coordinate permutation; images[i] is where coordinate i goes."""
    if sorted(images) != list(range(code.length)):
        raise ValueError("images is not a permutation of the coordinates")
    rows = []
    for g in code.generators:
        w = 0
        for i in range(code.length):
            if (g >> i) & 1:
                w |= 1 << images[i]
        rows.append(w)
    return make_code(rows, code.length)


# ---------------------------------------------------------------------------
# Canonical form under coordinate permutation.
#
# The canonical representative of the permutation orbit of a code is the one
# whose RREF generator matrix is lexicographically smallest when read column
# by column (within a column, row 0 is the most significant bit).  Reading
# column-major lets the search build the matrix one column at a time: after
# choosing a prefix of columns, the rows created so far are exactly the RREF
# rows of the code projected onto that prefix, so candidate columns can be
# compared and pruned before the permutation is complete.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def canonical_form(code: BinaryCode) -> Tuple[BinaryCode, Tuple[int, ...]]:
    """Canonical representative of the permutation orbit, with a witness.

    Returns ``(canon, images)`` where ``permute(code, images) == canon``.
    Among all permutations realising the canonical matrix, the witness with
    the lexicographically smallest image tuple is returned, so equal codes
    always yield identical witnesses.
    """
    k, r = code.length, code.dim
    if r == 0:
        return code, tuple(range(k))

    gens = code.generators
    # Static fingerprint of each column against the fixed RREF basis; equal
    # fingerprints mean the columns agree on every codeword, so at any search
    # node only the smallest unused column of each class need be tried.
    fp = [tuple((g >> c) & 1 for g in gens) for c in range(k)]

    best_cols: Optional[List[int]] = None
    best_imgs: Optional[Tuple[int, ...]] = None
    generation = 0

    def descend(
        depth: int,
        vals: List[int],
        chosen: List[int],
        used: int,
        rows: List[int],
        kernel: List[int],
        on_path: bool,
    ) -> None:
        nonlocal best_cols, best_imgs, generation
        if depth == k:
            imgs = [0] * k
            for pos, c in enumerate(chosen):
                imgs[c] = pos
            t = tuple(imgs)
            if not on_path:
                best_cols = list(vals)
                best_imgs = t
                generation += 1
            elif best_imgs is None or t < best_imgs:
                best_imgs = t
            return

        seen: Dict[Tuple[int, ...], int] = {}
        for c in range(k):
            if not (used >> c) & 1 and fp[c] not in seen:
                seen[fp[c]] = c
        cands = []
        for c in seen.values():
            hit = 0
            for x in kernel:
                if (x >> c) & 1:
                    hit = x
                    break
            if hit:
                vec = 1 << (r - 1 - len(rows))
            else:
                vec = 0
                for i, w in enumerate(rows):
                    if (w >> c) & 1:
                        vec |= 1 << (r - 1 - i)
            cands.append((vec, c, hit))
        cands.sort(key=lambda t3: (t3[0], t3[1]))

        local_on_path = on_path
        for vec, c, hit in cands:
            if best_cols is not None and local_on_path:
                if vec > best_cols[depth]:
                    break
                tie = vec == best_cols[depth]
            else:
                tie = False
            if hit:
                new_rows = [w ^ hit if (w >> c) & 1 else w for w in rows]
                new_rows.append(hit)
                new_kernel = []
                for x in kernel:
                    if x == hit:
                        continue
                    new_kernel.append(x ^ hit if (x >> c) & 1 else x)
            else:
                new_rows, new_kernel = rows, kernel
            vals.append(vec)
            chosen.append(c)
            g0 = generation
            descend(depth + 1, vals, chosen, used | (1 << c),
                    new_rows, new_kernel, tie)
            vals.pop()
            chosen.pop()
            if generation != g0:
                local_on_path = True

    descend(0, [], [], 0, [], list(gens), False)
    assert best_cols is not None and best_imgs is not None

    canon_gens = []
    for i in range(r):
        g = 0
        for pos, vec in enumerate(best_cols):
            if (vec >> (r - 1 - i)) & 1:
                g |= 1 << pos
        canon_gens.append(g)
    return BinaryCode(k, tuple(canon_gens)), best_imgs


def equivalent(a: BinaryCode, b: BinaryCode) -> Optional[Tuple[int, ...]]:
    """A permutation carrying a onto b, or None if none exists.

    The returned tuple ``images`` satisfies ``permute(a, images) == b``.
    """
    if a.length != b.length:
        return None
    ca, imgs_a = canonical_form(a)
    cb, imgs_b = canonical_form(b)
    if ca != cb:
        return None
    inv_b = [0] * b.length
    for i, p in enumerate(imgs_b):
        inv_b[p] = i
    return tuple(inv_b[imgs_a[i]] for i in range(a.length))


def essentially_isomorphic(a: BinaryCode, b: BinaryCode) -> bool:
    """True iff the codes agree after dropping identically-zero coordinates."""
    return equivalent(reduce(a)[0], reduce(b)[0]) is not None


def recognize_de(code: BinaryCode) -> Optional[int]:
    """The n for which the code, up to zero coordinates and permutation, is
    the doubled even-weight code de(n); None if there is no such n.

    After support reduction the candidate must consist of n coordinate pairs
    with equal generator-matrix columns, have dimension n - 1, and induce the
    full even-weight code on the n pairs.  The zero code matches de(1).
    """
    reduced, _ = reduce(code)
    if reduced.dim == 0:
        return 1
    m, r = reduced.length, reduced.dim
    if m % 2 or r != m // 2 - 1:
        return None
    n = m // 2
    cols: Dict[Tuple[int, ...], List[int]] = {}
    for c in range(m):
        cols.setdefault(tuple((g >> c) & 1 for g in reduced.generators),
                        []).append(c)
    # coordinates pair up only within a class of equal columns, so every
    # class must have even size; a class of size 2s carries s pairs
    if any(len(cs) % 2 for cs in cols.values()):
        return None
    # codewords are constant on pairs, hence are doublings of the induced
    # length-n words; the induced code then has dimension n - 1, and it is
    # the even-weight code iff every induced generator has even weight
    for g in reduced.generators:
        wt = sum(((g >> cs[0]) & 1) * (len(cs) // 2) for cs in cols.values())
        if wt % 2:
            return None
    return n


def _admissible(weights: str):
    if weights == "4":
        return lambda h: h == 4
    if weights == "div4":
        return lambda h: h > 0 and h % 4 == 0
    raise ValueError(f"unknown weight rule: {weights!r} (use '4' or 'div4')")


def enumerate_codes(
    length: int,
    weights: str,
    dim_min: int,
    dim_max: int,
) -> List[BinaryCode]:
    """All codes of the given length with constrained nonzero weights, one
    per permutation class, for each dimension in [dim_min, dim_max].

    ``weights`` is "4" (every nonzero weight exactly 4) or "div4" (every
    nonzero weight divisible by 4).  Codes are returned in canonical form,
    sorted by (dimension, generator matrix).  Practical for length <= 12.
    """
    if not 1 <= length <= MAX_LENGTH:
        raise ValueError(f"length out of range: {length}")
    if not 0 <= dim_min <= dim_max:
        raise ValueError(f"invalid dimension range: [{dim_min}, {dim_max}]")
    ok = _admissible(weights)

    pool = [
        sum(1 << i for i in supp)
        for h in range(4, length + 1, 4)
        if ok(h)
        for supp in combinations(range(length), h)
    ]

    levels: Dict[int, List[BinaryCode]] = {0: [zero_code(length)]}
    current = levels[0]
    for d in range(dim_max):
        found = set()
        for base in current:
            span = codewords(base)
            span_set = set(span)
            for w in pool:
                if w in span_set:
                    continue
                # one representative per coset keeps each new span unique
                if any(w ^ c < w for c in span):
                    continue
                if all(ok((w ^ c).bit_count()) for c in span if c):
                    bigger = BinaryCode(length, _rref(base.generators + (w,)))
                    found.add(canonical_form(bigger)[0])
        if not found:
            break
        current = sorted(found, key=lambda c: c.generators)
        levels[d + 1] = current

    out: List[BinaryCode] = []
    for d in range(dim_min, dim_max + 1):
        out.extend(levels.get(d, []))
    return out


# ---------------------------------------------------------------------------
# Plain-text serialization: first line "length dim", then one generator row
# per line as a 0/1 string with coordinate 0 leftmost.
# ---------------------------------------------------------------------------


def format_code(code: BinaryCode) -> str:
    lines = [f"{code.length} {code.dim}"]
    lines += [word_to_string(g, code.length) for g in code.generators]
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> BinaryCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty code file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"malformed header line: {lines[0]!r}")
    try:
        length, dim = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"malformed header line: {lines[0]!r}") from None
    rows = lines[1:]
    if len(rows) != dim:
        raise ValueError(f"header promises {dim} rows, found {len(rows)}")
    code = make_code(rows, length)
    if code.dim != dim:
        raise ValueError(
            f"rows span dimension {code.dim}, header says {dim}"
        )
    return code
