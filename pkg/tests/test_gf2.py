import random
from itertools import combinations

import pytest

from nodalcodes.gf2 import (
    BinaryCode,
    canonical_form,
    codewords,
    contains,
    de,
    enumerate_codes,
    equivalent,
    essentially_isomorphic,
    format_code,
    is_doubly_even,
    is_even,
    make_code,
    parse_code,
    permute,
    recognize_de,
    reduce,
    simplex,
    weight_enumerator,
    word_from_string,
    word_to_string,
    zero_code,
)


def brute_weights(code):
    # independent path: test every vector of the ambient space for membership
    counts = {}
    for v in range(1 << code.length):
        if contains(code, v):
            h = bin(v).count("1")
            counts[h] = counts.get(h, 0) + 1
    return counts


def brute_exists_weight4_code(length, dim):
    # grow ordered tuples of weight-4 words, checking all pairwise sums
    pool = [sum(1 << i for i in s) for s in combinations(range(length), 4)]

    def extend(gens, span, start):
        if len(gens) == dim:
            return True
        for j in range(start, len(pool)):
            w = pool[j]
            if w in span:
                continue
            if all(bin(w ^ c).count("1") == 4 for c in span if c):
                if extend(gens + [w], span | {w ^ c for c in span}, j + 1):
                    return True
        return False

    return extend([], {0}, 0)


# --- construction and basic structure --------------------------------------


def test_make_code_row_reduces():
    c = make_code(["1100", "0110", "1010"], 4)
    assert c.length == 4
    assert c.dim == 2
    # RREF is unique, so input order must not matter
    d = make_code(["1010", "1100"], 4)
    assert c == d


def test_make_code_rejects_bad_input():
    with pytest.raises(ValueError):
        make_code([], 40)
    with pytest.raises(ValueError):
        make_code(["11012"], 5)
    with pytest.raises(ValueError):
        make_code([1 << 6], 6)


def test_word_string_roundtrip():
    w = word_from_string("01101")
    assert w == 0b10110
    assert word_to_string(w, 5) == "01101"


def test_codewords_count_and_membership():
    c = make_code(["110100", "011010"], 6)
    words = codewords(c)
    assert len(words) == 4
    assert len(set(words)) == 4
    assert all(contains(c, w) for w in words)
    assert not contains(c, 0b1)


def test_weight_enumerator_de3():
    # de(3): dimension 2, three words of weight 4
    assert weight_enumerator(de(3)) == {0: 1, 4: 3}
    assert weight_enumerator(de(3)) == brute_weights(de(3))


def test_weight_enumerator_simplex():
    s = simplex(3)
    assert (s.length, s.dim) == (7, 3)
    assert weight_enumerator(s) == {0: 1, 4: 7}
    assert weight_enumerator(s) == brute_weights(s)


def test_weight_enumerator_zero_code():
    assert weight_enumerator(zero_code(5)) == {0: 1}


def test_evenness_predicates():
    assert is_doubly_even(de(4))
    assert is_doubly_even(zero_code(3))
    assert is_even(make_code(["11"], 2))
    assert not is_doubly_even(make_code(["11"], 2))
    assert not is_even(make_code(["111"], 3))
    # weight-4 generators meeting oddly do not span a doubly even code
    c = make_code(["1111000", "0111100"], 7)
    assert not is_doubly_even(c)
    assert any(h % 4 for h in weight_enumerator(c) if h)


def test_doubly_even_matches_full_span_check():
    rng = random.Random(7)
    for _ in range(50):
        k = rng.randrange(4, 10)
        rows = [rng.randrange(1, 1 << k) for _ in range(rng.randrange(1, 4))]
        c = make_code(rows, k)
        expected = all(h % 4 == 0 for h in weight_enumerator(c))
        assert is_doubly_even(c) == expected


# --- support reduction ------------------------------------------------------


def test_reduce_strips_zero_coordinates():
    padded = make_code([word_to_string(g, 7) + "0" for g in simplex(3).generators], 8)
    red, support = reduce(padded)
    assert red == simplex(3)
    assert support == (0, 1, 2, 3, 4, 5, 6)


def test_reduce_full_support_is_identity():
    red, support = reduce(de(3))
    assert red == de(3)
    assert support == tuple(range(6))


def test_reduce_zero_code():
    red, support = reduce(zero_code(5))
    assert red.length == 0 and red.dim == 0
    assert support == ()


# --- the doubled even-weight family -----------------------------------------


def test_de_shapes():
    for n in range(1, 11):
        c = de(n)
        assert c.length == 2 * n
        assert c.dim == n - 1
        assert is_doubly_even(c)


def test_de_small_cases():
    assert de(1) == zero_code(2)
    assert de(2) == make_code(["1111"], 4)
    with pytest.raises(ValueError):
        de(0)


# --- canonical forms and equivalence ----------------------------------------


def test_canonical_form_is_orbit_invariant():
    rng = random.Random(20260815)
    for _ in range(100):
        k = rng.randrange(1, 9)
        nrows = rng.randrange(0, k + 1)
        rows = [rng.randrange(1, 1 << k) for _ in range(nrows)]
        c = make_code(rows, k)
        images = list(range(k))
        rng.shuffle(images)
        shuffled = permute(c, images)
        canon_c, wit_c = canonical_form(c)
        canon_s, wit_s = canonical_form(shuffled)
        assert canon_c == canon_s
        # witness must actually map each code onto the canonical form
        assert permute(c, wit_c) == canon_c
        assert permute(shuffled, wit_s) == canon_c


def test_canonical_form_deterministic_witness():
    c = de(3)
    assert canonical_form(c) == canonical_form(make_code(c.generators, 6))


def test_equivalent_reversed_de3():
    a = de(3)
    b = permute(a, (5, 4, 3, 2, 1, 0))
    images = equivalent(a, b)
    assert images is not None
    assert permute(a, images) == b


def test_equivalent_simple_swap():
    a = make_code(["1100"], 4)
    b = make_code(["0011"], 4)
    images = equivalent(a, b)
    assert images is not None
    assert sorted(images[:2]) == [2, 3]
    assert permute(a, images) == b


def test_not_equivalent_different_dims():
    padded = make_code(
        [word_to_string(g, 6) + "0" for g in de(3).generators], 7
    )
    assert equivalent(padded, simplex(3)) is None


def test_essentially_isomorphic():
    padded = make_code(
        [word_to_string(g, 7) + "00" for g in simplex(3).generators], 9
    )
    assert essentially_isomorphic(padded, simplex(3))
    assert essentially_isomorphic(zero_code(4), zero_code(1))
    assert not essentially_isomorphic(de(2), zero_code(4))


def test_equivalence_respects_weight_enumerator():
    rng = random.Random(99)
    for _ in range(30):
        k = rng.randrange(2, 9)
        rows = [rng.randrange(1, 1 << k) for _ in range(rng.randrange(1, 4))]
        a = make_code(rows, k)
        images = list(range(k))
        rng.shuffle(images)
        b = permute(a, images)
        assert weight_enumerator(a) == weight_enumerator(b)
        assert equivalent(a, b) is not None


# --- recognizing doubled even-weight codes -----------------------------------


def test_recognize_de_family():
    for n in range(1, 11):
        assert recognize_de(de(n)) == n


def test_recognize_de_permuted_and_padded():
    c = de(4)
    shuffled = permute(c, (7, 2, 5, 0, 3, 6, 1, 4))
    assert recognize_de(shuffled) == 4
    padded = make_code(
        [word_to_string(g, 8) + "000" for g in c.generators], 11
    )
    assert recognize_de(padded) == 4


def test_recognize_de_rejects_simplex():
    assert recognize_de(simplex(3)) is None


def test_recognize_de_unobvious_generating_set():
    # chained weight-4 generators still span a doubled even-weight code
    c = make_code(["11110000", "00111100", "00001111"], 8)
    assert is_doubly_even(c)
    assert recognize_de(c) == 4
    # brute-force oracle: an explicit equivalence with de(4) exists
    assert equivalent(c, de(4)) is not None


def test_recognize_de_rejects_wrong_dimension():
    # columns pair up, but the dimension is one short of a doubled code's
    c = make_code(["11110000", "00001111"], 8)
    assert is_doubly_even(c)
    assert recognize_de(c) is None
    for n in range(1, 6):
        assert not essentially_isomorphic(c, de(n))


def test_recognize_de_zero_code():
    assert recognize_de(zero_code(6)) == 1


# --- exhaustive enumeration ---------------------------------------------------


def test_enumerate_weight4_length7_dim3_is_simplex():
    classes = enumerate_codes(7, "4", 3, 3)
    assert len(classes) == 1
    assert equivalent(classes[0], simplex(3)) is not None


def test_enumerate_empty_cases():
    assert enumerate_codes(5, "4", 2, 2) == []
    assert enumerate_codes(8, "4", 4, 4) == []


def test_enumerate_agrees_with_bruteforce_existence():
    for length in range(4, 9):
        for dim in range(1, 5):
            got = bool(enumerate_codes(length, "4", dim, dim))
            assert got == brute_exists_weight4_code(length, dim), (length, dim)


def test_enumerate_returns_canonical_sorted():
    classes = enumerate_codes(8, "div4", 0, 3)
    assert classes == sorted(
        classes, key=lambda c: (c.dim, c.generators)
    )
    for c in classes:
        assert canonical_form(c)[0] == c
        assert all(
            h % 4 == 0 for h in weight_enumerator(c)
        )


def test_enumerate_doubly_even_self_orthogonal():
    # every doubly even code is self-orthogonal
    for length in range(4, 11):
        for c in enumerate_codes(length, "div4", 1, length):
            words = codewords(c)
            assert all(
                bin(a & b).count("1") % 2 == 0
                for a, b in combinations(words, 2)
            )


def test_enumerate_rejects_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_codes(6, "weird", 0, 2)
    with pytest.raises(ValueError):
        enumerate_codes(6, "4", 3, 1)


# --- serialization ------------------------------------------------------------


def test_code_file_roundtrip():
    for c in [de(3), simplex(3), zero_code(5)]:
        assert parse_code(format_code(c)) == c


def test_parse_code_rejects_malformed():
    with pytest.raises(ValueError):
        parse_code("")
    with pytest.raises(ValueError):
        parse_code("7 2\n1111000\n")
    with pytest.raises(ValueError):
        parse_code("4 2\n1111\n1111\n")


def test_format_code_matches_layout():
    assert format_code(de(2)) == "4 1\n1111\n"
