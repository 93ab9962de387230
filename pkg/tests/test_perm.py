import itertools
import random

import pytest

from wedderburn import (
    Permutation,
    compose,
    element_order,
    generate,
    parse_cycles,
    parse_group_text,
    power_class,
)

def brute_force_group(gen_images, degree):
    """Independent closure: multiply image tuples until no new ones appear."""
    def mul(a, b):
        return tuple(a[b[i]] for i in range(degree))

    elems = {tuple(range(degree))}
    frontier = list(elems)
    gens = [tuple(g) for g in gen_images]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return elems


def brute_force_classes(elems, degree):
    def mul(a, b):
        return tuple(a[b[i]] for i in range(degree))

    def inv(a):
        out = [0] * degree
        for i, j in enumerate(a):
            out[j] = i
        return tuple(out)

    unseen = set(elems)
    classes = []
    while unseen:
        g = next(iter(unseen))
        cls = {mul(mul(h, g), inv(h)) for h in elems}
        unseen -= cls
        classes.append(cls)
    return classes


def test_parse_cycles_generator():
    g = parse_cycles("(3,7,5)(4,8,6)", 8)
    want = {3: 7, 7: 5, 5: 3, 4: 8, 8: 6, 6: 4}
    for i in range(1, 9):
        assert g(i - 1) + 1 == want.get(i, i)


def test_parse_cycles_identity():
    assert parse_cycles("", 8) == Permutation.identity(8)
    assert parse_cycles("()", 8) == Permutation.identity(8)
    assert parse_cycles(" ( 1 , 2 ) ", 3) == parse_cycles("(1,2)", 3)


def test_parse_cycles_involution_rep():
    g = parse_cycles("(1,2)(3,4)(5,8)(6,7)", 8)
    assert element_order(g) == 2


@pytest.mark.parametrize(
    "text",
    ["(1,9)", "(0,1)", "(1,2)(2,3)", "(1,1)", "(1,2", "1,2)", "(1,,2)", "(a,b)", "(1,2)x"],
)
def test_parse_cycles_rejects(text):
    with pytest.raises(ValueError):
        parse_cycles(text, 8)


def test_compose_identity_and_inverse():
    g = parse_cycles("(1,2,6)(3,4,8)", 8)
    ident = Permutation.identity(8)
    assert compose(ident, g) == g
    assert compose(g, ident) == g
    assert compose(g, g.inverse()) == ident


def test_compose_order3():
    g = parse_cycles("(3,5,7)(4,6,8)", 8)
    assert compose(compose(g, g), g) == Permutation.identity(8)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_compose_applies_right_factor_first():
    a = parse_cycles("(1,2)", 3)
    b = parse_cycles("(2,3)", 3)
    # (a*b)(i) = a(b(i)): point 2 -> b -> 3 -> a -> 3
    assert compose(a, b)(1) == 2


def test_element_order():
    assert element_order(Permutation.identity(8)) == 1
    assert element_order(parse_cycles("(2,3,5,4,7,8,6)", 8)) == 7
    assert element_order(parse_cycles("(1,2,3,5)(4,8,7,6)", 8)) == 4


def test_generate_sl32(sl32_s8):
    assert sl32_s8.order == 168
    assert len(sl32_s8.classes) == 6
    assert sl32_s8.exponent == 84


def test_generate_trivial():
    G = generate([Permutation.identity(4)])
    assert G.order == 1
    assert len(G.classes) == 1
    assert G.classes[0].size == 1


def test_generate_cap():
    gens = [parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(1,2)", 5)]
    with pytest.raises(ValueError):
        generate(gens, cap=100)


def test_generate_s5_against_brute_force(s5):
    gens = [parse_cycles("(1,2,3,4,5)", 5).images, parse_cycles("(1,2)", 5).images]
    oracle = brute_force_group(gens, 5)
    assert s5.order == len(oracle) == 120
    assert {g.images for g in s5.elements} == oracle
    oracle_classes = brute_force_classes(oracle, 5)
    assert len(s5.classes) == len(oracle_classes) == 7
    assert sorted(c.size for c in s5.classes) == sorted(len(c) for c in oracle_classes)
    assert sorted(c.size for c in s5.classes) == [1, 10, 15, 20, 20, 24, 30]


def test_class_table_sl32(sl32_s8):
    assert [c.size for c in sl32_s8.classes] == [1, 21, 56, 42, 24, 24]
    assert [c.element_order for c in sl32_s8.classes] == [1, 2, 3, 4, 7, 7]


def test_classes_partition_and_conjugation_closure(sl32_s8):
    G = sl32_s8
    assert sum(c.size for c in G.classes) == G.order
    assert all(len(c.indices) == c.size for c in G.classes)
    for c in G.classes:
        for i in itertools.islice(c.indices, 5):
            x = G.elements[i]
            assert x.order() == c.element_order
            for g in G.generators:
                assert G.class_index_of[G.index(g * x * g.inverse())] == G.class_index_of[i]


def test_power_class_fusion(sl32_s8):
    G = sl32_s8
    a, b = 4, 5  # the two order-7 classes
    assert power_class(G, a, 2) == a
    assert power_class(G, a, 4) == a
    assert power_class(G, a, 3) == b
    assert power_class(G, a, 5) == b
    assert power_class(G, a, 6) == b
    assert power_class(G, b, 2) == b
    assert power_class(G, b, 3) == a


def test_power_class_trivial_cases(sl32_s8):
    for ci in range(6):
        assert power_class(sl32_s8, ci, 1) == ci
        order = sl32_s8.classes[ci].element_order
        assert power_class(sl32_s8, ci, order) == 0


def test_power_class_depends_only_on_m_mod_order(sl32_s8):
    rng = random.Random(7)
    for _ in range(50):
        ci = rng.randrange(6)
        m = rng.randrange(-200, 200)
        order = sl32_s8.classes[ci].element_order
        assert power_class(sl32_s8, ci, m) == power_class(sl32_s8, ci, m % order)


def test_builtin_p2f2(sl32_p2f2):
    G = sl32_p2f2
    assert G.order == 168
    assert G.degree == 7
    assert sorted(c.size for c in G.classes) == [1, 21, 24, 24, 42, 56]
    # orbit-stabilizer: |G_1| = 168 / 7
    assert sum(1 for g in G.elements if g(0) == 0) == 24


def test_random_triple_associativity(sl32_s8):
    rng = random.Random(0)
    els = sl32_s8.elements
    ident = Permutation.identity(8)
    for _ in range(1000):
        a, b, c = (els[rng.randrange(168)] for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * a.inverse() == ident


def test_generate_is_deterministic():
    gens = [parse_cycles("(3,7,5)(4,8,6)", 8), parse_cycles("(1,2,6)(3,4,8)", 8)]
    G1 = generate(gens)
    G2 = generate(gens)
    assert [g.images for g in G1.elements] == [g.images for g in G2.elements]


def test_group_file_roundtrip():
    text = """
# flagship group
degree 8
(3,7,5)(4,8,6)
(1,2,6)(3,4,8)   # second generator
"""
    G = parse_group_text(text)
    assert G.order == 168


def test_group_file_trivial():
    G = parse_group_text("degree 3\n")
    assert G.order == 1
    assert G.degree == 3


@pytest.mark.parametrize("text", ["", "degree x", "(1,2)", "degree 0", "degree 3\n(1,4)"])
def test_group_file_rejects(text):
    with pytest.raises(ValueError):
        parse_group_text(text)


def test_cycle_string_roundtrip(sl32_s8):
    for g in sl32_s8.elements[:40]:
        assert parse_cycles(g.cycle_string(), 8) == g


def test_builtin_p2f2_matches_s8_class_data(sl32_s8, sl32_p2f2):
    left = [(c.element_order, c.size) for c in sl32_s8.classes]
    right = [(c.element_order, c.size) for c in sl32_p2f2.classes]
    assert left == right
