#!/usr/bin/env python3
'''
Tests of the group kernel and the group file readers

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

import numpy as np
import pytest

from FitBound.config import override
from FitBound.errors import CapExceededError, GroupAxiomError, NotNormalError
from FitBound.groups.constructions import build_psl2, stock
from FitBound.groups.group import (conjugacy_classes, cycle_notation, derived_series, direct_product, exponent,
                                   from_cayley_table, from_permutations, is_nilpotent, is_normal, is_soluble,
                                   normal_closure, quotient, subgroup_generated, whole_group)
from FitBound.groups.parsing import load_group_file, parse_permutation, read_cayley_file, read_permutation_file


def z6_table():
    return [[(a + b) % 6 for b in range(6)] for a in range(6)]


def test_orders_of_stock_groups(s3, s4, a4, a5, d8, c7):
    assert [G.order for G in (s3, s4, a4, a5, d8, c7)] == [6, 24, 12, 60, 8, 7]


def test_group_axioms_hold(s4):
    elements = list(s4.elements())
    e = s4.identity
    for a in elements[::5]:
        assert s4.mul(a, e) == a == s4.mul(e, a)
        assert s4.mul(a, s4.inv(a)) == e
        for b in elements[::7]:
            for c in elements[::11]:
                assert s4.mul(s4.mul(a, b), c) == s4.mul(a, s4.mul(b, c))


def test_composition_convention():
    G = from_permutations(3, ['(1 2)', '(2 3)'])
    a = G.index_of(parse_permutation('(1 2)', 3))
    b = G.index_of(parse_permutation('(2 3)', 3))
    # (ab)(i) = a(b(i)): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    assert G.label(G.mul(a, b)) == '(1 2 3)'


def test_power_and_element_order(c7, s3):
    g = c7.generators[0]
    assert c7.element_order(g) == 7
    assert c7.power(g, 7) == c7.identity
    assert c7.power(g, -1) == c7.inv(g)
    assert c7.power(g, -3) == c7.power(g, 4)
    assert sorted(s3.element_order(x) for x in s3.elements()) == [1, 2, 2, 2, 3, 3]
    assert exponent(s3) == 6


def test_vectorised_products_agree(s4):
    a = np.arange(s4.order)
    b = (a * 5 + 3) % s4.order
    assert s4.mul_many(a, b).tolist() == [s4.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert s4.inv_many(a).tolist() == [s4.inv(int(x)) for x in a]
    assert s4.power_many(a, -1).tolist() == s4.inv_many(a).tolist()


def test_abelian(c7, s3, d8):
    assert c7.is_abelian()
    assert not s3.is_abelian()
    assert not d8.is_abelian()


def test_subgroups_and_normality(s4):
    V4 = subgroup_generated(s4, [s4.index_of(parse_permutation(t, 4)) for t in ('(1 2)(3 4)', '(1 3)(2 4)')])
    assert V4.order == 4
    assert is_normal(s4, V4) == (True, None)
    H = subgroup_generated(s4, [s4.index_of(parse_permutation('(1 2)', 4))])
    normal, witness = is_normal(s4, H)
    assert not normal
    g, h = witness
    assert s4.conj(g, h) not in H
    assert normal_closure(s4, H.generators).order == 24


def test_quotient(s4):
    V4 = normal_closure(s4, [s4.index_of(parse_permutation('(1 2)(3 4)', 4))])
    Q = quotient(s4, V4)
    assert Q.order == 6
    assert not Q.is_abelian()
    assert Q.preimage(whole_group(Q)).is_whole()
    assert Q.project(s4.identity) == Q.identity


def test_quotient_by_a_non_normal_subgroup(s3):
    H = subgroup_generated(s3, [s3.index_of(parse_permutation('(1 2)', 3))])
    with pytest.raises(NotNormalError) as info:
        quotient(s3, H)
    assert info.value.witness is not None


def test_derived_series(s4, a5):
    assert [H.order for H in derived_series(s4)] == [24, 12, 4, 1]
    assert is_soluble(s4)
    assert not is_soluble(a5)
    assert [H.order for H in derived_series(a5)] == [60]


def test_insoluble_groups():
    s5 = stock('S5')
    assert not is_soluble(s5)
    assert [H.order for H in derived_series(s5)] == [120, 60]
    psl27 = build_psl2(7).group
    assert not is_soluble(psl27)
    assert [H.order for H in derived_series(psl27)] == [168]


def test_nilpotent(d8, s3):
    assert is_nilpotent(d8)
    assert not is_nilpotent(s3)


def test_conjugacy_classes(s4, a5):
    assert sorted(len(c) for c in conjugacy_classes(s4)) == [1, 3, 6, 6, 8]
    assert sorted(len(c) for c in conjugacy_classes(a5)) == [1, 12, 12, 15, 20]


def test_cayley_table_group():
    G = from_cayley_table(z6_table(), 'Z6')
    assert G.order == 6
    assert G.identity == 0
    assert G.is_abelian()
    assert exponent(G) == 6


def test_non_associative_table_has_a_witness():
    T = np.array(z6_table())
    T[1, 1], T[1, 4], T[4, 1], T[4, 4] = 5, 2, 2, 5
    with pytest.raises(GroupAxiomError) as info:
        from_cayley_table(T)
    a, b, c = info.value.witness
    assert T[T[a, b], c] != T[a, T[b, c]]


def test_non_latin_table():
    with pytest.raises(GroupAxiomError):
        from_cayley_table([[0, 1], [1, 1]])
    with pytest.raises(GroupAxiomError):
        from_cayley_table([[0, 1, 2], [1, 2, 0]])


def test_direct_products(s3, c7):
    P = direct_product([s3, s3])
    assert P.group.order == 36
    assert P.factor_subgroup(1).order == 6
    g = P.combine((1, 2))
    assert P.components(g) == (1, 2)
    Z6 = from_cayley_table(z6_table(), 'Z6')
    mixed = direct_product([Z6, c7])
    assert mixed.group.order == 42
    assert mixed.group.is_abelian()


def test_caps():
    with override(element_cap=100):
        with pytest.raises(CapExceededError):
            from_permutations(5, ['(1 2 3 4 5)', '(1 2)'])
    with override(permutation_degree_cap=4):
        with pytest.raises(CapExceededError):
            from_permutations(5, ['(1 2 3 4 5)'])


def test_parse_permutation():
    assert parse_permutation('(1 2 3)(4 5)').tolist() == [1, 2, 0, 4, 3]
    assert parse_permutation('2 3 1').tolist() == [1, 2, 0]
    assert parse_permutation('()', 3).tolist() == [0, 1, 2]
    assert cycle_notation(parse_permutation('(1 3)(2 4)')) == '(1 3)(2 4)'
    with pytest.raises(GroupAxiomError):
        parse_permutation('1 1 2')
    with pytest.raises(GroupAxiomError):
        parse_permutation('(1 5)', 3)


def test_group_files(tmp_path):
    perms = tmp_path / 's4.txt'
    perms.write_text('# S4\n(1 2)\n(1 2 3 4)\n')
    degree, gens = read_permutation_file(str(perms))
    assert degree == 4 and len(gens) == 2
    assert load_group_file(str(perms)).order == 24

    table = tmp_path / 'z3.txt'
    table.write_text('3\n1 2 3\n2 3 1\n3 1 2\n')
    assert read_cayley_file(str(table)).tolist() == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    G = load_group_file(str(table))
    assert G.order == 3 and G.name == 'z3.txt'

    short = tmp_path / 'short.txt'
    short.write_text('3\n1 2 3\n')
    with pytest.raises(GroupAxiomError):
        load_group_file(str(short), 'cayley')
