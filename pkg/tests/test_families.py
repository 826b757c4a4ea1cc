import pytest

from kmdis.canon import canonical_form, contains_subtree, is_isomorphic
from kmdis.families import (
    SPECIAL_FREE,
    TWIN_FREE,
    FamilyDescriptor,
    add_closure,
    b_family,
    b_tree,
    f,
    lemma1_check,
    make,
    parse_descriptor,
    s_dprime,
    s_prime,
    s_tprime,
    s_tree,
    spider,
)
from kmdis.tree_core import (
    Tree,
    add_leaf,
    bits,
    delete_vertex,
    diameter,
    diametral_k_twins,
    k_special_pairs,
    leaves,
    path_tree,
    star_tree,
)
from kmdis.treegen import TreeStream


def test_f_small_values():
    assert [f(2, n) for n in range(1, 10)] == [1, 2, 3, 3, 4, 4, 5, 5, 6]
    assert [f(3, n) for n in range(1, 10)] == [1, 2, 3, 4, 4, 5, 5, 6, 6]
    with pytest.raises(ValueError):
        f(0, 3)


def test_step_structure_of_f():
    for k in range(2, 9):
        for n in range(k + 2, 80):
            assert lemma1_check(k, n)


def test_named_trees_sizes():
    assert s_tree(3, 2).n == 7
    assert s_prime(4, 3).n == 12
    assert s_dprime(3).n == 7
    assert s_tprime(3).n == 6
    assert b_tree(3, 2, 2).n == 12 and diameter(b_tree(3, 2, 2)) == 5
    assert len(b_family(5, 2)) == 2


def test_identities():
    assert is_isomorphic(s_tree(4, 1), star_tree(5))
    assert is_isomorphic(s_tree(2, 3), path_tree(7))
    assert is_isomorphic(spider([]), Tree.from_edges(1, []))


def test_prime_variants_unique_up_to_isomorphism():
    # deleting any leaf of S_{p,2} gives the same tree; any middle vertex for S'''
    for p in range(2, 6):
        base = s_tree(p, 2)
        keys = {canonical_form(delete_vertex(base, v)) for v in bits(leaves(base))}
        assert keys == {canonical_form(s_prime(p, 2))}
    for p in range(3, 6):
        smaller = s_tree(p - 1, 2)
        keys = {canonical_form(add_leaf(smaller, v)) for v in range(1, smaller.n, 2)}
        assert keys == {canonical_form(s_tprime(p))}


def test_two_closure_picture():
    base = s_prime(3, 2)
    star = add_closure(base, 2, 1, SPECIAL_FREE)
    plain = add_closure(base, 2, 1, TWIN_FREE)
    assert len(star) == 3 and len(plain) == 2
    assert {canonical_form(x) for x in plain} <= {canonical_form(x) for x in star}


def test_closure_invariants():
    base = s_prime(5, 3)
    fam = add_closure(base, 4, 2)
    assert len(fam) == 10
    assert all(x.n == base.n + 2 and diameter(x) == diameter(base) and contains_subtree(x, base) for x in fam)


def test_closure_brute_force():
    # compare with filtering every tree of the right order
    for base, k, r in [(s_prime(3, 2), 2, 2), (path_tree(6), 4, 2), (s_tree(3, 2), 3, 1)]:
        for variant in (TWIN_FREE, SPECIAL_FREE):
            bad = diametral_k_twins if variant == TWIN_FREE else k_special_pairs
            want = {canonical_form(x) for x in TreeStream(base.n + r)
                    if diameter(x) == diameter(base) and contains_subtree(x, base) and not bad(x, k)}
            assert {canonical_form(x) for x in add_closure(base, k, r, variant)} == want


def test_closure_rejects_twinned_base():
    with pytest.raises(ValueError):
        add_closure(star_tree(4), 2, 1)


@pytest.mark.parametrize("text", [
    "P(n=5)", "Star(n=5)", "S(p=3,m=2)", "S'(p=4,m=3)", "S''(p=3)", "S'''(p=3)",
    "B(3,2;s=2)", "Bfam(5;s=2)",
    "Add(k=4,r=2,base=S'(p=5,m=3),variant=twin_free)",
    "Add(k=2,r=1,base=S'(p=3,m=2),variant=special_free)",
])
def test_descriptor_round_trip(text):
    d = parse_descriptor(text)
    assert str(d) == text
    assert parse_descriptor(str(d)) == d


def test_descriptor_shorthands():
    assert parse_descriptor("S(3,2)") == FamilyDescriptor("S_nm", (3, 2))
    assert parse_descriptor("Add*(2,1,S'(3,2))").kind == "AddStar"
    assert len(make("Add*(k=2,r=1,base=S'(p=3,m=2))")) == 3


@pytest.mark.parametrize("text", ["Q(n=2)", "P(n=0)", "P(n=x)", "S(p=3)", "Add(k=2,r=1)", "P(5", "P(m=5)"])
def test_descriptor_errors(text):
    with pytest.raises(ValueError):
        parse_descriptor(text)


def test_drawn_examples_of_four_closure():
    import oracles
    drawn = [
        "b11/b28,b28/b38,b38/b48,b11/b29,b29/b39,b39/b49,b11/b20,b20/b30,b30/b40,"
        "b11/b21,b21/b31,b31/b41,b11/b22,b22/b32,b11/b10,b11/b12",
        "c11/c28,c28/c38,c38/c48,c11/c29,c29/c39,c39/c49,c11/c20,c20/c30,c30/c40,"
        "c12/c22,c21/c31,c31/c41,c11/c22,c11/c21,c22/c32,c21/c42",
        "a11/a28,a28/a38,a38/a48,a11/a29,a29/a39,a39/a49,a11/a20,a20/a30,a30/a40,"
        "a11/a21,a21/a31,a31/a41,a11/a22,a22/a32,a11/a23,a23/a33",
    ]
    fam = {canonical_form(x) for x in make("Add(k=4,r=2,base=S'(p=5,m=3))")}
    for pairs in drawn:
        assert canonical_form(Tree.from_edges(*oracles.named_edges(pairs))) in fam
