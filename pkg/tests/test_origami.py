"""Origami construction, singularity data, translations, cyclic extensions."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regori import perms
from regori.constructions import (
    cyclic,
    dihedral,
    semidirect_cyclic,
    semidirect_generators,
    two_group,
)
from regori.errors import CoprimalityViolated, InvalidGenus, NotGenerating
from regori.origami import (
    Origami,
    extend_by_cyclic,
    genus_of,
    is_regular,
    one_cylinder,
    regular_origami,
    stratum_of,
    translation_group,
    translations,
)
from regori.strata import Stratum, parse_stratum


def test_origami_rejects_disconnected():
    with pytest.raises(ValueError):
        Origami((1, 0, 2, 3), (0, 1, 3, 2))


def test_serialize_roundtrip():
    o = one_cylinder(3)
    assert Origami.deserialize(o.serialize()) == o


def test_regular_origami_dihedral():
    D6 = dihedral(6)
    x, y = semidirect_generators(3, 2)
    o = regular_origami(D6, x, y)
    assert o.n == 6
    assert stratum_of(o) == parse_stratum("H(2,2)")
    assert genus_of(o) == 3
    assert translation_group(o).order == 6


def test_regular_origami_table_row():
    G = semidirect_cyclic(11, 5, 3)
    o = regular_origami(G, *semidirect_generators(11, 5))
    assert o.n == 55
    assert stratum_of(o) == parse_stratum("H(10^5)")
    assert genus_of(o) == 26
    assert translation_group(o).order == 55


def test_regular_origami_abelian_torus():
    G = cyclic(4)
    o = regular_origami(G, 1, 1)
    assert stratum_of(o) == Stratum(())
    assert genus_of(o) == 1
    assert translation_group(o).order == 4


def test_regular_origami_rejects_nongenerating():
    with pytest.raises(NotGenerating):
        regular_origami(cyclic(4), 2, 2)


def test_one_cylinder_family():
    o = one_cylinder(3)
    assert o.n == 8
    assert stratum_of(o) == parse_stratum("H(1^4)")
    T = translation_group(o)
    assert T.order == 4
    assert any(T.element_order(a) == 4 for a in T.elements())

    o2 = one_cylinder(2)
    assert o2.n == 4
    assert stratum_of(o2) == parse_stratum("H(1^2)")
    assert translation_group(o2).order == 2

    with pytest.raises(InvalidGenus):
        one_cylinder(1)


def test_one_cylinder_sweep():
    for g in range(2, 31):
        o = one_cylinder(g)
        assert o.n == 4 * g - 4
        assert stratum_of(o) == Stratum((1,) * (2 * g - 2))
        assert genus_of(o) == g
        T = translation_group(o)
        assert T.order == 2 * g - 2
        # cyclic: some element attains the full order
        assert max(T.element_order(a) for a in T.elements()) == 2 * g - 2
        assert not is_regular(o)


def test_l_origami_trivial_translations():
    o = Origami((1, 0, 2), (2, 1, 0))
    assert len(translations(o)) == 1


def test_translation_count_divides_squares():
    for o in (one_cylinder(4), Origami((1, 0, 2), (2, 1, 0)), one_cylinder(5)):
        assert o.n % len(translations(o)) == 0


def test_commutator_order_matches_stratum():
    # zeros have order ord([x,y]) - 1 with multiplicity index of the cyclic hull
    for m, n, d in ((11, 5, 3), (9, 3, 4), (23, 11, 2), (12, 2, 11)):
        G = semidirect_cyclic(m, n, d)
        x, y = semidirect_generators(m, n)
        o = regular_origami(G, x, y)
        comm_order = G.element_order(G.commutator(x, y))
        uni = stratum_of(o).uniform()
        assert uni is not None
        assert uni[0] == comm_order - 1
        assert uni[1] == G.order // comm_order
        # group order identity: |G| = 2(m+1)/m (g-1) for zero order m
        zero_order = uni[0]
        assert G.order * zero_order == 2 * (zero_order + 1) * (genus_of(o) - 1)


def test_extend_by_cyclic_table_row():
    G = semidirect_cyclic(11, 5, 3)
    x, y = semidirect_generators(11, 5)
    H, a, b = extend_by_cyclic(G, x, y, 7)
    assert H.order == 385
    assert H.element_order(H.commutator(a, b)) == 11
    o = regular_origami(H, a, b)
    assert stratum_of(o) == parse_stratum("H(10^35)")
    assert genus_of(o) == 176


def test_extend_by_cyclic_identity():
    G = semidirect_cyclic(11, 5, 3)
    x, y = semidirect_generators(11, 5)
    H, a, b = extend_by_cyclic(G, x, y, 1)
    assert H.order == G.order
    assert stratum_of(regular_origami(H, a, b)) == parse_stratum("H(10^5)")


def test_extend_by_cyclic_coprimality():
    G = two_group("cyclic_x_z2", 2)  # Klein group: both generators of order 2
    x, y = 1 * 2, 1
    assert G.element_order(x) == 2 and G.element_order(y) == 2
    with pytest.raises(CoprimalityViolated):
        extend_by_cyclic(G, x, y, 2)


def test_extend_preserves_commutator_and_multiplies_index():
    G = dihedral(14)
    x, y = semidirect_generators(7, 2)
    for k in (2, 3, 6, 10):
        H, a, b = extend_by_cyclic(G, x, y, k)
        assert H.element_order(H.commutator(a, b)) == 7
        o = regular_origami(H, a, b)
        assert stratum_of(o) == Stratum((6,) * (2 * k))


def test_regularity_bound_trichotomy_small():
    # translations beyond 2(g-1) happen only for regular squares-as-group origamis
    for o in (one_cylinder(3), one_cylinder(4)):
        g = genus_of(o)
        assert len(translations(o)) <= 2 * (g - 1)
    D6 = dihedral(6)
    o = regular_origami(D6, *semidirect_generators(3, 2))
    g = genus_of(o)
    assert len(translations(o)) == 6 > 2 * (g - 1)


@st.composite
def _small_pairs(draw):
    n = draw(st.integers(2, 7))
    sh = tuple(draw(st.permutations(range(n))))
    sv = tuple(draw(st.permutations(range(n))))
    return sh, sv


@given(_small_pairs())
@settings(max_examples=300, deadline=None)
def test_random_pairs_genus_consistency(pair):
    sh, sv = pair
    if not perms.is_transitive_pair(sh, sv):
        return
    o = Origami(sh, sv)
    g = genus_of(o)
    assert g >= 1
    assert sum(stratum_of(o).zeros) == 2 * g - 2
    assert o.n % len(translations(o)) == 0
