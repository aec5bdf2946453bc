import pytest

from regori import perms
from regori.errors import DegreeMismatch


def test_identity_and_check():
    assert perms.identity(3) == (0, 1, 2)
    assert perms.check_perm([2, 0, 1]) == (2, 0, 1)
    with pytest.raises(ValueError):
        perms.check_perm([0, 0, 1])
    with pytest.raises(ValueError):
        perms.check_perm([])


def test_compose_function_order():
    p = (1, 2, 0)
    q = (0, 2, 1)
    # (p o q)(i) = p[q[i]]
    assert perms.compose(p, q) == (1, 0, 2)
    with pytest.raises(DegreeMismatch):
        perms.compose(p, (1, 0))


def test_invert():
    p = (2, 0, 1)
    assert perms.compose(p, perms.invert(p)) == perms.identity(3)


def test_order_and_cycles():
    p = (1, 2, 0, 4, 3)
    assert perms.perm_order(p) == 6
    assert perms.cycles(p) == [[0, 1, 2], [3, 4]]
    assert perms.cycle_type(p) == (3, 2)


def test_transitive_pair():
    assert perms.is_transitive_pair((1, 0, 2), (2, 1, 0))
    assert not perms.is_transitive_pair((1, 0, 2, 3), (0, 1, 3, 2))


def test_uniform_cycles():
    assert perms.uniform_cycles(6, 3) == (1, 2, 0, 4, 5, 3)
    assert perms.uniform_cycles(4, 1) == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        perms.uniform_cycles(6, 4)


def test_format_parse_roundtrip():
    p = (3, 0, 2, 1)
    assert perms.parse_perm(perms.format_perm(p)) == p
