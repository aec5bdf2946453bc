"""Finite groups on dense element indices 0..order-1.

A group is its order plus a total product on indices. Groups built from
explicit multiplication rules (cyclic, semidirect, ...) wrap an encoding of
structured elements; groups built by closure keep their permutations. Both
expose the same interface, and every operation here works through it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from . import perms
from .errors import BudgetExceeded, DegreeMismatch, NotGenerating

DEFAULT_ISO_BOUND = 64


class FiniteGroup:
    """A finite group with elements 0..order-1 and a callable product."""

    def __init__(self, order, mul, identity=0, label="", coords=None, perms_list=None):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        self._mul = mul
        self.identity = identity
        self.label = label or f"group of order {order}"
        # optional pretty-printer for structured elements, used in reports
        self._coords = coords
        # permutations realizing the elements, when built by closure
        self.perms = perms_list
        self._inv = {}
        self._orders = {}

    def __repr__(self):
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def elements(self):
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self._mul(a, b)

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = self.identity
        base = a
        while k:
            if k & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        cached = self._orders.get(a)
        if cached is not None:
            return cached
        k, x = 1, a
        while x != self.identity:
            x = self._mul(x, a)
            k += 1
        self._orders[a] = k
        return k

    def inv(self, a: int) -> int:
        cached = self._inv.get(a)
        if cached is not None:
            return cached
        # a^(ord-1) is the inverse; avoids scanning all elements
        b = self.power(a, self.element_order(a) - 1)
        self._inv[a] = b
        return b

    def commutator(self, a: int, b: int) -> int:
        ab = self._mul(a, b)
        return self._mul(ab, self._mul(self.inv(a), self.inv(b)))

    def coords(self, a: int):
        return self._coords(a) if self._coords else a

    def is_abelian(self) -> bool:
        return all(
            self._mul(a, b) == self._mul(b, a)
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def order_spectrum(self) -> tuple:
        """Sorted (order, count) pairs over all elements; an isomorphism invariant."""
        counts = {}
        for a in self.elements():
            o = self.element_order(a)
            counts[o] = counts.get(o, 0) + 1
        return tuple(sorted(counts.items()))

    def right_translation(self, x: int) -> tuple:
        """The permutation g -> g*x of the element indices."""
        return tuple(self._mul(g, x) for g in self.elements())

    def check_axioms(self):
        """Exhaustive associativity / identity / inverse check. O(n^3): small groups only."""
        n = self.order
        e = self.identity
        for a in range(n):
            if self._mul(a, e) != a or self._mul(e, a) != a:
                raise AssertionError(f"{e} is not an identity at {a}")
            if self._mul(a, self.inv(a)) != e or self._mul(self.inv(a), a) != e:
                raise AssertionError(f"no two-sided inverse for {a}")
        for a in range(n):
            for b in range(n):
                ab = self._mul(a, b)
                for c in range(n):
                    if self._mul(ab, c) != self._mul(a, self._mul(b, c)):
                        raise AssertionError(f"associativity fails at ({a},{b},{c})")

    def as_table(self) -> list:
        """Materialize the full multiplication table."""
        return [
            [self._mul(a, b) for b in range(self.order)] for a in range(self.order)
        ]

    def regular_perms(self) -> list:
        """Right-regular permutation realization, one row per element."""
        return [self.right_translation(x) for x in self.elements()]

    @staticmethod
    def from_table(table, label: str = "", coords=None) -> "FiniteGroup":
        n = len(table)
        identity = next(
            a for a in range(n) if all(table[a][b] == b for b in range(n))
        )
        return FiniteGroup(
            n, lambda a, b: table[a][b], identity=identity, label=label, coords=coords
        )


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as the set of member indices of its parent group."""

    parent: FiniteGroup
    members: frozenset

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)


def closure_from_generators(gens, budget: int, label: str = "") -> FiniteGroup:
    """Group generated by permutations, elements numbered in BFS discovery order.

    The identity gets index 0 and each new product is numbered when first
    seen, so labels are stable for fixtures. Raises BudgetExceeded as soon
    as the closure passes ``budget`` elements.
    """
    gens = [perms.check_perm(g) for g in gens]
    degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise DegreeMismatch("generators have different degrees")
    if budget < 1:
        raise ValueError("budget must be at least 1")
    ident = perms.identity(degree)
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = perms.compose(p, g)
                if q not in index:
                    if len(elems) >= budget:
                        raise BudgetExceeded(
                            f"closure passed budget {budget}"
                        )
                    index[q] = len(elems)
                    elems.append(q)
                    new.append(q)
        frontier = new

    def mul(a, b, _elems=elems, _index=index):
        return _index[perms.compose(_elems[a], _elems[b])]

    label = label or f"closure of {len(gens)} permutations on {degree} points"
    return FiniteGroup(len(elems), mul, identity=0, label=label, perms_list=elems)


def subgroup_generated(G: FiniteGroup, elems) -> Subgroup:
    """Closure of a set of elements under multiplication (BFS on indices)."""
    members = {G.identity}
    gens = list(elems)
    frontier = [G.identity]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = G.mul(a, g)
                if b not in members:
                    members.add(b)
                    new.append(b)
        frontier = new
    return Subgroup(G, frozenset(members))


def generates(G: FiniteGroup, elems) -> bool:
    return subgroup_generated(G, elems).order == G.order


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    """Smallest subgroup containing every commutator.

    Computed as the normal closure of the generator commutators, which
    equals the closure of all commutators at a fraction of the cost;
    the exhaustive variant below stays available as a cross-check.
    """
    gens = generating_set(G)
    if not gens:
        return Subgroup(G, frozenset({G.identity}))
    seeds = {G.commutator(s, t) for s in gens for t in gens}
    while True:
        H = subgroup_generated(G, seeds)
        conj = {
            G.mul(G.mul(g, h), G.inv(g)) for g in gens for h in H.members
        }
        new = conj - H.members
        if not new:
            return H
        seeds = H.members | new


def derived_subgroup_exhaustive(G: FiniteGroup) -> Subgroup:
    comms = {G.commutator(a, b) for a in G.elements() for b in G.elements()}
    return subgroup_generated(G, comms)


def center(G: FiniteGroup) -> Subgroup:
    members = frozenset(
        a
        for a in G.elements()
        if all(G.mul(a, b) == G.mul(b, a) for b in G.elements())
    )
    return Subgroup(G, members)


def generating_set(G: FiniteGroup) -> list:
    """A small generating set, found greedily.

    Candidates are scanned by decreasing element order (ties by lowest
    index) and each one that enlarges the running closure is kept, so the
    result is deterministic for a fixed element numbering.
    """
    if G.order == 1:
        return []
    ranked = sorted(G.elements(), key=lambda a: (-G.element_order(a), a))
    gens = []
    current = {G.identity}
    for a in ranked:
        if a in current:
            continue
        gens.append(a)
        current = set(subgroup_generated(G, gens).members)
        if len(current) == G.order:
            return gens
    raise AssertionError("scan exhausted without generating")  # pragma: no cover


def _hom_extension_images(G: FiniteGroup, H: FiniteGroup, gens, images):
    """Extend gens -> images to a map on all of G, or return None.

    Builds f by BFS over right multiplication by generators and checks
    f(a*g) = f(a)*f(g) on every edge, which forces the homomorphism
    property on the whole group.
    """
    f = {G.identity: H.identity}
    queue = [G.identity]
    while queue:
        a = queue.pop()
        fa = f[a]
        for g, fg in zip(gens, images):
            b = G.mul(a, g)
            fb = H.mul(fa, fg)
            known = f.get(b)
            if known is None:
                f[b] = fb
                queue.append(b)
            elif known != fb:
                return None
    if len(f) != G.order:
        return None  # gens did not generate; caller bug
    # consistency on edges out of every element
    for a, fa in f.items():
        for g, fg in zip(gens, images):
            if f[G.mul(a, g)] != H.mul(fa, fg):
                return None
    return f


def _iter_isomorphisms(G: FiniteGroup, H: FiniteGroup, gens):
    from itertools import product

    orders = [G.element_order(g) for g in gens]
    pools = []
    for o in orders:
        pools.append([b for b in H.elements() if H.element_order(b) == o])
    for images in product(*pools):
        f = _hom_extension_images(G, H, gens, images)
        if f is None:
            continue
        if len(set(f.values())) == G.order:
            yield f


def automorphism_count(G: FiniteGroup, bound: int = DEFAULT_ISO_BOUND) -> int:
    """Number of automorphisms, by backtracking over generator images.

    Candidate images are pruned to elements of matching order before any
    extension is attempted.
    """
    if G.order > bound:
        raise BudgetExceeded(f"order {G.order} beyond bound {bound}")
    if G.order == 1:
        return 1
    gens = generating_set(G)
    return sum(1 for _ in _iter_isomorphisms(G, G, gens))


def is_isomorphic(G: FiniteGroup, H: FiniteGroup, bound: int = DEFAULT_ISO_BOUND) -> bool:
    if G.order > bound or H.order > bound:
        raise BudgetExceeded(f"orders {G.order}, {H.order} beyond bound {bound}")
    if G.order != H.order:
        return False
    if G.order_spectrum() != H.order_spectrum():
        return False
    gens = generating_set(G)
    for _ in _iter_isomorphisms(G, H, gens):
        return True
    return False


def require_generating_pair(G: FiniteGroup, x: int, y: int):
    if not generates(G, (x, y)):
        raise NotGenerating(f"elements {x}, {y} generate a proper subgroup of {G.label}")


def direct_order_pair(G: FiniteGroup, x: int, y: int) -> int:
    return lcm(G.element_order(x), G.element_order(y))
