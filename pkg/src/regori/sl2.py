"""Determinant-one 2x2 matrices over a prime field.

Covers exact arithmetic, elements of prescribed order, the two-trace
generation test, a breadth-first closure oracle, generating pairs with a
prescribed commutator order, and the projective family feeding the
translation-group search.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BudgetExceeded,
    InternalAssertion,
    ModulusMismatch,
    NoSuchOrder,
    OrderTooSmall,
    PreconditionViolated,
)
from .groups import FiniteGroup
from .numtheory import is_prime

DEFAULT_SL2_CAP = 101


@dataclass(frozen=True)
class Mat2:
    """A matrix [[a, b], [c, d]] over F_p with determinant one."""

    p: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % self.p)
        if (self.a * self.d - self.b * self.c) % self.p != 1:
            raise ValueError(f"determinant of {self} is not 1 mod {self.p}")

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]@{self.p}"

    @property
    def trace(self) -> int:
        return (self.a + self.d) % self.p


def mat_identity(p: int) -> Mat2:
    return Mat2(p, 1, 0, 0, 1)


def mat_neg(M: Mat2) -> Mat2:
    return Mat2(M.p, -M.a, -M.b, -M.c, -M.d)


def _same_field(M: Mat2, N: Mat2):
    if M.p != N.p:
        raise ModulusMismatch(f"matrices over F_{M.p} and F_{N.p}")


def mat_mul(M: Mat2, N: Mat2) -> Mat2:
    _same_field(M, N)
    p = M.p
    return Mat2(
        p,
        M.a * N.a + M.b * N.c,
        M.a * N.b + M.b * N.d,
        M.c * N.a + M.d * N.c,
        M.c * N.b + M.d * N.d,
    )


def mat_inv(M: Mat2) -> Mat2:
    return Mat2(M.p, M.d, -M.b, -M.c, M.a)


def trace(M: Mat2) -> int:
    return M.trace


def mat_order(M: Mat2) -> int:
    """Smallest k >= 1 with M^k = Id; capped at the full group order."""
    cap = M.p * (M.p - 1) * (M.p + 1)
    ident = mat_identity(M.p)
    x = M
    for k in range(1, cap + 1):
        if x == ident:
            return k
        x = mat_mul(x, M)
    raise InternalAssertion(f"order of {M} beyond group order")  # pragma: no cover


def commutator(A: Mat2, B: Mat2) -> Mat2:
    return mat_mul(mat_mul(A, B), mat_mul(mat_inv(A), mat_inv(B)))


def standard_b(p: int) -> Mat2:
    return Mat2(p, 0, -1, 1, 0)


def order_d_element(p: int, d: int) -> Mat2:
    """An element of order exactly d with trace != +-2.

    For d | p - 1 the smallest diagonalizable witness diag(l, 1/l) is
    returned; for d | p + 1 the companion matrix of the right trace is
    found by scanning trace values.
    """
    if not is_prime(p) or p == 2:
        raise NoSuchOrder(f"{p} is not an odd prime")
    if d < 3:
        raise NoSuchOrder(f"order {d} below 3")
    if (p - 1) % d == 0:
        for lam in range(2, p):
            if _mult_order(lam, p) == d:
                return Mat2(p, lam, 0, 0, pow(lam, -1, p))
        raise InternalAssertion(f"no order-{d} unit mod {p}")  # pragma: no cover
    if (p + 1) % d == 0:
        for t in range(p):
            M = Mat2(p, t, -1, 1, 0)
            if mat_order(M) == d:
                return M
        raise InternalAssertion(f"no order-{d} companion matrix mod {p}")
    raise NoSuchOrder(f"{p} is not +-1 mod {d}")


def _mult_order(x: int, p: int) -> int:
    k, y = 1, x % p
    while y != 1:
        y = y * x % p
        k += 1
        if k > p:
            raise InternalAssertion(f"{x} is not a unit mod {p}")
    return k


def _bounded_subgroup_size(p: int, A: Mat2, B: Mat2, cap: int):
    """|<A, B>| when it is at most cap, else None. Pure breadth-first walk."""
    gens = [(A.a, A.b, A.c, A.d), (B.a, B.b, B.c, B.d)]
    ident = (1, 0, 0, 1)
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for (a, b, c, d) in frontier:
            for (e, f, g, h) in gens:
                prod = (
                    (a * e + b * g) % p,
                    (a * f + b * h) % p,
                    (c * e + d * g) % p,
                    (c * f + d * h) % p,
                )
                if prod not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(prod)
                    new.append(prod)
        frontier = new
    return len(seen)


def mw_generates(p: int, A: Mat2, B: Mat2) -> bool:
    """Trace test for generation, applicable once the commutator order is >= 6.

    Generation holds iff at least two of tr(A), tr(B), tr(AB) are nonzero
    and tr([A,B]) != 2, provided the pair does not land in an exceptional
    subgroup. Commutator orders 6 and 10 project to orders 3 and 5, which
    the exceptional groups do admit, so those two cases get an extra
    bounded closure: every exceptional subgroup has at most 120 elements.
    """
    if p < 13 or not is_prime(p):
        raise PreconditionViolated(f"trace test needs a prime p >= 13, got {p}")
    _same_field(A, B)
    comm = commutator(A, B)
    comm_order = mat_order(comm)
    if comm_order < 6:
        raise OrderTooSmall("commutator order below 6: use the closure oracle")
    nonzero = sum(1 for t in (A.trace, B.trace, mat_mul(A, B).trace) if t != 0)
    if not (nonzero >= 2 and comm.trace != 2):
        return False
    if comm_order in (6, 10) and _bounded_subgroup_size(p, A, B, 121) is not None:
        return False
    return True


def _encode(mats: np.ndarray, p: int) -> np.ndarray:
    return ((mats[:, 0, 0] * p + mats[:, 0, 1]) * p + mats[:, 1, 0]) * p + mats[:, 1, 1]


def closure_order(p: int, A: Mat2, B: Mat2, cap: int = DEFAULT_SL2_CAP) -> int:
    """Exact order of <A, B> by breadth-first closure over encoded matrices."""
    if p > cap:
        raise BudgetExceeded(f"p = {p} beyond closure cap {cap}")
    _same_field(A, B)
    gens = np.array(
        [[[A.a, A.b], [A.c, A.d]], [[B.a, B.b], [B.c, B.d]]], dtype=np.int64
    )
    frontier = np.array([[[1, 0], [0, 1]]], dtype=np.int64)
    seen = {int(_encode(frontier, p)[0])}
    while len(frontier):
        prods = np.einsum("iab,gbc->igac", frontier, gens) % p
        prods = prods.reshape(-1, 2, 2)
        keys, first = np.unique(_encode(prods, p), return_index=True)
        fresh = []
        for pos, key in zip(first.tolist(), keys.tolist()):
            if key not in seen:
                seen.add(key)
                fresh.append(pos)
        frontier = prods[fresh]
    return len(seen)


def _two_square_reps(p: int, a: int):
    """All (s, t) with s, t nonzero and s^2 + t^2 = a mod p, scan order."""
    roots = {}
    for t in range(p):
        sq = t * t % p
        if sq not in roots:
            roots[sq] = t
    for s in range(1, p):
        t = roots.get((a - s * s) % p)
        if t:
            yield s, t


def build_generating_pair(p: int, d: int) -> tuple:
    """(A, B) generating SL(2,p) with ord([A, B]) = d and B of order four.

    B is the standard symplectic rotation. A is assembled so the commutator
    trace matches an order-d element: solve x^2 - 4 = (2s)^2 + t^2 with
    t != +-x, put u = (x + t)/2, split u into two-square representations,
    and take the first branch whose pair verifies outright (trace test
    plus commutator order). Scanning all representations instead of two
    matters for d in {6, 10}, where a branch can land in an exceptional
    subgroup.
    """
    if (p, d) in _SPECIAL_PAIRS:
        A, B = _SPECIAL_PAIRS[(p, d)]
        return Mat2(p, *A), Mat2(p, *B)
    if p <= 13 or not is_prime(p):
        raise PreconditionViolated(f"need a prime p > 13, got {p}")
    if d < 6:
        raise PreconditionViolated(f"need commutator order >= 6, got {d}")
    if (p - 1) % d and (p + 1) % d:
        raise PreconditionViolated(f"{p} is not +-1 mod {d}")

    x = order_d_element(p, d).trace
    B = standard_b(p)
    inv2 = pow(2, -1, p)
    for sig, tau in _two_square_reps(p, (x * x - 4) % p):
        if tau in (x % p, (-x) % p):
            continue
        s, t = sig * inv2 % p, tau
        u = (x + t) * inv2 % p
        if u == 0:
            continue
        for a, c in _two_square_reps(p, u):
            denom = pow((a * a + c * c) % p, -1, p)
            for eps in (1, p - 1):
                b = (-c + eps * a * s) * denom % p
                dd = (1 + b * c) * pow(a, -1, p) % p
                if (a + dd) % p == 0 or (b - c) % p == 0:
                    continue
                A = Mat2(p, a, b, c, dd)
                if mat_order(commutator(A, B)) != d:
                    continue
                if mw_generates(p, A, B):
                    return A, B
    raise InternalAssertion(f"no verified pair found for (p={p}, d={d})")


# explicit pairs below the general construction's reach
_SPECIAL_PAIRS = {
    (11, 12): ((1, 2, 0, 1), (0, -1, 1, 0)),
    (13, 12): ((2, 4, 0, 7), (0, -1, 1, 0)),
}


def psl_group(p: int, A: Mat2, B: Mat2, cap: int = DEFAULT_SL2_CAP):
    """PSL(2,p) generated by the images of A and B, as an indexed group.

    The full matrix closure is built first; classes {M, -M} are numbered by
    their smaller encoding, discovery order. Returns (group, a, b).
    """
    if p > cap:
        raise BudgetExceeded(f"p = {p} beyond closure cap {cap}")
    _same_field(A, B)
    ident = (1, 0, 0, 1)
    mats = {ident}
    order = [ident]
    frontier = [ident]
    gens = [(A.a, A.b, A.c, A.d), (B.a, B.b, B.c, B.d)]
    while frontier:
        new = []
        for (a, b, c, d) in frontier:
            for (e, f, g, h) in gens:
                prod = (
                    (a * e + b * g) % p,
                    (a * f + b * h) % p,
                    (c * e + d * g) % p,
                    (c * f + d * h) % p,
                )
                if prod not in mats:
                    mats.add(prod)
                    order.append(prod)
                    new.append(prod)
        frontier = new
    sl_size = len(order)
    if sl_size != p * (p - 1) * (p + 1):
        raise InternalAssertion(
            f"pair generates order {sl_size}, not SL(2,{p})"
        )

    def canon(mat):
        neg = tuple((-v) % p for v in mat)
        return min(mat, neg)

    index = {}
    reps = []
    for mat in order:
        c = canon(mat)
        if c not in index:
            index[c] = len(reps)
            reps.append(c)

    def mul(i, j, _reps=reps, _index=index, _p=p):
        a, b, c, d = _reps[i]
        e, f, g, h = _reps[j]
        prod = (
            (a * e + b * g) % _p,
            (a * f + b * h) % _p,
            (c * e + d * g) % _p,
            (c * f + d * h) % _p,
        )
        neg = tuple((-v) % _p for v in prod)
        return _index[min(prod, neg)]

    G = FiniteGroup(
        len(reps),
        mul,
        identity=index[canon(ident)],
        label=f"PSL(2,{p})",
        coords=lambda i: list(reps[i]),
    )
    return G, index[canon(gens[0])], index[canon(gens[1])]


def psl_family(m: int, p: int, k: int, cap: int = DEFAULT_SL2_CAP):
    """Regular-origami data (group, x, y, genus) over PSL(2,p) x Z/k.

    The generating pair downstairs has commutator order 2(m+1); upstairs it
    projects to order m+1, and the cyclic factor is threaded through the
    coprime split. Genus comes back as k*m*p(p-1)(p+1) / (4(m+1)) + 1.
    """
    if not is_prime(m) or m < 5 or m % 3 != 2:
        raise PreconditionViolated(f"need a prime m >= 5 with m = 2 mod 3, got {m}")
    if k < 1:
        raise PreconditionViolated("k must be positive")
    d = 2 * (m + 1)
    A, B = build_generating_pair(p, d)
    G, a, b = psl_group(p, A, B, cap=cap)
    comm = G.commutator(a, b)
    if G.element_order(comm) != m + 1:
        raise InternalAssertion("projective commutator order drifted")
    if k > 1:
        from .origami import extend_by_cyclic

        G, a, b = extend_by_cyclic(G, a, b, k)
    genus_num = k * m * p * (p - 1) * (p + 1)
    genus_den = 4 * (m + 1)
    if genus_num % genus_den:
        raise InternalAssertion("genus formula not integral")
    genus = genus_num // genus_den + 1
    if G.order * m != 2 * (m + 1) * (genus - 1):
        raise InternalAssertion("order and genus disagree")
    return G, a, b, genus
