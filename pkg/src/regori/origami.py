"""Origamis: pairs of permutations gluing unit squares into a surface.

Squares are glued rightward by sigma_h and upward by sigma_v. The surface
must be connected, so the pair is required to act transitively. Building
from a group uses right multiplication for the gluings, which leaves left
multiplication free to act as translations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import perms
from .errors import CoprimalityViolated, InvalidGenus
from .groups import FiniteGroup, require_generating_pair
from .strata import Stratum


@dataclass(frozen=True)
class Origami:
    sigma_h: tuple
    sigma_v: tuple

    def __post_init__(self):
        h = perms.check_perm(self.sigma_h)
        v = perms.check_perm(self.sigma_v)
        object.__setattr__(self, "sigma_h", h)
        object.__setattr__(self, "sigma_v", v)
        if not perms.is_transitive_pair(h, v):
            raise ValueError("the squares are not connected")

    @property
    def n(self) -> int:
        return len(self.sigma_h)

    def serialize(self) -> str:
        return ";".join(
            (str(self.n), perms.format_perm(self.sigma_h), perms.format_perm(self.sigma_v))
        )

    @staticmethod
    def deserialize(text: str) -> "Origami":
        n_str, h_str, v_str = text.split(";")
        h, v = perms.parse_perm(h_str), perms.parse_perm(v_str)
        if len(h) != int(n_str):
            raise ValueError(f"square count {n_str} does not match {len(h)}")
        return Origami(h, v)


def regular_origami(G: FiniteGroup, x: int, y: int) -> Origami:
    """Label squares by group elements; glue rightward by *x and upward by *y."""
    require_generating_pair(G, x, y)
    return Origami(G.right_translation(x), G.right_translation(y))


def singularity_permutation(o: Origami) -> tuple:
    """sigma_h sigma_v sigma_h^-1 sigma_v^-1; its long cycles mark the zeros."""
    return perms.compose(
        perms.compose(o.sigma_h, o.sigma_v),
        perms.compose(perms.invert(o.sigma_h), perms.invert(o.sigma_v)),
    )


def stratum_of(o: Origami) -> Stratum:
    zeros = []
    for c in perms.cycles(singularity_permutation(o)):
        if len(c) >= 2:
            zeros.append(len(c) - 1)
    return Stratum(tuple(zeros))


def genus_of(o: Origami) -> int:
    cycles = perms.cycles(singularity_permutation(o))
    return (o.n - len(cycles)) // 2 + 1


def translations(o: Origami) -> list:
    """All square permutations commuting with both gluings.

    A translation is determined by the image of square 0: the unique
    equivariant extension either closes up or hits a contradiction.
    """
    n = o.n
    h, v = o.sigma_h, o.sigma_v
    hi, vi = perms.invert(h), perms.invert(v)
    out = []
    for j in range(n):
        tau = [-1] * n
        used = [False] * n
        tau[0] = j
        used[j] = True
        stack = [0]
        ok = True
        while stack and ok:
            p = stack.pop()
            tp = tau[p]
            for f in (h, v, hi, vi):
                q, tq = f[p], f[tp]
                if tau[q] == -1:
                    if used[tq]:
                        ok = False
                        break
                    tau[q] = tq
                    used[tq] = True
                    stack.append(q)
                elif tau[q] != tq:
                    ok = False
                    break
        if ok:
            out.append(tuple(tau))
    return out


def translation_group(o: Origami) -> FiniteGroup:
    """The translations as an indexed group; they are already closed."""
    taus = translations(o)
    index = {t: i for i, t in enumerate(taus)}

    def mul(a, b, _taus=taus, _index=index):
        return _index[perms.compose(_taus[a], _taus[b])]

    return FiniteGroup(
        len(taus),
        mul,
        identity=index[perms.identity(o.n)],
        label=f"translations of {o.n}-square origami",
        perms_list=taus,
    )


def is_regular(o: Origami) -> bool:
    return len(translations(o)) == o.n


def one_cylinder(g: int) -> Origami:
    """Genus-g origami on 4g-4 squares with a cyclic translation group of order 2g-2.

    One horizontal cylinder: sigma_h is the full cycle; sigma_v shifts the
    even squares halfway around and fixes the odd ones.
    """
    if g < 2:
        raise InvalidGenus(f"need genus at least 2, got {g}")
    d = 4 * g - 4
    sigma_h = tuple((i + 1) % d for i in range(d))
    sigma_v = tuple((2 * g - 2 + i) % d if i % 2 == 0 else i for i in range(d))
    return Origami(sigma_h, sigma_v)


def split_coprime(k: int, a: int, b: int) -> tuple:
    """Write k = t*s with t coprime to a, s coprime to b, t coprime to s.

    Needs gcd(k, gcd(a, b)) = 1: each prime power of k avoids a or b.
    """
    if gcd(k, gcd(a, b)) != 1:
        raise CoprimalityViolated(
            f"{k} shares a factor with both generator orders {a} and {b}"
        )
    t = s = 1
    rest = k
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            q = 1
            while rest % p == 0:
                q *= p
                rest //= p
            if a % p:
                t *= q
            else:
                s *= q
        p += 1
    if rest > 1:
        if a % rest:
            t *= rest
        else:
            s *= rest
    return t, s


def extend_by_cyclic(G: FiniteGroup, x: int, y: int, k: int) -> tuple:
    """Extend (G, x, y) to (G x Z/k, a, b) preserving the commutator order.

    The pair a = (x, u), b = (y, v) spreads the cyclic factor across the t*s
    split so that both components stay reachable; the new origami's stratum
    keeps the zero order and multiplies the multiplicity by k.
    """
    from .constructions import cyclic, direct_product
    from .numtheory import crt_solve

    a_ord = G.element_order(x)
    b_ord = G.element_order(y)
    t, s = split_coprime(k, a_ord, b_ord)
    u, _ = crt_solve([(1, t), (0, s)])
    v, _ = crt_solve([(0, t), (1, s)])
    H = direct_product(G, cyclic(k))
    a = x * k + u % k
    b = y * k + v % k
    require_generating_pair(H, a, b)
    return H, a, b
