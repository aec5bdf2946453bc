"""Witness descriptors: a compact grammar for constructible groups.

Grammar (whitespace-free):
    c(N)            cyclic group of order N, generators (1, 0)
    sd(M,N,D)       Z/M twisted by Z/N with multiplier D, generators (1,0), (0,1)
    dp(DESC,c(K))   cyclic extension of DESC by Z/K through the coprime split
    klein(L)        (Z/L x Z/2 x Z/2) : Z/3 with its standard pair
    q8w(L)          (Z/L x Q8) : Z/3 with its standard pair
    psl(P,D)        PSL(2,P) from the order-D commutator pair downstairs

Descriptors are cheap to pass around; materializing one yields the group
and its generator pair, ready to be turned into an origami.
"""

from __future__ import annotations

from math import gcd

from . import constructions as cons
from .errors import RegoriError


def _split_args(body: str) -> list:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    return parts


def parse_descriptor(text: str):
    """(head, args) with args parsed recursively; numbers become ints."""
    text = text.strip()
    i = text.find("(")
    if i < 0 or not text.endswith(")"):
        raise ValueError(f"bad descriptor {text!r}")
    head = text[:i]
    body = text[i + 1 : -1]
    args = []
    for part in _split_args(body) if body else []:
        part = part.strip()
        if part.isdigit():
            args.append(int(part))
        else:
            args.append(parse_descriptor(part))
    return head, tuple(args)


def _fmt(node) -> str:
    if isinstance(node, int):
        return str(node)
    head, args = node
    return f"{head}({','.join(_fmt(a) for a in args)})"


def materialize(desc: str):
    """Build (group, x, y) for a descriptor string."""
    return _materialize(parse_descriptor(desc))


def _materialize(node):
    head, args = node
    if head == "c":
        (n,) = args
        G = cons.cyclic(n)
        return G, 1 % n, 0
    if head == "sd":
        m, n, d = args
        G = cons.semidirect_cyclic(m, n, d)
        x, y = cons.semidirect_generators(m, n)
        return G, x, y
    if head == "dp":
        base, ext = args
        if not (isinstance(ext, tuple) and ext[0] == "c"):
            raise ValueError(f"extension factor must be cyclic: {_fmt(node)}")
        from .origami import extend_by_cyclic

        G, x, y = _materialize(base)
        return extend_by_cyclic(G, x, y, ext[1][0])
    if head == "klein":
        (lam,) = args
        return cons.klein_witness(lam)
    if head == "q8w":
        (lam,) = args
        return cons.q8_witness(lam)
    if head == "psl":
        p, d = args
        from .sl2 import build_generating_pair, psl_group

        A, B = build_generating_pair(p, d)
        return psl_group(p, A, B)
    raise ValueError(f"unknown descriptor head {head!r}")


def descriptor_order(desc) -> int:
    """Group order of a descriptor without materializing it."""
    node = parse_descriptor(desc) if isinstance(desc, str) else desc
    head, args = node
    if head == "c":
        return args[0]
    if head == "sd":
        return args[0] * args[1]
    if head == "dp":
        return descriptor_order(args[0]) * args[1][1][0]
    if head == "klein":
        return 12 * args[0]
    if head == "q8w":
        return 24 * args[0]
    if head == "psl":
        p = args[0]
        return p * (p - 1) * (p + 1) // 2
    raise ValueError(f"unknown descriptor head {head!r}")


def descriptor_generator_orders(desc) -> tuple:
    """Orders of the canonical generator pair, computed symbolically.

    Cheap for the product families; the projective family computes two
    matrix orders. Used to test cyclic-extension slack without building
    any group.
    """
    node = parse_descriptor(desc) if isinstance(desc, str) else desc
    head, args = node
    if head == "c":
        return args[0], 1
    if head == "sd":
        return args[0], args[1]
    if head == "dp":
        from math import lcm

        from .origami import split_coprime

        ox, oy = descriptor_generator_orders(args[0])
        k = args[1][1][0]
        t, s = split_coprime(k, ox, oy)
        return lcm(ox, t), lcm(oy, s)
    if head == "klein":
        return 2 * args[0], 3
    if head == "q8w":
        return 4 * args[0], 3
    if head == "psl":
        p, d = args
        from .sl2 import build_generating_pair, mat_identity, mat_mul, mat_neg

        A, B = build_generating_pair(p, d)
        ident = mat_identity(p)
        nident = mat_neg(ident)

        def proj_order(M):
            x, e = M, 1
            while x != ident and x != nident:
                x = mat_mul(x, M)
                e += 1
            return e

        return proj_order(A), proj_order(B)
    raise ValueError(f"unknown descriptor head {head!r}")


def extension_slack_ok(desc: str, k: int) -> bool:
    """Whether a cyclic extension of degree k is available for this witness."""
    try:
        ox, oy = descriptor_generator_orders(desc)
    except RegoriError:
        return False
    return gcd(k, gcd(ox, oy)) == 1


def extend_descriptor(desc: str, k: int) -> str:
    return f"dp({desc},c({k}))"


def generator_coords(desc: str):
    """JSON-friendly coordinates of the canonical generators."""
    G, x, y = materialize(desc)
    return [G.coords(x), G.coords(y)]
