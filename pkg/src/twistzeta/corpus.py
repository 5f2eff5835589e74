"""Built-in test corpus: small groups with a designated normal p-subgroup.

Each entry returns (G, N, p) where N is given as a Subgroup of G.  These are
the desk-scale models used by the verification harness: cyclic and dihedral
2-groups, both extraspecial groups of order 27, a mixed-order example with a
quaternion normal subgroup, and the order-16 modular group.
"""
from __future__ import annotations

from .groups import (
    FiniteGroup,
    Subgroup,
    direct_product,
    group_from_table,
    subgroup_closure,
)

# quaternion units 1,-1,i,-i,j,-j,k,-k as (sign, axis) with axis 0 -> scalar
_QUAT = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]


def _quat_mul(a: str, b: str) -> str:
    def split(x):
        return (-1, x[1:]) if x.startswith("-") else (1, x)
    sa, ua = split(a)
    sb, ub = split(b)
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
    }
    s, u = table[(ua, ub)]
    s *= sa * sb
    return u if s == 1 else "-" + u


def quaternion_group() -> FiniteGroup:
    idx = {q: i for i, q in enumerate(_QUAT)}
    table = [[idx[_quat_mul(a, b)] for b in _QUAT] for a in _QUAT]
    return group_from_table(table, labels=_QUAT)


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, labels=[f"g{i}" for i in range(n)])


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral of order 2n; elements (r^i s^e) coded as i + n*e."""
    size = 2 * n

    def mul(x, y):
        i, e = x % n, x // n
        j, f = y % n, y // n
        # (r^i s^e)(r^j s^f) = r^(i + j*(-1)^e) s^(e+f)
        k = (i + (j if e == 0 else -j)) % n
        return k + n * ((e + f) % 2)

    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    return group_from_table(table)


def heisenberg_27() -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over F_3 (extraspecial, exponent 3)."""
    elems = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    idx = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        a, b, c = x
        d, e, f = y
        return ((a + d) % 3, (b + e) % 3, (c + f + a * e) % 3)

    table = [[idx[mul(x, y)] for y in elems] for x in elems]
    labels = [f"({a},{b},{c})" for a, b, c in elems]
    return group_from_table(table, labels=labels)


def extraspecial_27_exponent9() -> FiniteGroup:
    """C9 semidirect C3 with b a b^-1 = a^4 (extraspecial, exponent 9)."""
    elems = [(x, y) for x in range(9) for y in range(3)]
    idx = {e: i for i, e in enumerate(elems)}

    def mul(p, q):
        x, y = p
        u, v = q
        # a^x b^y a^u b^v = a^(x + 4^y u) b^(y+v)
        return ((x + pow(4, y, 9) * u) % 9, (y + v) % 3)

    table = [[idx[mul(p, q)] for q in elems] for p in elems]
    labels = [f"a{x}b{y}" for x, y in elems]
    return group_from_table(table, labels=labels)


def modular_group_16() -> FiniteGroup:
    """Modular (semidihedral-like) group of order 16: b a b^-1 = a^5."""
    elems = [(x, y) for x in range(8) for y in range(2)]
    idx = {e: i for i, e in enumerate(elems)}

    def mul(p, q):
        x, y = p
        u, v = q
        return ((x + pow(5, y, 8) * u) % 8, (y + v) % 2)

    table = [[idx[mul(p, q)] for q in elems] for p in elems]
    labels = [f"a{x}b{y}" for x, y in elems]
    return group_from_table(table, labels=labels)


def sl23() -> FiniteGroup:
    """SL(2, 3): 2x2 matrices of determinant 1 over F_3."""
    mats = []
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if (a * d - b * c) % 3 == 1:
                        mats.append((a, b, c, d))
    idx = {m: i for i, m in enumerate(mats)}

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3,
                (c * e + d * g) % 3, (c * f + d * h) % 3)

    table = [[idx[mul(x, y)] for y in mats] for x in mats]
    labels = [f"[{a}{b};{c}{d}]" for a, b, c, d in mats]
    return group_from_table(table, labels=labels)


def c2_times_q8() -> FiniteGroup:
    return direct_product(cyclic_group(2), quaternion_group())


def _center_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, G.center)


def _corpus_c4_c2():
    G = cyclic_group(4)
    N = subgroup_closure(G, [2])  # the order-2 subgroup
    return G, N, 2


def _corpus_d4():
    G = dihedral_group(4)
    return G, _center_subgroup(G), 2


def _corpus_q8():
    G = quaternion_group()
    return G, _center_subgroup(G), 2


def _corpus_heis27_center():
    G = heisenberg_27()
    return G, _center_subgroup(G), 3


def _corpus_heis27_self():
    G = heisenberg_27()
    return G, Subgroup(G, range(G.n)), 3


def _corpus_ex27_9_center():
    G = extraspecial_27_exponent9()
    return G, _center_subgroup(G), 3


def _corpus_ex27_9_self():
    G = extraspecial_27_exponent9()
    return G, Subgroup(G, range(G.n)), 3


def _corpus_c2q8():
    G = c2_times_q8()
    # the quaternion factor: elements (0, q)
    members = [i for i in range(G.n) if i < 8]
    return G, Subgroup(G, members), 2


def _corpus_mod16():
    G = modular_group_16()
    return G, _center_subgroup(G), 2


def _corpus_sl23():
    G = sl23()
    # quaternion Sylow-2 subgroup: all elements of order dividing 4
    members = [x for x in range(G.n) if G.order_of(x) in (1, 2, 4)]
    return G, Subgroup(G, members), 2


CORPUS = {
    "c4_c2": _corpus_c4_c2,
    "d4": _corpus_d4,
    "q8": _corpus_q8,
    "heis27": _corpus_heis27_center,
    "heis27_self": _corpus_heis27_self,
    "ex27_9": _corpus_ex27_9_center,
    "ex27_9_self": _corpus_ex27_9_self,
    "c2q8": _corpus_c2q8,
    "mod16": _corpus_mod16,
    "sl23": _corpus_sl23,
}


def corpus_entry(name: str):
    if name not in CORPUS:
        raise KeyError(f"unknown corpus entry: {name} (have {sorted(CORPUS)})")
    return CORPUS[name]()


def corpus_names() -> list[str]:
    return list(CORPUS)
