"""Finite group core: multiplication tables, subgroups, quotients, Sylow
subgroups over a normal subgroup, and coset transversal bookkeeping.

Groups are immutable after validation: elements are indices 0..n-1 with the
identity at 0, and all structure (classes, center, derived subgroup, ...) is
computed lazily and cached.
"""
from __future__ import annotations

from functools import cached_property
from math import gcd

MAX_GROUP_ORDER = 2000


class GroupError(ValueError):
    pass


class FiniteGroup:
    def __init__(self, table, labels=None, check: bool = True) -> None:
        self.n = len(table)
        if self.n == 0:
            raise GroupError("empty multiplication table")
        if self.n > MAX_GROUP_ORDER:
            raise GroupError(f"group order {self.n} exceeds cap {MAX_GROUP_ORDER}")
        self.table = tuple(tuple(row) for row in table)
        self.labels = tuple(labels) if labels is not None else None
        if check:
            self._validate()
        self.inv = self._inverse_table()

    # -- construction checks --------------------------------------------

    def _validate(self) -> None:
        n = self.n
        for i, row in enumerate(self.table):
            if len(row) != n:
                raise GroupError("multiplication table is not square")
            if sorted(row) != list(range(n)):
                raise GroupError(f"row {i} is not a permutation of the elements")
        for j in range(n):
            if self.table[0][j] != j or self.table[j][0] != j:
                raise GroupError("element 0 is not a two-sided identity")
        if n <= 512:
            self._check_associativity_full()
        else:
            self._check_associativity_sampled()
        for i in range(n):
            if not any(self.table[i][j] == 0 for j in range(n)):
                raise GroupError(f"element {i} has no inverse")

    def _check_associativity_full(self) -> None:
        t = self.table
        if self.n > 64:
            import numpy as np

            a = np.array(t, dtype=np.int64)
            for i in range(self.n):
                if not (a[a[i], :] == a[i][a]).all():
                    raise GroupError("multiplication table is not associative")
            return
        n = self.n
        for i in range(n):
            ti = t[i]
            for j in range(n):
                tij = ti[j]
                tj = t[j]
                for k in range(n):
                    if t[tij][k] != ti[tj[k]]:
                        raise GroupError(
                            f"associativity fails at triple ({i},{j},{k})")

    def _check_associativity_sampled(self) -> None:
        import random

        rng = random.Random(0xA55)
        t = self.table
        for _ in range(200_000):
            i, j, k = rng.randrange(self.n), rng.randrange(self.n), rng.randrange(self.n)
            if t[t[i][j]][k] != t[i][t[j][k]]:
                raise GroupError(f"associativity fails at triple ({i},{j},{k})")

    def _inverse_table(self):
        inv = [0] * self.n
        for i in range(self.n):
            inv[i] = next(j for j in range(self.n) if self.table[i][j] == 0)
        return tuple(inv)

    # -- basic operations -------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return self.table[self.table[self.inv[g]][x]][g]

    def comm(self, x: int, y: int) -> int:
        """x^-1 y^-1 x y."""
        return self.table[self.table[self.inv[x]][self.inv[y]]][self.table[x][y]]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        out = 0
        while k:
            if k & 1:
                out = self.table[out][x]
            x = self.table[x][x]
            k >>= 1
        return out

    def order_of(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.table[y][x]
            k += 1
        return k

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.order_of(x) for x in range(self.n))

    @cached_property
    def exponent(self) -> int:
        e = 1
        for o in set(self.element_orders):
            e = e // gcd(e, o) * o
        return e

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes sorted by smallest member; identity class first."""
        seen = [False] * self.n
        classes = []
        for x in range(self.n):
            if seen[x]:
                continue
            orbit = {self.conj(x, g) for g in range(self.n)}
            for y in orbit:
                seen[y] = True
            classes.append(tuple(sorted(orbit)))
        classes.sort(key=lambda c: c[0])
        return tuple(classes)

    @cached_property
    def class_of(self) -> tuple[int, ...]:
        out = [0] * self.n
        for ci, cls in enumerate(self.conjugacy_classes):
            for x in cls:
                out[x] = ci
        return tuple(out)

    @cached_property
    def inverse_class(self) -> tuple[int, ...]:
        return tuple(self.class_of[self.inv[cls[0]]] for cls in self.conjugacy_classes)

    @cached_property
    def center(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.n)
                     if all(self.table[x][g] == self.table[g][x] for g in range(self.n)))

    @cached_property
    def derived_members(self) -> tuple[int, ...]:
        gens = {self.comm(x, y) for x in range(self.n) for y in range(self.n)}
        return closure_members(self, gens)

    def is_abelian(self) -> bool:
        return len(self.center) == self.n

    def is_nilpotent(self) -> bool:
        lower = set(range(self.n))
        while True:
            nxt = closure_members(
                self, {self.comm(x, g) for x in lower for g in range(self.n)})
            if set(nxt) == lower:
                return len(lower) == 1
            lower = set(nxt)

    def __repr__(self):
        return f"FiniteGroup(order={self.n})"


def closure_members(G: FiniteGroup, gens) -> tuple[int, ...]:
    """Members of the subgroup generated by gens, as a sorted tuple."""
    members = {0}
    frontier = [0]
    gens = [g for g in gens]
    for g in gens:
        if g not in members:
            members.add(g)
            frontier.append(g)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = G.table[x][g]
                if y not in members:
                    members.add(y)
                    new.append(y)
                y = G.table[g][x]
                if y not in members:
                    members.add(y)
                    new.append(y)
        frontier = new
    # generators need not include inverses explicitly: finite order makes the
    # multiplicative closure a subgroup
    return tuple(sorted(members))


class Subgroup:
    """A subgroup of a parent FiniteGroup, stored by its sorted member set."""

    def __init__(self, parent: FiniteGroup, members, gens=None) -> None:
        self.parent = parent
        self.members = tuple(sorted(set(members)))
        self.gens = tuple(gens) if gens is not None else self.members
        self._mask = frozenset(self.members)
        if 0 not in self._mask:
            raise GroupError("subgroup must contain the identity")
        for x in self.members:
            if parent.inv[x] not in self._mask:
                raise GroupError("subgroup not closed under inverse")
            for y in self.members:
                if parent.table[x][y] not in self._mask:
                    raise GroupError("subgroup not closed under multiplication")
        self._group_view = None

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self._mask

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.parent is other.parent
                and self.members == other.members)

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __le__(self, other: "Subgroup") -> bool:
        return self._mask <= other._mask

    def is_normal_in(self, other=None) -> bool:
        amb = other.members if other is not None else range(self.parent.n)
        return all(self.parent.conj(x, g) in self._mask
                   for x in self.members for g in amb)

    def as_group(self):
        """Materialize as a FiniteGroup plus index maps to/from the parent."""
        if self._group_view is None:
            to_parent = self.members
            from_parent = {p: i for i, p in enumerate(to_parent)}
            table = [[from_parent[self.parent.table[a][b]] for b in to_parent]
                     for a in to_parent]
            grp = FiniteGroup(table, check=False)
            grp.inv = tuple(from_parent[self.parent.inv[p]] for p in to_parent)
            self._group_view = (grp, to_parent, from_parent)
        return self._group_view

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self._mask & other._mask)

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.n})"


def subgroup_closure(G: FiniteGroup, gens) -> Subgroup:
    return Subgroup(G, closure_members(G, gens), gens=tuple(gens))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,), gens=())


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, range(G.n))


# -- group construction -----------------------------------------------------


def group_from_table(table, labels=None) -> FiniteGroup:
    """Validated group from a full multiplication table.

    The identity may sit anywhere; elements are re-indexed so it lands at 0.
    """
    n = len(table)
    ident = None
    for e in range(n):
        if all(table[e][j] == j and table[j][e] == j for j in range(n)):
            ident = e
            break
    if ident is None:
        raise GroupError("table has no two-sided identity")
    order = [ident] + [x for x in range(n) if x != ident]
    pos = {x: i for i, x in enumerate(order)}
    newtab = [[pos[table[order[i]][order[j]]] for j in range(n)] for i in range(n)]
    newlabels = [labels[x] for x in order] if labels is not None else None
    return FiniteGroup(newtab, labels=newlabels)


def group_from_permutations(gen_perms, points: int) -> FiniteGroup:
    """Group generated by permutations of range(points).

    Elements are image tuples ordered lexicographically (identity first),
    making downstream indexing deterministic.
    """
    ident = tuple(range(points))
    for p in gen_perms:
        if sorted(p) != list(range(points)):
            raise GroupError(f"not a permutation of {points} points: {p}")
    elems = {ident}
    frontier = [ident]
    gens = [tuple(p) for p in gen_perms]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = tuple(x[g[i]] for i in range(points))
                if y not in elems:
                    if len(elems) >= MAX_GROUP_ORDER:
                        raise GroupError("permutation closure exceeds size cap")
                    elems.add(y)
                    new.append(y)
        frontier = new
    order = sorted(elems)
    order.remove(ident)
    order = [ident] + order
    pos = {p: i for i, p in enumerate(order)}
    table = [[pos[tuple(a[b[i]] for i in range(points))] for b in order] for a in order]
    labels = [",".join(map(str, p)) for p in order]
    return FiniteGroup(table, labels=labels, check=False)


def cycles_to_permutation(cycles, points: int) -> tuple[int, ...]:
    """Permutation (as image tuple on 0-based points) from 1-based cycles."""
    img = list(range(points))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def group_from_spec(spec: dict) -> FiniteGroup:
    """Build a group from its JSON description.

    Accepts {"table": [[...]], "labels": [...]} or
    {"perm_gens": [[[cycle], ...], ...], "points": k} with 1-based cycles.
    """
    if "table" in spec:
        return group_from_table(spec["table"], spec.get("labels"))
    if "perm_gens" in spec:
        points = spec["points"]
        perms = [cycles_to_permutation(cycles, points) for cycles in spec["perm_gens"]]
        return group_from_permutations(perms, points)
    raise GroupError("group spec needs either 'table' or 'perm_gens'")


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    n = A.n * B.n

    def idx(a, b):
        return a * B.n + b

    table = [[0] * n for _ in range(n)]
    for a1 in range(A.n):
        for b1 in range(B.n):
            for a2 in range(A.n):
                for b2 in range(B.n):
                    table[idx(a1, b1)][idx(a2, b2)] = idx(A.table[a1][a2], B.table[b1][b2])
    return FiniteGroup(table, check=False)


# -- standard subgroups ------------------------------------------------------


def standard_subgroups(G: FiniteGroup) -> dict:
    """Derived subgroup, center, conjugacy classes, and abelianization data."""
    derived = Subgroup(G, G.derived_members)
    quo, proj = quotient_group(G, derived)
    decomp = abelian_decomposition(quo)
    # pull factor generators back to G (any preimage representative)
    sections = []
    for gen, order in decomp:
        rep = next(x for x in range(G.n) if proj[x] == gen)
        sections.append((rep, order))
    return {
        "derived": derived,
        "center": Subgroup(G, G.center),
        "classes": G.conjugacy_classes,
        "abelianization": sections,
    }


def abelian_decomposition(A: FiniteGroup) -> list[tuple[int, int]]:
    """Cyclic factor generators with orders, largest order first.

    Extracts a maximal-order cyclic factor, finds a complement by subgroup
    search, and recurses inside the complement.
    """
    if not A.is_abelian():
        raise GroupError("abelian decomposition needs an abelian group")
    out = []
    current = full_subgroup(A)
    while current.order > 1:
        view, to_parent, _ = current.as_group()
        g_local = max(range(view.n), key=lambda x: (view.order_of(x), -x))
        d = view.order_of(g_local)
        gen = to_parent[g_local]
        out.append((gen, d))
        if view.n == d:
            break
        cyc = set(closure_members(view, [g_local]))
        target = view.n // d
        complement = None
        for sub in all_subgroups(view):
            if len(sub) == target and len(set(sub) & cyc) == 1:
                complement = sub
                break
        assert complement is not None, "abelian complement must exist"
        current = Subgroup(A, tuple(to_parent[x] for x in complement))
    return out


def all_subgroups(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All subgroups as sorted member tuples, deterministic order.

    Breadth-first closure starting from cyclic subgroups; fine at desk scale.
    """
    subs = {(0,)}
    frontier = [(0,)]
    cyclic = set()
    for x in range(1, G.n):
        cyclic.add(closure_members(G, [x]))
    for c in sorted(cyclic):
        if c not in subs:
            subs.add(c)
            frontier.append(c)
    while frontier:
        new = []
        for members in frontier:
            mem_set = set(members)
            for x in range(1, G.n):
                if x in mem_set:
                    continue
                bigger = closure_members(G, list(members) + [x])
                if bigger not in subs:
                    subs.add(bigger)
                    new.append(bigger)
        frontier = new
    return sorted(subs, key=lambda s: (len(s), s))


def subgroups_of(sub: Subgroup) -> list[Subgroup]:
    """All subgroups of `sub`, as Subgroups of the shared parent."""
    view, to_parent, _ = sub.as_group()
    return [Subgroup(sub.parent, tuple(to_parent[x] for x in members))
            for members in all_subgroups(view)]


# -- quotients and Sylow -----------------------------------------------------


def quotient_group(G: FiniteGroup, N: Subgroup):
    """(Q, proj) with Q the quotient group and proj the element -> coset map.

    The identity coset has index 0; cosets are ordered by smallest member.
    """
    if not N.is_normal_in():
        raise GroupError("quotient by a non-normal subgroup")
    coset_of = {}
    reps = []
    for x in range(G.n):
        if x in coset_of:
            continue
        members = sorted(G.table[x][n] for n in N.members)
        rep = members[0]
        for y in members:
            coset_of[y] = rep
        reps.append(rep)
    reps.sort()
    index = {rep: i for i, rep in enumerate(reps)}
    proj = tuple(index[coset_of[x]] for x in range(G.n))
    q = len(reps)
    table = [[proj[G.table[reps[i]][reps[j]]] for j in range(q)] for i in range(q)]
    Q = FiniteGroup(table, check=False)
    return Q, proj


def sylow_over(G: FiniteGroup, N: Subgroup, L: Subgroup, q: int,
               within: Subgroup | None = None) -> Subgroup:
    """L_q with N <= L_q <= L and |L_q/N| the q-part of |L/N|.

    Deterministic: first Sylow subgroup in the canonical subgroup enumeration
    of L/N.  When `within` is given (a stored L_p), returns L ∩ within, the
    standard compatible choice for K given L.
    """
    if within is not None:
        return L.intersection(within)
    if not N.is_normal_in(L):
        raise GroupError("N must be normal in L")
    index = L.order // N.order
    qpart = 1
    while index % q == 0:
        index //= q
        qpart *= q
    if qpart == 1:
        return Subgroup(G, N.members)
    view, to_parent, _ = L.as_group()
    N_local = Subgroup(view, tuple(sorted(
        i for i, p in enumerate(to_parent) if p in N)))
    Q, proj = quotient_group(view, N_local)
    target = None
    for members in all_subgroups(Q):
        if len(members) == qpart:
            target = set(members)
            break
    assert target is not None, "Sylow subgroup must exist"
    lifted = tuple(to_parent[x] for x in range(view.n) if proj[x] in target)
    return Subgroup(G, lifted)


# -- transversal data ---------------------------------------------------------


class TransversalData:
    """Coset representatives of N in G with all conjugation bookkeeping.

    reps[0] = identity; reps[:u] lie in K_p, reps[:u2] lie in L_p.  For
    representatives y_i (1-based tables are avoided: everything is 0-based):

      conj_coset[i][j], conj_part[i][j]:  y_i^-1 y_j y_i = y_c * d with d in N
      mul_coset[i][j],  mul_part[i][j]:   y_i y_j = y_c * a with a in N
      h_shift[i] (i < u): t_i in N with y_i t_i in H, the shifted reps forming
                          a transversal of N∩H in H
      conj_auto[i]: the automorphism n -> y_i n y_i^-1 of N as a permutation
                    of N.members positions
    """

    def __init__(self, G: FiniteGroup, N: Subgroup, K_p: Subgroup, L_p: Subgroup,
                 H: Subgroup, rep_order=None) -> None:
        if not N.is_normal_in():
            raise GroupError("N must be normal in G")
        if not (N <= K_p and K_p <= L_p):
            raise GroupError("need N <= K_p <= L_p")
        if not all(h in K_p for h in H.members):
            raise GroupError("need H <= K_p")
        prod = {G.table[h][n] for h in H.members for n in N.members}
        if prod != set(K_p.members):
            raise GroupError("not a complement-spanning subgroup: HN != K_p")
        self.G, self.N, self.K_p, self.L_p, self.H = G, N, K_p, L_p, H
        self.u = K_p.order // N.order
        self.u2 = L_p.order // N.order
        self.m = G.n // N.order
        self.reps = self._build_reps(rep_order)
        self.coset_index = {}
        for i, y in enumerate(self.reps):
            for nm in N.members:
                self.coset_index[G.table[y][nm]] = i
        self.h_shift = self._build_h_shifts()
        self.conj_coset, self.conj_part = self._build_conj_tables()
        self.mul_coset, self.mul_part = self._build_mul_tables()
        self.conj_auto = self._build_conj_autos()
        self.n_pos = {p: i for i, p in enumerate(N.members)}
        self._check_invariants()

    def _build_reps(self, rep_order):
        G, N = self.G, self.N
        seen = set()
        blocks = {0: [], 1: [], 2: []}
        for x in range(G.n):
            if x in seen:
                continue
            coset = sorted(G.table[x][nm] for nm in N.members)
            for y in coset:
                seen.add(y)
            rep = coset[0]
            if rep in self.K_p:
                blocks[0].append(rep)
            elif rep in self.L_p:
                blocks[1].append(rep)
            else:
                blocks[2].append(rep)
        reps = sorted(blocks[0]) + sorted(blocks[1]) + sorted(blocks[2])
        assert reps[0] == 0
        if rep_order is not None:
            reps = [reps[i] for i in rep_order]
            assert reps[0] == 0, "identity must stay first"
        return tuple(reps)

    def _build_h_shifts(self):
        G, N, H = self.G, self.N, self.H
        shifts = []
        used_cosets = set()
        nh = N.intersection(H)
        for i in range(self.u):
            y = self.reps[i]
            t = next(nm for nm in N.members if G.table[y][nm] in H)
            shifts.append(t)
            h = G.table[y][t]
            coset = frozenset(G.table[h][w] for w in nh.members)
            assert coset not in used_cosets
            used_cosets.add(coset)
        assert len(used_cosets) == H.order // nh.order
        return tuple(shifts)

    def _build_conj_tables(self):
        G = self.G
        coset = [[0] * self.m for _ in range(self.m)]
        part = [[0] * self.m for _ in range(self.m)]
        for i, yi in enumerate(self.reps):
            inv_yi = G.inv[yi]
            for j, yj in enumerate(self.reps):
                z = G.table[G.table[inv_yi][yj]][yi]
                c = self.coset_index[z]
                coset[i][j] = c
                part[i][j] = G.table[G.inv[self.reps[c]]][z]
        return tuple(map(tuple, coset)), tuple(map(tuple, part))

    def _build_mul_tables(self):
        G = self.G
        coset = [[0] * self.m for _ in range(self.m)]
        part = [[0] * self.m for _ in range(self.m)]
        for i, yi in enumerate(self.reps):
            for j, yj in enumerate(self.reps):
                z = G.table[yi][yj]
                c = self.coset_index[z]
                coset[i][j] = c
                part[i][j] = G.table[G.inv[self.reps[c]]][z]
        return tuple(map(tuple, coset)), tuple(map(tuple, part))

    def _build_conj_autos(self):
        G, N = self.G, self.N
        pos = {p: i for i, p in enumerate(N.members)}
        autos = []
        for y in self.reps:
            inv_y = G.inv[y]
            autos.append(tuple(pos[G.table[G.table[y][nm]][inv_y]]
                               for nm in N.members))
        return tuple(autos)

    def apply_auto(self, i: int, n: int) -> int:
        """y_i n y_i^-1 for n a parent element of N."""
        return self.N.members[self.conj_auto[i][self.n_pos[n]]]

    def apply_auto_inv(self, i: int, n: int) -> int:
        """y_i^-1 n y_i."""
        target = self.n_pos[n]
        src = self.conj_auto[i].index(target)
        return self.N.members[src]

    def decompose(self, x: int):
        """(i, n) with x = y_i n."""
        i = self.coset_index[x]
        return i, self.G.table[self.G.inv[self.reps[i]]][x]

    def _check_invariants(self):
        G, N = self.G, self.N
        assert self.reps[0] == 0
        for i in range(self.m):
            assert self.conj_coset[i][0] == 0 and self.conj_part[i][0] == 0
            assert self.mul_coset[0][i] == i and self.mul_part[0][i] == 0
        for i in range(self.m):
            yi = self.reps[i]
            for j in range(self.m):
                yj = self.reps[j]
                c, d = self.conj_coset[i][j], self.conj_part[i][j]
                assert d in N
                assert G.table[G.table[G.inv[yi]][yj]][yi] == G.table[self.reps[c]][d]
                c, a = self.mul_coset[i][j], self.mul_part[i][j]
                assert a in N
                assert G.table[yi][yj] == G.table[self.reps[c]][a]


def transversal_data(G: FiniteGroup, N: Subgroup, K_p: Subgroup, L_p: Subgroup,
                     H: Subgroup, rep_order=None) -> TransversalData:
    return TransversalData(G, N, K_p, L_p, H, rep_order=rep_order)
