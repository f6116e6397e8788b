"""Finite groups, permutation subgroups, and equivariance machinery.

Groups are Cayley tables over element indices 0..n-1.  The dihedral group of
order 2p stores r^i s^j at index i + p*j, so index arithmetic stays readable
throughout the catalog and descent code.

Permutation subgroups of Perm(G) are the central object: regularity,
normalization by left translations, bounded closure, exhaustive enumeration
of regular normalized subgroups for small G, and isomorphism searches that
can be required to commute with conjugation by a chosen set of translations.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product as iter_product
from math import gcd, lcm

DEFAULT_CLOSURE_BOUND = 10080
CLOSURE_BOUND_ENV = "HGL_CLOSURE_BOUND"


class ClosureBoundExceeded(RuntimeError):
    """Raised when a closure grows past the safety bound."""


class UnknownGroupType(ValueError):
    """Raised when iso_type meets a group outside its small catalog."""


def _closure_bound(bound=None):
    if bound is not None:
        return bound
    env = os.environ.get(CLOSURE_BOUND_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_CLOSURE_BOUND


@dataclass(frozen=True)
class Perm:
    """A permutation of {0..degree-1}, stored as its image tuple."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError("not a bijection")

    @classmethod
    def identity(cls, degree):
        return cls(tuple(range(degree)))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        """Composition: (self * other)(x) = self(other(x))."""
        return Perm(tuple(self.images[other.images[x]] for x in range(self.degree)))

    def inverse(self):
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Perm(tuple(inv))

    def is_identity(self):
        return all(self.images[x] == x for x in range(self.degree))

    def has_fixed_point(self):
        return any(self.images[x] == x for x in range(self.degree))

    def order(self):
        seen = [False] * self.degree
        result = 1
        for x in range(self.degree):
            if seen[x]:
                continue
            length = 0
            y = x
            while not seen[y]:
                seen[y] = True
                y = self.images[y]
                length += 1
            result = lcm(result, length)
        return result

    def power(self, k):
        out = Perm.identity(self.degree)
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group as a Cayley table with named elements."""

    table: tuple
    names: tuple
    identity: int
    generators: tuple

    @property
    def order(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    @cached_property
    def _inverses(self):
        inv = [None] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.table[a][b] == self.identity:
                    inv[a] = b
                    break
        return tuple(inv)

    def inv(self, a):
        return self._inverses[a]

    def element_order(self, a):
        k = 1
        x = a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def subgroup_generated(self, gens):
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return frozenset(seen)

    def all_subgroups(self):
        """All subgroups reachable from at most two generators.

        Complete for the groups used here (dihedral of prime degree, Klein
        four, small cyclic), whose subgroups are all 2-generated.
        """
        found = {frozenset({self.identity}): (self.identity,)}
        for a in range(self.order):
            for b in range(a, self.order):
                s = self.subgroup_generated([a, b])
                if s not in found:
                    found[s] = (a, b) if a != b else (a,)
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def center(self):
        return tuple(a for a in range(self.order)
                     if all(self.mul(a, b) == self.mul(b, a) for b in range(self.order)))

    def check_axioms(self):
        n = self.order
        for a in range(n):
            if self.mul(self.identity, a) != a or self.mul(a, self.identity) != a:
                raise AssertionError("identity law fails")
            if self.inv(a) is None:
                raise AssertionError("missing inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        raise AssertionError("associativity fails")


def _is_odd_prime(p):
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def dihedral(p):
    """Dihedral group of order 2p for an odd prime p; r^i s^j at index i+p*j."""
    if not isinstance(p, int) or not _is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")

    def idx(i, j):
        return i % p + p * (j % 2)

    table = []
    for a in range(2 * p):
        i, j = a % p, a // p
        row = []
        for b in range(2 * p):
            k, l = b % p, b // p
            # (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j+l)
            row.append(idx(i + (k if j == 0 else -k), j + l))
        table.append(tuple(row))

    def name(a):
        i, j = a % p, a // p
        rpart = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
        spart = "s" if j else ""
        return (rpart + spart) or "1"

    return FiniteGroup(tuple(table), tuple(name(a) for a in range(2 * p)),
                       identity=0, generators=(idx(1, 0), idx(0, 1)))


def elementary_abelian_4():
    """The Klein four group; r^i s^j at index i + 2j."""
    table = []
    for a in range(4):
        i, j = a % 2, a // 2
        table.append(tuple((i + k) % 2 + 2 * ((j + l) % 2)
                           for k, l in ((b % 2, b // 2) for b in range(4))))
    return FiniteGroup(tuple(table), ("1", "r", "s", "rs"),
                       identity=0, generators=(1, 2))


def cyclic(n):
    """Cyclic group of order n."""
    if n < 1:
        raise ValueError("order must be positive")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    names = tuple("1" if a == 0 else ("g" if a == 1 else f"g^{a}") for a in range(n))
    return FiniteGroup(table, names, identity=0, generators=(1 % n,))


@dataclass(frozen=True)
class PermSubgroup:
    """A subgroup of Perm({0..degree-1}) given by its element list.

    The element order is part of the value: constructors choose it
    deterministically (group order for translation subgroups, generator
    powers for cyclic catalog entries, sorted image tuples for closures).
    """

    degree: int
    elements: tuple
    label: str = None
    element_names: tuple = None

    @property
    def order(self):
        return len(self.elements)

    @cached_property
    def _position(self):
        return {p.images: t for t, p in enumerate(self.elements)}

    def __contains__(self, perm):
        return perm.images in self._position

    def index_of(self, perm):
        return self._position[perm.images]

    @cached_property
    def identity_position(self):
        return self.index_of(Perm.identity(self.degree))

    @cached_property
    def mult_table(self):
        return tuple(tuple(self.index_of(a * b) for b in self.elements)
                     for a in self.elements)

    @cached_property
    def inverse_table(self):
        return tuple(self.index_of(a.inverse()) for a in self.elements)

    @cached_property
    def element_orders(self):
        return tuple(a.order() for a in self.elements)

    def canonical_key(self):
        return tuple(sorted(p.images for p in self.elements))

    def verify_subgroup(self):
        if Perm.identity(self.degree) not in self:
            return False
        for a in self.elements:
            if a.inverse() not in self:
                return False
            for b in self.elements:
                if (a * b) not in self:
                    return False
        return True

    def name_of(self, t):
        if self.element_names is not None:
            return self.element_names[t]
        return f"n{t}"


def left_regular(G):
    """Left translations g -> (h -> gh), in group element order."""
    elems = tuple(Perm(tuple(G.table[g])) for g in range(G.order))
    return PermSubgroup(G.order, elems, label="lambda",
                        element_names=tuple(f"lam[{n}]" for n in G.names))


def right_regular(G):
    """Right translations g -> (h -> h g^-1), in group element order."""
    elems = tuple(Perm(tuple(G.table[h][G.inv(g)] for h in range(G.order)))
                  for g in range(G.order))
    return PermSubgroup(G.order, elems, label="rho",
                        element_names=tuple(f"rho[{n}]" for n in G.names))


def is_regular(N):
    """Regular subgroup: order equals degree and only the identity has a
    fixed point."""
    if N.order != N.degree:
        return False
    return all(p.is_identity() or not p.has_fixed_point() for p in N.elements)


def conj_by(g, p):
    """Conjugate g p g^-1."""
    return g * p * g.inverse()


def is_normalized_by(N, translations):
    """Whether every conjugate of N by the given perms stays inside N."""
    for g in translations.elements:
        for p in N.elements:
            if conj_by(g, p) not in N:
                return False
    return True


def closure(gens, bound=None):
    """Subgroup generated by `gens`, elements sorted by image tuple.

    Aborts with ClosureBoundExceeded once more than `bound` elements appear
    (default DEFAULT_CLOSURE_BOUND, overridable via the HGL_CLOSURE_BOUND
    environment variable).
    """
    gens = list(gens)
    if not gens:
        raise ValueError("closure needs at least one generator")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("mixed degrees")
    bound = _closure_bound(bound)
    seen = {Perm.identity(degree).images: Perm.identity(degree)}
    frontier = [Perm.identity(degree)]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g
            if y.images not in seen:
                if len(seen) >= bound:
                    raise ClosureBoundExceeded(
                        f"closure exceeded bound {bound}")
                seen[y.images] = y
                frontier.append(y)
    elems = tuple(seen[img] for img in sorted(seen))
    return PermSubgroup(degree, elems)


def _invariant_closure(gens, lam_elements, max_order):
    """Closure under products and conjugation by `lam_elements`, pruned.

    Returns the element set, or None as soon as the closure acquires a
    non-identity element with a fixed point or grows past max_order.  Any
    regular subgroup normalized by the translations must contain this
    closure, which justifies the pruning.
    """
    degree = gens[0].degree
    ident = Perm.identity(degree)
    elems = {ident.images: ident}
    frontier = list(gens)
    for g in gens:
        elems[g.images] = g
    work = list(frontier)
    while work:
        x = work.pop()
        if not x.is_identity() and x.has_fixed_point():
            return None
        new = []
        for y in list(elems.values()):
            new.append(x * y)
            new.append(y * x)
        for lam in lam_elements:
            new.append(conj_by(lam, x))
        for z in new:
            if z.images not in elems:
                elems[z.images] = z
                work.append(z)
                if len(elems) > max_order:
                    return None
    for z in elems.values():
        if not z.is_identity() and z.has_fixed_point():
            return None
    return elems


def enumerate_regular_normalized(G):
    """All regular subgroups of Perm(G) normalized by left translations.

    Exhaustive search, restricted to |G| <= 8.  Seeds are fixed-point-free
    permutations; each seed is closed under group operations and conjugation
    by translations, which prunes almost everything immediately.  Seeds whose
    invariant closure stays proper are retried in pairs (every candidate
    subgroup of order <= 8 met here is generated by two of its elements).
    """
    n = G.order
    if n > 8:
        raise ValueError("exhaustive enumeration is limited to groups of order <= 8")
    lam = left_regular(G)
    ident = Perm.identity(n)
    seeds = []
    for images in permutations(range(n)):
        if all(images[i] != i for i in range(n)):
            seeds.append(Perm(images))

    found = {}
    partial = []
    for seed in seeds:
        closed = _invariant_closure([seed], lam.elements, n)
        if closed is None:
            continue
        if len(closed) == n:
            key = tuple(sorted(closed))
            if key not in found:
                found[key] = closed
        else:
            partial.append((seed, closed))

    for i, (a, ca) in enumerate(partial):
        for b, _ in partial[i + 1:]:
            if b.images in ca:
                continue
            closed = _invariant_closure([a, b], lam.elements, n)
            if closed is not None and len(closed) == n:
                key = tuple(sorted(closed))
                if key not in found:
                    found[key] = closed

    out = []
    for key in sorted(found):
        elems = tuple(found[key][img] for img in key)
        N = PermSubgroup(n, elems)
        assert is_regular(N) and is_normalized_by(N, lam)
        out.append(N)
    return out


def _order_mod(k, n):
    # order of k in Z/n
    return n // gcd(k, n)


def _cyclic_census(n):
    return Counter(_order_mod(k, n) for k in range(n))


def _dihedral_census(m):
    census = Counter(_order_mod(k, m) for k in range(m))
    census[2] += m
    return census


def iso_type(N):
    """Isomorphism type label by element-order census.

    Supported orders: n <= 14, where the census separates cyclic and
    dihedral groups (and the Klein four group) from everything else, and
    n = 2q for an odd prime q, where C_2q and D_q are the only groups so
    the census is a complete invariant.
    """
    n = N.order
    if n > 14 and not (n % 2 == 0 and _is_odd_prime(n // 2)):
        raise ValueError(f"iso_type does not support order {n}")
    census = Counter(N.element_orders)
    if census == _cyclic_census(n):
        return f"C{n}"
    if n == 4 and census == Counter({1: 1, 2: 3}):
        return "C2xC2"
    if n % 2 == 0 and n // 2 >= 3 and census == _dihedral_census(n // 2):
        return f"D{n // 2}"
    raise UnknownGroupType(f"order census {dict(sorted(census.items()))} not in catalog")


@dataclass(frozen=True)
class GroupIso:
    """An isomorphism between two permutation subgroups, as a position map."""

    source: PermSubgroup
    target: PermSubgroup
    mapping: tuple

    def verify(self):
        A, B, m = self.source, self.target, self.mapping
        if sorted(m) != list(range(A.order)):
            return False
        for t in range(A.order):
            for u in range(A.order):
                if m[A.mult_table[t][u]] != B.mult_table[m[t]][m[u]]:
                    return False
        return True


def _closure_positions(N, gens):
    have = {N.identity_position}
    work = [N.identity_position]
    while work:
        x = work.pop()
        for g in gens:
            for z in (N.mult_table[x][g], N.mult_table[g][x]):
                if z not in have:
                    have.add(z)
                    work.append(z)
    return have


def minimal_generators(N):
    """Greedy minimal generating positions, scanning elements in order."""
    gens = []
    have = {N.identity_position}
    for t in range(N.order):
        if t in have:
            continue
        gens.append(t)
        have = _closure_positions(N, gens)
        if len(have) == N.order:
            break
    return tuple(gens)


def _expansion_recipe(N, gens):
    """Order every element as product of earlier ones and a generator.

    Returns a list of (position, parent_position, generator_position) with
    parent None for the identity, generator None for the generators
    themselves; following the list rebuilds any homomorphic image.
    """
    recipe = [(N.identity_position, None, None)]
    known = {N.identity_position}
    for g in gens:
        if g not in known:
            recipe.append((g, None, g))
            known.add(g)
    frontier = list(known)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = N.mult_table[x][g]
                if y not in known:
                    recipe.append((y, x, g))
                    known.add(y)
                    nxt.append(y)
        frontier = nxt
    if len(known) != N.order:
        raise AssertionError("generators do not generate")
    return recipe


def group_isomorphisms(A, B):
    """All isomorphisms A -> B, as GroupIso position maps."""
    if A.order != B.order:
        return []
    gens = minimal_generators(A)
    recipe = _expansion_recipe(A, gens)
    gen_orders = [A.element_orders[g] for g in gens]
    candidates = [[u for u in range(B.order) if B.element_orders[u] == o]
                  for o in gen_orders]
    isos = []
    for choice in iter_product(*candidates):
        m = [None] * A.order
        images = dict(zip(gens, choice))
        ok = True
        for pos, parent, gen in recipe:
            if parent is None and gen is None:
                m[pos] = B.identity_position
            elif parent is None:
                m[pos] = images[gen]
            else:
                m[pos] = B.mult_table[m[parent]][images[gen]]
        if len(set(m)) != A.order:
            continue
        for t in range(A.order):
            row_a = A.mult_table[t]
            row_b = B.mult_table[m[t]]
            for u in range(A.order):
                if m[row_a[u]] != row_b[m[u]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            isos.append(GroupIso(A, B, tuple(m)))
    return isos


def equivariant_iso_search(N, N2, G, respect=None):
    """Split the isomorphisms N -> N2 by equivariance under conjugation.

    `respect` is a sequence of element indices of G (default: all of G);
    equivariance means commuting with conjugation by those left translations.
    Returns (equivariant, rejections) where each rejection pairs a GroupIso
    with the first witness (g_index, element_position) where it fails.
    """
    lam = left_regular(G)
    if respect is None:
        respect = range(G.order)
    respect = list(respect)
    conj_on = {}
    conj_on2 = {}
    for g in respect:
        perm = lam.elements[g]
        conj_on[g] = [N.index_of(conj_by(perm, p)) for p in N.elements]
        conj_on2[g] = [N2.index_of(conj_by(perm, p)) for p in N2.elements]
    equivariant = []
    rejections = []
    for iso in group_isomorphisms(N, N2):
        bad = None
        for g in respect:
            ca, cb = conj_on[g], conj_on2[g]
            for t in range(N.order):
                if iso.mapping[ca[t]] != cb[iso.mapping[t]]:
                    bad = (g, t)
                    break
            if bad:
                break
        if bad is None:
            equivariant.append(iso)
        else:
            rejections.append((iso, bad))
    return equivariant, rejections


def equivariant_isomorphisms(N, N2, G, respect=None):
    """Isomorphisms N -> N2 commuting with conjugation by translations."""
    return equivariant_iso_search(N, N2, G, respect)[0]
