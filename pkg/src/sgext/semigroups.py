"""Finite semigroups given by Cayley tables, and their ideal algebra.

Elements are dense integer indices 0..order-1; labels are metadata only.
Sub-semigroups keep a translation to the ambient semigroup so that all
higher layers can work with ambient ("global") element indices throughout.
"""

from functools import lru_cache

from .errors import (
    EmptyIdealError,
    IndexOutOfRangeError,
    NonAssociativeError,
    NotGroupError,
    NotIdealError,
    NotInverseError,
    NotRegularError,
    ParentMismatchError,
)


class FiniteSemigroup:
    """A finite semigroup on 0..order-1 with ``table[s][t] = s*t``."""

    __slots__ = ("order", "table", "labels", "_hash")

    def __init__(self, table, labels=None):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.labels = tuple(labels) if labels is not None else None
        self._hash = hash((self.order, self.table))

    def mul(self, s, t):
        return self.table[s][t]

    # Ambient-coordinate interface, shared with Subsemigroup.  For a plain
    # semigroup the ambient is the semigroup itself.
    @property
    def ambient(self):
        return self

    @property
    def members(self):
        return tuple(range(self.order))

    def embed(self, i):
        return i

    def locate(self, x):
        return x

    def contains(self, x):
        return 0 <= x < self.order

    def mul_global(self, x, y):
        return self.table[x][y]

    def identity(self):
        for e in range(self.order):
            row = self.table[e]
            if all(row[x] == x == self.table[x][e] for x in range(self.order)):
                return e
        return None

    def is_monoid(self):
        return self.identity() is not None

    def name_of(self, i):
        if self.labels is not None:
            return self.labels[i]
        return str(i)

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self.table == other.table
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order})"


class Subsemigroup(FiniteSemigroup):
    """A sub-semigroup of an ambient semigroup, reindexed to 0..k-1.

    ``to_parent[i]`` is the ambient index of local element i; ``locate``
    inverts it.  Global-coordinate methods speak ambient indices.
    """

    __slots__ = ("_ambient", "to_parent", "_from_parent", "_members")

    def __init__(self, ambient, members):
        members = tuple(sorted(members))
        index = {x: i for i, x in enumerate(members)}
        table = [
            [index[ambient.table[x][y]] for y in members] for x in members
        ]
        labels = None
        if ambient.labels is not None:
            labels = [ambient.labels[x] for x in members]
        super().__init__(table, labels)
        self._ambient = ambient
        self._members = members
        self.to_parent = members
        self._from_parent = index
        self._hash = hash((self.order, self.table, ambient._hash, members))

    @property
    def ambient(self):
        return self._ambient

    @property
    def members(self):
        return self._members

    def embed(self, i):
        return self._members[i]

    def locate(self, x):
        return self._from_parent[x]

    def contains(self, x):
        return x in self._from_parent

    def mul_global(self, x, y):
        return self._ambient.table[x][y]

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self._members == other._members
            and self._ambient == other._ambient
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Subsemigroup(order={self.order}, of order {self._ambient.order})"


def validate_semigroup(table, labels=None):
    """Check a square table for closure and associativity.

    Returns the semigroup, or raises naming the first failing triple.
    """
    n = len(table)
    for i, row in enumerate(table):
        if len(row) != n:
            raise IndexOutOfRangeError(i, len(row), -1, n)
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise IndexOutOfRangeError(i, j, v, n)
    for s in range(n):
        for t in range(n):
            st = table[s][t]
            for u in range(n):
                if table[st][u] != table[s][table[t][u]]:
                    raise NonAssociativeError(s, t, u)
    return FiniteSemigroup(table, labels)


def idempotents(S):
    return frozenset(x for x in S.members if S.mul_global(x, x) == x)


def center(S):
    mem = S.members
    return frozenset(
        x
        for x in mem
        if all(S.mul_global(x, t) == S.mul_global(t, x) for t in mem)
    )


class InverseStructure:
    """Inverse map, idempotents, center and the Clifford flag of a semigroup."""

    __slots__ = ("semigroup", "inverse", "idempotents", "center", "is_clifford")

    def __init__(self, semigroup, inverse, idems, cent, is_clifford):
        self.semigroup = semigroup
        self.inverse = inverse
        self.idempotents = idems
        self.center = cent
        self.is_clifford = is_clifford

    def inv_global(self, x):
        return self.semigroup.embed(self.inverse[self.semigroup.locate(x)])


@lru_cache(maxsize=None)
def analyze_inverse(S):
    """Compute the unique-inverse structure of S, by search.

    Raises NotRegularError if some element has no inverse, NotInverseError
    if inverses are not unique or idempotents do not commute.
    """
    n = S.order
    inverse = []
    for s in range(n):
        candidates = [
            t
            for t in range(n)
            if S.table[S.table[s][t]][s] == s and S.table[S.table[t][s]][t] == t
        ]
        if not candidates:
            raise NotRegularError(S.embed(s))
        if len(candidates) > 1:
            raise NotInverseError("non-unique inverse", (S.embed(s),))
        inverse.append(candidates[0])
    idems = idempotents(S)
    for e in idems:
        for f in idems:
            if S.mul_global(e, f) != S.mul_global(f, e):
                raise NotInverseError("non-commuting idempotents", (e, f))
    cent = center(S)
    return InverseStructure(S, tuple(inverse), idems, cent, idems <= cent)


def is_inverse(S):
    try:
        analyze_inverse(S)
    except (NotRegularError, NotInverseError):
        return False
    return True


def is_clifford(S):
    try:
        return analyze_inverse(S).is_clifford
    except (NotRegularError, NotInverseError):
        return False


class Ideal:
    """A two-sided ideal of ``parent``, stored as a sorted global index tuple."""

    __slots__ = ("parent", "members", "_set", "_hash")

    def __init__(self, parent, members):
        self.parent = parent
        self.members = tuple(sorted(members))
        self._set = frozenset(self.members)
        self._hash = hash((parent._hash, self.members))

    def __contains__(self, x):
        return x in self._set

    def __len__(self):
        return len(self.members)

    def as_set(self):
        return self._set

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.members == other.members
            and self.parent == other.parent
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ideal({list(self.members)})"


def make_ideal(parent, members, check=True):
    ideal = Ideal(parent, members)
    if check:
        for x in ideal.members:
            if not parent.contains(x):
                raise NotIdealError((x,))
        for s in parent.members:
            for x in ideal.members:
                if parent.mul_global(s, x) not in ideal:
                    raise NotIdealError((s, x))
                if parent.mul_global(x, s) not in ideal:
                    raise NotIdealError((x, s))
    return ideal


def ideal_closure(S, seed):
    """Least ideal of S containing ``seed`` (global indices)."""
    current = set(seed)
    queue = list(current)
    while queue:
        x = queue.pop()
        for s in S.members:
            for y in (S.mul_global(s, x), S.mul_global(x, s)):
                if y not in current:
                    current.add(y)
                    queue.append(y)
    return Ideal(S, current)


def ideal_product(I, J):
    """{xy : x in I, y in J}; equals the intersection when the parent is inverse."""
    if I.parent != J.parent:
        raise ParentMismatchError("ideal product across different parents")
    S = I.parent
    members = {S.mul_global(x, y) for x in I.members for y in J.members}
    return Ideal(S, members)


@lru_cache(maxsize=None)
def _sub_semigroup_cached(S, members):
    return Subsemigroup(S, members)


def sub_semigroup(S, members):
    """Sub-semigroup of the *ambient* of S on a closed global member set."""
    members = tuple(sorted(set(members)))
    member_set = set(members)
    ambient = S.ambient
    for x in members:
        for y in members:
            if ambient.table[x][y] not in member_set:
                raise NotIdealError((x, y))
    return _sub_semigroup_cached(ambient, members)


def restrict(S, ideal):
    """The ideal as a semigroup in its own right, with index translation."""
    if ideal.parent != S:
        raise ParentMismatchError("ideal restricted against a foreign parent")
    if not ideal.members:
        raise EmptyIdealError("cannot restrict to the empty ideal")
    return _sub_semigroup_cached(S.ambient, ideal.members)


def principal_ideals(S):
    seen = {}
    for x in S.members:
        ideal = ideal_closure(S, (x,))
        seen.setdefault(ideal.members, ideal)
    return [seen[m] for m in sorted(seen)]


def all_ideals(S, include_empty=False):
    """All ideals of S (unions of principal ideals), sorted by (size, members)."""
    principals = principal_ideals(S)
    collected = set()
    for p in principals:
        collected.add(p.members)
    changed = True
    while changed:
        changed = False
        for a in list(collected):
            for p in principals:
                u = tuple(sorted(set(a) | set(p.members)))
                if u not in collected:
                    collected.add(u)
                    changed = True
    if include_empty:
        collected.add(())
    return [Ideal(S, m) for m in sorted(collected, key=lambda m: (len(m), m))]


def group_structure(G):
    """Identity and inverse table of a semigroup that must be a group."""
    e = G.identity()
    if e is None:
        raise NotGroupError("no identity element")
    inv = {}
    for g in G.members:
        matches = [h for h in G.members if G.mul_global(g, h) == e and G.mul_global(h, g) == e]
        if not matches:
            raise NotGroupError(f"element {g} has no inverse")
        inv[g] = matches[0]
    return e, inv
