"""Multipliers of a finite semigroup and the monoid they form.

A multiplier is a pair of self-maps (left action s -> ms, right action
s -> sm) compatible with the product.  Multipliers of an ideal D of A are
multipliers of the restricted semigroup on D; all helpers below can speak
ambient ("global") indices through the carrier's translation maps.
"""

from functools import lru_cache

from .errors import (
    CapExceededError,
    CarrierMismatchError,
    NotCliffordError,
    NotIdealError,
    NotInvertibleError,
    NotIsomorphismError,
    NotMultiplierOfCenterError,
    SquareClosureError,
)
from .semigroups import analyze_inverse, center, sub_semigroup

DEFAULT_MULTIPLIER_CAP = 12


class Multiplier:
    """A compatible pair of left/right translations of ``carrier``."""

    __slots__ = ("carrier", "left", "right", "_hash")

    def __init__(self, carrier, left, right):
        self.carrier = carrier
        self.left = tuple(left)
        self.right = tuple(right)
        self._hash = hash((carrier._hash, self.left, self.right))

    def act_left(self, s):
        return self.left[s]

    def act_right(self, s):
        return self.right[s]

    def act_left_global(self, x):
        c = self.carrier
        return c.embed(self.left[c.locate(x)])

    def act_right_global(self, x):
        c = self.carrier
        return c.embed(self.right[c.locate(x)])

    def is_identity(self):
        n = self.carrier.order
        return self.left == tuple(range(n)) and self.right == tuple(range(n))

    def key(self):
        return (self.left, self.right)

    def __eq__(self, other):
        return (
            isinstance(other, Multiplier)
            and self.left == other.left
            and self.right == other.right
            and self.carrier == other.carrier
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Multiplier(left={self.left}, right={self.right})"


def is_multiplier(S, left, right):
    """Check the three translation axioms on every pair."""
    n = S.order
    t = S.table
    for s in range(n):
        for u in range(n):
            su = t[s][u]
            if left[su] != t[left[s]][u]:
                return False
            if right[su] != t[s][right[u]]:
                return False
            if t[s][left[u]] != t[right[s]][u]:
                return False
    return True


def identity_multiplier(S):
    return Multiplier(S, range(S.order), range(S.order))


def inner_multiplier(S, s):
    """The pair of translations by a fixed element s (local index)."""
    n = S.order
    return Multiplier(S, [S.table[s][t] for t in range(n)], [S.table[t][s] for t in range(n)])


def _translations(S, left_side):
    """All maps L with L(st) = L(s)t (or R(st) = sR(t)), by propagating DFS."""
    n = S.order
    t = S.table
    if left_side:
        prods = [[(u, t[s][u]) for u in range(n)] for s in range(n)]
    else:
        prods = [[(u, t[u][s]) for u in range(n)] for s in range(n)]
    val = [None] * n
    out = []

    def propagate(start, trail):
        stack = [start]
        while stack:
            a = stack.pop()
            va = val[a]
            for arg, prod in prods[a]:
                forced = t[va][arg] if left_side else t[arg][va]
                if val[prod] is None:
                    val[prod] = forced
                    trail.append(prod)
                    stack.append(prod)
                elif val[prod] != forced:
                    return False
        return True

    def dfs(i):
        while i < n and val[i] is not None:
            i += 1
        if i == n:
            out.append(tuple(val))
            return
        for v in range(n):
            val[i] = v
            trail = [i]
            if propagate(i, trail):
                dfs(i + 1)
            for u in trail:
                val[u] = None

    dfs(0)
    return sorted(out)


class MultiplierMonoid:
    """The full multiplier monoid of a carrier, with units flagged."""

    __slots__ = ("carrier", "all", "units", "central_units", "_index")

    def __init__(self, carrier, all_mults, units, central_units):
        self.carrier = carrier
        self.all = tuple(all_mults)
        self.units = tuple(units)
        self.central_units = tuple(central_units)
        self._index = {m.key(): i for i, m in enumerate(self.all)}

    def __len__(self):
        return len(self.all)

    def __contains__(self, m):
        return m.key() in self._index

    def index(self, m):
        return self._index[m.key()]


@lru_cache(maxsize=None)
def _monoid(S):
    lefts = _translations(S, left_side=True)
    rights = _translations(S, left_side=False)
    t = S.table
    n = S.order
    mults = []
    for left in lefts:
        for right in rights:
            if all(t[s][left[u]] == t[right[s]][u] for s in range(n) for u in range(n)):
                mults.append(Multiplier(S, left, right))
    mults.sort(key=Multiplier.key)
    ident = tuple(range(n))
    keys = {m.key() for m in mults}
    units = []
    for m in mults:
        if sorted(m.left) != list(range(n)) or sorted(m.right) != list(range(n)):
            continue
        inv_left = _invert_perm(m.left)
        inv_right = _invert_perm(m.right)
        if (inv_left, inv_right) in keys:
            units.append(m)
    if (ident, ident) not in keys:
        raise AssertionError("identity multiplier missing from enumeration")
    square = _square_closed(S)
    central = [m for m in units if square and m.left == m.right]
    return MultiplierMonoid(S, mults, units, central)


def enumerate_multipliers(S, cap=DEFAULT_MULTIPLIER_CAP):
    """Complete multiplier monoid of S; deterministic (left, right) order."""
    if S.order > cap:
        raise CapExceededError("multiplier enumeration", S.order, cap)
    return _monoid(S)


def _invert_perm(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


@lru_cache(maxsize=None)
def _square_closed(S):
    prods = {S.table[x][y] for x in range(S.order) for y in range(S.order)}
    return len(prods) == S.order


def compose(m, n):
    """Product mn in the multiplier monoid: (mn)s = m(ns), s(mn) = (sm)n."""
    if m.carrier != n.carrier:
        raise CarrierMismatchError("composing multipliers of different carriers")
    left = tuple(m.left[n.left[s]] for s in range(m.carrier.order))
    right = tuple(n.right[m.right[s]] for s in range(m.carrier.order))
    return Multiplier(m.carrier, left, right)


def invert(m):
    """Two-sided inverse in the multiplier monoid, or None."""
    n = m.carrier.order
    if sorted(m.left) != list(range(n)) or sorted(m.right) != list(range(n)):
        return None
    inv = Multiplier(m.carrier, _invert_perm(m.left), _invert_perm(m.right))
    if not is_multiplier(m.carrier, inv.left, inv.right):
        return None
    return inv


def is_central(m):
    """ms = sm for all s; for a square-closed carrier this is centrality in M(S)."""
    if not _square_closed(m.carrier):
        raise SquareClosureError("centrality test needs S*S = S")
    return m.left == m.right


def conjugation(m):
    """The automorphism s -> m s m^{-1} of the carrier, as a local index tuple."""
    if not _square_closed(m.carrier):
        raise SquareClosureError("conjugation needs S*S = S")
    minv = invert(m)
    if minv is None:
        raise NotInvertibleError("conjugation by a non-invertible multiplier")
    perm = tuple(minv.right[m.left[s]] for s in range(m.carrier.order))
    t = m.carrier.table
    for s in range(m.carrier.order):
        for u in range(m.carrier.order):
            if perm[t[s][u]] != t[perm[s]][perm[u]]:
                raise AssertionError("conjugation produced a non-automorphism")
    return perm


def conjugate_global(m, minv, x):
    """m x m^{-1} for a global element x of the carrier."""
    return minv.act_right_global(m.act_left_global(x))


def transport(m, mapping, target):
    """Push m through an isomorphism onto ``target`` (mapping in global indices)."""
    source = m.carrier
    if set(mapping) != set(source.members) or set(mapping.values()) != set(target.members):
        raise NotIsomorphismError("mapping does not match carriers")
    for x in source.members:
        for y in source.members:
            if mapping[source.mul_global(x, y)] != target.mul_global(mapping[x], mapping[y]):
                raise NotIsomorphismError("mapping is not a homomorphism")
    inverse = {v: k for k, v in mapping.items()}
    left = [0] * target.order
    right = [0] * target.order
    for i in range(target.order):
        x = inverse[target.embed(i)]
        left[i] = target.locate(mapping[m.act_left_global(x)])
        right[i] = target.locate(mapping[m.act_right_global(x)])
    return Multiplier(target, left, right)


def restrict_multiplier(m, members):
    """Set-theoretic restriction of m to an idempotent ideal of its carrier."""
    sub = sub_semigroup(m.carrier, members)
    left = []
    right = []
    for x in sub.members:
        lx = m.act_left_global(x)
        rx = m.act_right_global(x)
        if not sub.contains(lx) or not sub.contains(rx):
            raise NotIdealError((x,))
        left.append(sub.locate(lx))
        right.append(sub.locate(rx))
    return Multiplier(sub, left, right)


def extend_central(A, m):
    """Extend a multiplier of C(A) to a central multiplier of a Clifford A.

    The extension acts by m'a = m(aa^{-1}) a and am' = a (a^{-1}a) m, and
    m -> m' is a bijection between multipliers of the center and central
    multipliers of A.
    """
    inv = analyze_inverse(A)
    if not inv.is_clifford:
        raise NotCliffordError("central extension needs a Clifford carrier")
    center_sub = sub_semigroup(A, center(A))
    if m.carrier != center_sub:
        raise NotMultiplierOfCenterError("carrier is not the center of A")
    left = []
    right = []
    for x in A.members:
        e = A.mul_global(x, inv.inv_global(x))
        f = A.mul_global(inv.inv_global(x), x)
        left.append(A.locate(A.mul_global(m.act_left_global(e), x)))
        right.append(A.locate(A.mul_global(x, m.act_right_global(f))))
    out = Multiplier(A, left, right)
    if not is_multiplier(A, out.left, out.right):
        raise AssertionError("central extension failed the multiplier axioms")
    if not is_central(out):
        raise AssertionError("central extension is not central")
    return out


def restrict_to_center_multiplier(m):
    """View a central multiplier of S as a multiplier of C(S)."""
    if not is_central(m):
        raise NotCentralErrorFactory()
    return restrict_multiplier(m, center(m.carrier))


def NotCentralErrorFactory():
    from .errors import NotCentralError

    return NotCentralError("multiplier is not central")


def conjugating_units(source_map, target_map, carrier, domain):
    """All units w of M(carrier) with target(x) = w source(x) w^{-1} on ``domain``.

    Deterministic order (the monoid's unit order); ``source_map`` and
    ``target_map`` are global-index dicts landing in the carrier.
    """
    monoid = enumerate_multipliers(carrier, cap=max(DEFAULT_MULTIPLIER_CAP, carrier.order))
    found = []
    for w in monoid.units:
        winv = invert(w)
        if all(
            target_map[x] == conjugate_global(w, winv, source_map[x])
            for x in domain
        ):
            found.append(w)
    return found
