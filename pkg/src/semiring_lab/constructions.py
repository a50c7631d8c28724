"""Builders for the named finite semirings/semimodules and generic machinery.

Every constructor routes its tables through the validators, so anything
returned from here satisfies the axioms by construction.  Index
conventions: products are row-major (i1*|S2| + i2), matrices are
row-major base-|S| numerals, and quotient carriers list blocks by least
element with the block of 0 first.
"""

from __future__ import annotations

import itertools
from typing import Optional, Union

from .config import size_cap
from .congruences import Congruence, compatibility_witness
from .core import (
    Algebra,
    FiniteSemimodule,
    FiniteSemiring,
    element_classes,
    is_ring,
    regular_semimodule,
    validate_semimodule,
    validate_semiring,
)
from .errors import (
    IncompatiblePartition,
    NotACongruence,
    NotAdditivelyIdempotent,
    NotASubsemimodule,
    SizeCapExceeded,
)


def trivial_semiring() -> FiniteSemiring:
    """The one-element semiring with 0 = 1."""
    return validate_semiring(((0,),), ((0,),), 0, name="0")


def chain_semiring(n: int) -> FiniteSemiring:
    """Join semilattice on the chain 0 < 1 < ... < n; products of nonzero
    elements are joins, zero annihilates."""
    if n < 1:
        raise ValueError("chain_semiring needs n >= 1 (use trivial_semiring for order 1)")
    size = n + 1
    add = tuple(tuple(max(a, b) for b in range(size)) for a in range(size))
    mul = tuple(
        tuple(0 if a == 0 or b == 0 else max(a, b) for b in range(size))
        for a in range(size)
    )
    return validate_semiring(add, mul, 1, name=f"B{size}")


def boolean_semiring() -> FiniteSemiring:
    return chain_semiring(1)


def b31() -> FiniteSemiring:
    """Three elements with a(+)b = min(2, a+b) and a(.)b = min(2, ab)."""
    add = tuple(tuple(min(2, a + b) for b in range(3)) for a in range(3))
    mul = tuple(tuple(min(2, a * b) for b in range(3)) for a in range(3))
    return validate_semiring(add, mul, 1, name="B(3,1)")


def boolean_lattice_semiring(k: int) -> FiniteSemiring:
    """The Boolean algebra with k atoms as a semiring: + = join, . = meet.

    Elements are bitmasks 0..2^k-1; 0 is bottom, the full mask is 1.
    """
    if k < 0:
        raise ValueError("atom count must be >= 0")
    size = 1 << k
    add = tuple(tuple(a | b for b in range(size)) for a in range(size))
    mul = tuple(tuple(a & b for b in range(size)) for a in range(size))
    return validate_semiring(add, mul, size - 1, name=f"2^{k}")


def chain_lattice_semiring(n: int) -> FiniteSemiring:
    """The n-chain as a bounded distributive lattice: + = max, . = min."""
    if n < 2:
        raise ValueError("chain lattice needs n >= 2")
    add = tuple(tuple(max(a, b) for b in range(n)) for a in range(n))
    mul = tuple(tuple(min(a, b) for b in range(n)) for a in range(n))
    return validate_semiring(add, mul, n - 1, name=f"chain{n}")


def cyclic_ring(n: int) -> FiniteSemiring:
    """Z/n as a semiring (a ring: every element has an additive inverse)."""
    if n < 1:
        raise ValueError("modulus must be positive")
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    return validate_semiring(add, mul, 1 % n, name=f"Z{n}")


def ext_semiring(R: FiniteSemiring) -> FiniteSemiring:
    """Adjoin a new zero and a top element to a ring.

    Carrier: index 0 = new zero, indices 1..|R| = ring elements shifted
    by one (ring zero at 1), index |R|+1 = the absorbing top.  The top
    multiplies everything nonzero to itself.
    """
    if not is_ring(R):
        raise ValueError("ext_semiring needs a ring (every element additively invertible)")
    r = R.order
    size = r + 2
    top = r + 1

    def a(x, y):
        if x == 0:
            return y
        if y == 0:
            return x
        if x == top or y == top:
            return top
        return R.add[x - 1][y - 1] + 1

    def m(x, y):
        if x == 0 or y == 0:
            return 0
        if x == top or y == top:
            return top
        return R.mul[x - 1][y - 1] + 1

    add = tuple(tuple(a(x, y) for y in range(size)) for x in range(size))
    mul = tuple(tuple(m(x, y) for y in range(size)) for x in range(size))
    return validate_semiring(add, mul, R.one + 1, name=f"Ext({R.name or 'R'})")


def ext_semimodule(R: FiniteSemiring, M: FiniteSemimodule) -> FiniteSemimodule:
    """Extend a module over a ring to a semimodule over ext_semiring(R)."""
    if M.semiring != R:
        raise ValueError("module must be over the given ring")
    E = ext_semiring(R)
    m = M.order
    size = m + 2
    top = m + 1

    def a(x, y):
        if x == 0:
            return y
        if y == 0:
            return x
        if x == top or y == top:
            return top
        return M.add[x - 1][y - 1] + 1

    def act(s, x):
        if s == 0 or x == 0:
            return 0
        if s == E.order - 1 or x == top:
            return top
        return M.action[s - 1][x - 1] + 1

    add = tuple(tuple(a(x, y) for y in range(size)) for x in range(size))
    action = tuple(tuple(act(s, x) for x in range(size)) for s in range(E.order))
    return validate_semimodule(E, add, action, name=f"Ext({M.name or 'M'})")


def matrix_semiring(S: FiniteSemiring, n: int) -> FiniteSemiring:
    """n x n matrices over S, indexed as row-major base-|S| numerals."""
    if n < 1:
        raise ValueError("matrix dimension must be >= 1")
    cells = n * n
    size = S.order ** cells
    cap = size_cap()
    if size > cap:
        raise SizeCapExceeded(size, cap)

    def decode(idx):
        digits = []
        for _ in range(cells):
            digits.append(idx % S.order)
            idx //= S.order
        digits.reverse()
        return digits  # row-major entries

    def encode(digits):
        idx = 0
        for d in digits:
            idx = idx * S.order + d
        return idx

    mats = [decode(i) for i in range(size)]

    def madd(x, y):
        return encode([S.add[a][b] for a, b in zip(mats[x], mats[y])])

    def mmul(x, y):
        a, b = mats[x], mats[y]
        out = []
        for i in range(n):
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = S.add[acc][S.mul[a[i * n + k]][b[k * n + j]]]
                out.append(acc)
        return encode(out)

    add = tuple(tuple(madd(x, y) for y in range(size)) for x in range(size))
    mul = tuple(tuple(mmul(x, y) for y in range(size)) for x in range(size))
    one = encode([S.one if i == j else 0 for i in range(n) for j in range(n)])
    return validate_semiring(add, mul, one, name=f"M{n}({S.name or 'S'})")


def matrix_unit_index(S: FiniteSemiring, n: int, i: int, j: int, value: int | None = None) -> int:
    """Index of the matrix with `value` (default S.one) at (i, j), zeros elsewhere."""
    v = S.one if value is None else value
    idx = 0
    for a in range(n):
        for b in range(n):
            idx = idx * S.order + (v if (a, b) == (i, j) else 0)
    return idx


def direct_product(S1: FiniteSemiring, S2: FiniteSemiring) -> FiniteSemiring:
    """Componentwise semiring on pairs, index = i1*|S2| + i2."""
    n1, n2 = S1.order, S2.order
    size = n1 * n2

    def add(x, y):
        return S1.add[x // n2][y // n2] * n2 + S2.add[x % n2][y % n2]

    def mul(x, y):
        return S1.mul[x // n2][y // n2] * n2 + S2.mul[x % n2][y % n2]

    add_t = tuple(tuple(add(x, y) for y in range(size)) for x in range(size))
    mul_t = tuple(tuple(mul(x, y) for y in range(size)) for x in range(size))
    one = S1.one * n2 + S2.one
    return validate_semiring(add_t, mul_t, one,
                             name=f"{S1.name or 'S1'}x{S2.name or 'S2'}")


def direct_sum(M1: FiniteSemimodule, M2: FiniteSemimodule) -> FiniteSemimodule:
    if M1.semiring != M2.semiring:
        raise ValueError("direct_sum needs semimodules over the same semiring")
    n1, n2 = M1.order, M2.order
    size = n1 * n2
    S = M1.semiring
    add = tuple(
        tuple(M1.add[x // n2][y // n2] * n2 + M2.add[x % n2][y % n2]
              for y in range(size))
        for x in range(size)
    )
    action = tuple(
        tuple(M1.action[s][x // n2] * n2 + M2.action[s][x % n2] for x in range(size))
        for s in range(S.order)
    )
    return validate_semimodule(S, add, action,
                               name=f"{M1.name or 'M1'}(+){M2.name or 'M2'}")


# ---------------------------------------------------------------------------
# Quotients and the named congruences


def quotient(x: Algebra, theta: Congruence):
    """Factor algebra and the projection map element -> block index."""
    if theta.size != x.order:
        raise ValueError("congruence size does not match the carrier")
    labels = theta.labels()
    witness = compatibility_witness(x, labels)
    if witness is not None:
        raise IncompatiblePartition(witness)
    reps = [block[0] for block in theta.blocks]
    k = len(reps)
    proj = labels
    if isinstance(x, FiniteSemiring):
        add = tuple(tuple(proj[x.add[reps[a]][reps[b]]] for b in range(k)) for a in range(k))
        mul = tuple(tuple(proj[x.mul[reps[a]][reps[b]]] for b in range(k)) for a in range(k))
        q = validate_semiring(add, mul, proj[x.one], name=f"{x.name or 'S'}/~")
        return q, tuple(proj)
    add = tuple(tuple(proj[x.add[reps[a]][reps[b]]] for b in range(k)) for a in range(k))
    action = tuple(
        tuple(proj[x.action[s][reps[a]]] for a in range(k))
        for s in range(x.semiring.order)
    )
    q = validate_semimodule(x.semiring, add, action, name=f"{x.name or 'M'}/~")
    return q, tuple(proj)


def _check_subsemimodule(x: Algebra, elems: tuple[int, ...]) -> None:
    if not elems or elems[0] != 0:
        raise NotASubsemimodule(("zero-missing",))
    inside = set(elems)
    for a in elems:
        for b in elems:
            if x.add[a][b] not in inside:
                raise NotASubsemimodule(("add", a, b))
    if isinstance(x, FiniteSemiring):
        for s in range(x.order):
            for a in elems:
                if x.mul[s][a] not in inside or x.mul[a][s] not in inside:
                    raise NotASubsemimodule(("ideal", s, a))
    else:
        for s in range(x.semiring.order):
            for a in elems:
                if x.action[s][a] not in inside:
                    raise NotASubsemimodule(("action", s, a))


def bourne_congruence(x: Algebra, subset) -> Congruence:
    """m ~ m' when m+l == m'+l' for some l, l' in the subset.

    The subset must be a subsemimodule (for semirings: a two-sided
    ideal).  The raw relation is symmetric and reflexive; the returned
    congruence is its explicit transitive closure.
    """
    elems = tuple(sorted(set(subset)))
    _check_subsemimodule(x, elems)
    n = x.order
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    reachable = [sorted({x.add[m][l] for l in elems}) for m in range(n)]
    bucket: dict[int, list[int]] = {}
    for m in range(n):
        for v in reachable[m]:
            bucket.setdefault(v, []).append(m)
    for group in bucket.values():
        first = group[0]
        for other in group[1:]:
            ra, rb = find(first), find(other)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    labels = []
    seen: dict[int, int] = {}
    for i in range(n):
        r = find(i)
        if r not in seen:
            seen[r] = len(seen)
        labels.append(seen[r])
    cong = Congruence.from_labels(labels)
    witness = compatibility_witness(x, cong.labels())
    if witness is not None:
        raise NotACongruence(witness)
    return cong


def _additive_multiples(x: Algebra, s: int) -> set[int]:
    """The set {s, 2s, 3s, ...}; iteration stops when a value repeats."""
    out = set()
    cur = s
    while cur not in out:
        out.add(cur)
        cur = x.add[cur][s]
    return out


def diamond_congruence(x: Algebra) -> Congruence:
    """s ~ s' when some additive multiple of each lands in the other's
    upper set (ns == s'+t and ms' == s+t').  The quotient is always
    additively idempotent."""
    n = x.order
    mults = [_additive_multiples(x, s) for s in range(n)]
    upper = [set(x.add[s]) for s in range(n)]  # {s + t : t}
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in range(n):
        for b in range(a + 1, n):
            if mults[a] & upper[b] and mults[b] & upper[a]:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    labels = []
    seen: dict[int, int] = {}
    for i in range(n):
        r = find(i)
        if r not in seen:
            seen[r] = len(seen)
        labels.append(seen[r])
    cong = Congruence.from_labels(labels)
    witness = compatibility_witness(x, cong.labels())
    if witness is not None:
        # holds for every finite semimodule/semiring; kept as a hard check
        raise NotACongruence(witness)
    return cong


def sigma_congruence(M: FiniteSemimodule) -> Congruence:
    """Partition by equal left annihilators; verified to be a congruence."""
    S = M.semiring
    ann = []
    for m in range(M.order):
        ann.append(frozenset(s for s in range(S.order) if M.action[s][m] == 0))
    classes: dict[frozenset[int], int] = {}
    labels = []
    for m in range(M.order):
        if ann[m] not in classes:
            classes[ann[m]] = len(classes)
        labels.append(classes[ann[m]])
    cong = Congruence.from_labels(labels)
    witness = compatibility_witness(M, cong.labels())
    if witness is not None:
        raise NotACongruence(witness)
    return cong


def rho_congruence(T: FiniteSemiring) -> Congruence:
    """Identify all elements of the form (1+1)+x; verified compatible."""
    two = T.add[T.one][T.one]
    dees = sorted({T.add[two][s] for s in range(T.order)})
    labels = [0] * T.order
    nxt = 0
    seen: dict[int, int] = {}
    merged_label = None
    for i in range(T.order):
        if i in dees and len(dees) > 1:
            if merged_label is None:
                merged_label = nxt
                nxt += 1
            labels[i] = merged_label
        else:
            seen[i] = nxt
            labels[i] = nxt
            nxt += 1
    cong = Congruence.from_labels(labels)
    witness = compatibility_witness(T, cong.labels())
    if witness is not None:
        raise NotACongruence(witness)
    return cong


# ---------------------------------------------------------------------------
# Character semimodule, matrix-unit reduction, counterexamples


def character_semimodule(M: FiniteSemimodule) -> FiniteSemimodule:
    """Additive monoid maps M -> {0,1} with pointwise join and (s.f)(m) = f(sm).

    Needs the base semiring commutative (the action formula uses it) and
    both structures additively idempotent.
    """
    S = M.semiring
    rep_s = element_classes(S)
    if rep_s.iplus != frozenset(range(S.order)):
        bad = min(set(range(S.order)) - rep_s.iplus)
        raise NotAdditivelyIdempotent(bad)
    rep_m = element_classes(M)
    if rep_m.iplus != frozenset(range(M.order)):
        bad = min(set(range(M.order)) - rep_m.iplus)
        raise NotAdditivelyIdempotent(bad)
    if any(S.mul[a][b] != S.mul[b][a] for a in range(S.order) for b in range(S.order)):
        raise ValueError("character semimodule needs a commutative base semiring")

    m = M.order
    maps = []
    for bits in itertools.product((0, 1), repeat=m):
        if bits[0] != 0:
            continue
        if all(bits[M.add[a][b]] == (bits[a] | bits[b]) for a in range(m) for b in range(m)):
            maps.append(bits)
    maps.sort()
    index = {f: i for i, f in enumerate(maps)}

    def f_add(f, g):
        return tuple(x | y for x, y in zip(maps[f], maps[g]))

    def f_act(s, f):
        return tuple(maps[f][M.action[s][x]] for x in range(m))

    size = len(maps)
    add = tuple(tuple(index[f_add(f, g)] for g in range(size)) for f in range(size))
    action = tuple(
        tuple(index[f_act(s, f)] for f in range(size)) for s in range(S.order)
    )
    return validate_semimodule(S, add, action, name=f"2^{M.name or 'M'}")


def morita_reduce(A: FiniteSemimodule, S: FiniteSemiring, n: int) -> tuple[FiniteSemimodule, tuple[int, ...]]:
    """Cut a semimodule over the n x n matrix semiring down to base-semiring scale.

    The image of the top-left matrix unit E acting on A becomes an
    S-semimodule via s |-> sE.  Returns the reduced semimodule and the
    list of ambient elements it came from.
    """
    Mn = matrix_semiring(S, n)
    if A.semiring != Mn:
        raise ValueError("semimodule is not over the expected matrix semiring")
    e11 = matrix_unit_index(S, n, 0, 0)
    image = sorted({A.action[e11][a] for a in range(A.order)})
    pos = {e: i for i, e in enumerate(image)}
    add = tuple(tuple(pos[A.add[a][b]] for b in image) for a in image)
    action = tuple(
        tuple(pos[A.action[matrix_unit_index(S, n, 0, 0, s)][a]] for a in image)
        for s in range(S.order)
    )
    reduced = validate_semimodule(S, add, action, name=f"E({A.name or 'A'})")
    return reduced, tuple(image)


def morita_expand(B: FiniteSemimodule, n: int) -> FiniteSemimodule:
    """n-tuples over B as a semimodule over the n x n matrix semiring."""
    S = B.semiring
    Mn = matrix_semiring(S, n)
    m = B.order
    size = m ** n
    cap = size_cap()
    if size > cap:
        raise SizeCapExceeded(size, cap)

    def decode(idx):
        digits = []
        for _ in range(n):
            digits.append(idx % m)
            idx //= m
        digits.reverse()
        return digits

    def encode(v):
        idx = 0
        for d in v:
            idx = idx * m + d
        return idx

    vecs = [decode(i) for i in range(size)]

    def sdecode(idx):
        digits = []
        for _ in range(n * n):
            digits.append(idx % S.order)
            idx //= S.order
        digits.reverse()
        return digits

    add = tuple(
        tuple(encode([B.add[a][b] for a, b in zip(vecs[x], vecs[y])])
              for y in range(size))
        for x in range(size)
    )
    action_rows = []
    for mat in range(Mn.order):
        entries = sdecode(mat)
        row = []
        for x in range(size):
            v = vecs[x]
            out = []
            for i in range(n):
                acc = 0
                for j in range(n):
                    acc = B.add[acc][B.action[entries[i * n + j]][v[j]]]
                out.append(acc)
            row.append(encode(out))
        action_rows.append(tuple(row))
    return validate_semimodule(Mn, add, tuple(action_rows),
                               name=f"{B.name or 'B'}^{n}")


def b4_extension_counterexample():
    """The five-element chain semimodule over B4 whose subchain map into the
    regular semimodule does not extend.

    Returns (M, sub-elements, partial map as (ambient, image) pairs); the
    target of the partial map is the regular semimodule of B4.
    """
    S = chain_semiring(3)  # B4 on 0<1<2<3
    size = 5  # chain 0 < a < b < c < d as indices 0..4
    add = tuple(tuple(max(a, b) for b in range(size)) for a in range(size))
    two = [0, 1, 3, 3, 4]   # 2a=a, 2b=c, 2c=c, 2d=d
    three = [0, 4, 4, 4, 4]  # 3x=d for x != 0
    action = (
        tuple(0 for _ in range(size)),
        tuple(range(size)),
        tuple(two),
        tuple(three),
    )
    M = validate_semimodule(S, add, action, name="chain5 over B4")
    sub = (0, 2, 3, 4)
    pairs = ((0, 0), (2, 1), (3, 2), (4, 3))
    return M, sub, pairs


def b31_retract_counterexample():
    """The nine-element extension of B(3,1) of which it is not a retract.

    Carrier: 0,1,2 are the embedded copy; 3..5 are a1..a3; 6..8 are b1..b3.
    Returns (M, sub-elements, identity pairs on the copy).
    """
    S = b31()
    size = 9

    def plus(x, y):
        if x == 0:
            return y
        if y == 0:
            return x
        if x == y:
            if x in (3, 4, 5):
                return x + 3  # a_i + a_i = b_i
            if x in (6, 7, 8):
                return x      # b_i + b_i = b_i
            return min(2, x + x) if x in (1, 2) else x
        if {x, y} <= {3, 4, 5}:
            return 1          # a_i + a_j = 1 for i != j
        if x in (3, 4, 5) and y == x + 3:
            return y          # a_i + b_i = b_i
        if y in (3, 4, 5) and x == y + 3:
            return x
        return 2              # every other sum of nonzero elements

    add = tuple(tuple(plus(x, y) for y in range(size)) for x in range(size))
    doubled = tuple(add[x][x] for x in range(size))
    action = (
        tuple(0 for _ in range(size)),
        tuple(range(size)),
        doubled,  # 2 = 1+1 forces 2.m = m+m
    )
    M = validate_semimodule(S, add, action, name="triple cover of B(3,1)")
    sub = (0, 1, 2)
    pairs = ((0, 0), (1, 1), (2, 2))
    return M, sub, pairs


def zerosumfree_decomposition(S: FiniteSemiring):
    """Try to split S as (additively invertible part) x (zerosumfree quotient).

    Returns (R, T, iso-map from S onto R x T) or None when the invertible
    part is not a ring direct summand.
    """
    rep = element_classes(S)
    vel = tuple(sorted(rep.vclass))
    inside = set(vel)
    # V(S) is closed under + and two-sided multiplication; find its identity
    unit = None
    for u in vel:
        if all(S.mul[u][v] == v and S.mul[v][u] == v for v in vel):
            unit = u
            break
    if unit is None:
        return None
    pos = {e: i for i, e in enumerate(vel)}
    radd = tuple(tuple(pos[S.add[a][b]] for b in vel) for a in vel)
    rmul = tuple(tuple(pos[S.mul[a][b]] for b in vel) for a in vel)
    R = validate_semiring(radd, rmul, pos[unit], name=f"V({S.name or 'S'})")
    theta = bourne_congruence(S, vel)
    T, _ = quotient(S, theta)
    product = direct_product(R, T)
    from .homs import are_isomorphic  # deferred: higher layer

    iso = are_isomorphic(S, product)
    if iso is None:
        return None
    return R, T, iso
