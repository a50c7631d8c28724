"""Validated finite semirings and semimodules.

Carriers are the index sets 0..n-1 with the additive identity pinned at
index 0; names are metadata only and never influence equality.  Tables
are immutable row-major tuples.  Validation scans every axiom
exhaustively and reports the first violation in a fixed axiom order with
a lexicographic (a, then b, then c) element scan, so failure witnesses
are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .errors import (
    ActionAxiomFailure,
    IdentityFailure,
    NonAssociative,
    NonCommutativeAdd,
    NotAdditivelyRegular,
    NotASubsemimodule,
    NotDistributive,
    ZeroNotAbsorbing,
)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteSemiring:
    order: int
    add: Table
    mul: Table
    one: int
    name: str = field(default="", compare=False)

    zero = 0

    def flat_add(self) -> list[int]:
        return [v for row in self.add for v in row]

    def flat_mul(self) -> list[int]:
        return [v for row in self.mul for v in row]

    def __repr__(self):
        label = self.name or "semiring"
        return f"<{label} of order {self.order}>"


@dataclass(frozen=True)
class FiniteSemimodule:
    semiring: FiniteSemiring
    order: int
    add: Table
    action: Table  # |S| rows of length `order`
    name: str = field(default="", compare=False)

    zero = 0

    def flat_add(self) -> list[int]:
        return [v for row in self.add for v in row]

    def action_rows(self) -> list[list[int]]:
        return [list(row) for row in self.action]

    def __repr__(self):
        label = self.name or "semimodule"
        return f"<{label} of order {self.order} over {self.semiring!r}>"


Algebra = Union[FiniteSemiring, FiniteSemimodule]


@dataclass(frozen=True)
class ElementClassReport:
    """The four element classes, the infinite element, and the units."""

    iplus: frozenset[int]
    zclass: frozenset[int]
    vclass: frozenset[int]
    aclass: frozenset[int]
    infinite: Optional[int]
    units: Optional[frozenset[int]]  # semirings only


@dataclass(frozen=True)
class PropertyFlags:
    zerosumfree: bool
    zeroic: bool
    additively_idempotent: bool
    additively_regular: bool
    anti_bounded: bool
    gelfand: bool
    vn_regular: bool
    left_subtractive: bool
    commutative_mul: bool


@dataclass
class CliffordDecomposition:
    """Semilattice-of-abelian-groups form of an additively regular monoid.

    `idempotent_of[x]` is the idempotent of the group containing x,
    `inverse_of[x]` the unique additive inverse-like partner of x, and
    `connecting[(a, b)]` the map g -> g+b from the group at `a` into the
    group at `b` whenever a+b == b.  `join` and `block_add` carry enough
    structure to rebuild the original addition table blockwise.
    """

    semilattice: tuple[int, ...]
    groups: dict[int, tuple[int, ...]]
    idempotent_of: tuple[int, ...]
    inverse_of: tuple[int, ...]
    join: dict[tuple[int, int], int]
    block_add: dict[tuple[int, int], int]
    connecting: dict[tuple[int, int], dict[int, int]]


def _as_table(rows, nrows: int, ncols: int, limit: int, what: str) -> Table:
    table = tuple(tuple(int(v) for v in row) for row in rows)
    if len(table) != nrows:
        raise ValueError(f"{what}: expected {nrows} rows, got {len(table)}")
    for i, row in enumerate(table):
        if len(row) != ncols:
            raise ValueError(f"{what}: row {i} has {len(row)} entries, expected {ncols}")
        for v in row:
            if not 0 <= v < limit:
                raise ValueError(f"{what}: entry {v} in row {i} is outside 0..{limit - 1}")
    return table


def _check_commutative_monoid(add: Table, n: int) -> None:
    for a in range(n):
        if add[0][a] != a or add[a][0] != a:
            raise IdentityFailure("add", a)
    for a in range(n):
        for b in range(a + 1, n):
            if add[a][b] != add[b][a]:
                raise NonCommutativeAdd(a, b)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise NonAssociative("add", a, b, c)


def validate_semiring(add, mul, one: int, name: str = "") -> FiniteSemiring:
    """Validate raw Cayley data and return an immutable semiring.

    Axiom order: additive commutative monoid, multiplicative monoid,
    two-sided distributivity, absorbing zero.
    """
    rows = tuple(add)
    n = len(rows)
    if n == 0:
        raise ValueError("empty carrier")
    add_t = _as_table(rows, n, n, n, "add")
    mul_t = _as_table(mul, n, n, n, "mul")
    if not 0 <= one < n:
        raise ValueError(f"one index {one} outside carrier 0..{n - 1}")

    _check_commutative_monoid(add_t, n)

    for a in range(n):
        if mul_t[one][a] != a or mul_t[a][one] != a:
            raise IdentityFailure("mul", a)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul_t[mul_t[a][b]][c] != mul_t[a][mul_t[b][c]]:
                    raise NonAssociative("mul", a, b, c)

    for s in range(n):
        for a in range(n):
            for b in range(n):
                if mul_t[s][add_t[a][b]] != add_t[mul_t[s][a]][mul_t[s][b]]:
                    raise NotDistributive("left", s, a, b)
    for s in range(n):
        for a in range(n):
            for b in range(n):
                if mul_t[add_t[a][b]][s] != add_t[mul_t[a][s]][mul_t[b][s]]:
                    raise NotDistributive("right", s, a, b)

    for s in range(n):
        if mul_t[0][s] != 0 or mul_t[s][0] != 0:
            raise ZeroNotAbsorbing(s)

    return FiniteSemiring(order=n, add=add_t, mul=mul_t, one=one, name=name)


def validate_semimodule(S: FiniteSemiring, add, action, name: str = "") -> FiniteSemimodule:
    """Validate a left semimodule over S given by addition and action tables."""
    rows = tuple(add)
    m = len(rows)
    if m == 0:
        raise ValueError("empty carrier")
    add_t = _as_table(rows, m, m, m, "add")
    act_t = _as_table(action, S.order, m, m, "action")

    _check_commutative_monoid(add_t, m)

    for s in range(S.order):
        for t in range(S.order):
            for x in range(m):
                if act_t[S.mul[s][t]][x] != act_t[s][act_t[t][x]]:
                    raise ActionAxiomFailure("assoc", (s, t, x))
    for s in range(S.order):
        for x in range(m):
            for y in range(m):
                if act_t[s][add_t[x][y]] != add_t[act_t[s][x]][act_t[s][y]]:
                    raise ActionAxiomFailure("left-distr", (s, x, y))
    for s in range(S.order):
        for t in range(S.order):
            for x in range(m):
                if act_t[S.add[s][t]][x] != add_t[act_t[s][x]][act_t[t][x]]:
                    raise ActionAxiomFailure("right-distr", (s, t, x))
    for x in range(m):
        if act_t[S.one][x] != x:
            raise ActionAxiomFailure("unit", (x,))
    for s in range(S.order):
        if act_t[s][0] != 0:
            raise ActionAxiomFailure("zero", (s, 0))
    for x in range(m):
        if act_t[0][x] != 0:
            raise ActionAxiomFailure("zero", (0, x))

    return FiniteSemimodule(semiring=S, order=m, add=add_t, action=act_t, name=name)


def regular_semimodule(S: FiniteSemiring) -> FiniteSemimodule:
    """S acting on itself by left multiplication."""
    return FiniteSemimodule(
        semiring=S, order=S.order, add=S.add, action=S.mul,
        name=f"{S.name or 'S'} (regular)",
    )


def opposite(S: FiniteSemiring) -> FiniteSemiring:
    """Multiplication reversed; used to treat right ideals as left ones."""
    mul_op = tuple(tuple(S.mul[b][a] for b in range(S.order)) for a in range(S.order))
    return FiniteSemiring(order=S.order, add=S.add, mul=mul_op, one=S.one,
                          name=f"{S.name or 'S'}^op")


def element_classes(x: Algebra) -> ElementClassReport:
    """Exact element-class subsets by definition scan."""
    add = x.add
    n = x.order
    rng = range(n)
    iplus = frozenset(m for m in rng if add[m][m] == m)
    zclass = frozenset(z for z in rng if any(add[z][m] == m for m in rng))
    vclass = frozenset(m for m in rng if any(add[m][k] == 0 for k in rng))
    aclass = frozenset(m for m in rng if any(add[add[m][k]][m] == m for k in rng))
    infinite = next((m for m in rng if all(add[m][j] == m for j in rng)), None)
    units = None
    if isinstance(x, FiniteSemiring):
        units = frozenset(
            u for u in rng
            if any(x.mul[u][v] == x.one and x.mul[v][u] == x.one for v in rng)
        )
    return ElementClassReport(iplus, zclass, vclass, aclass, infinite, units)


def is_ring(S: FiniteSemiring) -> bool:
    """True when every element has an additive inverse."""
    return element_classes(S).vclass == frozenset(range(S.order))


def classify_semiring(S: FiniteSemiring) -> PropertyFlags:
    rep = element_classes(S)
    n = S.order
    full = frozenset(range(n))
    one = S.one

    one_plus = frozenset(S.add[one][s] for s in range(n))
    anti_bounded = (rep.vclass | one_plus) == full
    gelfand = all(S.add[one][s] in rep.units for s in range(n))
    vn_regular = all(
        any(S.mul[S.mul[s][x]][s] == s for x in range(n)) for s in range(n)
    )
    commutative_mul = all(
        S.mul[a][b] == S.mul[b][a] for a in range(n) for b in range(a + 1, n)
    )
    from .congruences import enumerate_left_ideals  # deferred: layering

    left_subtractive = all(mask.is_subtractive for mask in enumerate_left_ideals(S))

    return PropertyFlags(
        zerosumfree=rep.vclass == frozenset({0}),
        zeroic=rep.zclass == full,
        additively_idempotent=rep.iplus == full,
        additively_regular=rep.aclass == full,
        anti_bounded=anti_bounded,
        gelfand=gelfand,
        vn_regular=vn_regular,
        left_subtractive=left_subtractive,
        commutative_mul=commutative_mul,
    )


def clifford_decomposition(x: Algebra) -> CliffordDecomposition:
    """Split an additively regular addition table into groups over a semilattice.

    Each element x sits in the group at the idempotent x + x', where x' is
    its unique inverse-like partner; the connecting maps are g -> g + b.
    """
    add = x.add
    n = x.order

    inverse = [0] * n
    for a in range(n):
        partners = [y for y in range(n) if add[add[a][y]][a] == a]
        if not partners:
            raise NotAdditivelyRegular(a)
        # y+a+y is the inverse for any weak partner y; commutativity makes it unique
        candidates = {add[add[y][a]][y] for y in partners}
        inverse[a] = min(candidates)

    idem = tuple(add[a][inverse[a]] for a in range(n))
    semilattice = tuple(sorted(set(idem)))
    groups = {
        e: tuple(sorted(a for a in range(n) if idem[a] == e)) for e in semilattice
    }
    join = {
        (a, b): add[a][b] for a in semilattice for b in semilattice
    }
    block_add = {}
    for e, members in groups.items():
        for a in members:
            for b in members:
                block_add[(a, b)] = add[a][b]
    connecting = {}
    for a in semilattice:
        for b in semilattice:
            if add[a][b] == b:
                connecting[(a, b)] = {g: add[g][b] for g in groups[a]}

    return CliffordDecomposition(
        semilattice=semilattice,
        groups=groups,
        idempotent_of=idem,
        inverse_of=tuple(inverse),
        join=join,
        block_add=block_add,
        connecting=connecting,
    )


def reconstruct_addition(dec: CliffordDecomposition, n: int) -> Table:
    """Rebuild the addition table using only the decomposition data."""
    rows = []
    for a in range(n):
        row = []
        ea = dec.idempotent_of[a]
        for b in range(n):
            eb = dec.idempotent_of[b]
            g = dec.join[(ea, eb)]
            row.append(dec.block_add[(dec.connecting[(ea, g)][a],
                                      dec.connecting[(eb, g)][b])])
        rows.append(tuple(row))
    return tuple(rows)


def submodule(M: FiniteSemimodule, elements: Iterable[int]) -> tuple[FiniteSemimodule, tuple[int, ...]]:
    """Restrict M to a closed subset; returns the subalgebra and its element list."""
    elems = tuple(sorted(set(elements)))
    if not elems or elems[0] != 0:
        raise NotASubsemimodule(("zero-missing",))
    pos = {e: i for i, e in enumerate(elems)}
    for a in elems:
        for b in elems:
            if M.add[a][b] not in pos:
                raise NotASubsemimodule(("add", a, b))
    for s in range(M.semiring.order):
        for a in elems:
            if M.action[s][a] not in pos:
                raise NotASubsemimodule(("action", s, a))
    add = tuple(tuple(pos[M.add[a][b]] for b in elems) for a in elems)
    action = tuple(tuple(pos[M.action[s][a]] for a in elems) for s in range(M.semiring.order))
    sub = FiniteSemimodule(semiring=M.semiring, order=len(elems), add=add,
                           action=action, name=f"{M.name or 'M'}|{list(elems)}")
    return sub, elems
