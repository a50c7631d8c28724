"""Congruence, subobject, and ideal enumeration; simplicity and the radical.

Congruences are computed by closing merge-pairs under all operation
translations (the compiled kernel does the closure), and the full
congruence set is the join-closure of the principal congruences.  A
brute-force all-partitions oracle is kept alongside for small carriers
so the two routes can be cross-checked.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from . import kernels
from .config import size_cap
from .core import Algebra, FiniteSemimodule, FiniteSemiring, regular_semimodule, opposite
from .errors import SizeCapExceeded


@dataclass(frozen=True)
class Congruence:
    """Partition of a carrier, blocks sorted by least element."""

    size: int
    blocks: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_labels(labels: Iterable[int]) -> "Congruence":
        labels = tuple(labels)
        buckets: dict[int, list[int]] = {}
        for i, lab in enumerate(labels):
            buckets.setdefault(lab, []).append(i)
        blocks = tuple(sorted((tuple(sorted(b)) for b in buckets.values()),
                              key=lambda b: b[0]))
        return Congruence(size=len(labels), blocks=blocks)

    @staticmethod
    def diagonal(n: int) -> "Congruence":
        return Congruence(size=n, blocks=tuple((i,) for i in range(n)))

    @staticmethod
    def universal(n: int) -> "Congruence":
        return Congruence(size=n, blocks=(tuple(range(n)),))

    def labels(self) -> tuple[int, ...]:
        lab = [0] * self.size
        for k, block in enumerate(self.blocks):
            for x in block:
                lab[x] = k
        return tuple(lab)

    def related(self, a: int, b: int) -> bool:
        lab = self.labels()
        return lab[a] == lab[b]

    def is_diagonal(self) -> bool:
        return len(self.blocks) == self.size

    def is_universal(self) -> bool:
        return len(self.blocks) == 1

    def __str__(self):
        return " | ".join(" ".join(str(x) for x in b) for b in self.blocks)


def join(c1: Congruence, c2: Congruence) -> Congruence:
    """Join in the congruence lattice.

    For congruences the transitive closure of the union is already
    compatible with every operation, so no re-closure under the algebra
    operations is needed.
    """
    n = c1.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cong in (c1, c2):
        for block in cong.blocks:
            r = block[0]
            for x in block[1:]:
                ra, rb = find(r), find(x)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    return Congruence.from_labels(tuple(_canonical_labels(parent, find, n)))


def _canonical_labels(parent, find, n):
    seen: dict[int, int] = {}
    out = []
    for i in range(n):
        r = find(i)
        if r not in seen:
            seen[r] = len(seen)
        out.append(seen[r])
    return out


def translation_ops(x: Algebra) -> list[list[int]]:
    """Unary operations whose closure-compatibility equals congruence-hood."""
    ops: list[list[int]] = [list(row) for row in x.add]
    if isinstance(x, FiniteSemiring):
        ops.extend(list(row) for row in x.mul)
        ops.extend([x.mul[a][c] for a in range(x.order)] for c in range(x.order))
    else:
        ops.extend(list(row) for row in x.action)
    return ops


def compatibility_witness(x: Algebra, labels: tuple[int, ...]) -> Optional[tuple]:
    """None when the partition is a congruence, else (op-index, a, b)."""
    ops = translation_ops(x)
    n = x.order
    for a in range(n):
        for b in range(a + 1, n):
            if labels[a] != labels[b]:
                continue
            for k, op in enumerate(ops):
                if labels[op[a]] != labels[op[b]]:
                    return (k, a, b)
    return None


def principal_congruence(x: Algebra, a: int, b: int) -> Congruence:
    """Smallest congruence of x identifying a and b."""
    labels = kernels.closure_labels(x.order, translation_ops(x), [(a, b)])
    return Congruence.from_labels(labels)


def _sort_congruences(congs: Iterable[Congruence]) -> list[Congruence]:
    # diagonal first, universal last, deterministic in between
    return sorted(congs, key=lambda c: (-len(c.blocks), c.blocks))


def enumerate_congruences(x: Algebra) -> list[Congruence]:
    """All congruences, as the join-closure of the principal congruences."""
    n = x.order
    cap = size_cap()
    if n > cap:
        raise SizeCapExceeded(n, cap)
    principals = []
    seen = set()
    ops = translation_ops(x)
    for a in range(n):
        for b in range(a + 1, n):
            c = Congruence.from_labels(kernels.closure_labels(n, ops, [(a, b)]))
            if c.blocks not in seen:
                seen.add(c.blocks)
                principals.append(c)
    found = {Congruence.diagonal(n).blocks: Congruence.diagonal(n)}
    for p in principals:
        found[p.blocks] = p
    frontier = list(principals)
    while frontier:
        nxt = []
        for c in frontier:
            for p in principals:
                j = join(c, p)
                if j.blocks not in found:
                    found[j.blocks] = j
                    nxt.append(j)
        frontier = nxt
    return _sort_congruences(found.values())


def _partitions(n: int):
    """All partitions of range(n) as label tuples (restricted growth strings)."""
    labels = [0] * n

    def rec(i, maxlab):
        if i == n:
            yield tuple(labels)
            return
        for lab in range(maxlab + 2):
            labels[i] = lab
            yield from rec(i + 1, max(maxlab, lab))

    if n == 0:
        yield ()
        return
    yield from rec(1, 0)


def enumerate_congruences_bruteforce(x: Algebra) -> list[Congruence]:
    """Independent oracle: filter every partition of the carrier."""
    n = x.order
    if n > 8:
        raise SizeCapExceeded(n, 8)
    out = []
    for labels in _partitions(n):
        if compatibility_witness(x, labels) is None:
            out.append(Congruence.from_labels(labels))
    return _sort_congruences(out)


# ---------------------------------------------------------------------------
# Subsets: subsemimodules, ideals, flags


@dataclass(frozen=True)
class SubsetMask:
    """A closed subset together with its definition-scan flags."""

    size: int
    elements: tuple[int, ...]
    is_subsemimodule: bool
    is_subtractive: bool
    is_strong: bool
    is_left_ideal: bool = False
    is_right_ideal: bool = False

    def mask(self) -> int:
        m = 0
        for e in self.elements:
            m |= 1 << e
        return m


def _close_subset(seed: frozenset[int], add, unary_rows) -> frozenset[int]:
    cur = set(seed)
    cur.add(0)
    frontier = list(cur)
    while frontier:
        a = frontier.pop()
        for b in list(cur):
            c = add[a][b]
            if c not in cur:
                cur.add(c)
                frontier.append(c)
        for row in unary_rows:
            c = row[a]
            if c not in cur:
                cur.add(c)
                frontier.append(c)
    return frozenset(cur)


def _closed_subsets(n: int, add, unary_rows) -> list[frozenset[int]]:
    """All subsets containing 0 closed under add and the unary rows."""
    zero_closure = _close_subset(frozenset(), add, unary_rows)
    found = {zero_closure}
    frontier = [zero_closure]
    while frontier:
        base = frontier.pop()
        for x in range(n):
            if x in base:
                continue
            bigger = _close_subset(base | {x}, add, unary_rows)
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    return sorted(found, key=lambda s: (len(s), tuple(sorted(s))))


def _subtractive(elems: frozenset[int], add, n: int) -> bool:
    # m in K and m+m' in K  =>  m' in K
    for m in elems:
        for mp in range(n):
            if mp not in elems and add[m][mp] in elems:
                return False
    return True


def _strong(elems: frozenset[int], add, n: int) -> bool:
    # m+m' in K  =>  m and m' in K
    for m in range(n):
        for mp in range(n):
            if add[m][mp] in elems and (m not in elems or mp not in elems):
                return False
    return True


def _masks_for(x, subsets, left_rows=None, right_rows=None) -> list[SubsetMask]:
    add = x.add
    n = x.order
    out = []
    for elems in subsets:
        is_left = is_right = False
        if left_rows is not None:
            is_left = all(row[a] in elems for row in left_rows for a in elems)
        if right_rows is not None:
            is_right = all(row[a] in elems for row in right_rows for a in elems)
        out.append(SubsetMask(
            size=n,
            elements=tuple(sorted(elems)),
            is_subsemimodule=True,
            is_subtractive=_subtractive(elems, add, n),
            is_strong=_strong(elems, add, n),
            is_left_ideal=is_left,
            is_right_ideal=is_right,
        ))
    return out


def enumerate_subsemimodules(M: FiniteSemimodule) -> list[SubsetMask]:
    """All subsets containing 0 closed under addition and the action."""
    n = M.order
    cap = size_cap()
    if n > cap:
        raise SizeCapExceeded(n, cap)
    rows = [list(r) for r in M.action]
    subsets = _closed_subsets(n, M.add, rows)
    return _masks_for(M, subsets)


def enumerate_left_ideals(S: FiniteSemiring) -> list[SubsetMask]:
    n = S.order
    cap = size_cap()
    if n > cap:
        raise SizeCapExceeded(n, cap)
    left_rows = [list(r) for r in S.mul]   # x -> s*x for each s
    right_rows = [[S.mul[a][c] for a in range(n)] for c in range(n)]  # x -> x*c
    subsets = _closed_subsets(n, S.add, left_rows)
    return _masks_for(S, subsets, left_rows, right_rows)


def enumerate_right_ideals(S: FiniteSemiring) -> list[SubsetMask]:
    n = S.order
    cap = size_cap()
    if n > cap:
        raise SizeCapExceeded(n, cap)
    left_rows = [list(r) for r in S.mul]
    right_rows = [[S.mul[a][c] for a in range(n)] for c in range(n)]
    subsets = _closed_subsets(n, S.add, right_rows)
    return _masks_for(S, subsets, left_rows, right_rows)


def enumerate_ideals(S: FiniteSemiring) -> list[SubsetMask]:
    """Two-sided ideals."""
    n = S.order
    cap = size_cap()
    if n > cap:
        raise SizeCapExceeded(n, cap)
    left_rows = [list(r) for r in S.mul]
    right_rows = [[S.mul[a][c] for a in range(n)] for c in range(n)]
    subsets = _closed_subsets(n, S.add, left_rows + right_rows)
    return _masks_for(S, subsets, left_rows, right_rows)


# ---------------------------------------------------------------------------
# Simplicity, semisimplicity, radical


@dataclass(frozen=True)
class SimplicityReport:
    congruence_count: int
    subobject_count: int
    simple: Optional[bool] = None
    atom: Optional[bool] = None
    s_simple: Optional[bool] = None
    congruence_simple: Optional[bool] = None
    ideal_simple: Optional[bool] = None


def simplicity_report(M: FiniteSemimodule) -> SimplicityReport:
    congs = enumerate_congruences(M)
    subs = enumerate_subsemimodules(M)
    nonzero = M.order > 1
    simple = nonzero and len(congs) == 2
    atom = nonzero and len(subs) == 2
    s_simple = nonzero and not any(
        1 < len(s.elements) < M.order and s.is_subtractive for s in subs
    )
    # the zero semimodule has one congruence/subobject only and is none of these
    if M.order == 1:
        simple = atom = s_simple = False
    return SimplicityReport(
        congruence_count=len(congs),
        subobject_count=len(subs),
        simple=simple,
        atom=atom,
        s_simple=s_simple,
    )


def semiring_simplicity(S: FiniteSemiring) -> SimplicityReport:
    congs = enumerate_congruences(S)
    ideals = enumerate_ideals(S)
    nonzero = S.order > 1
    return SimplicityReport(
        congruence_count=len(congs),
        subobject_count=len(ideals),
        congruence_simple=nonzero and len(congs) == 2,
        ideal_simple=nonzero and len(ideals) == 2,
    )


@dataclass(frozen=True)
class SemisimplicityCertificate:
    semisimple: bool
    atom_ideals: Optional[tuple[tuple[int, ...], ...]]
    atom_ideal_count: int


def _is_atom_ideal(S: FiniteSemiring, elems: tuple[int, ...],
                   all_left: list[SubsetMask]) -> bool:
    if len(elems) <= 1:
        return False
    inside = [m.elements for m in all_left if set(m.elements) <= set(elems)]
    return sorted(inside) == sorted([(0,), elems])


def is_semisimple(S: FiniteSemiring) -> SemisimplicityCertificate:
    """Search for a family of atom left ideals summing directly onto S."""
    lefts = enumerate_left_ideals(S)
    atoms = [m.elements for m in lefts if _is_atom_ideal(S, m.elements, lefts)]

    n = S.order

    def direct_sum_family(family: list[tuple[int, ...]]) -> bool:
        total = 1
        for f in family:
            total *= len(f)
        if total != n:
            return False
        seen = set()
        for combo in itertools.product(*family):
            s = 0
            for x in combo:
                s = S.add[s][x]
            if s in seen:
                return False
            seen.add(s)
        return len(seen) == n

    def search(start: int, family: list[tuple[int, ...]], size: int):
        if size == n:
            return list(family) if direct_sum_family(family) else None
        for i in range(start, len(atoms)):
            cand = atoms[i]
            if size * len(cand) > n:
                continue
            family.append(cand)
            got = search(i + 1, family, size * len(cand))
            if got is not None:
                return got
            family.pop()
        return None

    if n == 1:
        # the zero semiring is the empty direct sum
        return SemisimplicityCertificate(True, (), 0)
    found = search(0, [], 1)
    return SemisimplicityCertificate(
        semisimple=found is not None,
        atom_ideals=tuple(found) if found is not None else None,
        atom_ideal_count=len(atoms),
    )


def _is_semiregular(S: FiniteSemiring, elems: tuple[int, ...]) -> bool:
    # for every i1,i2 there are j1,j2 with
    # i1+j1+i1*j1+i2*j2 == i2+j2+i1*j2+i2*j1
    add, mul = S.add, S.mul
    for i1 in elems:
        for i2 in elems:
            ok = False
            for j1 in elems:
                lhs_base = add[add[i1][j1]][mul[i1][j1]]
                rhs_i2j1 = mul[i2][j1]
                for j2 in elems:
                    lhs = add[lhs_base][mul[i2][j2]]
                    rhs = add[add[add[i2][j2]][mul[i1][j2]]][rhs_i2j1]
                    if lhs == rhs:
                        ok = True
                        break
                if ok:
                    break
            if not ok:
                return False
    return True


def jacobson_radical(S: FiniteSemiring) -> SubsetMask:
    """Sum of all right semiregular right ideals (the Bourne radical)."""
    rights = enumerate_right_ideals(S)
    semiregular = [m for m in rights if _is_semiregular(S, m.elements)]
    total: set[int] = {0}
    for m in semiregular:
        total.update(m.elements)
    closed = _close_subset(frozenset(total), S.add, [])
    n = S.order
    right_rows = [[S.mul[a][c] for a in range(n)] for c in range(n)]
    left_rows = [list(r) for r in S.mul]
    return _masks_for(S, [closed], left_rows, right_rows)[0]
