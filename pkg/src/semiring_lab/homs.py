"""Backtracking search over structure-preserving maps.

Everything here funnels into one kernel (`kernels.search_maps`): hom
enumeration, extension search, retracts, isomorphism with invariant
pruning, and the census of all semimodules of a bounded size.  Search
order is fixed (carrier indices ascending, images ascending), so every
"first witness" is the lexicographically least one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from . import kernels
from .config import MODEL_SIZE_CAP, size_cap
from .congruences import enumerate_congruences, simplicity_report
from .constructions import quotient
from .core import (
    Algebra,
    FiniteSemimodule,
    FiniteSemiring,
    regular_semimodule,
    submodule,
    validate_semimodule,
)
from .errors import SizeCapExceeded


@dataclass(frozen=True)
class Homomorphism:
    source: FiniteSemimodule
    target: FiniteSemimodule
    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.order

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.mapping)


def hom_violation(M: FiniteSemimodule, N: FiniteSemimodule,
                  mapping: Sequence[int]) -> Optional[tuple]:
    """None when mapping is a semimodule homomorphism, else a witness."""
    if len(mapping) != M.order:
        return ("length",)
    if mapping[0] != 0:
        return ("zero",)
    for a in range(M.order):
        for b in range(M.order):
            if mapping[M.add[a][b]] != N.add[mapping[a]][mapping[b]]:
                return ("add", a, b)
    for s in range(M.semiring.order):
        for a in range(M.order):
            if mapping[M.action[s][a]] != N.action[s][mapping[a]]:
                return ("action", s, a)
    return None


def _module_signature(M: FiniteSemimodule, N: FiniteSemimodule):
    src = ([v for row in M.add for v in row],)
    dst = ([v for row in N.add for v in row],)
    src_un = [list(row) for row in M.action]
    dst_un = [list(row) for row in N.action]
    return list(src), list(dst), src_un, dst_un


def enumerate_homs(M: FiniteSemimodule, N: FiniteSemimodule) -> list[Homomorphism]:
    """Complete, lexicographically ordered list of homomorphisms M -> N."""
    if M.semiring != N.semiring:
        raise ValueError("homomorphisms need a common base semiring")
    cap = size_cap()
    if M.order > cap or N.order > cap:
        raise SizeCapExceeded(max(M.order, N.order), cap)
    src_bin, dst_bin, src_un, dst_un = _module_signature(M, N)
    sols = kernels.search_maps(M.order, N.order, src_bin, dst_bin, src_un, dst_un,
                               [(0, 0)], None, False, 0)
    return [Homomorphism(M, N, s) for s in sols]


def find_extension(f: Homomorphism, ambient: FiniteSemimodule,
                   elements: Sequence[int]) -> Optional[Homomorphism]:
    """Extend f along the inclusion of `elements` into `ambient`.

    `elements[i]` is the ambient index of carrier point i of f.source.
    Returns some extension or None after exhaustive backtracking.
    """
    elements = tuple(elements)
    if len(elements) != f.source.order:
        raise ValueError("element list must enumerate the subsemimodule carrier")
    src_bin, dst_bin, src_un, dst_un = _module_signature(ambient, f.target)
    fixed = [(elements[i], f.mapping[i]) for i in range(len(elements))]
    sols = kernels.search_maps(ambient.order, f.target.order, src_bin, dst_bin,
                               src_un, dst_un, fixed, None, False, 1)
    if not sols:
        return None
    return Homomorphism(ambient, f.target, sols[0])


def extension_exists(ambient: FiniteSemimodule, elements: Sequence[int],
                     images: Sequence[int], target: FiniteSemimodule) -> bool:
    """find_extension with the partial map given directly in ambient indices."""
    src_bin, dst_bin, src_un, dst_un = _module_signature(ambient, target)
    fixed = list(zip(elements, images))
    sols = kernels.search_maps(ambient.order, target.order, src_bin, dst_bin,
                               src_un, dst_un, fixed, None, False, 1)
    return bool(sols)


def is_retract(ambient: FiniteSemimodule, elements: Sequence[int]) -> Optional[Homomorphism]:
    """A retraction of `ambient` onto the subsemimodule on `elements`, if any."""
    sub, elems = submodule(ambient, elements)
    identity = Homomorphism(sub, sub, tuple(range(sub.order)))
    return find_extension(identity, ambient, elems)


# ---------------------------------------------------------------------------
# Isomorphism with invariant pruning


def _multiplicity_profile(row: Sequence[int]) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for v in row:
        counts[v] = counts.get(v, 0) + 1
    return tuple(sorted(counts.values()))


def _orbit_size(add, x: int) -> int:
    seen = set()
    cur = x
    while cur not in seen:
        seen.add(cur)
        cur = add[cur][x]
    return len(seen)


def _semimodule_profiles(M: FiniteSemimodule) -> list[tuple]:
    out = []
    for x in range(M.order):
        scal = tuple(
            (M.action[s][x] == x, M.action[s][x] == 0)
            for s in range(M.semiring.order)
        )
        out.append((
            x == 0,
            M.add[x][x] == x,
            _orbit_size(M.add, x),
            _multiplicity_profile(M.add[x]),
            scal,
        ))
    return out


def _semiring_profiles(S: FiniteSemiring) -> list[tuple]:
    out = []
    for x in range(S.order):
        out.append((
            x == 0,
            x == S.one,
            S.add[x][x] == x,
            S.mul[x][x] == x,
            _orbit_size(S.add, x),
            _multiplicity_profile(S.add[x]),
            _multiplicity_profile(S.mul[x]),
            _multiplicity_profile([S.mul[a][x] for a in range(S.order)]),
        ))
    return out


def are_isomorphic(X: Algebra, Y: Algebra) -> Optional[tuple[int, ...]]:
    """A structure-preserving bijection X -> Y, or None (exhaustive search).

    Semirings are compared as semirings; semimodules must share their
    base semiring.  The inverse of a bijective homomorphism of finite
    algebras is again a homomorphism, so the map itself is a certificate.
    """
    if isinstance(X, FiniteSemiring) != isinstance(Y, FiniteSemiring):
        raise ValueError("cannot compare a semiring with a semimodule")
    if X.order != Y.order:
        return None
    cap = size_cap()
    if X.order > cap:
        raise SizeCapExceeded(X.order, cap)
    if isinstance(X, FiniteSemiring):
        src_bin = [X.flat_add(), X.flat_mul()]
        dst_bin = [Y.flat_add(), Y.flat_mul()]
        src_un: list[list[int]] = []
        dst_un: list[list[int]] = []
        fixed = [(0, 0), (X.one, Y.one)]
        px, py = _semiring_profiles(X), _semiring_profiles(Y)
    else:
        if X.semiring != Y.semiring:
            raise ValueError("semimodule isomorphism needs a common base semiring")
        src_bin, dst_bin, src_un, dst_un = _module_signature(X, Y)
        fixed = [(0, 0)]
        px, py = _semimodule_profiles(X), _semimodule_profiles(Y)
    if sorted(px) != sorted(py):
        return None
    allowed = [[1 if px[i] == py[v] else 0 for v in range(Y.order)]
               for i in range(X.order)]
    sols = kernels.search_maps(X.order, Y.order, src_bin, dst_bin, src_un, dst_un,
                               fixed, allowed, True, 1)
    return sols[0] if sols else None


# ---------------------------------------------------------------------------
# Semimodule census


def _relabel_monoid(flat: Sequence[int], m: int, p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (m * m)
    for i in range(m):
        for j in range(m):
            out[p[i] * m + p[j]] = p[flat[i * m + j]]
    return tuple(out)


def _perms_fixing_zero(m: int):
    for tail in itertools.permutations(range(1, m)):
        yield (0,) + tail


def _is_canonical_monoid(flat: tuple[int, ...], m: int) -> bool:
    return all(flat <= _relabel_monoid(flat, m, p) for p in _perms_fixing_zero(m))


def _monoid_automorphisms(flat: tuple[int, ...], m: int) -> list[tuple[int, ...]]:
    return [p for p in _perms_fixing_zero(m) if _relabel_monoid(flat, m, p) == flat]


def _relabel_action(action: tuple[tuple[int, ...], ...], p: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    m = len(action[0])
    out = []
    for row in action:
        new = [0] * m
        for x in range(m):
            new[p[x]] = p[row[x]]
        out.append(tuple(new))
    return tuple(out)


def _actions_over(S: FiniteSemiring, add_flat: tuple[int, ...], m: int) -> list[tuple[tuple[int, ...], ...]]:
    """All scalar actions of S on the monoid, via homs into its endomorphisms.

    A left action is exactly a semiring map S -> End(+) sending 0 to the
    zero map and 1 to the identity.
    """
    add_rows = [list(add_flat[i * m:(i + 1) * m]) for i in range(m)]
    endos = kernels.search_maps(m, m, [list(add_flat)], [list(add_flat)],
                                [], [], [(0, 0)], None, False, 0)
    index = {e: k for k, e in enumerate(endos)}
    zero_endo = index[tuple(0 for _ in range(m))]
    id_endo = index[tuple(range(m))]
    ne = len(endos)
    end_add = [0] * (ne * ne)
    end_comp = [0] * (ne * ne)
    for a, ea in enumerate(endos):
        for b, eb in enumerate(endos):
            end_add[a * ne + b] = index[tuple(add_rows[ea[x]][eb[x]] for x in range(m))]
            end_comp[a * ne + b] = index[tuple(ea[eb[x]] for x in range(m))]
    sols = kernels.search_maps(S.order, ne, [S.flat_add(), S.flat_mul()],
                               [end_add, end_comp], [], [],
                               [(0, zero_endo), (S.one, id_endo)], None, False, 0)
    actions = []
    for phi in sols:
        actions.append(tuple(endos[phi[s]] for s in range(S.order)))
    actions.sort()
    return actions


def iter_semimodules(S: FiniteSemiring, max_size: int) -> Iterator[FiniteSemimodule]:
    """All semimodules over S with carrier size <= max_size, one per
    isomorphism class, sizes ascending, lexicographically least tables first."""
    cap = min(MODEL_SIZE_CAP, size_cap())
    if max_size > cap:
        raise SizeCapExceeded(max_size, cap)
    for m in range(1, max_size + 1):
        for flat in kernels.comm_monoid_tables(m):
            flat = tuple(flat)
            if not _is_canonical_monoid(flat, m):
                continue
            autos = _monoid_automorphisms(flat, m)
            add_rows = tuple(tuple(flat[i * m:(i + 1) * m]) for i in range(m))
            for action in _actions_over(S, flat, m):
                if len(autos) > 1:
                    if any(_relabel_action(action, p) < action for p in autos):
                        continue
                yield validate_semimodule(S, add_rows, action)


def enumerate_semimodules(S: FiniteSemiring, max_size: int,
                          simple_only: bool = False) -> list[FiniteSemimodule]:
    out = []
    for M in iter_semimodules(S, max_size):
        if simple_only and not simplicity_report(M).simple:
            continue
        out.append(M)
    return out


def _serial(M: FiniteSemimodule):
    return (M.order, M.flat_add(), [v for row in M.action for v in row])


def dedupe_by_isomorphism(mods: Sequence[FiniteSemimodule]) -> list[FiniteSemimodule]:
    """Keep one representative per isomorphism class (the lex-least tables)."""
    ordered = sorted(mods, key=_serial)
    reps: list[FiniteSemimodule] = []
    for M in ordered:
        if any(r.order == M.order and are_isomorphic(r, M) is not None for r in reps):
            continue
        reps.append(M)
    return reps


def enumerate_cyclic_semimodules(S: FiniteSemiring) -> list[FiniteSemimodule]:
    """Quotients of the regular semimodule, one per isomorphism class."""
    reg = regular_semimodule(S)
    quotients = [quotient(reg, theta)[0] for theta in enumerate_congruences(reg)]
    return dedupe_by_isomorphism(quotients)


# ---------------------------------------------------------------------------
# Essential extensions


def is_essential_extension(N: FiniteSemimodule, elements: Sequence[int]):
    """Whether N is an essential extension of the subsemimodule on `elements`.

    True when every non-diagonal congruence of N relates two distinct
    subsemimodule points; otherwise returns the separating congruence.
    """
    submodule(N, elements)  # raises if not closed
    elems = tuple(sorted(set(elements)))
    for theta in enumerate_congruences(N):
        if theta.is_diagonal():
            continue
        lab = theta.labels()
        trivial_on_sub = all(
            lab[a] != lab[b]
            for i, a in enumerate(elems) for b in elems[i + 1:]
        )
        if trivial_on_sub:
            return False, theta
    return True, None


def embeddings(M: FiniteSemimodule, N: FiniteSemimodule) -> list[Homomorphism]:
    """All injective homomorphisms M -> N, lexicographic order."""
    if M.semiring != N.semiring:
        raise ValueError("embeddings need a common base semiring")
    src_bin, dst_bin, src_un, dst_un = _module_signature(M, N)
    sols = kernels.search_maps(M.order, N.order, src_bin, dst_bin, src_un, dst_un,
                               [(0, 0)], None, True, 0)
    return [Homomorphism(M, N, s) for s in sols]
