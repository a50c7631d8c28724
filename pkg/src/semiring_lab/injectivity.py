"""Bounded injectivity verdicts.

Injectivity quantifies over every extension, so a bounded search can
only ever refute; a clean sweep is reported as holds-at-bound, never as
an unconditional fact.  Witnesses are chosen lexicographically (ambient
size, ambient tables, subset, partial map) and re-validate on their own:
the partial map is a homomorphism from a closed subset and the
exhaustive extension search comes back empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .congruences import enumerate_subsemimodules
from .core import FiniteSemimodule, FiniteSemiring, submodule
from .homs import (
    Homomorphism,
    enumerate_cyclic_semimodules,
    enumerate_homs,
    enumerate_semimodules,
    embeddings,
    extension_exists,
    is_essential_extension,
    iter_semimodules,
)


class VerdictStatus(Enum):
    HOLDS = "holds-at-bound"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive-at-bound"


@dataclass(frozen=True)
class InjectivityWitness:
    """A non-extendable triple: target, ambient, closed subset, partial map."""

    target: FiniteSemimodule
    ambient: FiniteSemimodule
    subobject: tuple[int, ...]
    partial_map: tuple[tuple[int, int], ...]  # (ambient element, target element)


@dataclass(frozen=True)
class Verdict:
    status: VerdictStatus
    bound: int
    witness: Optional[InjectivityWitness] = None
    detail: str = ""

    def exit_code(self) -> int:
        return {VerdictStatus.HOLDS: 0,
                VerdictStatus.REFUTED: 1,
                VerdictStatus.INCONCLUSIVE: 2}[self.status]

    def summary(self) -> str:
        text = f"{self.status.value} (bound {self.bound})"
        if self.witness is not None:
            w = self.witness
            pairs = ", ".join(f"{a}->{b}" for a, b in w.partial_map)
            text += (f"; witness: ambient order {w.ambient.order}, "
                     f"subset {list(w.subobject)}, map {{{pairs}}} "
                     f"into target of order {w.target.order}")
        if self.detail:
            text += f"; {self.detail}"
        return text


def check_witness(target: FiniteSemimodule, ambient: FiniteSemimodule,
                  subset: Sequence[int], partial_map: Sequence[tuple[int, int]]) -> Optional[InjectivityWitness]:
    """Return a validated witness if the given triple really is non-extendable."""
    sub, elems = submodule(ambient, subset)
    images = dict(partial_map)
    mapping = tuple(images[e] for e in elems)
    from .homs import hom_violation

    if hom_violation(sub, target, mapping) is not None:
        raise ValueError("partial map is not a homomorphism on the subset")
    if extension_exists(ambient, elems, mapping, target):
        return None
    return InjectivityWitness(
        target=target, ambient=ambient, subobject=elems,
        partial_map=tuple((e, images[e]) for e in elems),
    )


def _scan_targets(targets: Sequence[FiniteSemimodule], bound: int) -> Optional[InjectivityWitness]:
    """First non-extendable (ambient, subset, map) over all targets, or None.

    Subsets equal to {0} or to the whole ambient always extend (zero map,
    the map itself) and are skipped.
    """
    if not targets:
        return None
    S = targets[0].semiring
    for B in iter_semimodules(S, bound):
        subs = [mask.elements for mask in enumerate_subsemimodules(B)
                if 1 < len(mask.elements) < B.order]
        if not subs:
            continue
        restrictions = {}
        for M in targets:
            homs_bm = enumerate_homs(B, M)
            restrictions[id(M)] = [h.mapping for h in homs_bm]
        for elems in sorted(subs):
            sub, _ = submodule(B, elems)
            for M in targets:
                reachable = {tuple(h[e] for e in elems) for h in restrictions[id(M)]}
                for f in enumerate_homs(sub, M):
                    if f.mapping not in reachable:
                        # double-check with the direct exhaustive search
                        witness = check_witness(
                            M, B, elems,
                            [(e, f.mapping[i]) for i, e in enumerate(elems)],
                        )
                        if witness is not None:
                            return witness
        # continue with the next ambient
    return None


def injectivity_verdict(M: FiniteSemimodule, bound: int,
                        candidates: Sequence[tuple] = ()) -> Verdict:
    """Bounded injectivity of M: test every (ambient, subset, map) triple
    with ambient size <= bound; explicit candidate triples run first.

    Candidates are (ambient, subset, partial-map-pairs) tuples.
    """
    for ambient, subset, pairs in candidates:
        witness = check_witness(M, ambient, subset, pairs)
        if witness is not None:
            return Verdict(VerdictStatus.REFUTED, bound, witness)
    if bound < 1:
        return Verdict(VerdictStatus.INCONCLUSIVE, bound,
                       detail="no exhaustive search was run")
    if M.order == 1:
        return Verdict(VerdictStatus.HOLDS, bound,
                       detail="the zero semimodule is terminal")
    witness = _scan_targets([M], bound)
    if witness is not None:
        return Verdict(VerdictStatus.REFUTED, bound, witness)
    return Verdict(VerdictStatus.HOLDS, bound)


def ci_verdict(S: FiniteSemiring, bound: int,
               candidates: Sequence[tuple] = ()) -> Verdict:
    """Are all cyclic semimodules of S injective, tested up to `bound`?

    `candidates` are (target, ambient, subset, partial-map) quadruples
    checked before the exhaustive scan; with bound 0 only they run
    (witness mode), and a clean witness-mode run is inconclusive.
    """
    for target, ambient, subset, pairs in candidates:
        witness = check_witness(target, ambient, subset, pairs)
        if witness is not None:
            return Verdict(VerdictStatus.REFUTED, bound, witness)
    if bound < 1:
        return Verdict(VerdictStatus.INCONCLUSIVE, bound,
                       detail="witness mode: no exhaustive search was run")
    cyclics = [M for M in enumerate_cyclic_semimodules(S) if M.order > 1]
    witness = _scan_targets(cyclics, bound)
    if witness is not None:
        return Verdict(VerdictStatus.REFUTED, bound, witness)
    return Verdict(VerdictStatus.HOLDS, bound,
                   detail=f"{len(cyclics)} nonzero cyclic semimodules tested")


def v_verdict(S: FiniteSemiring, simple_bound: int, ext_bound: int) -> Verdict:
    """Are all simple semimodules of S (size <= simple_bound) injective,
    tested up to ext_bound?  Cross-checked through essential extensions:
    a proper essential extension of a simple semimodule is itself a
    refutation and is converted into a non-extendable triple.
    """
    simples = enumerate_semimodules(S, simple_bound, simple_only=True)
    if not simples:
        return Verdict(VerdictStatus.HOLDS, ext_bound,
                       detail=f"no simple semimodules of size <= {simple_bound}")
    witness = _scan_targets(simples, ext_bound)
    if witness is not None:
        return Verdict(VerdictStatus.REFUTED, ext_bound, witness)
    essential = _essential_extension_refutation(S, simples, ext_bound)
    if essential is not None:
        return Verdict(VerdictStatus.REFUTED, ext_bound, essential,
                       detail="found via a proper essential extension")
    return Verdict(VerdictStatus.HOLDS, ext_bound,
                   detail=f"{len(simples)} simple semimodules tested")


def _essential_extension_refutation(S, simples, bound) -> Optional[InjectivityWitness]:
    """Search for a proper essential extension of a simple semimodule.

    If N > M is essential over an embedded copy of M, the inverse of the
    embedding cannot extend to N -> M (an extension would be injective),
    so the triple is a genuine witness.
    """
    for N in iter_semimodules(S, bound):
        for M in simples:
            if M.order >= N.order:
                continue
            for emb in embeddings(M, N):
                image = tuple(sorted(emb.mapping))
                essential, _ = is_essential_extension(N, image)
                if not essential:
                    continue
                back = {emb.mapping[i]: i for i in range(M.order)}
                pairs = [(e, back[e]) for e in image]
                witness = check_witness(M, N, image, pairs)
                if witness is not None:
                    return witness
    return None
