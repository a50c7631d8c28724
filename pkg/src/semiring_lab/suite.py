"""The bundled desk-scale verification suite.

Each check re-derives one known fact about the small semirings built by
`constructions` (flag scans, censuses, refutation witnesses, radicals,
cross-checked invariants).  Check ids are stable; loci state the claim
being verified.  Reports are deterministic: two runs with the same
profile produce identical results apart from timings.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import congruences, constructions, core, homs, injectivity
from .injectivity import VerdictStatus

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    locus: str
    status: str
    seconds: float
    witness: str = ""


@dataclass(frozen=True)
class Check:
    check_id: str
    locus: str
    run: Callable[[bool], tuple[str, str]]  # fast-flag -> (status, witness summary)


def _verdict_status(verdict, expected: VerdictStatus) -> tuple[str, str]:
    if verdict.status is expected:
        return PASS, verdict.summary()
    if verdict.status is VerdictStatus.INCONCLUSIVE:
        return INCONCLUSIVE, verdict.summary()
    return FAIL, verdict.summary()


def _bool_status(ok: bool, note: str = "") -> tuple[str, str]:
    return (PASS if ok else FAIL), note


# ---------------------------------------------------------------------------
# Individual checks


def _chain_flags(fast: bool):
    for n in range(1, 5):
        S = constructions.chain_semiring(n)
        flags = core.classify_semiring(S)
        rep = core.element_classes(S)
        ok = (flags.zerosumfree and flags.zeroic and flags.additively_idempotent
              and flags.anti_bounded and rep.infinite == n)
        if not ok:
            return FAIL, f"chain of length {n + 1} failed the flag scan"
    return PASS, "chains of orders 2..5"


def _b3_cyclic_census(fast: bool):
    B3 = constructions.chain_semiring(2)
    census = homs.enumerate_cyclic_semimodules(B3)
    orders = sorted(M.order for M in census)
    if orders != [1, 2, 3]:
        return FAIL, f"expected orders [1, 2, 3], got {orders}"
    reg = core.regular_semimodule(B3)
    full = next(M for M in census if M.order == 3)
    if homs.are_isomorphic(full, reg) is None:
        return FAIL, "order-3 class is not the regular semimodule"
    return PASS, "exactly two nonzero classes"


def _b3_character(fast: bool):
    B3 = constructions.chain_semiring(2)
    reg = core.regular_semimodule(B3)
    ch = constructions.character_semimodule(reg)
    return _bool_status(homs.are_isomorphic(ch, reg) is not None,
                        f"character carrier has {ch.order} maps")


def _b3_ci(fast: bool):
    bound = 4 if fast else 5
    verdict = injectivity.ci_verdict(constructions.chain_semiring(2), bound)
    return _verdict_status(verdict, VerdictStatus.HOLDS)


def _b4_not_injective(fast: bool):
    B4 = constructions.chain_semiring(3)
    verdict = injectivity.injectivity_verdict(core.regular_semimodule(B4), 5)
    return _verdict_status(verdict, VerdictStatus.REFUTED)


def _b4_witness_mode(fast: bool):
    M, sub, pairs = constructions.b4_extension_counterexample()
    B4 = constructions.chain_semiring(3)
    reg = core.regular_semimodule(B4)
    verdict = injectivity.injectivity_verdict(reg, 0, candidates=[(M, sub, pairs)])
    return _verdict_status(verdict, VerdictStatus.REFUTED)


def _b31_not_retract(fast: bool):
    M9, sub, _ = constructions.b31_retract_counterexample()
    retraction = homs.is_retract(M9, sub)
    return _bool_status(retraction is None, "no retraction onto the embedded copy")


def _b31_ci_witness(fast: bool):
    S = constructions.b31()
    M9, sub, pairs = constructions.b31_retract_counterexample()
    reg = core.regular_semimodule(S)
    verdict = injectivity.ci_verdict(S, 0, candidates=[(reg, M9, sub, pairs)])
    return _verdict_status(verdict, VerdictStatus.REFUTED)


def _b2sq_quotients(fast: bool):
    B = constructions.boolean_semiring()
    reg = core.regular_semimodule(B)
    b2 = constructions.direct_sum(reg, reg)
    quots = homs.dedupe_by_isomorphism(
        [constructions.quotient(b2, th)[0] for th in congruences.enumerate_congruences(b2)]
    )
    orders = sorted(Q.order for Q in quots)
    if orders != [1, 2, 3, 4]:
        return FAIL, f"quotient orders {orders}"
    chain3 = core.validate_semimodule(
        B, ((0, 1, 2), (1, 1, 2), (2, 2, 2)), ((0, 0, 0), (0, 1, 2))
    )
    ok = (any(Q.order == 3 and homs.are_isomorphic(Q, chain3) for Q in quots)
          and any(Q.order == 4 and homs.are_isomorphic(Q, b2) for Q in quots))
    return _bool_status(ok, "quotients: zero, two-chain, three-chain, square")


def _morita_roundtrip(fast: bool):
    B = constructions.boolean_semiring()
    reg = core.regular_semimodule(B)
    b2 = constructions.direct_sum(reg, reg)
    chain3 = core.validate_semimodule(
        B, ((0, 1, 2), (1, 1, 2), (2, 2, 2)), ((0, 0, 0), (0, 1, 2))
    )
    M2B = constructions.matrix_semiring(B, 2)
    A = core.regular_semimodule(M2B)
    FA, _ = constructions.morita_reduce(A, B, 2)
    if homs.are_isomorphic(FA, b2) is None:
        return FAIL, "reduction of the regular matrix semimodule is not the square"
    if homs.are_isomorphic(constructions.morita_expand(FA, 2), A) is None:
        return FAIL, "expand(reduce(regular)) lost the isomorphism type"
    for M in (reg, chain3, b2):
        back, _ = constructions.morita_reduce(constructions.morita_expand(M, 2), B, 2)
        if homs.are_isomorphic(back, M) is None:
            return FAIL, f"reduce(expand(M)) changed a semimodule of order {M.order}"
    return PASS, "both composites are the identity up to isomorphism"


def _ext_f2_cyclic_census(fast: bool):
    E = constructions.ext_semiring(constructions.cyclic_ring(2))
    census = homs.enumerate_cyclic_semimodules(E)
    orders = sorted(M.order for M in census)
    if orders != [1, 2, 3, 4]:
        return FAIL, f"expected orders [1, 2, 3, 4], got {orders}"
    reg = core.regular_semimodule(E)
    if not any(M.order == 4 and homs.are_isomorphic(M, reg) for M in census):
        return FAIL, "regular semimodule missing from the census"
    return PASS, "zero, two-point, adjoined zero ring, regular"


def _ext_f2_ci(fast: bool):
    bound = 3 if fast else 4
    E = constructions.ext_semiring(constructions.cyclic_ring(2))
    return _verdict_status(injectivity.ci_verdict(E, bound), VerdictStatus.HOLDS)


def _ext_z3_ci(fast: bool):
    bound = 3 if fast else 4
    E = constructions.ext_semiring(constructions.cyclic_ring(3))
    return _verdict_status(injectivity.ci_verdict(E, bound), VerdictStatus.HOLDS)


def _chain3_lattice_ci(fast: bool):
    bound = 3 if fast else 4
    L = constructions.chain_lattice_semiring(3)
    return _verdict_status(injectivity.ci_verdict(L, bound), VerdictStatus.REFUTED)


def _bool_lattices_ci(fast: bool):
    bound = 3 if fast else 4
    for k in (1, 2):
        S = constructions.boolean_lattice_semiring(k)
        verdict = injectivity.ci_verdict(S, bound)
        if verdict.status is not VerdictStatus.HOLDS:
            status, summary = _verdict_status(verdict, VerdictStatus.HOLDS)
            return status, f"{k}-atom algebra: {summary}"
    return PASS, f"1- and 2-atom Boolean algebras hold at bound {bound}"


def _radical_b(fast: bool):
    B = constructions.boolean_semiring()
    mask = congruences.jacobson_radical(B)
    return _bool_status(mask.elements == (0, 1), "the radical is everything")


def _radical_f2(fast: bool):
    mask = congruences.jacobson_radical(constructions.cyclic_ring(2))
    return _bool_status(mask.elements == (0,), "the radical is zero")


def _fixture_semirings():
    return [
        constructions.boolean_semiring(),
        constructions.chain_semiring(2),
        constructions.b31(),
        constructions.ext_semiring(constructions.cyclic_ring(2)),
    ]


def _simple_implies_ssimple(fast: bool):
    size = 3 if fast else 4
    checked = 0
    for S in _fixture_semirings():
        for M in homs.iter_semimodules(S, size):
            rep = congruences.simplicity_report(M)
            checked += 1
            if rep.simple and not rep.s_simple:
                return FAIL, f"simple but not s-simple over {S.name}"
    return PASS, f"{checked} semimodules checked"


def _simple_iff_injective_homs(fast: bool):
    size = 3 if fast else 4
    for S in _fixture_semirings():
        mods = homs.enumerate_semimodules(S, size)
        for M in mods:
            if M.order == 1:
                continue
            simple = congruences.simplicity_report(M).simple
            every_nonzero_injective = all(
                h.is_zero() or h.is_injective()
                for N in mods for h in homs.enumerate_homs(M, N)
            )
            if simple != every_nonzero_injective:
                return FAIL, (f"equivalence fails over {S.name} "
                              f"on a semimodule of order {M.order}")
    return PASS, "simple iff every nonzero map out is injective"


def _congruence_census_oracle(fast: bool):
    fixtures: list = [
        core.regular_semimodule(constructions.chain_semiring(2)),
        core.regular_semimodule(constructions.chain_semiring(3)),
        core.regular_semimodule(constructions.b31()),
        core.regular_semimodule(constructions.ext_semiring(constructions.cyclic_ring(2))),
        constructions.b4_extension_counterexample()[0],
        constructions.b31(),
        constructions.chain_lattice_semiring(3),
        constructions.boolean_lattice_semiring(2),
    ]
    for x in fixtures:
        closed = congruences.enumerate_congruences(x)
        brute = congruences.enumerate_congruences_bruteforce(x)
        if [c.blocks for c in closed] != [c.blocks for c in brute]:
            return FAIL, f"join closure disagrees with the partition scan on {x!r}"
    return PASS, f"{len(fixtures)} carriers of size <= 6"


def _completion_scan(witness) -> bool:
    """Independent re-validation: no total completion of the partial map is
    a homomorphism."""
    B, M = witness.ambient, witness.target
    fixed = dict(witness.partial_map)
    free = [x for x in range(B.order) if x not in fixed]
    for values in itertools.product(range(M.order), repeat=len(free)):
        g = dict(fixed)
        g.update(zip(free, values))
        mapping = tuple(g[x] for x in range(B.order))
        if homs.hom_violation(B, M, mapping) is None:
            return False
    return True


def _witness_revalidation(fast: bool):
    B4 = constructions.chain_semiring(3)
    reg4 = core.regular_semimodule(B4)
    M, sub, pairs = constructions.b4_extension_counterexample()
    w1 = injectivity.check_witness(reg4, M, sub, pairs)
    if w1 is None or not _completion_scan(w1):
        return FAIL, "chain witness over B4 did not re-validate"
    count = 1
    if not fast:
        # the nine-element ambient: 3^6 completions scanned exhaustively
        S = constructions.b31()
        M9, sub9, pairs9 = constructions.b31_retract_counterexample()
        w2 = injectivity.check_witness(core.regular_semimodule(S), M9, sub9, pairs9)
        if w2 is None or not _completion_scan(w2):
            return FAIL, "nine-element witness did not re-validate"
        count += 1
        verdict = injectivity.injectivity_verdict(reg4, 5)
        if verdict.status is not VerdictStatus.REFUTED or not _completion_scan(verdict.witness):
            return FAIL, "search-found witness did not re-validate"
        count += 1
    return PASS, f"{count} refutation witnesses re-validated by completion scan"


def _diamond_idempotent(fast: bool):
    fixtures = _fixture_semirings() + [
        constructions.chain_semiring(3),
        constructions.ext_semiring(constructions.cyclic_ring(3)),
        constructions.direct_product(constructions.cyclic_ring(2),
                                     constructions.boolean_semiring()),
    ]
    for S in fixtures:
        Q, _ = constructions.quotient(S, constructions.diamond_congruence(S))
        rep = core.element_classes(Q)
        if rep.iplus != frozenset(range(Q.order)):
            return FAIL, f"quotient of {S.name} is not additively idempotent"
    return PASS, f"{len(fixtures)} fixtures"


def _vclass_strong_ideal(fast: bool):
    fixtures = _fixture_semirings() + [
        constructions.direct_product(constructions.cyclic_ring(2),
                                     constructions.boolean_semiring()),
        constructions.cyclic_ring(4),
    ]
    for S in fixtures:
        vel = tuple(sorted(core.element_classes(S).vclass))
        masks = {m.elements: m for m in congruences.enumerate_ideals(S)}
        mask = masks.get(vel)
        if mask is None or not mask.is_strong:
            return FAIL, f"additively invertible part of {S.name} is not a strong ideal"
    return PASS, f"{len(fixtures)} fixtures"


def _three_valued_discipline(fast: bool):
    B = constructions.boolean_semiring()
    hold = injectivity.ci_verdict(B, 3)
    if hold.status is not VerdictStatus.HOLDS or hold.bound != 3:
        return FAIL, "clean sweep must report holds-at-bound with its bound"
    inconclusive = injectivity.ci_verdict(B, 0)
    if inconclusive.status is not VerdictStatus.INCONCLUSIVE:
        return FAIL, "witness mode without witnesses must stay inconclusive"
    L = constructions.chain_lattice_semiring(3)
    r3 = injectivity.ci_verdict(L, 3)
    r4 = injectivity.ci_verdict(L, 4)
    if r3.status is not VerdictStatus.REFUTED or r4.status is not VerdictStatus.REFUTED:
        return FAIL, "refutations must persist at larger bounds"
    return PASS, "bounded claims stay bounded; refutations are monotone"


CHECKS: list[Check] = [
    Check("chain-flags", "order-2..5 chains are zerosumfree, zeroic, additively idempotent, anti-bounded with top infinite element", _chain_flags),
    Check("b3-cyclic-census", "the order-3 chain semiring has exactly two nonzero cyclic semimodules", _b3_cyclic_census),
    Check("b3-character", "the character semimodule of the order-3 chain is isomorphic to it", _b3_character),
    Check("b3-ci", "every cyclic semimodule of the order-3 chain is injective at the bound", _b3_ci),
    Check("b4-not-injective", "the regular semimodule of the order-4 chain is not injective", _b4_not_injective),
    Check("b4-witness-mode", "the five-element chain witness over the order-4 chain admits no extension", _b4_witness_mode),
    Check("b31-not-retract", "B(3,1) is not a retract of its nine-element extension", _b31_not_retract),
    Check("b31-ci-witness", "B(3,1) has a non-injective cyclic semimodule (witness mode)", _b31_ci_witness),
    Check("b2sq-quotients", "the square of the Boolean semiring has exactly four quotient semimodules", _b2sq_quotients),
    Check("morita-roundtrip", "matrix-unit reduction and tuple expansion invert each other up to isomorphism", _morita_roundtrip),
    Check("ext-f2-cyclic-census", "adjoining zero and top to the two-element field gives exactly four cyclic semimodules", _ext_f2_cyclic_census),
    Check("ext-f2-ci", "the extension of the two-element field is CI at the bound", _ext_f2_ci),
    Check("ext-z3-ci", "the extension of the three-element field is CI at the bound", _ext_z3_ci),
    Check("chain3-lattice-ci", "the three-element chain lattice is not a CI-semiring", _chain3_lattice_ci),
    Check("bool-lattices-ci", "the 1- and 2-atom Boolean algebras are CI at the bound", _bool_lattices_ci),
    Check("radical-b", "the radical of the Boolean semiring is the whole semiring", _radical_b),
    Check("radical-f2", "the radical of the two-element field is zero", _radical_f2),
    Check("simple-implies-ssimple", "simple semimodules are s-simple on the fixture population", _simple_implies_ssimple),
    Check("simple-iff-injective-homs", "simplicity is equivalent to all nonzero outgoing maps being injective", _simple_iff_injective_homs),
    Check("congruence-census-oracle", "join closure of principal congruences matches the all-partitions scan", _congruence_census_oracle),
    Check("witness-revalidation", "every refutation witness re-validates by a brute-force completion scan", _witness_revalidation),
    Check("diamond-idempotent", "mutual-absorption quotients are additively idempotent", _diamond_idempotent),
    Check("vclass-strong-ideal", "the additively invertible part is a strong two-sided ideal", _vclass_strong_ideal),
    Check("three-valued-discipline", "bounded verdicts never overclaim and refutations are monotone", _three_valued_discipline),
]

# checks skipped entirely by the fast profile (full-enumeration refutation scan)
_SLOW_ONLY = {"b4-not-injective"}


def run_suite(profile: str = "full") -> list[CheckResult]:
    if profile not in ("full", "fast"):
        raise ValueError(f"unknown profile {profile!r}")
    fast = profile == "fast"
    results = []
    for check in CHECKS:
        if fast and check.check_id in _SLOW_ONLY:
            continue
        start = time.perf_counter()
        try:
            status, witness = check.run(fast)
        except Exception as exc:  # a crash is a failing check, not a crashed suite
            status, witness = FAIL, f"exception: {exc!r}"
        seconds = time.perf_counter() - start
        results.append(CheckResult(check.check_id, check.locus, status, seconds, witness))
    return results
