"""Exception types carrying machine-checkable witnesses.

Every validation failure names the first violated axiom in a fixed scan
order together with the elements that violate it, so error reports are
deterministic and can themselves be re-checked against the tables.
"""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all structural failures raised by this package."""


class IdentityFailure(AlgebraError):
    def __init__(self, op: str, a: int):
        self.op = op
        self.a = a
        super().__init__(f"{op}: declared identity fails on element {a}")


class NonCommutativeAdd(AlgebraError):
    def __init__(self, a: int, b: int):
        self.a = a
        self.b = b
        super().__init__(f"add: {a}+{b} != {b}+{a}")


class NonAssociative(AlgebraError):
    def __init__(self, op: str, a: int, b: int, c: int):
        self.op = op
        self.witness = (a, b, c)
        super().__init__(f"{op}: associativity fails on ({a},{b},{c})")


class NotDistributive(AlgebraError):
    def __init__(self, side: str, s: int, a: int, b: int):
        self.side = side
        self.witness = (s, a, b)
        super().__init__(f"mul does not {side}-distribute over add at ({s},{a},{b})")


class ZeroNotAbsorbing(AlgebraError):
    def __init__(self, s: int):
        self.s = s
        super().__init__(f"zero is not multiplicatively absorbing against {s}")


class ActionAxiomFailure(AlgebraError):
    """One of the five scalar-action identities fails.

    ``axiom`` is one of ``assoc``, ``left-distr``, ``right-distr``,
    ``unit``, ``zero``; ``witness`` holds the violating elements.
    """

    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"action axiom {axiom!r} fails at {witness}")


class NotAdditivelyRegular(AlgebraError):
    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"element {witness} has no additive inverse-like partner")


class NotAdditivelyIdempotent(AlgebraError):
    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"element {witness} is not additively idempotent")


class NotASubsemimodule(AlgebraError):
    def __init__(self, witness: tuple):
        self.witness = witness
        super().__init__(f"subset is not closed: {witness}")


class NotACongruence(AlgebraError):
    def __init__(self, witness: tuple):
        self.witness = witness
        super().__init__(f"relation is not compatible with the operations: {witness}")


class IncompatiblePartition(AlgebraError):
    def __init__(self, witness: tuple):
        self.witness = witness
        super().__init__(f"partition is not a congruence: {witness}")


class SizeCapExceeded(AlgebraError):
    def __init__(self, actual: int, cap: int):
        self.actual = actual
        self.cap = cap
        super().__init__(
            f"carrier/search size {actual} exceeds the configured cap {cap} "
            f"(set SEMIRING_LAB_SIZE_CAP to raise it)"
        )


class ParseError(AlgebraError):
    def __init__(self, line: int, col: int, reason: str):
        self.line = line
        self.col = col
        self.reason = reason
        super().__init__(f"line {line}, col {col}: {reason}")
