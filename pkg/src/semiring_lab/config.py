"""Enumeration size caps.

The default cap of 16 is chosen so that the order-16 matrix semiring of
2x2 Boolean matrices stays inside every enumeration engine.  The
environment variable SEMIRING_LAB_SIZE_CAP overrides it per process.
"""

from __future__ import annotations

import os

DEFAULT_SIZE_CAP = 16

# Model enumeration (all semimodules up to a size) canonicalises tables by
# brute force over relabelings, which is only sensible for tiny carriers.
MODEL_SIZE_CAP = 8


def size_cap() -> int:
    raw = os.environ.get("SEMIRING_LAB_SIZE_CAP")
    if not raw:
        return DEFAULT_SIZE_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"SEMIRING_LAB_SIZE_CAP must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError("SEMIRING_LAB_SIZE_CAP must be positive")
    return value
