"""Signal-level NOT, XOR and XNOR gates.

Every gate is a sample-wise multiplication, so outputs are valid at each
clock cycle without time averaging, and each gate distributes over
superpositions: applying it to a sum applies it to every component at
once. Gates operate on traces only; their string-level truth tables are
theorems checked by the test suite, not an implementation path.
"""

from __future__ import annotations

from typing import Iterable

from .errors import TargetIndexError
from .reference import ReferenceSystem, Trace, multiply_traces

#: A gate target is a nonempty set of noise-bit indices in {1..M}.
TargetSet = frozenset[int]


def _as_targets(sys: ReferenceSystem, targets: Iterable[int]) -> TargetSet:
    ts = frozenset(int(i) for i in targets)
    if not ts:
        raise TargetIndexError("target set must not be empty")
    bad = [i for i in ts if not 1 <= i <= sys.m]
    if bad:
        raise TargetIndexError(f"noise-bit indices {sorted(bad)} outside 1..{sys.m}")
    return ts


def not_operator(sys: ReferenceSystem, targets: Iterable[int]) -> Trace:
    """The NOT signal for a target set: product of the targeted highs.

    Multiplying any signal by it flips the targeted bits of every product
    state in that signal; applying it twice is the identity (each high
    squared is the constant 1).
    """
    ts = _as_targets(sys, targets)
    out = sys.low
    for i in sorted(ts):
        out = multiply_traces(out, sys.high(i))
    return out.with_label("not_" + "".join(str(i) for i in sorted(ts)))


def apply_not(sys: ReferenceSystem, targets: Iterable[int], signal: Trace) -> Trace:
    """Invert the targeted bits of every product state carried by ``signal``."""
    return multiply_traces(not_operator(sys, targets), signal)


def xor_bit(sys: ReferenceSystem, i: int, a: Trace, b: Trace) -> Trace:
    """XOR of two i-th noise-bit signals (each constant 1 or the high RTW).

    The squeezed scheme's low reference is 1, so the defining product
    a * b * low_i collapses to the plain product: equal inputs cancel to
    the low constant, differing inputs leave the high RTW.
    """
    _as_targets(sys, (i,))
    return multiply_traces(a, b)


def xnor_bit(sys: ReferenceSystem, i: int, a: Trace, b: Trace) -> Trace:
    """XNOR of two i-th noise-bit signals: a * b * high_i."""
    _as_targets(sys, (i,))
    return multiply_traces(multiply_traces(a, b), sys.high(i))


def xor_pair(a: Trace, b: Trace) -> Trace:
    """Pairwise XOR of two M-bit signals: their sample-wise product.

    For pure hyperspace vectors the output is the vector of the bitwise
    XOR of the two strings; a superposition input distributes component
    by component. Multiplication by the all-zeros string (constant 1) is
    a no-op, which is why no reference system is needed here.
    """
    return multiply_traces(a, b)


def xnor_pair(sys: ReferenceSystem, a: Trace, b: Trace) -> Trace:
    """Pairwise XNOR: a * b * ones, with ones the all-high product string."""
    return multiply_traces(multiply_traces(a, b), sys.ones)


def xor_targeted(sys: ReferenceSystem, signal: Trace, i: int, p: int) -> Trace:
    """XOR noise-bit ``i`` of every carried product state with bit value ``p``.

    For p = 1 this multiplies by the high RTW of bit i; for p = 0 the
    operand is the constant 1 and the input passes through untouched.
    """
    _as_targets(sys, (i,))
    if p not in (0, 1):
        raise ValueError("bit value p must be 0 or 1")
    if p == 0:
        return signal
    return multiply_traces(signal, sys.high(i))


def xnor_targeted(sys: ReferenceSystem, signal: Trace, i: int, p: int) -> Trace:
    """XNOR noise-bit ``i`` of every carried product state with bit value ``p``.

    Implemented literally as the defining product with both the value
    operand and the high reference, signal * G_i(p) * high_i, so the
    p = 1 cancellation emerges from the algebra instead of a branch.
    """
    _as_targets(sys, (i,))
    if p not in (0, 1):
        raise ValueError("bit value p must be 0 or 1")
    operand = sys.high(i) if p == 1 else sys.low
    return multiply_traces(multiply_traces(signal, operand), sys.high(i))
