"""Squeezed reference noise system.

A noise-bit's logic-high state is a random telegraph wave (RTW): a
discrete-time signal whose sample at each clock cycle is +1 or -1 with
probability 0.5. The logic-low state is squeezed to the constant 1 and is
never stored; operations treat it as the multiplicative identity.

Generation is counter-based: sample (i, t) is a pure function of
(seed, i, t), so every trace is reproducible independently of generation
order and any sample is addressable in O(1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterator

import numpy as np

from .errors import DimensionError, LengthMismatchError, TraceParseError

# Universe amplitudes reach 2^M; int64 storage caps the engine at M = 62.
MAX_NOISE_BITS = 62

_U64 = np.uint64
_GAMMA = _U64(0x9E3779B97F4A7C15)
_MIX_C1 = _U64(0xBF58476D1CE4E5B9)
_MIX_C2 = _U64(0x94D049BB133111EB)


@dataclass(frozen=True, eq=False)
class Trace:
    """An integer-valued discrete-time waveform over T clock cycles.

    Carries every signal class in the engine: reference RTWs and product
    states (samples in {+1, -1}) as well as superpositions (arbitrary
    integer samples). Immutable after construction.
    """

    samples: np.ndarray
    label: str | None = None

    def __post_init__(self):
        arr = np.asarray(self.samples, dtype=np.int64)
        if arr.ndim != 1 or arr.size < 1:
            raise DimensionError("a trace needs a one-dimensional, non-empty sample array")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)

    @property
    def t(self) -> int:
        """Clock-cycle count."""
        return self.samples.size

    def __len__(self) -> int:
        return self.samples.size

    def __eq__(self, other) -> bool:
        """Sample-wise equality; labels are metadata and do not participate."""
        if not isinstance(other, Trace):
            return NotImplemented
        return self.samples.size == other.samples.size and bool(
            np.array_equal(self.samples, other.samples)
        )

    __hash__ = None  # mutable-free but compared by value; not hashable

    def __mul__(self, other: "Trace | int") -> "Trace":
        if isinstance(other, Trace):
            return multiply_traces(self, other)
        if isinstance(other, (int, np.integer)):
            return Trace(self.samples * np.int64(other))
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other: "Trace") -> "Trace":
        if not isinstance(other, Trace):
            return NotImplemented
        _require_same_length(self, other)
        return Trace(self.samples + other.samples)

    def __neg__(self) -> "Trace":
        return Trace(-self.samples)

    def is_binary(self) -> bool:
        """True when every sample is +1 or -1 (RTW / product-state class)."""
        return bool(np.all(np.abs(self.samples) == 1))

    def with_label(self, label: str | None) -> "Trace":
        return Trace(self.samples, label)

    def __repr__(self) -> str:
        head = ",".join(str(v) for v in self.samples[:8])
        tail = ",..." if self.t > 8 else ""
        name = f" {self.label!r}" if self.label else ""
        return f"<Trace{name} T={self.t} [{head}{tail}]>"


def _require_same_length(a: Trace, b: Trace) -> None:
    if a.t != b.t:
        raise LengthMismatchError(f"trace lengths differ: {a.t} != {b.t}")


def low_reference(t: int, *, label: str | None = "low") -> Trace:
    """The squeezed logic-low reference: the constant trace of value 1."""
    if t < 1:
        raise DimensionError("clock count must be at least 1")
    return Trace(np.ones(int(t), dtype=np.int64), label)


def multiply_traces(a: Trace, b: Trace) -> Trace:
    """Sample-wise product of two traces of equal length.

    The product of two RTWs is again an RTW, and the self-product of any
    RTW is the constant-1 vacuum trace.
    """
    _require_same_length(a, b)
    return Trace(a.samples * b.samples)


def _mix64(x: np.ndarray) -> np.ndarray:
    # splitmix64 finalizer; wraparound is the point, so silence overflow.
    x = (x ^ (x >> _U64(30))) * _MIX_C1
    x = (x ^ (x >> _U64(27))) * _MIX_C2
    return x ^ (x >> _U64(31))


def _rtw_samples(seed: int, index: int, t: int) -> np.ndarray:
    """Counter-based RTW stream: sample (index, clock) = f(seed, index, clock)."""
    with np.errstate(over="ignore"):
        key = _mix64(np.asarray(_U64(seed & 0xFFFFFFFFFFFFFFFF) + _U64(index) * _GAMMA))
        clocks = np.arange(1, t + 1, dtype=np.uint64)
        words = _mix64(key + clocks * _GAMMA)
    bits = (words >> _U64(63)).astype(np.int64)
    return 2 * bits - 1


@dataclass(frozen=True)
class ReferenceSystem:
    """The M logic-high reference RTWs of a squeezed noise-bit system.

    Regeneration from (seed, m, t) is bit-identical. The logic-low
    reference (constant 1) is exposed as :attr:`low` but never stored as
    data of its own.
    """

    m: int
    t: int
    seed: int
    highs: tuple[Trace, ...] = field(repr=False)

    def high(self, i: int) -> Trace:
        """High reference RTW of noise-bit ``i`` (1-based)."""
        if not 1 <= i <= self.m:
            raise DimensionError(f"noise-bit index {i} outside 1..{self.m}")
        return self.highs[i - 1]

    @cached_property
    def low(self) -> Trace:
        return low_reference(self.t)

    @cached_property
    def ones(self) -> Trace:
        """Product of all M high references: the all-high product string.

        Computed on first use and cached (write-once; safe for concurrent
        readers).
        """
        acc = np.ones(self.t, dtype=np.int64)
        for high in self.highs:
            acc *= high.samples
        return Trace(acc, "ones")

    @cached_property
    def negative_masks(self) -> np.ndarray:
        """Per-clock bitmask of which high references are -1.

        Bit (i-1) of entry t is set iff high trace i has sample -1 at
        clock t. Lets any product state's sample be recovered as a popcount
        parity; the brute-force decoder builds on this.
        """
        masks = np.zeros(self.t, dtype=np.uint64)
        for i, high in enumerate(self.highs, start=1):
            masks |= (high.samples < 0).astype(np.uint64) << _U64(i - 1)
        masks.flags.writeable = False
        return masks


def generate_reference_system(m: int, t: int, seed: int) -> ReferenceSystem:
    """Generate the M orthogonal high-reference RTWs for (seed, m, t).

    Deterministic: calling twice with equal arguments yields bit-identical
    traces. Distinct (i, t) draws come from independent counter positions
    of a 64-bit mixing stream, so distinct traces are statistically
    independent by construction.
    """
    if m < 1 or t < 1:
        raise DimensionError("need at least 1 noise-bit and 1 clock cycle")
    if m > MAX_NOISE_BITS:
        raise DimensionError(
            f"m={m} exceeds the engine limit of {MAX_NOISE_BITS} noise-bits "
            "(superposition amplitudes are stored as signed 64-bit integers)"
        )
    highs = tuple(
        Trace(_rtw_samples(seed, i, t), label=f"high_{i}") for i in range(1, m + 1)
    )
    return ReferenceSystem(m=m, t=t, seed=seed, highs=highs)


# --- orthogonality checking -------------------------------------------------

#: Pair statuses: the bound |mean| <= z/sqrt(T) is vacuous once z/sqrt(T) >= 1
#: (any +/-1 average passes), so such windows are reported as inconclusive
#: rather than passing or failing.
PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass(frozen=True)
class PairCorrelation:
    i: int
    k: int
    correlation: float
    status: str

    @property
    def is_self(self) -> bool:
        return self.i == self.k


@dataclass(frozen=True)
class OrthogonalityReport:
    """Time-averaged correlations for every pair of reference RTWs."""

    t: int
    z: float
    bound: float
    pairs: tuple[PairCorrelation, ...]

    @property
    def ok(self) -> bool:
        """True when no pair failed (inconclusive pairs do not fail)."""
        return all(p.status != FAIL for p in self.pairs)

    def distinct_pairs(self) -> Iterator[PairCorrelation]:
        return (p for p in self.pairs if not p.is_self)

    def as_dict(self) -> dict:
        return {
            "T": self.t,
            "z": self.z,
            "bound": self.bound,
            "pairs": [
                {"i": p.i, "k": p.k, "correlation": p.correlation, "status": p.status}
                for p in self.pairs
            ],
        }


def check_orthogonality(sys: ReferenceSystem, z: float = 4.0) -> OrthogonalityReport:
    """Check zero mean cross-correlation between distinct reference RTWs.

    For each distinct pair (i, k) the time-averaged product must satisfy
    |mean| <= z/sqrt(T); self-pairs average to exactly 1 because every
    sample squared is 1. Degenerate windows (bound >= 1) are flagged
    inconclusive.
    """
    if z <= 0:
        raise ValueError("z must be positive")
    bound = z / np.sqrt(sys.t)
    conclusive = bound < 1.0
    pairs = []
    for i in range(1, sys.m + 1):
        for k in range(i, sys.m + 1):
            corr = float((sys.high(i).samples * sys.high(k).samples).mean())
            if i == k:
                status = PASS if corr == 1.0 else FAIL
            elif not conclusive:
                status = INCONCLUSIVE
            else:
                status = PASS if abs(corr) <= bound else FAIL
            pairs.append(PairCorrelation(i, k, corr, status))
    return OrthogonalityReport(t=sys.t, z=float(z), bound=float(bound), pairs=tuple(pairs))


# --- trace serialization ----------------------------------------------------

CSV_HEADER = "clock,amplitude"


def trace_to_csv(trace: Trace) -> str:
    """CSV form: header ``clock,amplitude``, one row per clock from 0."""
    lines = [CSV_HEADER]
    lines.extend(f"{t},{v}" for t, v in enumerate(trace.samples))
    return "\n".join(lines) + "\n"


def trace_from_csv(text: str) -> Trace:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != CSV_HEADER:
        raise TraceParseError(f"expected header {CSV_HEADER!r}")
    samples = []
    for row, line in enumerate(lines[1:]):
        parts = line.split(",")
        if len(parts) != 2:
            raise TraceParseError(f"row {row}: expected 'clock,amplitude', got {line!r}")
        try:
            clock, amplitude = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise TraceParseError(f"row {row}: non-integer field in {line!r}") from exc
        if clock != row:
            raise TraceParseError(f"row {row}: clock column reads {clock}")
        samples.append(amplitude)
    if not samples:
        raise TraceParseError("trace has no samples")
    return Trace(np.array(samples, dtype=np.int64))


def trace_to_json(trace: Trace) -> str:
    """JSON form ``{"T": n, "label": str|null, "samples": [int...]}``."""
    payload = {
        "T": trace.t,
        "label": trace.label,
        "samples": [int(v) for v in trace.samples],
    }
    return json.dumps(payload) + "\n"


def trace_from_json(text: str) -> Trace:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TraceParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or "samples" not in payload:
        raise TraceParseError("expected an object with a 'samples' array")
    samples = payload["samples"]
    if not isinstance(samples, list) or not all(isinstance(v, int) for v in samples):
        raise TraceParseError("'samples' must be an array of integers")
    label = payload.get("label")
    if label is not None and not isinstance(label, str):
        raise TraceParseError("'label' must be a string or null")
    trace = Trace(np.array(samples, dtype=np.int64), label)
    if "T" in payload and payload["T"] != trace.t:
        raise TraceParseError(f"declared T={payload['T']} but {trace.t} samples present")
    return trace


def write_trace(trace: Trace, path: str | Path, fmt: str = "csv") -> Path:
    path = Path(path)
    if fmt == "csv":
        path.write_text(trace_to_csv(trace))
    elif fmt == "json":
        path.write_text(trace_to_json(trace))
    else:
        raise ValueError(f"unknown trace format {fmt!r}")
    return path


def read_trace(path: str | Path, fmt: str | None = None) -> Trace:
    """Read a trace file; format inferred from the suffix unless given."""
    path = Path(path)
    if fmt is None:
        fmt = path.suffix.lstrip(".").lower()
    text = path.read_text()
    if fmt == "csv":
        return trace_from_csv(text)
    if fmt == "json":
        return trace_from_json(text)
    raise TraceParseError(f"cannot infer trace format for {path.name!r}")
