"""Real-amplitude statevector simulation of the oracle circuits.

Every gate the pipelines need (bit-flip oracles, Hadamard layers, phase
flips) maps real vectors to real vectors, so amplitudes are plain
float64 arrays and signs can be read off exactly.  Measurements are
reported as exact outcome probabilities; the quantities of interest are
all 0/1 or closed-form, so nothing is sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .boolfn import BooleanFunction, classify, sat_brute
from .lme_state import PiLmeState, is_osm
from .reductions import SatVerdict, TraceStep

# 2**21 float64 amplitudes (state plus ancilla) is 16 MiB.
SIM_MAX_N = 20
NORM_TOL = 1e-12


class PromiseViolationError(ValueError):
    """The constant-versus-balanced subroutine was invoked outside its promise."""


@dataclass(frozen=True)
class StateVector:
    """Normalized real amplitude vector over 2**qubit_count basis states.

    Instances are immutable; gate application returns a new vector.
    """

    qubit_count: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.qubit_count < 1:
            raise ValueError("qubit_count must be at least 1")
        amps = np.array(self.amplitudes, dtype=np.float64, copy=True)
        if amps.shape != (1 << self.qubit_count,):
            raise ValueError("amplitude vector has the wrong length")
        if abs(float(amps @ amps) - 1.0) > NORM_TOL:
            raise ValueError("state vector is not normalized")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)


def _bit_array(packed: int, count: int) -> np.ndarray:
    nbytes = (count + 7) // 8
    raw = packed.to_bytes(nbytes, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:count]


def _pack_bits(bits: np.ndarray) -> int:
    packed = np.packbits(bits.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def basis_state(qubit_count: int, index: int) -> StateVector:
    """Computational basis state |index>."""
    if not 0 <= index < (1 << qubit_count):
        raise ValueError("basis index out of range")
    amps = np.zeros(1 << qubit_count)
    amps[index] = 1.0
    return StateVector(qubit_count, amps)


def apply_hadamard(sv: StateVector, qubit: int) -> StateVector:
    """Hadamard on one qubit."""
    n = sv.qubit_count
    if not 0 <= qubit < n:
        raise ValueError("qubit index out of range")
    cube = sv.amplitudes.reshape(1 << (n - 1 - qubit), 2, 1 << qubit)
    out = np.empty_like(cube)
    out[:, 0, :] = cube[:, 0, :] + cube[:, 1, :]
    out[:, 1, :] = cube[:, 0, :] - cube[:, 1, :]
    out *= 1.0 / math.sqrt(2.0)
    return StateVector(n, out.reshape(-1))


def apply_uf(sv: StateVector, f: BooleanFunction, ancilla_index: int) -> StateVector:
    """Oracle gate |x>|y> -> |x>|y xor f(x)>.

    The register x is read from the non-ancilla qubits in increasing
    position order.  The gate is a permutation of amplitudes, so the norm
    is preserved exactly.
    """
    n = f.arity
    if sv.qubit_count != n + 1:
        raise ValueError("state must have one more qubit than the function arity")
    if not 0 <= ancilla_index <= n:
        raise ValueError("ancilla index out of range")
    dim = 1 << (n + 1)
    idx = np.arange(dim, dtype=np.int64)
    low = idx & ((1 << ancilla_index) - 1)
    x = low | ((idx >> (ancilla_index + 1)) << ancilla_index)
    flips = _bit_array(f.table, 1 << n)[x].astype(np.int64)
    return StateVector(n + 1, sv.amplitudes[idx ^ (flips << ancilla_index)])


def prepare_psi_f(f: BooleanFunction, max_n: int = SIM_MAX_N) -> StateVector:
    """Run the oracle on the all-plus register with a minus ancilla and
    strip the (exactly) decoupled ancilla.

    The returned n-qubit vector has amplitudes (-1)**f(i) / sqrt(2**n),
    matching the packed sign state of f sign for sign.
    """
    n = f.arity
    if n > max_n:
        raise ValueError(f"arity {n} exceeds the simulator cap {max_n}")
    dim = 1 << (n + 1)
    amps = np.where((np.arange(dim) >> n) & 1, -1.0, 1.0) / math.sqrt(dim)
    after = apply_uf(StateVector(n + 1, amps), f, n)
    lower = after.amplitudes[: dim // 2]
    upper = after.amplitudes[dim // 2 :]
    if not np.array_equal(upper, -lower):
        raise RuntimeError("ancilla failed to decouple")
    return StateVector(n, lower * math.sqrt(2.0))


def signs_from_state(sv: StateVector) -> PiLmeState:
    """Read the packed sign pattern off an equal-weight real state."""
    scale = 1.0 / math.sqrt(sv.amplitudes.size)
    if float(np.max(np.abs(np.abs(sv.amplitudes) - scale))) > NORM_TOL:
        raise ValueError("amplitudes are not an equal-weight sign pattern")
    return PiLmeState(sv.qubit_count, _pack_bits(sv.amplitudes < 0))


def zero_outcome_probability(f: BooleanFunction, max_n: int = SIM_MAX_N) -> float:
    """Probability of the all-zeros outcome after a full Hadamard layer on
    the sign state of f; equals ((sum of signs) / 2**n) squared."""
    sv = prepare_psi_f(f, max_n=max_n)
    for qubit in range(sv.qubit_count):
        sv = apply_hadamard(sv, qubit)
    return float(sv.amplitudes[0] ** 2)


def deutsch_jozsa(f: BooleanFunction, max_n: int = SIM_MAX_N) -> Literal["constant", "balanced"]:
    """Constant-versus-balanced decision with one oracle use, simulated.

    The promise is checked eagerly: outside it the all-zeros probability
    is strictly between 0 and 1 and the label would be meaningless.
    Under the promise the probability is exactly 1 (constant) or exactly
    0 (balanced).
    """
    if classify(f).kind == "neither":
        raise PromiseViolationError("function is neither constant nor balanced")
    return "constant" if zero_outcome_probability(f, max_n=max_n) > 0.5 else "balanced"


def algorithm1_end_to_end(f: BooleanFunction, max_n: int = SIM_MAX_N) -> SatVerdict:
    """Full SAT pipeline on the simulator.

    Prepare the sign state through the oracle, test product membership on
    the simulated sign pattern (the membership device itself cannot exist
    physically, so the check is classical by necessity), split constant
    from balanced, and finally read the ancilla after one oracle call on
    the all-zeros input.
    """
    trace: list[TraceStep] = []
    psi = prepare_psi_f(f, max_n=max_n)
    trace.append(
        TraceStep("prepare", 0, None, "oracle applied once to the plus register with a minus ancilla")
    )
    if not is_osm(signs_from_state(psi)):
        trace.append(TraceStep("product_test", 1, "satisfiable", "simulated state is not a product"))
        trace.append(
            TraceStep("witness_lookup", 1, None, "oracle-assisted: witness found by exhaustive search")
        )
        return SatVerdict(True, sat_brute(f), tuple(trace))
    trace.append(
        TraceStep("product_test", 1, None, "simulated state is a product: f is constant or balanced")
    )
    outcome = deutsch_jozsa(f, max_n=max_n)
    if outcome == "balanced":
        trace.append(TraceStep("deutsch_jozsa", 1, "satisfiable", "balanced"))
        trace.append(
            TraceStep("witness_lookup", 1, None, "oracle-assisted: witness found by exhaustive search")
        )
        return SatVerdict(True, sat_brute(f), tuple(trace))
    trace.append(TraceStep("deutsch_jozsa", 1, None, "constant"))
    readout = apply_uf(basis_state(f.arity + 1, 0), f, f.arity)
    p_one = float(readout.amplitudes[1 << f.arity] ** 2)
    value = 1 if p_one > 0.5 else 0
    trace.append(
        TraceStep(
            "ancilla_readout", 1,
            "satisfiable" if value else "unsatisfiable",
            f"ancilla reads {value}",
        )
    )
    return SatVerdict(bool(value), 0 if value else None, tuple(trace))


# ---------------------------------------------------------------------------
# State discrimination


def overlap(a: PiLmeState, b: PiLmeState) -> float:
    """Inner product of two sign states: 1 - 2 * hamming(signs) / 2**n."""
    if a.qubit_count != b.qubit_count:
        raise ValueError("qubit counts differ")
    differing = (a.signs ^ b.signs).bit_count()
    return 1.0 - 2.0 * differing / a.dimension


def helstrom_error(a: PiLmeState, b: PiLmeState) -> float:
    """Minimum one-shot error probability for discriminating two equally
    likely pure states: (1 - sqrt(1 - overlap**2)) / 2."""
    ov = overlap(a, b)
    return 0.5 * (1.0 - math.sqrt(1.0 - ov * ov))


def helstrom_error_copies(a: PiLmeState, b: PiLmeState, copies: int) -> float:
    """Helstrom error when `copies` independent copies of the unknown state
    are available; the pair overlap contracts to overlap**copies."""
    if copies < 1:
        raise ValueError("copies must be positive")
    ov = overlap(a, b) ** copies
    return 0.5 * (1.0 - math.sqrt(1.0 - ov * ov))


def unique_sat_pair(n: int, max_n: int = SIM_MAX_N) -> tuple[PiLmeState, PiLmeState]:
    """The hardest no-instance/unique-instance pair: the all-plus state of
    the all-zeros function and the state with only the sign of |0...0>
    flipped (the indicator of the all-zeros string).  Their overlap is
    1 - 2/2**n, exponentially close to one."""
    if not 1 <= n <= max_n:
        raise ValueError(f"n must be between 1 and {max_n}")
    return PiLmeState(n, 0), PiLmeState(n, 1)


def amplitudes_json(sv: StateVector) -> str:
    """Amplitudes as a JSON array rendered with 17 significant decimal
    digits, enough to round-trip float64 exactly."""
    return "[" + ", ".join(format(a, ".17g") for a in sv.amplitudes) + "]"
