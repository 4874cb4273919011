"""JSON schemas for the machine-readable output of every CLI subcommand.

Keyed by subcommand name; validated in the test suite so the published
shapes and the emitted documents cannot drift apart.
"""

from __future__ import annotations

_N = {"type": "integer", "minimum": 1}
_NONNEG = {"type": "integer", "minimum": 0}
_HEX = {"type": "string", "pattern": "^[0-9a-f]+$"}
_SIGNS = {"type": "string", "pattern": "^[+-]+$"}
_KIND = {"enum": ["constant0", "constant1", "balanced", "neither"]}
_EDGES = {
    "type": "array",
    "items": {"type": "array", "items": _NONNEG, "minItems": 1},
}

_TRACE = {
    "type": "array",
    "minItems": 1,
    "items": {
        "type": "object",
        "required": ["step", "oracle_calls", "verdict", "detail"],
        "additionalProperties": False,
        "properties": {
            "step": {"type": "string"},
            "oracle_calls": _NONNEG,
            "verdict": {"enum": ["satisfiable", "unsatisfiable", None]},
            "detail": {"type": "string"},
        },
    },
}

_SAT = {
    "type": "object",
    "required": ["n", "satisfiable", "witness", "trace"],
    "additionalProperties": False,
    "properties": {
        "n": _N,
        "satisfiable": {"type": "boolean"},
        "witness": {"oneOf": [{"type": "null"}, _NONNEG]},
        "trace": _TRACE,
    },
}

SCHEMAS: dict[str, dict] = {
    "classify": {
        "type": "object",
        "required": ["n", "kind", "satisfying_count"],
        "additionalProperties": False,
        "properties": {"n": _N, "kind": _KIND, "satisfying_count": _NONNEG},
    },
    "state": {
        "type": "object",
        "required": ["n", "table_hex", "signs"],
        "additionalProperties": False,
        "properties": {
            "n": _N,
            "table_hex": _HEX,
            "signs": _SIGNS,
            "amplitudes": {"type": "array", "items": {"type": "number"}},
        },
    },
    "separable": {
        "type": "object",
        "required": ["n", "osm", "decomposition", "certificate"],
        "additionalProperties": False,
        "properties": {
            "n": _N,
            "osm": {"type": "boolean"},
            "decomposition": {
                "oneOf": [
                    {"type": "null"},
                    {
                        "type": "object",
                        "required": ["global", "factors"],
                        "additionalProperties": False,
                        "properties": {
                            "global": {"enum": ["+", "-"]},
                            "factors": {
                                "type": "array",
                                "minItems": 1,
                                "items": {"enum": ["+", "-"]},
                            },
                        },
                    },
                ]
            },
            "certificate": {
                "oneOf": [
                    {"type": "null"},
                    {
                        "type": "object",
                        "required": ["k", "l", "m"],
                        "additionalProperties": False,
                        "properties": {"k": _NONNEG, "l": _NONNEG, "m": _NONNEG},
                    },
                ]
            },
        },
    },
    "anf": {
        "type": "object",
        "required": ["n", "c", "edges"],
        "additionalProperties": False,
        "properties": {"n": _N, "c": {"enum": [0, 1]}, "edges": _EDGES},
    },
    "hypergraph": {
        "type": "object",
        "required": ["n", "c", "edges", "entangling"],
        "additionalProperties": False,
        "properties": {
            "n": _N,
            "c": {"enum": [0, 1]},
            "edges": _EDGES,
            "entangling": {"type": "boolean"},
        },
    },
    "reduce-karp": {
        "type": "object",
        "required": ["n", "table_hex", "satisfying_count"],
        "additionalProperties": False,
        "properties": {"n": _N, "table_hex": _HEX, "satisfying_count": _NONNEG},
    },
    "sat": _SAT,
    "sat-quantum": _SAT,
    "dj": {
        "type": "object",
        "required": ["n", "kind", "p0"],
        "additionalProperties": False,
        "properties": {
            "n": _N,
            "kind": {"enum": ["constant", "balanced"]},
            "p0": {"type": "number", "minimum": 0, "maximum": 1},
        },
    },
    "helstrom": {
        "type": "object",
        "required": ["n", "overlap", "helstrom_error"],
        "additionalProperties": False,
        "properties": {
            "n": _N,
            "overlap": {"type": "number", "minimum": -1, "maximum": 1},
            "helstrom_error": {"type": "number", "minimum": 0, "maximum": 0.5},
            "copies": {"type": "integer", "minimum": 1},
            "helstrom_error_copies": {"type": "number", "minimum": 0, "maximum": 0.5},
        },
    },
    "verify": {
        "type": "object",
        "required": ["n", "functions", "turing_failures", "karp_failures"],
        "additionalProperties": False,
        "properties": {
            "n": _N,
            "functions": _NONNEG,
            "turing_failures": {"type": "array", "items": _NONNEG},
            "karp_failures": {"type": "array", "items": _NONNEG},
        },
    },
}
