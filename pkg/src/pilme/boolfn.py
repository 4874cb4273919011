"""Boolean functions as bit-packed truth tables.

A function f on n inputs is stored as a single integer whose bit i is
f(i); bit k of the index i is the value of variable x_{k+1}, so variable
indices in formula syntax are 1-based while bit positions are 0-based.
Packing the whole table into one int keeps classification a popcount and
turns the subset-lattice transform into a handful of wide XORs.

Everything here is an immutable value and every operation is a pure
function, so tables can be shared freely across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Union

# Default cap on arity for table-building operations; a table at n = 24
# occupies 2 MiB.  Callers may pass their own max_n to raise or lower it.
MAX_N = 24

Kind = Literal["constant0", "constant1", "balanced", "neither"]


class ParseError(ValueError):
    """Input text does not match the expected format."""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class BooleanFunction:
    """Truth table of f: {0,1}^arity -> {0,1}, packed LSB-first into an int."""

    arity: int
    table: int

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError("arity must be at least 1")
        if self.table < 0 or self.table.bit_length() > (1 << self.arity):
            raise ValueError("table does not fit in 2**arity bits")

    @property
    def size(self) -> int:
        """Number of table entries, 2**arity."""
        return 1 << self.arity


@dataclass(frozen=True)
class Hypergraph:
    """XOR polynomial of a Boolean function, seen as a hypergraph.

    Vertices are the input variables 0..vertex_count-1 and each monomial
    is an edge over the variables it multiplies; `constant_bit` is the
    empty-monomial coefficient.  Every Boolean function has exactly one
    such polynomial, so hypergraphs and truth tables are in bijection.
    """

    vertex_count: int
    constant_bit: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(frozenset(e) for e in self.edges))
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be at least 1")
        if self.constant_bit not in (0, 1):
            raise ValueError("constant_bit must be 0 or 1")
        for edge in self.edges:
            if not edge:
                raise ValueError("edges must be non-empty")
            if any(v < 0 or v >= self.vertex_count for v in edge):
                raise ValueError("edge vertex out of range")

    def sorted_edges(self) -> list[tuple[int, ...]]:
        """Edges in a deterministic order: by size, then lexicographically."""
        return sorted((tuple(sorted(e)) for e in self.edges), key=lambda t: (len(t), t))


# ---------------------------------------------------------------------------
# Formula AST


@dataclass(frozen=True)
class Var:
    index: int  # 1-based: x1 is assignment bit 0


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Not:
    arg: "FormulaAST"


@dataclass(frozen=True)
class And:
    args: tuple["FormulaAST", ...]


@dataclass(frozen=True)
class Or:
    args: tuple["FormulaAST", ...]


@dataclass(frozen=True)
class Xor:
    args: tuple["FormulaAST", ...]


@dataclass(frozen=True)
class Implies:
    antecedent: "FormulaAST"
    consequent: "FormulaAST"


@dataclass(frozen=True)
class Iff:
    left: "FormulaAST"
    right: "FormulaAST"


FormulaAST = Union[Var, Const, Not, And, Or, Xor, Implies, Iff]

_TOKEN_RE = re.compile(r"x\d+|<->|->|[01()!&^|]")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((match.group(0), pos))
        pos = match.end()
    return tokens


class _FormulaParser:
    # Recursive descent, loosest binding first: <->  ->  |  ^  &  !
    # All operators associate left except ->, which associates right.

    def __init__(self, text: str, arity: int):
        self.text = text
        self.arity = arity
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> Optional[str]:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def _take(self) -> tuple[str, int]:
        if self.pos >= len(self.tokens):
            raise ParseError("unexpected end of input", len(self.text))
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self) -> FormulaAST:
        node = self._iff()
        if self.pos < len(self.tokens):
            token, at = self.tokens[self.pos]
            raise ParseError(f"unexpected token {token!r}", at)
        return node

    def _iff(self) -> FormulaAST:
        node = self._implies()
        while self._peek() == "<->":
            self._take()
            node = Iff(node, self._implies())
        return node

    def _implies(self) -> FormulaAST:
        node = self._or()
        if self._peek() == "->":
            self._take()
            return Implies(node, self._implies())
        return node

    def _or(self) -> FormulaAST:
        parts = [self._xor()]
        while self._peek() == "|":
            self._take()
            parts.append(self._xor())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def _xor(self) -> FormulaAST:
        parts = [self._and()]
        while self._peek() == "^":
            self._take()
            parts.append(self._and())
        return parts[0] if len(parts) == 1 else Xor(tuple(parts))

    def _and(self) -> FormulaAST:
        parts = [self._not()]
        while self._peek() == "&":
            self._take()
            parts.append(self._not())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def _not(self) -> FormulaAST:
        if self._peek() == "!":
            self._take()
            return Not(self._not())
        return self._atom()

    def _atom(self) -> FormulaAST:
        token, at = self._take()
        if token == "(":
            node = self._iff()
            if self._peek() != ")":
                where = self.tokens[self.pos][1] if self.pos < len(self.tokens) else len(self.text)
                raise ParseError("expected ')'", where)
            self._take()
            return node
        if token in ("0", "1"):
            return Const(int(token))
        if token.startswith("x"):
            index = int(token[1:])
            if not 1 <= index <= self.arity:
                raise ParseError(f"variable {token} out of range for arity {self.arity}", at)
            return Var(index)
        raise ParseError(f"unexpected token {token!r}", at)


def parse_formula(text: str, arity: int) -> FormulaAST:
    """Parse the infix formula DSL over variables x1..x<arity>.

    Operators, tightest binding first: ``!  &  ^  |  ->  <->``; constants
    ``0`` and ``1``; parentheses group.  Raises ParseError with a character
    position on syntax errors and on out-of-range variables.
    """
    if arity < 1:
        raise ValueError("arity must be at least 1")
    return _FormulaParser(text, arity).parse()


def max_variable(ast: FormulaAST) -> int:
    """Largest 1-based variable index in the tree, 0 when there is none."""
    if isinstance(ast, Var):
        return ast.index
    if isinstance(ast, Const):
        return 0
    if isinstance(ast, Not):
        return max_variable(ast.arg)
    if isinstance(ast, (And, Or, Xor)):
        return max((max_variable(a) for a in ast.args), default=0)
    if isinstance(ast, Implies):
        return max(max_variable(ast.antecedent), max_variable(ast.consequent))
    if isinstance(ast, Iff):
        return max(max_variable(ast.left), max_variable(ast.right))
    raise TypeError(f"not a formula node: {ast!r}")


# ---------------------------------------------------------------------------
# DIMACS CNF


def parse_dimacs_clauses(text: str) -> tuple[int, list[list[int]]]:
    """Return (variable_count, clauses) from DIMACS CNF text.

    Comment lines start with ``c``; the header is ``p cnf <vars> <clauses>``;
    clauses are 0-terminated literal lists and may span lines.  Duplicate
    literals are kept and the declared clause count is not enforced, which
    matches what solvers accept.
    """
    var_count: Optional[int] = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if var_count is not None:
                raise ParseError("duplicate DIMACS header")
            fields = line.split()
            if len(fields) != 4 or fields[0] != "p" or fields[1] != "cnf":
                raise ParseError(f"malformed DIMACS header {line!r}")
            try:
                var_count = int(fields[2])
                declared = int(fields[3])
            except ValueError:
                raise ParseError(f"malformed DIMACS header {line!r}") from None
            if var_count < 1 or declared < 0:
                raise ParseError(f"malformed DIMACS header {line!r}")
            continue
        if var_count is None:
            raise ParseError("clause appears before the DIMACS header")
        for token in line.split():
            try:
                literal = int(token)
            except ValueError:
                raise ParseError(f"bad DIMACS literal {token!r}") from None
            if literal == 0:
                clauses.append(current)
                current = []
            else:
                if abs(literal) > var_count:
                    raise ParseError(
                        f"literal {literal} exceeds declared variable count {var_count}"
                    )
                current.append(literal)
    if var_count is None:
        raise ParseError("missing DIMACS header")
    if current:
        raise ParseError("clause is missing its terminating 0")
    return var_count, clauses


def clauses_to_ast(clauses: list[list[int]]) -> FormulaAST:
    """Conjunction-of-disjunctions AST; an empty clause is constant false,
    an empty clause list is constant true."""

    def clause_ast(clause: list[int]) -> FormulaAST:
        if not clause:
            return Const(0)
        literals: list[FormulaAST] = [
            Var(lit) if lit > 0 else Not(Var(-lit)) for lit in clause
        ]
        return literals[0] if len(literals) == 1 else Or(tuple(literals))

    if not clauses:
        return Const(1)
    parts = [clause_ast(c) for c in clauses]
    return parts[0] if len(parts) == 1 else And(tuple(parts))


def parse_dimacs(text: str) -> FormulaAST:
    """Parse DIMACS CNF into a formula AST (arity is the declared count,
    recoverable via parse_dimacs_clauses)."""
    _, clauses = parse_dimacs_clauses(text)
    return clauses_to_ast(clauses)


def serialize_dimacs(var_count: int, clauses: Iterable[Iterable[int]]) -> str:
    """Render clauses back to DIMACS text; inverse of parse_dimacs_clauses."""
    if var_count < 1:
        raise ValueError("variable count must be at least 1")
    body = []
    for clause in clauses:
        literals = list(clause)
        for literal in literals:
            if literal == 0 or abs(literal) > var_count:
                raise ValueError(f"literal {literal} out of range")
        body.append(" ".join(str(lit) for lit in literals + [0]))
    header = f"p cnf {var_count} {len(body)}"
    return "\n".join([header] + body) + "\n"


# ---------------------------------------------------------------------------
# Table construction and queries


def _all_ones(n: int) -> int:
    return (1 << (1 << n)) - 1


def variable_table(k: int, n: int) -> int:
    """Packed truth table of the projection onto bit k: bit i = bit k of i."""
    if not 0 <= k < n:
        raise ValueError("variable position out of range")
    width = 1 << k
    block = ((1 << width) - 1) << width
    span = width * 2
    total = 1 << n
    while span < total:
        block |= block << span
        span *= 2
    return block


def _packed_eval(node: FormulaAST, n: int) -> int:
    full = _all_ones(n)
    if isinstance(node, Var):
        if node.index > n:
            raise ValueError(f"variable x{node.index} out of range for arity {n}")
        return variable_table(node.index - 1, n)
    if isinstance(node, Const):
        return full if node.value else 0
    if isinstance(node, Not):
        return full ^ _packed_eval(node.arg, n)
    if isinstance(node, And):
        out = full
        for arg in node.args:
            out &= _packed_eval(arg, n)
        return out
    if isinstance(node, Or):
        out = 0
        for arg in node.args:
            out |= _packed_eval(arg, n)
        return out
    if isinstance(node, Xor):
        out = 0
        for arg in node.args:
            out ^= _packed_eval(arg, n)
        return out
    if isinstance(node, Implies):
        return (full ^ _packed_eval(node.antecedent, n)) | _packed_eval(node.consequent, n)
    if isinstance(node, Iff):
        return full ^ _packed_eval(node.left, n) ^ _packed_eval(node.right, n)
    raise TypeError(f"not a formula node: {node!r}")


def compile(ast: FormulaAST, arity: int, max_n: int = MAX_N) -> BooleanFunction:
    """Materialize the truth table of ast over the given arity.

    The AST is evaluated once over whole packed tables (one wide bit
    operation per node), not per assignment.
    """
    if arity < 1:
        raise ValueError("arity must be at least 1")
    if arity > max_n:
        raise ValueError(f"arity {arity} exceeds the configured cap {max_n}")
    return BooleanFunction(arity, _packed_eval(ast, arity))


def evaluate(f: BooleanFunction, assignment: int) -> int:
    """f at one point: bit `assignment` of the table."""
    if not 0 <= assignment < f.size:
        raise IndexError(f"assignment {assignment} out of range for arity {f.arity}")
    return (f.table >> assignment) & 1


@dataclass(frozen=True)
class ClassificationResult:
    kind: Kind
    satisfying_count: int


def classify(f: BooleanFunction) -> ClassificationResult:
    """Constant/balanced/neither verdict from the table popcount."""
    count = f.table.bit_count()
    if count == 0:
        kind: Kind = "constant0"
    elif count == f.size:
        kind = "constant1"
    elif 2 * count == f.size:
        kind = "balanced"
    else:
        kind = "neither"
    return ClassificationResult(kind, count)


# ---------------------------------------------------------------------------
# Algebraic normal form


def _mobius(packed: int, n: int) -> int:
    # In-place butterfly over the packed table: one pass per variable XORs
    # every lower half-block into its upper half.  Self-inverse over GF(2).
    out = packed
    for k in range(n):
        width = 1 << k
        lower_mask = variable_table(k, n) >> width
        out ^= (out & lower_mask) << width
    return out


def _bit_positions(mask: int):
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


def anf(f: BooleanFunction) -> Hypergraph:
    """Unique XOR-polynomial of f via the subset-lattice transform.

    Bit S of the transformed table is the coefficient of the monomial
    over the variables in S; cost O(n * 2**n) regardless of how small a
    formula produced the table.
    """
    coeff = _mobius(f.table, f.arity)
    edges = [frozenset(_bit_positions(mask)) for mask in _bit_positions(coeff & ~1)]
    return Hypergraph(f.arity, coeff & 1, frozenset(edges))


def from_anf(h: Hypergraph, max_n: int = MAX_N) -> BooleanFunction:
    """Truth table of the XOR polynomial; exact inverse of anf."""
    if h.vertex_count > max_n:
        raise ValueError(f"arity {h.vertex_count} exceeds the configured cap {max_n}")
    coeff = h.constant_bit
    for edge in h.edges:
        mask = 0
        for v in edge:
            mask |= 1 << v
        coeff |= 1 << mask
    return BooleanFunction(h.vertex_count, _mobius(coeff, h.vertex_count))


# ---------------------------------------------------------------------------
# SAT ground truth and gadgets


def sat_brute(f: BooleanFunction) -> Optional[int]:
    """Smallest satisfying assignment by direct table inspection, or None."""
    if f.table == 0:
        return None
    return (f.table & -f.table).bit_length() - 1


def conjoin_fresh(f: BooleanFunction, count: int, max_n: int = MAX_N) -> BooleanFunction:
    """f AND `count` fresh variables appended above the existing ones.

    The satisfying assignments of the result are exactly those of f with
    all fresh variables set, so the satisfying count is preserved while
    the domain grows by a factor of 2**count.
    """
    if count not in (1, 2):
        raise ValueError("count must be 1 or 2")
    arity = f.arity + count
    if arity > max_n:
        raise ValueError(f"arity {arity} exceeds the configured cap {max_n}")
    return BooleanFunction(arity, f.table << ((1 << arity) - (1 << f.arity)))


# ---------------------------------------------------------------------------
# Hex table format


def to_table_hex(f: BooleanFunction) -> str:
    """Table as lowercase hex of the little-endian packed bytes
    (bit i of byte i//8 is f(i))."""
    nbytes = max(1, f.size // 8)
    return f.table.to_bytes(nbytes, "little").hex()


def from_table_hex(text: str, arity: int) -> BooleanFunction:
    """Parse the hex table format; the arity is required because leading
    zero bits are not recoverable from the bytes."""
    if arity < 1:
        raise ParseError("arity must be at least 1")
    try:
        raw = bytes.fromhex(text.strip())
    except ValueError:
        raise ParseError(f"invalid hex table {text.strip()!r}") from None
    expected = max(1, (1 << arity) // 8)
    if len(raw) != expected:
        raise ParseError(
            f"expected {expected} table byte(s) for arity {arity}, got {len(raw)}"
        )
    table = int.from_bytes(raw, "little")
    if table.bit_length() > (1 << arity):
        raise ParseError("table has bits set beyond 2**arity")
    return BooleanFunction(arity, table)
