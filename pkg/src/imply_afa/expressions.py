"""Small Boolean expression trees over ``A_in``, ``B_in``, ``C_in``.

Used to check that the IMPLY/FALSE rewrites of each cell's output functions
agree with their sum-of-products forms on all eight inputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .cells import INPUT_ORDER


class Expr:
    def __invert__(self) -> "Expr":
        return Not(self)

    def __and__(self, other: "Expr") -> "Expr":
        return And(self, other)

    def __or__(self, other: "Expr") -> "Expr":
        return Or(self, other)

    def __xor__(self, other: "Expr") -> "Expr":
        return Xor(self, other)

    def __rshift__(self, other: "Expr | int") -> "Expr":
        """``p >> q`` is material implication ``p -> q``; ``p >> 0`` is NOT via FALSE."""
        if isinstance(other, int):
            other = Const(other)
        return Imply(self, other)

    def __call__(self, a: int, b: int, c: int) -> int:
        return eval_expr(self, a, b, c)

    def table(self) -> tuple[int, ...]:
        return tuple(eval_expr(self, *abc) for abc in INPUT_ORDER)


@dataclass(frozen=True)
class Var(Expr):
    name: str

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const(Expr):
    value: int

    def __repr__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Not(Expr):
    arg: Expr

    def __repr__(self) -> str:
        return f"~{self.arg!r}"


@dataclass(frozen=True)
class _Binary(Expr):
    left: Expr
    right: Expr
    symbol = "?"

    def __repr__(self) -> str:
        return f"({self.left!r} {self.symbol} {self.right!r})"


class And(_Binary):
    symbol = "&"


class Or(_Binary):
    symbol = "|"


class Xor(_Binary):
    symbol = "^"


class Imply(_Binary):
    symbol = "->"


A, B, C = Var("A_in"), Var("B_in"), Var("C_in")
FALSE = Const(0)

_BINARY: dict[type, Callable[[int, int], int]] = {
    And: lambda x, y: x & y,
    Or: lambda x, y: x | y,
    Xor: lambda x, y: x ^ y,
    Imply: lambda x, y: (1 - x) | y,
}


def eval_expr(expr: Expr, a: int, b: int, c: int) -> int:
    if isinstance(expr, Var):
        return {"A_in": a, "B_in": b, "C_in": c}[expr.name]
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Not):
        return 1 - eval_expr(expr.arg, a, b, c)
    op = _BINARY[type(expr)]
    return op(eval_expr(expr.left, a, b, c), eval_expr(expr.right, a, b, c))


def _nand(x: Expr, y: Expr) -> Expr:
    return ~(x & y)


class Outputs(NamedTuple):
    sum: Expr
    cout: Expr


def _sum_first(sum_: Expr) -> Outputs:
    return Outputs(sum_, ~sum_)


# Sum-of-products output functions per cell
SOP = {
    "AFA1": _sum_first((~A & (B ^ C)) | (~C & (A ^ B))),
    "AFA2": _sum_first(~C & _nand(B, A)),
    "AFA3": _sum_first(~B & _nand(A, C)),
    "AFA5": _sum_first(~A & _nand(B, C)),
    "AFA8": _sum_first((~A & _nand(B, C)) | (~B & ~C) | (A & B & C)),
    "ECIS": _sum_first((~B & _nand(A, C)) | ~(A | C)),
}


def _imply_sum_first(sum_: Expr) -> Outputs:
    return Outputs(sum_, sum_ >> 0)


def _imply_cout_first(cout: Expr) -> Outputs:
    return Outputs(cout >> 0, cout)


# IMPLY/FALSE rewrites: one output is built directly, the other is its NOT via FALSE
IMPLY_FORMS = {
    "AFA1": _imply_sum_first((B >> (~C >> A)) >> ((((A >> C) >> ~(~A >> ~C)) >> B) >> 0)),
    "AFA2": _imply_cout_first((B >> (A >> 0)) >> C),
    "AFA3": _imply_cout_first((C >> (A >> 0)) >> B),
    "AFA5": _imply_cout_first((C >> (B >> 0)) >> A),
    "AFA8": _imply_sum_first((~B >> C) >> (((B >> ~C) >> A) >> ~(B >> (C >> ~A)))),
    "ECIS": _imply_sum_first(((C >> 0) >> A) >> (((C >> (A >> 0)) >> B) >> 0)),
}

CELL_ALIASES = {"AFA2": "ICIS1", "AFA3": "ICIS2", "AFA5": "ICIS3"}

# (cell, output) pairs checked pointwise, rewrite against sum-of-products
EQUIVALENCE_PAIRS = tuple((cell, out) for cell in SOP for out in ("sum", "cout"))

# NAND via IMPLY and the overlap of FALSE steps when building Cout of AFA2
DERIVATION_CHAIN = (
    ("NAND(A,B) == B->(A->0)", _nand(A, B), B >> (A >> 0)),
    ("~C.NAND(A,B) == (alpha->C)->0", ~C & _nand(A, B), ((B >> (A >> 0)) >> C) >> 0),
    ("overlapped FALSE steps", ((((B >> (A >> 0)) >> C) >> 0) >> 0), (B >> (A >> 0)) >> C),
)


@dataclass(frozen=True)
class PairResult:
    label: str
    lhs: str
    rhs: str
    lhs_table: tuple[int, ...]
    rhs_table: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.lhs_table == self.rhs_table


def check_expression_equivalence() -> list[PairResult]:
    results = []
    for cell, out in EQUIVALENCE_PAIRS:
        label = f"{out.capitalize()} {cell}" + (f" / {CELL_ALIASES[cell]}" if cell in CELL_ALIASES else "")
        lhs, rhs = getattr(IMPLY_FORMS[cell], out), getattr(SOP[cell], out)
        results.append(PairResult(label, repr(lhs), repr(rhs), lhs.table(), rhs.table()))
    for label, left, right in DERIVATION_CHAIN:
        results.append(PairResult(label, repr(left), repr(right), left.table(), right.table()))
    return results
