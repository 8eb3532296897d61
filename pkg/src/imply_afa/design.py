"""Single-bit-flip design space of approximate full adders (AFA1-AFA16)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cells import INPUT_ORDER, CellKind, exact_cell

# max output of a single full adder, 2*Cout + Sum
CELL_MAX_OUTPUT = 3


@dataclass(frozen=True)
class TruthTable8:
    rows: tuple[tuple[int, int], ...]
    provenance: str = "transcribed"
    name: str = ""

    def __post_init__(self):
        if len(self.rows) != 8:
            raise ValueError(f"a full-adder table has 8 rows, got {len(self.rows)}")
        for s, c in self.rows:
            if s not in (0, 1) or c not in (0, 1):
                raise ValueError(f"table entries must be bits, got {(s, c)}")

    @classmethod
    def from_columns(cls, sums, couts, **kw) -> "TruthTable8":
        return cls(tuple(zip(map(int, sums), map(int, couts))), **kw)

    @property
    def sums(self) -> tuple[int, ...]:
        return tuple(r[0] for r in self.rows)

    @property
    def couts(self) -> tuple[int, ...]:
        return tuple(r[1] for r in self.rows)

    def values(self) -> tuple[int, ...]:
        return tuple(2 * c + s for s, c in self.rows)

    def same_rows(self, other: "TruthTable8") -> bool:
        return self.rows == other.rows

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "provenance": self.provenance,
            "rows": [
                {"A": a, "B": b, "C": c, "Sum": s, "Cout": co}
                for (a, b, c), (s, co) in zip(INPUT_ORDER, self.rows)
            ],
        }


EXACT_TABLE = TruthTable8(tuple(exact_cell(*abc) for abc in INPUT_ORDER), "exact", "EXACT")


@dataclass(frozen=True)
class CellErrorMetrics:
    er_sum: Fraction
    er_cout: Fraction
    ed: int
    med: float
    nmed: float

    def to_dict(self) -> dict:
        return {
            "er_sum": str(self.er_sum),
            "er_cout": str(self.er_cout),
            "ed": self.ed,
            "med": self.med,
            "nmed": self.nmed,
        }


def score_table(table: TruthTable8) -> CellErrorMetrics:
    exact = EXACT_TABLE
    er_sum = Fraction(sum(s != e for s, e in zip(table.sums, exact.sums)), 8)
    er_cout = Fraction(sum(c != e for c, e in zip(table.couts, exact.couts)), 8)
    ed = sum(abs(v - e) for v, e in zip(table.values(), exact.values()))
    med = ed / 8
    return CellErrorMetrics(er_sum, er_cout, ed, med, med / CELL_MAX_OUTPUT)


def generate_cout_flip_family() -> list[TruthTable8]:
    """AFA1-AFA8: flip exact Cout in one state, Sum = NOT(Cout) everywhere."""
    family = []
    for k in range(8):
        couts = [c ^ (i == k) for i, c in enumerate(EXACT_TABLE.couts)]
        family.append(TruthTable8.from_columns(
            [1 - c for c in couts], couts, provenance=f"cout-flip({k + 1})", name=f"AFA{k + 1}"))
    return family


def generate_sum_flip_family() -> list[TruthTable8]:
    """AFA9-AFA16: flip exact Sum in one state, Cout = NOT(Sum) everywhere."""
    family = []
    for k in range(8):
        sums = [s ^ (i == k) for i, s in enumerate(EXACT_TABLE.sums)]
        family.append(TruthTable8.from_columns(
            sums, [1 - s for s in sums], provenance=f"sum-flip({k + 1})", name=f"AFA{k + 9}"))
    return family


def generate_family(family: str) -> list[TruthTable8]:
    if family == "cout-flip":
        return generate_cout_flip_family()
    if family == "sum-flip":
        return generate_sum_flip_family()
    raise ValueError(f"unknown family {family!r}; expected 'cout-flip' or 'sum-flip'")


# Prior-art serial cells whose tables coincide with cout-flip candidates
# (SIAFA3 = AFA4, SIAFA1 = AFA6, SIAFA4 = AFA7); transcribed literally.
PRIOR_ART_TABLES = {
    "SIAFA3": TruthTable8.from_columns((1, 1, 1, 1, 1, 0, 0, 0), (0, 0, 0, 0, 0, 1, 1, 1), name="SIAFA3"),
    "SIAFA1": TruthTable8.from_columns((1, 1, 1, 0, 1, 1, 0, 0), (0, 0, 0, 1, 0, 0, 1, 1), name="SIAFA1"),
    "SIAFA4": TruthTable8.from_columns((1, 1, 1, 0, 1, 0, 1, 0), (0, 0, 0, 1, 0, 1, 0, 1), name="SIAFA4"),
}

# Serial cost estimate for the SOP-heavy candidates (AFA1/AFA8; AFA9/AFA16 share
# their tables): at least 17 steps on 5 memristors.
COMPLEX_CANDIDATE_COST = {"steps": 17, "memristors": 5}
ICIS_COST = {"steps": CellKind.ICIS1.steps, "memristors": CellKind.ICIS1.memristors}


@dataclass(frozen=True)
class Constraints:
    max_er_sum: Fraction = Fraction(3, 8)
    max_er_cout: Fraction = Fraction(1, 8)
    max_ed: int = 3


@dataclass
class Verdict:
    name: str
    metrics: CellErrorMetrics
    accepted: bool
    reasons: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "metrics": self.metrics.to_dict(),
            "accepted": self.accepted,
            "reasons": self.reasons,
            "flags": self.flags,
        }


@dataclass
class FilterResult:
    accepted: list[Verdict]
    rejected: list[Verdict]

    @property
    def accepted_names(self) -> list[str]:
        return [v.name for v in self.accepted]

    @property
    def rejected_names(self) -> list[str]:
        return [v.name for v in self.rejected]

    def verdicts(self) -> list[Verdict]:
        return sorted(self.accepted + self.rejected, key=lambda v: int(v.name[3:]))


def _matches_complex_candidate(table: TruthTable8) -> bool:
    cout_family = generate_cout_flip_family()
    return any(table.same_rows(cout_family[i]) for i in (0, 7))


def filter_candidates(family: list[TruthTable8], constraints: Constraints | None = None) -> FilterResult:
    """Apply the ER/ED acceptability bounds and drop prior-art duplicates.

    Accepted candidates equal to the AFA1/AFA8 tables are additionally flagged
    with their estimated serial cost, which exceeds the ICIS cells' cost.
    """
    constraints = constraints or Constraints()
    accepted, rejected = [], []
    for table in family:
        m = score_table(table)
        reasons = []
        if m.er_sum > constraints.max_er_sum:
            reasons.append(f"ER_Sum {m.er_sum} > {constraints.max_er_sum}")
        if m.er_cout > constraints.max_er_cout:
            reasons.append(f"ER_Cout {m.er_cout} > {constraints.max_er_cout}")
        if m.ed > constraints.max_ed:
            reasons.append(f"ED {m.ed} > {constraints.max_ed}")
        for art, art_table in PRIOR_ART_TABLES.items():
            if table.same_rows(art_table):
                reasons.append(f"duplicate of prior-art {art}")
        verdict = Verdict(table.name, m, not reasons, reasons)
        if verdict.accepted and _matches_complex_candidate(table):
            verdict.flags.append(
                f"estimated cost {COMPLEX_CANDIDATE_COST['steps']} steps / "
                f"{COMPLEX_CANDIDATE_COST['memristors']} memristors exceeds ICIS "
                f"{ICIS_COST['steps']} steps / {ICIS_COST['memristors']} memristors")
        (accepted if verdict.accepted else rejected).append(verdict)
    return FilterResult(accepted, rejected)


def equivalence_claim_report() -> list[dict]:
    """Literal row comparison of AFA9/AFA16 against AFA1/AFA8, both pairings."""
    cout_f = {t.name: t for t in generate_cout_flip_family()}
    sum_f = {t.name: t for t in generate_sum_flip_family()}
    out = []
    for left in ("AFA9", "AFA16"):
        for right in ("AFA1", "AFA8"):
            out.append({"left": left, "right": right,
                        "identical": sum_f[left].same_rows(cout_f[right])})
    return out
