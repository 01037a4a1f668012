from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: Optional[str] = None
    skipped: bool = False

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.skipped:
            out["skipped"] = True
        return out


@dataclass
class SpechtReport:
    n: int
    side: str
    cell: List[str]
    dimension: int
    character: Dict[str, int]
    norm: Fraction
    shape: Optional[Tuple[int, ...]] = None
    expected_dimension: Optional[int] = None

    @property
    def is_irreducible(self) -> bool:
        return self.norm == 1

    @property
    def dimension_matches(self) -> bool:
        """True when no tableau count applies, else whether it equals the dimension."""
        return self.expected_dimension is None or self.expected_dimension == self.dimension

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "side": self.side,
            "cell": self.cell,
            "shape": list(self.shape) if self.shape is not None else None,
            "dimension": self.dimension,
            "expected_dimension": self.expected_dimension,
            "character": self.character,
            "norm": str(self.norm),
            "irreducible": self.is_irreducible,
        }


@dataclass
class WedderburnReport:
    n: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {"n": self.n, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


@dataclass
class Block:
    # residue -> number of coordinates equal to it, sorted by residue
    gamma: Tuple[Tuple[int, int], ...]
    dimension: int
    weights: Dict[Tuple[int, ...], int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "gamma": [list(pair) for pair in self.gamma],
            "dimension": self.dimension,
            "weights": [{"residues": list(w), "dimension": d} for w, d in sorted(self.weights.items())],
        }


@dataclass
class BlockReport:
    n: int
    p: int
    blocks: List[Block] = field(default_factory=list)
    invariant: Optional[bool] = None

    @property
    def field_name(self) -> str:
        return "Q" if self.p == 0 else f"F{self.p}"

    @property
    def total_dimension(self) -> int:
        return sum(b.dimension for b in self.blocks)

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "field": self.field_name,
            "total": self.total_dimension,
            "blocks": [b.to_dict() for b in self.blocks],
        }
        if self.invariant is not None:
            out["invariant"] = self.invariant
        return out


@dataclass
class JonesResult:
    method: str
    j_hat: str
    j: str
    n_plus: int
    n_minus: int
    phi: Optional[str] = None
    bracket: Optional[str] = None

    def to_dict(self) -> dict:
        out = {"method": self.method, "j_hat": self.j_hat, "j": self.j,
               "n_plus": self.n_plus, "n_minus": self.n_minus}
        if self.phi is not None:
            out["phi"] = self.phi
        if self.bracket is not None:
            out["bracket"] = self.bracket
        return out
