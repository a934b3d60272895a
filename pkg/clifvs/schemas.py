"""
Data structures for algorithm results and command line configuration.

Results carry exact scalars and multivectors; ``to_dict`` renders them with
the canonical textual forms so the JSON output can be parsed back.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from clifvs.blades import Signature
from clifvs.constants import DEFAULT_MODE, DEFAULT_SCALAR, MODE_CHOICES, SCALAR_CHOICES
from clifvs.exceptions import CliffordError
from clifvs.multivector import Multivector
from clifvs.scalars import Scalar, ScalarKind, format_scalar


class StepMode(Enum):
    """How many FVS steps N are run."""
    FULL = "full"          # 2^n
    BOTT = "bott"          # 2^ceil(n/2)
    SPAN = "span"          # 2^s, s = |span(A)|
    REDUCED = "reduced"    # 2^ceil(s/2)


@dataclass
class FvsResult:
    """Outcome of one FVS run."""
    mode: StepMode
    n_steps: int
    steps_run: int
    coeffs: List[Scalar]
    singular: bool
    inverse: Optional[Multivector] = None
    iterates: Optional[List[Tuple[Scalar, Multivector]]] = None

    @property
    def char_poly(self) -> List[Scalar]:
        """Monic coefficients [1, c_1, ..., c_N], highest degree first."""
        return [type(self.coeffs[0])(1)] + list(self.coeffs)

    @property
    def determinant(self) -> Scalar:
        """(-1)^N c_N, with N the reported degree."""
        degree = len(self.coeffs)
        return self.coeffs[-1] if degree % 2 == 0 else -self.coeffs[-1]

    def inverse_dict(self) -> Dict[str, Any]:
        return {
            'inverse': str(self.inverse) if self.inverse is not None else None,
            'charpoly': [format_scalar(c) for c in self.char_poly],
            'steps': self.steps_run,
            'singular': self.singular,
        }

    def charpoly_dict(self) -> Dict[str, Any]:
        return {
            'degree': self.n_steps,
            'coeffs': [format_scalar(c) for c in self.char_poly],
        }

    def det_dict(self) -> Dict[str, Any]:
        return {'determinant': format_scalar(self.determinant)}

    def trace_dict(self) -> List[Dict[str, str]]:
        return [
            {'t': format_scalar(c), 'm': str(k)}
            for c, k in (self.iterates or [])
        ]


@dataclass
class CliConfig:
    """Configuration for one command line invocation."""
    signature: Tuple[int, int]
    mode: str = DEFAULT_MODE
    scalar: str = DEFAULT_SCALAR
    output: str = "text"
    trace: bool = False
    debug: bool = False
    sig: Signature = field(init=False, repr=False)

    def __post_init__(self):
        if self.mode not in MODE_CHOICES:
            raise CliffordError(f"mode must be one of {MODE_CHOICES}, got {self.mode!r}")
        if self.scalar not in SCALAR_CHOICES:
            raise CliffordError(f"scalar must be one of {SCALAR_CHOICES}, got {self.scalar!r}")
        if self.output not in ("text", "json"):
            raise CliffordError(f"output must be text or json, got {self.output!r}")
        self.sig = Signature(*self.signature)

    @property
    def step_mode(self) -> StepMode:
        return StepMode(self.mode)

    @property
    def scalar_kind(self) -> ScalarKind:
        return ScalarKind.from_name(self.scalar)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'signature': list(self.signature),
            'mode': self.mode,
            'scalar': self.scalar,
            'output': self.output,
            'trace': self.trace,
        }


@dataclass
class CheckResult:
    """One line of a verification report."""
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'passed': self.passed,
            'detail': self.detail,
        }


@dataclass
class VerifyReport:
    """All checks run by ``verify`` on one input."""
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'passed': self.passed,
            'checks': [c.to_dict() for c in self.checks],
        }
