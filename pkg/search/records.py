"""
Plucker - Scan Records
One row per scanned input and the summary a scan reports
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from polynomial.factor import FactoredForm, factor_quantum
from polynomial.qpoly import QPolynomial
from polynomial.shape import is_strictly_unimodal, is_symmetric, is_unimodal


@dataclass(frozen=True)
class ScanRecord:
    """
    Verdicts for one scanned input

    Every verdict is recomputable from `polynomial`; `factored` is None for
    the zero polynomial.
    """
    input_descriptor: str
    polynomial: QPolynomial
    unimodal: bool
    strictly_unimodal: bool
    symmetric: bool
    factored: Optional[FactoredForm]
    zero: bool

    def to_dict(self):
        """Convert to dictionary for JSON serialization"""
        return {
            'input_descriptor': self.input_descriptor,
            'polynomial': self.polynomial.to_dict(),
            'unimodal': self.unimodal,
            'strictly_unimodal': self.strictly_unimodal,
            'symmetric': self.symmetric,
            'factored': self.factored.to_dict() if self.factored else None,
            'zero': self.zero,
        }

    @classmethod
    def from_dict(cls, data):
        factored = data.get('factored')
        return cls(
            input_descriptor=data['input_descriptor'],
            polynomial=QPolynomial.from_dict(data['polynomial']),
            unimodal=bool(data['unimodal']),
            strictly_unimodal=bool(data['strictly_unimodal']),
            symmetric=bool(data['symmetric']),
            factored=FactoredForm.from_dict(factored) if factored else None,
            zero=bool(data['zero']),
        )


def make_record(descriptor, polynomial):
    """Evaluate every predicate on a computed polynomial"""
    zero = polynomial.is_zero
    return ScanRecord(
        input_descriptor=descriptor,
        polynomial=polynomial,
        unimodal=is_unimodal(polynomial),
        strictly_unimodal=is_strictly_unimodal(polynomial),
        symmetric=is_symmetric(polynomial),
        factored=None if zero else factor_quantum(polynomial),
        zero=zero,
    )


def verify_record(record):
    """True when the stored verdicts match a fresh evaluation of the polynomial"""
    return make_record(record.input_descriptor, record.polynomial) == record


@dataclass
class ScanSummary:
    """
    Aggregate of one scan or check

    non_unimodal lists exactly the records that are neither unimodal nor zero.
    """
    name: str
    total: int = 0
    zero_count: int = 0
    non_unimodal: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    exploratory: bool = False

    def to_dict(self, include_elapsed=False):
        """Convert to dictionary; elapsed time only on request so output stays reproducible"""
        data = {
            'name': self.name,
            'total': self.total,
            'zero_count': self.zero_count,
            'non_unimodal': list(self.non_unimodal),
            'exploratory': self.exploratory,
        }
        if include_elapsed:
            data['elapsed_ms'] = self.elapsed_ms
        return data


def summarize(name, records, elapsed=0.0, exploratory=False):
    """Build the ScanSummary of a record list"""
    return ScanSummary(
        name=name,
        total=len(records),
        zero_count=sum(1 for r in records if r.zero),
        non_unimodal=[r.input_descriptor for r in records if not r.unimodal and not r.zero],
        elapsed_ms=elapsed,
        exploratory=exploratory,
    )
