"""Instrumented rational scalar for the subtraction-free audit.

High relative accuracy hinges on never subtracting two computed
quantities of the same sign.  ``AuditedRational`` wraps a Fraction and
counts every operation that combines same-sign magnitudes
destructively: ``a - b`` with sign(a) == sign(b) != 0, and ``a + b``
with sign(a) == -sign(b) != 0 (an addition of opposite signs is the
same cancellation in disguise).  Running expand/solve on audited
scalars and asserting a zero count witnesses the HRA structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass
class SubtractionAudit:
    same_sign_subtractions: int = 0
    total_subtractions: int = 0
    events: list = field(default_factory=list)

    def record(self, a: Fraction, b: Fraction, cancelling: bool):
        self.total_subtractions += 1
        if cancelling:
            self.same_sign_subtractions += 1
            self.events.append((a, b))


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class AuditedRational:
    """A Fraction that reports cancellation-prone operations to an audit."""

    __slots__ = ("value", "audit")

    def __init__(self, value, audit: SubtractionAudit):
        self.value = Fraction(value)
        self.audit = audit

    def _coerce(self, other):
        if isinstance(other, AuditedRational):
            return other.value
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return NotImplemented

    def _wrap(self, value):
        return AuditedRational(value, self.audit)

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        if _sign(self.value) != 0 and _sign(v) == -_sign(self.value):
            self.audit.record(self.value, v, cancelling=True)
        return self._wrap(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        cancelling = _sign(self.value) != 0 and _sign(v) == _sign(self.value)
        self.audit.record(self.value, v, cancelling)
        return self._wrap(self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        cancelling = _sign(v) != 0 and _sign(self.value) == _sign(v)
        self.audit.record(v, self.value, cancelling)
        return self._wrap(v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(self.value / v)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(v / self.value)

    def __neg__(self):
        return self._wrap(-self.value)

    def __eq__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self.value == v

    def __lt__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self.value < v

    def __le__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self.value <= v

    def __gt__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self.value > v

    def __ge__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self.value >= v

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"AuditedRational({self.value})"
