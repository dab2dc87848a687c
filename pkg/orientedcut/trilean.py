"""Three-valued verdicts for fuel-bounded decisions.

Confirmed and Refuted are statements about the mathematical objects and never
flip when more fuel is spent. Unknown records how much fuel was spent without
reaching either. A verdict is never coerced to bool.
"""

import enum
from typing import Iterable


class Verdict(enum.Enum):
    CONFIRMED = "Confirmed"
    REFUTED = "Refuted"
    UNKNOWN = "Unknown"


class Trilean:
    """A verdict plus metadata.

    Equality looks at the verdict only; ``fuel_spent``, ``note`` and
    ``witness`` describe how it was reached.
    """

    __slots__ = ("verdict", "fuel_spent", "note", "witness")

    def __init__(self, verdict, fuel_spent=0, note=None, witness=None):
        self.verdict = Verdict(verdict)
        self.fuel_spent = int(fuel_spent)
        self.note = note
        self.witness = witness

    @classmethod
    def confirmed(cls, note=None, witness=None):
        return cls(Verdict.CONFIRMED, note=note, witness=witness)

    @classmethod
    def refuted(cls, note=None, witness=None):
        return cls(Verdict.REFUTED, note=note, witness=witness)

    @classmethod
    def unknown(cls, fuel_spent=0, note=None, witness=None):
        return cls(Verdict.UNKNOWN, fuel_spent=fuel_spent, note=note, witness=witness)

    @property
    def is_confirmed(self):
        return self.verdict is Verdict.CONFIRMED

    @property
    def is_refuted(self):
        return self.verdict is Verdict.REFUTED

    @property
    def is_unknown(self):
        return self.verdict is Verdict.UNKNOWN

    @property
    def decided(self):
        return self.verdict is not Verdict.UNKNOWN

    @property
    def letter(self):
        """One-letter form used in signatures ("C", "R", "U")."""
        return self.verdict.value[0]

    def with_note(self, note):
        return Trilean(self.verdict, self.fuel_spent, note, self.witness)

    def __bool__(self):
        raise TypeError("Trilean has no truth value; test is_confirmed / is_refuted")

    def __invert__(self):
        if self.is_confirmed:
            return Trilean.refuted(self.note)
        if self.is_refuted:
            return Trilean.confirmed(self.note)
        return self

    def __and__(self, other):
        if not isinstance(other, Trilean):
            return NotImplemented
        for side in (self, other):
            if side.is_refuted:
                return side
        return self._merge_unknown(other)

    def __or__(self, other):
        if not isinstance(other, Trilean):
            return NotImplemented
        for side in (self, other):
            if side.is_confirmed:
                return side
        return self._merge_unknown(other)

    def _merge_unknown(self, other):
        if self.is_unknown or other.is_unknown:
            note = self.note if self.is_unknown else other.note
            return Trilean.unknown(max(self.fuel_spent, other.fuel_spent), note)
        return self

    @staticmethod
    def all(verdicts: Iterable["Trilean"]) -> "Trilean":
        """Conjunction; Refuted dominates, then Unknown. Empty is Confirmed."""
        result = Trilean.confirmed()
        for verdict in verdicts:
            result = result & verdict
            if result.is_refuted:
                break
        return result

    @staticmethod
    def any(verdicts: Iterable["Trilean"]) -> "Trilean":
        """Disjunction; Confirmed dominates, then Unknown. Empty is Refuted."""
        result = Trilean.refuted()
        for verdict in verdicts:
            result = result | verdict
            if result.is_confirmed:
                break
        return result

    def __eq__(self, other):
        if isinstance(other, Trilean):
            return self.verdict is other.verdict
        if isinstance(other, Verdict):
            return self.verdict is other
        return NotImplemented

    def __hash__(self):
        return hash(self.verdict)

    def __str__(self):
        return self.verdict.value

    def __repr__(self):
        if self.is_unknown:
            return f"Trilean.unknown(fuel_spent={self.fuel_spent})"
        return f"Trilean.{self.verdict.name.lower()}()"


CONFIRMED = Trilean.confirmed()
REFUTED = Trilean.refuted()
UNKNOWN = Trilean.unknown()
