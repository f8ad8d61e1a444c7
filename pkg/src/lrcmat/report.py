"""Small report records shared by the axiom and structure checkers."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitset import indices_of


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an axiom scan; carries the first violation found."""

    ok: bool
    axiom: str | None = None
    witnesses: tuple = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "axiom": self.axiom,
            "witnesses": [list(indices_of(w)) if isinstance(w, int) else w
                          for w in self.witnesses],
            "message": self.message,
        }


@dataclass(frozen=True)
class ConditionResult:
    """One named condition with its verdict and an optional witness."""

    label: str
    ok: bool
    witness: tuple = ()
    message: str = ""

    def to_dict(self) -> dict:
        return {
            "condition": self.label,
            "ok": self.ok,
            "witness": [list(indices_of(w)) if isinstance(w, int) else w
                        for w in self.witness],
            "message": self.message,
        }


@dataclass(frozen=True)
class StructureReport:
    """Per-condition results of the optimality structure check."""

    results: tuple[ConditionResult, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> tuple[ConditionResult, ...]:
        return tuple(r for r in self.results if not r.ok)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "conditions": [r.to_dict() for r in self.results]}
