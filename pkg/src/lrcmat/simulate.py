"""Erasure-channel simulation at the matroid level.

Global decodability is a rank question; local repair peels erased
elements whose locality set still spans them. Monte-Carlo trials use
Python's Mersenne Twister with a per-trial string seed, so runs are
reproducible across platforms, and all statistics are exact integer
counts with rational rates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .analysis import LocalityCover
from .bitset import full_mask, indices_of, iter_elements, masks_of_size, popcount
from .errors import BadParams
from .matroid import Matroid


@dataclass(frozen=True)
class RepairEvent:
    """One successful local repair: which element, from which set,
    reading how many surviving symbols."""

    element: int
    set_mask: int
    contacts: int

    def to_dict(self) -> dict:
        return {"element": self.element, "set": list(indices_of(self.set_mask)),
                "contacts": self.contacts}


@dataclass(frozen=True)
class ErasurePattern:
    """A set of erased positions plus the repair history so far."""

    erased: int
    trace: tuple[RepairEvent, ...] = ()

    @property
    def total_contacts(self) -> int:
        return sum(e.contacts for e in self.trace)

    def to_dict(self) -> dict:
        return {"erased": list(indices_of(self.erased)),
                "trace": [e.to_dict() for e in self.trace]}


def _check_pattern(matroid: Matroid, pattern: ErasurePattern) -> None:
    if pattern.erased & ~full_mask(matroid.n):
        raise BadParams("erasure pattern outside the ground set")


def is_globally_decodable(matroid: Matroid, pattern: ErasurePattern) -> bool:
    """True iff the surviving positions still have full rank."""
    _check_pattern(matroid, pattern)
    return matroid.rank(matroid.full & ~pattern.erased) == matroid.k


def _repair_sets_for(cover: LocalityCover, x: int) -> list[int]:
    """The element's own cover set first, then the cover's other sets."""
    own = cover.sets.get(x)
    out = [own] if own is not None else []
    for s in cover.distinct_sets():
        if s != own and s & (1 << x):
            out.append(s)
    return out


def local_repair_step(matroid: Matroid, cover: LocalityCover,
                      pattern: ErasurePattern) -> ErasurePattern:
    """One synchronous repair round.

    Elements are attempted in ascending index; an element is repaired
    when some locality set containing it spans it from the symbols
    that were alive at the start of the round.
    """
    _check_pattern(matroid, pattern)
    alive_at_start = ~pattern.erased
    erased = pattern.erased
    trace = list(pattern.trace)
    for x in iter_elements(pattern.erased):
        for s in _repair_sets_for(cover, x):
            known = s & alive_at_start
            if matroid.rank(known | (1 << x)) == matroid.rank(known):
                erased ^= 1 << x
                trace.append(RepairEvent(x, s, popcount(known)))
                break
    return ErasurePattern(erased, tuple(trace))


def peel_repair(matroid: Matroid, cover: LocalityCover,
                pattern: ErasurePattern) -> tuple[ErasurePattern, bool]:
    """Iterate repair rounds to a fixed point."""
    current = pattern
    while current.erased:
        after = local_repair_step(matroid, cover, current)
        if after.erased == current.erased:
            break
        current = after
    return current, current.erased == 0


@dataclass(frozen=True)
class SimulationStats:
    """Exact outcome counts over a batch of trials."""

    trials: int
    p: float
    seed: int
    repaired: int        # peeling cleared every erasure
    decodable: int       # full rank survived (includes all repaired trials)
    lost: int
    repair_events: int
    contacts: int

    @property
    def repaired_rate(self) -> Fraction:
        return Fraction(self.repaired, self.trials)

    @property
    def decodable_rate(self) -> Fraction:
        return Fraction(self.decodable, self.trials)

    @property
    def loss_rate(self) -> Fraction:
        return Fraction(self.lost, self.trials)

    @property
    def mean_contacts(self) -> Fraction:
        return Fraction(self.contacts, self.trials)

    def to_dict(self) -> dict:
        return {
            "trials": self.trials, "p": self.p, "seed": self.seed,
            "repaired": self.repaired, "decodable": self.decodable,
            "lost": self.lost, "repair_events": self.repair_events,
            "contacts": self.contacts,
            "repaired_rate": str(self.repaired_rate),
            "decodable_rate": str(self.decodable_rate),
            "loss_rate": str(self.loss_rate),
            "mean_contacts": str(self.mean_contacts),
        }


def monte_carlo(matroid: Matroid, cover: LocalityCover, p: float,
                trials: int, seed: int) -> SimulationStats:
    """Independent Bernoulli erasures per trial, peel-repaired then
    rank-checked. Trial t draws from ``random.Random(f"{seed}:{t}")``,
    one uniform draw per position in ascending order, so results do
    not depend on trial execution order.
    """
    if not 0 <= p <= 1:
        raise BadParams(f"erasure probability must be in [0, 1], got {p}")
    if trials < 1:
        raise BadParams(f"need at least one trial, got {trials}")
    repaired = decodable = lost = events = contacts = 0
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        erased = 0
        for x in range(matroid.n):
            if rng.random() < p:
                erased |= 1 << x
        final, full = peel_repair(matroid, cover, ErasurePattern(erased))
        events += len(final.trace)
        contacts += final.total_contacts
        if full:
            repaired += 1
        if is_globally_decodable(matroid, final):
            decodable += 1
        else:
            lost += 1
    return SimulationStats(trials, p, seed, repaired, decodable, lost,
                           events, contacts)


@dataclass(frozen=True)
class ExhaustiveRow:
    """Outcome tallies over every erasure pattern of one size."""

    size: int
    patterns: int
    decodable: int
    repaired: int

    def to_dict(self) -> dict:
        return {"size": self.size, "patterns": self.patterns,
                "decodable": self.decodable, "repaired": self.repaired}


def exhaustive_patterns(matroid: Matroid, cover: LocalityCover,
                        max_erasures: int) -> list[ExhaustiveRow]:
    """Tally decodability and repairability of every pattern up to the
    given size."""
    rows = []
    for size in range(max_erasures + 1):
        total = dec = rep = 0
        for erased in masks_of_size(matroid.n, size):
            total += 1
            pattern = ErasurePattern(erased)
            if is_globally_decodable(matroid, pattern):
                dec += 1
            _, full = peel_repair(matroid, cover, pattern)
            if full:
                rep += 1
        rows.append(ExhaustiveRow(size, total, dec, rep))
    return rows
