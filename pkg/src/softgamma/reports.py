"""Verdict and report records shared by the checking layers."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One failed axiom with the elements that falsify it, in reading order."""

    axiom: str
    witness: tuple


@dataclass(frozen=True)
class AxiomReport:
    mode: str
    passed: bool
    violations: tuple[Violation, ...]


@dataclass(frozen=True)
class Witness:
    """Outcome of a containment/closure predicate with a reproducible witness.

    Truthiness equals the verdict, so a Witness drops into boolean contexts.
    ``kind`` names the violated condition; ``elements`` lists the labels that
    exhibit it (for closure kinds, the offending inputs followed by the
    escaping result).
    """

    verdict: bool
    kind: str | None = None
    failing_parameter: object = None
    elements: tuple = ()

    def __bool__(self) -> bool:
        return self.verdict


PASSED = Witness(True)


@dataclass(frozen=True)
class TheoremVerdict:
    """Aggregate outcome of checking one law over one or more trials.

    passes + vacuous + failures == trials always holds; the counterexample,
    when present, is the replayable document from the lowest failing trial.
    """

    theorem: str
    trials: int
    passes: int
    vacuous: int
    failures: int
    counterexample: dict | None = None
