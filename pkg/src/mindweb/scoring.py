"""Ability catalogs, response sheets, and spider-web score vectors.

A catalog lists the ability descriptors a test asks about, each tagged
with the intelligence classes that claim it.  Scoring a person's selected
abilities produces an :class:`SwsVector`: eight non-negative counts, one
per intelligence axis.

Scores are counted against the catalog's *reduced* classes, so an ability
claimed by several intelligences contributes to exactly one axis and the
axis scores always sum to the number of selected abilities.  A raw mode
that counts against the original overlapping classes is available for
comparison (:func:`raw_score`); it can count one ability several times
and is never the default.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import UnknownIdError, ValidationError
from .quotient import (
    CLASS_COUNT,
    CLASS_INDICES,
    CanonicalPartition,
    LabeledFamily,
    disjointify,
    family_from_memberships,
)


@dataclass(frozen=True)
class SwsVector:
    """Eight per-axis ability counts; ``scores[0]`` is the Linguistic axis."""

    scores: tuple[int, ...]

    def __post_init__(self):
        scores = tuple(int(s) for s in self.scores)
        if len(scores) != CLASS_COUNT:
            raise ValidationError(
                [f"expected {CLASS_COUNT} axis scores, got {len(scores)}"])
        negative = [s for s in scores if s < 0]
        if negative:
            raise ValidationError([f"negative axis score: {negative[0]}"])
        object.__setattr__(self, "scores", scores)

    def __iter__(self):
        return iter(self.scores)

    def __len__(self) -> int:
        return CLASS_COUNT

    def __getitem__(self, position: int) -> int:
        return self.scores[position]

    @property
    def total(self) -> int:
        return sum(self.scores)

    def fits_within(self, other: "SwsVector") -> bool:
        """Componentwise ``self <= other``."""
        return all(s <= o for s, o in zip(self.scores, other.scores))

    @classmethod
    def zero(cls) -> "SwsVector":
        return cls((0,) * CLASS_COUNT)

    @classmethod
    def componentwise_max(cls, vectors: Iterable["SwsVector"]) -> "SwsVector":
        vectors = list(vectors)
        if not vectors:
            raise ValueError("componentwise max of no vectors")
        return cls(tuple(max(v[i] for v in vectors) for i in range(CLASS_COUNT)))


@dataclass(frozen=True)
class Ability:
    """One catalog entry: an ability id, its display label, and the
    1-based indices of the intelligence classes that claim it."""

    id: str
    label: str
    memberships: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "memberships", frozenset(self.memberships))


@dataclass(frozen=True)
class AbilityCatalog:
    """An ordered list of abilities; the order is preserved in documents."""

    abilities: tuple[Ability, ...]

    def __post_init__(self):
        object.__setattr__(self, "abilities", tuple(self.abilities))

    @cached_property
    def ids(self) -> frozenset[str]:
        return frozenset(a.id for a in self.abilities)

    @cached_property
    def by_id(self) -> dict[str, Ability]:
        return {a.id: a for a in self.abilities}

    @cached_property
    def family(self) -> LabeledFamily:
        """The possibly-overlapping class family this catalog induces."""
        return family_from_memberships({a.id: a.memberships for a in self.abilities})

    @cached_property
    def partition(self) -> CanonicalPartition:
        """Reduced classes of the induced family (validates the catalog)."""
        require_valid_catalog(self)
        return disjointify(self.family)


@dataclass(frozen=True)
class ResponseSheet:
    """One person's set of selected ability ids."""

    person_id: str
    selected: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "selected", frozenset(self.selected))


@dataclass(frozen=True)
class PersonProfile:
    """A scored person: axis scores plus the raw selection kept for audit."""

    person_id: str
    sws: SwsVector
    selected: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "selected", frozenset(self.selected))


def validate_catalog(catalog: AbilityCatalog) -> list[str]:
    """Check catalog invariants; one finding per violation.

    Unique ids, non-empty membership sets within 1..8, and non-empty id
    strings.  A catalog passing these checks always induces a valid
    class family.
    """
    findings: list[str] = []
    seen: set[str] = set()
    for ability in catalog.abilities:
        if not isinstance(ability.id, str) or not ability.id:
            findings.append(f"invalid ability id: {ability.id!r}")
            continue
        if ability.id in seen:
            findings.append(f"duplicate ability id: '{ability.id}'")
        seen.add(ability.id)
        if not ability.memberships:
            findings.append(
                f"orphan ability '{ability.id}': no intelligence membership")
        out_of_range = sorted(j for j in ability.memberships
                              if j not in CLASS_INDICES)
        if out_of_range:
            findings.append(
                f"ability '{ability.id}' has out-of-range class indices "
                f"{out_of_range} (valid: 1..{CLASS_COUNT})")
    return findings


def require_valid_catalog(catalog: AbilityCatalog) -> None:
    findings = validate_catalog(catalog)
    if findings:
        raise ValidationError(findings)


def score(catalog: AbilityCatalog, sheet: ResponseSheet) -> SwsVector:
    """Count the selected abilities per reduced class.

    Every selected ability contributes to exactly one axis (the class it
    canonicalizes to), so the axis scores sum to ``len(sheet.selected)``.
    """
    partition = catalog.partition
    unknown = sheet.selected - catalog.ids
    if unknown:
        raise UnknownIdError(unknown, kind="ability id")
    counts = [0] * CLASS_COUNT
    for x in sheet.selected:
        counts[partition.class_of[x] - 1] += 1
    return SwsVector(tuple(counts))


def raw_score(catalog: AbilityCatalog, sheet: ResponseSheet) -> SwsVector:
    """Count the selected abilities per original overlapping class.

    An ability claimed by several intelligences counts once on each of
    its axes, so the totals can exceed the selection size.  Comparison
    mode only; see :func:`score` for the canonical counting.
    """
    require_valid_catalog(catalog)
    unknown = sheet.selected - catalog.ids
    if unknown:
        raise UnknownIdError(unknown, kind="ability id")
    counts = [0] * CLASS_COUNT
    for x in sheet.selected:
        for j in catalog.by_id[x].memberships:
            counts[j - 1] += 1
    return SwsVector(tuple(counts))


def ideal_sws(catalog: AbilityCatalog) -> SwsVector:
    """The maximum attainable score on each axis: the reduced class sizes."""
    return SwsVector(catalog.partition.sizes)


def raw_ideal_sws(catalog: AbilityCatalog) -> SwsVector:
    """Per-axis ceiling for :func:`raw_score`: the overlapping class sizes."""
    require_valid_catalog(catalog)
    return SwsVector(tuple(len(c) for c in catalog.family.classes))


def profile_person(catalog: AbilityCatalog, sheet: ResponseSheet) -> PersonProfile:
    """Score one sheet and keep the selection for audit."""
    return PersonProfile(sheet.person_id, score(catalog, sheet), sheet.selected)
