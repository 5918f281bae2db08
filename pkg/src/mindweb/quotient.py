"""Overlap-free canonicalization of the eight intelligence classes.

An ability may be claimed by several intelligence classes at once.  For
counting and charting, every ability has to land on exactly one axis, so
families of overlapping classes are canonicalized with a minimum-index
rule: an ability shared by classes ``{i1, ..., ik}`` is kept in the class
with the smallest index and removed from all the others.  The result is a
tuple of eight pairwise-disjoint *reduced classes* covering the same
abilities, together with the induced same-class equivalence relation.

Class indices are 1-based everywhere in this module (class 1 is
Linguistic, class 8 is Naturalist); ``reduced_classes[j - 1]`` holds the
members of class ``j``.

Each ability's fate depends only on its own membership set, so the
canonicalization is a single independent pass over the ability universe;
no processing order can change the outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import UnknownIdError, ValidationError

#: The eight intelligence class names, in fixed axis order.  The
#: minimum-index rule is sensitive to this order, so it is never
#: configurable.
INTELLIGENCES = (
    "Linguistic",
    "Logical-Mathematical",
    "Spatial",
    "Bodily-Kinaesthetic",
    "Musical",
    "Interpersonal",
    "Intrapersonal",
    "Naturalist",
)

CLASS_COUNT = len(INTELLIGENCES)

#: Valid 1-based class indices.
CLASS_INDICES = tuple(range(1, CLASS_COUNT + 1))


@dataclass(frozen=True)
class LabeledFamily:
    """Eight ordered ability classes that may overlap.

    ``classes[j - 1]`` is the member set of intelligence class ``j``.
    ``universe``, when given, declares the full ability universe; every
    universe member must appear in at least one class (no orphan
    abilities) and no class may mention an ability outside it.  When
    ``universe`` is ``None`` the universe is simply the union of the
    classes.
    """

    classes: tuple[frozenset[str], ...]
    universe: frozenset[str] | None = None

    def __post_init__(self):
        object.__setattr__(self, "classes",
                           tuple(frozenset(c) for c in self.classes))
        if self.universe is not None:
            object.__setattr__(self, "universe", frozenset(self.universe))

    @cached_property
    def domain(self) -> frozenset[str]:
        """Union of all class member sets."""
        if not self.classes:
            return frozenset()
        return frozenset().union(*self.classes)

    def memberships(self, element: str) -> frozenset[int]:
        """1-based indices of the classes containing ``element``."""
        found = frozenset(j for j, c in zip(CLASS_INDICES, self.classes)
                          if element in c)
        if not found:
            raise UnknownIdError([element], kind="ability")
        return found


def validate_family(family: LabeledFamily) -> list[str]:
    """Check a family against its invariants.

    Returns one finding per violation, naming the offending element or
    class; an empty list means the family is valid.
    """
    findings: list[str] = []
    if len(family.classes) != CLASS_COUNT:
        findings.append(
            f"expected exactly {CLASS_COUNT} classes, got {len(family.classes)}")
    for j, members in enumerate(family.classes, start=1):
        for x in sorted(members):
            if not isinstance(x, str) or not x:
                findings.append(f"class {j} contains an invalid ability id: {x!r}")
    if family.universe is not None:
        domain = frozenset().union(*family.classes) if family.classes else frozenset()
        for x in sorted(family.universe - domain):
            findings.append(f"orphan ability '{x}': belongs to no class")
        for x in sorted(domain - family.universe):
            findings.append(f"ability '{x}' is outside the declared universe")
    return findings


def require_valid_family(family: LabeledFamily) -> None:
    findings = validate_family(family)
    if findings:
        raise ValidationError(findings)


def overlap_set(family: LabeledFamily) -> frozenset[str]:
    """Abilities belonging to two or more classes of ``family``."""
    require_valid_family(family)
    counts: dict[str, int] = {}
    for members in family.classes:
        for x in members:
            counts[x] = counts.get(x, 0) + 1
    return frozenset(x for x, n in counts.items() if n >= 2)


@dataclass(frozen=True)
class CanonicalPartition:
    """Eight pairwise-disjoint reduced classes over an ability universe.

    The tuple keeps all eight labeled axes even when canonicalization
    empties one of them; consumers that need a genuine partition (no
    empty blocks) should go through :func:`quotient`.
    """

    reduced_classes: tuple[frozenset[str], ...]

    def __post_init__(self):
        object.__setattr__(self, "reduced_classes",
                           tuple(frozenset(c) for c in self.reduced_classes))

    @cached_property
    def domain(self) -> frozenset[str]:
        if not self.reduced_classes:
            return frozenset()
        return frozenset().union(*self.reduced_classes)

    @cached_property
    def class_of(self) -> Mapping[str, int]:
        """Total map from ability id to its 1-based class index.

        Derived from ``reduced_classes``; on a malformed candidate whose
        classes overlap, the smallest containing index wins, which keeps
        the map deterministic for validation reporting.
        """
        mapping: dict[str, int] = {}
        for j, members in zip(CLASS_INDICES, self.reduced_classes):
            for x in members:
                mapping.setdefault(x, j)
        return mapping

    def members(self, index: int) -> frozenset[str]:
        """Member set of the 1-based class ``index``."""
        if index not in CLASS_INDICES:
            raise IndexError(f"class index must be in 1..{CLASS_COUNT}, got {index}")
        return self.reduced_classes[index - 1]

    def index_of(self, element: str) -> int:
        try:
            return self.class_of[element]
        except KeyError:
            raise UnknownIdError([element], kind="ability") from None

    @cached_property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.reduced_classes)


def disjointify(family: LabeledFamily) -> CanonicalPartition:
    """Canonicalize ``family`` under the minimum-index rule.

    Every ability shared between classes is retained only in its
    lowest-indexed class; abilities with a single membership are left
    untouched.
    """
    require_valid_family(family)
    reduced: list[set[str]] = [set() for _ in range(CLASS_COUNT)]
    for x in sorted(family.domain):
        j = min(family.memberships(x))
        reduced[j - 1].add(x)
    return CanonicalPartition(tuple(frozenset(c) for c in reduced))


def related(partition: CanonicalPartition, a: str, b: str) -> bool:
    """True iff ``a`` and ``b`` canonicalize to the same class."""
    return partition.index_of(a) == partition.index_of(b)


def quotient(partition: CanonicalPartition) -> list[frozenset[str]]:
    """Non-empty reduced classes in index order.

    These are the blocks of the induced equivalence relation: every
    ability of the domain appears in exactly one of them.
    """
    return [c for c in partition.reduced_classes if c]


def validate_partition(candidate: CanonicalPartition,
                       source: LabeledFamily) -> list[str]:
    """Check a candidate partition against its source family.

    Findings cover the three partition laws: pairwise disjointness of the
    reduced classes, coverage (same ability universe as the source), and
    the minimum-index rule for every ability.  An empty list means the
    candidate is exactly what :func:`disjointify` would produce.
    """
    findings = [f"source family: {f}" for f in validate_family(source)]
    if len(candidate.reduced_classes) != CLASS_COUNT:
        findings.append(f"expected exactly {CLASS_COUNT} reduced classes, "
                        f"got {len(candidate.reduced_classes)}")
        return findings

    seen: dict[str, int] = {}
    for j, members in zip(CLASS_INDICES, candidate.reduced_classes):
        for x in sorted(members):
            if x in seen:
                findings.append(
                    f"disjointness violated: '{x}' is in classes {seen[x]} and {j}")
            else:
                seen[x] = j

    source_domain = source.domain
    for x in sorted(candidate.domain - source_domain):
        findings.append(f"coverage violated: '{x}' is not in the source family")
    for x in sorted(source_domain - candidate.domain):
        findings.append(f"coverage violated: '{x}' is missing from the partition")

    for x in sorted(candidate.domain & source_domain):
        expected = min(source.memberships(x))
        actual = candidate.class_of[x]
        if actual != expected:
            owners = sorted(source.memberships(x))
            findings.append(
                f"minimum-index rule violated: '{x}' belongs to classes "
                f"{owners} but was assigned to class {actual} instead of {expected}")
    return findings


def family_from_memberships(memberships: Mapping[str, Iterable[int]]) -> LabeledFamily:
    """Build a family from a per-ability membership map.

    Convenience used by catalogs and tests; entries with empty membership
    sets surface as orphan findings during validation.
    """
    classes: list[set[str]] = [set() for _ in range(CLASS_COUNT)]
    for x, owners in memberships.items():
        for j in owners:
            if j in CLASS_INDICES:
                classes[j - 1].add(x)
    return LabeledFamily(tuple(frozenset(c) for c in classes),
                         universe=frozenset(memberships))
