"""Formation of groups whose members cover each other's weak axes.

A group's effective ability on an axis is the componentwise *maximum*
over its members' scores: one strong member is enough to cover an axis
for everyone.  A group's *balance* is the worst axis coverage relative to
the ideal vector, a rational in ``[0, 1]``; balance 1 means the group web
reaches the ideal web on every axis.

Plans are compared by the lexicographic objective
``(min group balance, sum of balances)`` - larger is better - which makes
the worst group and the worst axis the bottleneck.

Three solvers share that objective:

* :func:`greedy_grouping` - deterministic constructive baseline,
* :func:`local_search` - swap-based improvement of any starting plan,
* :func:`exact_grouping` - exhaustive enumeration, capped at 12 people,
  which serves as the correctness oracle for the other two.

All solvers are deterministic given ``(roster, config)``.  Ties are broken
by the lexicographically smallest canonical form: groups sorted by their
smallest member id, members sorted.  The config seed only drives optional
randomized restarts of the local search, whose results merge
deterministically.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import SizeLimitError, ValidationError
from .scoring import CLASS_COUNT, PersonProfile, SwsVector

#: Largest roster accepted by :func:`exact_grouping`.  The number of
#: admissible partitions grows super-exponentially; 12 keeps exhaustive
#: runs well under a second.
EXACT_LIMIT = 12

GROUPING_MODES = ("greedy", "local", "exact")


@dataclass(frozen=True)
class Roster:
    """Scored persons plus the ideal vector of the catalog of record."""

    profiles: tuple[PersonProfile, ...]
    ideal: SwsVector

    def __post_init__(self):
        object.__setattr__(self, "profiles", tuple(self.profiles))

    @property
    def size(self) -> int:
        return len(self.profiles)

    def profile_of(self, person_id: str) -> PersonProfile:
        for p in self.profiles:
            if p.person_id == person_id:
                return p
        raise KeyError(person_id)


@dataclass(frozen=True)
class GroupingConfig:
    """Knobs for the grouping solvers.

    ``group_size`` is the target size k; rosters not divisible by k are
    split into ``ceil(n / k)`` groups whose sizes differ by at most one.
    ``search_budget`` caps the number of full local-search passes.
    ``restarts`` adds that many seeded random starting plans to the local
    search; 0 keeps the plain greedy start.
    """

    group_size: int
    mode: str = "local"
    seed: int = 0
    search_budget: int = 32
    restarts: int = 0

    def __post_init__(self):
        findings = []
        if self.group_size < 1:
            findings.append(f"group_size must be >= 1, got {self.group_size}")
        if self.search_budget < 0:
            findings.append(f"search_budget must be >= 0, got {self.search_budget}")
        if self.restarts < 0:
            findings.append(f"restarts must be >= 0, got {self.restarts}")
        if self.mode not in GROUPING_MODES:
            findings.append(f"mode must be one of {GROUPING_MODES}, got {self.mode!r}")
        if findings:
            raise ValidationError(findings)


@dataclass(frozen=True)
class GroupProfile:
    """Effective group web: componentwise max over members, plus balance."""

    profile: SwsVector
    balance: Fraction


@dataclass(frozen=True)
class GroupingPlan:
    """A canonical-form plan: groups of member ids plus their profiles.

    Groups are stored with members sorted and the groups themselves
    sorted by smallest member id; ``profiles[i]`` describes ``groups[i]``.
    """

    groups: tuple[tuple[str, ...], ...]
    profiles: tuple[GroupProfile, ...]
    objective: tuple[Fraction, Fraction]


def web_balance(profile: SwsVector, ideal: SwsVector) -> Fraction:
    """Worst-axis coverage of ``profile`` relative to ``ideal``.

    Axes with ideal 0 are vacuously covered (an axis with no abilities
    cannot penalize a group) and contribute ratio 1.
    """
    ratios = [Fraction(1) if m == 0 else Fraction(s, m)
              for s, m in zip(profile, ideal)]
    return min(ratios)


def group_profile(members: Sequence[PersonProfile], ideal: SwsVector) -> GroupProfile:
    """Profile and balance of one group; order of members is irrelevant."""
    if not members:
        raise ValueError("a group must have at least one member")
    profile = SwsVector.componentwise_max(m.sws for m in members)
    return GroupProfile(profile, web_balance(profile, ideal))


def plan_objective(plan: GroupingPlan) -> tuple[Fraction, Fraction]:
    """The lexicographic value ``(min balance, sum of balances)``."""
    return plan.objective


def validate_roster(roster: Roster) -> list[str]:
    findings: list[str] = []
    seen: set[str] = set()
    for p in roster.profiles:
        if p.person_id in seen:
            findings.append(f"duplicate person id: '{p.person_id}'")
        seen.add(p.person_id)
        if not p.sws.fits_within(roster.ideal):
            findings.append(
                f"person '{p.person_id}' exceeds the ideal vector: "
                f"{p.sws.scores} > {roster.ideal.scores}")
    return findings


def require_valid_roster(roster: Roster) -> None:
    findings = validate_roster(roster)
    if not roster.profiles:
        findings.append("roster is empty")
    if findings:
        raise ValidationError(findings)


def group_sizes(n: int, k: int) -> tuple[int, ...]:
    """Sizes of the ``ceil(n / k)`` groups, largest first, differing by <= 1."""
    g = math.ceil(n / k)
    base, remainder = divmod(n, g)
    return (base + 1,) * remainder + (base,) * (g - remainder)


def build_plan(roster: Roster, groups: Iterable[Iterable[str]]) -> GroupingPlan:
    """Canonicalize member-id groups into a plan, verifying partition laws.

    Raises :class:`ValidationError` if the groups do not partition the
    roster or their sizes differ by more than one.
    """
    require_valid_roster(roster)
    canonical = tuple(sorted(tuple(sorted(g)) for g in groups))
    findings: list[str] = []
    assigned = [m for g in canonical for m in g]
    roster_ids = sorted(p.person_id for p in roster.profiles)
    if sorted(assigned) != roster_ids:
        findings.append("groups do not partition the roster")
    if any(not g for g in canonical):
        findings.append("empty group")
    sizes = {len(g) for g in canonical}
    if sizes and max(sizes) - min(sizes) > 1:
        findings.append(f"group sizes {sorted(sizes)} differ by more than one")
    if findings:
        raise ValidationError(findings)

    by_id = {p.person_id: p for p in roster.profiles}
    profiles = tuple(group_profile([by_id[m] for m in g], roster.ideal)
                     for g in canonical)
    balances = [gp.balance for gp in profiles]
    objective = (min(balances), sum(balances, Fraction(0)))
    return GroupingPlan(canonical, profiles, objective)


def greedy_grouping(roster: Roster, config: GroupingConfig) -> GroupingPlan:
    """Deterministic constructive baseline.

    Persons are taken in descending total score (ties by ascending id)
    and each is placed in the group with the lowest current balance that
    still has capacity, lowest group index winning ties.
    """
    require_valid_roster(roster)
    order = sorted(roster.profiles, key=lambda p: (-p.sws.total, p.person_id))
    capacities = group_sizes(roster.size, config.group_size)
    members: list[list[str]] = [[] for _ in capacities]
    maxima: list[list[int]] = [[0] * CLASS_COUNT for _ in capacities]
    balances = [_balance_of_counts(m, roster.ideal) for m in maxima]

    for person in order:
        open_groups = [i for i in range(len(capacities))
                       if len(members[i]) < capacities[i]]
        target = min(open_groups, key=lambda i: balances[i])
        members[target].append(person.person_id)
        maxima[target] = [max(a, b) for a, b in zip(maxima[target], person.sws)]
        balances[target] = _balance_of_counts(maxima[target], roster.ideal)

    return build_plan(roster, members)


def _balance_of_counts(counts: Sequence[int], ideal: SwsVector) -> Fraction:
    return min(Fraction(1) if m == 0 else Fraction(s, m)
               for s, m in zip(counts, ideal))


def local_search(initial: GroupingPlan, roster: Roster,
                 config: GroupingConfig) -> GroupingPlan:
    """First-improvement swap search from ``initial``.

    Scans all cross-group member swaps in ascending ``(id_a, id_b)``
    order, applying a swap only when it strictly improves the
    lexicographic objective; stops at a local optimum or after
    ``config.search_budget`` full passes.  With budget 0 the initial plan
    is returned verbatim, and the result is never worse than the input.
    """
    require_valid_roster(roster)
    if config.search_budget <= 0:
        return initial

    by_id = {p.person_id: p for p in roster.profiles}
    groups = [list(g) for g in initial.groups]
    assignment = {m: i for i, g in enumerate(groups) for m in g}
    balances = [group_profile([by_id[m] for m in g], roster.ideal).balance
                for g in groups]
    current = (min(balances), sum(balances, Fraction(0)))
    ids = sorted(assignment)
    pairs = list(itertools.combinations(ids, 2))

    for _ in range(config.search_budget):
        improved = False
        for a, b in pairs:
            ga, gb = assignment[a], assignment[b]
            if ga == gb:
                continue
            swapped_a = [m for m in groups[ga] if m != a] + [b]
            swapped_b = [m for m in groups[gb] if m != b] + [a]
            bal_a = group_profile([by_id[m] for m in swapped_a], roster.ideal).balance
            bal_b = group_profile([by_id[m] for m in swapped_b], roster.ideal).balance
            rest = [bal for i, bal in enumerate(balances) if i not in (ga, gb)]
            candidate = (min([bal_a, bal_b] + rest),
                         sum(rest, bal_a + bal_b))
            if candidate > current:
                groups[ga], groups[gb] = swapped_a, swapped_b
                assignment[a], assignment[b] = gb, ga
                balances[ga], balances[gb] = bal_a, bal_b
                current = candidate
                improved = True
        if not improved:
            break

    return build_plan(roster, groups)


def exact_grouping(roster: Roster, config: GroupingConfig) -> GroupingPlan:
    """Exhaustively optimal plan; the oracle the heuristics are held to.

    Enumerates every partition of the roster into ``ceil(n / k)`` groups
    with sizes differing by at most one and keeps the best objective,
    breaking ties by the lexicographically smallest canonical form.
    Refuses rosters larger than :data:`EXACT_LIMIT`.
    """
    require_valid_roster(roster)
    if roster.size > EXACT_LIMIT:
        raise SizeLimitError(
            f"exact mode is capped at {EXACT_LIMIT} persons, got {roster.size}")

    by_id = {p.person_id: p for p in roster.profiles}
    ids = tuple(sorted(by_id))
    sizes = group_sizes(roster.size, config.group_size)

    best_groups: tuple[tuple[str, ...], ...] | None = None
    best_value: tuple[Fraction, Fraction] | None = None
    for groups in _sized_partitions(ids, sizes):
        balances = [group_profile([by_id[m] for m in g], roster.ideal).balance
                    for g in groups]
        value = (min(balances), sum(balances, Fraction(0)))
        if (best_value is None or value > best_value
                or (value == best_value and groups < best_groups)):
            best_groups, best_value = groups, value

    return build_plan(roster, best_groups)


def _sized_partitions(ids: tuple[str, ...], sizes: tuple[int, ...]):
    """All partitions of sorted ``ids`` into groups of the given sizes.

    Anchoring each group on the smallest remaining id yields every
    partition exactly once, already in canonical form.
    """
    if not ids:
        yield ()
        return
    head, rest = ids[0], ids[1:]
    for size in sorted(set(sizes)):
        remaining = list(sizes)
        remaining.remove(size)
        for companions in itertools.combinations(rest, size - 1):
            taken = set(companions)
            others = tuple(x for x in rest if x not in taken)
            group = (head, *companions)
            for more in _sized_partitions(others, tuple(remaining)):
                yield (group, *more)


def solve_grouping(roster: Roster, config: GroupingConfig) -> GroupingPlan:
    """Dispatch on ``config.mode``; the entry point used by the CLI.

    Mode ``local`` improves the greedy plan and, when ``config.restarts``
    is positive, also improves that many seeded random starting plans;
    the best result wins, ties going to the smallest canonical form.
    """
    if config.mode == "greedy":
        return greedy_grouping(roster, config)
    if config.mode == "exact":
        return exact_grouping(roster, config)

    candidates = [local_search(greedy_grouping(roster, config), roster, config)]
    if config.restarts:
        rng = random.Random(config.seed)
        ids = sorted(p.person_id for p in roster.profiles)
        sizes = group_sizes(roster.size, config.group_size)
        for _ in range(config.restarts):
            permuted = rng.sample(ids, len(ids))
            groups, start = [], 0
            for size in sizes:
                groups.append(permuted[start:start + size])
                start += size
            initial = build_plan(roster, groups)
            candidates.append(local_search(initial, roster, config))

    best = candidates[0]
    for plan in candidates[1:]:
        if (plan.objective > best.objective
                or (plan.objective == best.objective and plan.groups < best.groups)):
            best = plan
    return best
