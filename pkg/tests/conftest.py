"""Shared fixtures and randomized-instance generators.

The generators return plain domain objects plus the independent raw
material (membership maps, selections) that tests use to verify results
without going back through the code under test.
"""

from __future__ import annotations

import random

import pytest

from mindweb.grouping import Roster
from mindweb.quotient import CLASS_COUNT, LabeledFamily
from mindweb.scoring import (
    Ability,
    AbilityCatalog,
    PersonProfile,
    ResponseSheet,
    SwsVector,
)


def random_memberships(rng: random.Random, n_elements: int) -> dict[str, frozenset[int]]:
    """Element -> class indices; biased toward singles with some overlaps."""
    memberships = {}
    for i in range(n_elements):
        count = rng.choices((1, 2, 3, 8), weights=(70, 20, 8, 2))[0]
        memberships[f"e{i:02d}"] = frozenset(
            rng.sample(range(1, CLASS_COUNT + 1), count))
    return memberships


def family_of(memberships: dict[str, frozenset[int]]) -> LabeledFamily:
    classes = [set() for _ in range(CLASS_COUNT)]
    for x, owners in memberships.items():
        for j in owners:
            classes[j - 1].add(x)
    return LabeledFamily(tuple(frozenset(c) for c in classes))


def random_family(rng: random.Random, max_elements: int = 64):
    """A random overlapping family plus its membership map."""
    memberships = random_memberships(rng, rng.randint(1, max_elements))
    return family_of(memberships), memberships


def random_catalog(rng: random.Random, max_elements: int = 64):
    memberships = random_memberships(rng, rng.randint(1, max_elements))
    abilities = tuple(Ability(x, f"ability {x}", owners)
                      for x, owners in sorted(memberships.items()))
    return AbilityCatalog(abilities), memberships


def random_sheet(rng: random.Random, catalog: AbilityCatalog,
                 person_id: str = "p") -> ResponseSheet:
    ids = sorted(a.id for a in catalog.abilities)
    k = rng.randint(0, len(ids))
    return ResponseSheet(person_id, frozenset(rng.sample(ids, k)))


def random_roster(rng: random.Random, n: int, max_score: int = 8) -> Roster:
    ideal = SwsVector(tuple(rng.randint(1, max_score)
                            for _ in range(CLASS_COUNT)))
    profiles = tuple(
        PersonProfile(f"p{i:02d}", SwsVector(tuple(rng.randint(0, ideal[j])
                                                   for j in range(CLASS_COUNT))))
        for i in range(n))
    return Roster(profiles, ideal)


@pytest.fixture(scope="session")
def demo_catalog_fx():
    from mindweb.demo import demo_catalog
    return demo_catalog()


@pytest.fixture(scope="session")
def demo_sheet_fx():
    from mindweb.demo import demo_responses
    return demo_responses()[0]
