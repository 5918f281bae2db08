"""Bundled demonstration data.

The package ships a 64-ability catalog (eight abilities per intelligence
after canonicalization, with four deliberately shared abilities so the
minimum-index rule has something to do), a single-person response sheet
whose scores are (5, 2, 6, 7, 4, 3, 2, 8), and a six-person team sheet
for the grouping walkthrough.  All three live as canonical JSON files
under ``mindweb/data/`` and can be fed to the CLI directly.
"""

from __future__ import annotations

from importlib import resources

from .documents import parse_catalog, parse_responses
from .scoring import AbilityCatalog, ResponseSheet

DEMO_CATALOG = "demo_catalog.json"
DEMO_RESPONSES = "demo_responses.json"
DEMO_TEAM_RESPONSES = "demo_team_responses.json"


def demo_text(name: str) -> str:
    """Raw text of a bundled data file."""
    return (resources.files("mindweb") / "data" / name).read_text(encoding="utf-8")


def demo_catalog() -> AbilityCatalog:
    return parse_catalog(demo_text(DEMO_CATALOG))


def demo_responses() -> tuple[ResponseSheet, ...]:
    """The single demonstration respondent scoring (5, 2, 6, 7, 4, 3, 2, 8)."""
    return parse_responses(demo_text(DEMO_RESPONSES))


def demo_team_responses() -> tuple[ResponseSheet, ...]:
    """Six respondents with complementary webs, for grouping examples."""
    return parse_responses(demo_text(DEMO_TEAM_RESPONSES))
