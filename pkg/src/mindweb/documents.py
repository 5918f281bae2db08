"""On-disk document formats and their (de)serializers.

All structured documents are JSON with a ``version`` field; serializers
emit a canonical form (fixed key order, two-space indent, sorted member
lists, trailing newline) so that serialize -> parse -> serialize is
byte-stable.  Response sheets are additionally accepted as tabular text,
one row per person: ``person_id,ability_id,ability_id,...``.

Balances and objective values are exact rationals and are stored as
fraction strings (``"5/8"``, ``"1"``) so plans round-trip without any
floating-point drift.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import DocumentError
from .grouping import (
    GroupProfile,
    GroupingConfig,
    GroupingPlan,
    Roster,
)
from .quotient import CLASS_INDICES, INTELLIGENCES
from .scoring import Ability, AbilityCatalog, PersonProfile, ResponseSheet, SwsVector

DOCUMENT_VERSION = 1

_NAME_TO_INDEX = {name: j for j, name in enumerate(INTELLIGENCES, start=1)}


def _dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _loads(text: str, kind: str) -> dict:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON for a {kind} document: {exc}") from None
    if not isinstance(payload, dict):
        raise DocumentError(f"a {kind} document must be a JSON object")
    version = payload.get("version")
    if version != DOCUMENT_VERSION:
        raise DocumentError(
            f"unsupported {kind} document version: {version!r} "
            f"(expected {DOCUMENT_VERSION})")
    return payload


def _require(payload: dict, key: str, kind: str) -> Any:
    if key not in payload:
        raise DocumentError(f"{kind} document is missing the '{key}' field")
    return payload[key]


def _string(value: Any, what: str) -> str:
    if not isinstance(value, str) or not value:
        raise DocumentError(f"{what} must be a non-empty string, got {value!r}")
    return value


def _string_list(value: Any, what: str) -> list[str]:
    if not isinstance(value, list):
        raise DocumentError(f"{what} must be a list, got {value!r}")
    return [_string(v, f"entry of {what}") for v in value]


# --- catalogs ---------------------------------------------------------------

def dumps_catalog(catalog: AbilityCatalog) -> str:
    payload = {
        "version": DOCUMENT_VERSION,
        "abilities": [
            {
                "id": a.id,
                "label": a.label,
                "intelligences": [INTELLIGENCES[j - 1]
                                  for j in sorted(a.memberships)],
            }
            for a in catalog.abilities
        ],
    }
    return _dumps(payload)


def _class_index(value: Any) -> int:
    """Accept an intelligence name or a 1-based index."""
    if isinstance(value, bool):
        raise DocumentError(f"invalid intelligence reference: {value!r}")
    if isinstance(value, int):
        return value  # range-checked later by catalog validation
    if isinstance(value, str):
        try:
            return _NAME_TO_INDEX[value]
        except KeyError:
            raise DocumentError(
                f"unknown intelligence name: {value!r} "
                f"(expected one of {', '.join(INTELLIGENCES)})") from None
    raise DocumentError(f"invalid intelligence reference: {value!r}")


def parse_catalog(text: str) -> AbilityCatalog:
    payload = _loads(text, "catalog")
    rows = _require(payload, "abilities", "catalog")
    if not isinstance(rows, list):
        raise DocumentError("'abilities' must be a list")
    abilities = []
    for row in rows:
        if not isinstance(row, dict):
            raise DocumentError(f"ability entries must be objects, got {row!r}")
        ability_id = _string(_require(row, "id", "ability"), "ability id")
        label = row.get("label", ability_id)
        if not isinstance(label, str):
            raise DocumentError(f"ability label must be a string, got {label!r}")
        raw = _require(row, "intelligences", "ability")
        if not isinstance(raw, list):
            raise DocumentError(
                f"'intelligences' of ability '{ability_id}' must be a list")
        memberships = frozenset(_class_index(v) for v in raw)
        abilities.append(Ability(ability_id, label, memberships))
    return AbilityCatalog(tuple(abilities))


# --- response sheets --------------------------------------------------------

def dumps_responses(sheets: tuple[ResponseSheet, ...] | list[ResponseSheet]) -> str:
    payload = {
        "version": DOCUMENT_VERSION,
        "responses": [
            {"person_id": s.person_id, "selected": sorted(s.selected)}
            for s in sheets
        ],
    }
    return _dumps(payload)


def parse_responses(text: str) -> tuple[ResponseSheet, ...]:
    """Parse either the JSON document form or tabular rows."""
    if text.lstrip().startswith("{"):
        return _parse_responses_json(text)
    return parse_responses_tabular(text)


def _parse_responses_json(text: str) -> tuple[ResponseSheet, ...]:
    payload = _loads(text, "responses")
    rows = _require(payload, "responses", "responses")
    if not isinstance(rows, list):
        raise DocumentError("'responses' must be a list")
    sheets = []
    seen: set[str] = set()
    for row in rows:
        if not isinstance(row, dict):
            raise DocumentError(f"response entries must be objects, got {row!r}")
        person_id = _string(_require(row, "person_id", "response"), "person id")
        if person_id in seen:
            raise DocumentError(f"duplicate person id: '{person_id}'")
        seen.add(person_id)
        selected = _string_list(_require(row, "selected", "response"),
                                f"'selected' of '{person_id}'")
        sheets.append(ResponseSheet(person_id, frozenset(selected)))
    return tuple(sheets)


def parse_responses_tabular(text: str) -> tuple[ResponseSheet, ...]:
    """One row per person: person id, then the selected ability ids."""
    sheets = []
    seen: set[str] = set()
    for row in csv.reader(io.StringIO(text)):
        cells = [c.strip() for c in row]
        cells = [c for c in cells if c]
        if not cells:
            continue
        person_id = cells[0]
        if person_id in seen:
            raise DocumentError(f"duplicate person id: '{person_id}'")
        seen.add(person_id)
        sheets.append(ResponseSheet(person_id, frozenset(cells[1:])))
    return tuple(sheets)


# --- scored profiles --------------------------------------------------------

def dumps_profiles(roster: Roster) -> str:
    payload = {
        "version": DOCUMENT_VERSION,
        "ideal": list(roster.ideal),
        "profiles": [
            {
                "person_id": p.person_id,
                "sws": list(p.sws),
                "selected": sorted(p.selected),
            }
            for p in roster.profiles
        ],
    }
    return _dumps(payload)


def _sws(value: Any, what: str) -> SwsVector:
    if (not isinstance(value, list)
            or not all(isinstance(v, int) and not isinstance(v, bool) and v >= 0
                       for v in value)):
        raise DocumentError(f"{what} must be a list of non-negative integers")
    if len(value) != len(CLASS_INDICES):
        raise DocumentError(
            f"{what} must have {len(CLASS_INDICES)} entries, got {len(value)}")
    return SwsVector(tuple(value))


def parse_profiles(text: str) -> Roster:
    payload = _loads(text, "profiles")
    ideal = _sws(_require(payload, "ideal", "profiles"), "'ideal'")
    rows = _require(payload, "profiles", "profiles")
    if not isinstance(rows, list):
        raise DocumentError("'profiles' must be a list")
    profiles = []
    seen: set[str] = set()
    for row in rows:
        if not isinstance(row, dict):
            raise DocumentError(f"profile entries must be objects, got {row!r}")
        person_id = _string(_require(row, "person_id", "profile"), "person id")
        if person_id in seen:
            raise DocumentError(f"duplicate person id: '{person_id}'")
        seen.add(person_id)
        sws = _sws(_require(row, "sws", "profile"), f"'sws' of '{person_id}'")
        selected = frozenset(_string_list(row.get("selected", []),
                                          f"'selected' of '{person_id}'"))
        profiles.append(PersonProfile(person_id, sws, selected))
    return Roster(tuple(profiles), ideal)


# --- grouping plans ---------------------------------------------------------

@dataclass(frozen=True)
class PlanDocument:
    """A grouping plan plus the config and ideal it was produced under."""

    config: GroupingConfig
    ideal: SwsVector
    plan: GroupingPlan


def _fraction_str(value: Fraction) -> str:
    return str(value)


def _parse_fraction(value: Any, what: str) -> Fraction:
    if not isinstance(value, str):
        raise DocumentError(f"{what} must be a fraction string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"{what} is not a valid fraction: {value!r}") from None


def dumps_plan(document: PlanDocument) -> str:
    config, plan = document.config, document.plan
    payload = {
        "version": DOCUMENT_VERSION,
        "config": {
            "group_size": config.group_size,
            "mode": config.mode,
            "seed": config.seed,
            "search_budget": config.search_budget,
            "restarts": config.restarts,
        },
        "ideal": list(document.ideal),
        "groups": [
            {
                "members": list(members),
                "profile": list(gp.profile),
                "balance": _fraction_str(gp.balance),
            }
            for members, gp in zip(plan.groups, plan.profiles)
        ],
        "objective": {
            "min_balance": _fraction_str(plan.objective[0]),
            "total_balance": _fraction_str(plan.objective[1]),
        },
    }
    return _dumps(payload)


def parse_plan(text: str) -> PlanDocument:
    payload = _loads(text, "plan")
    raw_config = _require(payload, "config", "plan")
    if not isinstance(raw_config, dict):
        raise DocumentError("'config' must be an object")
    try:
        config = GroupingConfig(
            group_size=int(_require(raw_config, "group_size", "plan config")),
            mode=_string(_require(raw_config, "mode", "plan config"), "mode"),
            seed=int(_require(raw_config, "seed", "plan config")),
            search_budget=int(_require(raw_config, "search_budget", "plan config")),
            restarts=int(_require(raw_config, "restarts", "plan config")),
        )
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"invalid plan config: {exc}") from None

    ideal = _sws(_require(payload, "ideal", "plan"), "'ideal'")
    raw_groups = _require(payload, "groups", "plan")
    if not isinstance(raw_groups, list):
        raise DocumentError("'groups' must be a list")
    groups, profiles = [], []
    for row in raw_groups:
        if not isinstance(row, dict):
            raise DocumentError(f"group entries must be objects, got {row!r}")
        members = _string_list(_require(row, "members", "group"), "'members'")
        groups.append(tuple(members))
        profiles.append(GroupProfile(
            _sws(_require(row, "profile", "group"), "group 'profile'"),
            _parse_fraction(_require(row, "balance", "group"), "group 'balance'"),
        ))

    raw_objective = _require(payload, "objective", "plan")
    if not isinstance(raw_objective, dict):
        raise DocumentError("'objective' must be an object")
    objective = (
        _parse_fraction(_require(raw_objective, "min_balance", "objective"),
                        "'min_balance'"),
        _parse_fraction(_require(raw_objective, "total_balance", "objective"),
                        "'total_balance'"),
    )
    plan = GroupingPlan(tuple(groups), tuple(profiles), objective)
    return PlanDocument(config, ideal, plan)
