"""Multiple-intelligences profiling toolkit.

Canonicalizes overlapping intelligence classes into disjoint reduced
classes, scores test responses into eight-axis spider-web vectors,
renders the webs as deterministic SVG, and forms groups whose members
cover each other's weak axes.  A scikit-learn style estimator layer
(:class:`SwsScorer`, :class:`HigGrouper`) exposes scoring and grouping to
the wider ecosystem; the underlying operations are plain functions.
"""

from .errors import (
    DocumentError,
    MindwebError,
    SizeLimitError,
    UnknownIdError,
    ValidationError,
)
from .grouping import (
    EXACT_LIMIT,
    GroupProfile,
    GroupingConfig,
    GroupingPlan,
    Roster,
    build_plan,
    exact_grouping,
    greedy_grouping,
    group_profile,
    group_sizes,
    local_search,
    plan_objective,
    solve_grouping,
    validate_roster,
    web_balance,
)
from .quotient import (
    CLASS_COUNT,
    CLASS_INDICES,
    INTELLIGENCES,
    CanonicalPartition,
    LabeledFamily,
    disjointify,
    family_from_memberships,
    overlap_set,
    quotient,
    related,
    validate_family,
    validate_partition,
)
from .render import (
    DEFAULT_PALETTE,
    RenderStyle,
    render_group,
    render_partition,
    render_sws,
)
from .scoring import (
    Ability,
    AbilityCatalog,
    PersonProfile,
    ResponseSheet,
    SwsVector,
    ideal_sws,
    profile_person,
    raw_ideal_sws,
    raw_score,
    score,
    validate_catalog,
)

__version__ = "0.1.0"

__all__ = [
    "Ability",
    "AbilityCatalog",
    "CanonicalPartition",
    "CLASS_COUNT",
    "CLASS_INDICES",
    "DEFAULT_PALETTE",
    "DocumentError",
    "EXACT_LIMIT",
    "GroupProfile",
    "GroupingConfig",
    "GroupingPlan",
    "INTELLIGENCES",
    "LabeledFamily",
    "MindwebError",
    "PersonProfile",
    "RenderStyle",
    "ResponseSheet",
    "Roster",
    "SizeLimitError",
    "SwsVector",
    "UnknownIdError",
    "ValidationError",
    "build_plan",
    "disjointify",
    "exact_grouping",
    "family_from_memberships",
    "greedy_grouping",
    "group_profile",
    "group_sizes",
    "ideal_sws",
    "local_search",
    "overlap_set",
    "plan_objective",
    "profile_person",
    "quotient",
    "raw_ideal_sws",
    "raw_score",
    "related",
    "render_group",
    "render_partition",
    "render_sws",
    "score",
    "solve_grouping",
    "validate_catalog",
    "validate_family",
    "validate_partition",
    "validate_roster",
    "web_balance",
]

# Imported late so estimator construction can rely on the names above.
from .estimators import HigGrouper, SwsScorer  # noqa: E402

__all__ += ["HigGrouper", "SwsScorer"]
