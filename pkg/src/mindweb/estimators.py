"""scikit-learn style facade over scoring and grouping.

:class:`SwsScorer` is a transformer in the vectorizer mold: fitting binds
it to a catalog, transforming turns response sheets into an ``(n, 8)``
integer score matrix ready for any downstream estimator.
:class:`HigGrouper` is clustering-shaped: fitting an ``(n, 8)`` score
matrix assigns every row to a group and exposes the assignment as
``labels_``.

Both follow the usual contracts (``get_params`` / ``set_params``, clone
compatibility, fitted attributes with trailing underscores) so they
compose with pipelines and model selection tooling.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError
from sklearn.utils.validation import check_array

from .grouping import GroupingConfig, Roster, solve_grouping
from .quotient import CLASS_COUNT, INTELLIGENCES
from .scoring import (
    AbilityCatalog,
    PersonProfile,
    ResponseSheet,
    SwsVector,
    ideal_sws,
    raw_score,
    require_valid_catalog,
    score,
)


def _as_sheet(item, position: int) -> ResponseSheet:
    if isinstance(item, ResponseSheet):
        return item
    return ResponseSheet(f"row-{position}", frozenset(item))


class SwsScorer(TransformerMixin, BaseEstimator):
    """Turn selected-ability sets into eight-axis score vectors.

    Parameters
    ----------
    catalog : AbilityCatalog
        The catalog that defines the axes and the canonical classes.
    raw : bool, default False
        Count against the original overlapping classes instead of the
        reduced ones.  Raw counts can tally one ability on several axes;
        the default canonical counting never does.
    """

    def __init__(self, catalog: AbilityCatalog | None = None, raw: bool = False):
        self.catalog = catalog
        self.raw = raw

    def fit(self, X=None, y=None):
        if self.catalog is None:
            raise ValueError("SwsScorer requires a catalog")
        require_valid_catalog(self.catalog)
        self.ideal_ = np.asarray(tuple(ideal_sws(self.catalog)), dtype=int)
        self.partition_ = self.catalog.partition
        self.n_features_in_ = 0
        return self

    def transform(self, X) -> np.ndarray:
        """Score an iterable of response sheets or of ability-id sets."""
        if not hasattr(self, "partition_"):
            raise NotFittedError("SwsScorer is not fitted; call fit() first")
        scorer = raw_score if self.raw else score
        rows = [scorer(self.catalog, _as_sheet(item, i))
                for i, item in enumerate(X)]
        return np.asarray([tuple(v) for v in rows], dtype=int).reshape(-1, CLASS_COUNT)

    def get_feature_names_out(self, input_features=None):
        return np.asarray(INTELLIGENCES, dtype=object)


class HigGrouper(BaseEstimator):
    """Assign rows of a score matrix to complementary groups.

    Parameters mirror :class:`~mindweb.grouping.GroupingConfig`; ``ideal``
    is the per-axis maximum used for balance computation and defaults to
    the columnwise maximum of the fitted matrix.

    Attributes
    ----------
    labels_ : ndarray of shape (n,)
        Group index of every row.
    plan_ : GroupingPlan
        The underlying plan, over zero-padded row ids.
    groups_ : tuple of tuples of int
        Row indices per group, aligned with ``plan_.groups``.
    """

    def __init__(self, group_size: int = 2, mode: str = "local", seed: int = 0,
                 search_budget: int = 32, restarts: int = 0,
                 ideal: tuple[int, ...] | None = None):
        self.group_size = group_size
        self.mode = mode
        self.seed = seed
        self.search_budget = search_budget
        self.restarts = restarts
        self.ideal = ideal

    def fit(self, X, y=None):
        X = check_array(X, dtype=int, ensure_2d=True)
        if X.shape[1] != CLASS_COUNT:
            raise ValueError(
                f"expected {CLASS_COUNT} score columns, got {X.shape[1]}")
        if X.shape[0] < 1:
            raise ValueError("at least one row is required")
        if np.any(X < 0):
            raise ValueError("scores must be non-negative")

        if self.ideal is None:
            ideal = SwsVector(tuple(int(v) for v in X.max(axis=0)))
        else:
            ideal = SwsVector(tuple(self.ideal))

        width = len(str(X.shape[0] - 1))
        row_ids = [format(i, f"0{width}d") for i in range(X.shape[0])]
        roster = Roster(
            tuple(PersonProfile(rid, SwsVector(tuple(int(v) for v in row)))
                  for rid, row in zip(row_ids, X)),
            ideal,
        )
        config = GroupingConfig(group_size=self.group_size, mode=self.mode,
                                seed=self.seed, search_budget=self.search_budget,
                                restarts=self.restarts)
        plan = solve_grouping(roster, config)

        index_of = {rid: i for i, rid in enumerate(row_ids)}
        labels = np.empty(X.shape[0], dtype=int)
        groups = []
        for gi, members in enumerate(plan.groups):
            rows = tuple(index_of[m] for m in members)
            groups.append(rows)
            for r in rows:
                labels[r] = gi
        self.labels_ = labels
        self.groups_ = tuple(groups)
        self.plan_ = plan
        self.ideal_ = np.asarray(tuple(ideal), dtype=int)
        self.n_features_in_ = CLASS_COUNT
        return self

    def fit_predict(self, X, y=None) -> np.ndarray:
        return self.fit(X, y).labels_
