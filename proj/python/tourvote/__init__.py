"""Majority realization of tournaments by voters with transitive preferences."""

from ._core import (
    BudgetExceededError,
    CapacityError,
    MalformedProfileError,
    OrientationError,
    ParityError,
    ParseError,
    PreconditionError,
    Profile,
    TieError,
    Tournament,
    extend_pair,
    format_tournament,
    format_votes,
    greedy_transitive_chain,
    is_transitive,
    majority_pattern,
    margins,
    max_transitive_exhaustive,
    max_v_exact,
    mcgarvey_baseline,
    min_voters_exact,
    parse_tournament,
    parse_votes,
    random_tournament,
    restrict,
    segment_partition,
    synthesize,
    voter_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
