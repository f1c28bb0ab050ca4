"""Seed and budget configuration for randomized and exhaustive checks."""

import os
import random


__all__ = ["Settings", "ENV_SEED"]


ENV_SEED = "GMC_SEED"

DEFAULT_SEED = 0
DEFAULT_BUDGET = 10000
DEFAULT_ORACLE_BOUND = 8
DEFAULT_SEARCH_BUDGET = 200000
DEFAULT_ENUMERATION_LABELS = 3
DEFAULT_ENUMERATION_LIMIT = 100000


class Settings(object):
    """Create a Settings object.

    @param seed: The seed for sampled checks. If None the environment variable
        GMC_SEED is consulted, then L{DEFAULT_SEED} is used.
    @param budget: The number of sampled triples for checks on infinite PCMs.
    @param oracle_bound: The longest slice list the brute-force equality
        oracle accepts.
    @param search_budget: The number of states a breadth-first search may
        visit before giving up.
    @param enumeration_labels: The largest hom-set size for which candidate
        functors are enumerated.
    """

    def __init__(self, seed=None, budget=None, oracle_bound=None,
                 search_budget=None, enumeration_labels=None,
                 enumeration_limit=None):
        if seed is None:
            seed = os.environ.get(ENV_SEED)
            if seed is not None:
                try:
                    seed = int(seed)
                except ValueError:
                    raise ValueError("%s must be an integer, got %r" % (
                        ENV_SEED, seed))
        if seed is None:
            seed = DEFAULT_SEED
        self.seed = int(seed)
        self.budget = budget if budget is not None else DEFAULT_BUDGET
        if self.budget < 0:
            raise ValueError("The budget cannot be negative")
        if oracle_bound is None:
            oracle_bound = DEFAULT_ORACLE_BOUND
        self.oracle_bound = oracle_bound
        if search_budget is None:
            search_budget = DEFAULT_SEARCH_BUDGET
        self.search_budget = search_budget
        if enumeration_labels is None:
            enumeration_labels = DEFAULT_ENUMERATION_LABELS
        self.enumeration_labels = enumeration_labels
        if enumeration_limit is None:
            enumeration_limit = DEFAULT_ENUMERATION_LIMIT
        self.enumeration_limit = enumeration_limit

    def random(self, salt=""):
        """Return a L{random.Random} seeded from the seed and C{salt}."""
        return random.Random("%d:%s" % (self.seed, salt))

    def __repr__(self):
        return "<Settings seed=%d budget=%d>" % (self.seed, self.budget)
