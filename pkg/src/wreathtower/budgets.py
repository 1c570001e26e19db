"""Resource budgets for exhaustive computations.

Everything that enumerates group elements, counts tuples, or builds an
explicit permutation action is gated by one of these limits.  Operations
fail loudly (``BudgetExceededError``) instead of truncating silently.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

_ENV_PREFIX = "WREATHTOWER_BUDGET_"


@dataclass(frozen=True)
class Budgets:
    # largest degree for which a permutation action is built explicitly
    max_degree: int = 100_000
    # largest group order for which elements are enumerated one by one
    # (conjugacy classes, normal-subgroup scans)
    max_elements: int = 10_000_000
    # counting loops: enumerated tuples plus closure products
    max_membership_tests: int = 100_000_000
    # integers with more decimal digits than this stay symbolic
    max_explicit_digits: int = 1_000_000

    def with_overrides(self, **kw) -> "Budgets":
        kw = {k: v for k, v in kw.items() if v is not None}
        return replace(self, **kw) if kw else self


def budgets_from_env(base: Budgets | None = None) -> Budgets:
    """Budgets with environment-variable fallbacks applied.

    Recognised variables: WREATHTOWER_BUDGET_DEGREE, _ELEMENTS, _MEMBERS,
    _DIGITS.  CLI flags override these in turn.
    """
    base = base or Budgets()
    names = {
        "DEGREE": "max_degree",
        "ELEMENTS": "max_elements",
        "MEMBERS": "max_membership_tests",
        "DIGITS": "max_explicit_digits",
    }
    overrides = {}
    for env_suffix, field_name in names.items():
        raw = os.environ.get(_ENV_PREFIX + env_suffix)
        if raw is not None:
            overrides[field_name] = int(raw)
    return base.with_overrides(**overrides)


DEFAULT_BUDGETS = Budgets()
