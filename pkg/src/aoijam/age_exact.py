"""Exact expected-age trajectories at finite horizon.

Each user's expected age follows the linear recursion

    age(t+1) = age(t) * (1 - delivery_prob(t)) + 1,    age(1) = 1,

where delivery_prob(t) is the probability the user receives an update in slot
t: its scheduling probability when the channel is clear, damped by the
blocking probability otherwise.  The equivalent sum form (a sum of survival
products over all possible last-delivery slots) is quadratic in T and kept
only as a cross-check; all public operations run in O(N*T).
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    InvalidRangeError,
    NonPositiveProbabilityError,
)
from .model import (
    BlockingPlan,
    SchedulingPolicy,
    SubcarrierPolicy,
    SystemConfig,
    blocking_feasible,
)

# ===========================================================================
#  Result container
# ===========================================================================


@dataclass(frozen=True)
class AgeSeries:
    """Expected-age trajectories, entry (i, t-1) being user i's age at slot t.

    per_user_avg[i] is the time average of row i; system_avg averages those
    over users.  Ages satisfy 1 <= age(t) <= t, with age(1) = 1 always.
    """

    per_user: np.ndarray  # shape (N, T)
    per_user_avg: np.ndarray  # shape (N,)
    system_avg: float

    @property
    def num_users(self) -> int:
        return self.per_user.shape[0]

    @property
    def horizon(self) -> int:
        return self.per_user.shape[1]


def _make_series(per_user: np.ndarray) -> AgeSeries:
    per_user = np.asarray(per_user, dtype=float)
    t_grid = np.arange(1, per_user.shape[1] + 1)
    assert np.all(per_user >= 1.0 - 1e-9) and np.all(
        per_user <= t_grid + 1e-9), "age outside [1, t]"
    per_user.setflags(write=False)
    per_user_avg = per_user.mean(axis=1)
    per_user_avg.setflags(write=False)
    return AgeSeries(per_user, per_user_avg, float(per_user_avg.mean()))


# ===========================================================================
#  Survival products (sum-form building block)
# ===========================================================================


def survival_product(p_i: float, blocked, k: int, l: int) -> float:
    """Probability user i misses every update in slots k..l (1-based, inclusive).

    `blocked` holds per-slot blocking probabilities for this user's channel
    (1 = surely blocked, so the slot contributes factor 1; 0 = clear, factor
    1 - p_i; fractions interpolate).
    """
    if p_i <= 0.0:
        raise NonPositiveProbabilityError(f"p_i = {p_i} must be > 0")
    r = np.asarray(blocked, dtype=float).ravel()
    if not 1 <= k <= l <= r.size:
        raise InvalidRangeError(
            f"slot range [{k}, {l}] invalid for horizon {r.size}")
    factors = 1.0 - p_i * (1.0 - r[k - 1:l])
    return float(np.prod(factors))


# ===========================================================================
#  Trajectories
# ===========================================================================


def _recurse_ages(delivery_prob: np.ndarray) -> np.ndarray:
    """Run age(t+1) = age(t)*(1 - s(t)) + 1 per row of an (N, T) matrix."""
    n, horizon = delivery_prob.shape
    out = np.empty((n, horizon))
    surv = 1.0 - delivery_prob
    for i in range(n):
        row_s = surv[i].tolist()  # scalar loop: ~100x faster than per-slot numpy
        row_out = out[i]
        age = 1.0
        row_out[0] = age
        for t in range(1, horizon):
            age = age * row_s[t - 1] + 1.0
            row_out[t] = age
    return out


def expected_age_trajectory(
        policy: SchedulingPolicy, plan: BlockingPlan,
        config: SystemConfig) -> AgeSeries:
    """Exact per-user expected ages when each user owns one channel.

    Plan rows index users; randomized plans are allowed, with per-slot
    delivery probability p_i * (1 - block_prob[i, t]).
    """
    if plan.channels != policy.n:
        raise DimensionMismatchError(
            f"plan has {plan.channels} rows, policy has {policy.n} users")
    if not blocking_feasible(plan, config):
        raise ValueError("blocking plan exceeds the adversary's budget")
    delivery = policy.probs[:, None] * (1.0 - plan.block_prob)
    return _make_series(_recurse_ages(delivery))


def expected_age_trajectory_diversity(
        policy: SchedulingPolicy, subpolicy: SubcarrierPolicy,
        plan: BlockingPlan, config: SystemConfig) -> AgeSeries:
    """Exact ages when updates ride a sub-carrier drawn from `subpolicy`.

    Delivery probability for user i in slot t is
    p_i * sum_j q_j * (1 - block_prob[j, t]): the scheduled user receives the
    update unless the drawn sub-carrier is blocked.  When every sub-carrier is
    blocked with the same probability the q-dependence cancels.
    """
    if plan.channels != subpolicy.n:
        raise DimensionMismatchError(
            f"plan has {plan.channels} rows, {subpolicy.n} sub-carriers given")
    if not blocking_feasible(plan, config):
        raise ValueError("blocking plan exceeds the adversary's budget")
    intercepted = subpolicy.probs @ plan.block_prob  # per-slot hit probability
    delivery = policy.probs[:, None] * (1.0 - intercepted)[None, :]
    return _make_series(_recurse_ages(delivery))
