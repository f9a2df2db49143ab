"""Seeded stochastic simulation of the slotted updating system.

Each run realizes the sampled age process v_i(t): the base station schedules
one user per slot (and one sub-carrier under diversity), the adversary blocks
per its plan, and a user's age resets to 1 on delivery or grows by 1
otherwise.  Runs are reproducible: run k of a batch draws from two
generator streams (base station and adversary) seeded by a splitmix64 hash of
(master_seed, k), so any execution order or degree of parallelism yields the
same result.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, InsufficientRunsError
from .model import (
    BlockingPlan,
    SchedulingPolicy,
    SubcarrierPolicy,
    SystemConfig,
    blocking_feasible,
)

_MASK64 = (1 << 64) - 1
_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
_MIX_1 = 0xBF58476D1CE4E5B9
_MIX_2 = 0x94D049BB133111EB


def mix_seed(master_seed: int, position: int) -> int:
    """splitmix64 output at `position` steps past master_seed.

    Stateless counter scheme: callers may evaluate positions in any order.
    """
    z = (master_seed + (position + 1) * _SPLITMIX_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX_1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_2) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


@dataclass(frozen=True)
class SimResult:
    """Monte Carlo estimate of the system-average age.

    std_error is the sample standard deviation of per-run system averages
    divided by sqrt(runs); per_user_mean holds each user's average over runs
    of its time-average age.
    """

    mean_system_age: float
    per_user_mean: np.ndarray
    std_error: float
    runs: int
    seed: int


# ===========================================================================
#  Single run
# ===========================================================================


def _check_inputs(policy, subpolicy, plan, config):
    if subpolicy is None:
        if plan.channels != policy.n:
            raise DimensionMismatchError(
                f"plan has {plan.channels} rows, policy has {policy.n} users")
    elif plan.channels != subpolicy.n:
        raise DimensionMismatchError(
            f"plan has {plan.channels} rows, {subpolicy.n} sub-carriers given")
    if not blocking_feasible(plan, config):
        raise ValueError("blocking plan exceeds the adversary's budget")


def _sample_categories(probs: np.ndarray, uniforms: np.ndarray) -> np.ndarray:
    return np.searchsorted(np.cumsum(probs), uniforms, side="right")


def _blocked_channels(plan: BlockingPlan, horizon: int, adv_rng) -> np.ndarray:
    """Per-slot blocked channel index, -1 for idle slots."""
    m = plan.block_prob
    if plan.mode == "deterministic":
        hit = m.argmax(axis=0)
        return np.where(m[hit, np.arange(horizon)] == 1.0, hit, -1)
    # residual mass above the column sum means "block nothing this slot"
    cum = np.cumsum(m, axis=0)
    draws = adv_rng.random(horizon)
    idx = (draws[None, :] >= cum).sum(axis=0)
    return np.where(idx < m.shape[0], idx, -1)


def simulate_run(policy: SchedulingPolicy, subpolicy, plan: BlockingPlan,
                 config: SystemConfig, seed: int) -> np.ndarray:
    """One realization of the sampled ages, shape (N, T) of integers.

    Pass subpolicy=None for the no-diversity model.  Base-station and
    adversary randomness come from independent streams derived from `seed`,
    so the adversary's draws never depend on the realized schedule.
    """
    _check_inputs(policy, subpolicy, plan, config)
    horizon = config.horizon_T
    bs_rng = np.random.default_rng(mix_seed(seed, 0))

    scheduled = _sample_categories(policy.probs, bs_rng.random(horizon))
    if subpolicy is None:
        used_channel = scheduled
    else:
        used_channel = _sample_categories(subpolicy.probs, bs_rng.random(horizon))

    if plan.total_blocked() == 0.0:
        delivered_ok = np.ones(horizon, dtype=bool)
    else:
        adv_rng = (np.random.default_rng(mix_seed(seed, 1))
                   if plan.mode == "randomized" else None)
        blocked = _blocked_channels(plan, horizon, adv_rng)
        delivered_ok = used_channel != blocked

    slots = np.arange(1, horizon + 1)
    ages = np.empty((policy.n, horizon), dtype=np.int64)
    for i in range(policy.n):
        hits = (scheduled == i) & delivered_ok
        last = np.maximum.accumulate(np.where(hits, slots, 0))
        ages[i] = np.where(last > 0, slots - last + 1, slots)
    return ages


# ===========================================================================
#  Batch estimation
# ===========================================================================


def estimate_average_age(policy: SchedulingPolicy, subpolicy, plan: BlockingPlan,
                         config: SystemConfig, runs: int,
                         master_seed: int) -> SimResult:
    """Average the system age over `runs` independent simulate_run calls.

    Run k is seeded with mix_seed(master_seed, k).  Aggregation uses exact
    compensated sums, so the estimate is independent of run order.
    """
    if runs < 2:
        raise InsufficientRunsError(
            f"runs = {runs}; need >= 2 for a standard error")
    _check_inputs(policy, subpolicy, plan, config)

    per_run_user = np.empty((runs, policy.n))
    for k in range(runs):
        ages = simulate_run(policy, subpolicy, plan, config,
                            mix_seed(master_seed, k))
        per_run_user[k] = ages.mean(axis=1)

    per_user_mean = np.array(
        [math.fsum(per_run_user[:, i]) / runs for i in range(policy.n)])
    per_user_mean.setflags(write=False)
    system_per_run = per_run_user.mean(axis=1)
    mean_system = math.fsum(system_per_run) / runs
    centered = system_per_run - mean_system
    sample_var = math.fsum(centered * centered) / (runs - 1)
    return SimResult(
        mean_system_age=mean_system,
        per_user_mean=per_user_mean,
        std_error=math.sqrt(sample_var / runs),
        runs=runs,
        seed=master_seed,
    )
