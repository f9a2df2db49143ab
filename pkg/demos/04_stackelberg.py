"""Commitment restores a solution: the leader-follower version.

With no simultaneous equilibrium, let the base station commit first and
the jammer respond with full knowledge. The best commitment treats the
jammer's aim as whatever hurts most, which flattens any advantage from
skewing the schedule: the uniform policy is optimal. A solver that works
under an ordering constraint on the probabilities lands on the same
answer, and random rivals certify it numerically.
"""

import numpy as np

from aoijam import (
    follower_aware_payoff,
    ordered_kkt_solver,
    stackelberg_equilibrium,
    uniform_policy,
    validate_policy,
)

N, ALPHA, T = 3, 0.4, 5000

leader, plan, payoff = stackelberg_equilibrium(N, ALPHA, T)
print(f"N={N}, alpha={ALPHA}, T={T}")
print(f"leader commitment: {np.round(leader.probs, 6)}")
print(f"guaranteed payoff (jammer replies optimally): {payoff:.4f}\n")

# The follower-aware payoff prices a policy by the jammer's best reply to
# it. Tilting the schedule always costs the leader.
rivals = {
    "uniform": uniform_policy(N),
    "mild tilt": validate_policy([0.4, 0.35, 0.25]),
    "strong tilt": validate_policy([0.6, 0.25, 0.15]),
    "one favourite": validate_policy([0.8, 0.1, 0.1]),
}
print(f"{'policy':>14} {'worst-case payoff':>18}")
for name, rival in rivals.items():
    value = follower_aware_payoff(rival, ALPHA, T)
    marker = "  <- leader" if name == "uniform" else ""
    print(f"{name:>14} {value:>18.4f}{marker}")

# Independent route: minimize under the constraint that probabilities be
# non-increasing. The constraint is inactive at the optimum, so the
# solver must reproduce the uniform point.
ordered = ordered_kkt_solver(N, ALPHA)
print(f"\norder-constrained solver: {np.round(ordered.probs, 10)}")
print(f"max deviation from uniform: "
      f"{np.abs(ordered.probs - 1 / N).max():.2e}")
