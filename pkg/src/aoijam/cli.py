"""Command-line front end.

A scenario lives in a single JSON document (versioned via schema_version)
naming the model, the system numbers, both players' strategies, and the
experiment to run.  Subcommands select the experiment; a small flag set
(--config, --out-dir, --seed-override, --quiet) wraps the file.  Results go
to stdout as a short human summary and to the output directory as CSV with
fixed schemas:

    trajectories.csv  user, slot, expected_age
    sim.csv           runs, mean, std_error, seed
    equilibrium.csv   kind, holds, payoff, witness-serialized
    dynamics.csv      iteration, blocked_user, p_vector, payoff

Exit codes: 0 success, 2 scenario parse/validation failure, 3 runtime error.
"""

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .age_asymptotic import (
    blocked_user_age,
    diversity_system_age,
    reduced_objective,
    system_age_no_diversity,
    unblocked_user_age,
)
from .age_exact import (
    expected_age_trajectory,
    expected_age_trajectory_diversity,
)
from .best_response import (
    adversary_best_response,
    adversary_oracle,
    bs_best_response_single_block,
    numeric_simplex_minimizer,
)
from .montecarlo import estimate_average_age
from .equilibrium import (
    DeviationWitness,
    best_response_dynamics,
    diversity_nash_point,
    is_nash_no_diversity,
    stackelberg_equilibrium,
    verify_diversity_nash,
)
from .errors import (
    AoijamError,
    ScenarioParseError,
    ScenarioValidationError,
)
from .model import (
    BlockingPlan,
    SchedulingPolicy,
    SubcarrierPolicy,
    SystemConfig,
    blocking_feasible,
    empty_plan,
    make_middle_block,
    make_uniform_subcarrier_block,
    uniform_policy,
    uniform_subcarrier_policy,
    validate_policy,
    validate_subcarrier_policy,
)

SCHEMA_VERSION = 1
OUT_DIR_ENV = "AOIJAM_OUT_DIR"

POLICY_SOURCES = ("uniform", "explicit", "counter-block")
PLAN_SOURCES = ("none", "middle-block", "uniform-subcarrier", "explicit",
                "oracle")
EXPERIMENTS = ("exact", "asymptotic", "montecarlo", "best-response", "oracle",
               "br-dynamics", "stackelberg", "nash-verify")
# subcommand name -> experiment name (identity except for `simulate`)
SUBCOMMANDS = {name: name for name in EXPERIMENTS if name != "montecarlo"}
SUBCOMMANDS["simulate"] = "montecarlo"


@dataclass(frozen=True)
class ScenarioConfig:
    """A parsed, validated scenario: everything an experiment needs."""

    model: str  # "no-diversity" | "diversity"
    system: SystemConfig
    policy_spec: dict
    subpolicy_spec: dict | None
    plan_spec: dict
    experiment: dict


# ===========================================================================
#  Parsing and validation
# ===========================================================================


def _fail(field: str, problem: str):
    raise ScenarioValidationError(f"field {field!r}: {problem}")


def _require_int(obj, field, minimum=None):
    value = obj.get(field.split(".")[-1])
    if not isinstance(value, int) or isinstance(value, bool):
        _fail(field, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        _fail(field, f"must be >= {minimum}, got {value}")
    return value


def _require_number(obj, field):
    value = obj.get(field.split(".")[-1])
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        _fail(field, f"expected a number, got {value!r}")
    return float(value)


def scenario_from_dict(raw: dict) -> ScenarioConfig:
    """Validate a decoded JSON document into a ScenarioConfig."""
    if not isinstance(raw, dict):
        raise ScenarioValidationError("top level must be a JSON object")
    version = raw.get("schema_version")
    if version != SCHEMA_VERSION:
        _fail("schema_version", f"must be {SCHEMA_VERSION}, got {version!r}")

    model = raw.get("model", "no-diversity")
    if model not in ("no-diversity", "diversity"):
        _fail("model", f"must be 'no-diversity' or 'diversity', got {model!r}")

    system_raw = raw.get("system")
    if not isinstance(system_raw, dict):
        _fail("system", "required object is missing")
    horizon = _require_int(system_raw, "system.horizon_T", minimum=1)
    users = _require_int(system_raw, "system.num_users", minimum=1)
    alpha = _require_number(system_raw, "system.alpha")
    if not 0.0 < alpha < 1.0:
        _fail("system.alpha", f"must lie in (0, 1), got {alpha}")
    nsub = system_raw.get("num_subcarriers", 1)
    if not isinstance(nsub, int) or nsub < 1:
        _fail("system.num_subcarriers", f"must be a positive integer, got {nsub!r}")
    if model == "diversity" and nsub < 2:
        _fail("system.num_subcarriers", "diversity model needs >= 2")
    if model == "no-diversity" and nsub != 1:
        _fail("system.num_subcarriers", "no-diversity model needs exactly 1")
    system = SystemConfig(horizon_T=horizon, num_users=users, alpha=alpha,
                          num_subcarriers=nsub)

    policy_spec = raw.get("policy", {"source": "uniform"})
    if not isinstance(policy_spec, dict):
        _fail("policy", "must be an object")
    source = policy_spec.get("source")
    if source not in POLICY_SOURCES:
        _fail("policy.source", f"must be one of {POLICY_SOURCES}, got {source!r}")
    if source == "explicit":
        probs = policy_spec.get("probs")
        if not isinstance(probs, list) or len(probs) != users:
            _fail("policy.probs", f"need a list of {users} numbers")
    if source == "counter-block":
        target = policy_spec.get("target", 0)
        if not isinstance(target, int) or not 0 <= target < users:
            _fail("policy.target", f"must index a user 0..{users - 1}")

    subpolicy_spec = raw.get("subcarrier_policy")
    if subpolicy_spec is not None:
        if model != "diversity":
            _fail("subcarrier_policy", "only valid in the diversity model")
        if not isinstance(subpolicy_spec, dict):
            _fail("subcarrier_policy", "must be an object")
        sub_source = subpolicy_spec.get("source")
        if sub_source not in ("uniform", "explicit"):
            _fail("subcarrier_policy.source",
                  f"must be 'uniform' or 'explicit', got {sub_source!r}")
        if sub_source == "explicit":
            probs = subpolicy_spec.get("probs")
            if not isinstance(probs, list) or len(probs) != nsub:
                _fail("subcarrier_policy.probs",
                      f"need a list of {nsub} numbers")
    elif model == "diversity":
        subpolicy_spec = {"source": "uniform"}

    plan_spec = raw.get("plan", {"source": "none"})
    if not isinstance(plan_spec, dict):
        _fail("plan", "must be an object")
    plan_source = plan_spec.get("source")
    if plan_source not in PLAN_SOURCES:
        _fail("plan.source", f"must be one of {PLAN_SOURCES}, got {plan_source!r}")
    if plan_source == "middle-block":
        target = plan_spec.get("target", 0)
        if not isinstance(target, int) or not 0 <= target < system.num_channels:
            _fail("plan.target",
                  f"must index a channel 0..{system.num_channels - 1}")
    if plan_source == "uniform-subcarrier" and model != "diversity":
        _fail("plan.source", "'uniform-subcarrier' needs the diversity model")
    if plan_source == "oracle" and model != "no-diversity":
        _fail("plan.source", "'oracle' needs the no-diversity model")
    if plan_source == "explicit":
        matrix = plan_spec.get("block_prob")
        if not isinstance(matrix, list):
            _fail("plan.block_prob", "need a channels x T matrix")
        if plan_spec.get("mode", "deterministic") not in (
                "deterministic", "randomized"):
            _fail("plan.mode", "must be 'deterministic' or 'randomized'")

    experiment = raw.get("experiment")
    if experiment is not None:
        experiment = _validate_experiment(experiment, system)

    return ScenarioConfig(model=model, system=system, policy_spec=policy_spec,
                          subpolicy_spec=subpolicy_spec, plan_spec=plan_spec,
                          experiment=experiment)


def _validate_experiment(exp, system: SystemConfig) -> dict:
    if not isinstance(exp, dict):
        _fail("experiment", "must be an object")
    name = exp.get("name")
    if name not in EXPERIMENTS:
        _fail("experiment.name", f"must be one of {EXPERIMENTS}, got {name!r}")
    out = {"name": name}
    if name == "montecarlo":
        out["runs"] = _require_int(exp, "experiment.runs", minimum=2)
        seed = exp.get("seed", 0)
        if not isinstance(seed, int):
            _fail("experiment.seed", f"expected an integer, got {seed!r}")
        out["seed"] = seed
    elif name == "br-dynamics":
        iters = exp.get("iterations", 20)
        if not isinstance(iters, int) or iters < 2:
            _fail("experiment.iterations", f"must be an integer >= 2, got {iters!r}")
        out["iterations"] = iters
    elif name == "stackelberg":
        target = exp.get("target", 0)
        if not isinstance(target, int) or not 0 <= target < system.num_users:
            _fail("experiment.target",
                  f"must index a user 0..{system.num_users - 1}")
        samples = exp.get("certify_samples", 200)
        if not isinstance(samples, int) or samples < 1:
            _fail("experiment.certify_samples", f"must be >= 1, got {samples!r}")
        out.update(target=target, certify_samples=samples,
                   seed=exp.get("seed", 0))
    elif name == "nash-verify":
        for key in ("bs_samples", "adv_samples"):
            value = exp.get(key, 500)
            if not isinstance(value, int) or value < 0:
                _fail(f"experiment.{key}", f"must be >= 0, got {value!r}")
            out[key] = value
        out["seed"] = exp.get("seed", 0)
    return out


def parse_scenario(path: str) -> ScenarioConfig:
    """Read and validate a scenario file; errors carry line/field context."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ScenarioParseError(f"cannot read {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from exc
    return scenario_from_dict(raw)


def scenario_to_dict(sc: ScenarioConfig) -> dict:
    """Inverse of scenario_from_dict (round-trips to an equivalent scenario)."""
    out = {
        "schema_version": SCHEMA_VERSION,
        "model": sc.model,
        "system": {
            "horizon_T": sc.system.horizon_T,
            "num_users": sc.system.num_users,
            "alpha": sc.system.alpha,
            "num_subcarriers": sc.system.num_subcarriers,
        },
        "policy": dict(sc.policy_spec),
        "plan": dict(sc.plan_spec),
    }
    if sc.subpolicy_spec is not None:
        out["subcarrier_policy"] = dict(sc.subpolicy_spec)
    if sc.experiment is not None:
        out["experiment"] = dict(sc.experiment)
    return out


# ===========================================================================
#  Strategy resolution
# ===========================================================================


def resolve_policy(sc: ScenarioConfig) -> SchedulingPolicy:
    spec = sc.policy_spec
    if spec["source"] == "uniform":
        return uniform_policy(sc.system.num_users)
    if spec["source"] == "explicit":
        return validate_policy(spec["probs"])
    # counter-block: closed-form best response permuted onto the target
    target = spec.get("target", 0)
    base = bs_best_response_single_block(sc.system.num_users, sc.system.alpha)
    probs = np.empty(sc.system.num_users)
    probs[target] = base.probs[0]
    probs[np.arange(sc.system.num_users) != target] = base.probs[1:]
    return validate_policy(probs)


def resolve_subpolicy(sc: ScenarioConfig) -> SubcarrierPolicy | None:
    if sc.subpolicy_spec is None:
        return None
    if sc.subpolicy_spec["source"] == "uniform":
        return uniform_subcarrier_policy(sc.system.num_subcarriers)
    return validate_subcarrier_policy(sc.subpolicy_spec["probs"])


def resolve_plan(sc: ScenarioConfig, policy: SchedulingPolicy) -> BlockingPlan:
    spec = sc.plan_spec
    source = spec["source"]
    if source == "none":
        return empty_plan(sc.system)
    if source == "middle-block":
        return make_middle_block(sc.system, spec.get("target", 0))
    if source == "uniform-subcarrier":
        return make_uniform_subcarrier_block(sc.system)
    if source == "oracle":
        return adversary_oracle(policy, sc.system).plan
    plan = BlockingPlan(spec.get("mode", "deterministic"),
                        np.asarray(spec["block_prob"], dtype=float))
    if not blocking_feasible(plan, sc.system):
        raise ScenarioValidationError(
            "field 'plan.block_prob': plan exceeds the blocking budget")
    return plan


# ===========================================================================
#  Serialization helpers
# ===========================================================================


def _fmt(x) -> str:
    return repr(float(x))


def _vec(values) -> str:
    return "[" + ";".join(_fmt(v) for v in values) + "]"


def serialize_strategy(obj) -> str:
    """Compact single-cell text form of a policy, plan, or witness."""
    if obj is None:
        return ""
    if isinstance(obj, SchedulingPolicy):
        return "p=" + _vec(obj.probs)
    if isinstance(obj, SubcarrierPolicy):
        return "q=" + _vec(obj.probs)
    if isinstance(obj, BlockingPlan):
        cells = [f"{r}:{t}={_fmt(v)}"
                 for (r, t), v in np.ndenumerate(obj.block_prob) if v != 0.0]
        return f"plan[{obj.mode}]{{{'|'.join(cells)}}}"
    if isinstance(obj, tuple):
        return "&".join(serialize_strategy(o) for o in obj)
    if isinstance(obj, DeviationWitness):
        return (f"{obj.player}: {obj.description}; "
                f"payoff {_fmt(obj.payoff_before)}->{_fmt(obj.payoff_after)}; "
                f"{serialize_strategy(obj.strategy)}")
    return str(obj)


def _write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def write_trajectories_csv(path, series):
    rows = [(user, slot + 1, _fmt(series.per_user[user, slot]))
            for user in range(series.num_users)
            for slot in range(series.horizon)]
    _write_csv(path, ("user", "slot", "expected_age"), rows)


def write_sim_csv(path, result):
    _write_csv(path, ("runs", "mean", "std_error", "seed"),
               [(result.runs, _fmt(result.mean_system_age),
                 _fmt(result.std_error), result.seed)])


def write_equilibrium_csv(path, rows):
    """rows: iterable of (kind, holds-or-None, payoff, witness-text)."""
    out = []
    for kind, holds, payoff, witness in rows:
        holds_txt = "" if holds is None else str(bool(holds)).lower()
        out.append((kind, holds_txt, _fmt(payoff), witness))
    _write_csv(path, ("kind", "holds", "payoff", "witness-serialized"), out)


def write_dynamics_csv(path, trace):
    rows = [(s.iteration, s.blocked_user, _vec(s.policy.probs), _fmt(s.payoff))
            for s in trace]
    _write_csv(path, ("iteration", "blocked_user", "p_vector", "payoff"), rows)


# ===========================================================================
#  Experiments
# ===========================================================================


def _exact_series(sc, policy, subpolicy, plan):
    if sc.model == "diversity":
        return expected_age_trajectory_diversity(
            policy, subpolicy, plan, sc.system)
    return expected_age_trajectory(policy, plan, sc.system)


def _run_exact(sc, out_dir, emit):
    policy = resolve_policy(sc)
    plan = resolve_plan(sc, policy)
    series = _exact_series(sc, policy, resolve_subpolicy(sc), plan)
    write_trajectories_csv(os.path.join(out_dir, "trajectories.csv"), series)
    emit(f"exact system average age: {series.system_avg:.6f}")
    for i, avg in enumerate(series.per_user_avg):
        emit(f"  user {i}: time-average age {avg:.6f}")


def _run_asymptotic(sc, out_dir, emit):
    policy = resolve_policy(sc)
    system = sc.system
    if sc.model == "diversity":
        value = diversity_system_age(policy, system.alpha,
                                     system.num_subcarriers)
        per_user = [(1 - system.alpha) / p
                    + system.alpha / (p * (1 - 1 / system.num_subcarriers))
                    for p in policy.probs]
        emit(f"asymptotic diversity system age: {value:.6f}")
    else:
        source = sc.plan_spec["source"]
        if source == "none":
            per_user = [unblocked_user_age(p) for p in policy.probs]
            value = float(np.mean(per_user))
            emit(f"asymptotic system age (no blocking): {value:.6f}")
        elif source == "middle-block":
            target = sc.plan_spec.get("target", 0)
            value = system_age_no_diversity(
                policy, target, system.alpha, system.horizon_T)
            reduced = reduced_objective(
                policy, target, system.alpha, system.horizon_T)
            per_user = [unblocked_user_age(p) for p in policy.probs]
            per_user[target] = blocked_user_age(
                policy.probs[target], system.alpha, system.horizon_T)
            emit(f"asymptotic system age (user {target} blocked): {value:.6f}")
            emit(f"reduced payoff: {reduced.value:.6f}")
        else:
            raise ScenarioValidationError(
                "field 'plan.source': asymptotic formulas cover 'none' and "
                f"'middle-block' plans, not {source!r}")
    rows = [(i, _fmt(v)) for i, v in enumerate(per_user)]
    _write_csv(os.path.join(out_dir, "asymptotic.csv"),
               ("user", "asymptotic_age"), rows)


def _run_montecarlo(sc, out_dir, emit, seed_override):
    policy = resolve_policy(sc)
    plan = resolve_plan(sc, policy)
    exp = sc.experiment
    seed = seed_override if seed_override is not None else exp["seed"]
    sim = estimate_average_age(policy, resolve_subpolicy(sc), plan, sc.system,
                               exp["runs"], seed)
    write_sim_csv(os.path.join(out_dir, "sim.csv"), sim)
    emit(f"simulated mean system age: {sim.mean_system_age:.6f} "
         f"(std error {sim.std_error:.2e}, {sim.runs} runs, seed {sim.seed})")


def _run_best_response(sc, out_dir, emit):
    policy = resolve_policy(sc)
    rows = []
    adv = adversary_best_response(policy, sc.system)
    rows.append(("adversary-best-response", None, adv.payoff,
                 f"target={adv.target}; " + serialize_strategy(adv.plan)))
    emit(f"adversary best response: middle-block user {adv.target}, "
         f"reduced payoff {adv.payoff:.6f}")
    plan = resolve_plan(sc, policy)
    weights = 1.0 + plan.block_prob.sum(axis=1) / sc.system.horizon_T
    bs = numeric_simplex_minimizer(weights)
    bs_payoff = float(np.sum(weights / bs.probs))
    rows.append(("bs-best-response", None, bs_payoff, serialize_strategy(bs)))
    emit(f"base-station best response to the plan: {np.array2string(bs.probs, precision=6)}")
    write_equilibrium_csv(os.path.join(out_dir, "equilibrium.csv"), rows)


def _run_oracle(sc, out_dir, emit):
    policy = resolve_policy(sc)
    oracle = adversary_oracle(policy, sc.system)
    structured = adversary_best_response(policy, sc.system)
    structured_exact = expected_age_trajectory(
        policy, structured.plan, sc.system).system_avg
    gap = oracle.payoff - structured_exact
    rows = [
        ("oracle-max", None, oracle.payoff, serialize_strategy(oracle.plan)),
        ("structured-exact", None, structured_exact,
         f"target={structured.target}; gap={_fmt(gap)}"),
    ]
    write_equilibrium_csv(os.path.join(out_dir, "equilibrium.csv"), rows)
    emit(f"oracle max exact age: {oracle.payoff:.9f} "
         f"({len(oracle.tied_plans)} tied maximizer(s))")
    emit(f"structured middle-block exact age: {structured_exact:.9f}")
    emit(f"gap (oracle - structured): {gap:.3e}")


def _run_br_dynamics(sc, out_dir, emit):
    exp = sc.experiment
    report = best_response_dynamics(
        sc.system.num_users, sc.system.alpha, sc.system.horizon_T,
        exp["iterations"])
    write_dynamics_csv(os.path.join(out_dir, "dynamics.csv"), report.trace)
    targets = [s.blocked_user for s in report.trace]
    emit(f"blocked-user sequence: {targets}")
    emit("simultaneous fixed point reached: "
         + ("yes" if report.holds else "no"))


def _run_stackelberg(sc, out_dir, emit, seed_override):
    exp = sc.experiment or {"name": "stackelberg", "target": 0,
                            "certify_samples": 200, "seed": 0}
    seed = seed_override if seed_override is not None else exp["seed"]
    leader, plan, payoff = stackelberg_equilibrium(
        sc.system.num_users, sc.system.alpha, sc.system.horizon_T,
        target=exp["target"], certify_samples=exp["certify_samples"],
        seed=seed)
    write_equilibrium_csv(
        os.path.join(out_dir, "equilibrium.csv"),
        [("stackelberg", None, payoff,
          serialize_strategy(leader) + "&" + serialize_strategy(plan))])
    emit(f"leader policy: {np.array2string(leader.probs, precision=6)}")
    emit(f"leader reduced payoff: {payoff:.6f}")


def _run_nash_verify(sc, out_dir, emit, seed_override):
    policy = resolve_policy(sc)
    plan = resolve_plan(sc, policy)
    exp = sc.experiment
    if sc.model == "diversity":
        seed = seed_override if seed_override is not None else exp["seed"]
        report = verify_diversity_nash(
            (policy, resolve_subpolicy(sc), plan), sc.system,
            exp["bs_samples"], exp["adv_samples"], seed=seed)
    else:
        report = is_nash_no_diversity(policy, plan, sc.system)
    write_equilibrium_csv(
        os.path.join(out_dir, "equilibrium.csv"),
        [(report.kind, report.holds, report.payoff,
          serialize_strategy(report.witness))])
    emit(f"equilibrium check ({report.kind}): "
         + ("holds" if report.holds else "fails"))
    if report.witness is not None:
        emit("witness: " + serialize_strategy(report.witness))


# ===========================================================================
#  Orchestration
# ===========================================================================


_DEFAULT_EXPERIMENTS = {
    "exact": {"name": "exact"},
    "asymptotic": {"name": "asymptotic"},
    "montecarlo": {"name": "montecarlo", "runs": 1000, "seed": 0},
    "best-response": {"name": "best-response"},
    "oracle": {"name": "oracle"},
    "br-dynamics": {"name": "br-dynamics", "iterations": 20},
    "stackelberg": {"name": "stackelberg", "target": 0,
                    "certify_samples": 200, "seed": 0},
    "nash-verify": {"name": "nash-verify", "bs_samples": 500,
                    "adv_samples": 500, "seed": 0},
}


def run_scenario(path: str, out_dir: str | None = None,
                 seed_override: int | None = None, quiet: bool = False,
                 experiment: str | None = None) -> int:
    """Execute a scenario file; returns the process exit code.

    `experiment` (from the subcommand) must agree with the file's experiment
    name when both are present; either alone suffices.
    """
    def emit(line):
        if not quiet:
            print(line)

    try:
        sc = parse_scenario(path)
        name = sc.experiment["name"] if sc.experiment else None
        if experiment is not None and name is not None and experiment != name:
            raise ScenarioValidationError(
                f"field 'experiment.name': file says {name!r} but the "
                f"subcommand runs {experiment!r}")
        if name is None:
            if experiment is None:
                raise ScenarioValidationError(
                    "field 'experiment.name': missing (no subcommand context)")
            sc = ScenarioConfig(
                model=sc.model, system=sc.system, policy_spec=sc.policy_spec,
                subpolicy_spec=sc.subpolicy_spec, plan_spec=sc.plan_spec,
                experiment=dict(_DEFAULT_EXPERIMENTS[experiment]))
        name = sc.experiment["name"]
        if name in ("best-response", "oracle", "br-dynamics", "stackelberg") \
                and sc.model != "no-diversity":
            raise ScenarioValidationError(
                f"field 'experiment.name': {name!r} needs the no-diversity model")
    except (ScenarioParseError, ScenarioValidationError) as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return 2

    if out_dir is None:
        out_dir = os.environ.get(OUT_DIR_ENV, ".")
    try:
        os.makedirs(out_dir, exist_ok=True)
        with open(os.path.join(out_dir, "scenario.json"), "w",
                  encoding="utf-8") as fh:
            json.dump(scenario_to_dict(sc), fh, indent=2, sort_keys=True)
            fh.write("\n")
        if name == "exact":
            _run_exact(sc, out_dir, emit)
        elif name == "asymptotic":
            _run_asymptotic(sc, out_dir, emit)
        elif name == "montecarlo":
            _run_montecarlo(sc, out_dir, emit, seed_override)
        elif name == "best-response":
            _run_best_response(sc, out_dir, emit)
        elif name == "oracle":
            _run_oracle(sc, out_dir, emit)
        elif name == "br-dynamics":
            _run_br_dynamics(sc, out_dir, emit)
        elif name == "stackelberg":
            _run_stackelberg(sc, out_dir, emit, seed_override)
        else:
            _run_nash_verify(sc, out_dir, emit, seed_override)
    except ScenarioValidationError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return 2
    except (AoijamError, OSError, ValueError) as exc:
        print(f"runtime error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="aoijam",
        description="Age-of-information scheduling under an adversarial "
                    "jammer: exact/asymptotic ages, simulation, best "
                    "responses, and equilibrium analysis.")
    sub = parser.add_subparsers(dest="command", required=True)
    for command in ("exact", "asymptotic", "simulate", "best-response",
                    "oracle", "br-dynamics", "stackelberg", "nash-verify"):
        p = sub.add_parser(command)
        p.add_argument("--config", required=True,
                       help="path to the scenario JSON file")
        p.add_argument("--out-dir", default=None,
                       help=f"output directory (default: ${OUT_DIR_ENV} or .)")
        p.add_argument("--seed-override", type=int, default=None,
                       help="replace the experiment's random seed")
        p.add_argument("--quiet", action="store_true",
                       help="suppress the stdout summary")
    args = parser.parse_args(argv)
    return run_scenario(args.config, out_dir=args.out_dir,
                        seed_override=args.seed_override, quiet=args.quiet,
                        experiment=SUBCOMMANDS[args.command])


if __name__ == "__main__":
    sys.exit(main())
