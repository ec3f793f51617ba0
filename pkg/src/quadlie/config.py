"""Run configuration: seeds, Monte Carlo budgets, solver caps, output mode.

Resolution order is defaults < QUADLIE_* environment variables < CLI flags;
the effective configuration is echoed into every report so results can be
reproduced byte for byte.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .forms import DecisionPolicy

ENV_FIELDS = {
    "QUADLIE_SEED": "seed",
    "QUADLIE_MC_TRIALS": "mc_trials",
    "QUADLIE_MC_RANGE": "mc_range",
    "QUADLIE_SYMBOLIC_MAX_DIM": "symbolic_max_dim",
    "QUADLIE_SYMBOLIC_MAX_FORMSPACE": "symbolic_max_formspace_dim",
    "QUADLIE_SOLVER_DIM_CAP": "solver_dim_cap",
    "QUADLIE_THETA_BUDGET": "theta_budget",
}


@dataclass(frozen=True)
class RunConfig:
    seed: int = 12345
    mc_trials: int = 40
    mc_range: int = 65536
    symbolic_max_dim: int = 12
    symbolic_max_formspace_dim: int = 8
    solver_dim_cap: int = 64
    theta_budget: int = 512
    output: str = "text"
    timings: bool = False

    def __post_init__(self):
        for name in (
            "mc_trials",
            "mc_range",
            "symbolic_max_dim",
            "symbolic_max_formspace_dim",
            "solver_dim_cap",
            "theta_budget",
        ):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.output not in ("text", "json"):
            raise ValueError("output must be 'text' or 'json'")

    def policy(self) -> DecisionPolicy:
        return DecisionPolicy(
            seed=self.seed,
            mc_trials=self.mc_trials,
            mc_range=self.mc_range,
            symbolic_max_dim=self.symbolic_max_dim,
            symbolic_max_formspace_dim=self.symbolic_max_formspace_dim,
        )

    def echo(self) -> dict:
        return {
            "seed": self.seed,
            "mc_trials": self.mc_trials,
            "mc_range": self.mc_range,
            "symbolic_max_dim": self.symbolic_max_dim,
            "symbolic_max_formspace_dim": self.symbolic_max_formspace_dim,
            "solver_dim_cap": self.solver_dim_cap,
            "theta_budget": self.theta_budget,
        }

    @classmethod
    def from_environment(cls) -> "RunConfig":
        cfg = cls()
        updates = {}
        for env, field in ENV_FIELDS.items():
            raw = os.environ.get(env)
            if raw is not None:
                try:
                    updates[field] = int(raw)
                except ValueError as exc:
                    raise ValueError(f"{env} must be an integer, got {raw!r}") from exc
        return replace(cfg, **updates) if updates else cfg
