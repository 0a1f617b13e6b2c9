import logging
import math
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from ..errors import DomainError
from ..exact import SearchBudget
from ..settings import Settings, load_yaml

logger = logging.getLogger(__name__)


def q_of_d(d: float) -> float:
    """log d / (6 log log d), natural logs."""
    if d <= 1 or math.log(math.log(d)) <= 0:
        raise DomainError(f"q(d) needs log log d > 0, got d={d}")
    ld = math.log(d)
    return ld / (6 * math.log(ld))


class PipelineConfig(BaseModel):
    """Parameters of the randomized pipeline. Unset probabilities and thresholds follow d and epsilon."""

    d: float = Field(..., gt=1, description="Color-degree parameter")
    epsilon: float = Field(0.5, gt=0, lt=1, description="Slack in (0, 1)")
    q_eff: Optional[int] = Field(None, ge=3, description="Effective girth threshold")
    p_reserve: Optional[float] = Field(None, ge=0, le=1, description="Reserve probability")
    p_sparsify: Optional[float] = Field(None, ge=0, le=1, description="Sparsify retention probability")
    theta_R: Optional[float] = Field(None, ge=0, description="Minimum |R(e)|")
    theta_Lp: Optional[float] = Field(None, ge=0, description="Minimum |L'(e)|")
    theta_sp: Optional[float] = Field(None, ge=0, description="Minimum sparsified list size")
    theta_cd: Optional[float] = Field(None, ge=0, description="Maximum sparsified color degree")
    theta_H: Optional[float] = Field(None, ge=0, description="Maximum reserve color degree inside H")
    max_rounds: int = Field(10_000, ge=1, description="Resample / repair budget per stage")
    seed: int = Field(0, description="Seed for every random choice of one solve call")
    strategy: Literal["pipeline", "direct", "auto"] = "auto"
    exact_cutoff: int = Field(24, ge=0, description="auto: exhaustive solver up to this many edges")
    exhaustive_cutoff: int = Field(20, ge=0, description="list_edge_color exhaustive fallback size")
    selection: Literal["lowest", "random"] = "lowest"
    window_mode: Literal["single", "partition"] = "single"
    search_node_limit: int = Field(20_000_000, gt=0)
    search_time_limit: float = Field(60.0, gt=0)

    @model_validator(mode="after")
    def _fill_defaults(self) -> "PipelineConfig":
        d, eps = self.d, self.epsilon
        ld = math.log(d)
        if self.q_eff is None:
            q = q_of_d(d) if ld > 1 else 0.0
            self.q_eff = max(3, math.ceil(q))
        if self.p_reserve is None:
            raw = 2 / ld ** 0.25
            if raw > 1:
                logger.warning("p_reserve = 2/log^(1/4) d = %.3f > 1 at d=%g; clamping to 1", raw, d)
            self.p_reserve = min(1.0, raw)
        if self.p_sparsify is None:
            self.p_sparsify = min(1.0, ld ** 3 / d)
        if self.theta_R is None:
            self.theta_R = d / math.sqrt(ld) * (1 + eps)
        if self.theta_Lp is None:
            self.theta_Lp = d / 2 * (1 + eps / 2)
        if self.theta_sp is None:
            self.theta_sp = (1 + eps / 2) * ld ** 3 / 2
        if self.theta_cd is None:
            self.theta_cd = ld ** 3 + ld ** 2.5
        if self.theta_H is None:
            self.theta_H = d / math.sqrt(ld)
        return self

    @classmethod
    def from_defaults(cls, **overrides: Any) -> "PipelineConfig":
        """YAML defaults, then environment, then explicit overrides (None values are ignored)."""
        values = dict(load_yaml("pipeline.yaml"))
        values.update(Settings().pipeline_overrides())
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    @property
    def budget(self) -> SearchBudget:
        return SearchBudget(node_limit=self.search_node_limit, time_limit=self.search_time_limit)

    def with_seed(self, seed: int) -> "PipelineConfig":
        return self.model_copy(update={"seed": seed})
