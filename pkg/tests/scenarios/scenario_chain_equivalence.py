from __future__ import annotations

from fibalg.engine import ChainSpec, check_chain_equivalence
from tests.harness.engine import ScenarioContext

SEEDS = [1]
BOUND = 60


def run(ctx: ScenarioContext):
    for alpha in ("0", "1/2", "1"):
        ctx.step("chain_equivalence", alpha=alpha, bound=BOUND)
        ctx.expect_clean(f"chain equivalence alpha={alpha}", check_chain_equivalence(ChainSpec(alpha), BOUND))
    return {"summary": ctx.snapshot(), "steps": ctx.steps}
