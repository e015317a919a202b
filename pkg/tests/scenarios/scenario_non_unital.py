from __future__ import annotations

from fibalg.engine import JordanSpec, check_no_identity, check_proper_ideal
from tests.harness.engine import ScenarioContext

SEEDS = [1]


def run(ctx: ScenarioContext):
    spec = JordanSpec()
    ctx.step("no_identity", N=12, M=4)
    ctx.expect(check_no_identity(spec, 12, 4), "a finite identity element was found")
    ctx.step("proper_ideal", N=12)
    ctx.expect(check_proper_ideal(spec, 12), "L_1 lies in the span of L_0 o L_n")
    return {"summary": ctx.snapshot(), "steps": ctx.steps}
