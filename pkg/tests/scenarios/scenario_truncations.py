from __future__ import annotations

from fibalg.engine import (
    TruncationSpec,
    check_round_trip,
    check_truncated_axioms,
    export_structure_constants,
    table_from_dict,
    table_to_dict,
)
from tests.harness.engine import ScenarioContext

SEEDS = [1]


def run(ctx: ScenarioContext):
    verdicts = {}
    for n_max in (4, 5, 6):
        for mode in ("zero-product", "drop-term"):
            tspec = TruncationSpec(n_max=n_max, mode=mode)
            report = check_truncated_axioms(tspec)
            ctx.step("truncated_axioms", N=n_max, mode=mode, jordan_identity=report.jordan_identity, witnesses=len(report.witnesses))
            ctx.expect(report.commutative, "truncated product is not commutative", N=n_max, mode=mode)
            verdicts[f"{n_max}/{mode}"] = report.jordan_identity

            table = export_structure_constants(tspec)
            ctx.expect(table.is_symmetric(), "structure constants are not symmetric", N=n_max, mode=mode)
            ctx.expect_clean("round trip", check_round_trip(table))
            ctx.expect(table_from_dict(table_to_dict(table)) == table, "JSON import does not rebuild the table", N=n_max, mode=mode)
    return {"summary": ctx.snapshot(), "steps": ctx.steps, "jordan_identity": verdicts}
