from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from typing import Literal, Mapping, Optional

from fibalg.engine.errors import ParseError
from fibalg.engine.lie import CENTRAL_SIGNS, CentralSign

OutputFormat = Literal["text", "csv", "json"]
OUTPUT_FORMATS = ("text", "csv", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

ENV_PREFIX = "FIBALG_"


@dataclass(frozen=True)
class RunConfig:
    output_format: OutputFormat = "text"
    central_sign: CentralSign = "table"
    ideal_n: int = 12
    verify_range: int = 15
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        if self.output_format not in OUTPUT_FORMATS:
            raise ParseError("unknown output format", {"format": self.output_format, "allowed": list(OUTPUT_FORMATS)})
        if self.central_sign not in CENTRAL_SIGNS:
            raise ParseError("unknown central sign", {"central_sign": self.central_sign})
        if self.log_level not in LOG_LEVELS:
            raise ParseError("unknown log level", {"log_level": self.log_level, "allowed": list(LOG_LEVELS)})
        if self.ideal_n < 0 or self.verify_range < 0:
            raise ParseError("sizes must be non-negative", {"ideal_n": self.ideal_n, "verify_range": self.verify_range})

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> RunConfig:
        env = os.environ if environ is None else environ
        cfg = cls()
        fmt = env.get(ENV_PREFIX + "FORMAT")
        if fmt is not None:
            cfg = _checked(cfg, "FORMAT", output_format=fmt.strip().lower())
        sign = env.get(ENV_PREFIX + "CENTRAL_SIGN")
        if sign is not None:
            cfg = _checked(cfg, "CENTRAL_SIGN", central_sign=sign.strip().lower())
        level = env.get(ENV_PREFIX + "LOG_LEVEL")
        if level is not None:
            cfg = _checked(cfg, "LOG_LEVEL", log_level=level.strip().upper())
        for name, field_name in (("IDEAL_N", "ideal_n"), ("RANGE", "verify_range")):
            raw = env.get(ENV_PREFIX + name)
            if raw is None:
                continue
            try:
                value = int(raw)
            except ValueError:
                raise ParseError("environment value must be an integer", {"variable": ENV_PREFIX + name, "value": raw}) from None
            cfg = _checked(cfg, name, **{field_name: value})
        return cfg

    def with_overrides(self, **changes: object) -> RunConfig:
        kept = {k: v for k, v in changes.items() if v is not None}
        return replace(self, **kept) if kept else self  # type: ignore[arg-type]


def _checked(cfg: RunConfig, name: str, **changes: object) -> RunConfig:
    try:
        return replace(cfg, **changes)  # type: ignore[arg-type]
    except ParseError as exc:
        raise ParseError(exc.message, {"variable": ENV_PREFIX + name, **exc.details}) from None


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
