"""Settings read from the environment."""
from __future__ import annotations

import os
from typing import Optional

from pydantic import BaseModel, Field


class Settings(BaseModel):
    log_level: str = Field("WARNING", description="Root log level when --verbose is not given")
    json_indent: int = Field(2, description="Indentation of --json output")
    max_degree: Optional[int] = Field(None, description="Default cap for prolong")
    default_order: Optional[int] = Field(None, description="Default truncation order for realize and symmetries")

    @classmethod
    def from_env(cls) -> "Settings":
        values = {
            "log_level": os.environ.get("CRLAB_LOG_LEVEL", "WARNING").upper(),
            "json_indent": int(os.environ.get("CRLAB_JSON_INDENT", "2")),
        }
        max_degree = os.environ.get("CRLAB_MAX_DEGREE")
        if max_degree:
            values["max_degree"] = int(max_degree)
        order = os.environ.get("CRLAB_DEFAULT_ORDER")
        if order:
            values["default_order"] = int(order)
        return cls(**values)
