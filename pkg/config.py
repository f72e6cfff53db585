import os
import sys
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

load_dotenv()


class Settings(BaseModel):
    """Tunable limits for the empirical parts of the toolkit"""

    model_config = ConfigDict(frozen=True)

    n_max: int = Field(12, ge=1)
    confirmation_window: int = Field(4, ge=1)
    # None means "d + r" for the ideal being searched
    witness_box_side: Optional[int] = Field(None, ge=0)
    witness_candidate_cap: int = Field(200_000, ge=1)
    delta_order_cap: int = Field(6, ge=1)
    delta_minor_budget: int = Field(1_000_000, ge=1)
    # raised per search to the scale that always saturates I^n
    sat_n_cap: int = Field(64, ge=1)
    verify_system_max_n: int = Field(4, ge=1)
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    console_width: int = Field(160, ge=40)

    @field_validator('witness_box_side', 'log_file', mode='before')
    @classmethod
    def _blank_is_unset(cls, value):
        return None if value == "" else value

    @field_validator('log_level', mode='before')
    @classmethod
    def _upper(cls, value):
        return value.upper() if isinstance(value, str) else value


def load_settings() -> Settings:
    """Raw POWERPRIMES_* strings go straight to pydantic, which coerces and checks them."""
    return Settings(
        n_max=os.getenv('POWERPRIMES_N_MAX', 12),
        confirmation_window=os.getenv('POWERPRIMES_CONFIRMATION_WINDOW', 4),
        witness_box_side=os.getenv('POWERPRIMES_WITNESS_BOX_SIDE'),
        witness_candidate_cap=os.getenv('POWERPRIMES_WITNESS_CANDIDATE_CAP', 200_000),
        delta_order_cap=os.getenv('POWERPRIMES_DELTA_ORDER_CAP', 6),
        delta_minor_budget=os.getenv('POWERPRIMES_DELTA_MINOR_BUDGET', 1_000_000),
        sat_n_cap=os.getenv('POWERPRIMES_SAT_N_CAP', 64),
        verify_system_max_n=os.getenv('POWERPRIMES_VERIFY_SYSTEM_MAX_N', 4),
        log_level=os.getenv('POWERPRIMES_LOG_LEVEL', 'WARNING'),
        log_file=os.getenv('POWERPRIMES_LOG_FILE'),
        console_width=os.getenv('POWERPRIMES_CONSOLE_WIDTH', 160),
    )


def settings_or_exit() -> Settings:
    try:
        return load_settings()
    except ValidationError as e:
        fields = ", ".join(
            f"POWERPRIMES_{str(err['loc'][0]).upper()}: {err['msg']}" for err in e.errors()
        )
        print(f"❌ Invalid configuration: {fields}", file=sys.stderr)
        raise SystemExit(2) from e


settings = settings_or_exit()
