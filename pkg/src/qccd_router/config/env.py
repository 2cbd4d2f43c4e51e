"""Environment configuration: loads .env or .env.dev and exports typed constants."""

import os

from dotenv import load_dotenv

# ---------------------------------------------------------------------------
# Determine which env file to load
# ---------------------------------------------------------------------------
_env_file = ".env.dev" if os.getenv("QCCD_ENV") == "dev" else ".env"
load_dotenv(dotenv_path=_env_file, override=False)


def _optional_int(name: str, default: int) -> int:
    """Return the integer value of an optional environment variable or raise a clear error."""
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise OSError(
            f"Environment variable '{name}' must be an integer, got {value!r}. " f"Check your '{_env_file}' file."
        ) from None


# ---------------------------------------------------------------------------
# Exported constants
# ---------------------------------------------------------------------------

ENV_NAME: str = os.getenv("QCCD_ENV", "default")

LOG_LEVEL: str = os.getenv("QCCD_LOG_LEVEL", "WARNING").upper()

DEFAULT_OUT_DIR: str = os.getenv("QCCD_OUT_DIR", "out")

# Values above 1 evaluate sweep points in a process pool
SWEEP_WORKERS: int = max(1, _optional_int("QCCD_SWEEP_WORKERS", 1))

DEFAULT_SEED: int = _optional_int("QCCD_SEED", 0)

# Seeds the Faker generators behind the randomised test inputs
TEST_DATA_SEED: int = _optional_int("QCCD_TEST_SEED", 20240607)
