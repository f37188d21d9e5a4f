"""Central configuration: seeds, enumeration bounds, oracle cross-checks."""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return raw.strip().lower() in {"1", "true", "yes", "on"}


# Verification seed; the CLI flag wins over NCDET_SEED, which wins over this.
DEFAULT_SEED = 20100511
SEED = int(os.getenv("NCDET_SEED", str(DEFAULT_SEED)))

# Direct enumeration refuses n > MAX_ENUM_ORDER (9! = 362880 monomials)
MAX_ENUM_ORDER = int(os.getenv("NCDET_MAX_ENUM_ORDER", "9"))

# Exhaustive principal-minor search bound
MAX_PRINCIPAL_ORDER = int(os.getenv("NCDET_MAX_PRINCIPAL_ORDER", "6"))

# Assert all 2n determinants of a Hermitian input agree (costs a factor 2n)
CHECK_HERMITIAN = _env_bool("NCDET_CHECK_HERMITIAN", True)

# CLI cdet is compared with conj(rdet(A*)); ddet compares det(A*A) with det(AA*)
CROSS_CHECK = _env_bool("NCDET_CROSS_CHECK", True)

WORKERS = int(os.getenv("NCDET_WORKERS", "1"))

# Float mode: |x - y| <= FLOAT_TOLERANCE * (1 + magnitude)
FLOAT_TOLERANCE = float(os.getenv("NCDET_FLOAT_TOLERANCE", "1e-9"))

REPRO_DIR = Path(os.getenv("NCDET_REPRO_DIR", "."))

LOG_LEVEL = os.getenv("NCDET_LOG_LEVEL", "WARNING").upper()


def settings_summary() -> dict[str, object]:
    """Return the effective settings, for echoing in reports.

    Returns:
        Dict mapping setting name to its current value.
    """
    return {
        "max_enum_order": MAX_ENUM_ORDER,
        "max_principal_order": MAX_PRINCIPAL_ORDER,
        "check_hermitian": CHECK_HERMITIAN,
        "cross_check": CROSS_CHECK,
        "workers": WORKERS,
        "float_tolerance": FLOAT_TOLERANCE,
    }
