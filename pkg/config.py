import logging
import os
import yaml
from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

# Project paths
PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))
DEFAULTS_FILE = os.getenv("HOPF_DEFAULTS_FILE", os.path.join(PROJECT_ROOT, "config", "defaults.yaml"))
OUTPUT_DIR = os.getenv("HOPF_OUTPUT_DIR", os.path.join(PROJECT_ROOT, "output"))
GOLDEN_DIR = os.getenv("HOPF_GOLDEN_DIR", os.path.join(PROJECT_ROOT, "tests", "data", "golden"))


def load_defaults(path):
    """Contents of the defaults file; empty when the file is missing or malformed"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ValueError("top level must be a mapping")
        return data
    except Exception as e:
        logger.error(f"Could not load defaults from {path}: {e}")
        return {}


_DEFAULTS = load_defaults(DEFAULTS_FILE)
_CAPS = _DEFAULTS.get('caps', {}) or {}


def _setting(name, default):
    """Environment first, then the defaults file, then the built-in value"""
    value = os.getenv(f"HOPF_{name}")
    if value is not None:
        return type(default)(value)
    return type(default)(_CAPS.get(name.lower(), default))


# Logging
LOG_LEVEL = os.getenv("HOPF_LOG_LEVEL", "INFO")

# Size caps
MATRIX_CAP = _setting("MATRIX_CAP", 4096)            # rows of any sparse matrix
WORD_CAP = _setting("WORD_CAP", 4096)                # irreducible words per presentation
STEP_CAP = _setting("STEP_CAP", 10 ** 6)             # reductions per normal form
DOUBLE_MAX_DIM = _setting("DOUBLE_MAX_DIM", 400)     # 16p^2, so p <= 5
EXHAUSTIVE_DIM = _setting("EXHAUSTIVE_DIM", 32)      # full triple loops up to this dimension

# Nichols engine
CUTOFF_SMALL = _setting("CUTOFF_SMALL", 6)           # dim V <= 2
CUTOFF_LARGE = _setting("CUTOFF_LARGE", 4)           # dim V in {3, 4}
EXECUTED_DIM_CAP = _setting("EXECUTED_DIM_CAP", 512)  # largest Nichols total certified by execution

# Scalars
ORDER_SEARCH_FACTOR = 4  # roots of unity searched up to ORDER_SEARCH_FACTOR * p

# Rewriting
CLOSURE_ROUNDS = _setting("CLOSURE_ROUNDS", 8)

# Classification
SUPPORTED_COMPOSITE_P = tuple((_DEFAULTS.get("supported_p") or {}).get("composite", [4]))
REPORT_SCHEMA = 1

# Randomized property suites
PROPERTY_CASES = _setting("PROPERTY_CASES", 1000)
RANDOM_SEED = _setting("RANDOM_SEED", 20240601)

# Classification tables
LITERAL_SIMPLES = {int(p): rows for p, rows in (_DEFAULTS.get('literal_simples') or {}).items()}
PROVENANCE = dict(_DEFAULTS.get('provenance') or {})
