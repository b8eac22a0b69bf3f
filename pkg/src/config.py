# Configuration settings
import os

SYNTHESIS_CONFIG = {
    'max_depth': 12,          # enumeration cap (steps)
    'default_depth': 4,       # CLI and cross-check depth
    'max_controllable': 16,   # |Σ_c| cap for control pattern enumeration
    'max_nodes': 1_000_000,   # arena node cap
    'oracle_max_nodes': 5000, # brute-force solver cap
    'oracle_max_strategies': 65536,  # oracle strategy cap
    'verify_depth': 4,        # bounded cross-check in verification
}

LOG_CONFIG = {
    'level': os.environ.get('RDES_LOG_LEVEL', 'INFO'),
    'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
}


def max_arena_nodes() -> int:
    """
    Arena node cap, overridable with RDES_MAX_NODES.

    Returns:
        Positive node cap

    Raises:
        ValueError: If RDES_MAX_NODES is not a positive integer
    """
    raw = os.environ.get('RDES_MAX_NODES')
    if raw is None:
        return SYNTHESIS_CONFIG['max_nodes']
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"RDES_MAX_NODES must be an integer, got {raw!r}")
    if value <= 0:
        raise ValueError(f"RDES_MAX_NODES must be positive, got {value}")
    return value
