"""Size caps for the exhaustive oracles.

``FGR_CAP`` in the environment overrides the per-vertex degree cap and the
factorization-oracle size cap at once.
"""
import os
import warnings

from .errors import CapExceeded

DEGREE_CAP = 12
PK_CAP = 10
PK_HARD_CAP = 12
EMBEDDING_CAP = 10**7


def _env_cap():
    raw = os.environ.get("FGR_CAP")
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"FGR_CAP must be an integer, got {raw!r}") from None


def degree_cap(cap=None):
    if cap is not None:
        return cap
    env = _env_cap()
    return DEGREE_CAP if env is None else env


def pk_cap(cap=None):
    if cap is None:
        cap = _env_cap()
    if cap is None:
        return PK_CAP
    return cap


def check_pk_size(n, cap=None):
    cap = pk_cap(cap)
    if n > min(cap, PK_HARD_CAP):
        raise CapExceeded(f"factorization oracle on n={n} exceeds cap {min(cap, PK_HARD_CAP)}")
    if n > PK_CAP:
        warnings.warn(f"factorization oracle on n={n} enumerates {n - 1}! cycles", RuntimeWarning, stacklevel=3)


def check_degree(d, cap=None):
    cap = degree_cap(cap)
    if d > cap:
        raise CapExceeded(f"vertex degree {d} exceeds oracle cap {cap}")


def check_embedding_count(count, cap=None):
    cap = EMBEDDING_CAP if cap is None else cap
    if count > cap:
        raise CapExceeded(f"{count} embeddings exceed enumeration cap {cap}")
