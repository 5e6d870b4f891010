"""Error types and enumeration caps shared by every module.

Defaults can be overridden through environment variables so the CLI and
library agree without threading flags everywhere:

    SIGNED_AT_EXPANSION_CAP   max edges for polynomial expansion (24)
    SIGNED_AT_ENUM_CAP        max edges for orientation / Eulerian enumeration (20)
    SIGNED_AT_SEARCH_CAP      max backtracking work for colouring searches (10**7)
    SIGNED_AT_MAD_CAP         max vertices for exhaustive density (20)
"""
from __future__ import annotations

import os


class SignedATError(Exception):
    """Base class for library errors."""


class InvalidArgumentError(SignedATError, ValueError):
    pass


class ResourceLimitError(SignedATError):
    pass


class InternalError(SignedATError, RuntimeError):
    """Raised when a construction that is guaranteed to succeed did not."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    value = int(raw)
    if value <= 0:
        raise InvalidArgumentError(f"{name} must be positive, got {value}")
    return value


def expansion_cap() -> int:
    return _env_int("SIGNED_AT_EXPANSION_CAP", 24)


def enumeration_cap() -> int:
    return _env_int("SIGNED_AT_ENUM_CAP", 20)


def search_cap() -> int:
    return _env_int("SIGNED_AT_SEARCH_CAP", 10**7)


def mad_cap() -> int:
    return _env_int("SIGNED_AT_MAD_CAP", 20)


def check_cap(size: int, cap: int | None, default, what: str) -> None:
    limit = default() if cap is None else cap
    if size > limit:
        raise ResourceLimitError(f"{what}: size {size} exceeds cap {limit}")
