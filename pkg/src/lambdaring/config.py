"""Global degree cap.

Every :class:`~lambdaring.symfunc.SymFunc` records the cap in force when it
was built; the default comes from ``LAMBDARING_CAP`` or falls back to 12.
"""
import contextlib
import os
import threading

from .errors import CapExceededError, DomainError

DEFAULT_CAP = 12
ENV_VAR = "LAMBDARING_CAP"

_state = threading.local()


def _initial_cap():
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise DomainError(f"{ENV_VAR} must be nonnegative")
    return cap


_global_cap = _initial_cap()


def get_cap():
    return getattr(_state, "cap", _global_cap)


def set_cap(cap):
    """Set the process-wide default cap (affects newly built elements)."""
    global _global_cap
    if cap < 0:
        raise DomainError("degree cap must be nonnegative")
    _global_cap = int(cap)


@contextlib.contextmanager
def degree_cap(cap):
    """Temporarily override the cap for the current thread."""
    if cap < 0:
        raise DomainError("degree cap must be nonnegative")
    previous = getattr(_state, "cap", None)
    _state.cap = int(cap)
    try:
        yield cap
    finally:
        if previous is None:
            del _state.cap
        else:
            _state.cap = previous


def check_degree(degree, cap, what="degree"):
    if degree > cap:
        raise CapExceededError(f"{what} {degree} exceeds the degree cap {cap}")
