import os

from .errors import ResourceError

DEFAULT_ENUM_CAP = 10**6
DEFAULT_APEX_CAP = 8
# apex cap used by law suites, where composite representatives grow quickly
SUITE_APEX_CAP = 4096

DEFAULT_SEED = 0xC0FFEE
DEFAULT_SAMPLES = 200
EXHAUSTIVE_LIMIT = 10**4


def enum_cap(cap=None):
    if cap is not None:
        return cap
    env = os.environ.get("RELKIT_CAP")
    return int(env) if env else DEFAULT_ENUM_CAP


def apex_cap(cap=None):
    if cap is not None:
        return cap
    env = os.environ.get("RELKIT_APEX_CAP")
    return int(env) if env else DEFAULT_APEX_CAP


def require_within(count, cap, what):
    if count > cap:
        raise ResourceError(f"{what}: {count} instances exceed cap {cap}")
