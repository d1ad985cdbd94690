"""Fair assignment of indivisible objects under ordinal preferences.

Thin dict-level wrappers around the compiled _core module. Profiles and
assignments travel as plain dicts matching the CLI file formats:

    profile = {
        "objects": ["o1", "o2"],
        "agents": [{"name": "1", "prefs": [["o1"], ["o2"]]}],
        "entitlements": {"1": "2/3"},   # optional, rationals as strings
    }
    assignment = {"1": ["o1"], "2": ["o2"]}
"""

import json as _json

from . import _core

FairdivError = _core.FairdivError

__version__ = _core.__version__

__all__ = [
    "FairdivError",
    "check",
    "solve",
    "optimal_proportional",
    "optimal_weak_proportional",
    "pareto_check",
    "pareto_improve",
    "maximal",
    "maximum",
    "maximin",
    "oracle",
    "gen_profile",
]


def _unwrap(outcome):
    body = _json.loads(outcome["body"])
    body["_status"] = outcome["status"]
    return body


def check(profile, assignment, notion, param=""):
    """Verdict dict with per-agent detail; key "satisfied" is the answer."""
    return _unwrap(_core.check(_json.dumps(profile), _json.dumps(assignment), notion, param))


def solve(profile, notion, param="", budget=10**7):
    """Existence dict: {"exists": bool, "assignment": {...}} when solvable."""
    return _unwrap(_core.solve(_json.dumps(profile), notion, param, budget))


def optimal_proportional(profile):
    return _unwrap(_core.optimal_proportional(_json.dumps(profile)))


def optimal_weak_proportional(profile):
    return _unwrap(_core.optimal_weak_proportional(_json.dumps(profile)))


def pareto_check(profile, assignment):
    return _unwrap(_core.pareto_check(_json.dumps(profile), _json.dumps(assignment)))


def pareto_improve(profile, assignment):
    return _unwrap(_core.pareto_improve(_json.dumps(profile), _json.dumps(assignment)))


def maximal(profile, notion, param="", budget=10**7):
    return _unwrap(_core.maximal(_json.dumps(profile), notion, param, budget))


def maximum(profile, notion, param="", budget=10**7):
    return _unwrap(_core.maximum(_json.dumps(profile), notion, param, budget))


def maximin(profile):
    return _unwrap(_core.maximin(_json.dumps(profile)))


def oracle(profile, notion="", param="", optimal="", budget=10**7):
    return _unwrap(_core.oracle(_json.dumps(profile), notion, param, optimal, budget))


def gen_profile(seed, agents, objects, strict=False, tie_prob="1/2", entitled=False):
    return _unwrap(_core.gen_profile(seed, agents, objects, strict, tie_prob, entitled))
