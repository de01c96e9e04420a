"""Named verification suites and the models available to expression evaluation."""
from __future__ import annotations

import json
from typing import Callable, Dict, List, Tuple

from .report import Report


def _trefoil() -> List[Report]:
    from .trefoil import verify_trefoil_a, verify_trefoil_b
    return [verify_trefoil_a(), verify_trefoil_b()]


def _fig8() -> List[Report]:
    from . import figure_eight as F
    return [F.verify_f8r(), F.verify_trace_generators(), F.verify_f8q(), F.verify_projection(),
            F.verify_f8_b_end_to_end(), F.verify_centers(), F.verify_f8a(), F.verify_quotients()]


def _m2() -> List[Report]:
    from .m2 import M2Ring, centrality_check, check_rep4, check_symmetric
    R = M2Ring.generic()
    return [check_symmetric(R), check_rep4(R), centrality_check()]


SUITES: Dict[str, Callable[[], List[Report]]] = {"trefoil": _trefoil, "fig8": _fig8, "m2": _m2}


def run_suite(name: str) -> List[Report]:
    if name == "all":
        return [r for key in SUITES for r in SUITES[key]()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return SUITES[name]()


def summary(reports: List[Report]) -> str:
    """Stable JSON: {"ok": bool, "passed": n, "failed": n, "reports": [...]}."""
    lines = [l for r in reports for l in r.lines]
    failed = sum(1 for l in lines if l.status != "PASS")
    doc = {"ok": failed == 0, "passed": len(lines) - failed, "failed": failed,
           "reports": [r.summary() for r in reports]}
    return json.dumps(doc, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# models for `dg eval`

def model(name: str) -> Tuple[Dict[str, object], object]:
    """(generator assignment, one) of a named model."""
    if name == "trefoil-a":
        from .arith import EisensteinLoc
        return {"t": EisensteinLoc.t()}, EisensteinLoc(1)
    if name == "f8-r":
        from .figure_eight import f8r, f8r_constants
        R = f8r()
        c, _, d, w = f8r_constants()
        return {"a": R.a, "b": R.b, "c": R.scalar(c), "d": R.scalar(d), "w": R.scalar(w)}, R.one()
    if name == "f8-b":
        from .figure_eight import build_f8q
        Q = build_f8q()
        env = {n: Q.gen(n) for n in ("eps", "w", "d", "a", "b")}
        env["c"] = Q.from_dict({"w": 1, "1": -1, "eps": 1})
        return env, Q.one()
    if name == "f8-a":
        from .figure_eight import build_f8a
        A = build_f8a()
        return {n: A.gen(n) for n in ("s", "z", "a", "g")}, A.one()
    raise KeyError(f"unknown model {name!r}")


MODELS = ("trefoil-a", "f8-r", "f8-b", "f8-a")
