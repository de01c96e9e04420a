"""The trefoil: A' and B' rings against Z[t, 1/3]/(t^2 - t + 1)."""
from __future__ import annotations

from importlib import resources
from typing import Dict

from .arith import EisensteinLoc, NotInvertible
from .report import Report
from .rings import emit_a, emit_b, evaluate, parse_expr, verify_in_model
from .triangulation import delta_presentation, parse_diagram, reduce_presentation


def bundled(name: str) -> str:
    return resources.files("dgroupoid").joinpath("data", name).read_text()


def trefoil_presentation(reduced: bool = True):
    p = delta_presentation(parse_diagram(bundled("trefoil.tri")))
    return reduce_presentation(p) if reduced else p


def t() -> EisensteinLoc:
    return EisensteinLoc.t()


def phi(wy=None) -> Dict[str, EisensteinLoc]:
    """w_x -> t, w_y -> (2 - t)/3."""
    tt = t()
    return {"w_x": tt, "w_y": wy if wy is not None else (2 - tt) * EisensteinLoc(3).inverse()}


def _holds(rep: Report, name: str, lhs: str, rhs: str, env, one=EisensteinLoc(1)):
    try:
        ok = evaluate(parse_expr(lhs), env, one) == evaluate(parse_expr(rhs), env, one)
    except NotInvertible as exc:
        rep.add(name, False, f"not invertible: {exc}")
        return False
    return rep.add(name, ok, f"{lhs} != {rhs}")


def verify_trefoil_a(wy=None) -> Report:
    """The map phi respects the A' presentation; ``wy`` overrides phi(w_y)."""
    rep = Report("trefoil A'-ring")
    one = EisensteinLoc(1)
    env = phi(wy)
    env["t"] = t()
    rep.add("t^2-t+1=0", t() * t() - t() + 1 == 0)
    rep.add("3 is a unit", EisensteinLoc(3).is_unit())
    _holds(rep, "t^-1=1-t", "t^-1", "1-t", env)
    _holds(rep, "3(2-t)^-1=1+t", "3*inv(2-t)", "1+t", env)
    _holds(rep, "1+t=1-t^-2", "1+t", "1-t^-2", env)
    _holds(rep, "phi: w_x^-1=1-w_x", "w_x^-1", "1-w_x", env)
    _holds(rep, "phi: w_y^-1=1-w_x^-2", "w_y^-1", "1-w_x^-2", env)
    # phi after phi^-1 on the generators t and 3^-1
    _holds(rep, "phi(w_xw_y^2)=3^-1", "w_x*w_y^2*3", "1", env)
    rep.add("phi(w_x)=t", env["w_x"] == t())
    emitted = verify_in_model(emit_a(trefoil_presentation()), env, one, "emitted relations")
    for line in emitted.lines:
        line.name = "emitted: " + line.name
    rep.extend(emitted)
    return rep


def b_assignment() -> Dict[str, EisensteinLoc]:
    tt = t()
    ti = tt.inverse()
    vy = (1 + ti).inverse()
    return {"u_x": tt, "v_x": ti, "v_y": vy, "u_y": -(vy * tt * tt)}


def verify_trefoil_b() -> Report:
    rep = Report("trefoil B'-ring")
    one = EisensteinLoc(1)
    env = b_assignment()
    env["t"] = t()
    tt = t()
    rep.add("t^3+1=0", tt ** 3 + 1 == 0)
    rep.add("(t+1)(t^2-t+1)=0", (tt + 1) * (tt * tt - tt + 1) == 0)
    rep.add("t^3=-1", tt ** 3 == -1)
    _holds(rep, "u_x+v_x=t+t^-1=1", "u_x+v_x", "1", env)
    _holds(rep, "u_y+v_y=1", "u_y+v_y", "1", env)
    _holds(rep, "(1+t^-1)^-1(t^-1+1)=1", "inv(1+t^-1)*(t^-1+1)", "1", env)
    # the simplified presentation displayed for the trefoil B'-ring
    for lhs, rhs in (("u_x^-1", "v_x"), ("-u_x^-1*v_x", "u_x"),
                     ("u_x^2", "-v_y^-1*u_y"), ("(u_x+1)*v_x", "v_y^-1")):
        _holds(rep, f"{lhs}={rhs}", lhs, rhs, env)
    emitted = verify_in_model(emit_b(trefoil_presentation()), env, one, "emitted relations")
    for line in emitted.lines:
        line.name = "emitted: " + line.name
    rep.extend(emitted)
    return rep
