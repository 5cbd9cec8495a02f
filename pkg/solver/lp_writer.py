"""Linear-programming form of the replacement MDP, written in CPLEX LP text format.

Maximize the sum of u(d1, d2) subject to u(s) <= cost(a) + alpha * u(next(s, a)) for every
admissible action a of every capped state s. The optimum is the value function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Tuple

from common.errors import ParseError
from common.utils import write_text
from model.cost_model import CostModel, Limits
from model.rate_table import RateTable
from solver.bellman import Action, Transitions

TERMS_PER_LINE = 8
_ACTION_TAGS = {Action.PROCEED: "p", Action.REPLACE1: "r1", Action.REPLACE2: "r2", Action.BOTH: "rb"}


@dataclass(frozen=True)
class LPConstraint:
    name: str
    terms: Tuple[Tuple[float, str], ...]  # (coefficient, variable)
    rhs: float
    sense: str = "<="


@dataclass(frozen=True)
class LinearProgram:
    variables: Tuple[str, ...]
    constraints: Tuple[LPConstraint, ...]
    sense: str = "Maximize"


def var_name(d1: int, d2: int) -> str:
    return "u_{}_{}".format(d1, d2)


def _num(x: float) -> str:
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def build_lp(rates: RateTable, costs: CostModel, limits: Limits) -> LinearProgram:
    trans = Transitions(rates, limits)
    price = {Action.PROCEED: 0.0, Action.REPLACE1: costs.c1, Action.REPLACE2: costs.c2, Action.BOTH: costs.v}
    variables = []
    constraints = []
    for d1 in range(limits.l1 + 1):
        for d2 in range(limits.l2 + 1):
            me = var_name(d1, d2)
            variables.append(me)
            for action in Action:
                if trans.inadmissible[action, d1, d2]:
                    continue
                nxt = var_name(*trans.next_state(d1, d2, action))
                if nxt == me:
                    terms = ((1.0 - costs.alpha, me),)
                elif costs.alpha == 0:
                    terms = ((1.0, me),)
                else:
                    terms = ((1.0, me), (-costs.alpha, nxt))
                constraints.append(LPConstraint("{}_{}_{}".format(_ACTION_TAGS[action], d1, d2), terms, float(price[action])))
    return LinearProgram(tuple(variables), tuple(constraints))


def _expr(terms) -> str:
    parts = []
    for k, (coef, name) in enumerate(terms):
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        body = name if mag == 1 else "{} {}".format(_num(mag), name)
        parts.append(("- " + body if sign == "-" else body) if k == 0 else "{} {}".format(sign, body))
    return " ".join(parts)


def render_lp(lp: LinearProgram, header: str = None) -> str:
    lines = []
    if header:
        lines.append("\\" + header.lstrip("#"))
    lines.append(lp.sense)
    objective = list(lp.variables)
    chunks = [objective[i : i + TERMS_PER_LINE] for i in range(0, len(objective), TERMS_PER_LINE)]
    for k, chunk in enumerate(chunks):
        lead = " obj: " if k == 0 else "   + "
        lines.append(lead + " + ".join(chunk))
    lines.append("Subject To")
    for c in lp.constraints:
        lines.append(" {}: {} {} {}".format(c.name, _expr(c.terms), c.sense, _num(c.rhs)))
    lines.append("Bounds")
    for name in lp.variables:
        lines.append(" {} >= 0".format(name))
    lines.append("End")
    return "\n".join(lines) + "\n"


def write_lp(lp: LinearProgram, path, header: str = None):
    write_text(path, render_lp(lp, header))


def export_lp(rates: RateTable, costs: CostModel, limits: Limits, path, header: str = None) -> LinearProgram:
    lp = build_lp(rates, costs, limits)
    write_lp(lp, path, header)
    return lp


_TERM = re.compile(r"([+-])?\s*(\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)?\s*([A-Za-z_][\w]*)")
_ROW = re.compile(r"^\s*([\w]+):\s*(.*?)\s*(<=|>=|=)\s*(-?[\d.eE+-]+)\s*$")


def _parse_terms(text: str, path, line_no: int):
    terms = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(path, line_no, "cannot parse linear expression near {!r}".format(text[pos:]))
        sign, coef, name = m.groups()
        value = float(coef) if coef else 1.0
        terms.append((-value if sign == "-" else value, name))
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return tuple(terms)


def read_lp(path) -> LinearProgram:
    """Parses the subset of LP format that `write_lp` emits."""
    section = None
    sense = None
    objective = []
    constraints = []
    bounded = []
    with open(path, "r", encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("\\"):
                continue
            keyword = line.strip()
            if keyword in ("Maximize", "Minimize"):
                section, sense = "objective", keyword
                continue
            if keyword in ("Subject To", "Bounds"):
                section = keyword
                continue
            if keyword == "End":
                section = "End"
                break
            if section == "objective":
                body = keyword.split(":", 1)[1] if ":" in keyword else keyword
                objective.extend(name for _, name in _parse_terms(body, path, line_no))
            elif section == "Subject To":
                m = _ROW.match(line)
                if not m:
                    raise ParseError(path, line_no, "malformed constraint")
                name, expr, op, rhs = m.groups()
                constraints.append(LPConstraint(name, _parse_terms(expr, path, line_no), float(rhs), op))
            elif section == "Bounds":
                bounded.append(keyword.split()[0])
            else:
                raise ParseError(path, line_no, "content outside any section")
    if sense is None or section != "End":
        raise ParseError(path, 1, "missing objective section or End marker")
    if bounded and bounded != objective:
        raise ParseError(path, 1, "bounds do not list the objective variables")
    return LinearProgram(tuple(objective), tuple(constraints), sense)
