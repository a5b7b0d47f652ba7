"""Plain-text model files.

A model file holds one lattice plus any number of named states,
conditional states, s-maps, and observables:

    [logic]
    elements 0 1 a a' b b'
    complement a a'
    complement b b'

    [state m]
    a = 2/5
    b = 0.3

    [cond f]
    b | a = 0.3

    [smap p]
    a , b = 3/25

    [observable x]
    -1 -> a
    1 -> a'

Blank lines and text after `#` are ignored.  Numbers are integers,
fractions n/d, or decimal literals; all are read exactly.  Parsing checks
syntax and that every referenced element was declared; whether a section's
numbers actually form a state, conditional state, or s-map is decided by
the validators when the section is realized.

Tables may omit entries forced by the axioms: states omit the bounds,
conditional states omit the 0 and 1 rows, s-maps omit rows and columns for
0 and 1 (recovered additively through a complement pair).  Everything else
must be written out.  Emission always writes full tables, with the lattice
order given by its covering pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DuplicateSection, ParseError, UnknownElement
from .lattice import ONE, ZERO, QuantumLogic, build_logic
from .observables import DiscreteObservable, build_observable
from .rational import fmt
from .smaps import SMap, validate_smap
from .states import (
    ConditionalState,
    conditional_system_generated,
    validate_conditional_state,
    validate_state,
)

SECTION_KINDS = ("state", "cond", "smap", "observable")


@dataclass
class ParsedModel:
    """Syntax-checked file content, before any axiom is tested."""

    source: str
    elements: list = field(default_factory=list)
    order: list = field(default_factory=list)
    complements: list = field(default_factory=list)
    states: dict = field(default_factory=dict)
    conds: dict = field(default_factory=dict)
    smaps: dict = field(default_factory=dict)
    observables: dict = field(default_factory=dict)
    #: (kind, name) in file order, logic excluded
    sections: list = field(default_factory=list)

    def table(self, kind: str, name: str):
        return getattr(self, kind_attr(kind))[name]


def kind_attr(kind: str) -> str:
    return {"state": "states", "cond": "conds", "smap": "smaps",
            "observable": "observables"}[kind]


@dataclass
class ModelFile:
    """Fully realized file content: every section passed its validator."""

    logic: QuantumLogic
    states: dict
    conds: dict
    smaps: dict
    observables: dict


# ---------------------------------------------------------------------------
# parsing


def _number(token: str, line: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line, f"bad number {token!r}") from None


def _split_sections(text: str, source: str):
    """Group numbered lines under their section headers."""
    header = None
    body = []
    groups = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if content.startswith("["):
            if not content.endswith("]"):
                raise ParseError(lineno, "unterminated section header")
            if header is not None:
                groups.append((header, body))
            header = (lineno, content[1:-1].split())
            body = []
        elif header is None:
            raise ParseError(lineno, "content before any section header")
        else:
            body.append((lineno, content))
    if header is not None:
        groups.append((header, body))
    return groups


def parse_model_text(text: str, source: str = "<string>") -> ParsedModel:
    parsed = ParsedModel(source)
    groups = _split_sections(text, source)

    logic_group = None
    seen = set()
    for (lineno, words), body in groups:
        if not words:
            raise ParseError(lineno, "empty section header")
        kind = words[0]
        if kind == "logic":
            if len(words) != 1:
                raise ParseError(lineno, "[logic] takes no name")
            if logic_group is not None:
                raise DuplicateSection(lineno, "logic")
            logic_group = body
        elif kind in SECTION_KINDS:
            if len(words) != 2:
                raise ParseError(lineno, f"[{kind}] needs exactly one name")
            name = words[1]
            if (kind, name) in seen:
                raise DuplicateSection(lineno, f"{kind} {name}")
            seen.add((kind, name))
            parsed.sections.append((kind, name, body))
        else:
            raise ParseError(lineno, f"unknown section kind {kind!r}")
    if logic_group is None:
        raise ParseError(0, "no [logic] section")

    _parse_logic(parsed, logic_group)
    known = set(parsed.elements) | {ZERO, ONE}

    def resolve(token: str, lineno: int) -> str:
        if token not in known:
            raise UnknownElement(lineno, token)
        return token

    sections = []
    for kind, name, body in parsed.sections:
        table = {}
        for lineno, content in body:
            if kind == "observable":
                left, sep, right = content.partition("->")
                if not sep:
                    raise ParseError(lineno, "expected 'value -> element'")
                value = _number(left.strip(), lineno)
                target = resolve(right.strip(), lineno)
                key, entry = value, target
            else:
                left, sep, right = content.partition("=")
                if not sep:
                    raise ParseError(lineno, "expected '='")
                entry = _number(right.strip(), lineno)
                left = left.strip()
                if kind == "state":
                    key = resolve(left, lineno)
                elif kind == "cond":
                    b, sep2, a = left.partition("|")
                    if not sep2:
                        raise ParseError(lineno, "expected 'b | a = value'")
                    key = (resolve(b.strip(), lineno), resolve(a.strip(), lineno))
                else:
                    a, sep2, b = left.partition(",")
                    if not sep2:
                        raise ParseError(lineno, "expected 'a , b = value'")
                    key = (resolve(a.strip(), lineno), resolve(b.strip(), lineno))
            if key in table:
                raise ParseError(lineno, f"duplicate entry for {key}")
            table[key] = entry
        getattr(parsed, kind_attr(kind))[name] = table
        sections.append((kind, name))
    parsed.sections = sections
    return parsed


def _parse_logic(parsed: ParsedModel, body) -> None:
    declared = []
    for lineno, content in body:
        words = content.split()
        directive, args = words[0], words[1:]
        if directive == "elements":
            if not args:
                raise ParseError(lineno, "elements line lists names")
            declared.extend(args)
        elif directive == "order":
            if len(args) != 2:
                raise ParseError(lineno, "order takes two elements")
            parsed.order.append((lineno, args[0], args[1]))
        elif directive == "complement":
            if len(args) != 2:
                raise ParseError(lineno, "complement takes two elements")
            parsed.complements.append((lineno, args[0], args[1]))
        else:
            raise ParseError(lineno, f"unknown directive {directive!r}")
    known = set(declared) | {ZERO, ONE}
    for lineno, a, b in parsed.order + parsed.complements:
        for token in (a, b):
            if token not in known:
                raise UnknownElement(lineno, token)
    parsed.elements = declared
    parsed.order = [(a, b) for _, a, b in parsed.order]
    parsed.complements = [(a, b) for _, a, b in parsed.complements]


def parse_model(path) -> ParsedModel:
    with open(path, encoding="utf-8") as handle:
        return parse_model_text(handle.read(), source=str(path))


# ---------------------------------------------------------------------------
# realization (syntax -> validated objects)


def realize_logic(parsed: ParsedModel) -> QuantumLogic:
    elements = list(parsed.elements)
    for bound in (ZERO, ONE):
        if bound not in elements:
            elements.append(bound)
    return build_logic(elements, parsed.order, parsed.complements)


def realize_state(logic: QuantumLogic, table: dict):
    values = dict(table)
    values.setdefault(ZERO, Fraction(0))
    values.setdefault(ONE, Fraction(1))
    return validate_state(logic, values)


def realize_cond(logic: QuantumLogic, table: dict) -> ConditionalState:
    values = dict(table)
    members = {a for _, a in values}
    for a in members:
        values.setdefault((ZERO, a), Fraction(0))
        values.setdefault((ONE, a), Fraction(1))
    cs = conditional_system_generated(logic, members)
    return validate_conditional_state(logic, cs, values)


def realize_smap(logic: QuantumLogic, table: dict) -> SMap:
    values = dict(table)
    inner = [e for e in logic.names if e not in (ZERO, ONE)]
    for e in logic.names:
        values.setdefault((ZERO, e), Fraction(0))
        values.setdefault((e, ZERO), Fraction(0))
    pair = next(((c, logic.complement(c)) for c in inner
                 if logic.complement(c) not in (ZERO, ONE)), None)
    if pair is not None:
        c, d = pair
        for e in inner:
            if (e, ONE) not in values and (e, c) in values and (e, d) in values:
                values[e, ONE] = values[e, c] + values[e, d]
            if (ONE, e) not in values and (c, e) in values and (d, e) in values:
                values[ONE, e] = values[c, e] + values[d, e]
        if (ONE, ONE) not in values:
            have = all((u, v) in values for u in (c, d) for v in (c, d))
            if have:
                values[ONE, ONE] = sum(values[u, v]
                                       for u in (c, d) for v in (c, d))
    else:
        values.setdefault((ONE, ONE), Fraction(1))
    return validate_smap(logic, values)


def realize_observable(logic: QuantumLogic, table: dict) -> DiscreteObservable:
    return build_observable(logic, table.items())


def realize_model(parsed: ParsedModel) -> ModelFile:
    logic = realize_logic(parsed)
    model = ModelFile(logic, {}, {}, {}, {})
    builders = {"state": realize_state, "cond": realize_cond,
                "smap": realize_smap, "observable": realize_observable}
    for kind, name in parsed.sections:
        built = builders[kind](logic, parsed.table(kind, name))
        getattr(model, kind_attr(kind))[name] = built
    return model


def load_model(path) -> ModelFile:
    return realize_model(parse_model(path))


# ---------------------------------------------------------------------------
# emission


def emit_logic(logic: QuantumLogic) -> list:
    lines = ["[logic]"]
    lines.append("elements " + " ".join(logic.names))
    for a, b in logic.covers():
        if a not in (ZERO, ONE) and b not in (ZERO, ONE):
            lines.append(f"order {a} {b}")
    for a in logic.names:
        b = logic.complement(a)
        if logic.index(a) < logic.index(b) and (a, b) != (ZERO, ONE):
            lines.append(f"complement {a} {b}")
    return lines


def emit_state(name: str, state) -> list:
    lines = [f"[state {name}]"]
    for e in state.logic.names:
        lines.append(f"{e} = {fmt(state(e))}")
    return lines


def emit_cond(name: str, f: ConditionalState) -> list:
    lines = [f"[cond {name}]"]
    for a in f.cs.sorted_members():
        for b in f.logic.names:
            lines.append(f"{b} | {a} = {fmt(f(b, a))}")
    return lines


def emit_smap(name: str, p: SMap) -> list:
    lines = [f"[smap {name}]"]
    for a in p.logic.names:
        for b in p.logic.names:
            lines.append(f"{a} , {b} = {fmt(p(a, b))}")
    return lines


def emit_observable(name: str, x: DiscreteObservable) -> list:
    lines = [f"[observable {name}]"]
    for t in x.spectrum:
        lines.append(f"{fmt(t)} -> {x.element(t)}")
    return lines


def emit_model(model: ModelFile) -> str:
    chunks = [emit_logic(model.logic)]
    for name, state in model.states.items():
        chunks.append(emit_state(name, state))
    for name, f in model.conds.items():
        chunks.append(emit_cond(name, f))
    for name, p in model.smaps.items():
        chunks.append(emit_smap(name, p))
    for name, x in model.observables.items():
        chunks.append(emit_observable(name, x))
    return "\n\n".join("\n".join(chunk) for chunk in chunks) + "\n"
