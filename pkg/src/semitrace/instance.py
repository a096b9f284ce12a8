"""Instance files shared by the CLI subcommands.

Line-oriented; ``#`` starts a comment::

    S = <3,5>
    I = [8,9,10]            # or: conductor, canonical, maxideal, R, zero
    module M = ideal I      # also: residue | free | quotient [3] | syzygy M 1
    jmax = 3
    degree_bound = 40
    truncate = 5
    check lemma-43 M 1
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError, SemitraceError
from .ideals import parse_ideal
from .semigroup import parse_semigroup

# argument kinds per statement, in file order
STATEMENT_ARGS = {
    "thm-31": ("module", "a"),
    "thm-big-dim1": ("ideal", "a"),
    "cor-6-SHADOW": ("ideal", "a"),
    "cor-injmain-SHADOW": ("ideal", "a"),
    "prop-trentry": ("ideal",),
    "lemma-43": ("module", "j"),
    "cor-44": ("module", "a", "j"),
    "prop-her": ("ideal",),
    "thm-42": ("ideal",),
    "prop-nuco": ("a", "b"),
    "prop-56": (),
    "question-hyp": ("a_max",),
    "question-qu2": ("multiplicity_max", "genus_max"),
    "cor-62": ("module",),
    "prop-artinian": ("module",),
    "chunk-nchu": ("ideal",),
    "cor-trace-entries": ("ideal",),
    "gorenstein-trace": (),
}

_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_BOUNDS = {"jmax": "jmax", "degree_bound": "degree_bound", "d": "degree_bound",
           "truncate": "truncation", "truncation": "truncation", "n": "truncation"}


@dataclass
class InstanceFile:
    semigroup: object = None
    ideals: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)  # name -> module spec (JSON-able)
    jmax: int = None
    degree_bound: int = None
    truncation: int = None
    checks: list = field(default_factory=list)  # (statement_id, instance dict)


def _fail(msg, line, text, token=None):
    col = text.find(token) + 1 if token and token in text else 1
    raise ParseError(msg, line=line, column=col)


def parse_instance(text):
    inst = InstanceFile()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        try:
            _parse_line(inst, stripped, lineno, raw)
        except ParseError as exc:
            if exc.line is None:
                raise ParseError(str(exc), line=lineno, column=1) from None
            raise
        except (SemitraceError, ValueError) as exc:
            raise ParseError(f"{type(exc).__name__}: {exc}", line=lineno,
                             column=len(raw) - len(raw.lstrip()) + 1) from None
    if inst.semigroup is None:
        raise ParseError("no semigroup declaration (S = <...>)", line=1, column=1)
    _apply_bounds(inst)
    return inst


def _parse_line(inst, line, lineno, raw):
    if re.match(r"check(\s|$)", line):
        _parse_check(inst, line, lineno, raw)
        return
    if re.match(r"module(\s|$)", line):
        m = re.fullmatch(rf"module\s+({_NAME})\s*=\s*(.+)", line)
        if not m:
            _fail("expected: module NAME = residue | free | ideal NAME | quotient [..] "
                  "| syzygy NAME j", lineno, raw)
        _need_semigroup(inst, lineno, raw)
        inst.modules[m.group(1)] = _parse_module(inst, m.group(2).strip(), lineno, raw)
        return
    m = re.fullmatch(rf"({_NAME})\s*=\s*(.+)", line)
    if not m:
        _fail(f"cannot parse {line!r}", lineno, raw)
    name, value = m.group(1), m.group(2).strip()
    if name == "S":
        try:
            inst.semigroup = parse_semigroup(value)
        except ParseError as exc:
            # rebase the position inside the value onto the file line
            start = raw.find(value)
            raise ParseError(exc.message, line=lineno,
                             column=start + (exc.column or 1)) from None
        return
    if name.lower() in _BOUNDS:
        if not value.isdigit() or int(value) <= 0:
            _fail(f"{name} must be a positive integer", lineno, raw, value)
        setattr(inst, _BOUNDS[name.lower()], int(value))
        return
    _need_semigroup(inst, lineno, raw)
    try:
        inst.ideals[name] = parse_ideal(inst.semigroup, value)
    except ParseError as exc:
        _fail(str(exc), lineno, raw, value)


def _need_semigroup(inst, lineno, raw):
    if inst.semigroup is None:
        _fail("semigroup must be declared first", lineno, raw)


def _parse_module(inst, body, lineno, raw):
    parts = body.split(None, 1)
    kind = parts[0]
    rest = parts[1].strip() if len(parts) > 1 else ""
    if kind in ("residue", "k") and not rest:
        return {"kind": "residue"}
    if kind in ("free", "R") and not rest:
        return {"kind": "free", "twists": [0]}
    if kind == "ideal":
        ideal = _lookup_ideal(inst, rest, lineno, raw)
        return {"kind": "ideal", "exponents": list(ideal.exponents)}
    if kind == "quotient":
        ideal = _lookup_ideal(inst, rest, lineno, raw)
        return {"kind": "quotient", "exponents": list(ideal.exponents)}
    if kind == "syzygy":
        bits = rest.split()
        if len(bits) != 2 or not bits[1].isdigit() or int(bits[1]) < 1:
            _fail("expected: syzygy NAME j", lineno, raw, rest or None)
        if bits[0] not in inst.modules:
            _fail(f"undefined module {bits[0]!r}", lineno, raw, bits[0])
        return {"kind": "syzygy", "of": inst.modules[bits[0]], "j": int(bits[1])}
    _fail(f"unknown module kind {kind!r}", lineno, raw, kind)


def _lookup_ideal(inst, token, lineno, raw):
    if token in inst.ideals:
        return inst.ideals[token]
    if re.fullmatch(_NAME, token) and token.lower() not in (
            "conductor", "canonical", "maxideal", "r", "unit", "zero"):
        _fail(f"undefined ideal {token!r}", lineno, raw, token)
    return parse_ideal(inst.semigroup, token)


def _parse_check(inst, line, lineno, raw):
    bits = line.split()
    if len(bits) < 2:
        _fail("expected: check STATEMENT ARGS...", lineno, raw)
    sid, args = bits[1], bits[2:]
    if sid not in STATEMENT_ARGS:
        _fail(f"unknown statement {sid!r}", lineno, raw, sid)
    kinds = STATEMENT_ARGS[sid]
    if len(args) != len(kinds):
        _fail(f"{sid} takes {len(kinds)} argument(s): {' '.join(kinds) or 'none'}",
              lineno, raw, sid)
    out = {}
    if sid not in ("prop-nuco", "question-hyp", "question-qu2"):
        _need_semigroup(inst, lineno, raw)
        out["semigroup"] = list(inst.semigroup.generators)
    for kind, arg in zip(kinds, args):
        if kind == "ideal":
            out["ideal"] = list(_lookup_ideal(inst, arg, lineno, raw).exponents)
        elif kind == "module":
            if arg not in inst.modules:
                _fail(f"undefined module {arg!r}", lineno, raw, arg)
            out["module"] = inst.modules[arg]
        else:
            if not re.fullmatch(r"-?\d+", arg):
                _fail(f"{kind} must be an integer", lineno, raw, arg)
            out[kind] = int(arg)
    inst.checks.append((sid, out))


def _apply_bounds(inst):
    # bounds may be declared anywhere in the file
    for sid, out in inst.checks:
        if "module" in out:
            out["degree_bound"] = inst.degree_bound
            out["truncation"] = inst.truncation
        elif "ideal" in out and sid in ("prop-trentry", "chunk-nchu", "cor-trace-entries"):
            out["degree_bound"] = inst.degree_bound
