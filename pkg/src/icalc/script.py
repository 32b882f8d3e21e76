"""The ideal-calculus script language.

Line-oriented statements drive every operation the workbench offers:

    ring R = poly(p=2; X, Y, Z) / ideal(X*Y, X*Z) with primes [ideal(X), ideal(Y, Z)]
    let I = ideal(Y, X - Z)
    check sop(I)
    report closedness(ideal(0), ne)

One ambient ring is active per script; the declaration's / clause
establishes the quotient context and its optional primes list feeds the
decomposition machinery.  Everything after '#' on a line is a comment.

Script-level ideal values track two forms.  The raw generator tuple, as
entered, feeds the count-sensitive operations (sop, regular, the
theorem verdicts).  The handle, the entered ideal joined with the
defining ideal, feeds equality, membership and the algebraic operators,
which is what reading generators in the presented ring means.  Derived
values (meet, colon, bracket, dc, ker) take their reduced basis as the
raw form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .errors import IcalcError, ParseError, ScriptError
from .field import PrimeField
from .groebner import normal_form
from .ideals import Ideal, ring_map_kernel
from .monomials import MonomialOrder
from .poly import Poly, PolyRing, parse_poly_tokens, tokenize
from .rings import is_regular_sequence, is_system_of_parameters, make_ring
from .closure import (
    NE,
    TIGHT,
    bounded_frobenius_check,
    closedness_necessary_test,
    colon_capture_report,
    construct_ne_test_data,
    decomposition_closure,
    structural_verdict,
    theorem_contain_verdict,
)

CHECK_KINDS = ("equal", "member", "sop", "regular")
REPORT_KINDS = ("closedness", "contain", "structural", "capture", "netest", "frobenius")


# ---------------------------------------------------------------- AST

@dataclass(frozen=True)
class EIdeal:
    gens: tuple  # canonical generator texts


@dataclass(frozen=True)
class EName:
    name: str


@dataclass(frozen=True)
class ESum:
    left: object
    right: object


@dataclass(frozen=True)
class EProd:
    left: object
    right: object


@dataclass(frozen=True)
class EMeet:
    left: object
    right: object


@dataclass(frozen=True)
class EColon:
    left: object
    right: object


@dataclass(frozen=True)
class EBracket:
    arg: object
    e: int


@dataclass(frozen=True)
class EDc:
    arg: object
    mode: str


@dataclass(frozen=True)
class EKer:
    targets: tuple          # target variable names
    images: tuple           # (source variable, image text) pairs


@dataclass(frozen=True)
class RingDecl:
    name: str
    p: int
    variables: tuple
    defining: object        # expr or None
    primes: tuple           # exprs, possibly empty
    line: int = field(compare=False)


@dataclass(frozen=True)
class LetStmt:
    name: str
    expr: object
    line: int = field(compare=False)


@dataclass(frozen=True)
class CheckStmt:
    kind: str
    args: tuple             # exprs and ("poly", text) entries
    line: int = field(compare=False)


@dataclass(frozen=True)
class ReportStmt:
    kind: str
    args: tuple
    flags: tuple
    line: int = field(compare=False)


@dataclass(frozen=True)
class Script:
    statements: tuple


# ---------------------------------------------------------------- parsing

def _scan(text: str, line_no: int):
    """Tokenize one line, keeping (kind, value) pairs poly-compatible."""
    try:
        return tokenize(text)
    except ParseError as exc:
        raise ScriptError(f"line {line_no}: {exc}") from exc


class _LineParser:
    def __init__(self, toks, line_no):
        self.toks = toks
        self.pos = 0
        self.line = line_no

    def error(self, expected):
        found = (
            repr(self.toks[self.pos][1])
            if self.pos < len(self.toks)
            else "end of line"
        )
        raise ScriptError(
            f"line {self.line}, token {self.pos + 1}: expected {expected}, found {found}"
        )

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op):
        if self.peek() != ("op", op):
            self.error(f"'{op}'")
        self.pos += 1

    def expect_name(self, what="a name"):
        kind, value = self.peek()
        if kind != "name":
            self.error(what)
        self.pos += 1
        return value

    def expect_int(self):
        kind, value = self.peek()
        if kind != "int":
            self.error("an integer")
        self.pos += 1
        return value

    def expect_keyword(self, word):
        if self.peek() != ("name", word):
            self.error(f"'{word}'")
        self.pos += 1

    def at_end(self):
        return self.pos >= len(self.toks)

    # polynomial spans run to the next ',' or ')' since the poly
    # grammar itself has no parentheses
    def poly_text(self):
        start = self.pos
        while self.pos < len(self.toks):
            if self.toks[self.pos][0] == "op" and self.toks[self.pos][1] in ",)":
                break
            self.pos += 1
        if self.pos == start:
            self.error("a polynomial")
        return _toks_text(self.toks[start:self.pos])

    def parse_expr(self):
        node = self.parse_prod()
        while self.peek() == ("op", "+"):
            self.pos += 1
            node = ESum(node, self.parse_prod())
        return node

    def parse_prod(self):
        node = self.parse_atom()
        while self.peek() == ("op", "*"):
            self.pos += 1
            node = EProd(node, self.parse_atom())
        return node

    def parse_atom(self):
        kind, value = self.peek()
        if kind != "name":
            self.error("an ideal expression")
        if value == "ideal":
            self.pos += 1
            self.expect_op("(")
            gens = [self.poly_text()]
            while self.peek() == ("op", ","):
                self.pos += 1
                gens.append(self.poly_text())
            self.expect_op(")")
            return EIdeal(tuple(gens))
        if value in ("meet", "colon"):
            self.pos += 1
            self.expect_op("(")
            a = self.parse_expr()
            self.expect_op(",")
            b = self.parse_expr()
            self.expect_op(")")
            return EMeet(a, b) if value == "meet" else EColon(a, b)
        if value == "bracket":
            self.pos += 1
            self.expect_op("(")
            a = self.parse_expr()
            self.expect_op(",")
            e = self.expect_int()
            self.expect_op(")")
            return EBracket(a, e)
        if value == "dc":
            self.pos += 1
            self.expect_op("(")
            a = self.parse_expr()
            self.expect_op(",")
            mode = self.expect_name("'tight' or 'ne'")
            if mode not in (TIGHT, NE):
                self.error("'tight' or 'ne'")
            self.expect_op(")")
            return EDc(a, mode)
        if value == "ker":
            self.pos += 1
            self.expect_op("(")
            targets = [self.expect_name("a target variable")]
            while self.peek() == ("op", ","):
                self.pos += 1
                targets.append(self.expect_name("a target variable"))
            self.expect_op(";")
            images = []
            while True:
                src = self.expect_name("a source variable")
                self.expect_op("->")
                start = self.pos
                while self.pos < len(self.toks):
                    if self.toks[self.pos][0] == "op" and self.toks[self.pos][1] in ",)":
                        break
                    self.pos += 1
                if self.pos == start:
                    self.error("an image polynomial")
                images.append((src, _toks_text(self.toks[start:self.pos])))
                if self.peek() == ("op", ","):
                    self.pos += 1
                    continue
                break
            self.expect_op(")")
            return EKer(tuple(targets), tuple(images))
        self.pos += 1
        return EName(value)


def _toks_text(toks):
    """Canonical text for a token run; parsing it back gives the same run."""
    parts = []
    for kind, value in toks:
        if kind == "int":
            parts.append((str(value), "tight"))
        elif kind == "name":
            parts.append((value, "tight"))
        elif value in "+-":
            parts.append((value, "spaced"))
        elif value == "->":
            parts.append((value, "spaced"))
        else:
            parts.append((value, "tight"))
    out = []
    for i, (text, style) in enumerate(parts):
        if i and style == "spaced":
            out.append(" ")
        elif i and parts[i - 1][1] == "spaced":
            out.append(" ")
        out.append(text)
    return "".join(out)


def parse_script(source: str) -> Script:
    """Parse the line-oriented script grammar; first error wins."""
    statements = []
    seen_names = set()
    for line_no, raw_line in enumerate(source.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = _scan(line, line_no)
        lp = _LineParser(toks, line_no)
        head = lp.expect_name("'ring', 'let', 'check' or 'report'")
        if head == "ring":
            statements.append(_parse_ring(lp, seen_names))
        elif head == "let":
            statements.append(_parse_let(lp, seen_names))
        elif head == "check":
            statements.append(_parse_check(lp, seen_names))
        elif head == "report":
            statements.append(_parse_report(lp, seen_names))
        else:
            lp.pos -= 1
            lp.error("'ring', 'let', 'check' or 'report'")
        if not lp.at_end():
            lp.error("end of line")
    return Script(tuple(statements))


def _check_fresh(name, seen, line):
    if name in seen:
        raise ScriptError(f"line {line}: duplicate binding of {name!r}")
    seen.add(name)


def _check_bound(expr, seen, line):
    if isinstance(expr, EName):
        if expr.name not in seen:
            raise ScriptError(f"line {line}: unknown identifier {expr.name!r}")
    elif isinstance(expr, (ESum, EProd, EMeet, EColon)):
        _check_bound(expr.left, seen, line)
        _check_bound(expr.right, seen, line)
    elif isinstance(expr, (EBracket, EDc)):
        _check_bound(expr.arg, seen, line)


def _parse_ring(lp, seen):
    name = lp.expect_name("a ring name")
    _check_fresh(name, seen, lp.line)
    lp.expect_op("=")
    lp.expect_keyword("poly")
    lp.expect_op("(")
    lp.expect_keyword("p")
    lp.expect_op("=")
    p = lp.expect_int()
    lp.expect_op(";")
    variables = [lp.expect_name("a variable name")]
    while lp.peek() == ("op", ","):
        lp.pos += 1
        variables.append(lp.expect_name("a variable name"))
    lp.expect_op(")")
    defining = None
    primes = ()
    if lp.peek() == ("op", "/"):
        lp.pos += 1
        defining = lp.parse_expr()
        _check_bound(defining, seen, lp.line)
        if lp.peek() == ("name", "with"):
            lp.pos += 1
            lp.expect_keyword("primes")
            lp.expect_op("[")
            prime_list = [lp.parse_expr()]
            while lp.peek() == ("op", ","):
                lp.pos += 1
                prime_list.append(lp.parse_expr())
            lp.expect_op("]")
            for e in prime_list:
                _check_bound(e, seen, lp.line)
            primes = tuple(prime_list)
    return RingDecl(name, p, tuple(variables), defining, primes, lp.line)


def _parse_let(lp, seen):
    name = lp.expect_name("a binding name")
    lp.expect_op("=")
    expr = lp.parse_expr()
    _check_bound(expr, seen, lp.line)
    _check_fresh(name, seen, lp.line)
    return LetStmt(name, expr, lp.line)


def _parse_check(lp, seen):
    kind = lp.expect_name("a check kind")
    if kind not in CHECK_KINDS:
        lp.pos -= 1
        lp.error("one of " + ", ".join(CHECK_KINDS))
    lp.expect_op("(")
    if kind == "equal":
        a = lp.parse_expr()
        lp.expect_op(",")
        b = lp.parse_expr()
        args = (a, b)
    elif kind == "member":
        text = lp.poly_text()
        lp.expect_op(",")
        args = (("poly", text), lp.parse_expr())
    else:
        args = (lp.parse_expr(),)
    lp.expect_op(")")
    for arg in args:
        if not isinstance(arg, tuple):
            _check_bound(arg, seen, lp.line)
    return CheckStmt(kind, args, lp.line)


def _parse_report(lp, seen):
    kind = lp.expect_name("a report kind")
    if kind not in REPORT_KINDS:
        lp.pos -= 1
        lp.error("one of " + ", ".join(REPORT_KINDS))
    lp.expect_op("(")
    flags = ()
    if kind == "closedness":
        a = lp.parse_expr()
        lp.expect_op(",")
        mode = lp.expect_name("'tight' or 'ne'")
        if mode not in (TIGHT, NE):
            lp.error("'tight' or 'ne'")
        args = (a, mode)
    elif kind in ("contain", "capture"):
        args = (lp.parse_expr(),)
    elif kind == "structural":
        a = lp.parse_expr()
        lp.expect_op(",")
        b = lp.parse_expr()
        args = (a, b)
        if lp.peek() == ("op", ","):
            lp.pos += 1
            lp.expect_keyword("unmixed")
            flags = ("unmixed",)
    elif kind == "netest":
        args = ()
    else:  # frobenius
        a = lp.parse_expr()
        lp.expect_op(",")
        x = lp.poly_text()
        lp.expect_op(",")
        c = lp.poly_text()
        args = (a, ("poly", x), ("poly", c))
    lp.expect_op(")")
    for arg in args:
        if not isinstance(arg, (tuple, str)):
            _check_bound(arg, seen, lp.line)
    return ReportStmt(kind, args, flags, lp.line)


# ---------------------------------------------------------------- printing

def _expr_text(expr) -> str:
    if isinstance(expr, EIdeal):
        return "ideal(%s)" % ", ".join(expr.gens)
    if isinstance(expr, EName):
        return expr.name
    if isinstance(expr, ESum):
        return f"{_expr_text(expr.left)} + {_expr_text(expr.right)}"
    if isinstance(expr, EProd):
        return f"{_expr_text(expr.left)}*{_expr_text(expr.right)}"
    if isinstance(expr, EMeet):
        return f"meet({_expr_text(expr.left)}, {_expr_text(expr.right)})"
    if isinstance(expr, EColon):
        return f"colon({_expr_text(expr.left)}, {_expr_text(expr.right)})"
    if isinstance(expr, EBracket):
        return f"bracket({_expr_text(expr.arg)}, {expr.e})"
    if isinstance(expr, EDc):
        return f"dc({_expr_text(expr.arg)}, {expr.mode})"
    if isinstance(expr, EKer):
        pieces = ", ".join(f"{src} -> {text}" for src, text in expr.images)
        return "ker(%s; %s)" % (", ".join(expr.targets), pieces)
    raise TypeError(f"not an expression: {expr!r}")


def _stmt_text(stmt) -> str:
    if isinstance(stmt, RingDecl):
        head = "ring %s = poly(p=%d; %s)" % (
            stmt.name,
            stmt.p,
            ", ".join(stmt.variables),
        )
        if stmt.defining is not None:
            head += " / " + _expr_text(stmt.defining)
            if stmt.primes:
                head += " with primes [%s]" % ", ".join(
                    _expr_text(e) for e in stmt.primes
                )
        return head
    if isinstance(stmt, LetStmt):
        return f"let {stmt.name} = {_expr_text(stmt.expr)}"
    if isinstance(stmt, CheckStmt):
        parts = [
            arg[1] if isinstance(arg, tuple) and arg[0] == "poly" else _expr_text(arg)
            for arg in stmt.args
        ]
        return "check %s(%s)" % (stmt.kind, ", ".join(parts))
    if isinstance(stmt, ReportStmt):
        parts = []
        for arg in stmt.args:
            if isinstance(arg, str):
                parts.append(arg)
            elif isinstance(arg, tuple) and arg[0] == "poly":
                parts.append(arg[1])
            else:
                parts.append(_expr_text(arg))
        parts.extend(stmt.flags)
        return "report %s(%s)" % (stmt.kind, ", ".join(parts))
    raise TypeError(f"not a statement: {stmt!r}")


def print_script(script: Script) -> str:
    """Canonical text; parsing it back yields an identical AST."""
    return "\n".join(_stmt_text(s) for s in script.statements) + "\n"


# ---------------------------------------------------------------- evaluation

@dataclass(frozen=True)
class RunOptions:
    order: str = "grevlex"
    emax: int = 5
    seed: int = 0


@dataclass(frozen=True)
class ScriptIdeal:
    """A script-level ideal value: entered generators plus quotient handle."""

    raw: tuple
    handle: Ideal


@dataclass(frozen=True)
class ReportDocument:
    """Everything a script run produced, ready for text or JSON emission."""

    scenario: str
    version: str
    seed: int
    order: str
    emax: int
    checks: tuple           # (label, passed, detail or None) triples
    entries: tuple          # (label, kind, payload) triples

    @property
    def all_checks_pass(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def to_json_dict(self):
        checks = []
        for label, passed, detail in self.checks:
            record = {"label": label, "pass": passed}
            if detail is not None:
                record["detail"] = detail
            checks.append(record)
        return {
            "scenario": self.scenario,
            "version": self.version,
            "seed": self.seed,
            "order": self.order,
            "emax": self.emax,
            "checks": checks,
            "entries": [
                {"label": label, "kind": kind, "data": payload.to_json_dict()}
                for label, kind, payload in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"scenario {self.scenario} (seed {self.seed}, order {self.order})"]
        for label, passed, detail in self.checks:
            lines.append(f"  {'ok  ' if passed else 'FAIL'} {label}")
            if detail is not None:
                lines.append(f"       {detail}")
        for label, kind, payload in self.entries:
            lines.append(f"  -- {label}")
            lines.extend("     " + text for text in _entry_lines(kind, payload))
        return "\n".join(lines) + "\n"


def _basis_text(ideal: Ideal) -> str:
    if not ideal.groebner:
        return "(0)"
    return "(%s)" % ", ".join(str(g) for g in ideal.groebner)


def _entry_lines(kind, payload):
    data = payload.to_json_dict()
    if kind in ("closedness", "contain", "structural"):
        out = [f"status: {data['status']}"]
        if "witness" in data:
            out.append(f"witness: {data['witness']}")
        out.append("bound: (%s)" % ", ".join(data["dc_generators"]))
        if data["citations"]:
            out.append("citations: " + ", ".join(data["citations"]))
        out.extend("note: " + n for n in data["notes"])
        return out
    if kind == "frobenius":
        held = ", ".join(f"e={e}:{'ok' if h else 'no'}" for e, h in data["checks"])
        return [f"verdict: {data['verdict']} ({held})"]
    if kind == "netest":
        out = [
            "pairs: " + "; ".join(f"c={c}, d={d}" for c, d in data["pairs"]),
            f"exponent: {data['qprime_exponent']}",
            f"c: {data['c']} (in R-bullet: {data['c_in_r_bullet']})",
        ]
        out.extend("note: " + n for n in data["notes"])
        return out
    if kind == "capture":
        out = []
        for row in data["rows"]:
            out.append(
                "k=%d: colon=(%s) in_ideal=%s tight=%s ne=%s"
                % (
                    row["k"],
                    ", ".join(row["colon_generators"]),
                    row["in_ideal"],
                    row["in_tight_bound"],
                    row["in_ne_bound"],
                )
            )
        out.extend("note: " + n for n in data["notes"])
        return out
    raise ValueError(f"unknown entry kind {kind!r}")


class Evaluator:
    """Single-pass statement interpreter; one per script run."""

    def __init__(self, options: RunOptions):
        self.options = options
        self.ring = None
        self.qring = None
        self.defining = None
        self.bindings = {}
        self.checks = []
        self.entries = []

    def fail(self, stmt, message):
        raise ScriptError(f"line {stmt.line}: {_stmt_text(stmt)}: {message}")

    def run(self, script: Script, scenario: str) -> ReportDocument:
        for stmt in script.statements:
            try:
                self._execute(stmt)
            except ScriptError:
                raise
            except IcalcError as exc:
                raise ScriptError(
                    f"line {stmt.line}: {_stmt_text(stmt)}: {exc}"
                ) from exc
        return ReportDocument(
            scenario=scenario,
            version=__version__,
            seed=self.options.seed,
            order=self.options.order,
            emax=self.options.emax,
            checks=tuple(self.checks),
            entries=tuple(self.entries),
        )

    def _execute(self, stmt):
        if isinstance(stmt, RingDecl):
            self._declare_ring(stmt)
        elif isinstance(stmt, LetStmt):
            self._require_ring(stmt)
            self.bindings[stmt.name] = self._eval(stmt.expr)
        elif isinstance(stmt, CheckStmt):
            self._require_ring(stmt)
            passed, detail = self._run_check(stmt)
            self.checks.append((_stmt_text(stmt), passed, detail))
        else:
            self._require_ring(stmt)
            kind, payload = self._run_report(stmt)
            self.entries.append((_stmt_text(stmt), kind, payload))

    def _require_ring(self, stmt):
        if self.ring is None:
            self.fail(stmt, "no ring declared yet")

    def _declare_ring(self, stmt):
        if self.ring is not None:
            self.fail(stmt, "only one ring declaration per script")
        if self.options.order == "lex":
            order = MonomialOrder.lex()
        else:
            order = MonomialOrder.grevlex()
        self.ring = PolyRing(PrimeField(stmt.p), stmt.variables, order)
        self.defining = Ideal(self.ring, ())
        if stmt.defining is not None:
            self.defining = self._eval(stmt.defining).handle
        primes = None
        if stmt.primes:
            primes = tuple(self._eval(e).handle for e in stmt.primes)
        self.qring = make_ring(self.ring, self.defining, primes=primes)

    def _parse_gen(self, text):
        toks = tokenize(text)
        poly, i = parse_poly_tokens(self.ring, toks, 0)
        if i != len(toks):
            raise ParseError(f"trailing tokens in polynomial {text!r}")
        return poly

    def _plain(self, value: ScriptIdeal) -> Ideal:
        return Ideal(self.ring, value.raw)

    def _derived(self, ideal: Ideal) -> ScriptIdeal:
        return ScriptIdeal(raw=ideal.groebner, handle=ideal + self.defining)

    def _eval(self, expr) -> ScriptIdeal:
        if isinstance(expr, EIdeal):
            gens = tuple(
                g for g in (self._parse_gen(t) for t in expr.gens) if not g.is_zero
            )
            return ScriptIdeal(
                raw=gens, handle=Ideal(self.ring, gens) + self.defining
            )
        if isinstance(expr, EName):
            return self.bindings[expr.name]
        if isinstance(expr, ESum):
            a, b = self._eval(expr.left), self._eval(expr.right)
            return ScriptIdeal(raw=a.raw + b.raw, handle=a.handle + b.handle)
        if isinstance(expr, EProd):
            a, b = self._eval(expr.left), self._eval(expr.right)
            raw = tuple(f * g for f in a.raw for g in b.raw)
            return ScriptIdeal(
                raw=raw, handle=Ideal(self.ring, raw) + self.defining
            )
        if isinstance(expr, EMeet):
            a, b = self._eval(expr.left), self._eval(expr.right)
            return self._derived(a.handle.intersect(b.handle))
        if isinstance(expr, EColon):
            a, b = self._eval(expr.left), self._eval(expr.right)
            return self._derived(a.handle.colon(b.handle))
        if isinstance(expr, EBracket):
            a = self._eval(expr.arg)
            lifted = (
                self._plain(a).bracket_power(expr.e)
                + self.defining.bracket_power(expr.e)
                + self.defining
            )
            return self._derived(lifted)
        if isinstance(expr, EDc):
            a = self._eval(expr.arg)
            return self._derived(
                decomposition_closure(self.qring, self._plain(a), expr.mode)
            )
        if isinstance(expr, EKer):
            target = PolyRing(
                self.ring.field, expr.targets, MonomialOrder.grevlex()
            )
            images = {}
            for src, text in expr.images:
                toks = tokenize(text)
                poly, i = parse_poly_tokens(target, toks, 0)
                if i != len(toks):
                    raise ParseError(f"trailing tokens in image {text!r}")
                images[src] = poly
            kernel = ring_map_kernel(self.ring, target, images)
            return ScriptIdeal(
                raw=kernel.generators, handle=kernel + self.defining
            )
        raise TypeError(f"not an expression: {expr!r}")

    def _run_check(self, stmt):
        if stmt.kind == "equal":
            a, b = (self._eval(e) for e in stmt.args)
            if a.handle == b.handle:
                return True, None
            return False, "left = %s; right = %s" % (
                _basis_text(a.handle),
                _basis_text(b.handle),
            )
        if stmt.kind == "member":
            poly = self._parse_gen(stmt.args[0][1])
            handle = self._eval(stmt.args[1]).handle
            if handle.contains(poly):
                return True, None
            return False, f"normal form {normal_form(poly, handle.groebner)}"
        if stmt.kind == "sop":
            value = self._eval(stmt.args[0])
            result = is_system_of_parameters(self.qring, value.raw)
            if result.is_sop:
                return True, None
            return False, (
                f"quotient dimension {result.quotient_dim}; "
                f"count matches dimension: {result.count_matches_dim}"
            )
        value = self._eval(stmt.args[0])
        result = is_regular_sequence(self.qring, value.raw)
        if result.regular:
            return True, None
        if not result.proper:
            return False, "the sequence generates the unit ideal"
        return False, f"first zerodivisor at step {result.first_failure}"

    def _run_report(self, stmt):
        if stmt.kind == "closedness":
            value = self._eval(stmt.args[0])
            report = closedness_necessary_test(
                self.qring, self._plain(value), stmt.args[1]
            )
            return "closedness", report
        if stmt.kind == "contain":
            value = self._eval(stmt.args[0])
            return "contain", theorem_contain_verdict(self.qring, self._plain(value))
        if stmt.kind == "structural":
            p_value = self._eval(stmt.args[0])
            i_value = self._eval(stmt.args[1])
            report = structural_verdict(
                self.ring,
                self._plain(p_value),
                i_value.raw,
                unmixed_asserted="unmixed" in stmt.flags,
                seed=self.options.seed,
            )
            return "structural", report
        if stmt.kind == "capture":
            value = self._eval(stmt.args[0])
            return "capture", colon_capture_report(self.qring, value.raw)
        if stmt.kind == "netest":
            return "netest", construct_ne_test_data(self.qring)
        value = self._eval(stmt.args[0])
        x = self._parse_gen(stmt.args[1][1])
        c = self._parse_gen(stmt.args[2][1])
        report = bounded_frobenius_check(
            self.qring, self._plain(value), x, c, 0, self.options.emax
        )
        return "frobenius", report


def run_script(script: Script, options: RunOptions = RunOptions(), scenario: str = "script") -> ReportDocument:
    """Evaluate a parsed script and collect its report document."""
    return Evaluator(options).run(script, scenario)
