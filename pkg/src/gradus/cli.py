"""Problem files: parsing, command dispatch and TSV/JSON reports.

A problem file is line oriented::

    field Q                      # or: field Fp 101
    ring x:1 y:2
    module shifts 0              # optional; default is R itself
    rel x^2                      # component markers e1..er, default e1
    ideal J = y
    cmd samuel I=J nmax=8
    cmd verify all

Every command produces rows ``index <TAB> command <TAB> key <TAB> value`` on
stdout. Timing and notices go to stderr so that stdout is reproducible.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import prod

from .decompose import (
    as_monomial_ideal,
    degree_sum_check,
    minimal_primes,
    multiplicity_sum_check,
    top_components,
)
from .errors import GradusError, ProblemParseError
from .field import Field
from .grmod import ModulePresentation
from .gsop import find_gsop
from .koszul import (
    DEFAULT_SLACK,
    build_koszul,
    euler_poincare_identity_check,
    is_regular_sequence,
    koszul_homology,
)
from .ring import MAX_VARS, Polynomial, Vector, polynomial_ring
from .samuel import samuel_fit
from .series import NEG_INF, dimension_and_degree, format_rational, poincare

U64 = 2**64
VERIFY_CHECKS = ("smoke", "koszul_samuel", "main_theorem", "euler_poincare", "decompose")
COMMAND_KEYS = {
    "hilbert": set(),
    "dim": set(),
    "degree": set(),
    "gsop": {"seed"},
    "samuel": {"I", "nmax"},
    "koszul": {"xs"},
    "decompose": set(),
    "verify": set(),
}
NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
MARKER_RE = re.compile(r"e(\d+)\Z")
TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


# --- data ------------------------------------------------------------------

@dataclass
class Command:
    name: str
    options: dict
    line: int
    text: str
    checks: tuple = ()


@dataclass
class ProblemFile:
    field: Field
    ring: object
    module: ModulePresentation
    ideals: dict
    commands: list


@dataclass
class Report:
    index: int
    command: str
    text: str
    rows: list = dc_field(default_factory=list)
    status: str = "ok"
    elapsed: float = 0.0

    def add(self, key, value):
        self.rows.append((key, str(value)))


# --- polynomial expressions ------------------------------------------------

class _Expr:
    """Recursive-descent evaluator; values are ``{component or None: Polynomial}``."""

    def __init__(self, text, ring, line, offset, rank=None):
        self.ring = ring
        self.line = line
        self.rank = rank
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = TOKEN_RE.match(text, pos)
            kind = "int" if m.group(1) else "name" if m.group(2) else "op"
            start = m.start(m.lastindex)
            self.tokens.append((kind, m.group(m.lastindex), offset + start + 1))
            pos = m.end()
        self.end_col = offset + len(text) + 1
        self.i = 0

    def error(self, msg, col=None):
        if col is None:
            col = self.tokens[self.i][2] if self.i < len(self.tokens) else self.end_col
        return ProblemParseError(msg, self.line, col)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, self.end_col)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> dict:
        if not self.tokens:
            raise self.error("expected a polynomial expression")
        value = self.expr()
        if self.i < len(self.tokens):
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = _add(value, rhs if op == "+" else _neg(rhs))
        return value

    def term(self):
        value = self.factor()
        while self.peek()[1] == "*":
            col = self.take()[2]
            value = self.mul(value, self.factor(), col)
        return value

    def factor(self):
        if self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            inner = self.factor()
            return inner if op == "+" else _neg(inner)
        return self.power()

    def power(self):
        col = self.peek()[2]
        base = self.atom()
        if self.peek()[1] != "^":
            return base
        self.take()
        kind, text, ecol = self.take()
        if kind != "int":
            raise self.error("exponent must be a nonnegative integer", ecol)
        if set(base) != {None}:
            raise self.error("component markers cannot be raised to a power", col)
        return {None: base[None] ** int(text)}

    def atom(self):
        kind, text, col = self.take()
        if kind == "int":
            return {None: self.ring.const(int(text))}
        if kind == "name":
            if text in self.ring.names:
                return {None: self.ring.var(text)}
            m = MARKER_RE.match(text)
            if m:
                k = int(m.group(1))
                if self.rank is None:
                    raise self.error(f"component marker {text} is only allowed in rel lines", col)
                if not 1 <= k <= self.rank:
                    raise self.error(f"component {text} outside e1..e{self.rank}", col)
                return {k - 1: self.ring.const(1)}
            raise self.error(f"unknown variable {text!r}", col)
        if text == "(":
            value = self.expr()
            if self.peek()[1] != ")":
                raise self.error("expected ')'")
            self.take()
            return value
        if text is None:
            raise self.error("unexpected end of expression", col)
        raise self.error(f"unexpected {text!r}", col)

    def mul(self, a, b, col):
        if set(a) != {None} and set(b) != {None}:
            raise self.error("product of two component markers", col)
        if set(a) != {None}:
            a, b = b, a
        s = a[None]
        return {k: s * p for k, p in b.items()}


def _add(a, b):
    out = dict(a)
    for k, p in b.items():
        out[k] = out[k] + p if k in out else p
    return out


def _neg(a):
    return {k: -p for k, p in a.items()}


def parse_polynomial(text, ring, line=None, offset=0) -> Polynomial:
    return _Expr(text, ring, line, offset).parse()[None]


def parse_relation(text, ring, rank, line=None, offset=0) -> Vector:
    value = _Expr(text, ring, line, offset, rank).parse()
    terms = {}
    for k, p in value.items():
        comp = 0 if k is None else k
        for m, c in p.terms.items():
            terms[(comp, m)] = terms.get((comp, m), 0) + c
    return Vector(ring, terms)


# --- problem files ---------------------------------------------------------

def _int(text, line, col, what):
    try:
        return int(text)
    except ValueError:
        raise ProblemParseError(f"{what} must be an integer, got {text!r}", line, col) from None


def _columns(raw):
    """``(word, 1-based column)`` for each whitespace-separated word."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", raw)]


def _parse_options(words, lineno, name):
    options = {}
    allowed = COMMAND_KEYS[name]
    for word, col in words:
        key, eq, value = word.partition("=")
        if not eq:
            raise ProblemParseError(f"expected key=value, got {word!r}", lineno, col)
        if key not in allowed:
            raise ProblemParseError(f"unknown option {key!r} for cmd {name}", lineno, col)
        if key in options:
            raise ProblemParseError(f"option {key!r} given twice", lineno, col)
        options[key] = (value, col + len(key) + 1)
    return options


def parse(text: str) -> ProblemFile:
    """Parse problem text; every error carries its line and column."""
    field = None
    ring = None
    shifts = None
    rel_lines = []
    ideals = {}
    commands = []

    def need_ring(lineno, what):
        if ring is None:
            raise ProblemParseError(f"{what} before the ring line", lineno, 1)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        raw = raw.split("#", 1)[0].rstrip()
        words = _columns(raw)
        if not words:
            continue
        key, _ = words[0]
        rest = words[1:]
        if key == "field":
            if field is not None:
                raise ProblemParseError("field given twice", lineno, 1)
            if ring is not None:
                raise ProblemParseError("field must come before the ring", lineno, 1)
            field = _parse_field(rest, lineno)
        elif key == "ring":
            if ring is not None:
                raise ProblemParseError("ring given twice", lineno, 1)
            ring = _parse_ring(rest, lineno, field or Field())
        elif key == "module":
            need_ring(lineno, "module")
            if shifts is not None:
                raise ProblemParseError("module given twice", lineno, 1)
            if rel_lines:
                raise ProblemParseError("module must come before its relations", lineno, 1)
            if not rest or rest[0][0] != "shifts":
                col = rest[0][1] if rest else len(raw) + 1
                raise ProblemParseError("expected 'module shifts <a1> <a2> ...'", lineno, col)
            if len(rest) < 2:
                raise ProblemParseError("module needs at least one shift", lineno, len(raw) + 1)
            shifts = tuple(_int(w, lineno, c, "shift") for w, c in rest[1:])
        elif key == "rel":
            need_ring(lineno, "rel")
            if shifts is None:
                shifts = (0,)
            offset = words[0][1] + len("rel") - 1
            r = parse_relation(raw[offset:], ring, len(shifts), lineno, offset)
            if r.is_homogeneous(shifts) is None:
                raise ProblemParseError(
                    f"relation is not homogeneous (term degrees {r.degrees(shifts)})", lineno, rest[0][1])
            rel_lines.append(r)
        elif key == "ideal":
            need_ring(lineno, "ideal")
            name, gens = _parse_ideal(raw, words, lineno, ring)
            if name in ideals:
                raise ProblemParseError(f"ideal {name!r} defined twice", lineno, words[1][1])
            ideals[name] = gens
        elif key == "cmd":
            need_ring(lineno, "cmd")
            commands.append(_parse_command(raw, rest, lineno, ideals))
        else:
            raise ProblemParseError(f"unknown keyword {key!r}", lineno, 1)
    if ring is None:
        raise ProblemParseError("missing ring line")
    module = ModulePresentation(ring, shifts or (0,), tuple(rel_lines))
    return ProblemFile(ring.field, ring, module, ideals, commands)


def _parse_field(rest, lineno):
    if not rest:
        raise ProblemParseError("expected 'field Q' or 'field Fp <p>'", lineno, 6)
    kind, col = rest[0]
    if kind == "Q" and len(rest) == 1:
        return Field()
    if kind == "Fp" and len(rest) == 2:
        p = _int(rest[1][0], lineno, rest[1][1], "characteristic")
        try:
            return Field(p)
        except ValueError as exc:
            raise ProblemParseError(str(exc), lineno, rest[1][1]) from None
    raise ProblemParseError("expected 'field Q' or 'field Fp <p>'", lineno, col)


def _parse_ring(rest, lineno, field):
    if not rest:
        raise ProblemParseError("ring needs at least one variable", lineno, 5)
    if len(rest) > MAX_VARS:
        raise ProblemParseError(f"at most {MAX_VARS} variables", lineno, rest[MAX_VARS][1])
    names, weights = [], []
    for word, col in rest:
        name, colon, w = word.partition(":")
        if not colon:
            raise ProblemParseError(f"expected <name>:<weight>, got {word!r}", lineno, col)
        if not NAME_RE.match(name) or MARKER_RE.match(name):
            raise ProblemParseError(f"invalid variable name {name!r}", lineno, col)
        if name in names:
            raise ProblemParseError(f"variable {name!r} declared twice", lineno, col)
        weight = _int(w, lineno, col + len(name) + 1, "weight")
        if weight <= 0:
            raise ProblemParseError("weights must be positive", lineno, col + len(name) + 1)
        names.append(name)
        weights.append(weight)
    return polynomial_ring(tuple(names), tuple(weights), field)


def _parse_ideal(raw, words, lineno, ring):
    m = re.match(r"\s*ideal\s+([A-Za-z_][A-Za-z0-9_]*)\s*=", raw)
    if not m:
        col = words[1][1] if len(words) > 1 else len(raw) + 1
        raise ProblemParseError("expected 'ideal <name> = <poly>, ...'", lineno, col)
    name = m.group(1)
    gens = []
    pos = m.end()
    for piece in raw[pos:].split(","):
        p = parse_polynomial(piece, ring, lineno, pos)
        d = p.is_homogeneous()
        if d is None:
            degs = sorted(ring.weighted_degree(t) for t in p.terms)
            raise ProblemParseError(
                f"generator {p} is not homogeneous (term degrees {degs})", lineno,
                pos + 1 + len(piece) - len(piece.lstrip()))
        gens.append(p)
        pos += len(piece) + 1
    return name, gens


def _parse_command(raw, rest, lineno, ideals):
    if not rest:
        raise ProblemParseError("cmd needs a command name", lineno, len(raw) + 1)
    name, col = rest[0]
    text = raw[rest[0][1] - 1:].strip()
    if name not in COMMAND_KEYS:
        raise ProblemParseError(f"unknown command {name!r}", lineno, col)
    if name == "verify":
        picked = [w for w, _ in rest[1:]] or ["all"]
        for w, c in rest[1:]:
            if w != "all" and w not in VERIFY_CHECKS:
                raise ProblemParseError(f"unknown verify check {w!r}", lineno, c)
        checks = VERIFY_CHECKS if "all" in picked else tuple(dict.fromkeys(picked))
        return Command(name, {}, lineno, text, checks)
    raw_opts = _parse_options(rest[1:], lineno, name)
    options = {}
    for key, (value, vcol) in raw_opts.items():
        if key == "seed":
            seed = _int(value, lineno, vcol, "seed")
            if not 0 <= seed < U64:
                raise ProblemParseError("seed must fit in 64 unsigned bits", lineno, vcol)
            options[key] = seed
        elif key == "nmax":
            nmax = _int(value, lineno, vcol, "nmax")
            if nmax < 1:
                raise ProblemParseError("nmax must be positive", lineno, vcol)
            options[key] = nmax
        else:
            if value not in ideals:
                raise ProblemParseError(f"undefined ideal {value!r}", lineno, vcol)
            options[key] = value
    for required in {"samuel": ("I",), "koszul": ("xs",)}.get(name, ()):
        if required not in options:
            raise ProblemParseError(f"cmd {name} needs {required}=<ideal>", lineno, col)
    return Command(name, options, lineno, text)


# --- rendering -------------------------------------------------------------

def render_value(v) -> str:
    if v is NEG_INF:
        return "-inf"
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    return str(v)


def render_polys(ps) -> str:
    return "[" + ", ".join(str(p) for p in ps) + "]"


def render_univariate(coeffs, var="n") -> str:
    """Low-to-high rational coefficients as a polynomial in ``var``."""
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[d])
        if not c:
            continue
        mag = abs(c)
        body = var if d == 1 else f"{var}^{d}" if d else ""
        if not body:
            term = format_rational(mag)
        elif mag == 1:
            term = body
        else:
            term = f"{format_rational(mag)}*{body}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, term))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


# --- commands --------------------------------------------------------------

class Session:
    """Runs the commands of one problem file, caching shared results."""

    def __init__(self, problem: ProblemFile, seed: int = 0, window: int = DEFAULT_SLACK):
        self.problem = problem
        self.module = problem.module
        self.seed = seed
        self.window = window
        self._cache = {}

    def cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def dimension(self):
        return self.cached("dim", lambda: dimension_and_degree(poincare(self.module)))

    def gsop(self, seed):
        return self.cached(("gsop", seed), lambda: find_gsop(self.module, seed=seed))

    def samuel(self, gens, nmax=None):
        key = ("samuel", tuple(gens), nmax)
        return self.cached(key, lambda: samuel_fit(self.module, list(gens), nmax))

    def koszul(self, xs):
        key = ("koszul", tuple(xs))
        return self.cached(key, lambda: _koszul_pair(self.module, xs, self.window))

    def run(self) -> list:
        reports = []
        for i, cmd in enumerate(self.problem.commands, start=1):
            rep = Report(i, cmd.name, cmd.text)
            start = time.perf_counter()
            try:
                getattr(self, "cmd_" + cmd.name)(cmd, rep)
            except (GradusError, ValueError, ArithmeticError, RuntimeError, AssertionError) as exc:
                rep.status = "error"
                rep.add("error", f"{type(exc).__name__}: {exc}")
            rep.elapsed = time.perf_counter() - start
            reports.append(rep)
        return reports

    def cmd_hilbert(self, cmd, rep):
        P = poincare(self.module)
        rep.add("series", P)
        lo = min(self.module.gen_shifts)
        coeffs = P.expand(lo, lo + 9)
        rep.add("expansion", " ".join(f"{lo + k}:{render_value(c)}" for k, c in enumerate(coeffs)))

    def cmd_dim(self, cmd, rep):
        rep.add("dim", render_value(self.dimension().d1))

    def cmd_degree(self, cmd, rep):
        d = self.dimension()
        rep.add("dim", render_value(d.d1))
        rep.add("degree", render_value(d.degree))

    def cmd_gsop(self, cmd, rep):
        seed = cmd.options.get("seed", self.seed)
        g = self.gsop(seed)
        rep.add("seed", seed)
        rep.add("elements", render_polys(g.elements))
        rep.add("degrees", " ".join(str(e) for e in g.degrees))
        rep.add("certificate", g.certificate)
        rep.add("tries", g.tries)

    def cmd_samuel(self, cmd, rep):
        gens = self.problem.ideals[cmd.options["I"]]
        fit = self.samuel(gens, cmd.options.get("nmax"))
        rep.add("I", render_polys(gens))
        rep.add("table", " ".join(f"{n}:{v}" for n, v in fit.table))
        rep.add("fitted_degree", fit.fitted_degree)
        rep.add("e", fit.e)
        rep.add("polynomial", render_univariate(fit.polynomial))
        rep.add("window", fit.window)

    def cmd_koszul(self, cmd, rep):
        xs = self.problem.ideals[cmd.options["xs"]]
        K, report = self.koszul(xs)
        rep.add("xs", render_polys(xs))
        rep.add("weights", " ".join(str(w) for w in K.weights))
        for p in range(K.u + 1):
            nonzero = [(j, d) for (q, j), d in sorted(report.homology_dims.items()) if q == p and d]
            rep.add(f"H{p}", " ".join(f"{j}:{d}" for j, d in nonzero) or "0")
        rep.add("chi", report.chi)
        rep.add("chi_series", report.chi_series)
        rep.add("window", f"{report.degree_window[0]}..{report.degree_window[1]}")
        rep.add("window_slack", report.window_slack)
        rep.add("retries", report.retries)
        rep.add("regular", str(is_regular_sequence(K, report)).lower())

    def cmd_decompose(self, cmd, rep):
        I = as_monomial_ideal(self.module)
        if I is None:
            raise ValueError("decompose needs a cyclic module R/I with I monomial")
        D = self.dimension().d1
        if D is NEG_INF:
            raise ValueError("decompose is undefined for the zero module")
        names = self.problem.ring.names
        rep.add("minimal_primes", " ".join(_prime_name(S, names) for S in minimal_primes(I)))
        for c in top_components(I, D):
            rep.add("top_prime", f"{_prime_name(c.vars, names)} length={c.local_length} "
                                 f"degree={format_rational(c.quotient_degree)}")
        deg = degree_sum_check(I)
        rep.add("degree_sum", f"{format_rational(deg.lhs)} = {format_rational(deg.rhs)}")

    def cmd_verify(self, cmd, rep):
        failed = False
        for check in cmd.checks:
            status, detail = self.verify_one(check)
            if status != "SKIP":
                failed |= status != "PASS"
            else:
                print(f"notice: verify {check} skipped: {detail}", file=sys.stderr)
            rep.add(check, f"{status}: {detail}")
        if failed:
            rep.status = "fail"

    def verify_one(self, check):
        try:
            return getattr(self, "verify_" + check)()
        except _Skip as skip:
            return "SKIP", str(skip)
        except (GradusError, ValueError, ArithmeticError, RuntimeError, AssertionError) as exc:
            return "ERROR", f"{type(exc).__name__}: {exc}"

    def _pipeline(self):
        """Dimension, GSOP and Samuel fit for the GSOP ideal."""
        d = self.dimension()
        if d.is_zero_module:
            raise _Skip("zero module")
        g = self.gsop(self.seed)
        return d, g, self.samuel(g.elements)

    def verify_smoke(self):
        d, g, fit = self._pipeline()
        ok = d.d1 == len(g) == fit.fitted_degree
        return _verdict(ok, f"d1={d.d1} |gsop|={len(g)} samuel_degree={fit.fitted_degree}")

    def verify_koszul_samuel(self):
        d, g, fit = self._pipeline()
        _, report = self.koszul(g.elements)
        return _verdict(report.chi == fit.e, f"chi={report.chi} e={fit.e}")

    def verify_main_theorem(self):
        d, g, fit = self._pipeline()
        denom = prod(g.degrees)
        ok = d.degree == Fraction(fit.e, denom)
        return _verdict(ok, f"deg={format_rational(d.degree)} e/prod(e_i)={fit.e}/{denom}")

    def verify_euler_poincare(self):
        d, g, fit = self._pipeline()
        _, report = self.koszul(g.elements)
        ok = euler_poincare_identity_check(self.module, g.elements, report)
        return _verdict(ok, f"chi(t)={report.chi_series} weights={list(g.degrees)}")

    def verify_decompose(self):
        I = as_monomial_ideal(self.module)
        if I is None:
            raise _Skip("needs a cyclic module R/I with I monomial")
        d, g, fit = self._pipeline()
        deg = degree_sum_check(I)
        mult = multiplicity_sum_check(I, list(g.elements))
        return _verdict(deg.ok and mult.ok,
                        f"degree {format_rational(deg.lhs)} = {format_rational(deg.rhs)}; "
                        f"multiplicity {format_rational(mult.lhs)} = {format_rational(mult.rhs)}")


class _Skip(Exception):
    pass


def _verdict(ok, detail):
    return ("PASS" if ok else "FAIL"), detail


def _prime_name(S, names) -> str:
    return "(" + ",".join(names[i] for i in S) + ")"


def _koszul_pair(M, xs, window):
    K = build_koszul(M, xs)
    return K, koszul_homology(K, window_slack=window)


# --- output ----------------------------------------------------------------

def _cell(s: str) -> str:
    return s.replace("\t", " ").replace("\n", " ")


def render_tsv(reports) -> str:
    lines = []
    for rep in reports:
        lines.append(f"{rep.index}\t{rep.command}\tcommand\t{_cell(rep.text)}")
        for key, value in rep.rows:
            lines.append(f"{rep.index}\t{rep.command}\t{key}\t{_cell(value)}")
        lines.append(f"{rep.index}\t{rep.command}\tstatus\t{rep.status}")
    return "\n".join(lines) + ("\n" if lines else "")


def render_json(reports, seed, window) -> str:
    payload = {
        "seed": seed,
        "window_slack": window,
        "reports": [
            {"index": r.index, "command": r.command, "text": r.text,
             "status": r.status, "results": [list(kv) for kv in r.rows]}
            for r in reports
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def run(problem: ProblemFile, seed: int = 0, window: int = DEFAULT_SLACK) -> list:
    return Session(problem, seed, window).run()


def _u64(text):
    v = int(text)
    if not 0 <= v < U64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("window must be positive")
    return v


def build_parser():
    parser = argparse.ArgumentParser(prog="gradus", description="Graded module invariants.")
    sub = parser.add_subparsers(dest="action", required=True)
    run_p = sub.add_parser("run", help="run the commands of a problem file")
    run_p.add_argument("file")
    run_p.add_argument("--json", action="store_true", help="emit JSON instead of TSV")
    run_p.add_argument("--seed", type=_u64, default=0, help="default GSOP search seed")
    run_p.add_argument("--window", type=_positive, default=DEFAULT_SLACK,
                       help="Koszul homology window slack")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
        problem = parse(text)
    except (OSError, ProblemParseError, GradusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    reports = run(problem, args.seed, args.window)
    for rep in reports:
        print(f"[{rep.index}] {rep.command}: {rep.elapsed:.3f}s", file=sys.stderr)
    out = render_json(reports, args.seed, args.window) if args.json else render_tsv(reports)
    sys.stdout.write(out)
    return 1 if any(r.status != "ok" for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
