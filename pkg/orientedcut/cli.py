"""Command-line session: REPL, batch scripts and the ``orc`` entry point."""

import argparse
import sys

from . import __version__
from .almost import AlmostNatural, AlmostRational, stabilization_probe
from .config import FORMATS, Settings
from .continuity import NATURAL, REAL, Composition, ConstantMap, IDENTITY, ShiftMap, ThresholdMap
from .core import OrcCommand, configure_logging
from .corpus import builtin_pairs, load_corpus, pairs
from .errors import CommandError, OrcError, ValidationError
from .expression import (Evaluator, SyntaxCall, SyntaxList, SyntaxName, SyntaxRational, parse, parse_syntax,
                         render, validate)
from .hyperfield import GridProbe, check_add, check_mul, psi_member
from .orc import Orc
from .oriented import OrientedReal, eq_o, le, lt, lt_rational
from .rational import parse_rational, render_rational
from .records import dump_record, write_record
from .sequences import LazySequence
from .topology import d_check, interval_open_member, lt_signature, oriented_nbhd_member

try:
    import readline  # noqa: F401

    is_rl_available = True
except ModuleNotFoundError:
    is_rl_available = False

PROMPT = "orc> "
SHOW_TEXT_LENGTH = 8

HELP = """\
let <name> = <expr>              bind a value
sample <expr> <n>                n-th term
show <expr>                      leading terms (--format text|records)
cmp <e1> <e2>                    lt, le and eq verdicts
member <p/q> <e>                 p/q lies in the cut of e
psi <p/q> <e>                    p/q lies in the image of e
interval <e> <a> <b>             e lies in (a, b]
d <e1> <e2> <p/q>                distance below p/q
sig <e> [<e>,...]                signature against a reference list
nbhd <e1> <e2> [<e>,...]         e2 lies in the neighbourhood of e1
stab <e>                         eventual value of an almost number
relation add|mul <e1> <e2> <e3> <lo> <hi> <step>
ocp <descriptor>                 modulus of a map into almost naturals
totalc <descriptor> <n>          continuity harness on the corpus pairs
dump <name> <file>               write a sampled-prefix record
help, quit"""


class QuitSession(Exception):
    pass


def split_args(text):
    """Split on whitespace outside brackets."""
    parts, depth, current = [], 0, []
    for char in text:
        if char in "([":
            depth += 1
        elif char in ")]":
            depth -= 1
        if char.isspace() and depth <= 0:
            if current:
                parts.append("".join(current))
                current = []
            continue
        current.append(char)
    if current:
        parts.append("".join(current))
    return parts


def _descriptor(syntax):
    if isinstance(syntax, SyntaxName) and syntax.name == "identity":
        return IDENTITY
    if not isinstance(syntax, SyntaxCall):
        raise ValidationError("expected a map descriptor", syntax.offset)
    args = syntax.args
    if syntax.name == "phi" and len(args) == 1 and isinstance(args[0], SyntaxList):
        values = [_literal(item) for item in args[0].items]
        for item, (a, b) in zip(args[0].items[1:], zip(values, values[1:])):
            if a >= b:
                raise ValidationError("thresholds must be strictly ascending", item.offset)
        return ThresholdMap(tuple(values))
    if syntax.name == "const" and len(args) == 1:
        inner = args[0]
        if isinstance(inner, SyntaxCall) and inner.name == "hat" and len(inner.args) == 1:
            return ConstantMap(_literal(inner.args[0]), REAL)
        return ConstantMap(_literal(inner), NATURAL)
    if syntax.name == "shift" and len(args) == 1:
        return ShiftMap(_literal(args[0]))
    if syntax.name == "grid" and len(args) == 2:
        n = _literal(args[0])
        if n.denominator != 1 or n < 0:
            raise ValidationError("grid resolution must be a natural number", args[0].offset)
        return Composition(int(n), _descriptor(args[1]))
    raise ValidationError(f"unknown map descriptor {syntax.name!r}", syntax.offset)


def _literal(syntax):
    if not isinstance(syntax, SyntaxRational):
        raise ValidationError("expected a rational literal", syntax.offset)
    return syntax.value


def parse_descriptor(source):
    """phi([d,...]), const(k), const(hat(c)), shift(c), identity or grid(n, descriptor)."""
    return _descriptor(parse_syntax(source))


def render_verdict(verdict):
    if verdict.note:
        return f"{verdict} ({verdict.note})"
    return str(verdict)


def render_reference(reference):
    return "E = (" + ", ".join(repr(delta) for delta in reference) + ")"


class Session(OrcCommand):
    """
    One interactive or batch session: named values plus the configured
    fuel, grid, format and workers.
    """

    def __init__(self, settings=None, out=None):
        super().__init__(settings)
        self.out = out if out is not None else sys.stdout
        self.env = {}
        self.evaluator = Evaluator(self.env, self.settings)
        self.orc = Orc(self.settings)

    def value(self, source):
        return self.evaluator.evaluate(parse(source))

    def sampled(self, source):
        value = self.value(source)
        if not isinstance(value, LazySequence):
            raise CommandError(f"{source} is a rational, not a sequence")
        return value

    def oriented(self, source):
        value = self.value(source)
        if not isinstance(value, OrientedReal):
            raise CommandError(f"{source} is not an oriented real")
        return value

    def reference(self, source):
        syntax = parse_syntax(source)
        if not isinstance(syntax, SyntaxList):
            raise ValidationError("expected a reference list [e, ...]", syntax.offset)
        values = [self.evaluator.evaluate(validate(item)) for item in syntax.items]
        for item, value in zip(syntax.items, values):
            if not isinstance(value, OrientedReal):
                raise ValidationError("reference entries must be oriented reals", item.offset)
        return values

    def corpus_pairs(self):
        if self.settings.corpus:
            return pairs(load_corpus(self.settings.corpus, self.oriented))
        return builtin_pairs()

    def execute(self, line):
        """Run one command line and return its output text (None for blank lines)."""
        text = line.strip()
        if not text or text.startswith("#"):
            return None
        name, _, rest = text.partition(" ")
        handler = getattr(self, "command_" + name, None)
        if handler is None:
            raise CommandError(f"unknown command {name!r}")
        return handler(rest.strip())

    def _args(self, rest, count, usage):
        args = split_args(rest)
        if len(args) != count:
            raise CommandError(f"usage: {usage}")
        return args

    def command_help(self, rest):
        return HELP

    def command_quit(self, rest):
        raise QuitSession()

    command_exit = command_quit

    def command_let(self, rest):
        name, sep, source = rest.partition("=")
        name = name.strip()
        if not sep or not name.isidentifier():
            raise CommandError("usage: let <name> = <expr>")
        expression = parse(source.strip())
        self.env[name] = self.evaluator.evaluate(expression)
        return f"{name} = {render(expression)}"

    def command_sample(self, rest):
        source, n = self._args(rest, 2, "sample <expr> <n>")
        value = self.sampled(source)
        index = parse_rational(n)
        if index.denominator != 1 or index < 0:
            raise CommandError("sample index must be a natural number")
        item = value.at(int(index))
        return str(item) if isinstance(value, AlmostNatural) else render_rational(item)

    def command_show(self, rest):
        (source,) = self._args(rest, 1, "show <expr>")
        value = self.sampled(source)
        if self.settings.format == "records":
            return dump_record(value, self.settings.prefix_length).rstrip("\n")
        render = str if isinstance(value, AlmostNatural) else render_rational
        terms = ", ".join(render(v) for v in value.prefix(SHOW_TEXT_LENGTH))
        return f"{source}: {terms}, ..."

    def command_cmp(self, rest):
        left, right = self._args(rest, 2, "cmp <e1> <e2>")
        alpha, beta = self.oriented(left), self.oriented(right)
        fuel = self.settings.fuel
        return f"lt: {lt(alpha, beta, fuel)}  le: {le(alpha, beta, fuel)}  eq: {eq_o(alpha, beta, fuel)}"

    def command_member(self, rest):
        q, source = self._args(rest, 2, "member <p/q> <e>")
        return render_verdict(lt_rational(parse_rational(q), self.oriented(source), self.settings.fuel))

    def command_psi(self, rest):
        q, source = self._args(rest, 2, "psi <p/q> <e>")
        return render_verdict(psi_member(parse_rational(q), self.oriented(source), self.settings.fuel))

    def command_interval(self, rest):
        source, a, b = self._args(rest, 3, "interval <e> <a> <b>")
        verdict = interval_open_member(self.oriented(source), parse_rational(a), parse_rational(b),
                                       self.settings.fuel)
        return render_verdict(verdict)

    def command_d(self, rest):
        left, right, q = self._args(rest, 3, "d <e1> <e2> <p/q>")
        verdict, witness = d_check(self.oriented(left), self.oriented(right), parse_rational(q),
                                   self.settings.fuel)
        if witness is not None:
            return f"{verdict} ({witness.describe()})"
        return render_verdict(verdict)

    def command_sig(self, rest):
        source, reference = self._args(rest, 2, "sig <e> [<e>,...]")
        signature = lt_signature(self.oriented(source), self.reference(reference), self.settings.fuel,
                                 self.settings.workers)
        return str(signature)

    def command_nbhd(self, rest):
        center, point, reference = self._args(rest, 3, "nbhd <e1> <e2> [<e>,...]")
        verdict = oriented_nbhd_member(self.oriented(point), self.oriented(center), self.reference(reference),
                                       self.settings.fuel, self.settings.workers)
        return render_verdict(verdict)

    def command_stab(self, rest):
        (source,) = self._args(rest, 1, "stab <e>")
        value = self.value(source)
        if not isinstance(value, (AlmostNatural, AlmostRational)):
            raise CommandError("stab needs an almost natural or almost rational")
        probe = stabilization_probe(value, self.settings.fuel)
        limit = str(probe.limit) if isinstance(value, AlmostNatural) else render_rational(probe.limit)
        return f"limit={limit} since={probe.since_index} {probe.verdict}"

    def command_relation(self, rest):
        kind, left, right, result, lo, hi, step = self._args(
            rest, 7, "relation add|mul <e1> <e2> <e3> <lo> <hi> <step>")
        checks = {"add": check_add, "mul": check_mul}
        if kind not in checks:
            raise CommandError(f"unknown relation {kind!r}")
        probe = GridProbe(parse_rational(lo), parse_rational(hi), parse_rational(step))
        verdict = checks[kind](self.oriented(left), self.oriented(right), self.oriented(result), probe,
                               self.settings.fuel, self.settings.workers)
        return render_verdict(verdict)

    def command_ocp(self, rest):
        descriptor = parse_descriptor(rest)
        reference = self.orc.ocp(descriptor)
        scanned = self.orc.scan(descriptor)
        if [repr(x) for x in scanned] != [repr(x) for x in reference]:
            self.warning(f"grid scan at 2^-{self.settings.grid} disagrees: {render_reference(scanned)}")
        return render_reference(reference)

    def command_totalc(self, rest):
        args = split_args(rest)
        if len(args) != 2:
            raise CommandError("usage: totalc <descriptor> <n>")
        descriptor = parse_descriptor(args[0])
        n = parse_rational(args[1])
        if n.denominator != 1 or n < 0:
            raise CommandError("resolution must be a natural number")
        report = self.orc.totalc(descriptor, int(n), self.corpus_pairs())
        return report.render().rstrip("\n")

    def command_dump(self, rest):
        name, path = self._args(rest, 2, "dump <name> <file>")
        value = self.sampled(name)
        write_record(path, value, self.settings.prefix_length)
        return f"wrote {path}"

    def emit(self, text):
        if text is not None:
            self.out.write(text + "\n")

    def run_batch(self, lines, keep_going=False):
        """
        Run script lines in order.

        :return: exit status, 1 when any line failed
        """
        status = 0
        for number, line in enumerate(lines, 1):
            try:
                self.emit(self.execute(line))
            except QuitSession:
                break
            except OrcError as exc:
                self.error(f"line {number}: {exc}")
                status = 1
                if not keep_going:
                    break
        self.out.flush()
        return status

    def repl(self):
        while True:
            try:
                line = input(PROMPT)
            except (EOFError, KeyboardInterrupt):
                print()
                return 0
            try:
                self.emit(self.execute(line))
            except QuitSession:
                return 0
            except OrcError as exc:
                self.error(str(exc))


def build_parser():
    parser = argparse.ArgumentParser(prog="orc", description="oriented cuts: exact constructive arithmetic")
    parser.add_argument("script", nargs="?", help="command file to run in batch mode")
    parser.add_argument("--batch", metavar="FILE", help="command file to run in batch mode")
    parser.add_argument("--fuel", type=int, help="search fuel per check (default 1024)")
    parser.add_argument("--grid", type=int, help="probe step 2^-k (default 7)")
    parser.add_argument("--corpus", help="file of expressions, one per line")
    parser.add_argument("--format", choices=FORMATS, help="output format of show")
    parser.add_argument("--workers", type=int, help="threads for independent checks")
    parser.add_argument("-v", "--verbosity", type=int, help="0 quiet, 1 info, 2 debug")
    parser.add_argument("--keep-going", action="store_true", help="continue a batch after a failing line")
    parser.add_argument("--version", action="version", version=f"orc {__version__}")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        settings = Settings.from_env().merged(fuel=args.fuel, grid=args.grid, corpus=args.corpus,
                                              format=args.format, workers=args.workers,
                                              verbosity=args.verbosity)
    except OrcError as exc:
        configure_logging(0)
        OrcCommand(Settings()).error(str(exc))
        return 2
    configure_logging(settings.verbosity)
    session = Session(settings)
    script = args.batch or args.script
    if script:
        try:
            with open(script, "r", encoding="utf-8") as handle:
                lines = handle.read().splitlines()
        except OSError as exc:
            session.error(f"cannot read {script}: {exc.strerror}")
            return 2
        return session.run_batch(lines, args.keep_going)
    if not sys.stdin.isatty():
        return session.run_batch(sys.stdin.read().splitlines(), args.keep_going)
    return session.repl()
