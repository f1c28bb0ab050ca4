"""The commands of the C{gmc} tool.

Every command writes line-oriented output and returns its exit status:
C{0} on success and C{1} on a negative verdict. Errors propagate to
L{gmc.cli.entry_point.main}, which renders them as diagnostics.
"""

from twisted.python import log

from gmc.acceptance import SUITES, run_suites
from gmc.cli.diagnostic import Diagnostic
from gmc.cli.elaborate import Elaborator
from gmc.cli.parser import format_document, format_morphism, parse
from gmc.cli.registry import Command, command
from gmc.cli.schema import (
    Enum, Flag, Integer, InvalidParameterValueError, Schema, Unicode)
from gmc.convolution.convolve import check_convolution_coherence, convolve
from gmc.convolution.copresheaf import (
    element_key, format_element, load_copresheaf)
from gmc.convolution.lax import (
    check_lax_presentation, graded_to_lax, lax_to_graded)
from gmc.exception import (
    BudgetExceededError, ElaborationError, GradedError, PcmMismatchError,
    UnknownGeneratorError)
from gmc.finmodel.axioms import check_axioms, check_symmetric
from gmc.finmodel.document import dump_model, load_model
from gmc.finmodel.effectful import from_effectful, to_effectful
from gmc.finmodel.functor import check_graded_functor, coreflect
from gmc.freecat.morphism import format_slices
from gmc.freecat.rewrite import (
    canonical_form, equal_at, equal_oracle, valid_grades)
from gmc.freecat.signature import format_word
from gmc.globalcat.bounding import join_op, load_upper_bound, plus_op
from gmc.globalcat.category import FreeHoms, GlobalMorphism, global_compose
from gmc.pcm.document import load_pcm_document
from gmc.pcm.laws import check_pcm_laws
from gmc.pcm.syntax import parse_descriptor, parse_grade
from gmc.report import Report
from gmc.settings import Settings


class FileError(GradedError):
    """Raised when an input file cannot be read."""

    diagnostic = "E-IO"


def read_file(path):
    """Return the text of the file at C{path}.

    @raises FileError: If it cannot be opened or decoded.
    """
    try:
        with open(path, encoding="utf-8") as stream:
            return stream.read()
    except (IOError, OSError) as error:
        raise FileError("Cannot read %s: %s" % (
            path, error.strerror or error))
    except UnicodeDecodeError:
        raise FileError("Cannot read %s: not UTF-8 text" % (path,))


def _header(name, morphism):
    return "%s : %s -> %s @ %s" % (name, format_word(morphism.dom),
                                    format_word(morphism.cod),
                                    morphism.grade)


class FileCommand(Command):
    """A command reading its input from files.

    @ivar source: The file being processed, used to locate diagnostics.
    """

    def read(self, path):
        self.source = path
        return read_file(path)

    def load_source(self, path):
        """Parse a C{.gmc} file and return an L{Elaborator} for it."""
        return Elaborator(parse(self.read(path)))

    def finish(self, report):
        report.write(self.output)
        return 0 if report.passed else 1


def _sampling_settings(arguments):
    return Settings(seed=arguments.seed, budget=arguments.budget)


@command
class Check(FileCommand):
    """Elaborate terms and print their types.

    Terms that fail are reported as diagnostics; the others are still
    printed.
    """

    name = "check"
    summary = "Type-check the terms of a source file"
    schema = Schema(
        Unicode("file", positional=True, doc="The .gmc source file."),
        Unicode("terms", positional=True, optional=True,
                doc="Terms to check, all by default."),
        rest="terms")

    def run(self, arguments):
        elaborator = self.load_source(arguments.file)
        names = arguments.terms or elaborator.document.term_names()
        status = 0
        for name in names:
            try:
                morphism = elaborator.term(name)
            except (ElaborationError, UnknownGeneratorError) as error:
                self.write(Diagnostic.from_error(error).render(self.source))
                status = 1
            else:
                self.write(_header(name, morphism))
        return status


@command
class Normalize(FileCommand):
    """Print the document with terms replaced by their canonical forms.

    The output parses back and normalizes to itself.
    """

    name = "normalize"
    summary = "Print canonical forms of terms"
    schema = Schema(
        Unicode("file", positional=True),
        Unicode("terms", positional=True, optional=True),
        Flag("slices", doc="Print slice lists instead of the document."),
        rest="terms")

    def run(self, arguments):
        elaborator = self.load_source(arguments.file)
        document = elaborator.document
        names = arguments.terms or document.term_names()
        forms = [(name, canonical_form(elaborator.term(name), self.settings))
                 for name in names]
        if arguments.slices:
            for name, form in forms:
                self.write("term " + _header(name, form))
                for line in format_slices(form):
                    self.write("  " + line)
            return 0
        self.output.write(format_document(document, dict(
            (name, format_morphism(form)) for name, form in forms)))
        return 0


@command
class Equal(FileCommand):

    name = "equal"
    summary = "Decide whether two terms are equal at a grade"
    schema = Schema(
        Unicode("file", positional=True),
        Unicode("first", positional=True),
        Unicode("second", positional=True),
        Unicode("grade", doc="The grade to compare at."),
        Flag("oracle", doc="Cross-check with the breadth-first oracle."))

    def run(self, arguments):
        elaborator = self.load_source(arguments.file)
        grade = parse_grade(elaborator.pcm, arguments.grade)
        first = elaborator.term(arguments.first)
        second = elaborator.term(arguments.second)
        equal = equal_at(first, second, grade, self.settings)
        self.write("%s at grade %s" % ("EQUAL" if equal else "NOT EQUAL",
                                       grade))
        status = 0 if equal else 1
        if arguments.oracle:
            try:
                oracle = equal_oracle(first, second, grade, self.settings)
            except BudgetExceededError as error:
                self.write("ORACLE SKIP %s" % (error.message,))
            else:
                if oracle == equal:
                    self.write("ORACLE AGREES")
                else:
                    log.msg("Oracle disagrees on %s and %s at %s" % (
                        arguments.first, arguments.second, grade))
                    self.write("ORACLE DISAGREES")
                    status = 1
        return status


@command
class Grades(FileCommand):
    """List the grades at which a term is admissible."""

    name = "grades"
    summary = "List the grades a term is valid at"
    schema = Schema(Unicode("file", positional=True),
                    Unicode("term", positional=True))

    def run(self, arguments):
        morphism = self.load_source(arguments.file).term(arguments.term)
        for grade in valid_grades(morphism):
            self.write(str(grade))
        return 0


def _op_choice(name):
    return lambda pcm: (join_op if name == "join" else plus_op)(pcm)


@command
class GCompose(FileCommand):
    """Compose two terms of different grades in the global category.

    C{--op table:PATH} loads an C{upperbound} document; it must be over the
    PCM of the source file.
    """

    name = "gcompose"
    summary = "Compose terms at an upper bound of their grades"
    schema = Schema(
        Unicode("file", positional=True),
        Unicode("first", positional=True),
        Unicode("second", positional=True),
        Enum("op", mapping={"join": _op_choice("join"),
                            "plus": _op_choice("plus")},
             prefixes={"table": lambda path: path},
             doc="The upper-bounding operation."))

    def run(self, arguments):
        elaborator = self.load_source(arguments.file)
        source = self.source
        pcm = elaborator.pcm
        if callable(arguments.op):
            op = arguments.op(pcm)
        else:
            op = load_upper_bound(self.read(arguments.op))
            self.source = source
            if op.pcm != pcm:
                raise PcmMismatchError(op.pcm, pcm)
        homs = FreeHoms(elaborator.signature, self.settings)
        first, second = [
            GlobalMorphism(homs, morphism.grade, morphism) for morphism in
            (elaborator.term(arguments.first),
             elaborator.term(arguments.second))]
        result = global_compose(first, second, op, self.settings)
        body = canonical_form(result.body, self.settings)
        self.write(_header("%s ;%s %s" % (arguments.first, op.name,
                                          arguments.second), body))
        self.write("  " + format_morphism(body))
        return 0


@command
class LawcheckPCM(FileCommand):
    """Check the PCM laws on a descriptor or a C{<pcm>} document.

    Exactly one of C{--kind} and C{--file} is given.
    """

    name = "lawcheck-pcm"
    summary = "Check commutativity, unit and associativity of a PCM"
    schema = Schema(
        Unicode("kind", optional=True, doc="A PCM descriptor."),
        Unicode("file", optional=True, doc="A <pcm> document."),
        Integer("seed", optional=True, doc="The sampling seed."),
        Integer("budget", optional=True, doc="Sampled triples."))

    def run(self, arguments):
        if (arguments.kind is None) == (arguments.file is None):
            raise InvalidParameterValueError(
                "Exactly one of --kind and --file is needed")
        if arguments.kind is not None:
            pcm = parse_descriptor(arguments.kind)
        else:
            pcm = load_pcm_document(self.read(arguments.file),
                                    validate=False)
        return self.finish(check_pcm_laws(pcm,
                                          _sampling_settings(arguments)))


@command
class LawcheckModel(FileCommand):

    name = "lawcheck-model"
    summary = "Check the graded monoidal axioms of a finite model"
    schema = Schema(
        Unicode("model", positional=True),
        Flag("symmetric", doc="Also check the braiding."))

    def run(self, arguments):
        model = load_model(self.read(arguments.model), check=False)
        report = check_axioms(model)
        if arguments.symmetric:
            report.extend(check_symmetric(model))
        return self.finish(report)


@command
class Coreflect(FileCommand):
    """Check the counit of the coreflection and print the reflected model."""

    name = "coreflect"
    summary = "Pull a model back along the top-preserving map"
    schema = Schema(Unicode("model", positional=True))

    def run(self, arguments):
        model = load_model(self.read(arguments.model))
        reflected, counit = coreflect(model, self.settings)
        report = Report(counit.name).extend(
            check_graded_functor(counit, self.settings), "counit ")
        report.write(self.output)
        self.output.write(dump_model(reflected))
        return 0 if report.passed else 1


@command
class Convolve(FileCommand):
    """Print the classes of C{F * G}, one grade at a time."""

    name = "convolve"
    summary = "Convolve two copresheaves"
    schema = Schema(
        Unicode("first", positional=True),
        Unicode("second", positional=True),
        Unicode("coherence", optional=True,
                doc="A third copresheaf for the coherence checks."))

    def run(self, arguments):
        first = load_copresheaf(self.read(arguments.first))
        second = load_copresheaf(self.read(arguments.second))
        result = convolve(first, second)
        for c in first.pcm.elements():
            members = result.members[c]
            self.write("%s %d" % (c, len(members)))
            for rep in sorted(members, key=element_key):
                self.write("  %s <- %s" % (
                    format_element(rep), " ".join(
                        format_element(item) for item in members[rep])))
        if arguments.coherence is None:
            return 0
        third = load_copresheaf(self.read(arguments.coherence))
        return self.finish(check_convolution_coherence(first, second, third))


@command
class Roundtrip(FileCommand):
    """Translate a model and back, and compare the tables."""

    name = "roundtrip"
    summary = "Round-trip a model through the effectful or lax presentation"
    schema = Schema(
        Unicode("model", positional=True),
        Enum("via", mapping={"effectful": "effectful", "lax": "lax"},
             optional=True, default="lax"))

    def run(self, arguments):
        model = load_model(self.read(arguments.model))
        if arguments.via == "effectful":
            effectful = to_effectful(model)
            report = effectful.check()
            back = from_effectful(effectful)
        else:
            presentation = graded_to_lax(model)
            report = check_lax_presentation(presentation)
            back = lax_to_graded(presentation)
        report.record("Round-Trip", back == model, "(%s)" % (model.name,))
        return self.finish(report)


@command
class Selftest(Command):
    """Run the acceptance suites."""

    name = "selftest"
    summary = "Run the acceptance suites"
    schema = Schema(
        Integer("seed", optional=True),
        Integer("budget", optional=True),
        Enum("suite", mapping=dict((name, name) for name, _ in SUITES),
             optional=True))

    def run(self, arguments):
        names = None if arguments.suite is None else [arguments.suite]
        status = 0
        for name, report in run_suites(_sampling_settings(arguments), names):
            for line in report.lines():
                self.write("%s %s" % (name, line))
            if not report.passed:
                status = 1
        self.write("selftest %s" % ("PASS" if status == 0 else "FAIL",))
        return status
