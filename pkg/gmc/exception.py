"""Errors raised when a precondition of a graded operation does not hold.

Law and axiom failures are not errors, they are L{gmc.report.Report}
content.
"""


class GradedError(Exception):
    """A base class for gmc errors.

    @ivar code: A machine-parsable textual code for the error, the class name
        without the C{Error} suffix.
    @ivar message: A human-readable description of the error.
    @cvar diagnostic: The diagnostic code the command line reports.
    """

    diagnostic = "E-GMC"

    def __init__(self, message):
        super(GradedError, self).__init__(message)
        name = self.__class__.__name__
        if name.endswith("Error"):
            name = name[:-len("Error")]
        self.code = name
        self.message = message

    def __str__(self):
        return self.message


class MalformedSpecError(GradedError):
    """Raised when a PCM descriptor or its parameters are not well formed."""

    diagnostic = "E-PCM"


class LawViolationError(GradedError):
    """Raised when a PCM fails its law suite at construction.

    @ivar report: The failing L{Report}.
    """

    diagnostic = "E-LAW"

    def __init__(self, report):
        failure = report.failures()[0]
        message = "%s fails %s at %s" % (
            report.title, failure.name, failure.counterexample)
        super(LawViolationError, self).__init__(message)
        self.report = report


class OwnerMismatchError(GradedError):
    """Raised when a grade is used with a PCM it does not belong to."""

    diagnostic = "E-GRADE"

    def __init__(self, grade, pcm):
        message = "Grade %s belongs to %s, not %s" % (
            grade, grade.pcm.tag, pcm.tag)
        super(OwnerMismatchError, self).__init__(message)


class UndecidableError(GradedError):
    """Raised when the extension order of an infinite PCM has no rule."""

    diagnostic = "E-STRUCT"


class InfiniteCarrierError(GradedError):
    """Raised when an enumeration is requested on an infinite PCM."""

    diagnostic = "E-STRUCT"

    def __init__(self, pcm):
        message = "The carrier of %s is infinite" % (pcm.tag,)
        super(InfiniteCarrierError, self).__init__(message)


class NoJoinError(GradedError):
    """Raised when two grades have no least upper bound."""

    diagnostic = "E-STRUCT"


class NoTopError(GradedError):
    """Raised when a PCM has no top element in its extension order."""

    diagnostic = "E-STRUCT"

    def __init__(self, pcm):
        message = "%s has no top element" % (pcm.tag,)
        super(NoTopError, self).__init__(message)


class NotEffectAlgebraError(GradedError):
    """Raised when complements are requested outside an effect algebra."""

    diagnostic = "E-STRUCT"


class UnknownGeneratorError(GradedError):
    """Raised when a name is not declared in a signature or document."""

    diagnostic = "E-NAME"

    def __init__(self, name, kind="generator"):
        message = "Unknown %s %s" % (kind, name)
        super(UnknownGeneratorError, self).__init__(message)
        self.name = name


class NotLeqError(GradedError):
    """Raised when a regrading goes against the extension order."""

    diagnostic = "E-GRADE"

    def __init__(self, source, target):
        message = "Cannot regrade from %s to %s: %s is not below %s" % (
            source, target, source, target)
        super(NotLeqError, self).__init__(message)
        self.source = source
        self.target = target


class TypeMismatchError(GradedError):
    """Raised when boundaries of composed or compared morphisms differ.

    @ivar expected: The boundary that was required.
    @ivar actual: The boundary that was found.
    """

    diagnostic = "E-TYPE"

    def __init__(self, expected, actual, message=None):
        if message is None:
            message = "Boundary mismatch: expected %s, got %s" % (
                expected, actual)
        super(TypeMismatchError, self).__init__(message)
        self.expected = expected
        self.actual = actual


class GradeMismatchError(GradedError):
    """Raised when sequential composition mixes grades."""

    diagnostic = "E-GRADE"

    def __init__(self, left, right):
        message = ("Cannot compose grade %s with grade %s; use gcompose for "
                   "heterogeneous composition" % (left, right))
        super(GradeMismatchError, self).__init__(message)
        self.left = left
        self.right = right


class NonOrthogonalGradesError(GradedError):
    """Raised when a monoidal product is taken of interfering grades.

    @ivar left: The grade of the left factor.
    @ivar right: The grade of the right factor.
    """

    diagnostic = "E-ORTHO"

    def __init__(self, left, right):
        message = "Grades %s and %s are not orthogonal" % (left, right)
        super(NonOrthogonalGradesError, self).__init__(message)
        self.left = left
        self.right = right


class BudgetExceededError(GradedError):
    """Raised when a search runs out of its configured budget."""

    diagnostic = "E-BUDGET"

    def __init__(self, what, budget):
        message = "%s exceeded its budget of %d" % (what, budget)
        super(BudgetExceededError, self).__init__(message)
        self.budget = budget


class NotDirectedError(GradedError):
    """Raised when no common upper bound can be computed."""

    diagnostic = "E-STRUCT"


class OpInvalidError(GradedError):
    """Raised when an upper-bounding operation fails its validation."""

    diagnostic = "E-LAW"


class NotTotalError(GradedError):
    """Raised when a total PCM is required."""

    diagnostic = "E-STRUCT"

    def __init__(self, pcm):
        message = "%s is not total" % (pcm.tag,)
        super(NotTotalError, self).__init__(message)


class ParseError(GradedError):
    """Raised when a document cannot be parsed.

    @ivar line: The line of the first error, starting at 1.
    @ivar column: The column of the first error, starting at 1.
    """

    diagnostic = "E-PARSE"

    def __init__(self, message, line=None, column=None):
        super(ParseError, self).__init__(message)
        self.line = line
        self.column = column


class ElaborationError(GradedError):
    """Raised when a term of a source document does not elaborate.

    The diagnostic code and message are those of the underlying error, the
    position is that of the smallest failing subterm.

    @ivar error: The underlying L{GradedError}.
    @ivar line: The line of the failing subterm, starting at 1.
    @ivar column: The column of the failing subterm, starting at 1.
    """

    def __init__(self, error, line, column):
        super(ElaborationError, self).__init__(error.message)
        self.code = error.code
        self.diagnostic = error.diagnostic
        self.error = error
        self.line = line
        self.column = column


class IllFormedError(GradedError):
    """Raised when a model or copresheaf document is structurally broken.

    @ivar coordinates: The table coordinates of the offending entry.
    """

    diagnostic = "E-MODEL"

    def __init__(self, message, coordinates=()):
        if coordinates:
            message = "%s at (%s)" % (
                message, ", ".join(str(item) for item in coordinates))
        super(IllFormedError, self).__init__(message)
        self.coordinates = tuple(coordinates)


class NoBraidingError(GradedError):
    """Raised when a symmetric check is requested on an unbraided model."""

    diagnostic = "E-STRUCT"


class NotIdempotentError(GradedError):
    """Raised when a monoidal view is requested at a non-idempotent grade."""

    diagnostic = "E-STRUCT"

    def __init__(self, grade):
        message = "Grade %s is not idempotent" % (grade,)
        super(NotIdempotentError, self).__init__(message)


class InvalidHomError(GradedError):
    """Raised when a map of PCMs is not a homomorphism."""

    diagnostic = "E-LAW"


class AxiomFailureError(GradedError):
    """Raised when a translation is fed data that fails its axioms.

    @ivar report: The failing L{Report}.
    """

    diagnostic = "E-LAW"

    def __init__(self, report):
        failure = report.failures()[0]
        message = "%s: %s fails at %s" % (
            report.title, failure.name, failure.counterexample)
        super(AxiomFailureError, self).__init__(message)
        self.report = report


class EnumerationTooLargeError(GradedError):
    """Raised when an exhaustive uniqueness check exceeds its size gate."""

    diagnostic = "E-BUDGET"


class PcmMismatchError(GradedError):
    """Raised when structures over different PCMs are combined."""

    diagnostic = "E-GRADE"

    def __init__(self, left, right):
        message = "PCM mismatch: %s versus %s" % (left.tag, right.tag)
        super(PcmMismatchError, self).__init__(message)
