"""Diagnostics printed by the command line.

Every diagnostic renders as one line, C{FILE:LINE:COLUMN: error CODE:
message}; the position is left out when the error has none.
"""

from gmc.exception import NonOrthogonalGradesError


__all__ = ["Diagnostic", "ERROR"]


ERROR = "error"


class Diagnostic(object):
    """A located message with a diagnostic code.

    @ivar severity: Always L{ERROR} for now.
    @ivar code: The diagnostic code, e.g. C{E-ORTHO}.
    @ivar grades: For C{E-ORTHO}, the two offending grades.
    """

    def __init__(self, code, message, line=None, column=None,
                 severity=ERROR, grades=()):
        self.code = code
        self.message = message
        self.line = line
        self.column = column
        self.severity = severity
        self.grades = tuple(grades)

    @classmethod
    def from_error(cls, error):
        """Build the diagnostic for a L{GradedError}.

        Positions come from the C{line} and C{column} of parse and
        elaboration errors.
        """
        underlying = getattr(error, "error", error)
        grades = ()
        if isinstance(underlying, NonOrthogonalGradesError):
            grades = (underlying.left, underlying.right)
        return cls(error.diagnostic, error.message,
                   getattr(error, "line", None),
                   getattr(error, "column", None), grades=grades)

    def render(self, filename):
        location = filename
        if self.line is not None:
            location = "%s:%d" % (location, self.line)
            if self.column is not None:
                location = "%s:%d" % (location, self.column)
        return "%s: %s %s: %s" % (location, self.severity, self.code,
                                  self.message)

    def __eq__(self, other):
        return (isinstance(other, Diagnostic) and
                (self.code, self.message, self.line, self.column) ==
                (other.code, other.message, other.line, other.column))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "<Diagnostic %s at %s:%s>" % (self.code, self.line,
                                             self.column)
