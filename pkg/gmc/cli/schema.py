"""Typed command-line parameters.

A command declares its options and positional arguments as L{Parameter}s
and a L{Schema} turns the raw argument list into an L{Arguments} object,
coercing every value on the way.
"""

from gmc.exception import GradedError


__all__ = ["SchemaError", "MissingParameterError",
           "InvalidParameterValueError", "UnknownParameterError",
           "Parameter", "Unicode", "Integer", "Flag", "Enum", "Arguments",
           "Schema"]


class SchemaError(GradedError):
    """Raised when the arguments of a command do not fit its schema."""

    diagnostic = "E-USAGE"


class MissingParameterError(SchemaError):
    """Raised when a required parameter is missing.

    @param name: The name of the missing parameter.
    """

    def __init__(self, name, kind=None):
        message = "The command needs the parameter %s" % (name,)
        if kind is not None:
            message += " (%s)" % (kind,)
        super(MissingParameterError, self).__init__(message)


class InvalidParameterValueError(SchemaError):
    """Raised when the value of a parameter is invalid."""


class UnknownParameterError(SchemaError):
    """Raised when an option or argument is not recognized."""

    def __init__(self, name):
        message = "The parameter %s is not recognized" % (name,)
        super(UnknownParameterError, self).__init__(message)


class Parameter(object):
    """A single option or positional argument of a command.

    @param name: The option name without the leading dashes, or the name of
        the positional argument.
    @param optional: If C{True} the parameter may be left out.
    @param default: The value used when the parameter is left out.
    @param min: Minimum value for the parameter.
    @param max: Maximum value for the parameter.
    @param positional: Whether the value comes from the positional arguments
        rather than a C{--name value} pair.
    @param doc: The help text.
    """

    kind = None
    takes_value = True

    def __init__(self, name=None, optional=False, default=None, min=None,
                 max=None, positional=False, doc=None):
        self.name = name
        self.optional = optional
        self.default = default
        self.min = min
        self.max = max
        self.positional = positional
        self.doc = doc

    def coerce(self, value):
        """Coerce a raw value according to this parameter's settings.

        @param value: A C{str}, or C{None} when the parameter was not given.
        @raises MissingParameterError: If a required parameter is missing.
        @raises InvalidParameterValueError: If the value does not parse or is
            out of range.
        """
        if value is None:
            if self.optional:
                return self.default
            raise MissingParameterError(self.name, kind=self.kind)
        try:
            parsed = self.parse(value)
        except ValueError:
            raise InvalidParameterValueError(
                "Invalid %s value %s for %s" % (self.kind, value, self.name))
        self._check_range(parsed)
        return parsed

    def _check_range(self, value):
        prefix = "Value (%s) for parameter %s is invalid.  %s"
        if self.min is not None and value < self.min:
            raise InvalidParameterValueError(prefix % (
                value, self.name, "Value must be at least %s." % (self.min,)))
        if self.max is not None and value > self.max:
            raise InvalidParameterValueError(prefix % (
                value, self.name, "Value exceeds maximum of %s." % (
                    self.max,)))

    def parse(self, value):
        raise NotImplementedError()

    def usage(self):
        """Return how the parameter is written in a usage line."""
        if self.positional:
            text = self.name.upper()
        elif self.takes_value:
            text = "--%s %s" % (self.name, self.kind.upper())
        else:
            text = "--%s" % (self.name,)
        if self.optional:
            text = "[%s]" % (text,)
        return text


class Unicode(Parameter):
    """A parameter holding text, typically a file name or a term name."""

    kind = "text"

    def parse(self, value):
        if not value:
            raise ValueError(value)
        return value


class Integer(Parameter):
    """A parameter that must be a non-negative C{int}."""

    kind = "integer"

    def __init__(self, name=None, optional=False, default=None, min=0,
                 max=None, positional=False, doc=None):
        super(Integer, self).__init__(name, optional, default, min, max,
                                      positional, doc)

    def parse(self, value):
        return int(value)


class Flag(Parameter):
    """An option without a value; present means C{True}."""

    kind = "flag"
    takes_value = False

    def __init__(self, name=None, doc=None):
        super(Flag, self).__init__(name, optional=True, default=False,
                                   doc=doc)

    def parse(self, value):
        return bool(value)


class Enum(Parameter):
    """A parameter with enumerated values.

    @param mapping: A mapping of accepted values to the values that will be
        returned by C{parse}.
    @param prefixes: A mapping of accepted C{prefix:} forms to callables
        turning the rest of the value into the parsed value, as in
        C{table:PATH}.
    """

    kind = "choice"

    def __init__(self, name=None, mapping=None, prefixes=None,
                 optional=False, default=None, doc=None):
        super(Enum, self).__init__(name, optional=optional, default=default,
                                   doc=doc)
        if mapping is None:
            raise TypeError("Must provide mapping")
        self.mapping = mapping
        self.prefixes = prefixes or {}

    def parse(self, value):
        if value in self.mapping:
            return self.mapping[value]
        prefix, separator, rest = value.partition(":")
        if separator and rest and prefix in self.prefixes:
            return self.prefixes[prefix](rest)
        raise ValueError(value)

    def usage(self):
        choices = sorted(self.mapping) + [
            "%s:PATH" % (prefix,) for prefix in sorted(self.prefixes)]
        text = "--%s %s" % (self.name, "|".join(choices))
        if self.optional:
            text = "[%s]" % (text,)
        return text


class Arguments(object):
    """Arguments parsed from a command line, as attributes."""

    def __init__(self, tree):
        for key, value in tree.items():
            self.__dict__[key] = value

    def __str__(self):
        return "Arguments(%s)" % (self.__dict__,)

    __repr__ = __str__

    def __iter__(self):
        """Return an iterator yielding C{(name, value)} tuples."""
        return iter(sorted(self.__dict__.items()))

    def __getitem__(self, name):
        return self.__dict__[name]

    def __len__(self):
        return len(self.__dict__)

    def __contains__(self, key):
        return key in self.__dict__


class Schema(object):
    """The parameters a command accepts.

    Positional parameters are filled in declaration order; a final
    positional parameter declared with C{rest=True} collects the remaining
    values into a list.

    @param parameters: The L{Parameter}s, options and positionals mixed.
    @param rest: The name of the positional parameter collecting the
        remaining values, if any.
    """

    def __init__(self, *parameters, **kwargs):
        self.parameters = list(parameters)
        self.rest = kwargs.pop("rest", None)
        if kwargs:
            raise TypeError("Unexpected keywords %s" % (sorted(kwargs),))
        self.options = dict((parameter.name, parameter)
                            for parameter in self.parameters
                            if not parameter.positional)
        self.positionals = [parameter for parameter in self.parameters
                            if parameter.positional]

    def extract(self, arguments):
        """Coerce a raw argument list into L{Arguments}.

        @param arguments: The command-line words after the command name.
        @raises SchemaError: If an option is unknown, lacks its value, a
            required parameter is missing or a value does not coerce.
        """
        raw = {}
        values = []
        arguments = list(arguments)
        while arguments:
            word = arguments.pop(0)
            if not word.startswith("--"):
                values.append(word)
                continue
            name = word[2:]
            parameter = self.options.get(name)
            if parameter is None:
                raise UnknownParameterError(word)
            if name in raw:
                raise InvalidParameterValueError(
                    "The parameter %s may only be specified once." % (word,))
            if not parameter.takes_value:
                raw[name] = True
                continue
            if not arguments:
                raise MissingParameterError(word, parameter.kind)
            raw[name] = arguments.pop(0)
        result = {}
        for parameter in self.positionals:
            if parameter.name == self.rest:
                result[parameter.name] = [parameter.coerce(value)
                                          for value in values]
                values = []
            elif values:
                result[parameter.name] = parameter.coerce(values.pop(0))
            else:
                result[parameter.name] = parameter.coerce(None)
        if values:
            raise UnknownParameterError(values[0])
        for name, parameter in self.options.items():
            result[name] = parameter.coerce(raw.get(name))
        return Arguments(result)

    def usage(self):
        words = []
        for parameter in self.parameters:
            text = parameter.usage()
            if parameter.name == self.rest:
                text = "[%s...]" % (parameter.name.upper(),)
            words.append(text)
        return " ".join(words)
