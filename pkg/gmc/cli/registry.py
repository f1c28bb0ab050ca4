"""Registration of command classes by name."""

from gmc.cli.schema import SchemaError


__all__ = ["Registry", "command", "Command", "UnknownCommandError"]


class UnknownCommandError(SchemaError):
    """Raised when no command is registered under a name."""

    def __init__(self, name):
        message = "The command %s is not valid" % (name,)
        super(UnknownCommandError, self).__init__(message)
        self.name = name


class Registry(object):
    """Register L{Command} classes under their names."""

    def __init__(self):
        self._by_name = {}

    def add(self, command_class, name):
        """Add a command class to the registry.

        @param command_class: The command class to add.
        @param name: The name the command is invoked by.
        """
        if name in self._by_name:
            raise RuntimeError("A command was already registered for %s" % (
                name,))
        self._by_name[name] = command_class

    def check(self, name):
        """Check that a command is registered under C{name}.

        @raises UnknownCommandError: If there is none.
        """
        if name not in self._by_name:
            raise UnknownCommandError(name)

    def get(self, name):
        self.check(name)
        return self._by_name[name]

    def scan(self, module, onerror=None, ignore=None):
        """Scan the given module object for L{Command}s and register them."""
        from venusian import Scanner
        scanner = Scanner(registry=self)
        kwargs = {"onerror": onerror, "categories": ["command"]}
        if ignore is not None:
            kwargs["ignore"] = ignore
        scanner.scan(module, **kwargs)

    def get_names(self):
        """Get a sorted list of all command names."""
        return sorted(self._by_name)


def command(command_class):
    """Decorator to use to mark a command.

    When invoking L{Registry.scan} the classes marked with this decorator
    will be added to the registry under their C{name}.

    @param command_class: The L{Command} class to register.
    """

    def callback(scanner, name, command_class):
        scanner.registry.add(command_class, command_class.name or name)

    from venusian import attach
    attach(command_class, callback, category="command")
    return command_class


class Command(object):
    """Run one command of the C{gmc} tool.

    @cvar name: The name the command is invoked by.
    @cvar schema: The L{Schema} of its options and arguments.
    @cvar summary: One line of help text.
    @ivar source: The file being read, if any, for locating diagnostics.
    """

    name = None
    schema = None
    summary = ""
    source = None

    def __init__(self, output, settings=None):
        self.output = output
        self.settings = settings

    def write(self, line=""):
        self.output.write(line + "\n")

    def run(self, arguments):
        """Run this command with coerced L{Arguments}.

        @return: The exit status, 0 on success and 1 on a negative verdict.
        """
        raise NotImplementedError("Sub-classes have to implement run")
