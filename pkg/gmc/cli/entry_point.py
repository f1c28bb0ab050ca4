"""The C{gmc} command-line tool."""

import os
import sys

from twisted.python import log

from gmc.cli.diagnostic import Diagnostic
from gmc.cli.registry import Registry
from gmc.cli.schema import SchemaError
from gmc.exception import GradedError
from gmc.settings import DEFAULT_BUDGET, DEFAULT_SEED, ENV_SEED, Settings


__all__ = ["main", "get_registry", "exit_status", "USAGE_DIAGNOSTICS"]


USAGE_DIAGNOSTICS = frozenset(["E-USAGE", "E-PARSE", "E-IO", "E-PCM",
                               "E-MODEL"])


USAGE_MESSAGE = """\
Usage: %(program)s [--verbose] COMMAND [OPTIONS] ARGUMENTS

Commands:
%(commands)s

Randomized checks default to seed %(seed)d (or $%(env)s) and a budget of
%(budget)d sampled instances. Run %(program)s COMMAND --help for the options
of a command.

Exit status: 0 on success, 1 on a negative verdict or a type error in a
term, 2 on usage, file and parse errors.
"""


def get_registry():
    """Return a L{Registry} holding every command of L{gmc.cli.commands}."""
    from gmc.cli import commands
    registry = Registry()
    registry.scan(commands)
    return registry


def exit_status(error):
    """Return the exit status for an uncaught L{GradedError}."""
    if error.diagnostic in USAGE_DIAGNOSTICS:
        return 2
    return 1


def usage(program, registry):
    lines = []
    for name in registry.get_names():
        lines.append("  %-16s %s" % (name, registry.get(name).summary))
    return USAGE_MESSAGE % {"program": program, "commands": "\n".join(lines),
                            "seed": DEFAULT_SEED, "env": ENV_SEED,
                            "budget": DEFAULT_BUDGET}


def command_usage(program, command_class):
    lines = ["Usage: %s %s %s" % (program, command_class.name,
                                  command_class.schema.usage()), "",
             command_class.summary]
    documented = [parameter for parameter in command_class.schema.parameters
                  if parameter.doc]
    if documented:
        lines.append("")
        for parameter in documented:
            lines.append("  %-16s %s" % (parameter.name, parameter.doc))
    return "\n".join(lines) + "\n"


def main(arguments, output=None, registry=None):
    """Run the command named on the command line and return the exit status.

    @param arguments: Command-line arguments, typically C{sys.argv}; the
        first item is the program name.
    @param output: Optionally, a stream for all output, diagnostics included.
        Defaults to C{sys.stdout}.
    @param registry: Optionally, the L{Registry} to dispatch on.
    """
    if output is None:
        output = sys.stdout
    program = os.path.basename(arguments[0]) if arguments else "gmc"
    words = list(arguments[1:])
    if words and words[0] == "--verbose":
        words.pop(0)
        log.startLogging(sys.stderr, setStdout=False)
    if registry is None:
        registry = get_registry()
    if not words or words[0] in ("-h", "--help"):
        output.write(usage(program, registry))
        return 0 if words else 2

    name = words.pop(0)
    command = None
    try:
        command_class = registry.get(name)
        if "--help" in words or "-h" in words:
            output.write(command_usage(program, command_class))
            return 0
        try:
            settings = Settings()
        except ValueError as error:
            raise SchemaError(str(error))
        command = command_class(output, settings)
        parsed = command_class.schema.extract(words)
        log.msg("Dispatching %s with %s" % (name, parsed))
        status = command.run(parsed)
    except GradedError as error:
        source = getattr(command, "source", None) or program
        log.msg("%s failed: %s %s" % (name, error.diagnostic, error.message))
        output.write(Diagnostic.from_error(error).render(source) + "\n")
        return exit_status(error)
    log.msg("%s exited with status %d" % (name, status))
    return status
