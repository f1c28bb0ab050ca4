from gmc.cli.registry import Command, command
from gmc.cli.schema import Schema, Unicode


@command
class Echo(Command):

    name = "echo"
    summary = "Write the words back"
    schema = Schema(Unicode("words", positional=True, optional=True),
                    rest="words")

    def run(self, arguments):
        self.write(" ".join(arguments.words))
        return 0


@command
class Unnamed(Command):
    pass
