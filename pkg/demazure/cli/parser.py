import json
import logging
import sys
from argparse import ArgumentParser, Namespace
from typing import Any, Dict, List, NoReturn, Optional, TextIO

from demazure.cli.commands import CommandRunner, ExitStatus
from demazure.cli.config import RunConfig
from demazure.exceptions.exceptions import ValidationError, VerificationError
from demazure.exceptions.messages import Messages


_logger = logging.getLogger(__name__)


class CommandParser(ArgumentParser):
    """An ArgumentParser raising ValidationError instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise ValidationError(Messages.BAD_ARGUMENTS.format(error=message))


def build_parser() -> CommandParser:
    parser = CommandParser(
        prog="demazure",
        description="Standard monomial theory for Schubert varieties.")
    parser.add_argument("command", choices=sorted(RunConfig.COMMANDS))
    parser.add_argument("--n", type=int, help="size of the ambient set [n]")
    parser.add_argument("--q", help="JSON list of the elements of Q")
    parser.add_argument("--shape", help="JSON list of the partition parts")
    parser.add_argument("--chain", help="JSON list of the chain sets")
    parser.add_argument(
        "--tabloid", help="JSON list of columns, or {\"columns\": ...}")
    parser.add_argument(
        "--matrix", help="JSON list of rows, entries integers or \"p/q\"")
    parser.add_argument("--region", help="JSON list of [row, column]")
    parser.add_argument("--i", type=int, help="smaller reflection index")
    parser.add_argument("--j", type=int, help="larger reflection index")
    parser.add_argument("--t", help="path parameter, e.g. 1/4")
    parser.add_argument(
        "--seed", type=int,
        help="sampler seed, defaults to $%s" % RunConfig.SEED_VARIABLE)
    parser.add_argument("--samples", type=int, help="number of samples")
    parser.add_argument(
        "--format", dest="output_format", choices=RunConfig.FORMATS,
        default="json")
    parser.add_argument(
        "--paths", action="store_true", help="include the scanning paths")
    parser.add_argument(
        "--at-ones", dest="at_ones", action="store_true",
        help="report the dimension, the key polynomial at y = 1")
    parser.add_argument(
        "--stdin", action="store_true",
        help="read a JSON object of inputs from standard input")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="log progress to stderr, twice for debug output")
    return parser


def _read_document(stream: TextIO) -> Dict[str, Any]:
    try:
        document = json.load(stream)
    except json.JSONDecodeError as error:
        raise ValidationError(
            Messages.MALFORMED_JSON.format(field="stdin", error=error))
    if not isinstance(document, dict):
        raise ValidationError(Messages.MALFORMED_JSON.format(
            field="stdin", error="expected an object"))
    return document


def _configure_logging(verbosity: int) -> None:
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbosity, 2)]
    logging.basicConfig(
        level=level, stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s")


def main(
        argv: Optional[List[str]] = None,
        stdin: Optional[TextIO] = None,
        stdout: Optional[TextIO] = None
    ) -> int:
    """Runs the command line.

    Parameters:
    -----------
        argv (Optional[List[str]]): The arguments. Defaults to None, 
            sys.argv[1:].
        stdin (Optional[TextIO]): The input stream for --stdin. 
            Defaults to None, sys.stdin.
        stdout (Optional[TextIO]): The output stream. Defaults to 
            None, sys.stdout.

    Returns:
    --------
        int: 0 on success, 1 on invalid input, 2 on a failed check.
    """
    stdout = stdout or sys.stdout
    try:
        arguments: Namespace = build_parser().parse_args(argv)
        _configure_logging(arguments.verbose)
        document = _read_document(stdin or sys.stdin) if arguments.stdin else None
        config = RunConfig.from_arguments(arguments, document)
        result = CommandRunner(config).run()
    except ValidationError as error:
        print("error: %s" % error, file=sys.stderr)
        return ExitStatus.INVALID
    except VerificationError as error:
        print("verification failed: %s" % error, file=sys.stderr)
        return ExitStatus.FAILED
    print(result.render(config.output_format), file=stdout)
    _logger.debug("Exit status %d", result.status)
    return result.status
