import os
from argparse import Namespace
from dataclasses import dataclass, fields
from typing import Any, ClassVar, Dict, Mapping, Optional, Tuple

from typing_extensions import Self

from demazure.chains.qchain import QChain
from demazure.chains.qset import QSet
from demazure.cli.codec import (
    decode_chain, decode_integer, decode_integers, decode_matrix,
    decode_region, decode_shape, decode_tabloid, parse_json)
from demazure.exceptions.exceptions import (
    ChainError, ShapeError, ValidationError)
from demazure.exceptions.messages import Messages
from demazure.linalg.rational_matrix import RationalMatrix
from demazure.tableaux.partition import Partition
from demazure.tableaux.region import Region
from demazure.tableaux.tabloid import Tabloid
from demazure.types.formats import Formats


@dataclass(frozen=True)
class RunConfig:
    """Represents the inputs of one command line run.

    JSON-valued inputs are kept decoded but not yet validated; the 
    domain objects are built on access.

    Attributes:
    -----------
        SEED_VARIABLE (ClassVar[str]): The environment variable holding 
            the default seed.
        COMMANDS (ClassVar[Dict[str, Tuple[str, ...]]]): The inputs each 
            command requires.
        SAMPLING (ClassVar[Tuple[str, ...]]): The commands that need a seed.
        FORMATS (ClassVar[Tuple[str, ...]]): The output formats.
        INTEGER_FIELDS (ClassVar[Tuple[str, ...]]): The inputs that must 
            be integers whichever source they come from.
    """
    command: str
    n: Optional[int] = None
    q: Optional[Any] = None
    shape: Optional[Any] = None
    chain: Optional[Any] = None
    tabloid: Optional[Any] = None
    matrix: Optional[Any] = None
    region: Optional[Any] = None
    i: Optional[int] = None
    j: Optional[int] = None
    t: Optional[str] = None
    seed: Optional[int] = None
    samples: Optional[int] = None
    output_format: str = "json"
    paths: bool = False
    at_ones: bool = False

    SEED_VARIABLE: ClassVar[str] = "DEMAZURE_SEED"
    COMMANDS: ClassVar[Dict[str, Tuple[str, ...]]] = {
        "scan": ("tabloid",),
        "key": ("chain",),
        "demtest": ("tabloid", "chain"),
        "enum": ("shape",),
        "straighten": ("tabloid",),
        "reduce": ("tabloid", "chain"),
        "keypoly": ("shape", "chain"),
        "cell-of": ("matrix", "q"),
        "sample-cell": ("chain",),
        "gamma": ("chain", "i", "j", "t"),
        "verify-independence": ("shape", "chain"),
        "verify-master": ("tabloid",),
        "verify-vanishing": ("shape", "chain"),
    }
    SAMPLING: ClassVar[Tuple[str, ...]] = (
        "sample-cell", "verify-independence", "verify-master",
        "verify-vanishing")
    FORMATS: ClassVar[Tuple[str, ...]] = ("json", "text")
    JSON_FIELDS: ClassVar[Tuple[str, ...]] = (
        "q", "shape", "chain", "tabloid", "matrix", "region")
    INTEGER_FIELDS: ClassVar[Tuple[str, ...]] = (
        "n", "i", "j", "seed", "samples")

    @classmethod
    def from_arguments(
            cls, arguments: Namespace,
            document: Optional[Mapping[str, Any]] = None,
            environ: Optional[Mapping[str, str]] = None
        ) -> Self:
        """Builds a configuration from parsed flags.

        Flags take precedence over the stdin document, whose keys are 
        the flag names; the seed falls back to DEMAZURE_SEED.

        Parameters:
        -----------
            arguments (Namespace): The parsed command line.
            document (Optional[Mapping[str, Any]]): The stdin JSON 
                object. Defaults to None.
            environ (Optional[Mapping[str, str]]): The environment. 
                Defaults to None, os.environ.

        Returns:
        --------
            RunConfig: The merged configuration.

        Raises:
        -------
            ValidationError: If a flag holds malformed JSON or the 
                seed variable is not an integer.
        """
        document = dict(document or {})
        if Formats.COLUMNS in document and "tabloid" not in document:
            document["tabloid"] = {Formats.COLUMNS: document[Formats.COLUMNS]}
        values: Dict[str, Any] = {}
        for field in fields(cls):
            key = field.name
            flag = getattr(arguments, key, None)
            if flag is not None and key in cls.JSON_FIELDS:
                flag = parse_json(flag, key)
            values[key] = flag if flag is not None else document.get(key)
        values["command"] = arguments.command
        values["output_format"] = values["output_format"] or "json"
        values["paths"] = bool(values["paths"])
        values["at_ones"] = bool(values["at_ones"])
        environ = os.environ if environ is None else environ
        if values["seed"] is None and cls.SEED_VARIABLE in environ:
            try:
                values["seed"] = int(environ[cls.SEED_VARIABLE])
            except ValueError as error:
                raise ValidationError(Messages.MALFORMED_JSON.format(
                    field=cls.SEED_VARIABLE, error=error))
        return cls(**values)

    def validate(self) -> None:
        """Checks the inputs of the command and their consistency.

        Raises:
        -------
            ValidationError: If the command is unknown, an input is 
                missing or malformed, or the inputs do not fit together.
        """
        if self.command not in self.COMMANDS:
            raise ValidationError(
                Messages.UNKNOWN_COMMAND.format(command=self.command))
        for option in self.COMMANDS[self.command]:
            if getattr(self, option) is None:
                raise ValidationError(Messages.MISSING_INPUT.format(
                    command=self.command, option=option))
        if self.command in self.SAMPLING and self.seed is None:
            raise ValidationError(
                Messages.MISSING_SEED.format(command=self.command))
        if self.output_format not in self.FORMATS:
            raise ValidationError(Messages.BAD_ARGUMENTS.format(
                error="unknown format %r" % self.output_format))
        for option in self.INTEGER_FIELDS:
            if (value := getattr(self, option)) is not None:
                decode_integer(value, option)
        if self.q is not None:
            decode_integers(self.q, Formats.Q)
        if self.samples is not None and self.samples < 1:
            raise ValidationError(Messages.BAD_ARGUMENTS.format(
                error="--samples must be positive"))
        shape = self.partition() if self.shape is not None else None
        chain = self.qchain() if self.chain is not None else None
        tabloid = self.tabloid_value() if self.tabloid is not None else None
        if self.matrix is not None:
            self.qset()
        if shape is not None and tabloid is not None and tabloid.shape != shape:
            raise ShapeError(Messages.SHAPE_MISMATCH.format(
                expected=list(shape.parts), current=list(tabloid.shape.parts)))
        if chain is not None:
            for lambda_shape in (shape, tabloid and tabloid.shape):
                if lambda_shape is not None and not chain.qset.covers(
                        lambda_shape):
                    raise ChainError(Messages.SHAPE_NOT_COVERED.format(
                        lengths=list(lambda_shape.q_set),
                        q=list(chain.qset.q)))
        if self.region is not None:
            self.region_value()

    def dimension(self) -> int:
        """Resolves n from --n, the shape, the matrix or the tabloid.

        Raises:
        -------
            ValidationError: If none of them is given.
        """
        if self.n is not None:
            return self.n
        if self.shape is not None:
            return decode_shape(self.shape).n
        if self.matrix is not None:
            return decode_matrix(self.matrix).row_count
        if self.tabloid is not None:
            return decode_tabloid(self.tabloid).n
        raise ValidationError(Messages.MISSING_INPUT.format(
            command=self.command, option="n"))

    def partition(self) -> Partition:
        shape = decode_shape(self.shape)
        if self.n is not None and shape.n != self.n:
            raise ShapeError(Messages.SHAPE_MISMATCH.format(
                expected="%d parts" % self.n, current=list(shape.parts)))
        return shape

    def qset(self) -> QSet:
        if self.chain is not None:
            return self.qchain().qset
        return QSet(self.dimension(), self.q or [])

    def qchain(self) -> QChain:
        return decode_chain(self.chain, self.dimension(), self.q)

    def tabloid_value(self) -> Tabloid:
        n = self.n
        if n is None and self.shape is not None:
            n = decode_shape(self.shape).n
        return decode_tabloid(self.tabloid, n)

    def matrix_value(self) -> RationalMatrix:
        return decode_matrix(self.matrix)

    def region_value(self) -> Region:
        return decode_region(self.region, self.tabloid_value().shape)
