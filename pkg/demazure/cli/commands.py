import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Callable, Dict, Final, Sequence

from demazure.chains.qchain import key_of, lambda_key
from demazure.characters.keys import key_polynomial
from demazure.cli.codec import (
    dumps, encode_chain, encode_combination, encode_matrix, encode_paths,
    encode_tabloid)
from demazure.cli.config import RunConfig
from demazure.exceptions.exceptions import ValidationError
from demazure.exceptions.messages import Messages
from demazure.geometry.cells import sample_cell
from demazure.geometry.path import gamma_path
from demazure.geometry.preferred import q_preferred_reduce
from demazure.geometry.verification import (
    verify_independence, verify_vanishing)
from demazure.linalg.sampling import MatrixSampler
from demazure.scanning.demazure import demazure_violations, enumerate_demazure
from demazure.scanning.scanner import scan
from demazure.straightening.master import verify_master_identity
from demazure.straightening.regions import snake_region
from demazure.straightening.straighten import reduce_mod, straighten
from demazure.tableaux.enumeration import enumerate_tableaux
from demazure.tableaux.region import Region
from demazure.types.formats import Formats


_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommandResult:
    """Represents the outcome of a command.

    Attributes:
    -----------
        payload (Dict[str, Any]): The JSON document of the result.
        text (str): The plain text rendering of the result.
        status (int): The exit status.
    """
    payload: Dict[str, Any]
    text: str
    status: int = 0

    def render(self, output_format: str) -> str:
        return dumps(self.payload) if output_format == "json" else self.text


class ExitStatus:
    """Exit statuses of the command line."""

    OK: Final[int] = 0
    INVALID: Final[int] = 1
    FAILED: Final[int] = 2


class CommandRunner:
    """Dispatches a validated configuration to the library.

    Attributes:
    -----------
        VERIFY_MASTER_SAMPLES (Final[int]): The default number of 
            matrices verify-master evaluates at.
        VANISHING_SAMPLES (Final[int]): The default number of samples 
            verify-vanishing draws from each set.
    """

    VERIFY_MASTER_SAMPLES: Final[int] = 20
    VANISHING_SAMPLES: Final[int] = 50

    def __init__(self, config: RunConfig) -> None:
        self.__config: RunConfig = config
        self.__handlers: Dict[str, Callable[[], CommandResult]] = {
            "scan": self.__scan,
            "key": self.__key,
            "demtest": self.__demtest,
            "enum": self.__enum,
            "straighten": self.__straighten,
            "reduce": self.__reduce,
            "keypoly": self.__keypoly,
            "cell-of": self.__cell_of,
            "sample-cell": self.__sample_cell,
            "gamma": self.__gamma,
            "verify-independence": self.__verify_independence,
            "verify-master": self.__verify_master,
            "verify-vanishing": self.__verify_vanishing,
        }

    def run(self) -> CommandResult:
        """Validates the configuration and runs its command.

        Raises:
        -------
            ValidationError: If the configuration is invalid.
            VerificationError: If a checked property fails outright.
        """
        if (handler := self.__handlers.get(self.__config.command)) is None:
            raise ValidationError(Messages.UNKNOWN_COMMAND.format(
                command=self.__config.command))
        self.__config.validate()
        _logger.info("Running %s", self.__config.command)
        return handler()

    def __scan(self) -> CommandResult:
        result = scan(self.__config.tabloid_value())
        payload: Dict[str, Any] = {
            Formats.SCAN: encode_tabloid(result.scan_tableau)}
        if self.__config.paths:
            payload[Formats.PATHS] = encode_paths(result)
        return CommandResult(payload, str(result.scan_tableau))

    def __key(self) -> CommandResult:
        chain = self.__config.qchain()
        if self.__config.shape is not None:
            key = lambda_key(self.__config.partition(), chain)
        else:
            key = key_of(chain)
        return CommandResult({Formats.KEY: encode_tabloid(key)}, str(key))

    def __demtest(self) -> CommandResult:
        violations = demazure_violations(
            self.__config.tabloid_value(), self.__config.qchain())
        payload = {
            Formats.DEMAZURE: not violations,
            Formats.VIOLATIONS: [list(location) for location in violations]}
        return CommandResult(payload, str(not violations).lower())

    def __enum(self) -> CommandResult:
        shape = self.__config.partition()
        if self.__config.chain is not None:
            tableaux = enumerate_demazure(shape, self.__config.qchain())
        else:
            tableaux = enumerate_tableaux(shape)
        payload = {
            Formats.TABLEAUX: [encode_tabloid(t) for t in tableaux],
            Formats.COUNT: len(tableaux)}
        return CommandResult(
            payload, "\n".join(str(tableau) for tableau in tableaux))

    def __straighten(self) -> CommandResult:
        combination = straighten(self.__config.tabloid_value())
        return CommandResult(
            {Formats.TERMS: encode_combination(combination)}, str(combination))

    def __reduce(self) -> CommandResult:
        combination = reduce_mod(
            self.__config.tabloid_value(), self.__config.qchain())
        return CommandResult(
            {Formats.TERMS: encode_combination(combination)}, str(combination))

    def __keypoly(self) -> CommandResult:
        polynomial = key_polynomial(
            self.__config.partition(), self.__config.qchain())
        payload: Dict[str, Any] = {Formats.POLYNOMIAL: str(polynomial)}
        text = str(polynomial)
        if self.__config.at_ones:
            payload[Formats.DIMENSION] = polynomial.at_ones()
            text = str(polynomial.at_ones())
        return CommandResult(payload, text)

    def __cell_of(self) -> CommandResult:
        basis = q_preferred_reduce(
            self.__config.matrix_value(), self.__config.qset())
        payload = {
            Formats.CELL: encode_chain(basis.chain),
            Formats.PIVOTS: list(basis.pivots),
            Formats.MATRIX: encode_matrix(basis.matrix)}
        return CommandResult(payload, str(encode_chain(basis.chain)))

    def __sample_cell(self) -> CommandResult:
        matrix = sample_cell(self.__config.qchain(), self.__config.seed)
        payload = {
            Formats.MATRIX: encode_matrix(matrix),
            Formats.SEED: self.__config.seed}
        return CommandResult(payload, _matrix_text(matrix.rows))

    def __gamma(self) -> CommandResult:
        chain = self.__config.qchain()
        matrix = gamma_path(
            chain, self.__config.i, self.__config.j, self.__config.t)
        cell = q_preferred_reduce(matrix, chain.qset).chain
        payload = {
            Formats.MATRIX: encode_matrix(matrix),
            Formats.CELL: encode_chain(cell)}
        return CommandResult(payload, _matrix_text(matrix.rows))

    def __verify_independence(self) -> CommandResult:
        report = verify_independence(
            self.__config.partition(), self.__config.qchain(),
            self.__config.seed, self.__config.samples)
        payload = {
            Formats.OK: report.ok, Formats.RANK: report.rank,
            Formats.BASIS_SIZE: report.basis_size,
            Formats.SAMPLES: report.samples, Formats.SEED: report.seed}
        return CommandResult(
            payload, "rank %d of %d" % (report.rank, report.basis_size),
            _status(report.ok))

    def __verify_master(self) -> CommandResult:
        tabloid = self.__config.tabloid_value()
        if self.__config.region is not None:
            region = self.__config.region_value()
        elif (violation := tabloid.row_violation()) is not None:
            region = snake_region(tabloid, *violation)
        else:
            region = Region(tabloid.shape, tabloid.shape.locations)
        sampler = MatrixSampler(self.__config.seed)
        checks = [
            verify_master_identity(
                tabloid, region, sampler.integer_matrix(tabloid.n))
            for _ in range(self.__config.samples or self.VERIFY_MASTER_SAMPLES)]
        signs = sorted({
            check.resolved_sign for check in checks
            if check.resolved_sign is not None})
        ok = all(check.holds for check in checks) and len(signs) <= 1
        payload = {
            Formats.OK: ok,
            Formats.SIGN: signs[0] if len(signs) == 1 else None,
            Formats.REGION: [list(location) for location in region],
            Formats.SAMPLES: len(checks), Formats.SEED: self.__config.seed}
        return CommandResult(
            payload, "holds" if ok else "fails", _status(ok))

    def __verify_vanishing(self) -> CommandResult:
        report = verify_vanishing(
            self.__config.partition(), self.__config.qchain(),
            self.__config.seed,
            self.__config.samples or self.VANISHING_SAMPLES)
        payload = {
            Formats.OK: report.ok, Formats.SAMPLES: report.samples,
            Formats.FAILURES: [
                encode_tabloid(tabloid) for tabloid in report.nonvanishing],
            Formats.SEED: report.seed}
        if report.key_vanished:
            payload[Formats.FAILURES].append(
                encode_tabloid(lambda_key(
                    self.__config.partition(), self.__config.qchain())))
        return CommandResult(
            payload, "holds" if report.ok else "fails", _status(report.ok))


def _status(ok: bool) -> int:
    return ExitStatus.OK if ok else ExitStatus.FAILED


def _matrix_text(rows: Sequence[Sequence[Fraction]]) -> str:
    return "\n".join(" ".join(str(entry) for entry in row) for row in rows)


def run(command: str, config: RunConfig) -> CommandResult:
    """Runs a command of the command line on a configuration.

    Parameters:
    -----------
        command (str): The command name.
        config (RunConfig): The inputs; its command field is replaced.

    Returns:
    --------
        CommandResult: The payload, text and exit status.
    """
    if command != config.command:
        config = replace(config, command=command)
    return CommandRunner(config).run()
