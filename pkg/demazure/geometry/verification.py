import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Final, List, Optional, Sequence, Tuple, Union

from demazure.chains.bruhat import chains_below, enumerate_chains
from demazure.chains.qchain import QChain, lambda_key
from demazure.chains.qset import QSet
from demazure.exceptions.exceptions import ChainError, VerificationError
from demazure.exceptions.messages import Messages
from demazure.geometry.cells import sample_cell, sample_schubert
from demazure.geometry.preferred import (
    free_entries, is_q_preferred, q_preferred_reduce)
from demazure.linalg.minors import eval_monomial
from demazure.linalg.rational_matrix import RationalMatrix
from demazure.linalg.sampling import MatrixSampler
from demazure.scanning.demazure import enumerate_demazure
from demazure.straightening.combination import LinearCombination
from demazure.tableaux.enumeration import enumerate_tabloids
from demazure.tableaux.partition import Partition
from demazure.tableaux.tabloid import Tabloid
from demazure.types.types import Types


_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndependenceReport:
    """Represents the exact rank of the pi-Demazure monomials sampled 
    on the cell C(pi).

    Attributes:
    -----------
        ok (bool): Whether the rank equals the basis size.
        rank (int): The rank of the evaluation matrix.
        basis_size (int): The number of pi-Demazure tableaux.
        samples (int): The number of sampled points actually used.
        seed (int): The seed of the sampler.
    """
    ok: bool
    rank: int
    basis_size: int
    samples: int
    seed: int


@dataclass(frozen=True)
class VanishingReport:
    """Represents the vanishing checks on samples of C(pi) and X(pi).

    Attributes:
    -----------
        ok (bool): Whether no failure was found.
        samples (int): The number of samples drawn from each set.
        key_vanished (int): How many samples of C(pi) had a zero 
            lambda-key monomial.
        nonvanishing (Tuple[Tabloid, ...]): The tabloids not dominated 
            by the lambda-key that were nonzero on some sample of X(pi).
        seed (int): The seed of the sampler.
    """
    ok: bool
    samples: int
    key_vanished: int
    nonvanishing: Tuple[Tabloid, ...]
    seed: int


@dataclass(frozen=True)
class ChainReport:
    """Represents a check run over a family of chains.

    Attributes:
    -----------
        ok (bool): Whether no failure was found.
        checked (int): The number of chains or pairs checked.
        failures (Tuple[str, ...]): A description of each failure.
    """
    ok: bool
    checked: int
    failures: Tuple[str, ...]


@dataclass(frozen=True)
class ClosureReport:
    """Represents the closure check of one combination.

    Attributes:
    -----------
        ok (bool): False only if the combination vanished on C(pi) 
            but not on some lower cell.
        vanishes_on_cell (bool): Whether it vanished on every sample 
            of C(pi).
        failures (Tuple[QChain, ...]): The lower chains where it did 
            not vanish.
    """
    ok: bool
    vanishes_on_cell: bool
    failures: Tuple[QChain, ...]


def _sampler(seed: Union[int, MatrixSampler]) -> MatrixSampler:
    return seed if isinstance(seed, MatrixSampler) else MatrixSampler(seed)


def _require_full_q(shape: Partition, qset: QSet) -> None:
    if tuple(shape.q_set) != tuple(qset.q):
        raise ChainError(Messages.QSET_MISMATCH.format(
            expected=list(qset.q), current=list(shape.q_set)))


def evaluation_vector(
        shape: Partition, matrix: RationalMatrix,
        tabloids: Optional[Sequence[Tabloid]] = None
    ) -> Tuple[Fraction, ...]:
    """Evaluates every tabloid monomial of a shape at a matrix, in 
    total order unless an explicit list is given."""
    tabloids = enumerate_tabloids(shape) if tabloids is None else tabloids
    return tuple(eval_monomial(tabloid, matrix) for tabloid in tabloids)


def proportional(
        first: Sequence[Fraction], second: Sequence[Fraction]) -> bool:
    """Checks whether first = alpha * second for a nonzero alpha."""
    if len(first) != len(second):
        return False
    if any(bool(a) != bool(b) for a, b in zip(first, second)):
        return False
    pairs = [(a, b) for a, b in zip(first, second) if b]
    if not pairs:
        return True
    factor = pairs[0][0] / pairs[0][1]
    return all(a == factor * b for a, b in pairs)


def projective_factor(
        shape: Partition, first: RationalMatrix, second: RationalMatrix
    ) -> Fraction:
    """Finds the single alpha with tau(g) = alpha * tau(h) for all 
    tabloid monomials tau of a shape.

    Parameters:
    -----------
        shape (Partition): The shape lambda.
        first (RationalMatrix): The basis g.
        second (RationalMatrix): The basis h.

    Returns:
    --------
        Fraction: The factor alpha, 1 if every monomial vanishes at h.

    Raises:
    -------
        VerificationError: If no single factor fits every monomial.
    """
    factor: Optional[Fraction] = None
    for tabloid in enumerate_tabloids(shape):
        value = eval_monomial(tabloid, first)
        other = eval_monomial(tabloid, second)
        if factor is None and other:
            factor = value / other
        elif value != (factor or 0) * other:
            raise VerificationError(Messages.NOT_PROPORTIONAL.format(
                tabloid=tabloid, factor=factor))
    return Fraction(1) if factor is None else factor


class IndependenceSampling:
    """Sample counts of the rank certification.

    Attributes:
    -----------
        MULTIPLIER (Final[int]): Default samples per basis element.
        CAP_FACTOR (Final[int]): The sampling stops once the count 
            reaches CAP_FACTOR times the initial count plus CAP_SLACK.
        CAP_SLACK (Final[int]): See CAP_FACTOR.
    """

    MULTIPLIER: Final[int] = 2
    CAP_FACTOR: Final[int] = 4
    CAP_SLACK: Final[int] = 8


def verify_independence(
        shape: Partition, chain: QChain, seed: int,
        samples: Optional[int] = None
    ) -> IndependenceReport:
    """Certifies that the pi-Demazure monomials are linearly independent 
    on X(pi).

    The monomials are evaluated at points b * s_pi of the cell; the 
    exact rank of the evaluation matrix must equal the number of 
    monomials. More points are drawn while the rank falls short, up to 
    a cap.

    Parameters:
    -----------
        shape (Partition): The shape lambda.
        chain (QChain): The chain pi, with Q(lambda) inside Q.
        seed (int): The sampler seed.
        samples (Optional[int]): The initial number of points. 
            Defaults to None, twice the basis size.

    Returns:
    --------
        IndependenceReport: The rank and sizes found.
    """
    basis = enumerate_demazure(shape, chain)
    sampler = MatrixSampler(seed)
    count = samples or IndependenceSampling.MULTIPLIER * len(basis)
    cap = IndependenceSampling.CAP_FACTOR * count + IndependenceSampling.CAP_SLACK
    rows: List[Tuple[Fraction, ...]] = []
    rank = 0
    while True:
        while len(rows) < count:
            rows.append(evaluation_vector(
                shape, sample_cell(chain, sampler), basis))
        rank = RationalMatrix(rows).rank()
        if rank == len(basis) or count >= cap:
            break
        count = min(cap, count + len(basis))
        _logger.info(
            "Rank %d below %d after %d samples, drawing more",
            rank, len(basis), len(rows))
    _logger.debug(
        "Independence of %d monomials for %s: rank %d from %d samples",
        len(basis), chain, rank, len(rows))
    return IndependenceReport(
        rank == len(basis), rank, len(basis), len(rows), seed)


def verify_vanishing(
        shape: Partition, chain: QChain, seed: int, samples: int = 50
    ) -> VanishingReport:
    """Checks that the lambda-key monomial is nonzero on C(pi) and that 
    every monomial not dominated by the lambda-key vanishes on X(pi)."""
    sampler = MatrixSampler(seed)
    key = lambda_key(shape, chain)
    outside = [
        tabloid for tabloid in enumerate_tabloids(shape)
        if not tabloid.dominated_by(key)]
    key_vanished = 0
    nonvanishing: List[Tabloid] = []
    for _ in range(samples):
        if not eval_monomial(key, sample_cell(chain, sampler)):
            key_vanished += 1
        point = sample_schubert(chain, sampler)
        for tabloid in outside:
            if tabloid not in nonvanishing and eval_monomial(tabloid, point):
                nonvanishing.append(tabloid)
    if key_vanished or nonvanishing:
        _logger.warning(
            "Vanishing check failed for %s: key vanished %d times, "
            "%d monomials nonzero", chain, key_vanished, len(nonvanishing))
    return VanishingReport(
        not key_vanished and not nonvanishing, samples, key_vanished,
        tuple(nonvanishing), seed)


def verify_zero_set(
        shape: Partition, chain: QChain, seed: int, samples: int = 10
    ) -> ChainReport:
    """Checks that every cell C(rho) outside X(pi) carries a nonzero 
    monomial of the vanishing span: the lambda-key of rho, which is 
    not dominated by the lambda-key of pi.

    Raises:
    -------
        ChainError: If Q(lambda) differs from Q.
    """
    _require_full_q(shape, chain.qset)
    sampler = MatrixSampler(seed)
    below = set(chains_below(chain))
    bound = lambda_key(shape, chain)
    failures: List[str] = []
    outside = [
        other for other in enumerate_chains(chain.qset) if other not in below]
    for other in outside:
        key = lambda_key(shape, other)
        if key.dominated_by(bound):
            failures.append("%s: key %s is dominated" % (other, key))
            continue
        for _ in range(samples):
            if not eval_monomial(key, sample_cell(other, sampler)):
                failures.append("%s: key %s vanished" % (other, key))
                break
    return ChainReport(not failures, len(outside), tuple(failures))


def verify_injective(
        shape: Partition, qset: QSet, seed: int, samples: int = 2
    ) -> ChainReport:
    """Checks that distinct Q-flags have non-proportional evaluation 
    vectors.

    For every pair of sampled points, drawn from every cell, the 
    evaluation vectors are proportional exactly when the two points 
    share their Q-preferred basis.

    Raises:
    -------
        ChainError: If Q(lambda) differs from Q.
    """
    _require_full_q(shape, qset)
    sampler = MatrixSampler(seed)
    points = [
        sample_cell(chain, sampler)
        for chain in enumerate_chains(qset) for _ in range(samples)]
    vectors = [evaluation_vector(shape, point) for point in points]
    reduced = [q_preferred_reduce(point, qset).matrix for point in points]
    failures: List[str] = []
    pairs = list(combinations(range(len(points)), 2))
    for first, second in pairs:
        same_flag = reduced[first] == reduced[second]
        if proportional(vectors[first], vectors[second]) != same_flag:
            failures.append("%r and %r" % (points[first], points[second]))
    return ChainReport(not failures, len(pairs), tuple(failures))


def verify_closure(
        combination: LinearCombination, chain: QChain, seed: int,
        samples: int = 50
    ) -> ClosureReport:
    """Checks that a combination vanishing on C(pi) vanishes on every 
    lower cell C(rho) as well."""
    sampler = MatrixSampler(seed)
    vanishes = not any(
        combination.evaluate(sample_cell(chain, sampler))
        for _ in range(samples))
    failures: List[QChain] = []
    if vanishes:
        for other in chains_below(chain):
            if any(combination.evaluate(sample_cell(other, sampler))
                   for _ in range(samples)):
                failures.append(other)
    return ClosureReport(not failures, vanishes, tuple(failures))


def verify_free_entries(
        matrix: RationalMatrix, qset: QSet, seed: int) -> ChainReport:
    """Checks that every free entry of the Q-preferred basis of a 
    matrix is a genuine coordinate: perturbing it keeps the basis 
    Q-preferred and changes the flag."""
    sampler = MatrixSampler(seed)
    basis = q_preferred_reduce(matrix, qset)
    failures: List[str] = []
    entries: Tuple[Types.Location, ...] = free_entries(basis)
    for location in entries:
        changed = basis.matrix.replaced({
            location: basis.matrix[location] + sampler.nonzero_entry()})
        if not is_q_preferred(changed, qset):
            failures.append("%s: not Q-preferred" % (location,))
        elif q_preferred_reduce(changed, qset).matrix == basis.matrix:
            failures.append("%s: same flag" % (location,))
    return ChainReport(not failures, len(entries), tuple(failures))
