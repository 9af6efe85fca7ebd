# This file is part of hyperrep
# Copyright (C) 2024 The hyperrep developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
__doc__ = """
Construction of k-representations from matchings and random families.

The edge set is split into matchings ``M_0 .. M_{L-1}`` and the ground set
into ``L`` segments of ``t`` elements. Segment ``i`` receives a certified
family with one member ``R_e`` per edge ``e`` of ``M_i``; vertex ``v`` gets
``R_e`` (shifted into segment ``i``) if ``v`` lies on ``e`` and nothing
otherwise. Because the segments are disjoint, the intersection count of a
tuple is the sum of its per-segment counts.

Two parameter regimes are supported:

* ``general``: ``m = 2``, ``p = 1/(4L)``, ``t = ceil(576 L^2 ln n)``
* ``linear``: ``m = r``, ``p = (4L)^(-1/(r-1))``,
  ``t = ceil(384 (r+1) L^(r/(r-1)) ln n)``

and in both ``eps = 1/2`` and ``k = floor((1 - eps) p t)``.
"""

import logging
import math

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from hyperrep.bounds.constants import (
    EPSILON,
    GENERAL_FACTOR,
    LINEAR_FACTOR,
    RATIO_LIMIT
)
from hyperrep.core.base import Edge, Hypergraph, is_linear
from hyperrep.errors import NotLinearError, ParameterUnderflowError, RetriesExhaustedError
from hyperrep.represent.base import Mode, RepMetadata, Representation
from hyperrep.represent.family import ChernoffFamily, FamilyParams, gen_verified_family
from hyperrep.represent.matching import MatchingDecomposition, decompose
from hyperrep.represent.sets import intersection_size
from hyperrep.represent.verifier import VIOLATION_LIMIT, verify_representation
from hyperrep.stream import derive_seed

__all__ = [
    'RepParams', 'select_params', 'BuildOptions', 'build_representation',
    'assemble_representation', 'TupleClass', 'classify_tuple', 'segment_counts',
    'MatchingBound', 'PropositionReport', 'check_proposition_bounds',
    'check_linear_ratio', 'linear_ratio_bound', 'ratio_crossing',
    'linear_nonedge_bound'
]

logger = logging.getLogger(__name__)

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class RepParams:
    """Parameters of one construction.

    ``p`` is an exact :class:`~fractions.Fraction` in general mode and a
    float in linear mode.
    """

    mode: Mode
    n: int
    r: int
    L: int
    m: int
    p: Number
    epsilon: Fraction
    t: int
    k: int
    scale: float = 1.0

    @property
    def ground_size(self) -> int:
        """Returns ``L * t``."""
        return self.L * self.t

    @property
    def family_params(self) -> FamilyParams:
        """Returns the parameters every per-matching family is drawn with."""
        return FamilyParams(self.t, self.p, self.epsilon, self.m)


def select_params(n: int, L: int, r: int, mode: Union[Mode, str] = Mode.GENERAL,
                  scale: float = 1.0) -> RepParams:
    """Computes ``(m, p, eps, t, k)`` for ``n`` vertices and ``L`` matchings.

    All logarithms are natural. ``scale`` multiplies ``t`` before rounding up.

    >>> params = select_params(30, 12, 3)
    >>> params.t, params.k
    (282109, 2938)

    :param n: the vertex count, at least 2
    :type n: int
    :param L: the number of matchings, at least 1
    :type L: int
    :param r: the uniformity, at least 3
    :type r: int
    :param mode: ``general`` or ``linear``
    :type mode: Mode | str, optional
    :param scale: multiplier for ``t``, defaults to 1.0
    :type scale: float, optional
    :raises ValueError: if an argument is out of range
    :raises ParameterUnderflowError: if ``k`` comes out as zero
    :return: the parameters
    :rtype: RepParams
    """
    mode = Mode(mode)
    if n < 2:
        raise ValueError(f'Need at least 2 vertices - got {n}')
    if L < 1:
        raise ValueError(f'Need at least one matching - got L={L}')
    if r < 3:
        raise ValueError(f'Uniformity must be at least 3 - got {r}')
    if scale <= 0:
        raise ValueError(f'Scale must be positive - got {scale}')

    log_n = math.log(n)
    epsilon = EPSILON
    if mode is Mode.GENERAL:
        m = 2
        p = Fraction(1, 4 * L)
        t = math.ceil(GENERAL_FACTOR * L ** 2 * log_n * scale)
        k = math.floor((1 - epsilon) * p * t)
    else:
        m = r
        p = (4 * L) ** (-1 / (r - 1))
        t = math.ceil(LINEAR_FACTOR * (r + 1) * L ** (r / (r - 1)) * log_n * scale)
        k = math.floor(float(1 - epsilon) * p * t)

    if k < 1:
        raise ParameterUnderflowError(
            f'Threshold k is zero for n={n}, L={L}, r={r}, mode={mode}, t={t}')
    return RepParams(mode, n, r, L, m, p, epsilon, t, k, scale)


@dataclass(frozen=True)
class BuildOptions:
    """Retry limits and switches of :func:`build_representation`.

    ``workers`` greater than one samples the families of different matchings
    on a thread pool; the result does not depend on it.
    """

    max_family_retries: int = 100
    max_build_retries: int = 10
    constant_scale: float = 1.0
    verify: bool = True
    workers: int = 1
    retain_families: bool = False
    violation_limit: int = VIOLATION_LIMIT


def _gen_families(decomposition: MatchingDecomposition, params: RepParams, seed: int,
                  attempt: int, options: BuildOptions) -> Tuple[ChernoffFamily, ...]:
    family_params = params.family_params

    def generate(i: int) -> ChernoffFamily:
        return gen_verified_family(len(decomposition.matchings[i]), family_params,
                                   derive_seed(seed, 'build', attempt, i),
                                   options.max_family_retries)

    indices = range(decomposition.L)
    if options.workers > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as pool:
            return tuple(pool.map(generate, indices))
    return tuple(map(generate, indices))


def assemble_representation(graph: Hypergraph, decomposition: MatchingDecomposition,
                            families: Sequence[ChernoffFamily], params: RepParams,
                            seed: int = 0, build_attempts: int = 1,
                            retain_families: bool = False) -> Representation:
    """Builds ``S_v`` as the union over ``i`` of ``R(v, i)``, where
    ``R(v, i)`` is the family member of the edge of ``M_i`` containing ``v``
    shifted by ``i * t`` (or empty if ``M_i`` misses ``v``).

    No verification takes place.

    :param graph: the hypergraph
    :type graph: Hypergraph
    :param decomposition: its matching decomposition
    :type decomposition: MatchingDecomposition
    :param families: one family per matching, member ``j`` belonging to
                     edge ``j`` of the matching
    :type families: Sequence[ChernoffFamily]
    :param params: the construction parameters
    :type params: RepParams
    :raises ValueError: if the families do not fit the decomposition
    :return: the representation with metadata attached
    :rtype: Representation
    """
    if len(families) != decomposition.L:
        raise ValueError(f'Expected {decomposition.L} families - got {len(families)}')

    t = params.t
    pieces = [[] for _ in range(graph.n)]
    for i, (matching, family) in enumerate(zip(decomposition.matchings, families)):
        if len(family) != len(matching):
            raise ValueError(f'Family {i} has {len(family)} members for '
                             f'{len(matching)} edges')
        for edge, member in zip(matching, family.sets):
            shifted = member + i * t
            for v in edge:
                pieces[v].append(shifted)

    vertex_sets = tuple(
        np.concatenate(p) if p else np.empty(0, dtype=np.int64)
        for p in pieces
    )
    metadata = RepMetadata(
        mode=params.mode, r=graph.r, L=params.L, t=t, m=params.m, p=params.p,
        epsilon=params.epsilon, seed=seed, scale=params.scale,
        family_attempts=tuple(f.attempts for f in families),
        build_attempts=build_attempts,
        decomposition=decomposition if retain_families else None,
        families=tuple(families) if retain_families else None
    )
    return Representation(graph.n, params.k, params.ground_size, vertex_sets, metadata)


def build_representation(graph: Hypergraph, mode: Union[Mode, str] = Mode.GENERAL,
                         seed: int = 0,
                         options: Optional[BuildOptions] = None) -> Representation:
    """Constructs a k-representation of ``graph`` and checks it exhaustively.

    Each build attempt draws new families (seeds derived from ``seed``, the
    attempt and the matching index). An attempt whose result fails
    verification is discarded.

    :param graph: a hypergraph with at least one edge and ``r >= 3``
    :type graph: Hypergraph
    :param mode: ``general`` or ``linear``
    :type mode: Mode | str, optional
    :param seed: the master seed
    :type seed: int, optional
    :param options: retry limits and switches
    :type options: BuildOptions, optional
    :raises ValueError: if the hypergraph has no edges
    :raises NotLinearError: if linear mode is requested for a non-linear graph
    :raises ParameterUnderflowError: if ``k`` is zero
    :raises RetriesExhaustedError: if a family or the whole build cannot be
                                   certified within the limits
    :return: the verified representation
    :rtype: Representation
    """
    mode = Mode(mode)
    options = options or BuildOptions()
    if options.max_build_retries < 1:
        raise ValueError(f'At least one build attempt is required - got {options.max_build_retries}')
    if len(graph) == 0:
        raise ValueError('Cannot build a representation of an edgeless hypergraph')
    if mode is Mode.LINEAR and not is_linear(graph):
        raise NotLinearError('Linear construction requested for a non-linear hypergraph')

    decomposition = decompose(graph)
    params = select_params(graph.n, decomposition.L, graph.r, mode, options.constant_scale)

    report = None
    for attempt in range(options.max_build_retries):
        logger.info('build attempt %d: mode=%s L=%d t=%d k=%d', attempt + 1, mode,
                    params.L, params.t, params.k)
        families = _gen_families(decomposition, params, seed, attempt, options)
        rep = assemble_representation(graph, decomposition, families, params, seed,
                                      attempt + 1, options.retain_families)
        if not options.verify:
            return rep

        report = verify_representation(graph, rep, options.violation_limit)
        if report.valid:
            return rep
        logger.warning('build attempt %d failed verification with %d violations',
                       attempt + 1, report.violation_count)

    raise RetriesExhaustedError(
        f'No valid representation after {options.max_build_retries} build attempts',
        report, options.max_build_retries)


@dataclass(frozen=True)
class TupleClass:
    """Per-matching statistics of an r-tuple.

    ``hits[i]`` is the number of edges of ``M_i`` meeting the tuple and
    ``touching[i]`` their positions in ``M_i``; ``covered[i]`` tells whether
    ``M_i`` covers every vertex of the tuple. ``I1`` and ``I2`` list the
    non-covering and covering matchings.
    """

    tuple: Edge
    hits: Tuple[int, ...]
    covered: Tuple[bool, ...]
    touching: Tuple[Tuple[int, ...], ...]
    I1: Tuple[int, ...]
    I2: Tuple[int, ...]


def classify_tuple(decomposition: MatchingDecomposition, tuple_: Iterable[int]) -> TupleClass:
    """Computes ``a_i``, ``I1`` and ``I2`` for the given tuple.

    :param decomposition: the matching decomposition
    :type decomposition: MatchingDecomposition
    :param tuple_: ``r`` distinct vertices
    :type tuple_: Iterable[int]
    :raises ValueError: on an arity mismatch, a repeated vertex or a vertex
                        out of range
    :return: the classification
    :rtype: TupleClass
    """
    key = tuple(sorted(int(v) for v in tuple_))
    if len(key) != decomposition.r:
        raise ValueError(f'Expected {decomposition.r} vertices - got {key}')
    if len(set(key)) != len(key):
        raise ValueError(f'Repeated vertex in tuple {key}')
    if key[0] < 0 or key[-1] >= decomposition.n:
        raise ValueError(f'Vertex index out of range [0, {decomposition.n}) in {key}')

    hits, covered, touching = [], [], []
    for i in range(decomposition.L):
        owners = [decomposition.edge_of(i, v) for v in key]
        positions = tuple(sorted({o for o in owners if o is not None}))
        hits.append(len(positions))
        covered.append(None not in owners)
        touching.append(positions)

    I1 = tuple(i for i, c in enumerate(covered) if not c)
    I2 = tuple(i for i, c in enumerate(covered) if c)
    return TupleClass(key, tuple(hits), tuple(covered), tuple(touching), I1, I2)


def segment_counts(decomposition: MatchingDecomposition, families: Sequence[ChernoffFamily],
                   tuple_: Iterable[int]) -> Tuple[int, ...]:
    """Returns ``|cap_j R(v_j, i)|`` for every matching ``i``, computed from
    the families alone. The sum equals the intersection count of the
    assembled representation.
    """
    cls = classify_tuple(decomposition, tuple_)
    counts = []
    for i, family in enumerate(families):
        if not cls.covered[i]:
            counts.append(0)
            continue
        counts.append(intersection_size([family.sets[j] for j in cls.touching[i]]))
    return tuple(counts)


@dataclass(frozen=True)
class MatchingBound:
    """The check applied to one matching.

    ``kind`` is ``edge`` (count at least ``(1-eps) p t``), ``zero`` (count
    must vanish), ``order`` (at most ``(1+eps) p^a t``), ``capped`` (at most
    ``(1+eps) p^m t``) or ``free`` (no constraint).
    """

    i: int
    count: int
    hits: int
    kind: str
    bound: Optional[Number]
    holds: bool


@dataclass(frozen=True)
class PropositionReport:
    """Per-matching bounds for one tuple and their overall outcome."""

    tuple: Edge
    is_edge: bool
    total: int
    matchings: Tuple[MatchingBound, ...]
    holds: bool


def check_proposition_bounds(graph: Hypergraph, decomposition: MatchingDecomposition,
                             families: Sequence[ChernoffFamily],
                             tuple_: Iterable[int]) -> PropositionReport:
    """Checks the per-matching intersection bounds of a tuple.

    For an edge, some matching must contribute at least ``(1 - eps) p t``.
    For a non-edge, non-covering matchings contribute nothing, and a
    covering matching hit by ``a`` edges contributes at most
    ``(1 + eps) p^min(a, m) t``; covering matchings always have ``a >= 2``.

    :param graph: the hypergraph
    :type graph: Hypergraph
    :param decomposition: its matching decomposition
    :type decomposition: MatchingDecomposition
    :param families: the certified families, one per matching
    :type families: Sequence[ChernoffFamily]
    :param tuple_: ``r`` distinct vertices
    :type tuple_: Iterable[int]
    :return: the report; failed bounds are data, not errors
    :rtype: PropositionReport
    """
    cls = classify_tuple(decomposition, tuple_)
    counts = segment_counts(decomposition, families, cls.tuple)
    is_edge = cls.tuple in graph

    bounds = []
    for i, family in enumerate(families):
        params = family.params
        a, count = cls.hits[i], counts[i]
        scale = (1 + params.epsilon) * params.t
        if is_edge:
            if cls.covered[i] and a == 1:
                low = (1 - params.epsilon) * params.p * params.t
                bounds.append(MatchingBound(i, count, a, 'edge', low, count >= low))
            else:
                bounds.append(MatchingBound(i, count, a, 'free', None, True))
        elif not cls.covered[i]:
            bounds.append(MatchingBound(i, count, a, 'zero', 0, count == 0))
        elif a <= params.m:
            high = scale * params.p ** a
            bounds.append(MatchingBound(i, count, a, 'order', high, a >= 2 and count <= high))
        else:
            high = scale * params.p ** params.m
            bounds.append(MatchingBound(i, count, a, 'capped', high, count <= high))

    if is_edge:
        holds = any(b.holds for b in bounds if b.kind == 'edge')
    else:
        holds = all(b.holds for b in bounds)
    return PropositionReport(cls.tuple, is_edge, sum(counts), tuple(bounds), holds)


def check_linear_ratio(L: int, r: int, epsilon: Number = EPSILON) -> float:
    """Returns the ratio between the non-edge bound and the edge bound of the
    linear construction,
    ``((1+eps)/(1-eps)) ((L - C(r,2)) p^(r-1) + C(r,2) p)`` with
    ``p = (4L)^(-1/(r-1))``.

    >>> round(check_linear_ratio(12, 3), 3)
    1.861

    :raises ValueError: if ``L < 1`` or ``r < 3``
    :return: the ratio; the construction separates whenever it is below 5/6
    :rtype: float
    """
    if L < 1 or r < 3:
        raise ValueError(f'Need L >= 1 and r >= 3 - got L={L}, r={r}')
    pairs = math.comb(r, 2)
    p = (4 * L) ** (-1 / (r - 1))
    # p^(r-1) is exactly 1/(4L)
    chain = Fraction(L - pairs, 4 * L) + Fraction(pairs) * Fraction(p)
    return float(Fraction(1 + epsilon) / Fraction(1 - epsilon) * chain)


def linear_ratio_bound(L: int, r: int, epsilon: Number = EPSILON) -> float:
    """Returns ``((1+eps)/(1-eps)) (1/4 + C(r,2) (4L)^(-1/(r-1)))``, the
    simplified upper estimate of :func:`check_linear_ratio`.

    :raises ValueError: if ``L < 1`` or ``r < 3``
    """
    if L < 1 or r < 3:
        raise ValueError(f'Need L >= 1 and r >= 3 - got L={L}, r={r}')
    factor = float((1 + epsilon) / (1 - epsilon))
    return factor * (0.25 + math.comb(r, 2) * (4 * L) ** (-1 / (r - 1)))


def ratio_crossing(r: int, epsilon: Number = EPSILON, start: int = 1, stop: int = 10 ** 6,
                   ratio: Callable[[int, int, Number], float] = check_linear_ratio,
                   limit: Number = RATIO_LIMIT) -> Optional[int]:
    """Scans ``L = start, start + 1, ...`` and returns the first ``L`` below
    ``stop`` whose ratio is smaller than ``limit`` (None if there is none).
    """
    for L in range(max(start, 1), stop):
        if ratio(L, r, epsilon) < limit:
            return L
    return None


def linear_nonedge_bound(L: int, r: int, params: Union[RepParams, FamilyParams]) -> float:
    """Returns ``(1+eps) ((L - C(r,2)) p^r t + C(r,2) p^2 t)``, the bound on
    the intersection count of a non-edge in a linear hypergraph."""
    pairs = math.comb(r, 2)
    p = float(params.p)
    return float(1 + params.epsilon) * ((L - pairs) * p ** r + pairs * p ** 2) * params.t
