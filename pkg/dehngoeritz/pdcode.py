"""
Planar diagram codes and the combinatorial map of a knot diagram.

A crossing ``X[a,b,c,d]`` lists its four edge-ends counterclockwise,
starting from the incoming under-strand: the under-strand runs from ``a``
to ``c`` and the over-strand joins ``b`` and ``d``. Corner ``q`` of a
crossing is the angle between edge-ends ``q`` and ``q + 1`` (mod 4).
"""

from __future__ import annotations

from collections import Counter
import logging
import re
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, StrictInt, ValidationError, root_validator, validator

from dehngoeritz.errors import (
    BadIncidenceError,
    BadOrderingError,
    DiagramInputError,
    IndexOutOfRangeError,
    MalformedRecordError,
    NoProperColoringError,
    NotPlanarKnotError,
)

logger = logging.getLogger(__name__)

# (crossing, edge-end slot 0..3)
Position = Tuple[int, int]
# (crossing, corner 0..3)
Corner = Tuple[int, int]
Crossing = Tuple[StrictInt, StrictInt, StrictInt, StrictInt]

UNKNOT_TOKEN = "unknot"


def check_incidence(crossings: Sequence[Sequence[int]]) -> None:
    """Raise BadIncidenceError unless every edge label appears exactly twice."""
    counts = Counter(label for crossing in crossings for label in crossing)
    wrong = sorted(label for label, count in counts.items() if count != 2)
    if wrong:
        raise BadIncidenceError(
            "each edge label must appear exactly twice; "
            + ", ".join(f"{label} appears {counts[label]} time(s)" for label in wrong)
        )


def _edge_ends(crossings: Sequence[Sequence[int]]) -> Dict[int, List[Position]]:
    ends: Dict[int, List[Position]] = {}
    for x, crossing in enumerate(crossings):
        for slot, label in enumerate(crossing):
            ends.setdefault(label, []).append((x, slot))
    return ends


def _other_end(
    crossings: Sequence[Sequence[int]],
    ends: Dict[int, List[Position]],
    position: Position,
) -> Position:
    x, slot = position
    first, second = ends[crossings[x][slot]]
    return second if first == position else first


def _trace_faces(crossings: Sequence[Sequence[int]]) -> List[Tuple[Corner, ...]]:
    """Walk the corners of the map; each closed walk is one face."""
    ends = _edge_ends(crossings)
    seen = set()
    found = []
    for x in range(len(crossings)):
        for q in range(4):
            if (x, q) in seen:
                continue
            face = []
            corner = (x, q)
            while corner not in seen:
                seen.add(corner)
                face.append(corner)
                corner = _other_end(crossings, ends, (corner[0], (corner[1] + 1) % 4))
            if corner != (x, q):
                raise NotPlanarKnotError(
                    f"face walk from corner {(x, q)} did not close on itself"
                )
            found.append(tuple(face))
    return found


def _component_edges(crossings: Sequence[Sequence[int]]) -> int:
    """Count the edges met by following the strand through edge-end (0, 0)."""
    ends = _edge_ends(crossings)
    visited = set()
    position: Position = (0, 0)
    while True:
        x, slot = position
        leaving = (x, (slot + 2) % 4)
        label = crossings[x][leaving[1]]
        if label in visited:
            break
        visited.add(label)
        position = _other_end(crossings, ends, leaving)
    return len(visited)


def check_planar_knot(crossings: Sequence[Sequence[int]]) -> None:
    """
    Raise NotPlanarKnotError unless the crossings form a planar knot diagram.

    The strand through the first crossing must pass every edge, and the
    face walk must find exactly ``c + 2`` faces.
    """
    if not crossings:
        return
    edge_count = 2 * len(crossings)
    on_strand = _component_edges(crossings)
    if on_strand != edge_count:
        raise NotPlanarKnotError(
            f"the strand through crossing 0 passes {on_strand} of {edge_count} edges; "
            "multi-component diagrams are not supported"
        )
    face_count = len(_trace_faces(crossings))
    if face_count != len(crossings) + 2:
        raise NotPlanarKnotError(
            f"found {face_count} faces, but a planar diagram with "
            f"{len(crossings)} crossings has {len(crossings) + 2}"
        )


class Diagram(BaseModel):
    r"""
    A knot diagram given by its planar diagram code.

    :param crossings:
        one 4-tuple of edge labels per crossing, counterclockwise from
        the incoming under-strand. An empty tuple is the zero-crossing unknot.

    :param name:
        an optional label such as ``"8_19"``
    """

    crossings: Tuple[Crossing, ...] = ()
    name: Optional[str] = None

    class Config:
        frozen = True

    @validator("crossings")
    def crossings_form_planar_knot(cls, value):
        if any(label < 1 for crossing in value for label in crossing):
            raise MalformedRecordError("edge labels must be positive")
        check_incidence(value)
        check_planar_knot(value)
        return value

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return len({label for crossing in self.crossings for label in crossing})

    @property
    def is_unknot(self) -> bool:
        """Whether this is the distinguished zero-crossing diagram."""
        return not self.crossings

    def edge_ends(self) -> Dict[int, List[Position]]:
        """Map each edge label to its two (crossing, slot) ends."""
        return _edge_ends(self.crossings)

    def other_end(self, position: Position) -> Position:
        return _other_end(self.crossings, self.edge_ends(), position)

    def crossing_graph(self) -> nx.MultiGraph:
        """Return the 4-valent graph with one node per crossing and one edge per label."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.crossing_count))
        for label, ((x, _), (y, _)) in self.edge_ends().items():
            graph.add_edge(x, y, label=label)
        return graph

    def pd_text(self) -> str:
        if self.is_unknot:
            return UNKNOT_TOKEN
        return " ".join(
            "X[" + ",".join(str(label) for label in crossing) + "]"
            for crossing in self.crossings
        )

    def __str__(self):
        if self.name:
            return f"{self.name}: {self.pd_text()}"
        return self.pd_text()


def parse_pd(text: str, name: Optional[str] = None) -> Diagram:
    """
    Read a planar diagram code.

    Crossings may be written ``X 1 4 2 5`` or ``X[1,4,2,5]``, separated
    by whitespace, newlines or slashes, optionally wrapped in ``PD[...]``.
    Text after ``#`` on a line is a comment. The single token ``unknot``
    gives the zero-crossing diagram.

    :param text:
        the diagram code

    :param name:
        optional label stored on the :class:`Diagram`

    :returns:
        a validated :class:`Diagram` with crossings in input order
    """
    body = " ".join(line.split("#", 1)[0] for line in text.splitlines())
    tokens = re.sub(r"[\[\](),;/]", " ", body).split()
    if tokens and tokens[0].upper() == "PD":
        tokens = tokens[1:]
    if [token.lower() for token in tokens] == [UNKNOT_TOKEN]:
        return Diagram(name=name)
    if not tokens:
        raise MalformedRecordError("no crossing records found")

    records: List[List[str]] = []
    for token in tokens:
        if token.upper() == "X":
            records.append([])
        elif not records:
            raise MalformedRecordError(f'expected a crossing record "X", found "{token}"')
        else:
            records[-1].append(token)

    crossings = []
    for number, record in enumerate(records):
        if len(record) != 4:
            raise MalformedRecordError(
                f"crossing {number} has {len(record)} labels instead of 4: {record}"
            )
        try:
            labels = tuple(int(token) for token in record)
        except ValueError:
            raise MalformedRecordError(f"crossing {number} has a non-integer label: {record}")
        crossings.append(labels)

    try:
        diagram = Diagram(crossings=tuple(crossings), name=name)
    except ValidationError as error:
        for wrapper in error.raw_errors:
            if isinstance(getattr(wrapper, "exc", None), DiagramInputError):
                raise wrapper.exc from None
        raise
    logger.debug("parsed %d crossings", len(crossings))
    return diagram


class RegionSet(BaseModel):
    r"""
    The complementary regions (faces) of a diagram.

    :param crossing_count:
        crossings of the diagram the faces belong to

    :param regions:
        each face as its cyclic list of (crossing, corner) pairs, in
        discovery order

    :param boundaries:
        for each face, the edge labels met while walking around it
    """

    crossing_count: int
    regions: Tuple[Tuple[Tuple[int, int], ...], ...]
    boundaries: Tuple[Tuple[int, ...], ...]

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def corners_partitioned(cls, values):
        count = values["crossing_count"]
        regions = values["regions"]
        if len(regions) != count + 2:
            raise ValueError(f"{count} crossings need {count + 2} regions, not {len(regions)}")
        if len(values["boundaries"]) != len(regions):
            raise ValueError("every region needs a boundary")
        corners = [corner for region in regions for corner in region]
        expected = {(x, q) for x in range(count) for q in range(4)}
        if len(corners) != len(expected) or set(corners) != expected:
            raise ValueError("every corner must belong to exactly one region")
        return values

    @property
    def region_count(self) -> int:
        return len(self.regions)

    def corner_map(self) -> Dict[Corner, int]:
        return {
            corner: index
            for index, region in enumerate(self.regions)
            for corner in region
        }

    def region_at(self, crossing: int, corner: int) -> int:
        """Find the region in a corner of a crossing."""
        try:
            return self.corner_map()[(crossing, corner % 4)]
        except KeyError:
            raise IndexOutOfRangeError(f"no crossing {crossing} in a diagram with {self.crossing_count}")

    def corners_at(self, crossing: int) -> Tuple[int, int, int, int]:
        """Return the regions in corners 0..3 of a crossing."""
        lookup = self.corner_map()
        if not 0 <= crossing < self.crossing_count:
            raise IndexOutOfRangeError(f"no crossing {crossing} in a diagram with {self.crossing_count}")
        return tuple(lookup[(crossing, q)] for q in range(4))  # type: ignore

    def adjacency_graph(self) -> nx.Graph:
        """Return the graph joining regions that share an edge."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.region_count))
        if self.crossing_count == 0:
            graph.add_edge(0, 1)
        lookup = self.corner_map()
        for x in range(self.crossing_count):
            for q in range(4):
                graph.add_edge(lookup[(x, q)], lookup[(x, (q + 1) % 4)])
        return graph


def faces(diagram: Diagram) -> RegionSet:
    """
    Find the complementary regions of a diagram.

    From corner ``q`` of crossing ``x``, the face continues along the edge
    at slot ``q + 1`` to that edge's far end ``(y, p)``, and corner ``p``
    of crossing ``y`` is the next corner of the same face.
    """
    if diagram.is_unknot:
        return RegionSet(crossing_count=0, regions=((), ()), boundaries=((), ()))
    walked = _trace_faces(diagram.crossings)
    boundaries = tuple(
        tuple(diagram.crossings[x][(q + 1) % 4] for x, q in face) for face in walked
    )
    logger.debug(
        "found %d faces with sizes %s", len(walked), [len(face) for face in walked]
    )
    return RegionSet(
        crossing_count=diagram.crossing_count,
        regions=tuple(walked),
        boundaries=boundaries,
    )


class Checkerboard(BaseModel):
    r"""
    A checkerboard coloring with the shaded regions ordered first.

    :param ordering:
        every region index once; the first ``b`` are shaded

    :param b:
        number of shaded regions
    """

    ordering: Tuple[int, ...]
    b: int

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def ordering_is_permutation(cls, values):
        ordering = values["ordering"]
        if sorted(ordering) != list(range(len(ordering))):
            raise ValueError("ordering must list every region exactly once")
        if len(ordering) >= 2 and not 1 <= values["b"] <= len(ordering) - 1:
            raise ValueError("both color classes must be nonempty")
        return values

    @property
    def shaded(self) -> FrozenSet[int]:
        return frozenset(self.ordering[: self.b])

    @property
    def unshaded(self) -> FrozenSet[int]:
        return frozenset(self.ordering[self.b :])

    @property
    def region_count(self) -> int:
        return len(self.ordering)

    def is_shaded(self, region: int) -> bool:
        return region in self.ordering[: self.b]

    def column_of(self, region: int) -> int:
        """Return the matrix column for a region."""
        return self.ordering.index(region)


def checkerboard(
    diagram: Diagram,
    regions: RegionSet,
    shade: Optional[int] = None,
    order: Optional[Sequence[int]] = None,
) -> Checkerboard:
    """
    Two-color the regions and put the shaded class first.

    :param shade:
        a region to put in the shaded class. Defaults to ``order[0]`` if an
        order is given, otherwise to the region in corner 0 of crossing 0.

    :param order:
        optional full ordering of the regions, shaded class first, used as
        the matrix column order. Without it, shaded then unshaded regions
        each follow discovery order.
    """
    count = regions.region_count
    if shade is None:
        if order:
            shade = order[0]
        elif diagram.is_unknot:
            shade = 0
        else:
            shade = regions.region_at(0, 0)
    if not 0 <= shade < count:
        raise IndexOutOfRangeError(f"no region {shade} among {count} regions")

    graph = regions.adjacency_graph()
    color = {shade: 0}
    for parent, child in nx.bfs_edges(graph, shade):
        color[child] = 1 - color[parent]
    if len(color) != count:
        raise NoProperColoringError("the region adjacency graph is disconnected")
    for u, v in graph.edges:
        if color[u] == color[v]:
            raise NoProperColoringError(f"regions {u} and {v} share an edge and a color")

    shaded = [r for r in range(count) if color[r] == 0]
    unshaded = [r for r in range(count) if color[r] == 1]
    if order is None:
        ordering = shaded + unshaded
    else:
        ordering = list(order)
        if sorted(ordering) != list(range(count)):
            raise BadOrderingError(f"order must list each of the {count} regions once")
        if set(ordering[: len(shaded)]) != set(shaded):
            raise BadOrderingError(
                f"order must start with the shaded regions {sorted(shaded)}"
            )
    logger.debug("shaded regions %s", shaded)
    return Checkerboard(ordering=tuple(ordering), b=len(shaded))


class GoeritzIndexTable(BaseModel):
    r"""
    The Goeritz index of every crossing.

    :param index:
        one value in ``{-1, +1}`` per crossing, in crossing order
    """

    index: Tuple[StrictInt, ...]

    class Config:
        frozen = True

    @validator("index", each_item=True)
    def index_is_sign(cls, value):
        if value not in (-1, 1):
            raise ValueError(f"Goeritz index must be -1 or 1, not {value}")
        return value

    def __getitem__(self, crossing: int) -> int:
        return self.index[crossing]

    def __len__(self) -> int:
        return len(self.index)

    def negated(self) -> GoeritzIndexTable:
        return GoeritzIndexTable(index=tuple(-value for value in self.index))


def goeritz_index(
    diagram: Diagram, regions: RegionSet, board: Checkerboard, crossing: int
) -> int:
    """
    Find the Goeritz index of one crossing.

    :returns:
        ``1`` if the shaded corners are 0 and 2 (each just counterclockwise
        of an under-strand end), ``-1`` if they are 1 and 3
    """
    if not 0 <= crossing < diagram.crossing_count:
        raise IndexOutOfRangeError(
            f"no crossing {crossing} in a diagram with {diagram.crossing_count}"
        )
    at = regions.corners_at(crossing)
    shaded_corners = [q for q in range(4) if board.is_shaded(at[q])]
    if shaded_corners == [0, 2]:
        return 1
    if shaded_corners == [1, 3]:
        return -1
    raise NoProperColoringError(
        f"crossing {crossing} has shaded corners {shaded_corners}"
    )


def goeritz_indices(
    diagram: Diagram, regions: RegionSet, board: Checkerboard
) -> GoeritzIndexTable:
    return GoeritzIndexTable(
        index=tuple(
            goeritz_index(diagram, regions, board, x)
            for x in range(diagram.crossing_count)
        )
    )


def shared_edge_counts(diagram: Diagram, regions: RegionSet) -> Counter:
    """Count, for each pair of regions, the edges they share."""
    shared: Counter = Counter()
    lookup = regions.corner_map()
    for label, ((x, slot), _) in diagram.edge_ends().items():
        pair = frozenset((lookup[(x, (slot - 1) % 4)], lookup[(x, slot)]))
        shared[pair] += 1
    return shared


def is_prime_diagram(diagram: Diagram, regions: RegionSet) -> bool:
    """
    Test the combinatorial stand-in for a prime diagram.

    The diagram must be connected with at least one crossing, no region
    may fill two corners of one crossing, and no two regions may share
    more than one edge.
    """
    if diagram.is_unknot:
        return False
    if not nx.is_connected(diagram.crossing_graph()):
        return False
    for x in range(diagram.crossing_count):
        if len(set(regions.corners_at(x))) < 4:
            logger.debug("crossing %d is nugatory", x)
            return False
    shared = shared_edge_counts(diagram, regions)
    pair, most = shared.most_common(1)[0]
    if most >= 2:
        logger.debug("regions %s share %d edges", sorted(pair), most)
        return False
    return True
