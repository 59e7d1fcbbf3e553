import logging
import os

from dotenv import load_dotenv
import pytest

from dehngoeritz.analysis import Analysis, analyze
from dehngoeritz.pdcode import Diagram, faces, parse_pd

from tests.knots import (
    KINK,
    KNOT_8_19,
    LABELED_8_19_CORNERS,
    TREFOIL,
    TREFOIL_SUM,
)

load_dotenv()

# Set DEHNGOERITZ_LOG_LEVEL=DEBUG to see pipeline logging in failing tests.
logging.getLogger("dehngoeritz").setLevel(os.getenv("DEHNGOERITZ_LOG_LEVEL", "WARNING").upper())


@pytest.fixture(scope="class")
def trefoil() -> Diagram:
    return parse_pd(TREFOIL, name="3_1")


@pytest.fixture(scope="class")
def diagram_8_19() -> Diagram:
    return parse_pd(KNOT_8_19, name="8_19")


@pytest.fixture(scope="class")
def kink() -> Diagram:
    return parse_pd(KINK, name="kink")


@pytest.fixture(scope="class")
def unknot() -> Diagram:
    return parse_pd("unknot")


@pytest.fixture(scope="class")
def trefoil_sum() -> Diagram:
    return parse_pd(TREFOIL_SUM, name="3_1#3_1")


@pytest.fixture(scope="class")
def labeled_order_8_19(diagram_8_19):
    """Region indices of R1, ..., R9, R0 of the reference 8_19 labeling."""
    regions = faces(diagram_8_19)
    return [regions.region_at(x, q) for x, q in LABELED_8_19_CORNERS]


@pytest.fixture(scope="class")
def analysis_8_19(diagram_8_19, labeled_order_8_19) -> Analysis:
    return analyze(diagram_8_19, order=labeled_order_8_19)


@pytest.fixture(scope="class")
def analysis_trefoil(trefoil) -> Analysis:
    return analyze(trefoil)


@pytest.fixture(scope="class")
def analysis_trefoil_outer(trefoil) -> Analysis:
    """The trefoil shaded on its two triangular regions."""
    return analyze(trefoil, shade=1)


@pytest.fixture(scope="class")
def analysis_kink(kink) -> Analysis:
    return analyze(kink)


@pytest.fixture(scope="class")
def analysis_unknot(unknot) -> Analysis:
    return analyze(unknot)


@pytest.fixture(scope="class")
def analysis_trefoil_sum(trefoil_sum) -> Analysis:
    return analyze(trefoil_sum)
