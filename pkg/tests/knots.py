"""PD codes and reference matrices used across the test suite."""

from typing import Dict, List, Tuple


def torus_knot_pd(n: int) -> str:
    """PD code of the standard diagram of the (2, n) torus knot, n odd."""
    size = 2 * n

    def label(k: int) -> int:
        return (k - 1) % size + 1

    return " ".join(
        f"X[{label(2 * k + 1)},{label(2 * k + n + 1)},{label(2 * k + 2)},{label(2 * k + n + 2)}]"
        for k in range(n)
    )


TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
KNOT_5_2 = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]"
KNOT_6_1 = "X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]"
KNOT_6_2 = "X[1,4,2,5] X[5,10,6,11] X[3,9,4,8] X[9,3,10,2] X[7,12,8,1] X[11,6,12,7]"
KNOT_6_3 = "X[4,2,5,1] X[8,4,9,3] X[12,9,1,10] X[10,5,11,6] X[6,11,7,12] X[2,8,3,7]"
KNOT_8_19 = (
    "X[1,8,2,9] X[2,13,3,14] X[5,16,6,1] X[6,11,7,12] "
    "X[9,14,10,15] X[10,3,11,4] X[12,7,13,8] X[15,4,16,5]"
)
KINK = "X[1,1,2,2]"
TREFOIL_SUM = (
    "X[1,4,2,5] X[3,6,4,7] X[5,2,6,3] X[7,10,8,11] X[9,12,10,1] X[11,8,12,9]"
)

# name -> (PD code, knot determinant)
PRIME_KNOTS: Dict[str, Tuple[str, int]] = {
    "3_1": (TREFOIL, 3),
    "4_1": (FIGURE_EIGHT, 5),
    "5_1": (torus_knot_pd(5), 5),
    "5_2": (KNOT_5_2, 7),
    "6_1": (KNOT_6_1, 9),
    "6_2": (KNOT_6_2, 11),
    "6_3": (KNOT_6_3, 13),
    "7_1": (torus_knot_pd(7), 7),
    "8_19": (KNOT_8_19, 3),
    "9_1": (torus_knot_pd(9), 9),
}

OTHER_DIAGRAMS: Dict[str, Tuple[str, int]] = {
    "unknot": ("unknot", 1),
    "kink": (KINK, 1),
    "3_1#3_1": (TREFOIL_SUM, 9),
}

ALL_DIAGRAMS: Dict[str, Tuple[str, int]] = {**PRIME_KNOTS, **OTHER_DIAGRAMS}

# (crossing, corner) of each reference region R1, ..., R9, R0 of the 8_19 diagram
LABELED_8_19_CORNERS: List[Tuple[int, int]] = [
    (0, 3),
    (0, 1),
    (3, 2),
    (1, 2),
    (2, 1),
    (0, 0),
    (0, 2),
    (1, 1),
    (4, 2),
    (2, 0),
]

DEHN_8_19 = [
    [-1, 1, 0, 0, 0, -1, 1, 0, 0, 0],
    [0, -1, 0, 1, 0, 0, -1, 1, 0, 0],
    [-1, 0, 0, 0, 1, 1, 0, 0, 0, -1],
    [0, 0, 1, 0, -1, -1, 0, 1, 0, 0],
    [-1, 0, 0, 1, 0, 0, -1, 0, 1, 0],
    [0, 0, 0, -1, 1, 0, 0, 1, -1, 0],
    [0, 1, -1, 0, 0, -1, 0, 1, 0, 0],
    [-1, 0, 0, 0, 1, 0, 0, 0, -1, 1],
]

GOERITZ_8_19 = [
    [4, -1, 0, -1, -2],
    [-1, -1, 1, 1, 0],
    [0, 1, -2, 0, 1],
    [-1, 1, 0, -1, 1],
    [-2, 0, 1, 1, 0],
]

REDUCED_GOERITZ_8_19 = [
    [-1, 1, 1, 0],
    [1, -2, 0, 1],
    [1, 0, -1, 1],
    [0, 1, 1, 0],
]

# rows solved one column at a time before symmetrizing
UNSYMMETRIZED_8_19 = [
    [-4, 1, 0, 1, 2],
    [-1, -1, 1, 1, 0],
    [0, -1, 2, 0, -1],
    [1, -1, 0, 1, -1],
    [-2, 0, 1, 1, 0],
]

INDICES_8_19 = (-1, 1, -1, 1, -1, 1, 1, -1)
