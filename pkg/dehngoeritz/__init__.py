"""Dehn coloring matrices and Goeritz matrices of knot diagrams."""

from dehngoeritz.pdcode import Diagram, RegionSet, Checkerboard, GoeritzIndexTable
from dehngoeritz.pdcode import parse_pd
from dehngoeritz.intmat import IntMatrix
from dehngoeritz.dehn import DehnMatrix
from dehngoeritz.goeritz import GoeritzMatrix
from dehngoeritz.analysis import Analysis, analyze

__version__ = "0.1.0"
