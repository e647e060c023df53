# pkg.cyclo package
from .number import CycloNumber, RootOfUnity, order_of, rou_arith
from .matrix import CycloMatrix, Vector
from .linalg import (
    common_eigenspaces,
    eigenspaces,
    kernel,
    rank,
    simultaneous_eigenbasis,
)

__all__ = [
    "CycloNumber",
    "RootOfUnity",
    "order_of",
    "rou_arith",
    "CycloMatrix",
    "Vector",
    "common_eigenspaces",
    "eigenspaces",
    "kernel",
    "rank",
    "simultaneous_eigenbasis",
]
