"""Exact bijections, counting formulas and q-identities for labeled trees
classified by indegree type."""

from .errors import (AssemblyError, CapacityError, DecodeError, InputError,
                     InvariantError, TreeBijError)
from .partitions import IndegreeType, SetPartition
from .phi_bijection import phi, phi_inverse
from .prufer_like import decode, encode
from .trees import (LabeledTree, RootedTree, enumerate_trees, global_type,
                    hang_up, local_type)

__all__ = [
    "AssemblyError", "CapacityError", "DecodeError", "InputError", "InvariantError",
    "TreeBijError", "IndegreeType", "SetPartition", "LabeledTree", "RootedTree",
    "decode", "encode", "enumerate_trees", "global_type", "hang_up", "local_type",
    "phi", "phi_inverse",
]

__version__ = "0.1.0"
