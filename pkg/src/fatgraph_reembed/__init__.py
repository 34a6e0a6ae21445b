"""Exact local genus analysis for orientable graph embeddings."""
from .counting import PkTable, p1_stanley, pk_oracle, pk_recurrence, r_nu_closed_form, zagier_bounds
from .embedding import Hypermap, from_rotation_system, parse_file, to_plane_permutation, write_file
from .errors import CapExceeded, ConventionError, FatgraphError, InputError
from .perm import CycleType, Permutation, format_cycles, parse_cycles
from .planeperm import PlanePermutation, act, diagonal, inflate, localize
from .reembed import (
    count_one_face_embeddings,
    local_distribution,
    local_genus_range,
    max_genus_check,
    min_genus_check,
    one_face_probability,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "ConventionError",
    "CycleType",
    "FatgraphError",
    "Hypermap",
    "InputError",
    "Permutation",
    "PkTable",
    "PlanePermutation",
    "act",
    "count_one_face_embeddings",
    "diagonal",
    "format_cycles",
    "from_rotation_system",
    "inflate",
    "local_distribution",
    "local_genus_range",
    "localize",
    "max_genus_check",
    "min_genus_check",
    "one_face_probability",
    "p1_stanley",
    "parse_cycles",
    "parse_file",
    "pk_oracle",
    "pk_recurrence",
    "r_nu_closed_form",
    "to_plane_permutation",
    "write_file",
    "zagier_bounds",
]
