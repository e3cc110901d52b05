"""Exact computations in extended affine Weyl groups, affine Hecke algebras and
their Kazhdan-Lusztig combinatorics, with dual-group characters and a K_0 model."""

from .affweyl import AffineWord, IWElement, IwahoriWeylGroup
from .antispherical import ASElement, AntisphericalModule
from .dualrep import (
    WeightMultiset, irreducible_character, minuscule_decomposition_typeA,
    tensor_character, weyl_dimension, weyl_orbit,
)
from .errors import (
    BoundExceeded, DatumError, DimensionMismatch, FlagkitError, NotDominant,
    NotWeylStable, Undetermined, ValidationError,
)
from .hecke import HeckeAlgebra, HeckeElement
from .kl import KLTable
from .ktheory import (
    GroupRingElement, IWClassVector, av_iw, class_central, class_costandard,
    class_ic, class_standard, class_wakimoto,
)
from .laurent import LaurentPoly
from .rootdata import RootDatum, load_root_datum

__version__ = "0.1.0"

__all__ = [
    "AffineWord",
    "IWElement",
    "IwahoriWeylGroup",
    "ASElement",
    "AntisphericalModule",
    "WeightMultiset",
    "irreducible_character",
    "minuscule_decomposition_typeA",
    "tensor_character",
    "weyl_dimension",
    "weyl_orbit",
    "BoundExceeded",
    "DatumError",
    "DimensionMismatch",
    "FlagkitError",
    "NotDominant",
    "NotWeylStable",
    "Undetermined",
    "ValidationError",
    "HeckeAlgebra",
    "HeckeElement",
    "KLTable",
    "GroupRingElement",
    "IWClassVector",
    "av_iw",
    "class_central",
    "class_costandard",
    "class_ic",
    "class_standard",
    "class_wakimoto",
    "LaurentPoly",
    "RootDatum",
    "load_root_datum",
]
