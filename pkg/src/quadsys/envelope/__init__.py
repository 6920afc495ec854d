"""Universal associative envelopes of finite quadruple systems."""
from .systems import QuadSystem, family, parse_system_name, relations, relation_count
from .algebra import (FiniteAlgebra, ExtensionRequired, UnsupportedExtension, IdempotentDecomposition,
                      MatrixUnitMap, multiplication_table, dickson_matrix, dickson_radical,
                      is_semisimple, center, minimal_polynomial, factor_polynomial, split_center,
                      simple_ideal_dimension, simple_ideal_dimensions, matrix_unit_isomorphism)
from .report import Envelope, envelope, analyze
