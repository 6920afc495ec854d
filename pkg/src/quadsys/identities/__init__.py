"""Identity discovery: multilinear kernels, per-partition ranks and
nonlinear identities from integer lattices."""
from .core import (NonlinearIdentity, identity_from_text, expand_identity, verify_identity,
                   verify_alternating, lift_identity, identity_rows)
from .modules import ModuleTracker, GeneratorSet, module_dimension, extract_module_generators, \
    minimize_generator_set
from .multilinear import all_identities, multilinear_generators, is_symmetry_instance
from .reports import PartitionReport, partition_report, partition_table, format_table, \
    default_generators, required_partitions, STRETCH_DIM
from .nonlinear import (left_kernel_lattice, nonlinear_special_candidates, find_special_identities,
                        nonlinear_generators, minimal_nonlinear_generators, component_state,
                        confirm_special)
