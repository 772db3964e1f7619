"""Partition/abacus combinatorics behind self-extension vanishing for
symmetric groups: crystal signatures, Mullineux, regularization, Specht
irreducibility, block/RoCK tests, difficulty tables, zigzag dimensions, and
a certificate-producing rule engine."""

from .partitions import (check_partition, dominates, format_partition,
                         is_p_regular, is_p_restricted, parse_partition,
                         partitions_of, transpose)
from .abacus import (AbacusDisplay, beta_set, core_and_weight, decode,
                     decode_config, display, parse_config, quotient)
from .signatures import (SignatureReport, e_tilde, epsilon, f_tilde,
                         is_difficult, phi, reflections, signature)
from .bijections import mullineux, regularize
from .blocks import BlockId, block_of, enumerate_block, is_rock_block, is_rouquier
from .specht import (specht_irreducible, special_runners,
                     irreducible_specht_preimage, theorem_b_applicable)
from .certifier import (ALL_RULES, Certificate, Rule, Step, certify,
                        certificate_from_dict, trick1_targets, trick2_targets,
                        validate)
from .tables import (RunnerPairConfig, RunnerTripleConfig, derive_table1,
                     derive_table2, local_signature, locally_difficult,
                     realize_config, table2_candidates)
from .zigzag import basis_dimension, degree_zero_dimension, generator_count

__version__ = "0.1.0"
