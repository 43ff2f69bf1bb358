"""Partition combinatorics for Fock-space crystals and Mullineux involutions."""

from .adic import (
    EllAdicDecomposition,
    SeriesLabel,
    compute_e,
    el_adic_compose,
    el_adic_decompose,
    enumerate_fiber,
    hc_label,
    levi_description,
    split_regular_singular,
)
from .crystal import (
    CrystalConfig,
    CrystalGraph,
    Family,
    OperatorId,
    SignatureWord,
    apply_e,
    apply_f,
    apply_path,
    crystal_graph,
    generalized_path_to_empty,
    good_nodes,
    is_highest_weight,
    path_to_empty,
    residue,
    signature_word,
)
from .errors import DomainError, FockError, InvariantError, ParameterError, PartitionParseError
from .export import emit_dot
from .mullineux import (
    MullineuxResult,
    acd_dual,
    generalized_mullineux,
    generalized_mullineux_via_path,
    mullineux,
    mullineux_oracle,
)
from .partitions import (
    EMPTY,
    INF,
    Node,
    Partition,
    concat,
    conjugate,
    format_partition,
    is_regular,
    parse_partition,
    partitions,
    power,
)
from .verify import verify_suite

__version__ = "0.1.0"
