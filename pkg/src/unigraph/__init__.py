"""Tools for digraphs of unitary matrices: structural tests, certificates,
Cayley-digraph checkers, and the supporting matrix constructions."""

__version__ = "0.1.0"

from .digraphs import (
    Digraph,
    StructureReport,
    add_loops,
    automorphism_group,
    bipartition,
    claw_graph,
    complete_graph,
    connectivity_numbers,
    cycle_factor,
    cycle_graph,
    diameter,
    directed_cycle,
    directed_path,
    hall_violations,
    hamiltonian_cycle,
    hypercube_graph,
    independent_paths,
    induced_subdigraph,
    induced_subgraph_search,
    k33_minus_edge,
    neighborhood,
    path_graph,
    paw_graph,
    perfect_two_matching,
    quadrangularity_violations,
    star_graph,
    structure_report,
    term_rank,
)
from .errors import (
    CapacityError,
    InputError,
    InternalError,
    ParseError,
    UnigraphError,
)
from .groups import (
    FiniteGroup,
    boolean_cube_group,
    build_group,
    cayley_digraph,
    coset_generating_set,
    cyclic_group,
    dihedral_group,
    explicit_group,
    line_digraph_witness,
    parse_element_list,
    product_of_cyclics,
    regular_representation,
    symmetric_group,
    unistochastic_group_conditions,
)
from .linedigraphs import (
    BlockDecomposition,
    LineDigraphResult,
    Multidigraph,
    RecognitionResult,
    independent_full_submatrices,
    line_digraph,
    recognize_line_digraph,
)
from .matrices import (
    Permutation,
    block_double,
    circulant_spectrum,
    complementary,
    dft,
    first_noncomplementary_pair,
    hypercube_weighing,
    matrix_from_jsonable,
    matrix_to_jsonable,
    nearest_unitary,
    pairwise_complementary,
    support,
    unitarity_residual,
    weighing_weight,
)
from .membership import (
    Certificate,
    CertifyOutcome,
    SolverConfig,
    SpernerResult,
    SurveyResult,
    SurveyRow,
    alternating_projection,
    certify,
    conjecture_survey,
    graph_canonical_mask,
    necessary_battery,
    sperner_capacity,
)
from .reporting import Condition, ConditionReport
