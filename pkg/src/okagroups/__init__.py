"""Fundamental groups of generic fiber-type plane curve complements.

Finite presentations of the groups G(p;q;r), their structural
invariants and closed-form isomorphism decision, the passage from
pencil combinatorics to these groups, and two independent verification
oracles: integer Smith normal form (abelianization) and finite-quotient
homomorphism counting.
"""

from .abelian import (
    AbelianInvariants,
    IntegerMatrix,
    abelian_invariants,
    relation_matrix,
    smith_normal_form,
)
from .fibertype import (
    GroupAnswer,
    OrbifoldSpec,
    PencilSpec,
    add_generic_fiber,
    format_pencil_record,
    oka_join_example,
    orbifold_group,
    parse_pencil_records,
    pi1_generic_fibers,
    pi1_with_special_fiber,
    validate_pencil,
)
from .finquot import (
    FiniteGroup,
    HomSpectrum,
    SearchCapExceeded,
    count_homomorphisms,
    hom_spectrum,
    make_cyclic,
    make_dihedral,
    make_symmetric,
    parse_target,
    parse_targets,
)
from .oka import (
    CanonicalOkaForm,
    OkaParams,
    SimplifiedParams,
    StructureReport,
    canonical_form,
    free_product_to_oka,
    is_isomorphic,
    oka_presentation,
    simplified_presentation,
    structure,
    structure_description,
)
from .words import (
    ParseError,
    Presentation,
    Word,
    cyclic_reduce,
    free_product_presentation,
    free_reduce,
    gen,
    parse_presentation,
    print_presentation,
)

__version__ = "0.1.0"
