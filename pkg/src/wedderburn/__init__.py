"""Exact Artin-Wedderburn decomposition of semisimple group algebras over
finite fields, with unit-group reporting.

The analytic pipeline derives the block structure of F_q[G] from conjugacy
data alone; an independent brute-force path splits the regular algebra into
its primitive central idempotents and reads the same structure off explicit
ranks.  The flagship example is SL(3,2) with |G| = 168.
"""

from .charkit import ActionReport, PermCharacter, deleted_module_check, inner_product, perm_character
from .cyclo import CycloContext, CycloPartition, build_context, component_count_and_degrees, cyclotomic_partition
from .errors import ModularCaseError
from .ffield import (
    FieldElement,
    FieldSpec,
    MatrixFq,
    Polynomial,
    factor,
    is_prime,
    make_field,
    minpoly,
    minpoly_operator,
)
from .oracle import AlgebraElement, CentralSplit, center_basis, multiply, split_center, verify_split
from .perm import (
    BUILTIN_GROUPS,
    ConjClass,
    FiniteGroup,
    Permutation,
    builtin_s5,
    builtin_sl32_on_p2f2,
    builtin_sl32_s8,
    compose,
    conjugacy_classes,
    element_order,
    generate,
    load_group,
    parse_cycles,
    parse_group_text,
    power_class,
)
from .units import (
    ReferenceRow,
    UnitFactor,
    UnitGroupReport,
    gl_order,
    sl32_expected_row,
    sl32_reference_table,
    unit_group,
)
from .wedder import (
    Component,
    Decomposition,
    SolverReport,
    analytic_decomposition,
    classify_type,
    forced_components,
    is_sl32_class_data,
    solve,
    splitting_field_check,
)

__version__ = "0.1.0"
