"""Exact structure-constant workbench for braided post-Hopf structures.

Finite-dimensional algebras and coalgebras are given by exact structure
constants over Q or F_p; every defining axiom of Yetter-Drinfeld post-Hopf
algebras, Yetter-Drinfeld braces, matched pairs of actions and relative
Rota-Baxter operators can be checked exhaustively, and the structures can
be converted into each other along the standard functors.
"""

from .field import FieldSpec, ModInt, RATIONALS, Scalar, format_scalar, parse_scalar
from .linalg import Matrix, SolveResult, Vector, identity_matrix, invert, kernel, solve
from .hopf import (
    ActionTensor,
    AlgebraData,
    BraidedPair,
    CoalgebraData,
    HopfData,
    StructureError,
    check_algebra,
    check_coalgebra,
    check_hopf,
    convolution,
    convolution_inverse,
    hom_convolution_inverse_endo,
    is_cocommutative,
    solve_antipode,
    unit_counit_map,
)
from .posthopf import (
    PostLieData,
    YDPostHopf,
    braiding_sigma,
    bullet_algebra,
    check_post_lie,
    check_yd_hopf_monoid,
    check_yd_post_hopf,
    extract_post_lie,
    is_pre_hopf,
    left_coaction_adl,
    leftharpoon,
    primitives,
    sharp_antipode,
    solve_beta,
    subadjacent_hopf,
)
from .braces import (
    MatchedPair,
    YDBrace,
    check_matched_pair,
    check_yd_brace,
    from_matched_pair,
    functor_f,
    functor_g,
    to_matched_pair,
)
from .rota import (
    GroupRB,
    GroupTable,
    LieData,
    LieRB,
    RelRB,
    adjunction_bijection,
    antipode_sk,
    check_group_rb,
    check_lie_rb,
    check_rb_morphism,
    check_rel_rb,
    functor_l,
    functor_m,
    functor_r,
    restrict_to_grouplikes,
    restrict_to_primitives,
)
from .builders import (
    build_adjoint,
    build_en,
    build_group_rb_linearization,
    build_suzuki,
    build_sweedler,
    build_trivial,
    cyclic_group,
    group_algebra,
    group_rb_identity,
    group_rb_inversion,
    sweedler_hopf,
    symmetric_group_3,
)
from .report import CheckEntry, CheckReport, Witness
from .structio import ParseError, emit, kind_of, parse

__version__ = "0.1.0"
