"""singlab: exact-arithmetic workbench for the computable side of
singularity categories: matrix factorisations, stabilisations and their
endomorphism dg algebras, Milnor/Tjurina invariants, curved Hochschild
complexes, quiver algebras with Drinfeld quotients, and bar/cobar Koszul
duality."""

from .fields import QQ, QQI, GaussianRational, GFElement, PrimeField
from .linalg import ExactMatrix
from .polyring import (
    GroebnerBasis,
    Poly,
    QuotientRing,
    Ring,
    buchberger,
    division_coefficients,
    format_poly,
    is_quasi_homogeneous,
    jacobian_ideal,
    milnor_algebra,
    parse_poly,
    quotient_basis,
    tjurina_algebra,
)
from .polymat import PolyMatrix
from .complexes import (
    ChainMap,
    FreeComplex,
    SliceComplex,
    cone,
    hom_complex,
    periodic_slice_cohomology,
    shift,
    slice_cohomology,
    slice_complex,
    tensor,
    truncated_cohomology_dims,
)
from .koszul import KoszulComplex, SigmaHomotopy, koszul_complex, sigma_homotopy, verify_null_homotopy
from .matfac import (
    MatrixFactorisation,
    MFMorphism,
    find_isomorphism,
    knoerrer_g,
    knoerrer_h,
    mf_cokernel,
    mf_fold,
    mf_hom_complex,
    mf_shift,
    mf_sum,
    mf_tensor,
    mf_unfold,
    mf_verify,
    morphism_is_iso,
    restrict_rho,
    rho_g_certificate,
    sigma_g_iso,
    tau,
)
from .stabilize import (
    CliffordPresentation,
    EndDGAlgebra,
    PolyRAlgebra,
    Stabilisation,
    clifford_of_quadratic,
    end_cohomology,
    end_dg_algebra,
    end_dg_algebra_of,
    poly_r_multiply,
    stabilise,
)
from .findim import FinDimAlgebra
from .hochschild import (
    CurvedAlgebra,
    HochschildComplexSpec,
    curvature_term_check,
    hochschild_cohomology,
    hochschild_homology,
    validate_curved,
)
from .quiverlab import (
    DGQuiverAlgebra,
    DrinfeldComplex,
    Quiver,
    derived_preprojective,
    drinfeld_cohomology,
    drinfeld_quotient,
    dsg_blocks,
    extended_dynkin,
    path_basis,
    path_multiply,
    preprojective_relations,
    quasi_dominant,
    truncated_algebra_dim,
)
from .koszuldual import (
    AugmentedAlgebra,
    ConilpotentCoalgebra,
    bar,
    bar_coalgebra,
    cobar,
    counit_h0_check,
    dual_algebra,
    dual_coalgebra,
    koszul_dual_cohomology,
)
