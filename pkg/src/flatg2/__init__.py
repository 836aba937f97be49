"""flatg2: exact structure-form torsion and flat-lattice verification.

A pure-Python, exact-arithmetic library for the two flat 7-dimensional
solvable families: positive 3-forms and their torsion decomposition,
rotation-angle lattice classification, cyclic holonomy groups, and
machine verification of the bundled lattice tables.
"""

__version__ = "1.0.0"

from .scalars import (
    DivisionByZero,
    DomainMismatch,
    Poly,
    QuadExt,
    Rational,
    Scalar,
    UnknownSymbol,
    quad_inverse,
    render_scalar,
    scalar_arith,
    sqrt_of,
    substitute,
)
from .exterior import (
    DegreeZero,
    DimensionMismatch,
    KForm,
    VectorField,
    b_form,
    contract,
    hodge_star,
    render_form,
    wedge,
)
from .liealg import (
    FlatDecompositionReport,
    LieAlgebra,
    NotFlatForm,
    ce_differential,
    flat_almost_abelian,
    flat_non_almost_abelian,
    jacobi_check,
    koszul_connection,
    symbolic_abc,
    symbolic_abcd,
    verify_flat_decomposition,
)
from .g2core import (
    FGClass,
    G2Structure,
    NonRationalNormalization,
    NonTraceless,
    SymTensor,
    Tensor2,
    TorsionForms,
    canonical_phi,
    divergence_torsion,
    fg_classify,
    full_torsion,
    induced_metric,
    iota_map,
    jmath,
    standard_structure,
    torsion_forms,
)
from .intmat import (
    AngleSignature,
    ExactMatrix,
    IntMatrix,
    IntPoly,
    NonCommuting,
    NotCyclotomicProduct,
    NotFiniteOrder,
    NotGaloisClosed,
    SingularP,
    SNFResult,
    abelianization,
    char_poly,
    companion_realization,
    cyclotomic,
    cyclotomic_factor,
    koo_signature,
    matrix_order,
    smith_normal_form,
    verify_conjugation,
)
from .classify import (
    AngleEnumeration,
    AngleTriple,
    ClosedNonexistenceCertificate,
    MatrixGroup,
    ParameterConstraintViolated,
    SignedTriple,
    closed_nonexistence_certificate,
    coclosed_certificate,
    enumerate_valuest0,
    filter_torsion_free,
    holonomy_group,
)
from .tables import (
    ParseError,
    TableRow,
    VerificationReport,
    load_bundled,
    parse_table_text,
    serialize_rows,
    verify_rows,
)
