"""
CUTSPEC - Cut monoids, quasi-valuations and prime spectra
MIT License

Copyright (c) 2026 cutspec developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""
__version__ = "0.1.0"

from .algebra import (  # noqa: E402
    Algebra,
    MonomialAlgebra,
    PatternAlgebra,
    check_condition_a,
    check_condition_b,
    check_condition_c,
    contraction,
    filter_qv,
    full_matrix_algebra,
    support,
    validate,
)
from .expression import parse_cut  # noqa: E402
from .field_model import (  # noqa: E402
    IdealCut,
    ModelElem,
    ideal_contains,
    ideal_member,
    product_contained,
    spec_base,
    valuation,
)
from .instances import load_instance  # noqa: E402
from .ordered_values import (  # noqa: E402
    INFINITY,
    Cut,
    GroupElem,
    IsolatedSubgroup,
    add_cut,
    cancellation_witness,
    cmp_cut,
    cmp_group,
    embed,
    is_cancellative,
    isolated_plus,
    scale_cut,
    sub_group,
)
from .quasival import (  # noqa: E402
    ExtendedElem,
    GeneratingSet,
    QuasiValuation,
    check_axioms,
    check_v_qv,
    entry_min_qv,
    filter_quasi_valuation,
    image_scan,
    min_formula_qv,
    minimal_generators,
    natural_extension,
    ow_member,
)
from .spectrum import (  # noqa: E402
    ContractionMap,
    SpecNode,
    check_bounds,
    check_chain_bijection,
    check_GD,
    check_GGD,
    check_GU,
    check_INC,
    check_LO,
    check_SGB,
    enumerate_spec,
    fg_gu_check,
    gd_separation,
    gu_lift,
)
