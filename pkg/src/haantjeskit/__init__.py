"""Exact symbolic toolkit for Nijenhuis/Haantjes torsions of operator
fields on flat space, Killing-tensor families of second-order
superintegrable systems, and the polynomial ideals cutting out their
Haantjes-zero members."""

__version__ = "0.1.0"

from .symalg import (Monomial, Poly, VarId, parse_poly, var,
                     LogarithmicTerm, NonInvertibleSubstitution, ParseError)
from .tensor import (Metric, TensorField, SlotKindMismatch, contract,
                     hessian_operator, partial_derivative, raise_lower,
                     sym_antisym, tensor_product)
from .haantjes import (ConservationResidual, OperatorField, conservation_check,
                       haantjes, is_haantjes_zero, nijenhuis)
from .killing import (EmptyFamily, KillingBasis, KillingFamily, PotentialSpec,
                      UnsupportedDimension, catalog, compatible_family,
                      killing_residual, killing_space, symmetric_product)
from .ideals import (Ideal, MonomialOrder, UnitIdeal, ZeroIdeal, buchberger,
                     default_order, haantjes_zero_ideal, hilbert_dimension,
                     ideal_equal, linear_factor, member, normal_form,
                     radical_member)
from .mechanics import (Condition6bResult, DegenerateK, Inconsistent,
                        NonUniqueSolution, NotCompatible, PhaseFunction,
                        StructuralTensor, abundant_haantjes, build_integral,
                        condition_6b, functional_independence, hamiltonian,
                        poisson, structural_tensor_at)
