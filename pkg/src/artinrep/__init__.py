"""Exact character and local-factor calculus for isogeny-twin abelian
varieties: point counting, Rankin-Selberg expansions, a character solver,
and Sato-Tate moment checks."""

from .characters import ClassFunction, EigenvalueMultiset, GroupTable, tensor
from .curves import (EllipticCurveSpec, PlaneQuarticSpec, ap, ap_table,
                     count_points, count_points_ext, count_quartic, kronecker,
                     quadratic_twist)
from .cyclotomic import CycloInt, cyclotomic_polynomial
from .errors import (ArtinrepError, BadReduction, ConfigError, MalformedTable,
                     NonIntegralDecomposition, NotFound, RamifiedPrime,
                     RegistryError)
from .finitefield import Fq
from .frobenius import (FrobeniusDatum, S4FieldSpec, find_s4_quartic,
                        frobenius_class, joint_class)
from .intpoly import (IntPoly, catalan, composed_product, degree_pattern,
                      discriminant, power_sum, resultant, squarefree_kernel)
from .lfun import (CASE_CUBIC, CASE_QUARTIC, LocalFactor, elliptic_factor,
                   local_factor, rankin_selberg_elliptic,
                   rankin_selberg_from_eigenvalues, res_scalars_check,
                   split_case_factor, twist_point_count)
from .moments import (MomentReport, catalan_moment_check, empirical_moment,
                      theoretical_moment)
from .registry import Registry, ingest_registry
from .theta import (PrimeConstraint, ThetaProblem, ThetaSolution,
                    enumerate_candidates, rs_consistency_filter, solve,
                    transitivity_bound, verify_theta_table)
from .verify import RunConfig, verify_paper

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
