"""Exact computer algebra for twisted Floer-type homology computations
over the universal Novikov field, with a certification pipeline for
torus bundles over the circle."""

from .coefficients import (CoefficientSystem, base_change, module_change,
                           module_change_trivial, omega_system, tor_trivial,
                           trivial_system, ucss, universal_system)
from .certify import (OmegaClassSpec, SL2Matrix, SurgeryCertificate,
                      build_certificate, factor_positive_twists,
                      reference_monodromy, verify_certificate, wang_homology,
                      word_product)
from .complexes import (ChainMap, FreeChainComplex, chain_complex, chain_map,
                        homology_field, homology_integer, homology_laurent,
                        les_of_cone, mapping_cone, tensor_over_field,
                        verify_complex)
from .groupring import (GroupRingElement, OmegaHom, laurent, omega_hom,
                        t_poly)
from .models import (ModelComplex, VanishingCertificate, connected_sum_hat,
                     s1xs2_omega, s1xs2_universal, sphere_vanishing,
                     trefoil_zero_surgery_module)
from .modules import (CyclicSummand, FinitelyPresentedModule, FreeSummand,
                      GradedModule, TowerFlag, TrivialZSummand,
                      check_classification)
from .novikov import INF, NovikovSeries, invert, monomial, one, series, zero
from .rings import INTEGER, NOVIKOV, RingTag, laurent_ring
from .snf import SmithNormalForm, smith_normal_form

__version__ = "0.1.0"
