"""Finite-group induction data for Bass Nil groups: subgroup families,
G x Z/N classification, p-local induction certificates, exponent bounds."""

__version__ = "0.1.0"

from .classify import (Case, ClassificationRecord, choose_N, classify, classify_all,
                       verify_alpha, verify_diagram)
from .construct import make_group
from .dress import DressCertificate, MarksMatrix, dress_certificate, marks_matrix, verify_certificate
from .errors import (CapExceeded, DichotomyFailure, HyperinductError, InternalFailure,
                     LemmaViolation, NoSolution, NotNormal, SpecError)
from .families import (FamilyReport, PerpSet, c_perp, cyclic_quotient_check,
                       example52_condition, family_report, hyperelementary_corpus, i_set, in_I,
                       is_p_elementary, is_p_group, is_p_hyperelementary, lemma31_check,
                       sylow_centralizer_condition)
from .generation import (ExponentReport, GenerationDatum, elementary_cover, exponent_report,
                         frobenius_verschiebung_identity, generation_data, split_verschiebung,
                         vanishing_report)
from .goursat import (GoursatRecord, ProductSubgroup, goursat_enumerate,
                      is_p_hyperelementary_product, project_data)
from .groups import (DEFAULT_CAP, FiniteGroup, GroupHom, Subgroup, SubgroupClass,
                     abelianization_order, all_subgroups, centralizer, quotient,
                     subgroup_classes)

__all__ = [name for name in dir() if not name.startswith("_")]
