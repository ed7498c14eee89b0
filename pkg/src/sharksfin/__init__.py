"""Recognition of sharksfin and deltoid singularities of plane-to-plane map germs."""
from sharksfin.applications import (
    MotionSpec,
    UmbrellaForm,
    motion_classify,
    motion_trajectory_jet,
    whitney_direct_jet,
    whitney_project_classify,
)
from sharksfin.classify import Classification, Verdict, classify_germ
from sharksfin.cusp import branch_invariants, curve_cusp_test
from sharksfin.document import InputDocument, parse_document
from sharksfin.jets import BACKEND, CurveJet, Jet2, MapJet2
from sharksfin.normalform import so2_invariants, so2_normal_form

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Classification",
    "CurveJet",
    "InputDocument",
    "Jet2",
    "MapJet2",
    "MotionSpec",
    "UmbrellaForm",
    "Verdict",
    "branch_invariants",
    "classify_germ",
    "curve_cusp_test",
    "motion_classify",
    "motion_trajectory_jet",
    "parse_document",
    "so2_invariants",
    "so2_normal_form",
    "whitney_direct_jet",
    "whitney_project_classify",
]
