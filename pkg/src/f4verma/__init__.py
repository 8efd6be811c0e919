"""Exact multiplet classification for F4 and its maximal parabolic sl(3,R)+sl(2,R)."""

from .exact import LinForm, SignClass, sign_class
from .fixtures import load_fixtures, match_fixtures
from .multiplet import generate, ks_pairing, orbit_quotient_oracle
from .parabolic import MAXIMAL_SL3_SL2, ks_dual, signature
from .rootsys import build_f4, positive_roots, weyl_order
from .verma import Weight, hc_param, shifted_reflect

__all__ = [
    "LinForm",
    "MAXIMAL_SL3_SL2",
    "SignClass",
    "Weight",
    "build_f4",
    "generate",
    "hc_param",
    "ks_dual",
    "ks_pairing",
    "load_fixtures",
    "match_fixtures",
    "orbit_quotient_oracle",
    "positive_roots",
    "shifted_reflect",
    "sign_class",
    "signature",
    "weyl_order",
]
