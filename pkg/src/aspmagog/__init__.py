"""Alternating sign pentagons, Magog and Gog pentagons, and the formulas
that count them."""

from .algebra import WeightPolynomial, det, factorize, format_factorization, pfaffian
from .enumeration import asp_genpoly, enumerate_asts, gog_count, magog_genpoly
from .formulas import ct_oracle, detsum_genpoly, pfaffian_genpoly

__all__ = [
    "WeightPolynomial",
    "asp_genpoly",
    "ct_oracle",
    "det",
    "detsum_genpoly",
    "enumerate_asts",
    "factorize",
    "format_factorization",
    "gog_count",
    "magog_genpoly",
    "pfaffian",
    "pfaffian_genpoly",
]
