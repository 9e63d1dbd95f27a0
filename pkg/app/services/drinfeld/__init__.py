from app.services.drinfeld.polynomial import (
    DrinfeldPolynomial,
    drinfeld_poly,
    predict_td,
    rational_bad_t,
    ccond_sides,
    check_ccond_identity,
)

__all__ = [
    "DrinfeldPolynomial",
    "drinfeld_poly",
    "predict_td",
    "rational_bad_t",
    "ccond_sides",
    "check_ccond_identity",
]
