# ============================================================================
# Command Response Schemas
# ============================================================================
from pydantic import BaseModel
from typing import Optional, List, Dict, Any

from app.schemas.linalg import MatrixSchema, PolynomialSchema, RationalStr, SubspaceSchema
from app.schemas.system import ParameterArrayFile, SystemFile


class BaseResponse(BaseModel):
    success: bool = True
    message: Optional[str] = None


class ErrorResponse(BaseModel):
    success: bool = False
    error: str
    error_code: Optional[str] = None
    details: Optional[Dict[str, Any]] = None


class AxiomReportSchema(BaseModel):
    is_parallel: bool
    is_sharp: bool
    td_band_ok: bool
    irreducible: bool
    mock_vi_ok: bool
    qserre_ok: bool
    is_td_system: bool
    is_mock_td_system: bool
    algebra_dim: int
    failing_axiom: Optional[str] = None
    witness: Optional[SubspaceSchema] = None


class TraceIdentitySchema(BaseModel):
    big1: bool
    big2: bool
    nz1: bool
    nz2: bool
    nz3: bool
    nz4: bool
    tr_Ed_E0s: RationalStr
    tr_E0_E0s: RationalStr
    sum: RationalStr


class VerifyResponse(BaseResponse):
    n: int
    d: int
    report: AxiomReportSchema
    projector_formulas_ok: bool
    zeta: Optional[List[RationalStr]] = None
    ladder_zeta: Optional[List[RationalStr]] = None
    split_ok: Optional[bool] = None
    trace_identities: Optional[TraceIdentitySchema] = None
    parameter_array: Optional[ParameterArrayFile] = None


class ScanRow(BaseModel):
    t: RationalStr
    predicted: bool
    actual: bool
    failing_axiom: Optional[str] = None
    witness: Optional[SubspaceSchema] = None


class PerturbResponse(BaseResponse):
    t: RationalStr
    K: MatrixSchema
    lemmas: Dict[str, bool]
    zeta_prime: Optional[List[RationalStr]] = None
    system: SystemFile


class IsoResponse(BaseResponse):
    isomorphic: bool
    intertwiner: Optional[MatrixSchema] = None
    first_zeta_difference: Optional[int] = None


class DrinfeldResponse(BaseResponse):
    zeta: List[RationalStr]
    polynomial: PolynomialSchema
    degree: int
    bad_t: List[RationalStr]
    ycond_ok: bool
    ccond_left: Optional[RationalStr] = None
    ccond_right: Optional[RationalStr] = None
