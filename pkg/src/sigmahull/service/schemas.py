"""Pydantic request/response models for the service and the CLI client.

The wire formats match the JSON documents the CLI reads and writes: field
elements as integer indices, permutations as 1-based image lists, matrices
row-major.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from .. import serialize
from ..codes import LinearCode
from ..fields import FieldSpec
from ..matrices import MatrixGF
from ..mpcodes import MatrixProductSpec, MpSigma
from ..semilinear import MonomialMatrix, SemilinearIsometry


class FieldModel(BaseModel):
    p: int
    e: int = 1
    modulus: Optional[list[int]] = None


class MatrixModel(BaseModel):
    rows: int
    cols: int
    entries: list[int]


class CodeModel(BaseModel):
    field: FieldModel
    generator: MatrixModel


class SigmaModel(BaseModel):
    s: int
    perm: list[int] = Field(description="1-based permutation images")
    diag: list[int]


class MonomialModel(BaseModel):
    perm: list[int]
    diag: list[int]


class MpSigmaModel(BaseModel):
    tau_hat: MonomialModel
    tau_tilde: MonomialModel
    s: int


class MpSpecModel(BaseModel):
    A: MatrixModel
    constituents: list[CodeModel]
    sigma: Optional[MpSigmaModel] = None


# -- conversion to core objects -------------------------------------------------


def field_to_core(m: FieldModel) -> FieldSpec:
    return serialize.field_from_dict(m.model_dump())


def code_to_core(m: CodeModel) -> LinearCode:
    return serialize.code_from_dict(m.model_dump())


def code_from_core(code: LinearCode) -> CodeModel:
    return CodeModel.model_validate(serialize.code_to_dict(code))


def sigma_to_core(field: FieldSpec, m: SigmaModel) -> SemilinearIsometry:
    return serialize.sigma_from_dict(field, m.model_dump())


def sigma_from_core(sigma: SemilinearIsometry) -> SigmaModel:
    return SigmaModel.model_validate(serialize.sigma_to_dict(sigma))


def monomial_from_core(mono: MonomialMatrix) -> MonomialModel:
    return MonomialModel.model_validate(serialize.monomial_to_dict(mono))


def matrix_from_core(m: MatrixGF) -> MatrixModel:
    return MatrixModel.model_validate(serialize.matrix_to_dict(m))


def mp_spec_to_core(m: MpSpecModel) -> tuple[MatrixProductSpec, MpSigma | None]:
    return serialize.mp_spec_from_dict(m.model_dump())


# -- requests ----------------------------------------------------------------------


class HullRequest(BaseModel):
    code: CodeModel
    sigma: SigmaModel


class DualRequest(BaseModel):
    code: CodeModel
    sigma: SigmaModel


class MpRequest(BaseModel):
    spec: MpSpecModel


class SteerRequest(BaseModel):
    code: CodeModel
    sigma: SigmaModel
    target_h: int
    code2: Optional[CodeModel] = None
    budget: int = 10_000
    seed: int = 0
    exhaustive: Optional[bool] = None


class EaqeccRequest(BaseModel):
    source: Literal["pair", "hull", "family", "mds", "mp"]
    code: Optional[CodeModel] = None
    code2: Optional[CodeModel] = None
    sigma: Optional[SigmaModel] = None
    spec: Optional[MpSpecModel] = None
    budget: int = 10_000
    seed: int = 0


class VerifyRequest(BaseModel):
    suite: str
    seed: int = 1
    trials: int = 100
    max_n: int = 6
    fields: list[int] = [3, 4, 5, 7, 8, 9]


# -- responses ----------------------------------------------------------------------


class HullResponse(BaseModel):
    n: int
    k: int
    d: Optional[int]
    hull_dim: int
    hull_basis: MatrixModel


class DualResponse(BaseModel):
    code: CodeModel
    n: int
    k: int
    d: Optional[int]


class MpBuildResponse(BaseModel):
    code: CodeModel
    n: int
    k: int
    d: Optional[int]
    claimed_bound: Optional[int]
    nonsingular_by_columns: bool


class MpHullResponse(BaseModel):
    hull_dim: int
    terms: list[int]
    rho: list[int] = Field(description="1-based permutation images")
    alphas: list[int]


class CheckResponse(BaseModel):
    property: str
    result: bool


class SteerResponse(BaseModel):
    code: CodeModel
    witness: MonomialModel
    achieved_h: int
    trials: int
    exhaustive: bool


class EaqeccRecordModel(BaseModel):
    q: int
    n: int
    k: int
    d: Optional[int]
    d_flag: str
    c: int
    h: Optional[int]
    provenance: str
    status: str


class EaqeccResponse(BaseModel):
    records: list[EaqeccRecordModel]
    meta: dict = {}


class VerifyResponse(BaseModel):
    suite: str
    seed: int
    requested_trials: int
    instances: int
    passes: int
    failures: int
    notes: list[str]
    counterexamples: list[dict]
    passed: bool
    text: str


class ErrorResponse(BaseModel):
    error: str
    message: str
