"""Plain-dict JSON forms of fields, matrices, codes, isometries and MP specs.

Wire conventions: field elements as integer indices, permutations as 1-based
image lists, matrices row-major.  These dicts are what the CLI reads/writes
and what the service schemas validate.
"""

from __future__ import annotations

from .codes import LinearCode
from .errors import ParseError
from .fields import FieldSpec
from .matrices import MatrixGF
from .mpcodes import MatrixProductSpec, MpSigma
from .semilinear import MonomialMatrix, SemilinearIsometry


def field_to_dict(field: FieldSpec) -> dict:
    return {"p": field.p, "e": field.e, "modulus": list(field.modulus)}


def field_from_dict(doc: dict) -> FieldSpec:
    try:
        return FieldSpec(int(doc["p"]), int(doc.get("e", 1)), doc.get("modulus"))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad field spec: {exc}") from exc


def matrix_to_dict(m: MatrixGF) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": list(m.entries)}


def matrix_from_dict(field: FieldSpec, doc: dict) -> MatrixGF:
    try:
        rows, cols = int(doc["rows"]), int(doc["cols"])
        entries = [int(x) for x in doc["entries"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad matrix: {exc}") from exc
    if any(not 0 <= x < field.q for x in entries):
        raise ParseError("matrix entry outside 0..q-1")
    return MatrixGF.from_entries(field, rows, cols, entries)


def code_to_dict(code: LinearCode) -> dict:
    return {"field": field_to_dict(code.field), "generator": matrix_to_dict(code.G)}


def code_from_dict(doc: dict) -> LinearCode:
    try:
        field = field_from_dict(doc["field"])
        gen = matrix_from_dict(field, doc["generator"])
    except KeyError as exc:
        raise ParseError(f"code document missing {exc}") from exc
    # An explicitly empty generator denotes the zero code (a legal output of
    # dual computations); a nonempty rank-0 generator is rejected.
    if gen.rows == 0:
        return LinearCode(gen, allow_zero=True)
    return LinearCode.from_generator(gen)


def monomial_to_dict(mono: MonomialMatrix) -> dict:
    return {"perm": [p + 1 for p in mono.perm], "diag": list(mono.diag)}


def monomial_from_dict(field: FieldSpec, doc: dict) -> MonomialMatrix:
    try:
        perm = [int(i) - 1 for i in doc["perm"]]
        diag = [int(d) for d in doc["diag"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad monomial matrix: {exc}") from exc
    return MonomialMatrix(field, perm, diag)


def sigma_to_dict(sigma: SemilinearIsometry) -> dict:
    doc = monomial_to_dict(sigma.mono)
    return {"s": sigma.s, "perm": doc["perm"], "diag": doc["diag"]}


def sigma_from_dict(field: FieldSpec, doc: dict) -> SemilinearIsometry:
    try:
        s = int(doc["s"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad sigma: {exc}") from exc
    return SemilinearIsometry(monomial_from_dict(field, doc), s)


def mp_sigma_to_dict(ms: MpSigma) -> dict:
    return {
        "tau_hat": monomial_to_dict(ms.tau_hat),
        "tau_tilde": monomial_to_dict(ms.tau_tilde),
        "s": ms.s,
    }


def mp_sigma_from_dict(field: FieldSpec, doc: dict) -> MpSigma:
    try:
        tau_hat = monomial_from_dict(field, doc["tau_hat"])
        tau_tilde = monomial_from_dict(field, doc["tau_tilde"])
        s = int(doc["s"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad matrix-product sigma: {exc}") from exc
    return MpSigma(tau_hat, tau_tilde, s)


def mp_spec_to_dict(spec: MatrixProductSpec, ms: MpSigma | None = None) -> dict:
    doc = {
        "A": matrix_to_dict(spec.A),
        "constituents": [code_to_dict(c) for c in spec.constituents],
    }
    if ms is not None:
        doc["sigma"] = mp_sigma_to_dict(ms)
    return doc


def mp_spec_from_dict(doc: dict, load_ref=None) -> tuple[MatrixProductSpec, MpSigma | None]:
    """Build the spec; string constituents are resolved through load_ref(path)."""
    try:
        raw_constituents = doc["constituents"]
    except KeyError as exc:
        raise ParseError(f"matrix-product spec missing {exc}") from exc
    constituents = []
    for item in raw_constituents:
        if isinstance(item, str):
            if load_ref is None:
                raise ParseError("constituent file references not supported here")
            constituents.append(load_ref(item))
        else:
            constituents.append(code_from_dict(item))
    if not constituents:
        raise ParseError("matrix-product spec needs at least one constituent")
    field = constituents[0].field
    try:
        a = matrix_from_dict(field, doc["A"])
    except KeyError as exc:
        raise ParseError(f"matrix-product spec missing {exc}") from exc
    spec = MatrixProductSpec(a, constituents)
    ms = None
    if doc.get("sigma") is not None:
        ms = mp_sigma_from_dict(field, doc["sigma"])
    return spec, ms


def eaqecc_to_dict(rec) -> dict:
    return {
        "q": rec.q,
        "n": rec.n,
        "k": rec.k,
        "d": rec.d,
        "d_flag": rec.d_flag,
        "c": rec.c,
        "h": rec.h,
        "provenance": rec.provenance,
        "status": rec.status,
    }
