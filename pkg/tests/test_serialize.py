import random

import pytest

from sigmahull import serialize
from sigmahull.codes import LinearCode
from sigmahull.errors import ParseError, ZeroCode
from sigmahull.fields import GF
from sigmahull.matrices import MatrixGF
from sigmahull.semilinear import MonomialMatrix, SemilinearIsometry, sigma_dual
from sigmahull.verify import draw_mp_instance, random_sigma

F3 = GF(3)
F9 = GF(9)


def test_field_round_trip():
    for q in (2, 3, 4, 9, 25):
        f = GF(q)
        doc = serialize.field_to_dict(f)
        assert serialize.field_from_dict(doc) == f
    # modulus may be omitted on input; output always carries it
    assert serialize.field_from_dict({"p": 3, "e": 2}) == F9
    assert serialize.field_to_dict(F9)["modulus"] == [1, 0, 1]


def test_matrix_round_trip():
    m = MatrixGF(F9, [[0, 5], [8, 1]])
    doc = serialize.matrix_to_dict(m)
    assert doc == {"rows": 2, "cols": 2, "entries": [0, 5, 8, 1]}
    assert serialize.matrix_from_dict(F9, doc) == m
    with pytest.raises(ParseError):
        serialize.matrix_from_dict(F3, {"rows": 1, "cols": 2, "entries": [0, 7]})
    with pytest.raises(ParseError):
        serialize.matrix_from_dict(F3, {"rows": 1, "cols": 2})


def test_code_round_trip():
    code = LinearCode.from_generator(MatrixGF(F3, [[1, 1, 1]]))
    doc = serialize.code_to_dict(code)
    assert serialize.code_from_dict(doc).same_code(code)
    # zero code: explicit empty generator parses; zero matrix does not
    zero = sigma_dual(
        LinearCode.from_generator(MatrixGF.identity(F3, 2)),
        SemilinearIsometry.euclidean(F3, 2),
    )
    doc = serialize.code_to_dict(zero)
    assert serialize.code_from_dict(doc).k == 0
    with pytest.raises(ZeroCode):
        serialize.code_from_dict(
            {"field": {"p": 3}, "generator": {"rows": 1, "cols": 2, "entries": [0, 0]}}
        )


def test_sigma_round_trip():
    rng = random.Random(7)
    for _ in range(30):
        f = (F3, F9)[rng.randrange(2)]
        n = rng.randrange(1, 5)
        sig = random_sigma(rng, f, n)
        doc = serialize.sigma_to_dict(sig)
        assert min(doc["perm"]) >= 1  # 1-based on the wire
        back = serialize.sigma_from_dict(f, doc)
        assert back.mono == sig.mono and back.s == sig.s


def test_monomial_round_trip():
    mono = MonomialMatrix(F3, (2, 0, 1), (1, 2, 1))
    doc = serialize.monomial_to_dict(mono)
    assert doc == {"perm": [3, 1, 2], "diag": [1, 2, 1]}
    assert serialize.monomial_from_dict(F3, doc) == mono


def test_mp_spec_round_trip():
    rng = random.Random(11)
    spec, ms = draw_mp_instance(rng, (3, 4), 3)
    doc = serialize.mp_spec_to_dict(spec, ms)
    spec2, ms2 = serialize.mp_spec_from_dict(doc)
    assert spec2.A == spec.A
    assert all(a.same_code(b) for a, b in zip(spec2.constituents, spec.constituents))
    assert ms2.tau_hat == ms.tau_hat and ms2.tau_tilde == ms.tau_tilde and ms2.s == ms.s


def test_mp_spec_with_refs():
    rep_doc = serialize.code_to_dict(LinearCode.from_generator(MatrixGF(F3, [[1, 1, 1]])))
    doc = {
        "A": {"rows": 1, "cols": 1, "entries": [1]},
        "constituents": ["rep.json"],
    }
    spec, ms = serialize.mp_spec_from_dict(doc, load_ref=lambda path: serialize.code_from_dict(rep_doc))
    assert spec.k == 1 and ms is None
    with pytest.raises(ParseError):
        serialize.mp_spec_from_dict(doc)  # refs need a loader


def test_parse_errors():
    with pytest.raises(ParseError):
        serialize.field_from_dict({"e": 2})
    with pytest.raises(ParseError):
        serialize.code_from_dict({"field": {"p": 3}})
    with pytest.raises(ParseError):
        serialize.sigma_from_dict(F3, {"perm": [1], "diag": [1]})
