import json
import random
from fractions import Fraction

import pytest

from conftest import random_cyclo
from vnbasis.algebra import TraceForm, spec_new
from vnbasis.construct import build_uv
from vnbasis.cyclotomic import ComplexF, Cyclo, root_of_unity
from vnbasis.errors import InvalidArgument
from vnbasis.serialize import (
    block_from_json,
    block_to_json,
    dumps,
    gram_report_to_json,
    rational_to_json,
    scalar_from_json,
    scalar_to_json,
    spec_from_json,
    spec_to_json,
)
from vnbasis.verify import gram


def test_cyclo_format():
    assert scalar_to_json(Cyclo(3, [Fraction(2, 4), 0, 0])) == {"order": 3, "coeffs": [[1, 2], [0, 1], [0, 1]]}
    assert scalar_to_json(root_of_unity(4, 1)) == {"order": 4, "coeffs": [[0, 1], [1, 1], [0, 1], [0, 1]]}


def test_cyclo_round_trip():
    rng = random.Random(0)
    for _ in range(100):
        x = random_cyclo(rng, rng.randint(1, 30))
        assert scalar_from_json(json.loads(json.dumps(scalar_to_json(x)))) == x


def test_noncanonical_input_accepted():
    # 1 + zeta_3 + zeta_3**2 written as a raw residue
    assert scalar_from_json({"order": 3, "coeffs": [[1, 1], [1, 1], [1, 1]]}).is_zero()


@pytest.mark.parametrize(
    "bad",
    [{"order": 3, "coeffs": [[1, 1]]}, {"order": 2, "coeffs": [[1, 0], [0, 1]]}, {"coeffs": []}, "x", [1, 2, 3]],
)
def test_bad_scalars(bad):
    with pytest.raises(InvalidArgument):
        scalar_from_json(bad)


def test_complex_format():
    assert scalar_to_json(ComplexF(0.5, -1.0)) == [0.5, -1.0]
    assert scalar_from_json([0.5, -1.0]) == ComplexF(0.5, -1.0)


def test_rational_strings():
    assert rational_to_json(Fraction(6, 10)) == "3/5"
    assert rational_to_json(Fraction(2)) == "2"


def test_spec_forms():
    spec = spec_new([(1, 2), (3, 1)])
    assert spec_to_json(spec) == {"blocks": [{"k": 1, "n": 2}, {"k": 3, "n": 1}]}
    assert spec_from_json(spec_to_json(spec)) == spec
    assert spec_from_json([[1, 2], [3, 1]]) == spec
    for bad in ({"blocks": []}, {"blocks": [{"k": 1}]}, {"blocks": [{"k": 0, "n": 1}]}, "nope", {"blocks": [[1, 2, 3]]}):
        with pytest.raises(InvalidArgument):
            spec_from_json(bad)


@pytest.mark.parametrize("backend", ["exact", "float"])
def test_block_round_trip(backend):
    r = build_uv(spec_new([(1, 1), (2, 2)]), backend)
    for x in (r.U, r.V, r.basis[3]):
        obj = block_to_json(x)
        assert obj["scalar"] == ("cyclotomic" if backend == "exact" else "float")
        y = block_from_json(json.loads(dumps(obj)))
        assert y.spec == x.spec and y.equals(x)
    if backend == "exact":
        assert block_to_json(r.U)["order"] == 10


def test_block_kind_mismatch():
    obj = block_to_json(build_uv(spec_new([(2, 2)])).U)
    obj["scalar"] = "float"
    with pytest.raises(InvalidArgument):
        block_from_json(obj)


def test_gram_report_json():
    rep = gram(build_uv(spec_new([(2, 2)])).basis, TraceForm.NORMALIZED)
    obj = gram_report_to_json(rep)
    assert set(obj) == {"form", "gram", "is_orthogonal", "is_normalized", "spans", "norms_squared"}
    assert obj["form"] == "normalized" and obj["spans"] is True
    assert scalar_from_json(obj["gram"][0][0]) == 1 and scalar_from_json(obj["gram"][0][1]) == 0


def test_dumps_deterministic():
    obj = block_to_json(build_uv(spec_new([(1, 1), (2, 2)])).V)
    assert dumps(obj) == dumps(json.loads(dumps(obj)))
