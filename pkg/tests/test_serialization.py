import json
import re
import random
from fractions import Fraction

import pytest

from elastinv.binary_forms import BinaryForm
from elastinv.sampling import random_harmonic, random_tensor
from elastinv.scalars import GaussianRational
from elastinv.serialization import (InputError, dump_scalar, form_from_json, form_to_json,
                                    harmonic_from_json, harmonic_to_json, load_json_text,
                                    read_tensor, rows_to_csv, tensor_from_csv, tensor_from_json,
                                    tensor_to_json)
from elastinv.tensor_core import tensor_to_packed


def test_dump_scalar():
    assert dump_scalar(Fraction(3, 4), "exact") == "3/4"
    assert dump_scalar(GaussianRational(1, Fraction(-1, 2)), "exact") == ["1", "-1/2"]
    assert dump_scalar(2.5, "float") == 2.5
    assert dump_scalar(1 + 2j, "float") == [1.0, 2.0]
    assert dump_scalar(Fraction(1, 2), "exact", pair=True) == ["1/2", "0"]
    assert dump_scalar(3.0, "float", pair=True) == [3.0, 0.0]


def test_tensor_json_round_trip():
    C = random_tensor(random.Random(1))
    obj = json.loads(json.dumps(tensor_to_json(C)))
    assert tensor_to_packed(tensor_from_json(obj, "exact")) == tensor_to_packed(C)
    flat = [str(x) for x in C.components.ravel()]
    assert tensor_to_packed(tensor_from_json({"components": flat}, "exact")) == tensor_to_packed(C)


def test_tensor_csv():
    C = random_tensor(random.Random(2))
    vals = [str(x) for x in tensor_to_packed(C)]
    text = "# header\n" + ", ".join(vals[:6]) + "\n" + " ".join(vals[6:]) + "  # tail\n"
    assert tensor_to_packed(tensor_from_csv(text, "exact")) == tensor_to_packed(C)
    floats = tensor_from_csv(text, "float")
    assert not floats.is_exact


@pytest.mark.parametrize("obj, fragment", [
    ([], "top level"),
    ({"voigt": [[0] * 6] * 5}, "6 rows"),
    ({"voigt": [[0] * 6] * 5 + [[0] * 5]}, "voigt[5]: expected 6 entries"),
    ({"components": [0] * 80}, "81"),
    ({"voigt": [["x"] * 6] * 6}, "voigt[0][0]"),
])
def test_tensor_json_errors(obj, fragment):
    with pytest.raises(InputError, match=re.escape(fragment)):
        tensor_from_json(obj, "exact")


def test_tensor_csv_errors():
    with pytest.raises(InputError, match="21"):
        tensor_from_csv("1 2 3", "exact")
    with pytest.raises(InputError, match="csv value 1"):
        tensor_from_csv(" ".join(["a"] + ["1"] * 20), "exact")


def test_form_round_trip():
    f = BinaryForm([1, GaussianRational(0, 2), Fraction(1, 3)])
    obj = form_to_json(f)
    assert obj == {"degree": 2, "raw": [["1", "0"], ["0", "2"], ["1/3", "0"]]}
    assert form_from_json(obj, "exact") == f
    with pytest.raises(InputError):
        form_from_json({"degree": 3, "raw": ["1", "2"]}, "exact")
    with pytest.raises(InputError):
        form_from_json({"coeffs": []}, "exact")


@pytest.mark.parametrize("order", [0, 1, 2, 3, 4])
def test_harmonic_round_trip(order):
    p = random_harmonic(random.Random(order), order)
    obj = harmonic_to_json(p)
    assert obj["order"] == order
    assert harmonic_from_json(obj, "exact") == p


def test_harmonic_errors():
    with pytest.raises(InputError):
        harmonic_from_json({"order": -1, "components": []}, "exact")
    with pytest.raises(InputError):
        harmonic_from_json({"order": 2, "components": ["1"]}, "exact")


def test_load_and_read(tmp_path):
    with pytest.raises(InputError, match="invalid JSON"):
        load_json_text("{", "x.json")
    C = random_tensor(random.Random(3))
    path = tmp_path / "t.json"
    path.write_text(json.dumps(tensor_to_json(C)))
    assert tensor_to_packed(read_tensor(str(path), "exact")) == tensor_to_packed(C)


def test_rows_to_csv():
    assert rows_to_csv(["a", "b"], [[1, "x,y"]]) == 'a,b\n1,"x,y"\n'
