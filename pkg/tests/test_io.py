import json

import numpy as np

from sporadic_sics import duality, io, octonions, realgeom, sic


def test_ensemble_round_trip_bit_exact(tmp_path):
    e = sic.hoggar_sic(-1)
    path = tmp_path / "e.json"
    io.write_ensemble(e, path)
    back = io.read_ensemble(path)
    assert back.d == 8 and back.provenance == e.provenance and back.labels == e.labels
    for a, b in zip(e.projectors, back.projectors):
        assert np.array_equal(a, b)


def test_ensemble_bad_size():
    data = io.ensemble_to_dict(sic.qubit_sic(1))
    data["projectors"][0] = data["projectors"][0][:-1]
    try:
        io.ensemble_from_dict(data)
    except ValueError as exc:
        assert "expected 8" in str(exc)
    else:
        raise AssertionError("no error")


def test_lineset_round_trip_exact():
    for lines in (realgeom.icosahedron_orbit(), octonions.antiflag_lines_28()):
        data = json.loads(json.dumps(io.lineset_to_dict(lines)))
        back = io.lineset_from_dict(data)
        assert back.vectors == lines.vectors
        assert back.cosine_squared == lines.cosine_squared


def test_lineset_csv():
    text = io.lineset_to_csv(realgeom.icosahedron_orbit())
    rows = text.strip().split("\n")
    assert rows[0] == "x0,x1,x2" and len(rows) == 7


def test_arrays():
    z = duality.twin_incidence().zero_pattern
    assert io.array_to_json(z)[0][0] in (True, False)
    csv_text = io.matrix_to_csv(z)
    assert csv_text.count("\n") == 64
    assert set(csv_text.replace("\n", ",").strip(",").split(",")) == {"0", "1"}
