import hashlib
import json
from importlib import resources

import pytest

# Golden data is frozen; a checksum change means the shipped relations or labels moved.
CHECKSUMS = {
    "thm53.json": "075e0f789a7cc678ea8d75b5108569c7b45c1408cd9e9bb5b50d82f7038e92c1",
    "p2_labels.json": "5091685f286173a5dfd4609db45c9ee078885f1bf61952c1ef8027ed068e2757",
}


@pytest.mark.parametrize("name", sorted(CHECKSUMS))
def test_checksum(name):
    data = resources.files("hilbchow").joinpath("data").joinpath(name).read_bytes()
    assert hashlib.sha256(data).hexdigest() == CHECKSUMS[name]


def test_relation_file_schema():
    doc = json.loads(resources.files("hilbchow").joinpath("data").joinpath("thm53.json").read_text())
    assert {r["name"] for r in doc["relations"]} == {str(i) for i in range(1, 16)}
    for r in doc["relations"]:
        assert all(set(t) == {"label", "coeff"} for t in r["terms"])
        assert all(set(m) == {"char", "power"} and len(m["char"]) == 2 for m in r["modulus"])
