import pytest

from radiolab import documents
from radiolab.construction import construct_optimal
from radiolab.graphs import all_pairs_distances
from radiolab.labeling import validate


def test_roundtrip_bit_exact(tmp_path):
    lab = construct_optimal(7)
    path = tmp_path / "lab.json"
    documents.write_labeling(path, lab)
    text = path.read_text()
    doc = documents.loads(text)
    assert documents.dumps(doc) == text
    assert doc.span == 97 and doc.valid is True and doc.origin == "scheme"
    again = validate(doc.graph, all_pairs_distances(doc.graph), documents.labels_array(doc))
    assert again.valid and again.span == 97


def test_golden_document_roundtrip(data_dir):
    text = (data_dir / "table1_n6.json").read_text()
    assert documents.dumps(documents.loads(text)) == text


@pytest.mark.parametrize("text", [
    "not json",
    '{"format": "other"}',
    '{"format": "radiolab-labeling/1", "graph": {"kind": "nope"}}',
    '{"format": "radiolab-labeling/1", "graph": {"kind": "generic", "n": 2, "edges": [[0, 1]]}, '
    '"order": [0, 0], "labels": [0, 1]}',
    '{"format": "radiolab-labeling/1", "graph": {"kind": "generic", "n": 2, "edges": [[0, 1]]}, '
    '"order": null, "labels": [0]}',
])
def test_malformed_documents(text):
    with pytest.raises(documents.DocumentError):
        documents.loads(text)
