import dataclasses

import pytest

from majpart.families import counterexample_147, gadget_append
from majpart.graph import EdgeColoredGraph
from majpart.partition import KPartition, verify_majority
from majpart.refutation import (
    ANCHOR_LABELINGS,
    RefutationCertificate,
    StructureMismatch,
    check_certificate,
    gadget_extension_table,
    local_gadget,
    refute_counterexample,
)


@pytest.fixture(scope="module")
def cert():
    return refute_counterexample(counterexample_147())


def test_table_shape():
    table = gadget_extension_table()
    assert len(table) == 27
    mono = [k for k in table if len(set(k)) == 1]
    assert sorted(mono) == [(1, 1, 1), (2, 2, 2), (3, 3, 3)]
    assert all(table[k] is None for k in mono)
    assert all(table[k] is not None for k in table if k not in mono)


def test_table_extensions_verify_on_internal_vertices():
    g = local_gadget()
    for anchors, ext in gadget_extension_table().items():
        if ext is not None:
            assert verify_majority(g, KPartition(3, anchors + ext), vertices=(3, 4, 5, 6)).ok


def test_known_extensions():
    g = local_gadget()
    for anchors in ((1, 2, 3), (1, 1, 2)):
        assert verify_majority(g, KPartition(3, anchors + (3, 2, 1, 3)), vertices=(3, 4, 5, 6)).ok


def test_certificate_checks(cert):
    assert len(cert.anchor_transcript) == 2187
    assert cert.anchor_transcript[0] == (1, 2, 3)  # all-ones labeling
    for labels, cited in zip(ANCHOR_LABELINGS, cert.anchor_transcript):
        assert len({labels[i - 1] for i in cited}) == 1
    assert check_certificate(cert, counterexample_147()) == []


def test_certificate_json_roundtrip(cert):
    again = RefutationCertificate.from_json(cert.to_json())
    assert again.gadget_table == cert.gadget_table
    assert again.anchor_transcript == cert.anchor_transcript


def test_checker_rejects_tampering(cert):
    g = counterexample_147()
    bad = dataclasses.replace(cert, anchor_transcript=[(1, 2, 4)] + cert.anchor_transcript[1:])
    assert check_certificate(bad, g) == []  # all-ones labeling: every triple is monochromatic
    labels = ANCHOR_LABELINGS[1]  # (1,1,1,1,1,1,2)
    bad = dataclasses.replace(cert, anchor_transcript=[cert.anchor_transcript[0], (5, 6, 7)] + cert.anchor_transcript[2:])
    assert labels[6] == 2 and check_certificate(bad, g)
    table = dict(cert.gadget_table)
    table[(1, 1, 1)] = (1, 2, 3, 1)
    assert check_certificate(dataclasses.replace(cert, gadget_table=table), g)
    table = dict(cert.gadget_table)
    table[(1, 2, 3)] = (1, 1, 1, 1)
    assert check_certificate(dataclasses.replace(cert, gadget_table=table), g)


def test_checker_rejects_other_graphs(cert):
    g = counterexample_147().with_edges([(7, 20, 1)])
    assert check_certificate(cert, g)


def test_refute_rejects_other_graphs():
    with pytest.raises(StructureMismatch):
        refute_counterexample(gadget_append(EdgeColoredGraph(3), 0, 1, 2))
