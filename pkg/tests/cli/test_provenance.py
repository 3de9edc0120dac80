from goisac.utils.git import commit_sha, provenance


def test_provenance_fields():
    record = provenance()

    assert set(record) == {"commit_sha", "dirty"}
    assert record["commit_sha"] == commit_sha()
    if record["commit_sha"] is None:
        assert record["dirty"] is None
    else:
        assert isinstance(record["dirty"], bool)
