"""The named reproduction runners return ok plus a readable report."""

import pytest

from subtrees.repro import (
    REPROS,
    repro_barbell_additions,
    repro_barbell_matchings,
    repro_dstar_local,
    repro_join_deletion_2_6,
    repro_join_deletion_10_9,
    repro_transitive_suite,
    repro_tree_contraction_n10,
)


def test_registry_names():
    assert set(REPROS) == {
        "barbell-14-6-additions",
        "barbell-14-6-matchings",
        "dstar-16-5-local",
        "dbstar-23-8-local",
        "join-deletion-2-6",
        "join-deletion-10-9",
        "ratio-chain-n8",
        "tree-contraction-n10",
        "transitive-suite",
    }
    slow = [name for name, (_, tagged) in REPROS.items() if tagged]
    assert slow == ["dbstar-23-8-local"]


@pytest.mark.parametrize(
    "runner",
    [
        repro_join_deletion_2_6,
        repro_join_deletion_10_9,
        repro_dstar_local,
        repro_tree_contraction_n10,
        repro_transitive_suite,
    ],
)
def test_fast_repros_reproduce(runner):
    ok, lines = runner()
    assert ok, "\n".join(lines)
    assert lines


def test_barbell_repros_reproduce():
    ok, lines = repro_barbell_additions()
    assert ok, "\n".join(lines)
    assert any("expected exactly 1" in line for line in lines)
    ok, lines = repro_barbell_matchings()
    assert ok, "\n".join(lines)
    assert any("27240" in line for line in lines)


@pytest.mark.slow
def test_slow_repros_reproduce():
    for name in ("dbstar-23-8-local", "ratio-chain-n8"):
        runner, _ = REPROS[name]
        ok, lines = runner()
        assert ok, "\n".join(lines)
