from __future__ import annotations

import pytest

from synth import build_cluster


@pytest.fixture(scope="session")
def cluster_paths(tmp_path_factory):
    """A synthetic 25-document cluster with query and model summaries."""
    root = tmp_path_factory.mktemp("cluster")
    return build_cluster(root)
