import time

import pytest

from harborth.pipeline import Pipeline


@pytest.fixture(scope="session")
def pipeline():
    """The seven-stage derivation, shared across the whole run.

    Uses the default on-disk cache, so a cold first run pays the full
    derivation cost and later runs are fast."""
    pipe = Pipeline(verbose=True)
    start = time.monotonic()
    pipe.run_all()
    pipe.elapsed = time.monotonic() - start
    return pipe


@pytest.fixture(scope="session")
def report(pipeline):
    return pipeline.certify()
