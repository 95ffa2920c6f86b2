import os
from pathlib import Path

import pytest

from zapoints.selftest import ScanCache
from zapoints.zeta import EvalConfig


@pytest.fixture(scope="session")
def cfg() -> EvalConfig:
    return EvalConfig()


@pytest.fixture(scope="session")
def scan_workdir(tmp_path_factory) -> Path:
    """Scan cache directory; ZAP_SELFTEST_DIR reuses completed scans."""
    env = os.environ.get("ZAP_SELFTEST_DIR")
    if env:
        return Path(env)
    return tmp_path_factory.mktemp("scans")


@pytest.fixture(scope="session")
def scan_cache(scan_workdir, cfg) -> ScanCache:
    return ScanCache(scan_workdir, jobs=os.cpu_count(), cfg=cfg)
