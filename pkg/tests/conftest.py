import pytest
from pyfakefs.fake_filesystem_unittest import Patcher


@pytest.fixture
def fs():
    """pyfakefs filesystem that lets psutil keep reading the real /proc"""
    with Patcher(additional_skip_names=["psutil", "psutil._common", "psutil._pslinux"]) as patcher:
        yield patcher.fs
