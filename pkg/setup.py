#!/usr/bin/env python

from setuptools import find_packages, setup

test_requires = [
    "pytest",
    "pyfakefs",
    "pytest-cov",
    "black",
    "isort",
    "flake8",
    "pre-commit",
]

doc_requires = [
    "sphinx_rtd_theme",
    "sphinx_tabs",
    "myst-parser",
]

accel_requires = ["numba>=0.57"]

setup(
    name="permspec",
    version="0.1.0",
    python_requires=">=3.9",
    description="Exact permanents and permanent spectra of (0,1)-matrices with three 1's in every line",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    # ase>=3.23 for ase.config and the CLICommand framework
    install_requires=["ase>=3.23.0", "numpy>=1.23", "packaging>=20.0", "psutil>=5.0.0", "sympy>=1.10"],
    entry_points={
        "console_scripts": ["permspec=permspec.cli:main"],
    },
    extras_require={
        "test": test_requires,
        "doc": test_requires + doc_requires,
        "accel": accel_requires,
    },
    package_data={"permspec": ["json_tables/*.json"]},
    include_package_data=True,
)
