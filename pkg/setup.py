# -*- coding: utf-8 -*
"""
Setup script for xyring

USAGE:
    python setup.py install
    pip install -e .[testing]
"""

import sys
import os.path

HERE0 = os.path.dirname(__file__) or os.curdir
os.chdir(HERE0)
HERE = os.curdir
sys.path.insert(0, os.path.abspath(HERE))

from setuptools import find_packages, setup


# -----------------------------------------------------------------------------
# CONFIGURATION:
# -----------------------------------------------------------------------------
def read_version(filename="VERSION.txt"):
    with open(os.path.join(HERE, filename)) as f:
        return f.read().strip()

requirements = [
    "numpy >= 1.17",
    "scipy >= 1.5",
]
testing_requirements = [
    "behave >= 1.2.6, < 1.3",
    "parse >= 1.8.2",
    "parse_type >= 0.4.2",
    "PyHamcrest >= 2.0",
    "path.py >= 11.5.0",
]
docs_requirements = [
    "Sphinx >= 1.8",
]
develop_requirements = [
    "invoke >= 1.2.0",
    "path.py >= 11.5.0",
    "tox >= 3.0",
]

description = """\
Exact diagonalization of the spin-1/2 XY ring in a transverse field:
ground states, nearest-neighbour correlation and concurrence, level
crossings and parameter sweeps.
"""

# -----------------------------------------------------------------------------
# SETUP:
# -----------------------------------------------------------------------------
setup(
    name="xyring",
    version=read_version(),
    description=description,
    keywords="physics, spin chain, exact diagonalization, entanglement",
    platforms=["any"],
    license="BSD",
    packages=find_packages(exclude=["features", "features.*", "tasks"]),
    python_requires=">=3.8",
    install_requires=requirements,
    extras_require={
        "testing": testing_requirements,
        "docs": docs_requirements,
        "develop": develop_requirements,
    },
    entry_points={
        "console_scripts": [
            "xyring = xyring.cli:main",
        ],
    },
    include_package_data=True,
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    zip_safe=False,
)
