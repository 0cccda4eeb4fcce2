"""Install script for `weightedhodge`."""
from pathlib import Path

from setuptools import find_packages, setup

setup(
    name="weightedhodge",
    description="Vertex-weighted Hodge Laplacians of simplicial complexes",
    long_description=open("README.md", "r").read(),
    long_description_content_type="text/markdown",
    license="MIT",
    packages=find_packages(exclude=["tests", "tests.*"]),
    use_scm_version={
        "write_to": Path("weightedhodge") / "_weightedhodge_version.py",
        "write_to_template": '__version__ = "{version}"',
        "fallback_version": "0.1.0",
    },
    python_requires=">=3.9",
    install_requires=[
        "jinja2>=3.0.3",
        "pyyaml>=6.0",
        "click>=8.1.3",
        "numpy>=1.22",
        "networkx>=2.6",
    ],
    extras_require={
        "tests": [
            "pytest>=7.0.0",
            "hypothesis>=6.50",
        ]
    },
    entry_points={
        "console_scripts": [
            "weightedhodge=weightedhodge.cli:entry_point",
        ]
    },
    setup_requires=[
        "setuptools_scm>=7.0.1",
    ],
    package_data={"weightedhodge": ["verify/templates/*.j2"]},
    include_package_data=True,
    zip_safe=False,
)
