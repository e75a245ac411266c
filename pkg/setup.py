from setuptools import setup, find_packages
from setuptools.command.test import test as TestCommand
import sys
import ast
import re

_version_re = re.compile(r"VERSION\s+=\s+(.*)")

with open("hlab/__init__.py", "rb") as f:
    version = ast.literal_eval(_version_re.search(f.read().decode("utf-8")).group(1))

with open("README.md", "rb") as freadme:
    readme = freadme.read().decode("utf-8")

path_copy = sys.path[:]

sys.path.append("hlab")
try:
    from pyutils.version import get_version

    version = get_version(version)
except Exception:
    version = ".".join([str(v) for v in version])

sys.path[:] = path_copy

install_requires = [
    "six>=1.10.0",
    "promise>=2.3,<3",
    "numpy>=1.17",
    "jsonschema>=3.2,<4",
]

tests_requires = [
    "pytest==4.6.10",
    "pytest-cov==2.8.1",
    "pytest-benchmark==3.2.3",
    "pytest-mock==2.0.0",
    "hypothesis==4.57.1",
]


class PyTest(TestCommand):
    def finalize_options(self):
        TestCommand.finalize_options(self)
        self.test_args = ["hlab", "tests", "-vrsx"]
        self.test_suite = True

    def run_tests(self):
        # import here, cause outside the eggs aren't loaded
        import pytest

        errno = pytest.main(self.test_args)
        sys.exit(errno)


setup(
    name="hereditary-lab",
    version=version,
    description="Desk-scale experiments on hereditary set systems",
    long_description=readme,
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.6",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "License :: OSI Approved :: MIT License",
    ],
    keywords="matroid greedy hereditary hamiltonian cycle-cover",
    python_requires=">=3.6",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=install_requires,
    tests_require=tests_requires,
    cmdclass={"test": PyTest},
    extras_require={"test": tests_requires},
    entry_points={"console_scripts": ["hlab=hlab.cli.main:main"]},
    package_data={"hlab": ["py.typed"], "hlab.cli": ["schemas/*.json"]},
)
