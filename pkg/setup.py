from errno import ENOENT

from setuptools import setup, find_packages

from pycompact import __version__

try:
    with open("README.rst") as readme:
        long_description = readme.read()
except (OSError, IOError) as error:
    if error.errno == ENOENT:
        long_description = ""
    else:
        raise

requirements = [
    "lark>=1.0.0",
    "six"
]

setup(
    name="pycompact",
    version=".".join(map(str, __version__)),
    packages=find_packages(
        include=("pycompact*", )
    ),
    package_data={
        "pycompact.core": ["pycompact.ini"]
    },
    include_package_data=True,
    description="Exact nets, coverage checks and limits for finitely "
                "presented compact metric spaces",
    long_description=long_description,
    install_requires=requirements,
    python_requires=">=3.6",
    entry_points={
        "console_scripts": [
            "pycompact=pycompact.cli.main:run"
        ]
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: Implementation :: CPython",
        "Programming Language :: Python :: Implementation :: PyPy",
        "Topic :: Scientific/Engineering :: Mathematics"
    ]
)
