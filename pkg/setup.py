#!/usr/bin/env python3
import sys
from setuptools import setup, find_packages
from inspect import cleandoc
import partverify

with open("README.md", encoding="utf-8") as f:
    long_description = f.read()

setup(
    name=partverify.__package_name__,
    version=partverify.__version__,
    description=cleandoc(partverify.__doc__),
    long_description=long_description,
    long_description_content_type="text/markdown",
    author=partverify.__author__,
    author_email=partverify.__author_email__,
    url=partverify.__homepage__,
    license=partverify.__license__,
    classifiers=[
        "Development Status :: 4 - Beta",
        "Operating System :: OS Independent",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Intended Audience :: Science/Research",
        "Natural Language :: English",
        "Topic :: Scientific/Engineering :: Mathematics",
        ],
    python_requires='~=3.8',
    install_requires=[
        'jinja2 >= 2.10.1',
        ],
    extras_require={
        "test": ["hypothesis"],
        },
    packages=find_packages(exclude=['test']),
    package_data={
        'partverify': [
            'resources/*.*',
            'resources/templates/*.*',
            ],
        },
    entry_points={
        'console_scripts': [
            'partverify = partverify.cli:main',
            'pv = partverify.cli:main',
            ],
        },
    )
