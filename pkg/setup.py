"""
Install script -> Just do pip install -e .  (for editing)
"""

from setuptools import setup, find_packages

setup(
    name='sigcocycles',
    version='2.0.0',
    description=(
        'Exact signature cocycles, bundle signatures and congruence '
        'subgroups of the integral symplectic groups'
    ),
    author='William Bowley',
    author_email='wgrantbowley@gmail.com',
    packages=find_packages(include=["sigcocycles", "sigcocycles.*"]),
    install_requires=[
        'PyYAML',
        'numpy'
    ],
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.11',
    include_package_data=True,
    package_data={
        "sigcocycles.library": [
            "*.toml",
            "*.yaml"
        ],
    },
    entry_points={
        "console_scripts": [
            "sigcocycles=sigcocycles.cli.main:main",
        ],
    },
)
