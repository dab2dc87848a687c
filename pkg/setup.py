from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="orientedcut",
    version="0.1.0",
    install_requires=[],
    extras_require={"dev": ["pytest>=7.0", "pypbt"]},
    description="Exact constructive arithmetic on oriented Dedekind cuts",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests"]),
    entry_points={"console_scripts": ["orc=orientedcut.cli:main"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
)
