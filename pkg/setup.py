from setuptools import setup, find_packages

setup(
    name="girth-kit",
    version="0.1.0",
    description="Girth approximation, roundtrip covers and roundtrip spanners for weighted digraphs",
    packages=find_packages(exclude=["examples", "examples.*"]),
    package_data={"girthkit": ["schemas/*.json"]},
    python_requires=">=3.10",
    install_requires=[
        "pandas>=2.2.0",
        "numpy>=1.26.0",
        "networkx>=3.2",
        "click>=8.1.0",
        "python-dotenv>=1.0.0",
        "jsonschema>=4.20.0",
    ],
    entry_points={
        "console_scripts": [
            "girthkit=girthkit.cli:cli",
        ],
    },
)
