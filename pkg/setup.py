from setuptools import setup, find_packages

setup(
    name="reactiveSupervisor",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    py_modules=["config"],
    install_requires=[
        "networkx>=3.0",
    ],
    extras_require={
        "test": ["pytest>=7.0.0", "pytest-cov>=3.0.0"],
    },
    entry_points={
        "console_scripts": ["rdes=cli.main:main"],
    },
    python_requires=">=3.8",
)
