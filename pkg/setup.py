from setuptools import find_packages, setup

setup(
    name="cnorm",
    version="1.0.0",
    packages=find_packages(exclude=["tests"]),
    include_package_data=True,
    install_requires=[
        "numpy",
        "pandas",
        "xlsxwriter",
    ],
    entry_points={
        "console_scripts": [
            "cnorm=cnorm:launch",
        ],
    },
    package_data={
        "cnorm": ["saves/*"],
    },
    description="Centralizer-norm series engine for finite groups",
    python_requires=">=3.10",
)
