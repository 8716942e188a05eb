from setuptools import setup, find_packages

install_requires = ["sympy", "mpmath"]
tests_require = ["pytest", "pytest-random-order", "hypothesis"]

setup(
    name="log-algebraic",
    version="0.1",
    description="Log-algebraic identities and special L-values of modular elliptic curves",
    license="MIT",
    packages=find_packages(exclude=["test", "test.*"]),
    entry_points={"console_scripts": ["log-algebraic = log_algebraic.__main__:main"]},
    install_requires=install_requires,
    tests_require=tests_require,
    extras_require={"test": tests_require},  # to make pip happy
    zip_safe=False,  # to make mypy happy
)
