from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("invpoly._core", ["src/invpoly/_core.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-Python kernels are selected at import time when the
    # extension is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
