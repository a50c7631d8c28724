from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        ["src/semiring_lab/kernels/_speedups.pyx"],
        language_level="3",
    )
    for ext in ext_modules:
        # A failed compile must not break the install: the package falls
        # back to the pure-Python kernels at import time.
        ext.optional = True

setup(ext_modules=ext_modules)
