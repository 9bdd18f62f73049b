"""Optional build of the compiled evaluation kernels.

The package is fully functional as pure Python + numpy.  When Cython and a C
compiler are present, `python setup.py build_ext --inplace` (or a normal pip
install) additionally builds seiffert._kernels._cheb, which the package picks
up automatically at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/seiffert/_kernels/_cheb.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
