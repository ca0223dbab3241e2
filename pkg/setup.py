"""Build the optional compiled kernels.

    pip install -e . --no-build-isolation

If Cython is missing or compilation fails the package still installs and
falls back to the pure-Python kernels at import time.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("modcong._ckernels", ["src/modcong/_ckernels.pyx"], optional=True)],
        compiler_directives={"language_level": 3, "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
