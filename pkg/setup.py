"""Build hook for the optional compiled Groebner kernel.

The package is fully functional without the extension; coxlab.kernels
falls back to the pure-Python engine when the build is unavailable.
"""

import os

from setuptools import Extension, setup

PYX = "src/coxlab/_gbcore.pyx"

ext_modules = []
if os.path.exists(PYX):
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "coxlab._gbcore",
                    [PYX],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
