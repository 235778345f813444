"""Build script for the optional compiled kernel extension.

The package works without the extension (a numpy fallback is selected at
import time); building it just makes the limit-law series sampler faster.
If Cython or numpy is unavailable at build time the extension is skipped.
"""

import os.path

from setuptools import Extension, setup

try:
    import numpy
    import numpy.random
    from Cython.Build import cythonize
except ImportError:
    extensions = []
else:
    # the C distribution functions used by the kernels live in numpy's
    # static npyrandom library, which is not linked implicitly
    _npyrandom_dir = os.path.join(os.path.dirname(numpy.random.__file__), "lib")
    extensions = cythonize(
        [
            Extension(
                "logit_gof._kernels",
                ["src/logit_gof/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                library_dirs=[_npyrandom_dir],
                libraries=["npyrandom"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )

setup(ext_modules=extensions)
