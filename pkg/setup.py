import os
import sys

import numpy as np
from setuptools import Extension, setup

ext_modules = []
if os.environ.get("UNIVMEAN_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "univmean._kernels",
                    ["src/univmean/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    # plain complex multiply (no C99 Inf/NaN recovery branch), as numpy does
                    extra_compile_args=[] if sys.platform == "win32" else ["-O3", "-fcx-limited-range"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
