import numpy as np
from setuptools import Extension, setup

# The packed-bitset simulation kernel is an optional speedup; the package
# falls back to the numpy implementation if the extension is unavailable.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "synchro._kernels",
                ["src/synchro/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
