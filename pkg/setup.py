from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("ffmoment._kernels", ["src/ffmoment/_kernels.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    # The package runs on the pure-Python kernels if Cython is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
