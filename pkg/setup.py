from setuptools import Extension, setup

from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [
            Extension(
                "bstat._kernels._speedups",
                ["src/bstat/_kernels/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
)
