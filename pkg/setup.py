# Builds the optional compiled transform kernel:
#
#     python setup.py build_ext --inplace
#
# The package works without it (a numpy fallback is selected at import);
# the compiled kernel just makes the hot axis-contraction loop faster.
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "qecalg._kernel_cy",
                ["src/qecalg/_kernel_cy.pyx"],
                # -fcx-limited-range: textbook complex multiply instead of the
                # __muldc3 libcall; no reassociation, so summation order (and
                # bit-reproducibility) is unaffected.
                extra_compile_args=["-O3", "-fcx-limited-range", "-march=native"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
