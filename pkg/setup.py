from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "stabsep._core._kernels",
                sources=["src/stabsep/_core/_kernels.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python fallback in stabsep._core is used when the extension is absent.
    ext_modules = []

setup(ext_modules=ext_modules)
