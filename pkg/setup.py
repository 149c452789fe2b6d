from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; kernels fall back to _pycore
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "cyclefactors._core",
                ["src/cyclefactors/_core.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
