from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("dimp8._dimcore", ["src/dimp8/_dimcore.pyx"], optional=True)],
        language_level=3,
    )
except ImportError:
    # pure-Python fallback is selected at import time when the extension is absent
    ext_modules = []

setup(ext_modules=ext_modules)
