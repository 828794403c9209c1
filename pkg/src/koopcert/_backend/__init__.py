"""Backend selection for the hot stepping kernels.

Prefers the compiled Cython extension and falls back to the pure-NumPy
reference implementation when the extension is unavailable.  Both expose
the same functions and produce bit-identical results (see
``tests/test_backend.py``).
"""

from koopcert._backend import _ref

try:  # pragma: no cover - depends on the build environment
    from koopcert._backend import _core as _impl

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover
    _impl = _ref
    HAVE_COMPILED = False

GUARD = _ref.GUARD

em_paths_ou = _impl.em_paths_ou
em_paths_ou_controlled = _impl.em_paths_ou_controlled
em_paths_duffing = _impl.em_paths_duffing
rk4_paths_duffing = _impl.rk4_paths_duffing


def backend_name():
    return "compiled" if HAVE_COMPILED else "numpy"
