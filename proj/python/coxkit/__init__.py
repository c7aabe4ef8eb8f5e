"""Exact computations in Coxeter groups.

Systems are given by their Coxeter matrix; all group and root arithmetic is
exact over the cyclotomic ground field, so every verdict (classification,
lengths, orders, fixed-point data, involution criteria) is a proof, not an
approximation. The compiled extension ``_coxkit`` does the work; this
package re-exports it and adds small conveniences.
"""

try:
    from . import _coxkit as _impl  # wheel layout: extension inside the package
except ImportError:
    import _coxkit as _impl  # build-tree layout: extension on sys.path

_names = [n for n in dir(_impl) if not n.startswith("_")]
globals().update({n: getattr(_impl, n) for n in _names})


def system_from_edges(rank, edges):
    """Build a system from (i, j, m) triples, 0-based, with m = 0 infinite.

    Pairs not listed keep the default label 2 (commuting generators).
    """
    sys = _impl.System(rank)
    for i, j, m in edges:
        sys.set_label(i, j, m)
    return sys


__all__ = sorted(_names + ["system_from_edges"])
