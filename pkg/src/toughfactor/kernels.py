"""Backend selection for the hot kernels.

The compiled extension is preferred when importable; the pure-Python module
is the fallback and also serves any instance too large for the 64-bit masks
the extension uses.  Both backends implement the same functions with the
same tie-breaking, so results are interchangeable.
"""

from __future__ import annotations

from . import _purekernels as _pure

try:
    from . import _fastkernels as _fast  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _fast = None

BACKEND = "compiled" if _fast is not None else "pure"

# uint64 masks in the extension; one spare bit keeps shifts well-defined
_MASK_LIMIT = 62


def backends() -> dict[str, object]:
    """Available backend modules keyed by name (for benchmarks/tests)."""
    out = {"pure": _pure}
    if _fast is not None:
        out["compiled"] = _fast
    return out


def _scan_impl(n: int):
    if _fast is not None and n <= _MASK_LIMIT:
        return _fast
    return _pure


def tutte_delta(adj_masks, s_mask, t_mask):
    return _scan_impl(len(adj_masks)).tutte_delta(adj_masks, s_mask, t_mask)


def min_tutte_delta(adj_masks):
    return _scan_impl(len(adj_masks)).min_tutte_delta(adj_masks)


def best_biased_barrier(adj_masks):
    return _scan_impl(len(adj_masks)).best_biased_barrier(adj_masks)


def collect_barriers(adj_masks, cap):
    return _scan_impl(len(adj_masks)).collect_barriers(adj_masks, cap)


def toughness_scan(adj_masks):
    return _scan_impl(len(adj_masks)).toughness_scan(adj_masks)


def deficiency_scan(adj_masks):
    return _scan_impl(len(adj_masks)).deficiency_scan(adj_masks)


def blossom_matching(n, adj_lists):
    impl = _fast if _fast is not None else _pure
    return impl.blossom_matching(n, adj_lists)
