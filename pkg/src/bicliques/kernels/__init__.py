"""Kernel backend selection.

The hot inner loops (lexicographic subset scan over bitset adjacency rows,
top-degree selection, biclique edge deletion, bulk bit manipulation) have two
interchangeable implementations:

  * ``_ckern`` -- Cython extension compiled at install time;
  * ``pykern`` -- pure Python / numpy fallback.

The compiled backend is used when importable. Set ``BICLIQUES_BACKEND=py`` to
force the fallback or ``BICLIQUES_BACKEND=c`` to require the extension
(ImportError if missing). Both backends produce bit-identical results; see
tests/test_backends.py and benchmarks/compare_backends.py.

Backend contract (all arrays are C-contiguous numpy):

  set_bits_bulk(words u64[R,W], rows i64[N], cols i64[N]) -> None
  top_r_select(degrees i64[n], r) -> i64[r] ids, by (degree desc, id asc),
      output sorted ascending
  scan_lex_subsets(words, cand i64[r], q, forbid u64[W], first_lo, first_hi)
      -> (c_ids i64[q] | None, d_ids i64[q] | None, scanned int)
  delete_biclique_general(words, degrees, left i64, right i64)
      -> None | (u, v) first missing pair; validates before mutating
  delete_biclique_bipartite(words_b, deg_b, deg_a, left_b, right_a) -> same
  extract_edges_general(words, n) -> (u i64[m], v i64[m]) ascending, u < v
  extract_edges_bipartite(words_b, ncols) -> (b i64[m], a i64[m]) ascending
  fisher_yates_partial(pool i64[total], js i64[m]) -> None
"""

import importlib
import os

import numpy as np

from bicliques.kernels import pykern

_regist = {"py": pykern}


def _load_compiled():
    if "c" not in _regist:
        _regist["c"] = importlib.import_module("bicliques.kernels._ckern")
    return _regist["c"]


_choice = os.environ.get("BICLIQUES_BACKEND", "auto")
if _choice == "py":
    _impl = pykern
    BACKEND = "py"
elif _choice == "c":
    _impl = _load_compiled()
    BACKEND = "c"
else:
    try:
        _impl = _load_compiled()
        BACKEND = "c"
    except ImportError:
        _impl = pykern
        BACKEND = "py"


def backend_module(name: str):
    """Fetch a backend by name ('c' or 'py'); used by tests and benchmarks."""
    if name == "py":
        return pykern
    if name == "c":
        return _load_compiled()
    raise ValueError(f"unknown backend {name!r}")


def available_backends():
    names = ["py"]
    try:
        _load_compiled()
        names.insert(0, "c")
    except ImportError:
        pass
    return names


set_bits_bulk = _impl.set_bits_bulk
top_r_select = _impl.top_r_select
scan_lex_subsets = _impl.scan_lex_subsets
delete_biclique_general = _impl.delete_biclique_general
delete_biclique_bipartite = _impl.delete_biclique_bipartite
extract_edges_general = _impl.extract_edges_general
extract_edges_bipartite = _impl.extract_edges_bipartite
fisher_yates_partial = _impl.fisher_yates_partial


def words_for(nbits: int) -> int:
    """Number of 64-bit words needed to hold ``nbits`` bits."""
    return (nbits + 63) >> 6


def make_mask(ids, nwords: int):
    """Bitmask with the given bit positions set, as a uint64 word array."""
    mask = np.zeros((1, nwords), dtype=np.uint64)
    ids = np.asarray(ids, dtype=np.int64)
    set_bits_bulk(mask, np.zeros(len(ids), dtype=np.int64), ids)
    return mask[0]
