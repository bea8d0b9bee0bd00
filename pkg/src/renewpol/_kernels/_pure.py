"""Pure-numpy reference implementation of the segment-scan kernels.

Segments are encoded CSR-style: segment i covers flat indices
offsets[i]:offsets[i+1]. All results are bit-identical to the compiled
versions.
"""

import numpy as np


def first_true(flags, offsets):
    """First flat index with a True flag per segment, -1 when none."""
    flags = np.ascontiguousarray(flags, dtype=bool)
    offsets = np.ascontiguousarray(offsets, dtype=np.int64)
    n = len(offsets) - 1
    hits = np.flatnonzero(flags)
    pos = np.searchsorted(hits, offsets[:-1], side="left")
    out = np.full(n, -1, dtype=np.int64)
    valid = pos < len(hits)
    cand = hits[np.minimum(pos, max(len(hits) - 1, 0))] if len(hits) else np.zeros(n, np.int64)
    take = valid & (cand < offsets[1:])
    out[take] = cand[take]
    return out


def first_exceeding(scores, offsets, threshold):
    """First flat index with scores > threshold per segment, -1 when none."""
    scores = np.ascontiguousarray(scores, dtype=np.float64)
    return first_true(scores > threshold, offsets)


def segment_records(scores, offsets):
    """Strictly increasing prefix maxima per segment.

    Returns (values, indices, rec_offsets): for segment i the slice
    rec_offsets[i]:rec_offsets[i+1] lists the record values in increasing
    order together with the flat index of each record's first attainment.
    """
    scores = np.ascontiguousarray(scores, dtype=np.float64)
    offsets = np.ascontiguousarray(offsets, dtype=np.int64)
    n = len(offsets) - 1
    values = []
    indices = []
    rec_offsets = np.zeros(n + 1, dtype=np.int64)
    for i in range(n):
        lo, hi = offsets[i], offsets[i + 1]
        if hi > lo:
            seg = scores[lo:hi]
            run_max = np.maximum.accumulate(seg)
            mask = np.empty(hi - lo, dtype=bool)
            mask[0] = True
            np.greater(run_max[1:], run_max[:-1], out=mask[1:])
            idx = np.flatnonzero(mask)
            values.append(seg[idx])
            indices.append(idx + lo)
        rec_offsets[i + 1] = rec_offsets[i] + (len(indices[-1]) if hi > lo else 0)
    if values:
        return np.concatenate(values), np.concatenate(indices), rec_offsets
    return np.empty(0, np.float64), np.empty(0, np.int64), rec_offsets
