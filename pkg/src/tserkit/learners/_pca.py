from __future__ import annotations

import numpy as np

from ._cart import check_Xy


def pca_fit(X) -> tuple[np.ndarray, np.ndarray]:
    """Principal components of ``X``.

    Returns
    -------
    components : ndarray of shape (p, p)
        Orthonormal columns ordered by descending eigenvalue. Each column is
        signed so that its entry of largest magnitude is positive.
    eigenvalues : ndarray of shape (p,)
        Eigenvalues of the sample covariance (``n - 1`` divisor).
    """
    X = check_Xy(X)
    if X.shape[0] < 2:
        raise ValueError("PCA needs at least two rows")
    C = np.cov(X, rowvar=False, ddof=1).reshape(X.shape[1], X.shape[1])
    vals, vecs = np.linalg.eigh(C)
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    pivot = np.argmax(np.abs(vecs), axis=0)
    signs = np.sign(vecs[pivot, np.arange(vecs.shape[1])])
    signs[signs == 0] = 1.0
    return vecs * signs, vals
