"""Growth of configuration counts: exact counting, spectra, Lyapunov exponents.

Specializing the census representation at b3 = r3 = y = 1 turns the
vector chain into an exact big-integer counter of configurations per
word (`count_chdc`).  Averaging the two specialized letter matrices of
the blue-start block gives a nonnegative 19x19 matrix whose dominant
eigenvalue 3/2 drives the annealed mean: with f(n) twice the
initial/final contraction of its n-th power, (1/n) log f(n) tends to
log(3/2) (`mean_growth`).

`lyapunov_estimate` samples the quenched exponent (1/n) log D_n for
words with independent fair-coin letters: by subadditivity and Kingman's
theorem the limit exists almost surely, and Jensen's inequality places
it at or below the annealed value log(3/2).  `subadditivity_check`
verifies the underlying supermultiplicativity count(xy) >= count(x) *
count(y) on random splits.

Floating chains renormalize the state vector by its max-norm after every
letter and accumulate the log of the divisors, so counts far beyond
float range stay representable through their logarithm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .chdc import BLUE, RED, validate_word
from .linrep import blue_start_rep, census_rep

DEFAULT_SEED = 42


# -- exact counting ---------------------------------------------------------

_count_rep = None


def _counting_rep():
    global _count_rep
    if _count_rep is None:
        _count_rep = census_rep().specialize(1, 1, 1)
    return _count_rep


def count_chdc(word: str) -> int:
    """Number of configurations on the word, by exact integer vector chain."""
    validate_word(word)
    if not word:
        return 1
    return _counting_rep().coefficient(word)


# -- the averaged letter matrix and its spectrum -----------------------------


def _ones_block_matrices() -> tuple[np.ndarray, np.ndarray]:
    rep = blue_start_rep()
    num = rep.specialize(1, 1, 1)
    mats = {}
    for colour in (BLUE, RED):
        m = np.zeros((rep.dim, rep.dim))
        for p, row in enumerate(num.rows[colour]):
            for q, val in row:
                m[p, q] = float(val)
        mats[colour] = m
    return mats[BLUE], mats[RED]


def mean_letter_matrix() -> np.ndarray:
    """Average of the two all-ones letter matrices of the blue-start block."""
    mb, mr = _ones_block_matrices()
    return (mb + mr) / 2.0


def _ones_vectors() -> tuple[np.ndarray, np.ndarray]:
    rep = blue_start_rep()
    num = rep.specialize(1, 1, 1)
    return (
        np.array([float(x) for x in num.initial]),
        np.array([float(x) for x in num.final]),
    )


class NonConvergenceError(RuntimeError):
    def __init__(self, residual: float, tolerance: float, iterations: int):
        super().__init__(
            f"power iteration residual {residual:.3e} above tolerance {tolerance:.1e} "
            f"after {iterations} iterations"
        )
        self.residual = residual
        self.tolerance = tolerance
        self.iterations = iterations


@dataclass
class SpectralReport:
    dominant: float
    second_modulus: float
    gap: float
    iterations: int
    residual: float
    tolerance: float


def _power_iteration(matrix: np.ndarray, tolerance: float, max_iter: int) -> tuple[float, np.ndarray, int, float]:
    v = np.ones(matrix.shape[0])
    v /= np.linalg.norm(v)
    lam = 0.0
    residual = math.inf
    for it in range(1, max_iter + 1):
        w = matrix @ v
        norm = np.linalg.norm(w)
        if norm == 0.0:
            raise NonConvergenceError(math.inf, tolerance, it)
        v_next = w / norm
        lam = float(v_next @ (matrix @ v_next))
        residual = float(np.linalg.norm(matrix @ v_next - lam * v_next))
        v = v_next
        if residual < tolerance:
            return lam, v, it, residual
    raise NonConvergenceError(residual, tolerance, max_iter)


def spectrum(tolerance: float = 1e-12, max_iter: int = 100_000) -> SpectralReport:
    """Dominant eigenvalue of the averaged letter matrix, plus the modulus gap.

    Power iteration from a positive start vector; the second modulus comes
    from the growth rate of iterates of the deflated matrix (deflation by
    the dominant left/right eigenvector pair), which handles a complex
    subdominant pair gracefully.
    """
    xi = mean_letter_matrix()
    lam, v, its, residual = _power_iteration(xi, tolerance, max_iter)
    lam_left, w, its_left, _ = _power_iteration(xi.T, tolerance, max_iter)
    deflated = xi - lam * np.outer(v, w) / float(w @ v)
    rng = np.random.default_rng(0)
    z = rng.standard_normal(xi.shape[0])
    z /= np.linalg.norm(z)
    log_growth = 0.0
    steps = 400
    for _ in range(steps):
        z = deflated @ z
        norm = np.linalg.norm(z)
        if norm == 0.0:
            log_growth = -math.inf
            break
        log_growth += math.log(norm)
        z /= norm
    second = 0.0 if log_growth == -math.inf else math.exp(log_growth / steps)
    return SpectralReport(
        dominant=lam,
        second_modulus=second,
        gap=lam - second,
        iterations=its + its_left,
        residual=residual,
        tolerance=tolerance,
    )


def mean_growth(n: int) -> float:
    """(1/n) log f(n) with f(n) twice the contraction of the n-th matrix power.

    f(n) equals the expected configuration count over fair-coin words of
    length n; the value tends to log(3/2) from below at speed
    log(3/2)/n.  Computed with per-step max-norm renormalization.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    xi = mean_letter_matrix()
    lam_vec, gam_vec = _ones_vectors()
    v = gam_vec.copy()
    log_scale = 0.0
    for _ in range(n):
        v = xi @ v
        m = float(np.max(np.abs(v)))
        if m == 0.0:
            raise ArithmeticError("state vector vanished during iteration")
        v /= m
        log_scale += math.log(m)
    value = float(lam_vec @ v)
    if value <= 0.0:
        raise ArithmeticError(f"contraction is not positive: {value}")
    return (math.log(2.0) + log_scale + math.log(value)) / n


# -- quenched growth by Monte Carlo ------------------------------------------


def _ones_full_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    rep = census_rep()
    num = rep.specialize(1, 1, 1)
    mats = {}
    for colour in (BLUE, RED):
        m = np.zeros((rep.dim, rep.dim))
        for p, row in enumerate(num.rows[colour]):
            for q, val in row:
                m[p, q] = float(val)
        mats[colour] = m
    lam = np.array([float(x) for x in num.initial])
    gam = np.array([float(x) for x in num.final])
    return mats[BLUE], mats[RED], lam, gam


def log_count(letters: np.ndarray, mat_b: np.ndarray, mat_r: np.ndarray, lam: np.ndarray, gam: np.ndarray) -> float:
    """log of the configuration count of the word given as a 0/1 letter array.

    The chain runs right to left on the final vector, so every
    intermediate state is a nonnegative combination and max-norm
    renormalization is safe.
    """
    v = gam.copy()
    log_scale = 0.0
    for a in letters[::-1]:
        v = (mat_b if a == 0 else mat_r) @ v
        m = float(v.max())
        if m == 0.0:
            raise ArithmeticError("count chain vanished")
        v /= m
        log_scale += math.log(m)
    value = float(lam @ v)
    if value <= 0.0:
        raise ArithmeticError(f"count contraction is not positive: {value}")
    return log_scale + math.log(value)


@dataclass
class LyapunovEstimate:
    alpha_hat: float
    stderr: float
    n: int
    trials: int
    seed: int
    per_trial: list[float] = field(default_factory=list)


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    # Sub-seed derived from (seed, trial) so trials are independent of
    # execution order and safe to parallelize.
    return np.random.default_rng(np.random.SeedSequence(entropy=(seed, trial)))


def lyapunov_estimate(n: int, trials: int, seed: int = DEFAULT_SEED, *, batch_means: bool = False) -> LyapunovEstimate:
    """Monte Carlo estimate of the quenched growth exponent.

    Each trial draws n fair-coin letters from its own sub-seeded
    generator and measures (1/n) log D_n.  The estimate is the trial
    mean; the error bar is the plain standard error, or the batch-means
    standard error over ~sqrt(trials) batches when batch_means is set.
    """
    if n < 1 or trials < 1:
        raise ValueError("n and trials must be positive")
    mat_b, mat_r, lam, gam = _ones_full_matrices()
    values = []
    for t in range(trials):
        letters = _trial_rng(seed, t).integers(0, 2, size=n)
        values.append(log_count(letters, mat_b, mat_r, lam, gam) / n)
    arr = np.array(values)
    alpha = float(arr.mean())
    if trials == 1:
        err = math.inf
    elif batch_means:
        nb = max(2, int(math.isqrt(trials)))
        batches = [arr[i::nb].mean() for i in range(nb)]
        err = float(np.std(batches, ddof=1) / math.sqrt(nb))
    else:
        err = float(arr.std(ddof=1) / math.sqrt(trials))
    return LyapunovEstimate(alpha_hat=alpha, stderr=err, n=n, trials=trials, seed=seed, per_trial=values)


# -- subadditivity ------------------------------------------------------------


@dataclass
class SubadditivityReport:
    samples: int
    max_len: int
    seed: int
    violations: list[tuple[str, int, int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def subadditivity_check(samples: int = 1000, max_len: int = 16, seed: int = DEFAULT_SEED) -> SubadditivityReport:
    """count(xy) >= count(x) * count(y) on random words and random splits.

    Gluing a configuration of the prefix with one of the suffix always
    yields a valid configuration of the whole word, so violations would
    flag a counting bug; the report lists any found.
    """
    if max_len < 2:
        raise ValueError("max_len must be at least 2 to allow a split")
    rng = np.random.default_rng(np.random.SeedSequence(entropy=(seed, 0x5AB)))
    report = SubadditivityReport(samples=samples, max_len=max_len, seed=seed)
    letters = np.array([BLUE, RED])
    for _ in range(samples):
        length = int(rng.integers(2, max_len + 1))
        word = "".join(letters[rng.integers(0, 2, size=length)])
        cut = int(rng.integers(1, length))
        whole = count_chdc(word)
        left = count_chdc(word[:cut])
        right = count_chdc(word[cut:])
        if whole < left * right:
            report.violations.append((word, cut, whole, left, right))
    return report
