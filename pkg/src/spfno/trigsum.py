"""Fast evaluation of trigonometric sums h_k = sum_j g_j exp(-i*pi*j*k/den).

Every semi-periodic transform in this package (cosine, sine, half-integer
sine and their inverses/adjoints, at arbitrary input and output lengths)
reduces to this one quadratic-phase sum.  It is evaluated as a chirp
convolution: j*k = (j^2 + k^2 - (k-j)^2)/2 turns the sum into a linear
convolution against a fixed chirp kernel, which is carried out by FFTs
zero-padded to a 5-smooth length.  Cost is O((n_in+n_out) log(n_in+n_out))
for *every* size, so doubling the problem never costs more than a constant
factor -- there are no slow sizes, unlike FFT libraries that fall back to
quadratic or high-constant algorithms when n has a large prime factor.

Chirp phases are reduced modulo the exact integer period before calling
sin/cos, so phase accuracy does not degrade with size.

Plans are cached; a plan is read-only after construction and safe to share
between threads.
"""

import threading

import numpy as np

_PLANS: dict[tuple[int, int, int], "ChirpPlan"] = {}
_PLANS_LOCK = threading.Lock()


def next_fast_len(n: int) -> int:
    """Smallest 5-smooth integer >= n."""
    if n <= 2:
        return max(n, 1)
    best = None
    p5 = 1
    while p5 < 2 * n:
        p35 = p5
        while p35 < 2 * n:
            m = p35
            while m < n:
                m *= 2
            if best is None or m < best:
                best = m
            p35 *= 3
        p5 *= 5
    return best


def _chirp_phase(idx: np.ndarray, den: int) -> np.ndarray:
    """exp(-i*pi*idx^2/(2*den)) with the exponent reduced mod its period."""
    q = (idx * idx) % (4 * den)
    return np.exp((-1j * np.pi / (2 * den)) * q.astype(np.float64))


class ChirpPlan:
    """Precomputed chirp vectors for one (n_in, n_out, den) combination."""

    def __init__(self, n_in: int, n_out: int, den: int):
        self.n_in = n_in
        self.n_out = n_out
        self.den = den
        self.p = next_fast_len(n_in + n_out - 1)
        self.w_in = _chirp_phase(np.arange(n_in, dtype=np.int64), den)
        self.w_out = _chirp_phase(np.arange(n_out, dtype=np.int64), den)
        m = np.arange(-(n_in - 1), n_out, dtype=np.int64)
        kernel = np.zeros(self.p, dtype=np.complex128)
        kernel[m % self.p] = np.conj(_chirp_phase(m, den))
        self.kernel_hat = np.fft.fft(kernel)

    def apply(self, g: np.ndarray) -> np.ndarray:
        """Evaluate the sum along the last axis of `g` (shape (..., n_in))."""
        a = g * self.w_in
        a_hat = np.fft.fft(a, n=self.p, axis=-1)
        a_hat *= self.kernel_hat
        conv = np.fft.ifft(a_hat, axis=-1)
        return conv[..., : self.n_out] * self.w_out


def get_plan(n_in: int, n_out: int, den: int) -> ChirpPlan:
    key = (n_in, n_out, den)
    plan = _PLANS.get(key)
    if plan is None:
        with _PLANS_LOCK:
            plan = _PLANS.get(key)
            if plan is None:
                plan = ChirpPlan(n_in, n_out, den)
                _PLANS[key] = plan
    return plan


def trig_sum(g: np.ndarray, n_out: int, den: int) -> np.ndarray:
    """h_k = sum_j g[..., j] * exp(-i*pi*j*k/den) for k = 0..n_out-1."""
    return get_plan(g.shape[-1], n_out, den).apply(g)
