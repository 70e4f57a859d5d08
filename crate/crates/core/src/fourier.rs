use num_complex::Complex64;
use rustfft::FftPlanner;

/// Fourier coefficients `c_n = (1/N) Σ_j v_j e^{-2πi n j/N}` of samples taken
/// at `θ_j = 2πj/N`, returned as `(n, c_n)` with `n` in `[-N/2, N/2)`.
pub(crate) fn circle_coefficients(samples: &[Complex64]) -> Vec<(i64, Complex64)> {
    let n = samples.len();
    let mut buf = samples.to_vec();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    let half = (n / 2) as i64;
    buf.into_iter()
        .enumerate()
        .map(|(j, c)| {
            let j = j as i64;
            let mode = if j >= half { j - n as i64 } else { j };
            (mode, c * scale)
        })
        .collect()
}
