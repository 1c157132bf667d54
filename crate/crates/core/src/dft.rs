//! Discrete Fourier transforms.
//!
//! `X(k) = sum_j x(j) exp(-i 2 pi k j / m)`, unnormalised, for `k = 0..m`.
//! [`dft_naive`] evaluates the sum directly and is the reference for
//! [`dft_fast`], which accepts any length.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rustfft::FftPlanner;

/// Complex spectrum of one channel.
#[derive(Clone, Debug, PartialEq)]
pub struct ChannelSpectrum {
    values: Vec<Complex64>,
}

impl ChannelSpectrum {
    pub fn new(values: Vec<Complex64>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `|X(k)|^2` per bin.
    pub fn power(&self) -> Vec<f64> {
        self.values.iter().map(Complex64::norm_sqr).collect()
    }

    /// Largest `|X(m - k) - conj(X(k))|` over `k = 1..m`; zero for real input.
    pub fn conjugate_symmetry_error(&self) -> f64 {
        let m = self.values.len();
        (1..m)
            .map(|k| (self.values[m - k] - self.values[k].conj()).norm())
            .fold(0.0, f64::max)
    }
}

/// O(m^2) direct evaluation. Exponents are reduced modulo `m` before the
/// angle is formed, so every twiddle factor is taken from one exact table.
pub fn dft_naive(x: &[Complex64]) -> ChannelSpectrum {
    let m = x.len();
    if m == 0 {
        return ChannelSpectrum::new(Vec::new());
    }
    let twiddles: Vec<Complex64> = (0..m)
        .map(|r| Complex64::from_polar(1.0, -TAU * r as f64 / m as f64))
        .collect();
    let values = (0..m)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            let mut r = 0usize; // (k * j) mod m
            for &xj in x {
                acc += xj * twiddles[r];
                r += k;
                if r >= m {
                    r -= m;
                }
            }
            acc
        })
        .collect();
    ChannelSpectrum::new(values)
}

pub fn dft_naive_real(x: &[f64]) -> ChannelSpectrum {
    dft_naive(&to_complex(x))
}

/// Fast transform for arbitrary `m` (mixed radix, Rader or Bluestein as the
/// planner sees fit).
pub fn dft_fast(x: &[Complex64]) -> ChannelSpectrum {
    let mut buf = x.to_vec();
    if !buf.is_empty() {
        FftPlanner::<f64>::new()
            .plan_fft_forward(buf.len())
            .process(&mut buf);
    }
    ChannelSpectrum::new(buf)
}

pub fn dft_fast_real(x: &[f64]) -> ChannelSpectrum {
    dft_fast(&to_complex(x))
}

fn to_complex(x: &[f64]) -> Vec<Complex64> {
    x.iter().map(|&v| Complex64::new(v, 0.0)).collect()
}

/// Per-bin agreement test: `|a - b| <= tol * max(|a|, |b|, 1)`.
pub fn bins_agree(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}

/// Largest per-bin deviation between two spectra, relative to the larger
/// magnitude with an absolute floor of 1.
pub fn max_relative_deviation(a: &ChannelSpectrum, b: &ChannelSpectrum) -> f64 {
    assert_eq!(a.len(), b.len(), "spectra differ in length");
    a.values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| (x - y).norm() / x.norm().max(y.norm()).max(1.0))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn delta_input() {
        for dft in [dft_naive_real, dft_fast_real] {
            let x = dft(&[1.0, 0.0, 0.0, 0.0]);
            assert!(x.values().iter().all(|&v| close(v, c(1.0, 0.0))));
        }
    }

    #[test]
    fn constant_input() {
        for dft in [dft_naive_real, dft_fast_real] {
            let x = dft(&[1.0; 4]);
            let expected = [c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
            assert!(x.values().iter().zip(expected).all(|(&a, b)| close(a, b)));
        }
    }

    #[test]
    fn square_wave_length_four() {
        for dft in [dft_naive_real, dft_fast_real] {
            let x = dft(&[1.0, 1.0, -1.0, -1.0]);
            assert!(close(x.values()[0], c(0.0, 0.0)));
            assert!(close(x.values()[1], c(2.0, -2.0)));
            assert!(close(x.values()[2], c(0.0, 0.0)));
            assert!(close(x.values()[3], c(2.0, 2.0)));
        }
    }

    #[test]
    fn length_one_is_identity() {
        let x = [c(3.5, -1.25)];
        assert_eq!(dft_naive(&x).values(), &x);
        assert_eq!(dft_fast(&x).values(), &x);
    }

    #[test]
    fn empty_input() {
        assert!(dft_naive(&[]).is_empty());
        assert!(dft_fast(&[]).is_empty());
    }

    #[test]
    fn complex_input_matches() {
        let x: Vec<Complex64> = (0..37).map(|j| c((j as f64).sin(), (j as f64 * 0.3).cos())).collect();
        assert!(max_relative_deviation(&dft_naive(&x), &dft_fast(&x)) < 1e-12);
    }

    #[test]
    fn real_input_is_conjugate_symmetric() {
        let x: Vec<f64> = (0..103).map(|j| ((j * j) % 7) as f64 - 3.0).collect();
        assert!(dft_fast_real(&x).conjugate_symmetry_error() < 1e-10);
        assert!(dft_naive_real(&x).conjugate_symmetry_error() < 1e-10);
    }

    #[test]
    fn agreement_floor() {
        assert!(bins_agree(c(0.0, 0.0), c(5e-10, 0.0), 1e-9));
        assert!(!bins_agree(c(0.0, 0.0), c(2e-9, 0.0), 1e-9));
        assert!(bins_agree(c(1e6, 0.0), c(1e6 + 1e-4, 0.0), 1e-9));
    }
}
