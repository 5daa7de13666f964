#![allow(dead_code)]

use gtt::{BaseMatrix, Complex, ComplexVector};
use rand::Rng;

pub fn gaussian(rng: &mut impl Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

pub fn random_unit_vector(len: usize, rng: &mut impl Rng) -> ComplexVector {
    let v: Vec<Complex> = (0..len).map(|_| Complex::new(gaussian(rng), gaussian(rng))).collect();
    ComplexVector::new(v).unwrap().normalized().unwrap()
}

/// Haar-ish random unitary by Gram-Schmidt on Gaussian columns.
pub fn random_unitary(b: usize, rng: &mut impl Rng) -> BaseMatrix {
    let mut cols: Vec<Vec<Complex>> = Vec::with_capacity(b);
    while cols.len() < b {
        let mut v: Vec<Complex> = (0..b).map(|_| Complex::new(gaussian(rng), gaussian(rng))).collect();
        for u in &cols {
            let proj: Complex = u.iter().zip(&v).map(|(a, x)| a.conj() * x).sum();
            for (x, a) in v.iter_mut().zip(u) {
                *x -= proj * a;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    let entries = (0..b * b).map(|idx| cols[idx % b][idx / b]).collect();
    BaseMatrix::new(b, entries).unwrap()
}

/// Textbook Kronecker power as nested rows, independent of the library's dense type.
pub fn kron_power(w: &BaseMatrix, n: usize) -> Vec<Vec<Complex>> {
    let base = w.rows();
    let mut acc = vec![vec![Complex::new(1.0, 0.0)]];
    for _ in 0..n {
        let (ra, rb) = (acc.len(), base.len());
        let mut next = vec![vec![Complex::new(0.0, 0.0); ra * rb]; ra * rb];
        for i in 0..ra {
            for j in 0..ra {
                for k in 0..rb {
                    for l in 0..rb {
                        next[i * rb + k][j * rb + l] = acc[i][j] * base[k][l];
                    }
                }
            }
        }
        acc = next;
    }
    acc
}

pub fn matvec(m: &[Vec<Complex>], x: &[Complex]) -> Vec<Complex> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn max_diff(a: &[Complex], b: &[Complex]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}
