//! Real-coefficient polynomial utilities.
//!
//! Provides evaluation, multiplication, Euclidean division, and complex root
//! extraction with clustering of numerically coincident roots into
//! multiplicities. Roots come from the eigenvalues of the balanced Frobenius
//! companion matrix; clusters of a multiple root are detected with a radius
//! driven by the local Newton correction `|p/p'|`, which scales like
//! `spread/m` inside a multiplicity-`m` cluster and like the rounding error
//! at a simple root.

use crate::config::Tolerances;
use crate::{Error, Result};
use nalgebra::{Complex, DMatrix};

type C64 = Complex<f64>;

/// Real polynomial, coefficients in ascending degree order.
///
/// The coefficient vector is trimmed so the leading coefficient is nonzero
/// (the zero polynomial is stored as a single zero coefficient).
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        RealPolynomial { coeffs }
    }

    /// `(x - r)`.
    pub fn linear_factor(r: f64) -> Self {
        RealPolynomial::new(vec![-r, 1.0])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, z: C64) -> C64 {
        self.coeffs
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> RealPolynomial {
        if self.degree() == 0 {
            return RealPolynomial::new(vec![0.0]);
        }
        let d: Vec<f64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as f64)
            .collect();
        RealPolynomial::new(d)
    }

    pub fn one_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &RealPolynomial) -> (RealPolynomial, RealPolynomial) {
        let dd = divisor.degree();
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.degree() < dd {
            return (RealPolynomial::new(vec![0.0]), self.clone());
        }
        let lead = *divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0.0; self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dd] / lead;
            quot[k] = q;
            for (off, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + off] -= q * dc;
            }
        }
        rem.truncate(dd);
        (RealPolynomial::new(quot), RealPolynomial::new(rem))
    }
}

impl std::ops::Mul for &RealPolynomial {
    type Output = RealPolynomial;
    fn mul(self, rhs: &RealPolynomial) -> RealPolynomial {
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPolynomial::new(out)
    }
}

/// A root of a real polynomial with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootCluster {
    pub value: C64,
    pub multiplicity: usize,
    pub is_real: bool,
}

/// All complex roots of `p` with multiplicities.
///
/// Non-real roots come in conjugate pairs with equal multiplicity and the
/// result is sorted by `(re, im)`. Roots whose imaginary part falls below the
/// clustering tolerance are snapped onto the real axis.
pub fn real_roots(p: &RealPolynomial, tol: &Tolerances) -> Result<Vec<RootCluster>> {
    if p.degree() == 0 {
        return Err(Error::DegenerateInput);
    }
    let n = p.degree();
    let lead = *p.coeffs.last().unwrap();
    let monic: Vec<f64> = p.coeffs.iter().map(|&c| c / lead).collect();

    let raw = companion_eigenvalues(&monic);
    debug_assert_eq!(raw.len(), n);

    let deriv = p.derivative();
    let correction = |z: C64| -> f64 {
        let pv = p.eval_complex(z);
        let dv = deriv.eval_complex(z);
        let cap = 0.05 * (1.0 + z.norm());
        if dv.norm() == 0.0 {
            cap
        } else {
            (pv.norm() / dv.norm()).min(cap)
        }
    };
    let corr: Vec<f64> = raw.iter().map(|&z| correction(z)).collect();

    // Single-linkage agglomeration. The base radius is the configured
    // clustering tolerance; the Newton-correction term widens it near
    // multiple roots, where eigenvalues scatter like spread/m around the
    // true value.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for a in 0..n {
        for b in (a + 1)..n {
            let scale = 1.0 + raw[a].norm().min(raw[b].norm());
            let radius = tol.cluster * scale + 8.0 * (corr[a] + corr[b]);
            if (raw[a] - raw[b]).norm() <= radius {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for idx in 0..n {
        let root = find(&mut parent, idx);
        groups.entry(root).or_default().push(idx);
    }

    let mut clusters: Vec<RootCluster> = groups
        .values()
        .map(|members| {
            let sum: C64 = members.iter().map(|&i| raw[i]).sum();
            let mean = sum / members.len() as f64;
            RootCluster {
                value: mean,
                multiplicity: members.len(),
                is_real: false,
            }
        })
        .collect();

    // Snap numerically real cluster means onto the axis.
    for c in clusters.iter_mut() {
        if c.value.im.abs() <= tol.cluster * (1.0 + c.value.norm()) {
            c.value.im = 0.0;
            c.is_real = true;
        }
    }

    // Enforce conjugate closure: pair every cluster above the axis with its
    // mirror below and average the two estimates. Unmatched leftovers (the
    // conjugate-symmetric spectrum of a real matrix should preclude them)
    // are forced onto the axis.
    let mut upper: Vec<usize> = Vec::new();
    let mut lower: Vec<usize> = Vec::new();
    for (idx, c) in clusters.iter().enumerate() {
        if !c.is_real {
            if c.value.im > 0.0 {
                upper.push(idx)
            } else {
                lower.push(idx)
            }
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![false; clusters.len()];
    for &u in &upper {
        let target = clusters[u].value.conj();
        let best = lower
            .iter()
            .filter(|&&l| !used[l])
            .min_by(|&&a, &&b| {
                let da = (clusters[a].value - target).norm();
                let db = (clusters[b].value - target).norm();
                da.total_cmp(&db)
            })
            .copied();
        match best {
            Some(l) => {
                used[l] = true;
                let avg = (clusters[u].value + clusters[l].value.conj()) * 0.5;
                clusters[u].value = avg;
                clusters[l].value = avg.conj();
                pairs.push((u, l));
            }
            None => {
                clusters[u].value.im = 0.0;
                clusters[u].is_real = true;
            }
        }
    }
    for &l in &lower {
        if !used[l] && !clusters[l].is_real {
            clusters[l].value.im = 0.0;
            clusters[l].is_real = true;
        }
    }

    // Polish simple roots by guarded Newton iteration: real clusters and
    // upper pair representatives only, mirroring afterwards. Means of
    // multiple clusters are left alone: they are already first-order
    // accurate, while Newton steps there would chase evaluation noise.
    for idx in 0..clusters.len() {
        let c = clusters[idx];
        if c.multiplicity != 1 || (!c.is_real && c.value.im < 0.0) {
            continue;
        }
        let mut best = c.value;
        let mut best_res = p.eval_complex(best).norm();
        let mut z = best;
        for _ in 0..6 {
            let dv = deriv.eval_complex(z);
            if dv.norm() == 0.0 {
                break;
            }
            let step = p.eval_complex(z) / dv;
            if !step.re.is_finite() || !step.im.is_finite() {
                break;
            }
            z -= step;
            if c.is_real {
                z.im = 0.0;
            }
            let res = p.eval_complex(z).norm();
            if res < best_res {
                best_res = res;
                best = z;
            } else {
                break;
            }
        }
        clusters[idx].value = best;
    }
    for &(u, l) in &pairs {
        clusters[l].value = clusters[u].value.conj();
    }

    clusters.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    debug_assert_eq!(clusters.iter().map(|c| c.multiplicity).sum::<usize>(), n);
    Ok(clusters)
}

/// Eigenvalues of the balanced Frobenius companion matrix of a monic
/// polynomial given by its full ascending coefficient vector.
fn companion_eigenvalues(monic: &[f64]) -> Vec<C64> {
    let n = monic.len() - 1;
    if n == 1 {
        return vec![C64::new(-monic[0], 0.0)];
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    for r in 1..n {
        m[(r, r - 1)] = 1.0;
    }
    for r in 0..n {
        m[(r, n - 1)] = -monic[r];
    }
    balance_in_place(&mut m);
    m.complex_eigenvalues().iter().copied().collect()
}

/// Parlett–Reinsch balancing: diagonal similarity scaling by powers of two
/// until row and column norms are of comparable size.
fn balance_in_place(m: &mut DMatrix<f64>) {
    let n = m.nrows();
    let radix: f64 = 2.0;
    loop {
        let mut done = true;
        for i in 0..n {
            let mut c: f64 = (0..n).filter(|&j| j != i).map(|j| m[(j, i)].abs()).sum();
            let r: f64 = (0..n).filter(|&j| j != i).map(|j| m[(i, j)].abs()).sum();
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            while c < r / radix {
                c *= radix * radix;
                f *= radix;
            }
            while c > r * radix {
                c /= radix * radix;
                f /= radix;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                let g = 1.0 / f;
                for j in 0..n {
                    m[(i, j)] *= g;
                }
                for j in 0..n {
                    m[(j, i)] *= f;
                }
            }
        }
        if done {
            break;
        }
    }
}
