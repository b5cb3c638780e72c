//! Classified simple Lie types in Bourbaki order with their Cartan data,
//! positive roots, and the invariant bilinear form.
//!
//! Conventions, pinned by the golden restriction-matrix tests downstream:
//! row `i` of the Cartan matrix holds the fundamental-weight coordinates of
//! the simple root `psi_i`, i.e. `cartan[i][j] = <psi_i, psi_j^vee>`.  A root
//! written as a row vector `c` in the simple-root basis therefore has weight
//! coordinates `c * cartan`.  The symmetric form normalizes long roots to
//! squared length 2.

use num_rational::Ratio;

use crate::error::{LieError, Result};
use crate::types::{Family, LieType, Rational, RootVec, SimpleLieType, Weight};

/// Cartan data and roots of one canonical simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: SimpleLieType,
    cartan: Vec<Vec<i64>>,
    i_cartan_num: Vec<Vec<i64>>,
    det_cartan: i64,
    pos_roots: Vec<RootVec>,
    highest_root: RootVec,
    rho: Weight,
    sym_num: Vec<Vec<i64>>,
    sym_den: i64,
}

impl RootSystem {
    /// Builds the root system of a canonical simple type.  Positive roots are
    /// generated by the height-by-height closure from the Cartan matrix and
    /// stored by increasing height with a lexicographic tie-break.
    pub fn new(ty: SimpleLieType) -> RootSystem {
        let n = ty.rank();
        let cartan = cartan_matrix(ty);
        let (det_cartan, i_cartan_num) = invert_times_det(&cartan);
        debug_assert!(det_cartan > 0);

        // sym_num[i][j] = sym_den * (psi_i, psi_j), long roots of length^2 = 2.
        let len2 = root_lengths2(ty);
        let form: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Ratio::new(cartan[i][j], 1) * len2[j] / Ratio::new(2, 1))
                    .collect()
            })
            .collect();
        let sym_den = form
            .iter()
            .flatten()
            .map(|v| *v.denom())
            .fold(1i64, num_integer::lcm);
        let mut sym_num = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = form[i][j] * sym_den;
                debug_assert!(v.is_integer());
                sym_num[i][j] = v.to_integer();
            }
        }

        let pos_roots = positive_roots(&cartan);
        let highest_root = pos_roots.last().expect("nonempty root system").clone();
        debug_assert_eq!(
            pos_roots
                .iter()
                .filter(|r| r.height() == highest_root.height())
                .count(),
            1
        );
        let rho = Weight::new(vec![1; n]);

        RootSystem {
            ty,
            cartan,
            i_cartan_num,
            det_cartan,
            pos_roots,
            highest_root,
            rho,
            sym_num,
            sym_den,
        }
    }

    pub fn ty(&self) -> SimpleLieType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// Cartan matrix; row `i` = weight coordinates of `psi_{i+1}`.
    pub fn cartan(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    /// Integer matrix with `cartan * i_cartan_num = det_cartan * I`.
    /// Row `i` holds `det_cartan` times the fundamental weight `xi_{i+1}`
    /// in simple-root coordinates.
    pub fn i_cartan_num(&self) -> &Vec<Vec<i64>> {
        &self.i_cartan_num
    }

    pub fn det_cartan(&self) -> i64 {
        self.det_cartan
    }

    /// Positive roots by increasing height, lexicographic within a height.
    pub fn pos_roots(&self) -> &[RootVec] {
        &self.pos_roots
    }

    pub fn highest_root(&self) -> &RootVec {
        &self.highest_root
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// `sym_den * (psi_i, psi_j)` as an integer matrix.
    pub fn sym_form_num(&self) -> &Vec<Vec<i64>> {
        &self.sym_num
    }

    pub fn sym_den(&self) -> i64 {
        self.sym_den
    }

    /// Weight coordinates of a simple-root-basis vector: `c * cartan`.
    pub fn root_to_weight(&self, r: &RootVec) -> Result<Weight> {
        let n = self.rank();
        if r.len() != n {
            return Err(LieError::LengthMismatch {
                expected: n,
                got: r.len(),
            });
        }
        let mut w = vec![0i64; n];
        for (i, &c) in r.coords().iter().enumerate() {
            if c != 0 {
                for j in 0..n {
                    w[j] += c * self.cartan[i][j];
                }
            }
        }
        Ok(Weight::new(w))
    }

    /// Weyl-invariant symmetric form on root vectors, long roots of squared
    /// length 2.
    pub fn inner(&self, a: &RootVec, b: &RootVec) -> Result<Rational> {
        let n = self.rank();
        if a.len() != n || b.len() != n {
            return Err(LieError::LengthMismatch {
                expected: n,
                got: if a.len() != n { a.len() } else { b.len() },
            });
        }
        let mut acc = 0i64;
        for i in 0..n {
            if a.coords()[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += a.coords()[i] * b.coords()[j] * self.sym_num[i][j];
            }
        }
        Ok(Ratio::new(acc, self.sym_den))
    }

    /// `(xi_i, r)` for the 1-based fundamental weight `xi_i` and a root
    /// vector `r`; equals `r_i * (psi_i, psi_i) / 2`.
    pub fn inner_fundamental_root(&self, i: usize, r: &RootVec) -> Rational {
        let idx = i - 1;
        Ratio::new(r.coords()[idx] * self.sym_num[idx][idx], 2 * self.sym_den)
    }

    /// `<w, psi_i^vee>` for a weight: just the i-th coordinate (1-based).
    pub fn pairing_simple(&self, w: &Weight, i: usize) -> i64 {
        w.coords[i - 1]
    }

    /// `<v, r^vee> = 2 (v, r) / (r, r)` for root vectors; integer for roots.
    pub fn pairing_coroot(&self, v: &RootVec, r: &RootVec) -> Result<Rational> {
        let num = self.inner(v, r)?;
        let den = self.inner(r, r)?;
        Ok(num * Ratio::new(2, 1) / den)
    }

    /// Whether `r` appears in `pos_roots` up to global sign.
    pub fn is_root(&self, r: &RootVec) -> bool {
        let neg = RootVec(r.coords().iter().map(|c| -c).collect());
        self.pos_roots.iter().any(|p| p == r || *p == neg)
    }
}

/// Cartan matrix of a canonical simple type, row `i` = weight coordinates of
/// `psi_{i+1}`.
fn cartan_matrix(ty: SimpleLieType) -> Vec<Vec<i64>> {
    let n = ty.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match ty.family() {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
            a[n - 2][n - 1] = -2;
        }
        Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
            a[n - 1][n - 2] = -2;
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            // Chain 1-3-4-5-...-n with node 2 attached to node 4.
            link(0, 2);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
            link(1, 3);
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[1][2] = -2;
        }
        Family::G => {
            link(0, 1);
            a[1][0] = -3;
        }
    }
    a
}

/// Squared lengths of the simple roots, long roots normalized to 2.
fn root_lengths2(ty: SimpleLieType) -> Vec<Rational> {
    let n = ty.rank();
    let long = Ratio::new(2, 1);
    match ty.family() {
        Family::A | Family::D | Family::E => vec![long; n],
        Family::B => {
            let mut v = vec![long; n];
            v[n - 1] = Ratio::new(1, 1);
            v
        }
        Family::C => {
            let mut v = vec![Ratio::new(1, 1); n];
            v[n - 1] = long;
            v
        }
        Family::F => vec![long, long, Ratio::new(1, 1), Ratio::new(1, 1)],
        Family::G => vec![Ratio::new(2, 3), long],
    }
}

/// Exact inverse times determinant via rational Gaussian elimination.
/// Returns `(det, det * m^{-1})`, both integral for Cartan matrices.
fn invert_times_det(m: &[Vec<i64>]) -> (i64, Vec<Vec<i64>>) {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Ratio::new(x, 1)).collect())
        .collect();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ratio::new(if i == j { 1 } else { 0 }, 1))
                .collect()
        })
        .collect();
    let mut det = Ratio::new(1i64, 1);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col] != Ratio::new(0, 1))
            .expect("Cartan matrix is invertible");
        if pivot != col {
            a.swap(pivot, col);
            inv.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && a[r][col] != Ratio::new(0, 1) {
                let f = a[r][col];
                for j in 0..n {
                    let av = a[col][j];
                    let iv = inv[col][j];
                    a[r][j] -= f * av;
                    inv[r][j] -= f * iv;
                }
            }
        }
    }
    assert!(det.is_integer() && det > Ratio::new(0, 1));
    let d = det.to_integer();
    let out = inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let v = *x * d;
                    assert!(v.is_integer());
                    v.to_integer()
                })
                .collect()
        })
        .collect();
    (d, out)
}

/// Positive roots by the height-by-height string closure.  `alpha + psi_i`
/// is a root iff `p - <alpha, psi_i^vee> > 0` where `p` is the number of
/// steps the string continues below `alpha`.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<RootVec> {
    use std::collections::HashSet;
    let n = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut levels: Vec<Vec<Vec<i64>>> = Vec::new();

    let mut level1: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        })
        .collect();
    level1.sort();
    for r in &level1 {
        known.insert(r.clone());
    }
    levels.push(level1);

    loop {
        let last = levels.last().unwrap().clone();
        let mut next: Vec<Vec<i64>> = Vec::new();
        for r in &last {
            for i in 0..n {
                // p = length of the descending psi_i-string from r.
                let mut p = 0i64;
                let mut probe = r.clone();
                loop {
                    probe[i] -= 1;
                    if probe.iter().all(|&c| c == 0) || known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| r[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = r.clone();
                    up[i] += 1;
                    if !known.contains(&up) && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort();
        for r in &next {
            known.insert(r.clone());
        }
        levels.push(next);
    }

    levels.into_iter().flatten().map(RootVec).collect()
}

/// Number of positive roots of a canonical simple type (classical counts).
pub fn positive_root_count(ty: SimpleLieType) -> usize {
    let n = ty.rank();
    match ty.family() {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

/// Root systems of all simple factors of a type, in order.
pub fn factor_systems(t: &LieType) -> Vec<RootSystem> {
    t.factors().iter().map(|&f| RootSystem::new(f)).collect()
}
