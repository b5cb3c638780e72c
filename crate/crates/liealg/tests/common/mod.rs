//! Shared test support: an independent weight-multiplicity oracle by the
//! Kostant partition function and the full Weyl alternating sum.  Only
//! practical at small rank, which is exactly where it serves as a check on
//! the Freudenthal recursion.

use std::collections::HashMap;
use std::sync::Mutex;

use liealg::rootsys::RootSystem;
use liealg::{SimpleLieType, Weight};

pub struct KostantOracle {
    rs: RootSystem,
    /// Weyl elements as matrices acting on row weight vectors, with signs.
    weyl: Vec<(Vec<Vec<i64>>, i64)>,
    /// Partition-function memo shared across calls.
    memo: Mutex<HashMap<(usize, Vec<i64>), i64>>,
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

impl KostantOracle {
    pub fn new(ty: SimpleLieType) -> Self {
        let rs = RootSystem::new(ty);
        let n = rs.rank();
        let identity: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        // Simple reflection on row vectors: w_j' = w_j - w_i * cartan[i][j].
        let gens: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|i| {
                let mut m = identity.clone();
                for j in 0..n {
                    m[i][j] -= rs.cartan()[i][j];
                }
                m
            })
            .collect();
        let mut weyl: HashMap<Vec<Vec<i64>>, i64> = HashMap::new();
        weyl.insert(identity.clone(), 1);
        let mut queue = vec![identity];
        while let Some(w) = queue.pop() {
            let sign = weyl[&w];
            for g in &gens {
                let next = mat_mul(&w, g);
                if !weyl.contains_key(&next) {
                    weyl.insert(next.clone(), -sign);
                    queue.push(next);
                }
            }
        }
        KostantOracle {
            rs,
            weyl: weyl.into_iter().collect(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// Root coordinates of a weight vector, or None when it is not in the
    /// root lattice.
    fn root_coords(&self, w: &[i64]) -> Option<Vec<i64>> {
        let n = self.rs.rank();
        let det = self.rs.det_cartan();
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let num: i64 = (0..n).map(|i| w[i] * self.rs.i_cartan_num()[i][j]).sum();
            if num % det != 0 {
                return None;
            }
            out.push(num / det);
        }
        Some(out)
    }

    /// Number of ways to write `v` (root coordinates) as a nonnegative
    /// integer combination of positive roots.
    fn partition(&self, v: &[i64], idx: usize, memo: &mut HashMap<(usize, Vec<i64>), i64>) -> i64 {
        if v.iter().all(|&x| x == 0) {
            return 1;
        }
        if v.iter().any(|&x| x < 0) || idx == self.rs.pos_roots().len() {
            return 0;
        }
        let key = (idx, v.to_vec());
        if let Some(&c) = memo.get(&key) {
            return c;
        }
        let alpha = self.rs.pos_roots()[idx].coords().to_vec();
        let mut total = 0i64;
        let mut rest = v.to_vec();
        loop {
            total += self.partition(&rest, idx + 1, memo);
            for j in 0..rest.len() {
                rest[j] -= alpha[j];
            }
            if rest.iter().any(|&x| x < 0) {
                break;
            }
        }
        memo.insert(key, total);
        total
    }

    /// Multiplicity of the weight `mu` in the irreducible with highest
    /// weight `lam`, by the alternating Kostant sum over the Weyl group.
    pub fn mult(&self, lam: &Weight, mu: &Weight) -> i64 {
        let n = self.rs.rank();
        let lam_rho: Vec<i64> = lam.coords.iter().map(|x| x + 1).collect();
        let mu_rho: Vec<i64> = mu.coords.iter().map(|x| x + 1).collect();
        let mut memo = self.memo.lock().unwrap();
        let mut total = 0i64;
        for (w, sign) in &self.weyl {
            let moved: Vec<i64> = (0..n)
                .map(|j| (0..n).map(|i| lam_rho[i] * w[i][j]).sum())
                .collect();
            let diff: Vec<i64> = (0..n).map(|j| moved[j] - mu_rho[j]).collect();
            if let Some(c) = self.root_coords(&diff) {
                if c.iter().all(|&x| x >= 0) {
                    total += sign * self.partition(&c, 0, &mut memo);
                }
            }
        }
        total
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }
}
