//! Characters of irreducible representations: exact dimensions, weight
//! multiplicities by the Freudenthal recursion, full weight multisets,
//! character decomposition by greedy highest-term stripping, tensor products
//! by the Klimyk alternation, and branching of a representation through a
//! restriction matrix.
//!
//! Weights over product types are concatenations of the factor coordinates;
//! characters and dimensions factor accordingly.  Central (torus) coordinates
//! ride along as exact rationals and never participate in dominance or
//! stripping.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{LieError, Result};
use crate::rootsys::RootSystem;
use crate::types::{LieType, Rational, SimpleLieType, Weight};
use crate::weyl;

/// A finite multiset of dominant weights with positive multiplicities over a
/// fixed Lie type.  Iteration order is lexicographic ascending on
/// (coordinates, central values).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    ty: LieType,
    terms: BTreeMap<Weight, i64>,
}

impl Decomposition {
    pub fn new(ty: LieType) -> Decomposition {
        Decomposition {
            ty,
            terms: BTreeMap::new(),
        }
    }

    pub fn ty(&self) -> &LieType {
        &self.ty
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn insert_add(&mut self, w: Weight, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.terms.entry(w).or_insert(0);
        *e += mult;
        if *e == 0 {
            // retain only nonzero terms
            let key: Vec<_> = self
                .terms
                .iter()
                .filter(|(_, &m)| m == 0)
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of `mult * dim` over all components.
    pub fn total_dim(&self) -> Result<BigUint> {
        let mut acc = BigUint::zero();
        for (w, &m) in &self.terms {
            acc += dim(&self.ty, w)? * BigUint::from(m as u64);
        }
        Ok(acc)
    }

    /// Renders in the LiE text shape: `1X[0,1,0] +1X[2,0,0]`, terms in
    /// lexicographic ascending order, central values appended inside the
    /// bracket.
    pub fn lie_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, m)| format!("{m}X{w}"))
            .collect::<Vec<_>>()
            .join(" +")
    }
}

/// Integer restriction matrix in weight bases: `rank(g)` rows; semisimple
/// columns give the target weight coordinates, columns listed in
/// `central_cols` produce torus coordinates divided by `central_den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionMatrix {
    rows: Vec<Vec<i64>>,
    central_cols: Vec<usize>,
    central_den: i64,
}

impl RestrictionMatrix {
    pub fn new(rows: Vec<Vec<i64>>, central_cols: Vec<usize>, central_den: i64) -> Result<Self> {
        if rows.is_empty() {
            return Err(LieError::Internal("empty restriction matrix".into()));
        }
        let w = rows[0].len();
        if rows.iter().any(|r| r.len() != w) {
            return Err(LieError::Internal("ragged restriction matrix".into()));
        }
        if central_den <= 0 {
            return Err(LieError::Internal("nonpositive denominator".into()));
        }
        let mut cc = central_cols;
        cc.sort_unstable();
        cc.dedup();
        if cc.iter().any(|&c| c >= w) {
            return Err(LieError::Internal("central column out of range".into()));
        }
        Ok(RestrictionMatrix {
            rows,
            central_cols: cc,
            central_den,
        })
    }

    pub fn rows(&self) -> &Vec<Vec<i64>> {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn central_cols(&self) -> &[usize] {
        &self.central_cols
    }

    pub fn central_den(&self) -> i64 {
        self.central_den
    }

    pub fn semisimple_cols(&self) -> usize {
        self.n_cols() - self.central_cols.len()
    }

    /// Right multiplication of a weight row vector; central columns become
    /// exact rationals over `central_den`.
    pub fn apply(&self, coords: &[i64]) -> Result<Weight> {
        if coords.len() != self.n_rows() {
            return Err(LieError::LengthMismatch {
                expected: self.n_rows(),
                got: coords.len(),
            });
        }
        let w = self.n_cols();
        let mut full = vec![0i64; w];
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                for j in 0..w {
                    full[j] += c * self.rows[i][j];
                }
            }
        }
        let mut ss = Vec::with_capacity(self.semisimple_cols());
        let mut central = Vec::with_capacity(self.central_cols.len());
        for (j, v) in full.into_iter().enumerate() {
            if self.central_cols.binary_search(&j).is_ok() {
                central.push(Ratio::new(v, self.central_den));
            } else {
                ss.push(v);
            }
        }
        Ok(Weight {
            coords: ss,
            central,
        })
    }
}

/// Product-type machinery: the root systems of the simple factors, their
/// coordinate offsets, and the torus rank.
pub(crate) struct Algebra {
    pub factors: Vec<RootSystem>,
    pub offsets: Vec<usize>,
    pub ss_rank: usize,
    pub torus: usize,
    /// Integer key proportional to the pairing with the coroot sum: the
    /// stripping order of `decompose_character`.
    ht_coeffs: Vec<i64>,
}

impl Algebra {
    pub fn new(t: &LieType) -> Algebra {
        let factors: Vec<RootSystem> = t.factors().iter().map(|&f| RootSystem::new(f)).collect();
        let mut offsets = Vec::with_capacity(factors.len());
        let mut off = 0usize;
        for f in &factors {
            offsets.push(off);
            off += f.rank();
        }
        let det_lcm = factors
            .iter()
            .map(|f| f.det_cartan())
            .fold(1i64, num_integer::lcm);
        let mut ht_coeffs = Vec::with_capacity(off);
        for f in &factors {
            let scale = det_lcm / f.det_cartan();
            for i in 0..f.rank() {
                let row_sum: i64 = f.i_cartan_num()[i].iter().sum();
                ht_coeffs.push(row_sum * scale);
            }
        }
        Algebra {
            factors,
            offsets,
            ss_rank: off,
            torus: t.torus_rank(),
            ht_coeffs,
        }
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.coords.len() != self.ss_rank {
            return Err(LieError::LengthMismatch {
                expected: self.ss_rank,
                got: w.coords.len(),
            });
        }
        if !w.central.is_empty() && w.central.len() != self.torus {
            return Err(LieError::LengthMismatch {
                expected: self.torus,
                got: w.central.len(),
            });
        }
        Ok(())
    }

    fn slice<'a>(&self, w: &'a [i64], fi: usize) -> &'a [i64] {
        let off = self.offsets[fi];
        &w[off..off + self.factors[fi].rank()]
    }

    /// Straightens the semisimple coordinates factor by factor, multiplying
    /// the determinant signs.
    pub fn straighten(&self, coords: &[i64]) -> (Vec<i64>, i8) {
        let mut out = Vec::with_capacity(self.ss_rank);
        let mut sign = 1i8;
        for (fi, f) in self.factors.iter().enumerate() {
            let part = weyl::straighten(f, &Weight::new(self.slice(coords, fi).to_vec()));
            sign *= part.sign;
            out.extend(part.weight.coords);
        }
        (out, sign)
    }

    /// Stripping key: height against the coroot sum (scaled integer).
    pub fn height_key(&self, coords: &[i64]) -> i64 {
        coords
            .iter()
            .zip(&self.ht_coeffs)
            .map(|(&c, &h)| c * h)
            .sum()
    }
}

/// Exact dimension by the Weyl product formula, multiplicative over factors;
/// central coordinates are ignored.
pub fn dim(t: &LieType, w: &Weight) -> Result<BigUint> {
    let alg = Algebra::new(t);
    alg.check_weight(w)?;
    if !w.is_dominant() {
        return Err(LieError::NonDominant(w.to_string()));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (fi, f) in alg.factors.iter().enumerate() {
        let lam = alg.slice(&w.coords, fi);
        let n = f.rank();
        let sym = f.sym_form_num();
        for alpha in f.pos_roots() {
            // scaled <x, alpha-coroot> numerators; the scale cancels in the ratio
            let mut top = 0i64;
            let mut bot = 0i64;
            for j in 0..n {
                let aj = alpha.coords()[j];
                if aj != 0 {
                    top += (lam[j] + 1) * aj * sym[j][j];
                    bot += aj * sym[j][j];
                }
            }
            debug_assert!(top > 0 && bot > 0);
            num *= BigUint::from(top as u64);
            den *= BigUint::from(bot as u64);
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Freudenthal multiplicities of one simple factor: every dominant `mu <=
/// lambda` mapped to its multiplicity in the irreducible of highest weight
/// `lambda`.
fn dominant_mults_simple(rs: &RootSystem, lam: &[i64]) -> HashMap<Vec<i64>, i64> {
    let n = rs.rank();
    let det = rs.det_cartan();

    // The dominant weights below lam: covers in the dominance order on the
    // dominant chamber differ by positive roots, so closing {lam} under
    // "subtract a positive root, keep dominant" enumerates them all.
    // Alongside each mu keep c = root coordinates of lam - mu.
    let root_weights: Vec<Vec<i64>> = rs
        .pos_roots()
        .iter()
        .map(|a| rs.root_to_weight(a).expect("rank matches").coords)
        .collect();
    let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    seen.insert(lam.to_vec(), vec![0; n]);
    let mut queue: Vec<Vec<i64>> = vec![lam.to_vec()];
    while let Some(mu) = queue.pop() {
        let c = seen[&mu].clone();
        for (a, aw) in rs.pos_roots().iter().zip(&root_weights) {
            let nu: Vec<i64> = (0..n).map(|j| mu[j] - aw[j]).collect();
            if nu.iter().all(|&x| x >= 0) && !seen.contains_key(&nu) {
                let mut cc = c.clone();
                for j in 0..n {
                    cc[j] += a.coords()[j];
                }
                seen.insert(nu.clone(), cc);
                queue.push(nu);
            }
        }
    }
    let mut by_height: BTreeMap<i64, Vec<(Vec<i64>, Vec<i64>)>> = BTreeMap::new();
    for (mu, c) in seen {
        by_height
            .entry(c.iter().sum())
            .or_default()
            .push((mu, c));
    }

    let sym = rs.sym_form_num();
    // scaled inner products: s_weight_root(w, a) = 2*sym_den*(w, a)
    let s_weight_root = |w: &[i64], a: &[i64]| -> i128 {
        (0..n)
            .map(|j| (w[j] as i128) * (a[j] as i128) * (sym[j][j] as i128))
            .sum()
    };
    // n_norm(w) = 2*det*sym_den*(w, w) for a weight w
    let norm = |w: &[i64]| -> i128 {
        let mut acc = 0i128;
        for i in 0..n {
            if w[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += (w[i] as i128)
                    * (w[j] as i128)
                    * (rs.i_cartan_num()[i][j] as i128)
                    * (sym[j][j] as i128);
            }
        }
        acc
    };

    let lam_rho: Vec<i64> = lam.iter().map(|&x| x + 1).collect();
    let top_norm = norm(&lam_rho);

    let mut mults: HashMap<Vec<i64>, i64> = HashMap::new();
    for (h, group) in by_height {
        for (mu, c) in group {
            if h == 0 {
                mults.insert(mu, 1);
                continue;
            }
            let mut rhs = 0i128;
            for alpha in rs.pos_roots() {
                let a = alpha.coords();
                // k ranges while mu + k*alpha stays under lambda in the root
                // lattice: c - k*a >= 0 componentwise.
                let mut kmax = i64::MAX;
                for j in 0..n {
                    if a[j] > 0 {
                        kmax = kmax.min(c[j] / a[j]);
                    }
                }
                if kmax == 0 || kmax == i64::MAX {
                    continue;
                }
                let alpha_w = rs.root_to_weight(alpha).expect("rank matches");
                for k in 1..=kmax {
                    let nu: Vec<i64> = (0..n).map(|j| mu[j] + k * alpha_w.coords[j]).collect();
                    let dom = weyl::to_dominant(rs, &Weight::new(nu.clone()));
                    let m = *mults.get(&dom.coords).unwrap_or(&0);
                    if m != 0 {
                        rhs += (m as i128) * s_weight_root(&nu, a);
                    }
                }
            }
            let mu_rho: Vec<i64> = mu.iter().map(|&x| x + 1).collect();
            let denom = top_norm - norm(&mu_rho);
            debug_assert!(denom > 0);
            let num = 2 * (det as i128) * rhs;
            debug_assert_eq!(num % denom, 0);
            let m = (num / denom) as i64;
            if m != 0 {
                mults.insert(mu, m);
            }
        }
    }
    mults
}

/// Dominant weights of the irreducible with highest weight `w`, each mapped
/// to its multiplicity.  Central coordinates pass through unchanged.
pub fn dominant_mults(t: &LieType, w: &Weight) -> Result<BTreeMap<Weight, i64>> {
    let alg = Algebra::new(t);
    alg.check_weight(w)?;
    if !w.is_dominant() {
        return Err(LieError::NonDominant(w.to_string()));
    }
    let per_factor: Vec<HashMap<Vec<i64>, i64>> = alg
        .factors
        .iter()
        .enumerate()
        .map(|(fi, f)| dominant_mults_simple(f, alg.slice(&w.coords, fi)))
        .collect();

    let mut acc: Vec<(Vec<i64>, i64)> = vec![(Vec::new(), 1)];
    for fm in &per_factor {
        let mut next = Vec::with_capacity(acc.len() * fm.len());
        for (prefix, m) in &acc {
            for (part, pm) in fm {
                let mut v = prefix.clone();
                v.extend_from_slice(part);
                next.push((v, m * pm));
            }
        }
        acc = next;
    }
    let mut out = BTreeMap::new();
    for (coords, m) in acc {
        out.insert(
            Weight {
                coords,
                central: w.central.clone(),
            },
            m,
        );
    }
    Ok(out)
}

fn merge_counts(mut a: HashMap<Vec<i64>, i64>, b: HashMap<Vec<i64>, i64>) -> HashMap<Vec<i64>, i64> {
    if a.len() < b.len() {
        return merge_counts(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn multiset_simple(rs: &RootSystem, lam: &[i64]) -> HashMap<Vec<i64>, i64> {
    let dom = dominant_mults_simple(rs, lam);
    let entries: Vec<(Vec<i64>, i64)> = dom.into_iter().collect();

    let expand = |(mu, m): &(Vec<i64>, i64)| -> HashMap<Vec<i64>, i64> {
        let orb = weyl::orbit(rs, &Weight::new(mu.clone())).expect("dominant");
        orb.into_iter().map(|p| (p.coords, *m)).collect()
    };

    #[cfg(feature = "parallel")]
    {
        entries
            .par_iter()
            .map(expand)
            .reduce(HashMap::new, merge_counts)
    }
    #[cfg(not(feature = "parallel"))]
    {
        entries
            .iter()
            .map(expand)
            .fold(HashMap::new(), merge_counts)
    }
}

/// Full weight multiset (non-dominant included) of the irreducible with
/// highest weight `w`; the multiplicities sum to `dim(t, w)`.
pub fn weight_multiset(t: &LieType, w: &Weight) -> Result<HashMap<Weight, i64>> {
    let alg = Algebra::new(t);
    alg.check_weight(w)?;
    if !w.is_dominant() {
        return Err(LieError::NonDominant(w.to_string()));
    }
    let per_factor: Vec<HashMap<Vec<i64>, i64>> = alg
        .factors
        .iter()
        .enumerate()
        .map(|(fi, f)| multiset_simple(f, alg.slice(&w.coords, fi)))
        .collect();

    let mut acc: Vec<(Vec<i64>, i64)> = vec![(Vec::new(), 1)];
    for fm in &per_factor {
        let mut next = Vec::with_capacity(acc.len() * fm.len());
        for (prefix, m) in &acc {
            for (part, pm) in fm {
                let mut v = prefix.clone();
                v.extend_from_slice(part);
                next.push((v, m * pm));
            }
        }
        acc = next;
    }
    Ok(acc
        .into_iter()
        .map(|(coords, m)| {
            (
                Weight {
                    coords,
                    central: w.central.clone(),
                },
                m,
            )
        })
        .collect())
}

/// Decomposes the dominant part of a nonvirtual character into irreducible
/// highest weights by greedy stripping of the maximal term (height against
/// the coroot sum, ties lexicographically descending).  Entries whose central
/// coordinates differ belong to different central characters and strip
/// independently.
pub fn decompose_character(t: &LieType, c: &HashMap<Weight, i64>) -> Result<Decomposition> {
    let alg = Algebra::new(t);
    let mut work: HashMap<Weight, i64> = HashMap::new();
    for (w, &m) in c {
        alg.check_weight(w)?;
        if !w.is_dominant() {
            return Err(LieError::NonDominant(w.to_string()));
        }
        if m != 0 {
            work.insert(w.clone(), m);
        }
    }
    let mut out = Decomposition::new(t.clone());
    while !work.is_empty() {
        let lam = work
            .keys()
            .max_by(|a, b| {
                alg.height_key(&a.coords)
                    .cmp(&alg.height_key(&b.coords))
                    .then_with(|| a.cmp(b))
            })
            .unwrap()
            .clone();
        let mult = work[&lam];
        if mult < 0 {
            return Err(LieError::DecompositionFailure(format!(
                "negative coefficient {mult} at {lam}"
            )));
        }
        let irred = dominant_mults(t, &lam)?;
        for (mu, m) in irred {
            *work.entry(mu).or_insert(0) -= mult * m;
        }
        work.retain(|_, v| *v != 0);
        out.insert_add(lam, mult);
    }
    Ok(out)
}

/// Klimyk alternation: tensor product of the irreducibles with highest
/// weights `a` and `b`; the smaller-dimensional side is expanded into its
/// weight multiset.  Central coordinates add.
pub fn tensor(t: &LieType, a: &Weight, b: &Weight) -> Result<Decomposition> {
    let alg = Algebra::new(t);
    alg.check_weight(a)?;
    alg.check_weight(b)?;
    if !a.is_dominant() {
        return Err(LieError::NonDominant(a.to_string()));
    }
    if !b.is_dominant() {
        return Err(LieError::NonDominant(b.to_string()));
    }
    let (hi, lo) = if dim(t, a)? >= dim(t, b)? {
        (a, b)
    } else {
        (b, a)
    };
    let central: Vec<Rational> = if a.central.is_empty() {
        b.central.clone()
    } else if b.central.is_empty() {
        a.central.clone()
    } else {
        a.central
            .iter()
            .zip(&b.central)
            .map(|(x, y)| x + y)
            .collect()
    };

    let shifted: Vec<i64> = hi.coords.iter().map(|&x| x + 1).collect();
    let mut acc: HashMap<Vec<i64>, i64> = HashMap::new();
    for (nu, m) in weight_multiset(t, &Weight::new(lo.coords.clone()))? {
        let s: Vec<i64> = shifted
            .iter()
            .zip(&nu.coords)
            .map(|(&x, &y)| x + y)
            .collect();
        let (dom, sign) = alg.straighten(&s);
        if sign != 0 {
            let key: Vec<i64> = dom.iter().map(|&x| x - 1).collect();
            *acc.entry(key).or_insert(0) += (sign as i64) * m;
        }
    }
    let mut out = Decomposition::new(t.clone());
    for (coords, m) in acc {
        if m < 0 {
            return Err(LieError::Internal(format!(
                "negative tensor multiplicity {m} at {coords:?}"
            )));
        }
        if m > 0 {
            out.insert_add(
                Weight {
                    coords,
                    central: central.clone(),
                },
                m,
            );
        }
    }
    Ok(out)
}

/// Iterated tensor product of the given highest weights: the branching of an
/// exterior tensor product to the diagonal subalgebra.
pub fn branch_diag(t: &SimpleLieType, rows: &[Weight]) -> Result<Decomposition> {
    let ty = LieType::simple(t.family(), t.rank()).expect("canonical");
    if rows.is_empty() {
        return Err(LieError::InvalidCase("branch_diag needs at least one row".into()));
    }
    for r in rows {
        if r.coords.len() != ty.rank() {
            return Err(LieError::LengthMismatch {
                expected: ty.rank(),
                got: r.coords.len(),
            });
        }
        if !r.is_dominant() {
            return Err(LieError::NonDominant(r.to_string()));
        }
    }
    let mut dec = Decomposition::new(ty.clone());
    dec.insert_add(rows[0].clone(), 1);
    for r in &rows[1..] {
        let mut next = Decomposition::new(ty.clone());
        for (lam, m) in dec.terms() {
            for (mu, tm) in tensor(&ty, lam, r)?.terms() {
                next.insert_add(mu.clone(), m * tm);
            }
        }
        dec = next;
    }
    Ok(dec)
}

/// Output of [`branch_tracked`]: the decomposition plus, per component, the
/// source weight of the component's highest-weight vector.
pub(crate) struct TrackedBranch {
    pub decomposition: Decomposition,
    pub preimages: HashMap<Weight, Vec<i64>>,
}

pub(crate) fn branch_tracked(
    g: &LieType,
    w: &Weight,
    r: &RestrictionMatrix,
    k: &LieType,
    track: bool,
) -> Result<TrackedBranch> {
    let galg = Algebra::new(g);
    galg.check_weight(w)?;
    if !w.is_dominant() {
        return Err(LieError::NonDominant(w.to_string()));
    }
    if r.n_rows() != g.semisimple_rank() {
        return Err(LieError::LengthMismatch {
            expected: g.semisimple_rank(),
            got: r.n_rows(),
        });
    }
    if r.semisimple_cols() != k.semisimple_rank() || r.central_cols().len() != k.torus_rank() {
        return Err(LieError::LengthMismatch {
            expected: k.rank(),
            got: r.n_cols(),
        });
    }

    let multiset = weight_multiset(g, w)?;
    let entries: Vec<(Weight, i64)> = multiset.into_iter().collect();
    let map_one = |(x, m): &(Weight, i64)| -> (Weight, i64, Vec<i64>) {
        let y = r.apply(&x.coords).expect("validated shape");
        (y, *m, x.coords.clone())
    };

    let mapped: Vec<(Weight, i64, Vec<i64>)> = {
        #[cfg(feature = "parallel")]
        {
            entries.par_iter().map(map_one).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            entries.iter().map(map_one).collect()
        }
    };

    let mut restricted: HashMap<Weight, i64> = HashMap::new();
    let mut preimages: HashMap<Weight, Vec<i64>> = HashMap::new();
    for (y, m, x) in mapped {
        if track && y.is_dominant() {
            preimages.entry(y.clone()).or_insert(x);
        }
        *restricted.entry(y).or_insert(0) += m;
    }
    restricted.retain(|y, _| y.is_dominant());

    let decomposition = decompose_character(k, &restricted).map_err(|e| match e {
        LieError::DecompositionFailure(msg) => LieError::DecompositionFailure(format!(
            "invalid restriction matrix or corrupted character: {msg}"
        )),
        other => other,
    })?;

    // Dimension conservation is an invariant of every branching.
    let lhs = dim(g, w)?;
    let rhs = decomposition.total_dim()?;
    if lhs != rhs {
        return Err(LieError::Internal(format!(
            "dimension conservation failed: {lhs} != {rhs}"
        )));
    }
    Ok(TrackedBranch {
        decomposition,
        preimages,
    })
}

/// Branches the irreducible `w` of `g` through the restriction matrix `r` to
/// `k`: the full weight multiset maps by right multiplication, the dominant
/// part decomposes over `k`, and each component carries its central
/// coordinates.
pub fn branch(g: &LieType, w: &Weight, r: &RestrictionMatrix, k: &LieType) -> Result<Decomposition> {
    Ok(branch_tracked(g, w, r, k, false)?.decomposition)
}
