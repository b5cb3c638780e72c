//! Constructors for restriction matrices: the named branching catalog
//! (diagram foldings, equal-rank subalgebras from the extended Dynkin
//! diagram, and Levi subalgebras of parabolics), plus the generic builders
//! they share.
//!
//! Weight restriction is always right multiplication by the matrix whose
//! rows express the fundamental weights of `g` in the fundamental-weight
//! basis of `k` (plus torus columns for Levi cases).

use std::str::FromStr;

use num_rational::Ratio;
use serde::Deserialize;

use crate::error::{LieError, Result};
use crate::reps::{self, Decomposition, RestrictionMatrix};
use crate::rootsys::RootSystem;
use crate::types::{Family, LieType, RootVec, SimpleLieType, Weight};
use crate::weyl::{self, SimpleSubset};

/// What a column of a restriction matrix tracks, for display purposes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColumnOrigin {
    /// The simple root of the 1-based `g`-node occupying this `k` slot.
    SimpleRoot(usize),
    /// The slot holding the reflected highest root of `g`.
    LowestRoot,
    /// Folding image column (a `k` node, not a single `g` node).
    Folded,
    /// Torus column produced by crossing the given `g` node.
    Central(usize),
}

/// A target subalgebra type with its weight restriction matrix and the
/// bookkeeping recorded during construction.
#[derive(Debug, Clone)]
pub struct RestrictionSpec {
    g: LieType,
    k: LieType,
    matrix: RestrictionMatrix,
    perm: Vec<usize>,
    provenance: String,
    cols: Vec<ColumnOrigin>,
    k_simples: Option<Vec<RootVec>>,
}

impl RestrictionSpec {
    pub fn g(&self) -> &LieType {
        &self.g
    }

    pub fn k(&self) -> &LieType {
        &self.k
    }

    pub fn matrix(&self) -> &RestrictionMatrix {
        &self.matrix
    }

    /// Permutation applied to reach Bourbaki order (identity when none).
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn columns(&self) -> &[ColumnOrigin] {
        &self.cols
    }

    /// For equal-rank cases: the simple roots of `k` as roots of `g`, in
    /// Bourbaki order of `k`.
    pub fn k_simples(&self) -> Option<&[RootVec]> {
        self.k_simples.as_deref()
    }

    /// Branches a dominant weight of `g` through this spec.
    pub fn branch(&self, w: &Weight) -> Result<Decomposition> {
        reps::branch(&self.g, w, &self.matrix, &self.k)
    }
}

/// The named cases of the branching catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseId {
    /// SU(2m) -> SO(2m), m >= 2
    AD(usize),
    /// SU(2m+1) -> SO(2m+1), m >= 1
    AB(usize),
    /// SU(2m) -> Sp(m), m >= 1
    AC(usize),
    /// SO(2p+2q+2) -> SO(2p+1) x SO(2q+1), p, q >= 0 not both 0
    DBB(usize, usize),
    D4G2,
    D4A2,
    E6F4,
    E6C4,
    /// SO(2p+2q+1) -> SO(2p) x SO(2q+1), p >= 2, q >= 0
    BDB(usize, usize),
    /// SO(2p+2q) -> SO(2p) x SO(2q), p, q >= 2
    DDD(usize, usize),
    /// Sp(p+q) -> Sp(p) x Sp(q), p, q >= 1
    CCC(usize, usize),
    G2A1A1,
    F4A1C3,
    F4B4,
    E6A1A5,
    E6A5A1,
    E6A5A1a,
    E7A1D6,
    E7D6A1,
    E7A7,
    E8D8,
    E8E7A1,
    G2A2,
    F4A2A2,
    E6A2A2A2,
    E7A2A5,
    E7A5A2,
    E8A8,
    E8E6A2,
    E8A4A4,
}

impl CaseId {
    /// All fixed-name cases (no free parameters), catalog order.
    pub fn named_cases() -> Vec<CaseId> {
        use CaseId::*;
        vec![
            D4G2, D4A2, E6F4, E6C4, G2A1A1, F4A1C3, F4B4, E6A1A5, E6A5A1, E6A5A1a, E7A1D6,
            E7D6A1, E7A7, E8D8, E8E7A1, G2A2, F4A2A2, E6A2A2A2, E7A2A5, E7A5A2, E8A8, E8E6A2,
            E8A4A4,
        ]
    }

    /// Builds a case from a CLI-style name plus optional parameters.
    pub fn with_params(name: &str, m: Option<usize>, p: Option<usize>, q: Option<usize>) -> Result<CaseId> {
        let need_m = || m.ok_or_else(|| LieError::InvalidCase(format!("case {name} needs --m")));
        let need_pq = || -> Result<(usize, usize)> {
            match (p, q) {
                (Some(p), Some(q)) => Ok((p, q)),
                _ => Err(LieError::InvalidCase(format!("case {name} needs --p and --q"))),
            }
        };
        let c = match name {
            "A_D" => CaseId::AD(need_m()?),
            "A_B" => CaseId::AB(need_m()?),
            "A_C" => CaseId::AC(need_m()?),
            "D_BB" => {
                let (p, q) = need_pq()?;
                CaseId::DBB(p, q)
            }
            "B_DB" => {
                let (p, q) = need_pq()?;
                CaseId::BDB(p, q)
            }
            "D_DD" => {
                let (p, q) = need_pq()?;
                CaseId::DDD(p, q)
            }
            "C_CC" => {
                let (p, q) = need_pq()?;
                CaseId::CCC(p, q)
            }
            other => {
                let fixed: CaseId = other.parse()?;
                if m.is_some() || p.is_some() || q.is_some() {
                    return Err(LieError::InvalidCase(format!(
                        "case {name} takes no parameters"
                    )));
                }
                fixed
            }
        };
        Ok(c)
    }
}

impl FromStr for CaseId {
    type Err = LieError;

    fn from_str(s: &str) -> Result<CaseId> {
        use CaseId::*;
        Ok(match s {
            "D4_G2" => D4G2,
            "D4_A2" => D4A2,
            "E6_F4" => E6F4,
            "E6_C4" => E6C4,
            "G2_A1A1" => G2A1A1,
            "F4_A1C3" => F4A1C3,
            "F4_B4" => F4B4,
            "E6_A1A5" => E6A1A5,
            "E6_A5A1" => E6A5A1,
            "E6_A5A1a" => E6A5A1a,
            "E7_A1D6" => E7A1D6,
            "E7_D6A1" => E7D6A1,
            "E7_A7" => E7A7,
            "E8_D8" => E8D8,
            "E8_E7A1" => E8E7A1,
            "G2_A2" => G2A2,
            "F4_A2A2" => F4A2A2,
            "E6_A2A2A2" => E6A2A2A2,
            "E7_A2A5" => E7A2A5,
            "E7_A5A2" => E7A5A2,
            "E8_A8" => E8A8,
            "E8_E6A2" => E8E6A2,
            "E8_A4A4" => E8A4A4,
            other => {
                return Err(LieError::InvalidCase(format!(
                    "unknown case name {other}"
                )))
            }
        })
    }
}

impl std::fmt::Display for CaseId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use CaseId::*;
        match self {
            AD(m) => write!(f, "A_D({m})"),
            AB(m) => write!(f, "A_B({m})"),
            AC(m) => write!(f, "A_C({m})"),
            DBB(p, q) => write!(f, "D_BB({p},{q})"),
            D4G2 => write!(f, "D4_G2"),
            D4A2 => write!(f, "D4_A2"),
            E6F4 => write!(f, "E6_F4"),
            E6C4 => write!(f, "E6_C4"),
            BDB(p, q) => write!(f, "B_DB({p},{q})"),
            DDD(p, q) => write!(f, "D_DD({p},{q})"),
            CCC(p, q) => write!(f, "C_CC({p},{q})"),
            G2A1A1 => write!(f, "G2_A1A1"),
            F4A1C3 => write!(f, "F4_A1C3"),
            F4B4 => write!(f, "F4_B4"),
            E6A1A5 => write!(f, "E6_A1A5"),
            E6A5A1 => write!(f, "E6_A5A1"),
            E6A5A1a => write!(f, "E6_A5A1a"),
            E7A1D6 => write!(f, "E7_A1D6"),
            E7D6A1 => write!(f, "E7_D6A1"),
            E7A7 => write!(f, "E7_A7"),
            E8D8 => write!(f, "E8_D8"),
            E8E7A1 => write!(f, "E8_E7A1"),
            G2A2 => write!(f, "G2_A2"),
            F4A2A2 => write!(f, "F4_A2A2"),
            E6A2A2A2 => write!(f, "E6_A2A2A2"),
            E7A2A5 => write!(f, "E7_A2A5"),
            E7A5A2 => write!(f, "E7_A5A2"),
            E8A8 => write!(f, "E8_A8"),
            E8E6A2 => write!(f, "E8_E6A2"),
            E8A4A4 => write!(f, "E8_A4A4"),
        }
    }
}

/// Cartan matrix of a diagram shape without canonicality restrictions
/// (D2, D3, C1, C2, B1 allowed); used for alias relabeling.
fn cartan_shape(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match family {
        Family::A => {
            for i in 1..n {
                link(&mut a, i - 1, i);
            }
        }
        Family::B => {
            for i in 1..n {
                link(&mut a, i - 1, i);
            }
            if n >= 2 {
                a[n - 2][n - 1] = -2;
            }
        }
        Family::C => {
            for i in 1..n {
                link(&mut a, i - 1, i);
            }
            if n >= 2 {
                a[n - 1][n - 2] = -2;
            }
        }
        Family::D => {
            if n >= 3 {
                for i in 1..n - 1 {
                    link(&mut a, i - 1, i);
                }
                link(&mut a, n - 3, n - 1);
            }
            // n == 2: two orthogonal nodes
        }
        Family::E => {
            link(&mut a, 0, 2);
            for i in 2..n - 1 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, 1, 3);
        }
        Family::F => {
            link(&mut a, 0, 1);
            link(&mut a, 1, 2);
            link(&mut a, 2, 3);
            a[1][2] = -2;
        }
        Family::G => {
            link(&mut a, 0, 1);
            a[1][0] = -3;
        }
    }
    a
}

/// Canonical type of a diagram shape together with the permutation sending
/// shape positions to Bourbaki positions of the canonical type.
fn shape_relabel(family: Family, n: usize) -> (LieType, Vec<usize>) {
    let shape = cartan_shape(family, n);
    weyl::classify_cartan(&shape).expect("valid Cartan shape")
}

/// Block-diagonal Cartan matrix of a (semisimple) type.
fn block_cartan(t: &LieType) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    for f in t.factors() {
        let rs = RootSystem::new(*f);
        let off = out.len();
        let fr = rs.rank();
        for row in &mut out {
            row.extend(std::iter::repeat(0).take(fr));
        }
        for i in 0..fr {
            let mut row = vec![0i64; off];
            row.extend(rs.cartan()[i].iter());
            out.push(row);
        }
    }
    out
}

/// `res_wt = i_Cartan(g) * res_rt * Cartan(k) / det_Cartan(g)`, computed
/// blockwise so `g` may be semisimple.  Errors if any entry fails to be an
/// integer, which signals an invalid `res_rt`.
fn res_wt_general(g: &LieType, k: &LieType, res_rt: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = g.semisimple_rank();
    let rk = k.semisimple_rank();
    if res_rt.len() != n {
        return Err(LieError::LengthMismatch {
            expected: n,
            got: res_rt.len(),
        });
    }
    if res_rt.iter().any(|r| r.len() != rk) {
        return Err(LieError::LengthMismatch {
            expected: rk,
            got: res_rt.iter().map(|r| r.len()).find(|&l| l != rk).unwrap_or(0),
        });
    }
    let ck = block_cartan(k);
    // mid = res_rt * Cartan(k)
    let mut mid = vec![vec![0i64; rk]; n];
    for i in 0..n {
        for j in 0..rk {
            mid[i][j] = (0..rk).map(|t| res_rt[i][t] * ck[t][j]).sum();
        }
    }
    // out = blockdiag(iC_f / det_f) * mid
    let mut out = vec![vec![0i64; rk]; n];
    let mut off = 0usize;
    for f in g.factors() {
        let rs = RootSystem::new(*f);
        let fr = rs.rank();
        let det = rs.det_cartan();
        for i in 0..fr {
            for j in 0..rk {
                let num: i64 = (0..fr).map(|t| rs.i_cartan_num()[i][t] * mid[off + t][j]).sum();
                if num % det != 0 {
                    return Err(LieError::InexactDivision(num, det));
                }
                out[off + i][j] = num / det;
            }
        }
        off += fr;
    }
    Ok(out)
}

/// Converts a simple-root restriction matrix to the weight restriction
/// matrix: `res_wt = i_Cartan(g) * res_rt * Cartan(k) / det_Cartan(g)`.
pub fn res_wt_from_res_rt(
    g: &SimpleLieType,
    k: &LieType,
    res_rt: &[Vec<i64>],
) -> Result<RestrictionMatrix> {
    let gt = LieType::simple(g.family(), g.rank())?;
    let rows = res_wt_general(&gt, k, res_rt)?;
    RestrictionMatrix::new(rows, vec![], 1)
}

/// Row layout for equal-rank constructions: either a simple root of `g` or
/// the slot receiving the reflected highest root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSource {
    /// 1-based `g`-node.
    Node(usize),
    /// `w_s(beta_g)`.
    WsBeta,
}

/// Weight restriction matrix whose columns are the coroot pairings against
/// the given roots of `g`: `res_wt[i][j] = <xi_i, rows[j]^vee>`.
fn res_wt_from_simples(rs: &RootSystem, rows: &[RootVec]) -> Result<Vec<Vec<i64>>> {
    let n = rs.rank();
    let mut out = vec![vec![0i64; rows.len()]; n];
    for (j, alpha) in rows.iter().enumerate() {
        let len2 = rs.inner(alpha, alpha)?;
        for i in 0..n {
            let v = rs.inner_fundamental_root(i + 1, alpha) * Ratio::new(2, 1) / len2;
            if !v.is_integer() {
                return Err(LieError::Internal(format!(
                    "non-integral restriction entry at ({},{})",
                    i + 1,
                    j + 1
                )));
            }
            out[i][j] = v.to_integer();
        }
    }
    Ok(out)
}

/// Maximal equal-rank subalgebra obtained by deleting the node `gamma` from
/// the extended Dynkin diagram of `g`: the simple system of `k` is the
/// remaining nodes together with the reflected highest root
/// `w_s(beta_g)`, carried to Bourbaki order.
///
/// `rows_override`, when given, fixes the full row layout (used by the
/// catalog cases whose orderings are pinned); it must already be in Bourbaki
/// order.  Without it the rows are laid out with `w_s(beta_g)` in place of
/// `gamma` and reordered by [`weyl::bourbaki_reorder`].
pub fn borel_de_siebenthal(
    g: &SimpleLieType,
    gamma: usize,
    rows_override: Option<&[RowSource]>,
) -> Result<RestrictionSpec> {
    let rs = RootSystem::new(*g);
    let n = rs.rank();
    if gamma == 0 || gamma > n {
        return Err(LieError::IndexOutOfRange {
            index: gamma,
            rank: n,
        });
    }
    let beta = rs.highest_root();
    let n_gamma = beta.coords()[gamma - 1];
    if n_gamma < 2 {
        return Err(LieError::InvalidCase(format!(
            "highest-root coefficient at node {gamma} is {n_gamma}; deleting it gives a Levi subalgebra, not an equal-rank semisimple one"
        )));
    }
    let s = SimpleSubset::new((1..=n).filter(|&i| i != gamma).collect(), n)?;
    let (ws_beta, _len) = weyl::parabolic_antidominant(&rs, &s, beta)?;

    let build_rows = |layout: &[RowSource]| -> Vec<RootVec> {
        layout
            .iter()
            .map(|src| match src {
                RowSource::Node(i) => RootVec::simple(n, *i),
                RowSource::WsBeta => ws_beta.clone(),
            })
            .collect()
    };

    let (rows, sources, k, perm) = match rows_override {
        Some(layout) => {
            if layout.len() != n {
                return Err(LieError::LengthMismatch {
                    expected: n,
                    got: layout.len(),
                });
            }
            let rows = build_rows(layout);
            let (k, perm) = weyl::bourbaki_reorder(&rs, &rows)?;
            if perm.iter().enumerate().any(|(i, &p)| i != p) {
                return Err(LieError::Internal(
                    "override layout is not in Bourbaki order".into(),
                ));
            }
            (rows, layout.to_vec(), k, perm)
        }
        None => {
            let layout: Vec<RowSource> = (1..=n)
                .map(|i| {
                    if i == gamma {
                        RowSource::WsBeta
                    } else {
                        RowSource::Node(i)
                    }
                })
                .collect();
            let rows = build_rows(&layout);
            let (k, perm) = weyl::bourbaki_reorder(&rs, &rows)?;
            let mut ordered_rows = vec![RootVec(Vec::new()); n];
            let mut ordered_sources = vec![RowSource::WsBeta; n];
            for (i, (r, src)) in rows.into_iter().zip(layout).enumerate() {
                ordered_rows[perm[i]] = r;
                ordered_sources[perm[i]] = src;
            }
            (ordered_rows, ordered_sources, k, perm)
        }
    };

    let matrix = RestrictionMatrix::new(res_wt_from_simples(&rs, &rows)?, vec![], 1)?;
    let cols = sources
        .iter()
        .map(|src| match src {
            RowSource::Node(i) => ColumnOrigin::SimpleRoot(*i),
            RowSource::WsBeta => ColumnOrigin::LowestRoot,
        })
        .collect();
    Ok(RestrictionSpec {
        g: LieType::simple(g.family(), g.rank())?,
        k,
        matrix,
        perm,
        provenance: "bds".into(),
        cols,
        k_simples: Some(rows),
    })
}

/// One fixed equal-rank catalog entry: delete `gamma`, place `w_s(beta_g)`
/// at `ws_pos`, move the listed nodes to the listed positions, and leave
/// every other node in place.
fn bds_case(
    g: SimpleLieType,
    gamma: usize,
    ws_pos: usize,
    assigns: &[(usize, usize)],
    k_name: &str,
    prov: &str,
) -> Result<RestrictionSpec> {
    let n = g.rank();
    let mut layout: Vec<RowSource> = (1..=n).map(RowSource::Node).collect();
    layout[ws_pos - 1] = RowSource::WsBeta;
    for &(pos, node) in assigns {
        layout[pos - 1] = RowSource::Node(node);
    }
    let mut spec = borel_de_siebenthal(&g, gamma, Some(&layout))?;
    if spec.k.to_string() != k_name {
        return Err(LieError::Internal(format!(
            "{prov}: constructed type {} does not match {k_name}",
            spec.k
        )));
    }
    spec.provenance = prov.to_string();
    Ok(spec)
}

/// Applies a column permutation: new column `perm[j]` = old column `j`.
fn permute_cols(rt: &[Vec<i64>], perm: &[usize]) -> Vec<Vec<i64>> {
    rt.iter()
        .map(|row| {
            let mut new_row = vec![0i64; row.len()];
            for (j, &v) in row.iter().enumerate() {
                new_row[perm[j]] = v;
            }
            new_row
        })
        .collect()
}

/// Applies a row permutation: new row `perm[i]` = old row `i`.
fn permute_rows(rt: &[Vec<i64>], perm: &[usize]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new(); rt.len()];
    for (i, row) in rt.iter().enumerate() {
        out[perm[i]] = row.clone();
    }
    out
}

fn folding_from_virtual(
    g: LieType,
    g_row_perm: Vec<usize>,
    k_shapes: &[(Family, usize)],
    virtual_rt: Vec<Vec<i64>>,
    prov: &str,
) -> Result<RestrictionSpec> {
    // Canonicalize the k side shape blocks.
    let mut shape = Vec::new();
    for &(f, r) in k_shapes {
        let block = cartan_shape(f, r);
        let off = shape.len();
        for row in &mut shape {
            let v: &mut Vec<i64> = row;
            v.extend(std::iter::repeat(0).take(r));
        }
        for i in 0..r {
            let mut row = vec![0i64; off];
            row.extend(block[i].iter());
            shape.push(row);
        }
    }
    let (k, col_perm) = weyl::classify_cartan(&shape)?;
    let rt = permute_cols(&virtual_rt, &col_perm);
    let rt = permute_rows(&rt, &g_row_perm);
    let rows = res_wt_general(&g, &k, &rt)?;
    let n_cols = rows[0].len();
    Ok(RestrictionSpec {
        g,
        k,
        matrix: RestrictionMatrix::new(rows, vec![], 1)?,
        perm: col_perm,
        provenance: prov.to_string(),
        cols: vec![ColumnOrigin::Folded; n_cols],
        k_simples: None,
    })
}

#[derive(Deserialize)]
struct MatrixFile {
    g: String,
    k: String,
    rows: Vec<Vec<i64>>,
    central_cols: Vec<usize>,
    central_den: i64,
    provenance: String,
}

/// Restriction data shipped with the crate (cases whose matrix is loaded
/// rather than constructed).
const E6_C4_DATA: &str = include_str!("../data/e6_c4.json");

fn load_matrix_file(text: &str) -> Result<RestrictionSpec> {
    let f: MatrixFile =
        serde_json::from_str(text).map_err(|e| LieError::Internal(format!("bad data file: {e}")))?;
    let g: LieType = f.g.parse()?;
    let k: LieType = f.k.parse()?;
    let n_cols = f.rows.first().map(|r| r.len()).unwrap_or(0);
    Ok(RestrictionSpec {
        g,
        k,
        matrix: RestrictionMatrix::new(f.rows, f.central_cols, f.central_den)?,
        perm: (0..n_cols).collect(),
        provenance: f.provenance,
        cols: vec![ColumnOrigin::Folded; n_cols],
        k_simples: None,
    })
}

/// Lower-rank cases: the fixed-point subalgebra of an outer automorphism,
/// with the simple-root restriction matrix from the diagram identification.
pub fn folding_spec(c: &CaseId) -> Result<RestrictionSpec> {
    match c {
        CaseId::AD(m) => {
            let m = *m;
            if m < 2 {
                return Err(LieError::InvalidCase(
                    "A_D needs m >= 2: for m = 1 the target is a torus, which is a Levi case"
                        .into(),
                ));
            }
            let g = LieType::simple(Family::A, 2 * m - 1)?;
            let mut rt = vec![vec![0i64; m]; 2 * m - 1];
            for i in 1..=m {
                rt[i - 1][i - 1] = 1;
            }
            rt[m - 1][m - 2] = -1;
            rt[m - 1][m - 1] = 1;
            for i in 1..m {
                rt[m + i - 1][m - i - 1] = 1;
            }
            let perm = (0..2 * m - 1).collect();
            folding_from_virtual(g, perm, &[(Family::D, m)], rt, &c.to_string())
        }
        CaseId::AB(m) => {
            let m = *m;
            if m < 1 {
                return Err(LieError::InvalidCase("A_B needs m >= 1".into()));
            }
            let g = LieType::simple(Family::A, 2 * m)?;
            let mut rt = vec![vec![0i64; m]; 2 * m];
            for i in 1..=m {
                rt[i - 1][i - 1] = 1;
                rt[m + i - 1][m - i] = 1;
            }
            let perm = (0..2 * m).collect();
            folding_from_virtual(g, perm, &[(Family::B, m)], rt, &c.to_string())
        }
        CaseId::AC(m) => {
            let m = *m;
            if m < 1 {
                return Err(LieError::InvalidCase("A_C needs m >= 1".into()));
            }
            let g = LieType::simple(Family::A, 2 * m - 1)?;
            let mut rt = vec![vec![0i64; m]; 2 * m - 1];
            for i in 1..m {
                rt[i - 1][i - 1] = 1;
                rt[m + i - 1][m - i - 1] = 1;
            }
            rt[m - 1][m - 1] = 1;
            let perm = (0..2 * m - 1).collect();
            folding_from_virtual(g, perm, &[(Family::C, m)], rt, &c.to_string())
        }
        CaseId::DBB(p, q) => {
            let (p, q) = (*p, *q);
            if p == 0 && q == 0 {
                return Err(LieError::InvalidCase("D_BB needs p, q not both 0".into()));
            }
            let n = p + q + 1;
            let g = LieType::simple(Family::D, n)?;
            let (g_check, g_row_perm) = shape_relabel(Family::D, n);
            debug_assert_eq!(g_check, g);
            let rk = p + q;
            let mut rt = vec![vec![0i64; rk]; n];
            for i in 1..p {
                rt[i - 1][i - 1] = 1;
            }
            if p >= 1 {
                rt[p - 1][p - 1] = 1;
                for j in (p + 1)..=(p + q) {
                    rt[p - 1][j - 1] = -1;
                }
            }
            for i in (p + 1)..(p + q) {
                rt[i - 1][i - 1] = 1;
            }
            rt[p + q - 1][p + q - 1] = 1;
            rt[p + q][p + q - 1] = 1;
            let mut shapes = Vec::new();
            if p >= 1 {
                shapes.push((Family::B, p));
            }
            if q >= 1 {
                shapes.push((Family::B, q));
            }
            folding_from_virtual(g, g_row_perm, &shapes, rt, &c.to_string())
        }
        CaseId::D4G2 => {
            let g = LieType::simple(Family::D, 4)?;
            let rt = vec![vec![1, 0], vec![0, 1], vec![1, 0], vec![1, 0]];
            folding_from_virtual(g, (0..4).collect(), &[(Family::G, 2)], rt, "D4_G2")
        }
        CaseId::D4A2 => {
            // Composite map: fold to the G2 coordinates, then project onto
            // the rank-2 subalgebra whose roots are the short folded roots
            // (the triality-fixed su(3); the long-root su(3) sits inside the
            // folded g2 and is a different subalgebra).
            let fold = folding_spec(&CaseId::D4G2)?;
            let short_a2 = [[1i64, 1], [0, 3]];
            let rows: Vec<Vec<i64>> = fold
                .matrix
                .rows()
                .iter()
                .map(|r| {
                    (0..2)
                        .map(|j| (0..2).map(|t| r[t] * short_a2[t][j]).sum())
                        .collect()
                })
                .collect();
            Ok(RestrictionSpec {
                g: LieType::simple(Family::D, 4)?,
                k: LieType::simple(Family::A, 2)?,
                matrix: RestrictionMatrix::new(rows, vec![], 1)?,
                perm: vec![0, 1],
                provenance: "D4_A2".into(),
                cols: vec![ColumnOrigin::Folded; 2],
                k_simples: None,
            })
        }
        CaseId::E6F4 => {
            let g = LieType::simple(Family::E, 6)?;
            // psi_2 -> phi_1, psi_4 -> phi_2, psi_3/psi_5 -> phi_3,
            // psi_1/psi_6 -> phi_4
            let rt = vec![
                vec![0, 0, 0, 1],
                vec![1, 0, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
            ];
            folding_from_virtual(g, (0..6).collect(), &[(Family::F, 4)], rt, "E6_F4")
        }
        CaseId::E6C4 => load_matrix_file(E6_C4_DATA),
        other => Err(LieError::InvalidCase(format!(
            "{other} is not a lower-rank (folding) case"
        ))),
    }
}

/// Classical equal-rank family: generic construction at the given node.
fn classical_bds(
    family: Family,
    n: usize,
    gamma: usize,
    prov: &str,
) -> Result<RestrictionSpec> {
    // g may be an alias (Sp(2) = B2): translate the virtual node through the
    // shape relabeling.
    let (g, row_perm) = shape_relabel(family, n);
    let gs = g
        .as_simple()
        .ok_or_else(|| LieError::InvalidCase(format!("{prov}: g = {g} is not simple")))?;
    let gamma_canonical = row_perm[gamma - 1] + 1;
    let mut spec = borel_de_siebenthal(&gs, gamma_canonical, None)?;
    spec.provenance = prov.to_string();
    Ok(spec)
}

/// Builds the restriction spec of any named catalog case.
pub fn catalog_spec(c: &CaseId) -> Result<RestrictionSpec> {
    use CaseId::*;
    let f4 = SimpleLieType::new(Family::F, 4)?;
    let g2 = SimpleLieType::new(Family::G, 2)?;
    let e6 = SimpleLieType::new(Family::E, 6)?;
    let e7 = SimpleLieType::new(Family::E, 7)?;
    let e8 = SimpleLieType::new(Family::E, 8)?;
    match c {
        AD(_) | AB(_) | AC(_) | DBB(_, _) | D4G2 | D4A2 | E6F4 | E6C4 => folding_spec(c),
        BDB(p, q) => {
            if *p < 2 {
                return Err(LieError::InvalidCase("B_DB needs p >= 2".into()));
            }
            classical_bds(Family::B, p + q, *p, &c.to_string())
        }
        DDD(p, q) => {
            if *p < 2 || *q < 2 {
                return Err(LieError::InvalidCase("D_DD needs p, q >= 2".into()));
            }
            classical_bds(Family::D, p + q, *p, &c.to_string())
        }
        CCC(p, q) => {
            if *p < 1 || *q < 1 {
                return Err(LieError::InvalidCase("C_CC needs p, q >= 1".into()));
            }
            classical_bds(Family::C, p + q, *p, &c.to_string())
        }
        G2A1A1 => bds_case(g2, 2, 2, &[], "A1A1", "G2_A1A1"),
        F4A1C3 => bds_case(f4, 1, 1, &[(2, 4), (4, 2)], "A1C3", "F4_A1C3"),
        F4B4 => bds_case(f4, 4, 1, &[(2, 1), (3, 2), (4, 3)], "B4", "F4_B4"),
        E6A1A5 => bds_case(e6, 3, 6, &[(3, 4), (4, 5), (5, 6)], "A1A5", "E6_A1A5"),
        E6A5A1 => bds_case(e6, 5, 1, &[(2, 1), (5, 2)], "A5A1", "E6_A5A1"),
        E6A5A1a => bds_case(e6, 2, 6, &[(2, 3), (3, 4), (4, 5), (5, 6)], "A5A1", "E6_A5A1a"),
        E7A1D6 => bds_case(
            e7,
            1,
            1,
            &[(2, 7), (3, 6), (4, 5), (5, 4), (6, 3), (7, 2)],
            "A1D6",
            "E7_A1D6",
        ),
        E7D6A1 => bds_case(e7, 6, 1, &[(2, 1), (6, 2)], "D6A1", "E7_D6A1"),
        E7A7 => bds_case(
            e7,
            2,
            7,
            &[(2, 3), (3, 4), (4, 5), (5, 6), (6, 7)],
            "A7",
            "E7_A7",
        ),
        E8D8 => bds_case(
            e8,
            1,
            1,
            &[(2, 8), (3, 7), (4, 6), (6, 4), (7, 3), (8, 2)],
            "D8",
            "E8_D8",
        ),
        E8E7A1 => bds_case(e8, 8, 8, &[], "E7A1", "E8_E7A1"),
        G2A2 => bds_case(g2, 1, 1, &[], "A2", "G2_A2"),
        F4A2A2 => bds_case(f4, 2, 2, &[], "A2A2", "F4_A2A2"),
        E6A2A2A2 => bds_case(e6, 4, 4, &[(2, 3), (3, 2)], "A2A2A2", "E6_A2A2A2"),
        E7A2A5 => bds_case(e7, 3, 2, &[(3, 2)], "A2A5", "E7_A2A5"),
        E7A5A2 => bds_case(e7, 5, 5, &[(2, 3), (3, 4), (4, 2)], "A5A2", "E7_A5A2"),
        E8A8 => bds_case(e8, 2, 1, &[(2, 1)], "A8", "E8_A8"),
        E8E6A2 => bds_case(e8, 7, 7, &[], "E6A2", "E8_E6A2"),
        E8A4A4 => bds_case(e8, 5, 5, &[(2, 3), (3, 4), (4, 2)], "A4A4", "E8_A4A4"),
    }
}

/// Levi subalgebra of the parabolic marked by crossing the given nodes:
/// `k` is the uncrossed subdiagram times a torus of rank `|crossed|`.
/// Semisimple columns select uncrossed weight coordinates; each central
/// column is the inverse-Cartan column of its crossed node over
/// `det_Cartan(g)` (the grading-element normalization).
pub fn levi_spec(g: &SimpleLieType, crossed: &SimpleSubset) -> Result<RestrictionSpec> {
    let rs = RootSystem::new(*g);
    let n = rs.rank();
    if crossed.is_empty() {
        return Err(LieError::InvalidCase(
            "levi case needs at least one crossed node".into(),
        ));
    }
    if let Some(&bad) = crossed.indices().iter().find(|&&i| i == 0 || i > n) {
        return Err(LieError::IndexOutOfRange { index: bad, rank: n });
    }
    let uncrossed: Vec<usize> = (1..=n).filter(|i| !crossed.contains(*i)).collect();

    // Classify the uncrossed subdiagram.
    let m = uncrossed.len();
    let sub: Vec<Vec<i64>> = uncrossed
        .iter()
        .map(|&i| {
            uncrossed
                .iter()
                .map(|&j| rs.cartan()[i - 1][j - 1])
                .collect()
        })
        .collect();
    let (k_ss, perm) = if m > 0 {
        weyl::classify_cartan(&sub)?
    } else {
        (LieType::product([]), Vec::new())
    };
    let k = LieType::product([k_ss, LieType::torus(crossed.len())]);

    let width = m + crossed.len();
    let mut rows = vec![vec![0i64; width]; n];
    let mut cols = vec![ColumnOrigin::Folded; width];
    for (idx, &node) in uncrossed.iter().enumerate() {
        let col = perm[idx];
        rows[node - 1][col] = 1;
        cols[col] = ColumnOrigin::SimpleRoot(node);
    }
    for (ci, &node) in crossed.indices().iter().enumerate() {
        let col = m + ci;
        for r in 0..n {
            rows[r][col] = rs.i_cartan_num()[r][node - 1];
        }
        cols[col] = ColumnOrigin::Central(node);
    }
    let central_cols: Vec<usize> = (m..width).collect();
    let matrix = RestrictionMatrix::new(rows, central_cols, rs.det_cartan())?;
    Ok(RestrictionSpec {
        g: LieType::simple(g.family(), g.rank())?,
        k,
        matrix,
        perm,
        provenance: "levi".into(),
        cols,
        k_simples: None,
    })
}

/// Output convention for [`levi_branch`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeviMode {
    /// Components as `k`-weights plus exact-rational central coordinates.
    Native,
    /// Each component as an integer vector in the fundamental-weight
    /// coordinates of `g`: the `g`-weight of the component's highest-weight
    /// vector, attached to the crossed diagram.
    BastonEastwood,
}

/// Branches a dominant weight of `g` to the Levi subalgebra of the parabolic
/// with the given crossed nodes.
pub fn levi_branch(
    g: &SimpleLieType,
    crossed: &SimpleSubset,
    w: &Weight,
    mode: LeviMode,
) -> Result<Decomposition> {
    let spec = levi_spec(g, crossed)?;
    let track = mode == LeviMode::BastonEastwood;
    let out = reps::branch_tracked(&spec.g, w, &spec.matrix, &spec.k, track)?;
    match mode {
        LeviMode::Native => Ok(out.decomposition),
        LeviMode::BastonEastwood => {
            let mut be = Decomposition::new(spec.g.clone());
            for (lam, &mult) in out.decomposition.terms() {
                let pre = out.preimages.get(lam).ok_or_else(|| {
                    LieError::Internal(format!("no tracked source weight for {lam}"))
                })?;
                be.insert_add(Weight::new(pre.clone()), mult);
            }
            Ok(be)
        }
    }
}
