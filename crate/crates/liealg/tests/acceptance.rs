//! Acceptance suite: one test per release criterion, each printing a
//! `criterion N: PASS` line (run with `--nocapture` to see them).  Every
//! threshold is pinned here; all comparisons are exact.

mod common;

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;

use liealg::reps::{self, Decomposition};
use liealg::rootsys::RootSystem;
use liealg::rules::{self, CaseId, LeviMode};
use liealg::weyl::SimpleSubset;
use liealg::{Family, LieType, Rational, SimpleLieType, Weight};

fn pass(n: usize, what: &str, elapsed: std::time::Duration) {
    println!("criterion {n}: PASS ({what}, {:.2}s)", elapsed.as_secs_f64());
}

fn weight(v: &[i64]) -> Weight {
    Weight::new(v.to_vec())
}

fn simple(f: Family, n: usize) -> SimpleLieType {
    SimpleLieType::new(f, n).unwrap()
}

fn terms_of(d: &Decomposition) -> HashMap<Vec<i64>, i64> {
    d.terms()
        .iter()
        .map(|(w, &m)| (w.coords.clone(), m))
        .collect()
}

/// Block-diagonal Cartan matrix of a semisimple type.
fn block_cartan(t: &LieType) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    for f in t.factors() {
        let rs = RootSystem::new(*f);
        let off = out.len();
        for row in &mut out {
            row.extend(std::iter::repeat(0).take(rs.rank()));
        }
        for i in 0..rs.rank() {
            let mut row = vec![0i64; off];
            row.extend(rs.cartan()[i].iter());
            out.push(row);
        }
    }
    out
}

/// Equal-rank catalog cases with the deleted node in canonical coordinates,
/// classical families sampled as the bounds allow.
fn equal_rank_cases() -> Vec<(CaseId, usize)> {
    use CaseId::*;
    let mut v = vec![
        (G2A1A1, 2),
        (F4A1C3, 1),
        (F4B4, 4),
        (E6A1A5, 3),
        (E6A5A1, 5),
        (E6A5A1a, 2),
        (E7A1D6, 1),
        (E7D6A1, 6),
        (E7A7, 2),
        (E8D8, 1),
        (E8E7A1, 8),
        (G2A2, 1),
        (F4A2A2, 2),
        (E6A2A2A2, 4),
        (E7A2A5, 3),
        (E7A5A2, 5),
        (E8A8, 2),
        (E8E6A2, 7),
        (E8A4A4, 5),
    ];
    // Classical samples from {(2,2),(3,1),(2,0),(1,1)} within bounds.
    v.push((BDB(2, 2), 2));
    v.push((BDB(3, 1), 3));
    v.push((BDB(2, 0), 2));
    v.push((DDD(2, 2), 2));
    v.push((CCC(2, 2), 2));
    v.push((CCC(3, 1), 3));
    // C_CC(1,1): g = Sp(2) is canonical B2 and the virtual node 1 lands at 2.
    v.push((CCC(1, 1), 2));
    v
}

/// Cases exercised by the dimension-conservation sweep.
fn conservation_cases() -> Vec<CaseId> {
    use CaseId::*;
    let mut v = CaseId::named_cases();
    v.extend([
        AD(2),
        AD(3),
        AD(8),
        AB(1),
        AB(2),
        AB(3),
        AC(1),
        AC(2),
        AC(3),
        DBB(2, 2),
        DBB(3, 1),
        DBB(2, 0),
        DBB(1, 1),
        BDB(2, 2),
        BDB(3, 1),
        BDB(2, 0),
        DDD(2, 2),
        CCC(2, 2),
        CCC(3, 1),
        CCC(1, 1),
    ]);
    v
}

/// All dominant weights of `t` with dimension at most `cap`.
fn dominant_weights_up_to(t: &LieType, cap: u64) -> Vec<Weight> {
    let n = t.semisimple_rank();
    let cap = BigUint::from(cap);
    // Per-coordinate bound: the largest c with dim(c * xi_i) <= cap.
    let mut bounds = vec![0i64; n];
    for (i, b) in bounds.iter_mut().enumerate() {
        let mut c = 0i64;
        loop {
            let mut v = vec![0i64; n];
            v[i] = c + 1;
            if reps::dim(t, &Weight::new(v)).unwrap() > cap {
                break;
            }
            c += 1;
        }
        *b = c;
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        let w = Weight::new(cur.clone());
        if reps::dim(t, &w).unwrap() <= cap {
            out.push(w);
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            cur[k] += 1;
            if cur[k] <= bounds[k] {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn criterion_1_su7_so7_golden_matrix_and_branching() {
    let t0 = Instant::now();
    let spec = rules::catalog_spec(&CaseId::AB(3)).unwrap();
    assert_eq!(
        spec.matrix().rows(),
        &vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 2],
            vec![0, 0, 2],
            vec![0, 1, 0],
            vec![1, 0, 0],
        ]
    );
    let d = spec.branch(&weight(&[1, 0, 0, 0, 0, 1])).unwrap();
    let mut expect = HashMap::new();
    expect.insert(vec![0, 1, 0], 1);
    expect.insert(vec![2, 0, 0], 1);
    assert_eq!(terms_of(&d), expect);
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0);
    pass(1, "su(7)->so(7) matrix and adjoint branching", elapsed);
}

#[test]
fn criterion_2_a_d_usage_blocks() {
    let t0 = Instant::now();
    let spec = rules::catalog_spec(&CaseId::AD(8)).unwrap();
    let mut v = vec![0i64; 15];
    v[0] = 1;
    v[1] = 1;
    let d = spec.branch(&Weight::new(v)).unwrap();
    let mut expect = HashMap::new();
    expect.insert(vec![1, 0, 0, 0, 0, 0, 0, 0], 1);
    expect.insert(vec![1, 1, 0, 0, 0, 0, 0, 0], 1);
    assert_eq!(terms_of(&d), expect);

    let spec = rules::catalog_spec(&CaseId::AD(5)).unwrap();
    let mut v = vec![0i64; 9];
    v[0] = 1;
    v[1] = 2;
    let d = spec.branch(&Weight::new(v)).unwrap();
    let mut expect = HashMap::new();
    expect.insert(vec![1, 0, 0, 0, 0], 1);
    expect.insert(vec![1, 1, 0, 0, 0], 1);
    expect.insert(vec![1, 2, 0, 0, 0], 1);
    expect.insert(vec![3, 0, 0, 0, 0], 1);
    assert_eq!(terms_of(&d), expect);
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 2.0);
    pass(2, "SU(16)->SO(16) and SU(10)->SO(10) usage blocks", elapsed);
}

#[test]
fn criterion_3_f4_levi_data() {
    let t0 = Instant::now();
    let f4 = simple(Family::F, 4);
    let rs = RootSystem::new(f4);
    assert_eq!(
        rs.i_cartan_num(),
        &vec![
            vec![2, 3, 4, 2],
            vec![3, 6, 8, 4],
            vec![2, 4, 6, 3],
            vec![1, 2, 3, 2],
        ]
    );
    assert_eq!(rs.det_cartan(), 1);

    // Central columns for the three crossings, under the unscrambled
    // convention (identity on uncrossed nodes).
    let s3 = SimpleSubset::new(vec![3], 4).unwrap();
    let spec = rules::levi_spec(&f4, &s3).unwrap();
    assert_eq!(
        spec.matrix().rows(),
        &vec![
            vec![1, 0, 0, 4],
            vec![0, 1, 0, 8],
            vec![0, 0, 0, 6],
            vec![0, 0, 1, 3],
        ]
    );
    let s4 = SimpleSubset::new(vec![4], 4).unwrap();
    let spec4 = rules::levi_spec(&f4, &s4).unwrap();
    let got: Vec<i64> = spec4.matrix().rows().iter().map(|r| r[3]).collect();
    assert_eq!(got, vec![2, 4, 3, 2]);
    let s43 = SimpleSubset::new(vec![4, 3], 4).unwrap();
    let spec43 = rules::levi_spec(&f4, &s43).unwrap();
    let c3: Vec<i64> = spec43.matrix().rows().iter().map(|r| r[2]).collect();
    let c4: Vec<i64> = spec43.matrix().rows().iter().map(|r| r[3]).collect();
    assert_eq!(c3, vec![4, 8, 6, 3]);
    assert_eq!(c4, vec![2, 4, 3, 2]);

    // The 11 printed terms of the adjoint at crossed {3} in the
    // crossed-diagram (g-coordinate) convention.
    let d = rules::levi_branch(&f4, &s3, &weight(&[1, 0, 0, 0]), LeviMode::BastonEastwood)
        .unwrap();
    let expect: Vec<Vec<i64>> = vec![
        vec![0, 0, -1, 1],
        vec![0, 0, -1, 2],
        vec![0, 0, 0, 0],
        vec![0, 0, 0, 1],
        vec![0, 1, -2, 0],
        vec![0, 1, -2, 1],
        vec![0, 1, -2, 2],
        vec![1, 0, -2, 2],
        vec![1, 0, -1, 1],
        vec![1, 0, 0, 0],
        vec![1, 1, -2, 0],
    ];
    let got: HashMap<Vec<i64>, i64> = terms_of(&d);
    assert_eq!(got.len(), 11);
    for v in &expect {
        assert_eq!(got.get(v), Some(&1), "missing term {v:?}");
    }

    // Grading values on the adjoint span -4..4.
    let native = rules::levi_branch(&f4, &s3, &weight(&[1, 0, 0, 0]), LeviMode::Native).unwrap();
    let mut values: Vec<Rational> = native
        .terms()
        .keys()
        .map(|w| w.central[0])
        .collect();
    values.sort();
    values.dedup();
    let expect_values: Vec<Rational> = (-4..=4).map(|k| Rational::new(k, 1)).collect();
    assert_eq!(values, expect_values);

    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 2.0);
    pass(3, "F4 inverse Cartan, Levi columns, 11-term adjoint block", elapsed);
}

#[test]
fn criterion_4_lemma_suite() {
    let t0 = Instant::now();
    for (case, gamma) in equal_rank_cases() {
        let spec = rules::catalog_spec(&case).unwrap();
        let g = spec.g().as_simple().unwrap();
        let rs = RootSystem::new(g);
        let beta = rs.highest_root();
        let simples = spec
            .k_simples()
            .unwrap_or_else(|| panic!("{case}: no recorded simple system"));

        // w_s(beta_g) is the unique non-simple row.
        let ws: Vec<_> = simples
            .iter()
            .filter(|r| r.coords().iter().map(|c| c.abs()).sum::<i64>() > 1)
            .collect();
        assert_eq!(ws.len(), 1, "{case}");
        let ws = ws[0];
        assert!(
            rs.pos_roots().contains(ws),
            "{case}: w_s(beta) is not a positive root"
        );
        assert_eq!(
            ws.coords()[gamma - 1],
            beta.coords()[gamma - 1],
            "{case}: coefficient at the deleted node"
        );

        // Simple system pairs exactly to the Cartan matrix of k.
        let target = block_cartan(spec.k());
        for (i, a) in simples.iter().enumerate() {
            for (j, b) in simples.iter().enumerate() {
                let p = rs.pairing_coroot(a, b).unwrap();
                assert!(p.is_integer(), "{case} ({i},{j})");
                assert_eq!(p.to_integer(), target[i][j], "{case} ({i},{j})");
            }
        }
    }
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0);
    pass(4, "reflected highest root and simple-system pairings", elapsed);
}

#[test]
fn criterion_5_dimension_conservation() {
    let t0 = Instant::now();
    let jobs: Vec<(CaseId, Weight)> = conservation_cases()
        .into_iter()
        .flat_map(|case| {
            let spec = rules::catalog_spec(&case).unwrap();
            let n = spec.g().rank();
            let mut out = Vec::new();
            for i in 0..n {
                let mut v = vec![0i64; n];
                v[i] = 1;
                let w = Weight::new(v);
                if reps::dim(spec.g(), &w).unwrap() <= BigUint::from(100_000u64) {
                    out.push((case.clone(), w));
                }
            }
            out
        })
        .collect();
    let count = jobs.len();
    jobs.par_iter().for_each(|(case, w)| {
        let spec = rules::catalog_spec(case).unwrap();
        let d = spec.branch(w).unwrap();
        let lhs = reps::dim(spec.g(), w).unwrap();
        assert_eq!(d.total_dim().unwrap(), lhs, "{case} {w}");
    });
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 300.0);
    pass(
        5,
        &format!("dimension conservation over {count} (case, fundamental) pairs"),
        elapsed,
    );
}

#[test]
fn criterion_6_character_conservation() {
    let t0 = Instant::now();
    use CaseId::*;
    let cases = vec![
        G2A1A1,
        G2A2,
        F4A1C3,
        F4B4,
        F4A2A2,
        D4G2,
        D4A2,
        AB(1),
        AB(2),
        AC(1),
        AC(2),
        AD(2),
        DBB(1, 1),
        DBB(2, 0),
        DBB(2, 1),
        DBB(1, 2),
        BDB(2, 0),
        BDB(2, 1),
        BDB(2, 2),
        BDB(3, 1),
        CCC(1, 1),
        CCC(2, 1),
        CCC(1, 2),
        CCC(2, 2),
        CCC(3, 1),
        DDD(2, 2),
    ];
    let jobs: Vec<(CaseId, Weight)> = cases
        .into_iter()
        .flat_map(|case| {
            let spec = rules::catalog_spec(&case).unwrap();
            assert!(spec.g().rank() <= 4, "{case}");
            dominant_weights_up_to(spec.g(), 4000)
                .into_iter()
                .map(move |w| (case.clone(), w))
                .collect::<Vec<_>>()
        })
        .collect();
    let count = jobs.len();
    jobs.par_iter().for_each(|(case, w)| {
        let spec = rules::catalog_spec(case).unwrap();
        // Full restricted multiset.
        let mut lhs: HashMap<Weight, i64> = HashMap::new();
        for (x, m) in reps::weight_multiset(spec.g(), w).unwrap() {
            *lhs.entry(spec.matrix().apply(&x.coords).unwrap()).or_insert(0) += m;
        }
        // Union of the component multisets.
        let d = spec.branch(w).unwrap();
        let mut rhs: HashMap<Weight, i64> = HashMap::new();
        for (lam, &mult) in d.terms() {
            for (y, m) in reps::weight_multiset(spec.k(), lam).unwrap() {
                *rhs.entry(y).or_insert(0) += mult * m;
            }
        }
        assert_eq!(lhs, rhs, "{case} {w}");
    });
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0);
    pass(
        6,
        &format!("restricted multiset equals component union on {count} branchings"),
        elapsed,
    );
}

#[test]
fn criterion_7_classical_adjoint_checks() {
    let t0 = Instant::now();

    // E6 -> F4: 78 = 52 + 26.
    let spec = rules::catalog_spec(&CaseId::E6F4).unwrap();
    let d = spec.branch(&weight(&[0, 1, 0, 0, 0, 0])).unwrap();
    let mut dims: Vec<u64> = d
        .terms()
        .iter()
        .map(|(w, _)| {
            u64::try_from(reps::dim(spec.k(), w).unwrap()).unwrap()
        })
        .collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![26, 52]);
    assert!(d.terms().values().all(|&m| m == 1));

    // E6 -> C4: 78 = 36 + 42 and 27 -> 27.
    let spec = rules::catalog_spec(&CaseId::E6C4).unwrap();
    let d = spec.branch(&weight(&[0, 1, 0, 0, 0, 0])).unwrap();
    let mut dims: Vec<u64> = d
        .terms()
        .iter()
        .map(|(w, _)| u64::try_from(reps::dim(spec.k(), w).unwrap()).unwrap())
        .collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![36, 42]);
    let d = spec.branch(&weight(&[1, 0, 0, 0, 0, 0])).unwrap();
    assert_eq!(d.terms().len(), 1);
    let (w27, m27) = d.terms().iter().next().unwrap();
    assert_eq!(*m27, 1);
    assert_eq!(
        reps::dim(spec.k(), w27).unwrap(),
        BigUint::from(27u32)
    );

    // D4 -> A2 (triality): 28 = 8 + 10 + 10bar with the stated weights.
    let spec = rules::catalog_spec(&CaseId::D4A2).unwrap();
    let d = spec.branch(&weight(&[0, 1, 0, 0])).unwrap();
    let mut expect = HashMap::new();
    expect.insert(vec![1, 1], 1);
    expect.insert(vec![3, 0], 1);
    expect.insert(vec![0, 3], 1);
    assert_eq!(terms_of(&d), expect);

    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0);
    pass(7, "E6->F4, E6->C4, D4->A2 adjoint decompositions", elapsed);
}

#[test]
fn criterion_8_freudenthal_vs_kostant() {
    let t0 = Instant::now();
    let types = [
        simple(Family::A, 1),
        simple(Family::A, 2),
        simple(Family::B, 2),
        simple(Family::G, 2),
    ];
    let mut checked = 0usize;
    for ty in types {
        let t = LieType::simple(ty.family(), ty.rank()).unwrap();
        let oracle = common::KostantOracle::new(ty);
        let weights = dominant_weights_up_to(&t, 300);
        let results: Vec<usize> = weights
            .par_iter()
            .map(|lam| {
                let mults = reps::dominant_mults(&t, lam).unwrap();
                for (mu, &m) in &mults {
                    let om = oracle.mult(lam, mu);
                    assert_eq!(m, om, "{ty} lam={lam} mu={mu}");
                }
                // Cross-check the total against the Weyl dimension formula.
                let total: i64 = mults
                    .iter()
                    .map(|(mu, &m)| {
                        m * liealg::weyl::orbit(&RootSystem::new(ty), mu).unwrap().len() as i64
                    })
                    .sum();
                assert_eq!(
                    BigUint::from(total as u64),
                    reps::dim(&t, lam).unwrap(),
                    "{ty} {lam}"
                );
                mults.len()
            })
            .collect();
        checked += results.iter().sum::<usize>();
    }
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0);
    pass(
        8,
        &format!("Freudenthal equals Kostant oracle on {checked} multiplicities"),
        elapsed,
    );
}

#[test]
fn criterion_9_e8_stress() {
    let t0 = Instant::now();
    let adjoint = weight(&[0, 0, 0, 0, 0, 0, 0, 1]);
    for case in [
        CaseId::E8A4A4,
        CaseId::E8D8,
        CaseId::E8E7A1,
        CaseId::E8A8,
        CaseId::E8E6A2,
    ] {
        let spec = rules::catalog_spec(&case).unwrap();
        let d = spec.branch(&adjoint).unwrap();
        assert_eq!(d.total_dim().unwrap(), BigUint::from(248u32), "{case}");
    }
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0);
    pass(9, "E8 adjoint through five equal-rank cases", elapsed);
}
