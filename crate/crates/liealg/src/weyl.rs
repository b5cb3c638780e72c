//! Weyl-group actions on weights and roots: simple reflections, dominant
//! representatives with determinant signs, orbits, antidominant
//! representatives under parabolic subgroups, and reordering of candidate
//! simple systems to Bourbaki order.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{LieError, Result};
use crate::rootsys::RootSystem;
use crate::types::{Family, LieType, RootVec, SimpleLieType, Weight};

/// A subset of the simple-root nodes of a root system, 1-based and strictly
/// increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleSubset {
    indices: Vec<usize>,
}

impl SimpleSubset {
    pub fn new(mut indices: Vec<usize>, rank: usize) -> Result<SimpleSubset> {
        indices.sort_unstable();
        indices.dedup();
        for &i in &indices {
            if i == 0 || i > rank {
                return Err(LieError::IndexOutOfRange { index: i, rank });
            }
        }
        Ok(SimpleSubset { indices })
    }

    /// All nodes except the given ones.
    pub fn complement(&self, rank: usize) -> SimpleSubset {
        let set: BTreeSet<usize> = self.indices.iter().copied().collect();
        SimpleSubset {
            indices: (1..=rank).filter(|i| !set.contains(i)).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// A dominant orbit representative together with the determinant of the Weyl
/// element used to reach it: +1/-1 for regular orbits, 0 on a wall.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedDominant {
    pub weight: Weight,
    pub sign: i8,
}

/// Simple reflection `s_i` acting on weight coordinates (1-based node).
pub fn reflect(rs: &RootSystem, i: usize, w: &Weight) -> Result<Weight> {
    let n = rs.rank();
    if i == 0 || i > n {
        return Err(LieError::IndexOutOfRange { index: i, rank: n });
    }
    if w.coords.len() != n {
        return Err(LieError::LengthMismatch {
            expected: n,
            got: w.coords.len(),
        });
    }
    let c = w.coords[i - 1];
    let row = &rs.cartan()[i - 1];
    let coords = w
        .coords
        .iter()
        .zip(row)
        .map(|(&a, &b)| a - c * b)
        .collect();
    Ok(Weight {
        coords,
        central: w.central.clone(),
    })
}

/// Dominant representative of the Weyl orbit, ignoring signs.
pub fn to_dominant(rs: &RootSystem, w: &Weight) -> Weight {
    let mut cur = w.clone();
    loop {
        match cur.coords.iter().position(|&c| c < 0) {
            None => return cur,
            Some(idx) => {
                cur = reflect(rs, idx + 1, &cur).expect("index in range");
            }
        }
    }
}

/// Dominant representative with the determinant sign of the straightening
/// element: `(-1)^(reflections used)` for regular `w`, 0 if the orbit lies
/// on a wall (the dominant representative has a zero coordinate).
pub fn straighten(rs: &RootSystem, w: &Weight) -> SignedDominant {
    let mut cur = w.clone();
    let mut count = 0usize;
    loop {
        match cur.coords.iter().position(|&c| c < 0) {
            None => {
                let sign = if cur.coords.iter().any(|&c| c == 0) {
                    0
                } else if count % 2 == 0 {
                    1
                } else {
                    -1
                };
                return SignedDominant { weight: cur, sign };
            }
            Some(idx) => {
                cur = reflect(rs, idx + 1, &cur).expect("index in range");
                count += 1;
            }
        }
    }
}

/// Full Weyl orbit of a dominant weight, sorted.
pub fn orbit(rs: &RootSystem, w: &Weight) -> Result<Vec<Weight>> {
    if !w.is_dominant() {
        return Err(LieError::NonDominant(w.to_string()));
    }
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(p) = queue.pop_front() {
        for i in 1..=rs.rank() {
            if p.coords[i - 1] != 0 {
                let q = reflect(rs, i, &p)?;
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// The unique S-antidominant point of the `W_S`-orbit of an S-dominant root
/// vector, together with the number of reflections used.  For the highest
/// root this computes `w_s(beta_g)`, the image of the lowest weight of the
/// parabolic action; the greedy descent always reflects at the smallest
/// S-node with positive pairing, and the endpoint is tie-independent.
pub fn parabolic_antidominant(
    rs: &RootSystem,
    s: &SimpleSubset,
    r: &RootVec,
) -> Result<(RootVec, usize)> {
    let n = rs.rank();
    if r.len() != n {
        return Err(LieError::LengthMismatch {
            expected: n,
            got: r.len(),
        });
    }
    let pairing = |v: &RootVec, i: usize| -> i64 {
        (0..n).map(|j| v.coords()[j] * rs.cartan()[j][i - 1]).sum()
    };
    for &i in s.indices() {
        if pairing(r, i) < 0 {
            return Err(LieError::NonDominant(format!(
                "{r} is not S-dominant at node {i}"
            )));
        }
    }
    let mut cur = r.clone();
    let mut len = 0usize;
    'outer: loop {
        for &i in s.indices() {
            let p = pairing(&cur, i);
            if p > 0 {
                let mut v = cur.0.clone();
                v[i - 1] -= p;
                cur = RootVec(v);
                len += 1;
                continue 'outer;
            }
        }
        break;
    }
    Ok((cur, len))
}

/// Candidate canonical simple types of a given rank.
fn candidate_types(rank: usize) -> Vec<SimpleLieType> {
    let mut out = Vec::new();
    let mut push = |f: Family, n: usize| {
        if let Ok(t) = SimpleLieType::new(f, n) {
            out.push(t);
        }
    };
    push(Family::A, rank);
    push(Family::B, rank);
    push(Family::C, rank);
    push(Family::D, rank);
    push(Family::E, rank);
    if rank == 4 {
        push(Family::F, 4);
    }
    if rank == 2 {
        push(Family::G, 2);
    }
    out
}

/// All bijections `sigma: Bourbaki position -> node id` of one connected
/// component onto a target Cartan matrix, found by backtracking.  `assign`
/// holds node ids directly.
fn isomorphisms(p: &[Vec<i64>], nodes: &[usize], target: &[Vec<i64>]) -> Vec<Vec<usize>> {
    fn rec(
        p: &[Vec<i64>],
        nodes: &[usize],
        target: &[Vec<i64>],
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Vec<usize>>,
    ) {
        let pos = assign.len();
        if pos == nodes.len() {
            found.push(assign.clone());
            return;
        }
        for cand in 0..nodes.len() {
            if used[cand] {
                continue;
            }
            let node = nodes[cand];
            let ok = (0..pos).all(|prev| {
                let prev_node = assign[prev];
                p[node][prev_node] == target[pos][prev] && p[prev_node][node] == target[prev][pos]
            });
            if ok {
                used[cand] = true;
                assign.push(node);
                rec(p, nodes, target, assign, used, found);
                assign.pop();
                used[cand] = false;
            }
        }
    }

    let mut found = Vec::new();
    let mut assign = Vec::with_capacity(nodes.len());
    let mut used = vec![false; nodes.len()];
    rec(p, nodes, target, &mut assign, &mut used, &mut found);
    found
}

fn cartan_of(ty: SimpleLieType) -> Vec<Vec<i64>> {
    RootSystem::new(ty).cartan().clone()
}

/// Classifies an integer pairing matrix (`p[i][j] = <r_i, r_j^vee>`) of a
/// candidate simple system: canonical type plus the permutation sending input
/// positions to Bourbaki positions, chosen to minimize the number of moved
/// positions with a lexicographic tie-break.  Components are ordered by their
/// smallest input index.
pub(crate) fn classify_cartan(p: &[Vec<i64>]) -> Result<(LieType, Vec<usize>)> {
    let n = p.len();
    for i in 0..n {
        if p[i][i] != 2 {
            return Err(LieError::InvalidSimpleSystem(format!(
                "diagonal entry {} at {}",
                p[i][i],
                i + 1
            )));
        }
        for j in 0..n {
            if i != j {
                if p[i][j] > 0 {
                    return Err(LieError::InvalidSimpleSystem(format!(
                        "positive off-diagonal pairing at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
                if (p[i][j] == 0) != (p[j][i] == 0) {
                    return Err(LieError::InvalidSimpleSystem(format!(
                        "one-sided pairing at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
    }

    // Connected components, ordered by smallest member.
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        comp_of[start] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for u in 0..n {
                if u != v && p[v][u] != 0 && comp_of[u] == usize::MAX {
                    comp_of[u] = id;
                    stack.push(u);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }

    let mut factors = Vec::new();
    let mut perm = vec![0usize; n];
    let mut offset = 0usize;
    for nodes in &comps {
        let m = nodes.len();
        let mut matched: Option<(SimpleLieType, Vec<Vec<usize>>)> = None;
        for ty in candidate_types(m) {
            let isos = isomorphisms(p, nodes, &cartan_of(ty));
            if !isos.is_empty() {
                matched = Some((ty, isos));
                break;
            }
        }
        let (ty, isos) = matched.ok_or_else(|| {
            LieError::InvalidSimpleSystem(format!(
                "component {:?} matches no simple Cartan type",
                nodes.iter().map(|i| i + 1).collect::<Vec<_>>()
            ))
        })?;
        // sigma[pos] = input node at Bourbaki position (component-local).
        let best = isos
            .into_iter()
            .min_by_key(|sigma| {
                let displaced = sigma
                    .iter()
                    .enumerate()
                    .filter(|(pos, &node)| node != offset + pos)
                    .count();
                (displaced, sigma.clone())
            })
            .expect("nonempty isomorphism set");
        for (pos, &node) in best.iter().enumerate() {
            perm[node] = offset + pos;
        }
        factors.push(ty);
        offset += m;
    }

    let t = LieType::product(
        factors
            .into_iter()
            .map(|f| LieType::simple(f.family(), f.rank()).expect("canonical")),
    );
    Ok((t, perm))
}

/// Reorders a candidate simple system (root vectors of `rs` with pairwise
/// nonpositive pairings) to Bourbaki order.  Returns the Cartan type of the
/// candidate system and the permutation mapping input positions to Bourbaki
/// positions (0-based), so that the permuted pairing matrix equals the
/// target Cartan matrix entry for entry.
pub fn bourbaki_reorder(
    rs: &RootSystem,
    candidate_simples: &[RootVec],
) -> Result<(LieType, Vec<usize>)> {
    let m = candidate_simples.len();
    let mut p = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in 0..m {
            let v = rs.pairing_coroot(&candidate_simples[i], &candidate_simples[j])?;
            if !v.is_integer() {
                return Err(LieError::InvalidSimpleSystem(format!(
                    "non-integral pairing between rows {} and {}",
                    i + 1,
                    j + 1
                )));
            }
            p[i][j] = v.to_integer();
        }
    }
    let (ty, perm) = classify_cartan(&p)?;

    // Exact check: permuted pairing equals the target Cartan matrix.
    let target = crate::rootsys::factor_systems(&ty)
        .iter()
        .fold(Vec::new(), |mut acc: Vec<Vec<i64>>, f| {
            let off = acc.len();
            let fr = f.rank();
            for row in &mut acc {
                row.extend(std::iter::repeat(0).take(fr));
            }
            for i in 0..fr {
                let mut row = vec![0i64; off];
                row.extend(f.cartan()[i].iter());
                acc.push(row);
            }
            acc
        });
    for i in 0..m {
        for j in 0..m {
            if p[i][j] != target[perm[i]][perm[j]] {
                return Err(LieError::Internal(format!(
                    "reordered pairing mismatch at ({},{})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok((ty, perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Family;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::new(SimpleLieType::new(family, rank).unwrap())
    }

    #[test]
    fn reflect_rank_one() {
        let a1 = rs(Family::A, 1);
        let w = Weight::new(vec![1]);
        assert_eq!(reflect(&a1, 1, &w).unwrap().coords, vec![-1]);
        let back = reflect(&a1, 1, &reflect(&a1, 1, &w).unwrap()).unwrap();
        assert_eq!(back, w);
        assert!(reflect(&a1, 2, &w).is_err());
    }

    #[test]
    fn reflect_g2_highest_root() {
        let g2 = rs(Family::G, 2);
        let beta_w = g2.root_to_weight(g2.highest_root()).unwrap();
        assert_eq!(beta_w.coords, vec![0, 1]);
        let s2 = reflect(&g2, 2, &beta_w).unwrap();
        let expect = g2.root_to_weight(&RootVec(vec![3, 1])).unwrap();
        assert_eq!(s2, expect);
    }

    #[test]
    fn straighten_signs() {
        let a1 = rs(Family::A, 1);
        let d = straighten(&a1, &Weight::new(vec![-2]));
        assert_eq!(d.weight.coords, vec![2]);
        assert_eq!(d.sign, -1);
        let d = straighten(&a1, &Weight::new(vec![3]));
        assert_eq!(d.sign, 1);
        let d = straighten(&a1, &Weight::new(vec![0]));
        assert_eq!(d.sign, 0);
    }

    #[test]
    fn orbit_sizes() {
        let a1 = rs(Family::A, 1);
        let o = orbit(&a1, &Weight::new(vec![1])).unwrap();
        assert_eq!(o.len(), 2);

        let f4 = rs(Family::F, 4);
        let hw = f4.root_to_weight(f4.highest_root()).unwrap();
        // Orbit of the highest root = set of long roots of F4.
        assert_eq!(orbit(&f4, &hw).unwrap().len(), 24);

        let zero = Weight::zero(4);
        assert_eq!(orbit(&f4, &zero).unwrap(), vec![zero]);

        assert!(orbit(&a1, &Weight::new(vec![-1])).is_err());
    }

    #[test]
    fn orbit_closed_under_reflections() {
        let b2 = rs(Family::B, 2);
        let o = orbit(&b2, &Weight::new(vec![1, 2])).unwrap();
        for w in &o {
            for i in 1..=2 {
                let r = reflect(&b2, i, w).unwrap();
                assert!(o.contains(&r));
            }
        }
    }

    #[test]
    fn parabolic_antidominant_g2() {
        let g2 = rs(Family::G, 2);
        let beta = g2.highest_root().clone();

        // S = {1}: beta is already antidominant there.
        let s1 = SimpleSubset::new(vec![1], 2).unwrap();
        let (v, len) = parabolic_antidominant(&g2, &s1, &beta).unwrap();
        assert_eq!(v, beta);
        assert_eq!(len, 0);

        // S = {2}: one reflection.
        let s2 = SimpleSubset::new(vec![2], 2).unwrap();
        let (v, len) = parabolic_antidominant(&g2, &s2, &beta).unwrap();
        assert_eq!(v, RootVec(vec![3, 1]));
        assert_eq!(len, 1);

        // Empty S: unchanged.
        let s0 = SimpleSubset::new(vec![], 2).unwrap();
        let (v, len) = parabolic_antidominant(&g2, &s0, &beta).unwrap();
        assert_eq!(v, beta);
        assert_eq!(len, 0);
    }

    #[test]
    fn bourbaki_identity_when_ordered() {
        let e6 = rs(Family::E, 6);
        let simples: Vec<RootVec> = (1..=6).map(|i| RootVec::simple(6, i)).collect();
        let (ty, perm) = bourbaki_reorder(&e6, &simples).unwrap();
        assert_eq!(ty.to_string(), "E6");
        assert_eq!(perm, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn bourbaki_detects_subsystem_types() {
        // Inside F4, the long roots psi_1, psi_2 span an A2.
        let f4 = rs(Family::F, 4);
        let (ty, perm) =
            bourbaki_reorder(&f4, &[RootVec::simple(4, 1), RootVec::simple(4, 2)]).unwrap();
        assert_eq!(ty.to_string(), "A2");
        assert_eq!(perm, vec![0, 1]);

        // psi_2, psi_3 in F4 pair as a B2 (long, short).
        let (ty, _) =
            bourbaki_reorder(&f4, &[RootVec::simple(4, 2), RootVec::simple(4, 3)]).unwrap();
        assert_eq!(ty.to_string(), "B2");
    }

    #[test]
    fn bourbaki_rejects_non_simple_system() {
        let a2 = rs(Family::A, 2);
        // psi_1 and psi_1 again: pairing +2 off-diagonal.
        let bad = vec![RootVec::simple(2, 1), RootVec::simple(2, 1)];
        assert!(bourbaki_reorder(&a2, &bad).is_err());
    }
}
