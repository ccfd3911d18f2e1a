//! The i-signature calculus: normal/good nodes, ε_i, crystal operators
//! ẽ_i and f̃_i, Jantzen–Seitz detection, one-step restriction composition
//! factors, and the good-removal BFS bounding the restriction depth a.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mullineux::mullineux;
use crate::partition::{
    p_regular_partitions_of, Node, NodeKind, Partition, PrimeChar, ResidueClass,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// Everything the signature calculus knows about one residue of one partition.
#[derive(Clone, Debug, Serialize)]
pub struct NormalNodeReport {
    pub residue: ResidueClass,
    /// i-addable/i-removable nodes with signs, in rim order bottom-left to
    /// top-right.
    pub signature: Vec<(Node, Sign)>,
    /// Fixed point of erasing adjacent "−+" pairs; always of shape +^a −^b.
    pub reduced: Vec<(Node, Sign)>,
    /// Nodes carrying the surviving minus signs, in signature order.
    pub normal_nodes: Vec<Node>,
    /// The leftmost normal node, when ε > 0.
    pub good_node: Option<Node>,
    /// The node of the last surviving plus, when one exists.
    pub cogood_node: Option<Node>,
    /// ε_i(λ) = number of i-normal nodes.
    pub epsilon: usize,
}

impl NormalNodeReport {
    pub fn signature_string(&self) -> String {
        self.signature
            .iter()
            .map(|(_, s)| if *s == Sign::Plus { '+' } else { '-' })
            .collect()
    }

    pub fn reduced_string(&self) -> String {
        self.reduced
            .iter()
            .map(|(_, s)| if *s == Sign::Plus { '+' } else { '-' })
            .collect()
    }
}

fn require_regular(lambda: &Partition, p: &PrimeChar) -> Result<()> {
    if lambda.is_p_regular(p) {
        Ok(())
    } else {
        Err(Error::not_regular(lambda, p))
    }
}

/// The i-signature and its reduction for a p-regular λ.
pub fn normal_report(lambda: &Partition, i: ResidueClass, p: &PrimeChar) -> Result<NormalNodeReport> {
    require_regular(lambda, p)?;
    let signature: Vec<(Node, Sign)> = lambda
        .boundary_nodes(p)
        .into_iter()
        .filter(|e| e.residue == i)
        .map(|e| {
            let sign = match e.kind {
                NodeKind::Addable => Sign::Plus,
                NodeKind::Removable => Sign::Minus,
            };
            (e.node, sign)
        })
        .collect();
    // Single left-to-right stack scan: a '+' cancels a '-' on top of the
    // stack (that pair is adjacent "−+" after earlier erasures).
    let mut reduced: Vec<(Node, Sign)> = Vec::new();
    for &(node, sign) in &signature {
        if sign == Sign::Plus && reduced.last().map(|&(_, s)| s) == Some(Sign::Minus) {
            reduced.pop();
        } else {
            reduced.push((node, sign));
        }
    }
    debug_assert!(reduced_shape_ok(&reduced));
    let normal_nodes: Vec<Node> = reduced
        .iter()
        .filter(|(_, s)| *s == Sign::Minus)
        .map(|(n, _)| *n)
        .collect();
    let good_node = normal_nodes.first().copied();
    let cogood_node = reduced
        .iter()
        .rev()
        .find(|(_, s)| *s == Sign::Plus)
        .map(|(n, _)| *n);
    let epsilon = normal_nodes.len();
    Ok(NormalNodeReport {
        residue: i,
        signature,
        reduced,
        normal_nodes,
        good_node,
        cogood_node,
        epsilon,
    })
}

fn reduced_shape_ok(reduced: &[(Node, Sign)]) -> bool {
    // +^a −^b: no − immediately followed by +
    reduced
        .windows(2)
        .all(|w| !(w[0].1 == Sign::Minus && w[1].1 == Sign::Plus))
}

pub fn epsilon(lambda: &Partition, i: ResidueClass, p: &PrimeChar) -> Result<usize> {
    Ok(normal_report(lambda, i, p)?.epsilon)
}

/// ẽ_i λ: removes the i-good node when ε_i(λ) > 0.
pub fn e_tilde(lambda: &Partition, i: ResidueClass, p: &PrimeChar) -> Result<Option<Partition>> {
    let report = normal_report(lambda, i, p)?;
    match report.good_node {
        None => Ok(None),
        Some(a) => {
            let smaller = lambda.remove_node(a)?;
            // Good-node removal preserves p-regularity; a violation here
            // means the signature calculus is broken.
            assert!(
                smaller.is_p_regular(p),
                "e_tilde produced a p-irregular partition {smaller:?} from {lambda:?}"
            );
            Ok(Some(smaller))
        }
    }
}

/// f̃_i λ: adds the i-cogood node when the reduced signature has a plus.
/// Section of ẽ_i: f̃_i(ẽ_i λ) = λ whenever ε_i(λ) > 0.
pub fn f_tilde(lambda: &Partition, i: ResidueClass, p: &PrimeChar) -> Result<Option<Partition>> {
    let report = normal_report(lambda, i, p)?;
    match report.cogood_node {
        None => Ok(None),
        Some(b) => {
            let bigger = lambda.add_node(b)?;
            assert!(
                bigger.is_p_regular(p),
                "f_tilde produced a p-irregular partition {bigger:?} from {lambda:?}"
            );
            Ok(Some(bigger))
        }
    }
}

/// The removable node with the smallest row index.
pub fn top_removable(lambda: &Partition) -> Option<Node> {
    let parts = lambda.parts();
    for (idx, &part) in parts.iter().enumerate() {
        let below = parts.get(idx + 1).copied().unwrap_or(0);
        if part > below {
            return Some(Node::new(idx as u32 + 1, part));
        }
    }
    None
}

/// True iff the top removable node is the unique normal node of λ over all
/// residues; equivalently the restriction to S_{n−1} is irreducible.
pub fn is_js(lambda: &Partition, p: &PrimeChar) -> Result<bool> {
    require_regular(lambda, p)?;
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mut total = 0usize;
    let mut only_good = None;
    for i in p.residues() {
        let rep = normal_report(lambda, i, p)?;
        total += rep.epsilon;
        if total > 1 {
            return Ok(false);
        }
        if rep.epsilon == 1 {
            only_good = rep.good_node;
        }
    }
    Ok(total == 1 && only_good == top_removable(lambda))
}

/// Composition factors of the restriction of D^λ to S_{n−1}, with
/// multiplicities: each i-normal node A with λ_A p-regular contributes
/// (λ_A, 1 + #{i-normal nodes strictly above A}).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionFactors {
    pub entries: Vec<(Partition, u32)>,
}

pub fn restriction_factors(lambda: &Partition, p: &PrimeChar) -> Result<RestrictionFactors> {
    require_regular(lambda, p)?;
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mut entries = Vec::new();
    for i in p.residues() {
        let rep = normal_report(lambda, i, p)?;
        for (idx, a) in rep.normal_nodes.iter().enumerate() {
            let smaller = lambda.remove_node(*a)?;
            if !smaller.is_p_regular(p) {
                continue;
            }
            // Normal nodes sit in distinct rows and appear in signature
            // order bottom to top, so the nodes above A are exactly the
            // later ones.
            let above = rep.normal_nodes.len() - idx - 1;
            debug_assert!(rep.normal_nodes[idx + 1..].iter().all(|b| b.row < a.row));
            entries.push((smaller, above as u32 + 1));
        }
    }
    entries.sort();
    Ok(RestrictionFactors { entries })
}

/// Minimal a ≥ 1 such that some chain of a good-node removals reaches a
/// partition κ of n−a with dim D^κ = 1, i.e. κ = (n−a) or (n−a)^M.
/// Breadth-first search over ẽ_i images; an upper bound on the true
/// restriction depth of Theorem-B type.
pub fn a_crystal(lambda: &Partition, p: &PrimeChar) -> Result<u32> {
    require_regular(lambda, p)?;
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let n = lambda.n();
    let mut level: HashSet<Partition> = HashSet::new();
    level.insert(lambda.clone());
    for a in 1..=n {
        let mut next: HashSet<Partition> = HashSet::new();
        for la in &level {
            for i in p.residues() {
                if let Some(smaller) = e_tilde(la, i, p)? {
                    next.insert(smaller);
                }
            }
        }
        let m = n - a;
        let trivial = Partition::single(m);
        let sign = mullineux(&trivial, p)?;
        if next.contains(&trivial) || next.contains(&sign) {
            return Ok(a);
        }
        level = next;
    }
    unreachable!("good-removal chains always reach the empty partition")
}

/// The crystal graph on all p-regular partitions of size ≤ n, with
/// residue-labeled ẽ_i edges. Vertices are ordered by (size, lex on parts).
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub p: PrimeChar,
    pub vertices: Vec<Partition>,
    /// (from index, to index, residue value)
    pub edges: Vec<(usize, usize, u32)>,
}

pub fn crystal_graph(n: u32, p: &PrimeChar) -> Result<CrystalGraph> {
    let mut vertices = Vec::new();
    for m in 0..=n {
        vertices.extend(p_regular_partitions_of(m, p));
    }
    let index: HashMap<&Partition, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut edges = Vec::new();
    for (from, la) in vertices.iter().enumerate() {
        for i in p.residues() {
            if let Some(smaller) = e_tilde(la, i, p)? {
                let to = *index.get(&smaller).expect("e_tilde image of a smaller size is in the vertex set");
                edges.push((from, to, i.value()));
            }
        }
    }
    Ok(CrystalGraph {
        p: *p,
        vertices,
        edges,
    })
}

impl CrystalGraph {
    /// DOT output; edge label = residue.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph crystal_p{} {{", self.p.p()).unwrap();
        for v in &self.vertices {
            writeln!(out, "  \"{}\";", v).unwrap();
        }
        for &(from, to, res) in &self.edges {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[from], self.vertices[to], res
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// JSON adjacency list: vertices as partition strings, edges by index.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.p.p(),
            "vertices": self.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(from, to, residue)| {
                serde_json::json!({"from": from, "to": to, "residue": residue})
            }).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pc(p: u32) -> PrimeChar {
        PrimeChar::new(p).unwrap()
    }

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn res(v: u32, p: &PrimeChar) -> ResidueClass {
        p.residue(v as i64)
    }

    #[test]
    fn normal_report_2_1_p2() {
        let p = pc(2);
        let rep = normal_report(&pt("2,1"), res(1, &p), &p).unwrap();
        assert_eq!(rep.signature_string(), "--");
        assert_eq!(rep.reduced_string(), "--");
        assert_eq!(rep.epsilon, 2);
        assert_eq!(rep.good_node, Some(Node::new(2, 1)));
    }

    #[test]
    fn normal_report_5_1_p3() {
        let p = pc(3);
        let rep = normal_report(&pt("5,1"), res(2, &p), &p).unwrap();
        assert_eq!(rep.signature_string(), "-+");
        assert_eq!(rep.reduced_string(), "");
        assert_eq!(rep.epsilon, 0);
        assert_eq!(rep.good_node, None);

        let rep = normal_report(&pt("5,1"), res(1, &p), &p).unwrap();
        assert_eq!(rep.signature_string(), "+-");
        assert_eq!(rep.reduced_string(), "+-");
        assert_eq!(rep.epsilon, 1);
        assert_eq!(rep.good_node, Some(Node::new(1, 5)));
        assert_eq!(rep.cogood_node, Some(Node::new(3, 1)));
    }

    #[test]
    fn normal_report_rejects_irregular() {
        let p = pc(2);
        assert!(matches!(
            normal_report(&pt("1,1"), res(0, &p), &p),
            Err(Error::NotRegular { .. })
        ));
    }

    #[test]
    fn e_tilde_examples() {
        let p3 = pc(3);
        assert_eq!(
            e_tilde(&pt("5,1"), res(1, &p3), &p3).unwrap(),
            Some(pt("4,1"))
        );
        let p2 = pc(2);
        assert_eq!(e_tilde(&pt("2,1"), res(1, &p2), &p2).unwrap(), Some(pt("2")));
        assert_eq!(e_tilde(&pt("5,1"), res(0, &p3), &p3).unwrap(), None);
    }

    #[test]
    fn f_tilde_examples() {
        let p = pc(3);
        assert_eq!(f_tilde(&pt("3,1"), res(0, &p), &p).unwrap(), Some(pt("4,1")));
        assert_eq!(f_tilde(&pt("4,1"), res(0, &p), &p).unwrap(), Some(pt("4,2")));
        let e = e_tilde(&pt("5,1"), res(1, &p), &p).unwrap().unwrap();
        assert_eq!(f_tilde(&e, res(1, &p), &p).unwrap(), Some(pt("5,1")));
    }

    #[test]
    fn js_examples() {
        let p = pc(3);
        assert!(!is_js(&pt("8,5"), &p).unwrap());
        for n in 1..=12u32 {
            assert!(is_js(&Partition::single(n), &p).unwrap());
        }
        assert!(is_js(&pt("5,1"), &p).unwrap());
        // ε_1 = 1 is the only nonzero ε of (5,1)
        assert_eq!(epsilon(&pt("5,1"), res(0, &p), &p).unwrap(), 0);
        assert_eq!(epsilon(&pt("5,1"), res(1, &p), &p).unwrap(), 1);
        assert_eq!(epsilon(&pt("5,1"), res(2, &p), &p).unwrap(), 0);
        assert!(matches!(
            is_js(&Partition::empty(), &p),
            Err(Error::EmptyPartition)
        ));
    }

    #[test]
    fn restriction_factors_examples() {
        let p2 = pc(2);
        assert_eq!(
            restriction_factors(&pt("2,1"), &p2).unwrap().entries,
            vec![(pt("2"), 2)]
        );
        let p3 = pc(3);
        assert_eq!(
            restriction_factors(&pt("5,1"), &p3).unwrap().entries,
            vec![(pt("4,1"), 1)]
        );
        assert_eq!(
            restriction_factors(&pt("8,5"), &p3).unwrap().entries,
            vec![(pt("7,5"), 1), (pt("8,4"), 1)]
        );
    }

    #[test]
    fn a_crystal_examples() {
        let p3 = pc(3);
        for n in 1..=10u32 {
            assert_eq!(a_crystal(&Partition::single(n), &p3).unwrap(), 1);
        }
        assert_eq!(a_crystal(&pt("5,1"), &p3).unwrap(), 2);
        assert_eq!(a_crystal(&pt("2,1"), &pc(2)).unwrap(), 1);
    }

    #[test]
    fn a_crystal_n_minus_1_1() {
        // a = 2 whenever p | n, p ≥ 3, for λ = (n−1,1) — except the
        // degenerate n = p = 3, where (2,1) is one good removal away from
        // (1,1), the sign label of S_2, so a = 1.
        assert_eq!(a_crystal(&pt("2,1"), &pc(3)).unwrap(), 1);
        for p in [3u32, 5] {
            let p = pc(p);
            for n in (4..=12u32).filter(|n| n % p.p() == 0) {
                let la = Partition::new(vec![n - 1, 1]).unwrap();
                assert_eq!(a_crystal(&la, &p).unwrap(), 2, "p={} n={}", p.p(), n);
            }
        }
    }

    #[test]
    fn crystal_graph_small() {
        let p = pc(2);
        let g = crystal_graph(1, &p).unwrap();
        assert_eq!(g.vertices, vec![Partition::empty(), pt("1")]);
        assert_eq!(g.edges, vec![(1, 0, 0)]);

        let g = crystal_graph(2, &p).unwrap();
        assert_eq!(g.vertices, vec![Partition::empty(), pt("1"), pt("2")]);
        assert_eq!(g.edges, vec![(1, 0, 0), (2, 1, 1)]);

        let g = crystal_graph(0, &pc(5)).unwrap();
        assert_eq!(g.vertices, vec![Partition::empty()]);
        assert!(g.edges.is_empty());
    }

    #[test]
    fn crystal_section_exhaustive() {
        // ε_i(λ) > 0 ⟹ f̃_i(ẽ_i λ) = λ and ε_i(ẽ_i λ) = ε_i(λ) − 1
        for p in [2u32, 3, 5] {
            let p = pc(p);
            for n in 1..=9u32 {
                for la in p_regular_partitions_of(n, &p) {
                    for i in p.residues() {
                        let eps = epsilon(&la, i, &p).unwrap();
                        if eps > 0 {
                            let e = e_tilde(&la, i, &p).unwrap().unwrap();
                            assert_eq!(f_tilde(&e, i, &p).unwrap(), Some(la.clone()));
                            assert_eq!(epsilon(&e, i, &p).unwrap(), eps - 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn js_iff_single_factor() {
        for p in [2u32, 3, 5] {
            let p = pc(p);
            for n in 1..=9u32 {
                for la in p_regular_partitions_of(n, &p) {
                    let js = is_js(&la, &p).unwrap();
                    let fac = restriction_factors(&la, &p).unwrap();
                    let single = fac.entries.len() == 1
                        && fac.entries[0].1 == 1
                        && fac.entries[0].0
                            == la.remove_node(top_removable(&la).unwrap()).unwrap();
                    assert_eq!(js, single, "{la:?} p={}", p.p());
                }
            }
        }
    }

    // Independent oracle for the reduction: erase "−+" pairs in a random
    // order until none remain, and compare with the stack scan.
    fn erase_random(sig: &[(Node, Sign)], order_seed: u64) -> Vec<(Node, Sign)> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(order_seed);
        let mut cur: Vec<(Node, Sign)> = sig.to_vec();
        loop {
            let pairs: Vec<usize> = cur
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[0].1 == Sign::Minus && w[1].1 == Sign::Plus)
                .map(|(k, _)| k)
                .collect();
            if pairs.is_empty() {
                return cur;
            }
            let k = pairs[rng.gen_range(0..pairs.len())];
            cur.drain(k..k + 2);
        }
    }

    proptest! {
        #[test]
        fn erasure_order_independent(n in 1u32..11, pidx in 0usize..3, seed in any::<u64>()) {
            let p = pc([2u32, 3, 5][pidx]);
            for la in p_regular_partitions_of(n, &p) {
                for i in p.residues() {
                    let rep = normal_report(&la, i, &p).unwrap();
                    let alt = erase_random(&rep.signature, seed);
                    prop_assert_eq!(&rep.reduced, &alt);
                    // reduced shape is +^a −^b
                    prop_assert!(super::reduced_shape_ok(&rep.reduced));
                }
            }
        }
    }
}
