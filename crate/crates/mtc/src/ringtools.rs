//! Fusion-ring tooling: validation, Frobenius-Perron dimensions,
//! isomorphism search, fusion graphs, and serialization.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::scalar::Real;
use crate::tol;

/// A based fusion ring: display labels, a unit, a duality permutation,
/// and the multiplicity tensor `N^Z_{XY}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    rank: usize,
    /// Flat row-major tensor: `n[(x*rank + y)*rank + z] = N^z_{xy}`.
    n: Vec<u32>,
}

impl FusionRing {
    pub fn new(labels: Vec<String>, unit: usize, dual: Vec<usize>, n: Vec<u32>) -> Self {
        let rank = labels.len();
        assert!(unit < rank, "unit index out of range");
        assert_eq!(dual.len(), rank, "duality permutation length mismatch");
        assert_eq!(n.len(), rank * rank * rank, "tensor size mismatch");
        FusionRing { labels, unit, dual, rank, n }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn dual(&self) -> &[usize] {
        &self.dual
    }

    pub fn dual_of(&self, i: usize) -> usize {
        self.dual[i]
    }

    /// Multiplicity of `z` in `x ⊗ y`.
    pub fn n(&self, x: usize, y: usize, z: usize) -> u32 {
        self.n[(x * self.rank + y) * self.rank + z]
    }

    /// The row `N^._{xy}` as a slice indexed by the target label.
    pub fn row(&self, x: usize, y: usize) -> &[u32] {
        let base = (x * self.rank + y) * self.rank;
        &self.n[base..base + self.rank]
    }

    /// Nonzero part of `x ⊗ y` as `(target, multiplicity)` pairs.
    pub fn tensor(&self, x: usize, y: usize) -> Vec<(usize, u32)> {
        self.row(x, y)
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(z, &m)| (z, m))
            .collect()
    }
}

/// One structural check with an optional first counterexample.
#[derive(Debug, Clone)]
pub struct RingCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

/// Result of [`validate_ring`].
#[derive(Debug, Clone)]
pub struct RingReport {
    pub checks: Vec<RingCheck>,
}

impl RingReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&RingCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// First failing check, if any.
    pub fn first_failure(&self) -> Option<&RingCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Checks every fusion-ring axiom, reporting the first counterexample of
/// each failing one: unit neutrality, duality, commutativity,
/// associativity, dual-invariance of the tensor, and Frobenius
/// reciprocity.
pub fn validate_ring(fr: &FusionRing) -> RingReport {
    let r = fr.rank;
    let lbl = |i: usize| fr.label(i).to_string();
    let mut checks = Vec::new();

    // Duality permutation must be an involution before being used below.
    let perm_ok = fr.dual.iter().all(|&d| d < r) && {
        let mut seen = vec![false; r];
        fr.dual.iter().all(|&d| !std::mem::replace(&mut seen[d], true))
    };
    let involution = perm_ok && (0..r).all(|i| fr.dual[fr.dual[i]] == i);
    checks.push(RingCheck {
        name: "dual-involution",
        passed: involution,
        detail: (!involution).then(|| "duality is not an involutive permutation".to_string()),
    });

    let mut unit_fail = None;
    'unit: for y in 0..r {
        for z in 0..r {
            let expect = u32::from(y == z);
            if fr.n(fr.unit, y, z) != expect || fr.n(y, fr.unit, z) != expect {
                unit_fail = Some(format!(
                    "1 ⊗ {} fails at target {}: left {}, right {}, expected {}",
                    lbl(y),
                    lbl(z),
                    fr.n(fr.unit, y, z),
                    fr.n(y, fr.unit, z),
                    expect
                ));
                break 'unit;
            }
        }
    }
    checks.push(RingCheck { name: "unit-neutral", passed: unit_fail.is_none(), detail: unit_fail });

    let mut dual_unit_fail = None;
    if involution {
        'du: for x in 0..r {
            for y in 0..r {
                let expect = u32::from(y == fr.dual[x]);
                if fr.n(x, y, fr.unit) != expect {
                    dual_unit_fail = Some(format!(
                        "N^1[{}, {}] = {}, expected {}",
                        lbl(x),
                        lbl(y),
                        fr.n(x, y, fr.unit),
                        expect
                    ));
                    break 'du;
                }
            }
        }
    }
    checks.push(RingCheck {
        name: "duality-unit",
        passed: involution && dual_unit_fail.is_none(),
        detail: dual_unit_fail,
    });

    let mut comm_fail = None;
    'comm: for x in 0..r {
        for y in (x + 1)..r {
            for z in 0..r {
                if fr.n(x, y, z) != fr.n(y, x, z) {
                    comm_fail = Some(format!(
                        "N^{}[{}, {}] = {} but N^{}[{}, {}] = {}",
                        lbl(z),
                        lbl(x),
                        lbl(y),
                        fr.n(x, y, z),
                        lbl(z),
                        lbl(y),
                        lbl(x),
                        fr.n(y, x, z)
                    ));
                    break 'comm;
                }
            }
        }
    }
    checks.push(RingCheck { name: "commutative", passed: comm_fail.is_none(), detail: comm_fail });

    // Associativity: sum_w N^w_{xy} N^v_{wz} = sum_w N^w_{yz} N^v_{xw}.
    let mut assoc_fail = None;
    let mut lhs = vec![0u64; r];
    let mut rhs = vec![0u64; r];
    'assoc: for x in 0..r {
        for y in 0..r {
            let a = fr.row(x, y);
            for z in 0..r {
                lhs.iter_mut().for_each(|v| *v = 0);
                rhs.iter_mut().for_each(|v| *v = 0);
                for w in 0..r {
                    let aw = u64::from(a[w]);
                    if aw != 0 {
                        for (l, &m) in lhs.iter_mut().zip(fr.row(w, z)) {
                            *l += aw * u64::from(m);
                        }
                    }
                    let bw = u64::from(fr.n(y, z, w));
                    if bw != 0 {
                        for (rv, &m) in rhs.iter_mut().zip(fr.row(x, w)) {
                            *rv += bw * u64::from(m);
                        }
                    }
                }
                if lhs != rhs {
                    let v = (0..r).find(|&v| lhs[v] != rhs[v]).unwrap();
                    assoc_fail = Some(format!(
                        "(({} ⊗ {}) ⊗ {} vs {} ⊗ ({} ⊗ {})) differ at {}: {} vs {}",
                        lbl(x),
                        lbl(y),
                        lbl(z),
                        lbl(x),
                        lbl(y),
                        lbl(z),
                        lbl(v),
                        lhs[v],
                        rhs[v]
                    ));
                    break 'assoc;
                }
            }
        }
    }
    checks.push(RingCheck { name: "associative", passed: assoc_fail.is_none(), detail: assoc_fail });

    let mut dual_tensor_fail = None;
    if involution {
        'dt: for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    let other = fr.n(fr.dual[x], fr.dual[y], fr.dual[z]);
                    if fr.n(x, y, z) != other {
                        dual_tensor_fail = Some(format!(
                            "N^{}[{}, {}] = {} but its dual triple gives {}",
                            lbl(z),
                            lbl(x),
                            lbl(y),
                            fr.n(x, y, z),
                            other
                        ));
                        break 'dt;
                    }
                }
            }
        }
    }
    checks.push(RingCheck {
        name: "duality-compatible",
        passed: involution && dual_tensor_fail.is_none(),
        detail: dual_tensor_fail,
    });

    let mut frob_fail = None;
    if involution {
        'fr: for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    let moved = fr.n(fr.dual[x], z, y);
                    if fr.n(x, y, z) != moved {
                        frob_fail = Some(format!(
                            "N^{}[{}, {}] = {} but N^{}[{}, {}] = {}",
                            lbl(z),
                            lbl(x),
                            lbl(y),
                            fr.n(x, y, z),
                            lbl(y),
                            lbl(fr.dual[x]),
                            lbl(z),
                            moved
                        ));
                        break 'fr;
                    }
                }
            }
        }
    }
    checks.push(RingCheck {
        name: "frobenius-reciprocity",
        passed: involution && frob_fail.is_none(),
        detail: frob_fail,
    });

    RingReport { checks }
}

/// Frobenius-Perron dimensions: the unique strictly positive vector `d`
/// with `d_unit = 1` and `sum_z N^z_{xy} d_z = d_x d_y`, found as the
/// Perron eigenvector of the total fusion operator.
pub fn fp_dims<F: Real>(fr: &FusionRing) -> Result<Vec<F>, Error> {
    let r = fr.rank;
    // Total fusion operator R[y][z] = sum_x N^z_{xy}; strictly positive
    // for a valid based ring, so power iteration converges to the Perron
    // eigenvector.
    let mut op = vec![F::zero(); r * r];
    for x in 0..r {
        for y in 0..r {
            for (z, &m) in fr.row(x, y).iter().enumerate() {
                op[y * r + z] += F::of(f64::from(m));
            }
        }
    }

    let mut v = vec![F::one(); r];
    let mut next = vec![F::zero(); r];
    let settle = F::epsilon() * F::of(16.0);
    let mut converged = false;
    for _ in 0..20_000 {
        for (y, slot) in next.iter_mut().enumerate() {
            let mut acc = F::zero();
            for z in 0..r {
                acc += op[y * r + z] * v[z];
            }
            *slot = acc;
        }
        let norm = next.iter().fold(F::zero(), |m, x| m.max(x.abs()));
        if !(norm > F::zero()) {
            return Err(Error::NoPositiveEigenvector("total fusion operator annihilated the iterate".into()));
        }
        let mut change = F::zero();
        for (n, vv) in next.iter_mut().zip(v.iter_mut()) {
            *n = *n / norm;
            change = change.max((*n - *vv).abs());
            *vv = *n;
        }
        if change <= settle {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoPositiveEigenvector("power iteration did not settle".into()));
    }

    let at_unit = v[fr.unit];
    if !(at_unit > F::zero()) {
        return Err(Error::NoPositiveEigenvector("eigenvector vanishes at the unit".into()));
    }
    let dims: Vec<F> = v.iter().map(|&x| x / at_unit).collect();
    if let Some(i) = dims.iter().position(|&d| !(d > F::zero())) {
        return Err(Error::NoPositiveEigenvector(format!(
            "component {} of the eigenvector is not positive",
            fr.label(i)
        )));
    }

    // The defining equation must hold, otherwise the ring was invalid.
    let mut worst = F::zero();
    for x in 0..r {
        for y in 0..r {
            let mut acc = F::zero();
            for (z, &m) in fr.row(x, y).iter().enumerate() {
                acc += F::of(f64::from(m)) * dims[z];
            }
            worst = worst.max((acc - dims[x] * dims[y]).abs());
        }
    }
    if worst.as_f64() > tol::EIGEN_RESIDUAL {
        return Err(Error::NoPositiveEigenvector(format!(
            "dimension equation residual {:.3e}",
            worst.as_f64()
        )));
    }
    Ok(dims)
}

/// Options for [`ring_isomorphism_with`].
#[derive(Debug, Clone, Copy)]
pub struct IsoOptions {
    /// Maximum number of candidate assignments tried before giving up.
    pub budget: u64,
    /// Seed for shuffling candidate orders (tie-breaks only; the result
    /// is a valid isomorphism for every seed).
    pub seed: u64,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions { budget: 10_000_000, seed: 0 }
    }
}

/// Searches for a unit- and duality-preserving bijection of labels
/// carrying the tensor of `a` onto the tensor of `b`, with default options.
pub fn ring_isomorphism(a: &FusionRing, b: &FusionRing) -> Result<Option<Vec<usize>>, Error> {
    ring_isomorphism_with(a, b, IsoOptions::default())
}

/// As [`ring_isomorphism`], with an explicit budget and shuffle seed.
/// Returns `perm` with `perm[i] = j` meaning label `i` of `a` maps to
/// label `j` of `b`, or `None` when the rings are definitively
/// non-isomorphic.
pub fn ring_isomorphism_with(
    a: &FusionRing,
    b: &FusionRing,
    opts: IsoOptions,
) -> Result<Option<Vec<usize>>, Error> {
    if a.rank != b.rank {
        return Ok(None);
    }
    let r = a.rank;
    let dims_a: Vec<f64> = fp_dims(a)?;
    let dims_b: Vec<f64> = fp_dims(b)?;

    // Discrete part of the per-label invariant; dimensions are compared
    // with a tolerance separately.
    let fingerprint = |fr: &FusionRing, i: usize| -> (bool, u32, Vec<u32>, Vec<u32>) {
        let self_dual = fr.dual[i] == i;
        let diag = fr.n(i, i, i);
        let mut square: Vec<u32> = fr.row(i, i).to_vec();
        square.sort_unstable();
        let mut all: Vec<u32> = (0..r).flat_map(|y| fr.row(i, y).iter().copied()).collect();
        all.sort_unstable();
        (self_dual, diag, square, all)
    };
    let fp_a: Vec<_> = (0..r).map(|i| fingerprint(a, i)).collect();
    let fp_b: Vec<_> = (0..r).map(|i| fingerprint(b, i)).collect();
    let dim_close = |x: f64, y: f64| (x - y).abs() <= 1e-6 * (1.0 + x.abs());

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(r);
    for i in 0..r {
        let mut c: Vec<usize> = (0..r)
            .filter(|&j| dim_close(dims_a[i], dims_b[j]) && fp_a[i] == fp_b[j])
            .collect();
        if c.is_empty() {
            return Ok(None);
        }
        c.shuffle(&mut rng);
        candidates.push(c);
    }

    // Canonical processing order: by (dimension, self-dual flag, diagonal
    // multiplicity); ties keep index order for determinism.
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&i, &j| {
        dims_a[i]
            .partial_cmp(&dims_a[j])
            .unwrap()
            .then(fp_a[i].0.cmp(&fp_a[j].0))
            .then(fp_a[i].1.cmp(&fp_a[j].1))
            .then(i.cmp(&j))
    });

    let mut assigned: Vec<Option<usize>> = vec![None; r];
    let mut used: Vec<bool> = vec![false; r];
    let mut placed: Vec<usize> = Vec::with_capacity(r);
    let mut budget = opts.budget;

    fn consistent(a: &FusionRing, b: &FusionRing, assigned: &[Option<usize>], placed: &[usize], x: usize, bx: usize) -> bool {
        for &p in placed {
            let bp = assigned[p].unwrap();
            for &q in placed {
                let bq = assigned[q].unwrap();
                if a.n(x, p, q) != b.n(bx, bp, bq)
                    || a.n(p, x, q) != b.n(bp, bx, bq)
                    || a.n(p, q, x) != b.n(bp, bq, bx)
                {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        a: &FusionRing,
        b: &FusionRing,
        order: &[usize],
        candidates: &[Vec<usize>],
        pos: usize,
        assigned: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        placed: &mut Vec<usize>,
        budget: &mut u64,
    ) -> Result<bool, Error> {
        if pos == order.len() {
            return Ok(true);
        }
        let x = order[pos];
        for &bx in &candidates[x] {
            if *budget == 0 {
                return Err(Error::SearchBudgetExceeded(0));
            }
            *budget -= 1;
            if used[bx] {
                continue;
            }
            if (x == a.unit) != (bx == b.unit) {
                continue;
            }
            let dx = a.dual[x];
            if let Some(bdx) = assigned[dx] {
                if bdx != b.dual[bx] {
                    continue;
                }
            }
            assigned[x] = Some(bx);
            used[bx] = true;
            placed.push(x);
            // With x in `placed` this covers every triple over assigned
            // labels that involves x, including (x, x, x).
            let ok = consistent(a, b, assigned, placed, x, bx)
                && search(a, b, order, candidates, pos + 1, assigned, used, placed, budget)?;
            if ok {
                return Ok(true);
            }
            placed.pop();
            used[bx] = false;
            assigned[x] = None;
        }
        Ok(false)
    }

    let found = match search(a, b, &order, &candidates, 0, &mut assigned, &mut used, &mut placed, &mut budget) {
        Ok(f) => f,
        Err(Error::SearchBudgetExceeded(_)) => return Err(Error::SearchBudgetExceeded(opts.budget)),
        Err(e) => return Err(e),
    };
    if !found {
        return Ok(None);
    }
    let perm: Vec<usize> = assigned.into_iter().map(|o| o.unwrap()).collect();

    // Full verification: the search already checked everything, but the
    // guarantee should not depend on pruning details.
    debug_assert!(is_isomorphism(a, b, &perm));
    if !is_isomorphism(a, b, &perm) {
        return Err(Error::InconsistentRing("isomorphism search returned an invalid map".into()));
    }
    Ok(Some(perm))
}

/// Checks that `perm` carries `a` onto `b` exactly.
pub fn is_isomorphism(a: &FusionRing, b: &FusionRing, perm: &[usize]) -> bool {
    let r = a.rank;
    if b.rank != r || perm.len() != r {
        return false;
    }
    let mut seen = vec![false; r];
    for &p in perm {
        if p >= r || std::mem::replace(&mut seen[p], true) {
            return false;
        }
    }
    if perm[a.unit] != b.unit {
        return false;
    }
    if (0..r).any(|i| perm[a.dual[i]] != b.dual[perm[i]]) {
        return false;
    }
    for x in 0..r {
        for y in 0..r {
            for z in 0..r {
                if a.n(x, y, z) != b.n(perm[x], perm[y], perm[z]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Applies a relabeling: label `i` of the input becomes label `perm[i]`
/// of the output. The result is isomorphic to the input by construction.
pub fn relabel(fr: &FusionRing, perm: &[usize]) -> FusionRing {
    let r = fr.rank;
    assert_eq!(perm.len(), r, "permutation length mismatch");
    let mut seen = vec![false; r];
    for &p in perm {
        assert!(p < r && !std::mem::replace(&mut seen[p], true), "not a permutation");
    }
    let mut labels = vec![String::new(); r];
    let mut dual = vec![0usize; r];
    for i in 0..r {
        labels[perm[i]] = fr.labels[i].clone();
        dual[perm[i]] = perm[fr.dual[i]];
    }
    let mut n = vec![0u32; r * r * r];
    for x in 0..r {
        for y in 0..r {
            for z in 0..r {
                n[(perm[x] * r + perm[y]) * r + perm[z]] = fr.n(x, y, z);
            }
        }
    }
    FusionRing::new(labels, perm[fr.unit], dual, n)
}

/// A fusion graph: the directed multigraph of multiplication by one
/// generator, `y -> z` with weight `N^z_{gen, y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionGraph {
    pub vertex_labels: Vec<String>,
    pub generator: usize,
    /// `(source, target, multiplicity)`, multiplicity > 0, sorted.
    pub edges: Vec<(usize, usize, u32)>,
}

/// Builds the fusion graph of multiplication by `generator`.
pub fn fusion_graph(fr: &FusionRing, generator: usize) -> FusionGraph {
    assert!(generator < fr.rank, "generator index out of range");
    let mut edges = Vec::new();
    for y in 0..fr.rank {
        for z in 0..fr.rank {
            let m = fr.n(generator, y, z);
            if m > 0 {
                edges.push((y, z, m));
            }
        }
    }
    FusionGraph { vertex_labels: fr.labels.clone(), generator, edges }
}

impl FusionGraph {
    /// DOT document: one node per label, multiplicity-labeled directed
    /// edges. Node ids are stable (`v0`, `v1`, ...) with the display
    /// string as the label attribute.
    pub fn to_dot(&self) -> String {
        let escape = |s: &str| s.replace('\\', "\\\\").replace('"', "\\\"");
        let mut out = String::from("digraph fusion {\n  rankdir=LR;\n");
        for (i, l) in self.vertex_labels.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", i, escape(l)));
        }
        for &(y, z, m) in &self.edges {
            out.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", y, z, m));
        }
        out.push_str("}\n");
        out
    }

    /// Connectivity of the underlying undirected graph over all vertices.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_labels.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(y, z, _) in &self.edges {
            adj[y].push(z);
            adj[z].push(y);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }
}

/// Output formats for [`export_ring`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Text,
    /// DOT fusion graph of multiplication by the given label index.
    Dot { generator: usize },
}

#[derive(Serialize, Deserialize)]
struct RingDoc {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    #[serde(rename = "N")]
    n: Vec<(usize, usize, usize, u32)>,
}

/// Serializes a ring. JSON carries the exact integer data and
/// round-trips through [`import_ring_json`]; text lists every product;
/// DOT renders the fusion graph of one generator.
pub fn export_ring(fr: &FusionRing, format: ExportFormat) -> String {
    match format {
        ExportFormat::Json => {
            let mut quads = Vec::new();
            for x in 0..fr.rank {
                for y in 0..fr.rank {
                    for (z, &m) in fr.row(x, y).iter().enumerate() {
                        if m > 0 {
                            quads.push((x, y, z, m));
                        }
                    }
                }
            }
            let doc = RingDoc {
                labels: fr.labels.clone(),
                unit: fr.unit,
                dual: fr.dual.clone(),
                n: quads,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("ring serialization cannot fail");
            s.push('\n');
            s
        }
        ExportFormat::Text => {
            let mut out = String::new();
            for x in 0..fr.rank {
                for y in 0..fr.rank {
                    let terms: Vec<String> = fr
                        .tensor(x, y)
                        .into_iter()
                        .map(|(z, m)| {
                            if m == 1 {
                                fr.label(z).to_string()
                            } else {
                                format!("{}·{}", m, fr.label(z))
                            }
                        })
                        .collect();
                    let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                    out.push_str(&format!("{} ⊗ {} = {}\n", fr.label(x), fr.label(y), rhs));
                }
            }
            out
        }
        ExportFormat::Dot { generator } => fusion_graph(fr, generator).to_dot(),
    }
}

/// Parses the JSON produced by [`export_ring`] back into a ring.
/// Integer data round-trips exactly.
pub fn import_ring_json(text: &str) -> Result<FusionRing, Error> {
    let doc: RingDoc =
        serde_json::from_str(text).map_err(|e| Error::MalformedRing(e.to_string()))?;
    let r = doc.labels.len();
    if doc.unit >= r {
        return Err(Error::MalformedRing("unit index out of range".into()));
    }
    if doc.dual.len() != r {
        return Err(Error::MalformedRing("duality permutation length mismatch".into()));
    }
    let mut seen = vec![false; r];
    for &d in &doc.dual {
        if d >= r || std::mem::replace(&mut seen[d], true) {
            return Err(Error::MalformedRing("duality is not a permutation".into()));
        }
    }
    let mut n = vec![0u32; r * r * r];
    for &(x, y, z, m) in &doc.n {
        if x >= r || y >= r || z >= r {
            return Err(Error::MalformedRing(format!("index out of range in quadruple ({x},{y},{z},{m})")));
        }
        if m == 0 {
            return Err(Error::MalformedRing("explicit zero multiplicity".into()));
        }
        let slot = &mut n[(x * r + y) * r + z];
        if *slot != 0 {
            return Err(Error::MalformedRing(format!("duplicate quadruple ({x},{y},{z})")));
        }
        *slot = m;
    }
    Ok(FusionRing::new(doc.labels, doc.unit, doc.dual, n))
}

/// Groups near-equal dimensions and counts them; used by tests comparing
/// dimension multisets.
pub fn dim_multiset_matches(dims: &[f64], expected: &[f64], tol_abs: f64) -> bool {
    if dims.len() != expected.len() {
        return false;
    }
    let mut got: Vec<f64> = dims.to_vec();
    let mut want: Vec<f64> = expected.to_vec();
    got.sort_by(|a, b| a.partial_cmp(b).unwrap());
    want.sort_by(|a, b| a.partial_cmp(b).unwrap());
    got.iter().zip(&want).all(|(g, w)| (g - w).abs() <= tol_abs)
}

/// Builds a ring directly from sparse data; convenient in tests.
pub fn ring_from_sparse(
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    quads: &[(usize, usize, usize, u32)],
) -> FusionRing {
    let r = labels.len();
    let mut n = vec![0u32; r * r * r];
    for &(x, y, z, m) in quads {
        n[(x * r + y) * r + z] = m;
    }
    FusionRing::new(labels, unit, dual, n)
}
