//! The fusion ring of the Z/2 permutation gauging of `C ⊠ C`.
//!
//! For modular input `C` with `n` simples, the gauged category has
//! `n(n-1)/2 + 4n` simples of three shapes:
//!
//! * off-diagonal pairs `[x,y]` with `x < y`, of dimension `2 d_x d_y`;
//! * diagonal objects `[x,x]±`, of dimension `d_x²`;
//! * twist-sector objects `x̂±`, of dimension `d_x √D`.
//!
//! Every multiplicity of the gauged ring reduces, by rigidity moves, to
//! one of three closed-form cases in the modular data of `C`
//! ([`mult_case1`], [`mult_case2`], [`mult_case3`]); the third case has
//! an independent second route through the congruence-representation
//! matrix `P = T̂^{1/2} S T̂² S T̂^{1/2}` ([`mult_case3_p`]), and agreement
//! of the two routes is a strong end-to-end consistency check.
//!
//! The sign halves of `[x,x]±` and `x̂±` depend on a once-and-for-all
//! square root of each twist ([`SqrtTwistChoice`]); flipping any one root
//! relabels `x̂+ ↔ x̂-` and nothing else.

use std::collections::HashMap;

use num_complex::Complex;

use crate::error::Error;
use crate::mat::CMat;
use crate::modular::{derived_scalars, verlinde, DerivedScalars, ModularData};
use crate::ringtools::{self, validate_ring, FusionGraph, FusionRing};
use crate::scalar::Real;
use crate::tol;

/// Sign tag of a diagonal or twist-sector object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A simple object of the gauged category, referring to labels of the
/// input category by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GaugedLabel {
    /// `[x,y]` with `x < y`.
    Pair(usize, usize),
    /// `[x,x]±`.
    Diag(usize, Sign),
    /// `x̂±`.
    Hat(usize, Sign),
}

impl GaugedLabel {
    /// Z/2 grade of the underlying extension object: 0 for pairs and
    /// diagonals, 1 for twist-sector objects.
    pub fn grade(&self) -> u8 {
        match self {
            GaugedLabel::Hat(..) => 1,
            _ => 0,
        }
    }

    /// Display string over the input category's label names.
    pub fn render(&self, base_labels: &[String]) -> String {
        match self {
            GaugedLabel::Pair(x, y) => format!("[{},{}]", base_labels[*x], base_labels[*y]),
            GaugedLabel::Diag(x, s) => format!("[{0},{0}]{1}", base_labels[*x], s),
            GaugedLabel::Hat(x, s) => format!("{}^{}", base_labels[*x], s),
        }
    }
}

/// Dual of a gauged label, given the duality permutation of the input:
/// pairs dualize componentwise (re-sorted), signed objects keep their
/// sign.
pub fn gauged_dual(base_dual: &[usize], label: &GaugedLabel) -> GaugedLabel {
    match *label {
        GaugedLabel::Pair(x, y) => {
            let (dx, dy) = (base_dual[x], base_dual[y]);
            GaugedLabel::Pair(dx.min(dy), dx.max(dy))
        }
        GaugedLabel::Diag(x, s) => GaugedLabel::Diag(base_dual[x], s),
        GaugedLabel::Hat(x, s) => GaugedLabel::Hat(base_dual[x], s),
    }
}

/// The simple objects of the gauging of `C ⊠ C` in canonical order: all
/// pairs `[x,y]` (lexicographic), then `[x,x]+`, `[x,x]-` for each `x`,
/// then `x̂+`, `x̂-` for each `x`. The unit is `Diag(unit, +)`.
pub fn gauged_labels<F: Real>(md: &ModularData<F>) -> Vec<GaugedLabel> {
    gauged_labels_by_rank(md.rank())
}

pub(crate) fn gauged_labels_by_rank(n: usize) -> Vec<GaugedLabel> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2 + 4 * n);
    for x in 0..n {
        for y in (x + 1)..n {
            out.push(GaugedLabel::Pair(x, y));
        }
    }
    for x in 0..n {
        out.push(GaugedLabel::Diag(x, Sign::Plus));
        out.push(GaugedLabel::Diag(x, Sign::Minus));
    }
    for x in 0..n {
        out.push(GaugedLabel::Hat(x, Sign::Plus));
        out.push(GaugedLabel::Hat(x, Sign::Minus));
    }
    out
}

/// A once-and-for-all square root of every twist.
#[derive(Debug, Clone)]
pub struct SqrtTwistChoice<F> {
    values: Vec<Complex<F>>,
}

impl<F: Real> SqrtTwistChoice<F> {
    /// Principal convention: write `θ_x = e^{iφ}` with `φ ∈ [0, 2π)` and
    /// take `e^{iφ/2}`. The unit's value is 1.
    pub fn principal(md: &ModularData<F>) -> Self {
        let two_pi = F::of(2.0) * F::PI();
        let values: Vec<Complex<F>> = md
            .theta
            .iter()
            .map(|t| {
                let mut phi = t.arg();
                if phi < F::zero() {
                    phi += two_pi;
                }
                Complex::from_polar(F::one(), phi / F::of(2.0))
            })
            .collect();
        for (v, t) in values.iter().zip(&md.theta) {
            let residual = (v * v - t).norm().as_f64();
            assert!(residual <= tol::SQRT_CONSISTENCY, "half-angle square root drifted: {residual:.3e}");
        }
        SqrtTwistChoice { values }
    }

    pub fn value(&self, i: usize) -> Complex<F> {
        self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The same choice with the root at one label negated (still a valid
    /// square root of that twist).
    pub fn with_flipped(&self, i: usize) -> Self {
        let mut values = self.values.clone();
        values[i] = -values[i];
        SqrtTwistChoice { values }
    }
}

/// A simple object of the Z/2-crossed extension `D = (C ⊠ C) ⊕ Ĉ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtSimple {
    /// `x ⊠ y` in the trivially graded component.
    Prod(usize, usize),
    /// `m̂` in the twisted component.
    Hat(usize),
}

impl ExtSimple {
    fn grade(&self) -> u8 {
        match self {
            ExtSimple::Prod(..) => 0,
            ExtSimple::Hat(..) => 1,
        }
    }
}

/// Fusion multiplicity `dim Hom(a ⊗ b, c)` in the extension, computed
/// from the fusion ring of `C`. Grading-incompatible triples are hard
/// zeros; the three compatible shapes contract the base tensor:
///
/// * `(x⊠y) ⊗ (z⊠w) → p⊠q` is Deligne-square fusion;
/// * `(x⊠y) ⊗ m̂ → k̂` has dimension `dim C(x·m·y, k)`;
/// * `m̂ ⊗ n̂ → z⊠w` has dimension `dim C(m·n, z·w)`.
///
/// The remaining arrangement `m̂ ⊗ (x⊠y) → k̂` is reduced to the last by
/// rigidity.
pub fn extension_dims(base: &FusionRing, a: ExtSimple, b: ExtSimple, c: ExtSimple) -> u32 {
    if (a.grade() + b.grade()) % 2 != c.grade() {
        return 0;
    }
    let r = base.rank();
    match (a, b, c) {
        (ExtSimple::Prod(x, y), ExtSimple::Prod(z, w), ExtSimple::Prod(p, q)) => {
            base.n(x, z, p) * base.n(y, w, q)
        }
        (ExtSimple::Prod(x, y), ExtSimple::Hat(m), ExtSimple::Hat(k)) => {
            // dim C(x ⊗ m ⊗ y, k)
            (0..r).map(|j| base.n(x, m, j) * base.n(j, y, k)).sum()
        }
        (ExtSimple::Hat(m), ExtSimple::Prod(x, y), ExtSimple::Hat(k)) => {
            // Hom(m̂ ⊗ (x⊠y), k̂) = Hom(x⊠y, m̂* ⊗ k̂), then the hat-hat
            // contraction: sum_j N^j_{m* k} N^j_{xy}.
            let mc = base.dual_of(m);
            (0..r).map(|j| base.n(mc, k, j) * base.n(x, y, j)).sum()
        }
        (ExtSimple::Hat(m), ExtSimple::Hat(nn), ExtSimple::Prod(z, w)) => {
            // dim C(m ⊗ n, z ⊗ w) = sum_j N^j_{mn} N^j_{zw}
            (0..r).map(|j| base.n(m, nn, j) * base.n(z, w, j)).sum()
        }
        _ => unreachable!("grade filter covers remaining shapes"),
    }
}

/// Underlying extension components of a gauged simple (the forgetful
/// functor on objects).
fn forget(label: &GaugedLabel) -> Vec<ExtSimple> {
    match *label {
        GaugedLabel::Pair(x, y) => vec![ExtSimple::Prod(x, y), ExtSimple::Prod(y, x)],
        GaugedLabel::Diag(x, _) => vec![ExtSimple::Prod(x, x)],
        GaugedLabel::Hat(x, _) => vec![ExtSimple::Hat(x)],
    }
}

/// Case 1: multiplicity of an off-diagonal pair `[x,y]` in `a ⊗ b`.
/// Equals `dim Hom_D(G(a) ⊗ G(b), x⊠y)` for the forgetful functor `G`,
/// expanded through [`extension_dims`].
pub fn mult_case1(base: &FusionRing, x: usize, y: usize, a: &GaugedLabel, b: &GaugedLabel) -> u32 {
    let target = ExtSimple::Prod(x, y);
    let mut acc = 0u32;
    for u in forget(a) {
        for v in forget(b) {
            acc += extension_dims(base, u, v, target);
        }
    }
    acc
}

/// Case 2: multiplicity of `[x,x]_{εx}` in `[y,y]_{εy} ⊗ [z,z]_{εz}`,
/// the closed form `N(N + εx·εy·εz)/2` with `N = N^x_{yz}`.
pub fn mult_case2(
    base: &FusionRing,
    x: usize,
    ex: Sign,
    y: usize,
    ey: Sign,
    z: usize,
    ez: Sign,
) -> u32 {
    let n = i64::from(base.n(y, z, x));
    let eps = ex.value() * ey.value() * ez.value();
    let val = n * (n + eps) / 2;
    debug_assert!(val >= 0 && (n * (n + eps)) % 2 == 0);
    val as u32
}

/// Case 3: multiplicity of `x̂_{εx}` in `[y,y]_{εy} ⊗ ẑ_{εz}`, evaluated
/// by the closed form
/// `½ [ N^x_{y²z} + (θ^{1/2}_z/θ^{1/2}_x)·εx·εy·εz·Σ_{P,Q} s_{z*P} s_{x*Q} (θ_P/θ_Q)² N^y_{PQ} ]`.
pub fn mult_case3<F: Real>(
    md: &ModularData<F>,
    sqrt: &SqrtTwistChoice<F>,
    x: usize,
    ex: Sign,
    y: usize,
    ey: Sign,
    z: usize,
    ez: Sign,
    tolerance: f64,
) -> Result<u32, Error> {
    let base = verlinde(md, tolerance)?;
    mult_case3_with(md, &base, sqrt, x, ex, y, ey, z, ez, tolerance)
}

fn mult_case3_with<F: Real>(
    md: &ModularData<F>,
    base: &FusionRing,
    sqrt: &SqrtTwistChoice<F>,
    x: usize,
    ex: Sign,
    y: usize,
    ey: Sign,
    z: usize,
    ez: Sign,
    tolerance: f64,
) -> Result<u32, Error> {
    let r = md.rank();
    let zc = md.dual[z];
    let xc = md.dual[x];
    let mut osc = Complex::new(F::zero(), F::zero());
    for p in 0..r {
        for q in 0..r {
            let mult = base.n(p, q, y);
            if mult == 0 {
                continue;
            }
            // Twists are unit-modulus; the inverse of θ_q is its conjugate.
            let ratio = md.theta[p] * md.theta[q].conj();
            let term = md.s[(zc, p)] * md.s[(xc, q)] * ratio * ratio;
            osc += term * F::of(f64::from(mult));
        }
    }
    let eps = F::of((ex.value() * ey.value() * ez.value()) as f64);
    let phase = sqrt.value(z) / sqrt.value(x);
    let mut straight = 0u32;
    for w in 0..r {
        straight += base.n(y, y, w) * base.n(w, z, x);
    }
    let value = (Complex::new(F::of(f64::from(straight)), F::zero()) + phase * osc * eps)
        / Complex::new(F::of(2.0), F::zero());
    round_multiplicity(
        value,
        tolerance,
        || GaugedLabel::Diag(y, ey).render(&md.labels),
        || GaugedLabel::Hat(z, ez).render(&md.labels),
        || GaugedLabel::Hat(x, ex).render(&md.labels),
    )
}

/// Half-twist diagonal `T̂^{1/2}_x = θ^{1/2}_x / ζ^{1/2}` used by the
/// P-matrix route: the chosen twist square roots divided by the
/// principal square root of ζ. Entrywise it squares to `T̂`, and it is
/// invariant under replacing ζ by another admissible sixth root in the
/// products where it appears.
pub fn half_t_hat<F: Real>(ds: &DerivedScalars<F>, sqrt: &SqrtTwistChoice<F>) -> Vec<Complex<F>> {
    let zeta_half = Complex::from_polar(F::one(), ds.zeta.arg() / F::of(2.0));
    (0..sqrt.len()).map(|i| sqrt.value(i) / zeta_half).collect()
}

/// The congruence-representation matrix `P = T̂^{1/2} S T̂² S T̂^{1/2}`.
pub fn p_matrix<F: Real>(
    md: &ModularData<F>,
    ds: &DerivedScalars<F>,
    sqrt: &SqrtTwistChoice<F>,
) -> CMat<F> {
    let half = half_t_hat(ds, sqrt);
    let that_sq: Vec<Complex<F>> = ds.t_hat.iter().map(|t| t * t).collect();
    let inner = md.s.mul_diag(&that_sq).mul(&md.s);
    CMat::diag_mul(&half, &inner).mul_diag(&half)
}

/// Case 3 by the independent route:
/// `½ [ Σ_R s²_{yR} s_{zR} s_{x*R} / s²_{1R} + εx·εy·εz·Σ_R s_{yR} P_{zR} P_{x*R} / s_{1R} ]`.
pub fn mult_case3_p<F: Real>(
    md: &ModularData<F>,
    x: usize,
    ex: Sign,
    y: usize,
    ey: Sign,
    z: usize,
    ez: Sign,
    tolerance: f64,
) -> Result<u32, Error> {
    let ds = derived_scalars(md)?;
    let sqrt = SqrtTwistChoice::principal(md);
    let p = p_matrix(md, &ds, &sqrt);
    mult_case3_p_with(md, &p, x, ex, y, ey, z, ez, tolerance)
}

fn mult_case3_p_with<F: Real>(
    md: &ModularData<F>,
    p: &CMat<F>,
    x: usize,
    ex: Sign,
    y: usize,
    ey: Sign,
    z: usize,
    ez: Sign,
    tolerance: f64,
) -> Result<u32, Error> {
    let r = md.rank();
    let u = md.unit;
    let xc = md.dual[x];
    let zero = Complex::new(F::zero(), F::zero());
    let mut first = zero;
    let mut second = zero;
    for k in 0..r {
        let s1 = md.s[(u, k)];
        let sy = md.s[(y, k)];
        first += sy * sy * md.s[(z, k)] * md.s[(xc, k)] / (s1 * s1);
        second += sy * p[(z, k)] * p[(xc, k)] / s1;
    }
    let eps = F::of((ex.value() * ey.value() * ez.value()) as f64);
    let value = (first + second * eps) / Complex::new(F::of(2.0), F::zero());
    round_multiplicity(
        value,
        tolerance,
        || GaugedLabel::Diag(y, ey).render(&md.labels),
        || GaugedLabel::Hat(z, ez).render(&md.labels),
        || GaugedLabel::Hat(x, ex).render(&md.labels),
    )
}

fn round_multiplicity<F: Real>(
    value: Complex<F>,
    tolerance: f64,
    lx: impl Fn() -> String,
    ly: impl Fn() -> String,
    lz: impl Fn() -> String,
) -> Result<u32, Error> {
    let rounded = value.re.as_f64().round();
    let residual = (value - Complex::new(F::of(rounded), F::zero())).norm().as_f64();
    if residual > tolerance {
        return Err(Error::NonIntegralMultiplicity {
            x: lx(),
            y: ly(),
            z: lz(),
            value: value.re.as_f64(),
            residual,
        });
    }
    if rounded < 0.0 {
        return Err(Error::NegativeMultiplicity { x: lx(), y: ly(), z: lz(), value: rounded as i64 });
    }
    Ok(rounded as u32)
}

/// Assembles the full gauged fusion ring with the principal square-root
/// choice and the default rounding tolerance.
pub fn gauged_fusion<F: Real>(md: &ModularData<F>) -> Result<FusionRing, Error> {
    gauged_fusion_with(md, &SqrtTwistChoice::principal(md), tol::INTEGER_ROUNDING)
}

/// Assembles the full gauged fusion ring. Every coefficient is computed
/// independently through the reduction table (no commutativity or
/// associativity is assumed), then the assembled ring is validated;
/// failures surface as [`Error::InconsistentRing`].
pub fn gauged_fusion_with<F: Real>(
    md: &ModularData<F>,
    sqrt: &SqrtTwistChoice<F>,
    tolerance: f64,
) -> Result<FusionRing, Error> {
    let base = verlinde(md, tolerance)?;
    let labels = gauged_labels_by_rank(md.rank());
    let m = labels.len();
    let names: Vec<String> = labels.iter().map(|l| l.render(&md.labels)).collect();
    let index: HashMap<GaugedLabel, usize> =
        labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let unit = index[&GaugedLabel::Diag(md.unit, Sign::Plus)];
    let dual: Vec<usize> = labels.iter().map(|l| index[&gauged_dual(&md.dual, l)]).collect();

    let mut n = vec![0u32; m * m * m];
    for (ai, a) in labels.iter().enumerate() {
        for (bi, b) in labels.iter().enumerate() {
            for (ci, c) in labels.iter().enumerate() {
                n[(ai * m + bi) * m + ci] =
                    gauged_coefficient(md, &base, sqrt, a, b, c, tolerance)?;
            }
        }
    }

    let ring = FusionRing::new(names, unit, dual, n);
    let report = validate_ring(&ring);
    if let Some(fail) = report.first_failure() {
        return Err(Error::InconsistentRing(format!(
            "gauged ring fails {}{}",
            fail.name,
            fail.detail.as_ref().map(|d| format!(": {d}")).unwrap_or_default()
        )));
    }
    Ok(ring)
}

/// One multiplicity `N^c_{ab}` of the gauged ring, reduced to a closed
/// form by the shape of the triple:
///
/// * grade mismatch → 0;
/// * target pair → case 1 directly;
/// * source pair (any target) → rigidity moves the pair into target
///   position, then case 1;
/// * diagonal ⊗ diagonal → diagonal → case 2;
/// * the three hat/diagonal shapes → rigidity moves onto case 3.
fn gauged_coefficient<F: Real>(
    md: &ModularData<F>,
    base: &FusionRing,
    sqrt: &SqrtTwistChoice<F>,
    a: &GaugedLabel,
    b: &GaugedLabel,
    c: &GaugedLabel,
    tolerance: f64,
) -> Result<u32, Error> {
    use GaugedLabel::{Diag, Hat, Pair};
    if (a.grade() + b.grade()) % 2 != c.grade() {
        return Ok(0);
    }
    let dual = |l: &GaugedLabel| gauged_dual(&md.dual, l);
    match (*a, *b, *c) {
        // Target pair: the defining shape of case 1.
        (_, _, Pair(x, y)) => Ok(mult_case1(base, x, y, a, b)),
        // A pair source with a signed target: Hom(a⊗b, c) = Hom(a, c⊗b*)
        // when a is the pair, Hom(b, a*⊗c) when b is.
        (Pair(x, y), _, _) => Ok(mult_case1(base, x, y, c, &dual(b))),
        (_, Pair(x, y), _) => Ok(mult_case1(base, x, y, &dual(a), c)),
        (Diag(y, ey), Diag(z, ez), Diag(x, ex)) => Ok(mult_case2(base, x, ex, y, ey, z, ez)),
        // Hat ⊗ Hat → Diag: Hom(p̂⊗q̂, [x,x]) = Hom(p̂, [x,x]⊗q̂*).
        (Hat(p, ep), Hat(q, eq), Diag(x, ex)) => {
            mult_case3_with(md, base, sqrt, p, ep, x, ex, md.dual[q], eq, tolerance)
        }
        // Diag ⊗ Hat → Hat: the defining shape of case 3.
        (Diag(y, ey), Hat(z, ez), Hat(x, ex)) => {
            mult_case3_with(md, base, sqrt, x, ex, y, ey, z, ez, tolerance)
        }
        // Hat ⊗ Diag → Hat: Hom(p̂⊗[q,q], ĥ) = Hom([q,q], p̂*⊗ĥ).
        (Hat(p, ep), Diag(q, eq), Hat(h, eh)) => {
            mult_case3_with(md, base, sqrt, md.dual[p], ep, q, eq, md.dual[h], eh, tolerance)
        }
        _ => unreachable!("grade filter covers remaining shapes"),
    }
}

/// Fusion graph of multiplication by one gauged label in an assembled
/// gauged ring. The base rank is recovered from the gauged rank.
pub fn fusion_graph(fr: &FusionRing, label: &GaugedLabel) -> Result<FusionGraph, Error> {
    let n = base_rank_of_gauged(fr.rank()).ok_or_else(|| {
        Error::MalformedRing(format!("rank {} is not a gauged rank n(n+7)/2", fr.rank()))
    })?;
    let position = gauged_labels_by_rank(n).iter().position(|l| l == label).ok_or_else(|| {
        Error::MalformedRing(format!("label {label:?} is not valid for base rank {n}"))
    })?;
    Ok(ringtools::fusion_graph(fr, position))
}

fn base_rank_of_gauged(m: usize) -> Option<usize> {
    (1..).take_while(|n| n * (n + 7) / 2 <= m).find(|n| n * (n + 7) / 2 == m)
}
