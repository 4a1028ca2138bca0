//! Category-level constructions on modular data: Deligne products,
//! braiding reversal, and tensor subcategories generated by chosen
//! simples.

use std::collections::BTreeSet;

use num_complex::Complex;

use crate::error::Error;
use crate::mat::CMat;
use crate::modular::{validate_modular, verlinde, ModularData};
use crate::scalar::Real;
use crate::tol;

/// Deligne product: labels are ordered pairs rendered `"x,y"`, S is the
/// entrywise tensor product, twists multiply, unit and duality act
/// componentwise.
pub fn deligne_product<F: Real>(a: &ModularData<F>, b: &ModularData<F>) -> ModularData<F> {
    let (ra, rb) = (a.rank(), b.rank());
    let idx = |i: usize, j: usize| i * rb + j;
    let mut labels = Vec::with_capacity(ra * rb);
    let mut theta = Vec::with_capacity(ra * rb);
    let mut dual = vec![0usize; ra * rb];
    for i in 0..ra {
        for j in 0..rb {
            labels.push(format!("{},{}", a.labels[i], b.labels[j]));
            theta.push(a.theta[i] * b.theta[j]);
            dual[idx(i, j)] = idx(a.dual[i], b.dual[j]);
        }
    }
    let s = CMat::from_fn(ra * rb, |p, q| {
        let (i, j) = (p / rb, p % rb);
        let (k, l) = (q / rb, q % rb);
        a.s[(i, k)] * b.s[(j, l)]
    });
    ModularData { labels, unit: idx(a.unit, b.unit), s, theta, dual }
}

/// Reverse braiding: S and θ are complex-conjugated; labels, unit, and
/// duality are unchanged. An exact involution.
pub fn reverse<F: Real>(md: &ModularData<F>) -> ModularData<F> {
    ModularData {
        labels: md.labels.clone(),
        unit: md.unit,
        s: md.s.conj(),
        theta: md.theta.iter().map(|t| t.conj()).collect(),
        dual: md.dual.clone(),
    }
}

/// The modular subcategory generated by a set of simples: closes the
/// generators under fusion and duals, restricts S and θ to the closure,
/// and renormalizes S by the single positive scalar making rows
/// orthonormal (keeping `s_{unit,unit} > 0`).
///
/// Errors with [`Error::NotModular`] when the closure does not carry
/// modular data of its own (the restricted S fails validation).
pub fn tensor_subcategory<F: Real>(
    md: &ModularData<F>,
    generators: &[usize],
) -> Result<ModularData<F>, Error> {
    if generators.is_empty() {
        return Err(Error::NotModular("no generators given".into()));
    }
    for &g in generators {
        if g >= md.rank() {
            return Err(Error::NotModular(format!("generator index {g} out of range")));
        }
    }
    let ring = verlinde(md, tol::INTEGER_ROUNDING)?;

    let mut closure: BTreeSet<usize> = BTreeSet::new();
    closure.insert(md.unit);
    closure.extend(generators.iter().copied());
    loop {
        let snapshot: Vec<usize> = closure.iter().copied().collect();
        let before = closure.len();
        for &x in &snapshot {
            closure.insert(md.dual[x]);
        }
        for &x in &snapshot {
            for &y in &snapshot {
                for (z, _) in ring.tensor(x, y) {
                    closure.insert(z);
                }
            }
        }
        if closure.len() == before {
            break;
        }
    }
    let keep: Vec<usize> = closure.into_iter().collect();
    let pos = |global: usize| keep.iter().position(|&k| k == global).unwrap();
    let nb = keep.len();

    let restricted = CMat::from_fn(nb, |i, j| md.s[(keep[i], keep[j])]);
    let mut norm_sq = F::zero();
    let unit = pos(md.unit);
    for j in 0..nb {
        norm_sq += restricted[(unit, j)].norm_sqr();
    }
    let norm = norm_sq.sqrt();
    if !(norm > F::zero()) {
        return Err(Error::NotModular("restricted unit row vanishes".into()));
    }
    let s = restricted.scale(Complex::new(norm.recip(), F::zero()));

    let sub = ModularData {
        labels: keep.iter().map(|&k| md.labels[k].clone()).collect(),
        unit,
        s,
        theta: keep.iter().map(|&k| md.theta[k]).collect(),
        dual: keep.iter().map(|&k| pos(md.dual[k])).collect(),
    };

    let report = validate_modular(&sub);
    if let Some(fail) = report.first_failure() {
        return Err(Error::NotModular(format!(
            "restriction fails {} (residual {:.3e})",
            fail.name, fail.residual
        )));
    }
    Ok(sub)
}
