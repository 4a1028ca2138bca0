//! Exact root-system data for the simple series A, B, C, D and G2.
//!
//! Everything in this module is exact. Vectors are stored in simple-root
//! coordinates: a vector `v` is the tuple of rationals `v_i` with
//! `v = sum_i v_i alpha_i`. Inner products go through the rational Gram
//! matrix `(alpha_i, alpha_j)`, normalized so long roots have squared
//! length 2, and simple reflections become integer matrices in these
//! coordinates. No floating point enters until a Weyl character sum is
//! actually evaluated.

use std::collections::{HashSet, VecDeque};

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::Error;

/// Exact rational scalar for root-system arithmetic.
pub type Rat = Ratio<i64>;

/// Default cap on Weyl-group closure size.
pub const WEYL_BOUND: usize = 1_000_000;

/// The supported simple series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    /// `sl(rank+1)`, any rank >= 1.
    A,
    /// `so(2 rank + 1)`, rank >= 2.
    B,
    /// `sp(2 rank)`, rank >= 2.
    C,
    /// `so(2 rank)`, rank >= 3.
    D,
    /// The exceptional `g2`, rank exactly 2.
    G2,
}

impl std::fmt::Display for Series {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Series::A => write!(f, "A"),
            Series::B => write!(f, "B"),
            Series::C => write!(f, "C"),
            Series::D => write!(f, "D"),
            Series::G2 => write!(f, "G2"),
        }
    }
}

/// A series, a rank, and a nonnegative integer level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieSpec {
    pub series: Series,
    pub rank: usize,
    pub level: u32,
}

impl LieSpec {
    pub fn new(series: Series, rank: usize, level: u32) -> Self {
        LieSpec { series, rank, level }
    }
}

impl std::fmt::Display for LieSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.series == Series::G2 {
            write!(f, "G2 level {}", self.level)
        } else {
            write!(f, "{}{} level {}", self.series, self.rank, self.level)
        }
    }
}

/// An element of the Weyl group as an integer matrix acting on
/// simple-root coordinates, together with its determinant sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    rank: usize,
    /// Row-major `rank x rank` matrix.
    mat: Vec<i64>,
    sign: i64,
}

impl WeylElement {
    pub fn sign(&self) -> i64 {
        self.sign
    }

    pub fn matrix(&self) -> &[i64] {
        &self.mat
    }

    /// Applies the element to a vector in simple-root coordinates.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        let n = self.rank;
        (0..n)
            .map(|i| (0..n).map(|j| Rat::from_integer(self.mat[i * n + j]) * v[j]).sum())
            .collect()
    }

    fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n).map(|i| (0..n).map(|j| self.mat[i * n + j] * v[j]).sum()).collect()
    }
}

/// Exact data of a finite root system: Cartan matrix, Gram matrix,
/// fundamental weights, positive roots, and the marks of the highest root.
#[derive(Debug, Clone)]
pub struct RootData {
    pub series: Series,
    pub rank: usize,
    /// Cartan matrix `A[i][j] = <alpha_i, alpha_j^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// Gram matrix `(alpha_i, alpha_j)`, long roots of squared length 2.
    pub gram: Vec<Vec<Rat>>,
    /// Fundamental weights in simple-root coordinates.
    pub fundamental: Vec<Vec<Rat>>,
    /// Weyl vector (sum of fundamental weights) in simple-root coordinates.
    pub rho: Vec<Rat>,
    /// Positive roots in simple-root coordinates, sorted by (height, coords).
    pub positive_roots: Vec<Vec<i64>>,
    /// Marks: simple-root coordinates of the highest root.
    pub marks: Vec<i64>,
    /// Comarks `a_i = marks_i (alpha_i, alpha_i) / 2`.
    pub comarks: Vec<i64>,
    /// Dual Coxeter number `1 + sum of comarks`.
    pub dual_coxeter: i64,
}

impl RootData {
    pub fn new(series: Series, rank: usize) -> Result<Self, Error> {
        let (cartan, lengths) = cartan_and_lengths(series, rank)?;

        // Gram from the defining relation A[i][j] = 2 (a_i, a_j) / (a_j, a_j).
        let two = Rat::from_integer(2);
        let gram: Vec<Vec<Rat>> = (0..rank)
            .map(|i| (0..rank).map(|j| Rat::from_integer(cartan[i][j]) * lengths[j] / two).collect())
            .collect();
        for i in 0..rank {
            for j in 0..rank {
                debug_assert_eq!(gram[i][j], gram[j][i], "Gram matrix must be symmetric");
            }
        }

        // Fundamental weights: lambda_i = sum_l c_{li} alpha_l requires
        // A^T c_{.i} = e_i, so the columns of (A^T)^{-1}.
        let at: Vec<Vec<Rat>> = (0..rank)
            .map(|i| (0..rank).map(|j| Rat::from_integer(cartan[j][i])).collect())
            .collect();
        let at_inv = invert_rat(&at).ok_or_else(|| {
            Error::UnsupportedSeries(format!("{series} rank {rank}: singular Cartan matrix"))
        })?;
        let fundamental: Vec<Vec<Rat>> =
            (0..rank).map(|i| (0..rank).map(|l| at_inv[l][i]).collect()).collect();

        let mut rho = vec![Rat::zero(); rank];
        for w in &fundamental {
            for (r, x) in rho.iter_mut().zip(w) {
                *r += x;
            }
        }

        let mut rd = RootData {
            series,
            rank,
            cartan,
            gram,
            fundamental,
            rho,
            positive_roots: Vec::new(),
            marks: Vec::new(),
            comarks: Vec::new(),
            dual_coxeter: 0,
        };

        rd.positive_roots = rd.enumerate_positive_roots();
        let highest = rd
            .positive_roots
            .last()
            .ok_or_else(|| Error::UnsupportedSeries(format!("{series} rank {rank}: empty root system")))?
            .clone();
        // The highest root is the unique root of maximal height and is long.
        let top_height: i64 = highest.iter().sum();
        let ties = rd.positive_roots.iter().filter(|r| r.iter().sum::<i64>() == top_height).count();
        debug_assert_eq!(ties, 1, "highest root must be unique");
        let theta_rat: Vec<Rat> = highest.iter().map(|&c| Rat::from_integer(c)).collect();
        debug_assert_eq!(rd.inner(&theta_rat, &theta_rat), Rat::from_integer(2), "highest root must be long");

        rd.comarks = highest
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let c = Rat::from_integer(m) * rd.gram[i][i] / Rat::from_integer(2);
                debug_assert!(c.is_integer(), "comarks must be integers");
                c.to_integer()
            })
            .collect();
        rd.dual_coxeter = 1 + rd.comarks.iter().sum::<i64>();
        rd.marks = highest;
        Ok(rd)
    }

    /// Inner product of two vectors in simple-root coordinates.
    pub fn inner(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                acc += x[i] * self.gram[i][j] * y[j];
            }
        }
        acc
    }

    /// Converts Dynkin labels `m_i` to simple-root coordinates of
    /// `sum_i m_i lambda_i`.
    pub fn weight_to_root(&self, dynkin: &[i64]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.rank];
        for (i, &m) in dynkin.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let mr = Rat::from_integer(m);
            for (vl, fl) in v.iter_mut().zip(&self.fundamental[i]) {
                *vl += mr * fl;
            }
        }
        v
    }

    /// Reads Dynkin labels `<v, alpha_j^vee>` back off a vector in
    /// simple-root coordinates; `None` if any label is not an integer.
    pub fn root_to_weight(&self, v: &[Rat]) -> Option<Vec<i64>> {
        (0..self.rank)
            .map(|j| {
                let m: Rat = (0..self.rank)
                    .map(|l| v[l] * Rat::from_integer(self.cartan[l][j]))
                    .sum();
                m.is_integer().then(|| m.to_integer())
            })
            .collect()
    }

    /// Integer matrix of the simple reflection `s_i` on simple-root
    /// coordinates: `s_i(alpha_j) = alpha_j - A[j][i] alpha_i`.
    pub fn reflection(&self, i: usize) -> WeylElement {
        let n = self.rank;
        let mut mat = vec![0i64; n * n];
        for l in 0..n {
            mat[l * n + l] = 1;
        }
        for j in 0..n {
            mat[i * n + j] -= self.cartan[j][i];
        }
        WeylElement { rank: n, mat, sign: -1 }
    }

    /// The full Weyl group by breadth-first closure over the simple
    /// reflections, identity first, with the default size bound.
    pub fn weyl_group(&self) -> Result<Vec<WeylElement>, Error> {
        self.weyl_group_bounded(WEYL_BOUND)
    }

    /// As [`weyl_group`](Self::weyl_group) with an explicit size bound.
    pub fn weyl_group_bounded(&self, bound: usize) -> Result<Vec<WeylElement>, Error> {
        let n = self.rank;
        let gens: Vec<WeylElement> = (0..n).map(|i| self.reflection(i)).collect();
        let id = WeylElement {
            rank: n,
            mat: {
                let mut m = vec![0i64; n * n];
                for i in 0..n {
                    m[i * n + i] = 1;
                }
                m
            },
            sign: 1,
        };
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        seen.insert(id.mat.clone());
        let mut elems = vec![id];
        let mut head = 0;
        while head < elems.len() {
            let current = elems[head].clone();
            head += 1;
            for g in &gens {
                let mat = mat_mul_int(&g.mat, &current.mat, n);
                if seen.insert(mat.clone()) {
                    if elems.len() >= bound {
                        return Err(Error::ClosureOverflow { bound });
                    }
                    elems.push(WeylElement { rank: n, mat, sign: -current.sign });
                }
            }
        }
        Ok(elems)
    }

    /// Dynkin labels of level-`level` dominant weights: all `m >= 0` with
    /// `sum_i m_i comarks_i <= level`, in ascending lexicographic order.
    pub fn level_labels(&self, level: u32) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.rank];
        self.labels_rec(0, level as i64, &mut cur, &mut out);
        out
    }

    fn labels_rec(&self, pos: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos == self.rank {
            out.push(cur.clone());
            return;
        }
        let step = self.comarks[pos];
        let max = budget / step;
        for m in 0..=max {
            cur[pos] = m;
            self.labels_rec(pos + 1, budget - m * step, cur, out);
        }
        cur[pos] = 0;
    }

    /// Dynkin labels of the highest root (the adjoint generator).
    pub fn highest_root_weight(&self) -> Vec<i64> {
        let v: Vec<Rat> = self.marks.iter().map(|&c| Rat::from_integer(c)).collect();
        self.root_to_weight(&v).expect("highest root has integral Dynkin labels")
    }

    fn enumerate_positive_roots(&self) -> Vec<Vec<i64>> {
        // The Weyl orbit of the simple roots is the whole root system;
        // close under simple reflections and keep the positive half.
        let gens: Vec<WeylElement> = (0..self.rank).map(|i| self.reflection(i)).collect();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..self.rank {
            let mut e = vec![0i64; self.rank];
            e[i] = 1;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(r) = queue.pop_front() {
            for g in &gens {
                let img = g.apply_int(&r);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = seen
            .into_iter()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .collect();
        positive.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        positive
    }
}

/// Renders Dynkin labels as a compact string: `0`, `L1`, `2L1`, `L1+2L2`.
pub fn render_weight(dynkin: &[i64]) -> String {
    if dynkin.iter().all(|&m| m == 0) {
        return "0".to_string();
    }
    dynkin
        .iter()
        .enumerate()
        .filter(|(_, &m)| m != 0)
        .map(|(i, &m)| if m == 1 { format!("L{}", i + 1) } else { format!("{}L{}", m, i + 1) })
        .collect::<Vec<_>>()
        .join("+")
}

fn cartan_and_lengths(series: Series, rank: usize) -> Result<(Vec<Vec<i64>>, Vec<Rat>), Error> {
    let unsupported = |why: &str| Error::UnsupportedSeries(format!("{series} rank {rank}: {why}"));
    let chain = |n: usize| {
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    match series {
        Series::A => {
            if rank < 1 {
                return Err(unsupported("rank must be at least 1"));
            }
            Ok((chain(rank), vec![Rat::from_integer(2); rank]))
        }
        Series::B => {
            if rank < 2 {
                return Err(unsupported("rank must be at least 2"));
            }
            let mut a = chain(rank);
            a[rank - 2][rank - 1] = -2;
            let mut len = vec![Rat::from_integer(2); rank];
            len[rank - 1] = Rat::from_integer(1);
            Ok((a, len))
        }
        Series::C => {
            if rank < 2 {
                return Err(unsupported("rank must be at least 2"));
            }
            let mut a = chain(rank);
            a[rank - 1][rank - 2] = -2;
            let mut len = vec![Rat::from_integer(1); rank];
            len[rank - 1] = Rat::from_integer(2);
            Ok((a, len))
        }
        Series::D => {
            if rank < 3 {
                return Err(unsupported("rank must be at least 3"));
            }
            let mut a = chain(rank - 1);
            a.iter_mut().for_each(|row| row.push(0));
            a.push(vec![0i64; rank]);
            a[rank - 1][rank - 1] = 2;
            a[rank - 3][rank - 1] = -1;
            a[rank - 1][rank - 3] = -1;
            Ok((a, vec![Rat::from_integer(2); rank]))
        }
        Series::G2 => {
            if rank != 2 {
                return Err(unsupported("rank must be exactly 2"));
            }
            let a = vec![vec![2, -1], vec![-3, 2]];
            Ok((a, vec![Rat::new(2, 3), Rat::from_integer(2)]))
        }
    }
}

fn mat_mul_int(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

/// Exact inverse by Gauss-Jordan elimination; `None` if singular.
fn invert_rat(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::from_integer(1) } else { Rat::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col];
            for j in 0..n {
                let acj = a[col][j];
                let icj = inv[col][j];
                a[r][j] -= f * acj;
                inv[r][j] -= f * icj;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exact determinant by fraction-free elimination, as an independent
    /// check on the incrementally tracked signs.
    fn det_rat(mat: &[i64], n: usize) -> Rat {
        let mut a: Vec<Vec<Rat>> =
            (0..n).map(|i| (0..n).map(|j| Rat::from_integer(mat[i * n + j])).collect()).collect();
        let mut det = Rat::from_integer(1);
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
                Some(p) => p,
                None => return Rat::zero(),
            };
            if pivot != col {
                a.swap(col, pivot);
                det = -det;
            }
            det *= a[col][col];
            let p = a[col][col];
            for r in (col + 1)..n {
                let f = a[r][col] / p;
                for j in col..n {
                    let acj = a[col][j];
                    a[r][j] -= f * acj;
                }
            }
        }
        det
    }

    #[test]
    fn cartan_matrices_match_references() {
        let a3 = RootData::new(Series::A, 3).unwrap();
        assert_eq!(a3.cartan, vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        let b2 = RootData::new(Series::B, 2).unwrap();
        assert_eq!(b2.cartan, vec![vec![2, -2], vec![-1, 2]]);
        let c3 = RootData::new(Series::C, 3).unwrap();
        assert_eq!(c3.cartan, vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
        let g2 = RootData::new(Series::G2, 2).unwrap();
        assert_eq!(g2.cartan, vec![vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn rank_bounds_are_enforced() {
        assert!(matches!(RootData::new(Series::A, 0), Err(Error::UnsupportedSeries(_))));
        assert!(matches!(RootData::new(Series::B, 1), Err(Error::UnsupportedSeries(_))));
        assert!(matches!(RootData::new(Series::D, 2), Err(Error::UnsupportedSeries(_))));
        assert!(matches!(RootData::new(Series::G2, 3), Err(Error::UnsupportedSeries(_))));
    }

    #[test]
    fn long_roots_have_squared_length_two() {
        for (series, rank) in [
            (Series::A, 4),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 4),
            (Series::G2, 2),
        ] {
            let rd = RootData::new(series, rank).unwrap();
            let longest = (0..rank).map(|i| rd.gram[i][i]).max().unwrap();
            assert_eq!(longest, Rat::from_integer(2), "{series}");
        }
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for (series, rank) in [(Series::A, 3), (Series::B, 3), (Series::C, 2), (Series::D, 4), (Series::G2, 2)] {
            let rd = RootData::new(series, rank).unwrap();
            for i in 0..rank {
                let labels = rd.root_to_weight(&rd.fundamental[i]).unwrap();
                let mut expected = vec![0i64; rank];
                expected[i] = 1;
                assert_eq!(labels, expected, "{series} fundamental weight {i}");
            }
            // rho has all Dynkin labels equal to one.
            assert_eq!(rd.root_to_weight(&rd.rho).unwrap(), vec![1i64; rank]);
        }
    }

    #[test]
    fn weyl_group_orders_match_closed_forms() {
        let cases = [
            (Series::A, 1, 2u64),
            (Series::A, 2, 6),
            (Series::A, 3, 24),
            (Series::B, 2, 8),
            (Series::B, 3, 48),
            (Series::C, 3, 48),
            (Series::D, 3, 24),
            (Series::D, 4, 192),
            (Series::G2, 2, 12),
        ];
        for (series, rank, order) in cases {
            let rd = RootData::new(series, rank).unwrap();
            let w = rd.weyl_group().unwrap();
            assert_eq!(w.len() as u64, order, "{series} rank {rank}");
        }
    }

    #[test]
    fn tracked_signs_equal_exact_determinants() {
        for (series, rank) in [(Series::B, 2), (Series::G2, 2), (Series::D, 3)] {
            let rd = RootData::new(series, rank).unwrap();
            for w in rd.weyl_group().unwrap() {
                assert_eq!(det_rat(w.matrix(), rank), Rat::from_integer(w.sign()), "{series}");
            }
        }
    }

    #[test]
    fn weyl_closure_respects_bound() {
        let rd = RootData::new(Series::G2, 2).unwrap();
        assert!(matches!(rd.weyl_group_bounded(5), Err(Error::ClosureOverflow { bound: 5 })));
        assert_eq!(rd.weyl_group_bounded(12).unwrap().len(), 12);
    }

    #[test]
    fn positive_root_counts_match_closed_forms() {
        let cases = [
            (Series::A, 3, 6usize),
            (Series::B, 2, 4),
            (Series::B, 3, 9),
            (Series::C, 3, 9),
            (Series::D, 4, 12),
            (Series::G2, 2, 6),
        ];
        for (series, rank, count) in cases {
            let rd = RootData::new(series, rank).unwrap();
            assert_eq!(rd.positive_roots.len(), count, "{series} rank {rank}");
        }
    }

    #[test]
    fn marks_comarks_and_dual_coxeter_numbers() {
        let g2 = RootData::new(Series::G2, 2).unwrap();
        assert_eq!(g2.marks, vec![3, 2]);
        assert_eq!(g2.comarks, vec![1, 2]);
        assert_eq!(g2.dual_coxeter, 4);

        let b2 = RootData::new(Series::B, 2).unwrap();
        assert_eq!(b2.marks, vec![1, 2]);
        assert_eq!(b2.comarks, vec![1, 1]);
        assert_eq!(b2.dual_coxeter, 3);

        let b3 = RootData::new(Series::B, 3).unwrap();
        assert_eq!(b3.comarks, vec![1, 2, 1]);
        assert_eq!(b3.dual_coxeter, 5);

        let c3 = RootData::new(Series::C, 3).unwrap();
        assert_eq!(c3.comarks, vec![1, 1, 1]);
        assert_eq!(c3.dual_coxeter, 4);

        let d4 = RootData::new(Series::D, 4).unwrap();
        assert_eq!(d4.comarks, vec![1, 2, 1, 1]);
        assert_eq!(d4.dual_coxeter, 6);

        for rank in 1..=6 {
            let a = RootData::new(Series::A, rank).unwrap();
            assert_eq!(a.dual_coxeter, rank as i64 + 1);
        }
    }

    #[test]
    fn level_labels_enumerate_in_lexicographic_order() {
        let a1 = RootData::new(Series::A, 1).unwrap();
        assert_eq!(a1.level_labels(3), vec![vec![0], vec![1], vec![2], vec![3]]);

        let g2 = RootData::new(Series::G2, 2).unwrap();
        assert_eq!(
            g2.level_labels(3),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 0], vec![3, 0]]
        );
        // Level 1 G2 has exactly two labels (a Fibonacci-sized theory).
        assert_eq!(g2.level_labels(1), vec![vec![0, 0], vec![1, 0]]);

        let b2 = RootData::new(Series::B, 2).unwrap();
        assert_eq!(b2.level_labels(4).len(), 15);
        assert_eq!(b2.level_labels(1), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn highest_root_weights() {
        let a1 = RootData::new(Series::A, 1).unwrap();
        assert_eq!(a1.highest_root_weight(), vec![2]);
        let g2 = RootData::new(Series::G2, 2).unwrap();
        assert_eq!(g2.highest_root_weight(), vec![0, 1]);
        let b2 = RootData::new(Series::B, 2).unwrap();
        assert_eq!(b2.highest_root_weight(), vec![0, 2]);
        let a3 = RootData::new(Series::A, 3).unwrap();
        assert_eq!(a3.highest_root_weight(), vec![1, 0, 1]);
    }

    #[test]
    fn weight_rendering() {
        assert_eq!(render_weight(&[0, 0]), "0");
        assert_eq!(render_weight(&[1]), "L1");
        assert_eq!(render_weight(&[3]), "3L1");
        assert_eq!(render_weight(&[1, 2]), "L1+2L2");
        assert_eq!(render_weight(&[0, 1, 0]), "L2");
    }

    #[test]
    fn inner_products_match_hand_values() {
        // In A1, (alpha, alpha) = 2 and (rho, rho) = 1/2.
        let a1 = RootData::new(Series::A, 1).unwrap();
        let alpha = vec![Rat::from_integer(1)];
        assert_eq!(a1.inner(&alpha, &alpha), Rat::from_integer(2));
        assert_eq!(a1.inner(&a1.rho, &a1.rho), Rat::new(1, 2));

        // In G2 the short simple root has squared length 2/3.
        let g2 = RootData::new(Series::G2, 2).unwrap();
        let e1 = vec![Rat::from_integer(1), Rat::zero()];
        assert_eq!(g2.inner(&e1, &e1), Rat::new(2, 3));
    }
}
