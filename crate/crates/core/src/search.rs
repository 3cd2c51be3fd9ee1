//! Finding vertices of `Ω_n^d`.
//!
//! `Ω_n^d = {x ≥ 0 : Lx = 1}` where `L` is the line/cell incidence matrix,
//! whose rank is `r = n^d − (n−1)^d`. Vertices are the basic feasible
//! solutions, so small polytopes are enumerated by trying every zero-set of
//! `(n−1)^d` cells, and larger ones are sampled by maximizing random
//! objectives with an exact simplex.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::bounds::{binomial, pow};
use crate::catalog::{catalog, CATALOG_NAMES};
use crate::error::{Error, Result};
use crate::io::serialize_matrix;
use crate::linalg::{rref, Field, Small};
use crate::rational::{int, Rational};
use crate::rng::SplitMix64;
use crate::symmetry::{canonical_form, classify, group_order, CANONICAL_GROUP_LIMIT};
use crate::tensor::{line_ids, MultiMatrix, Shape};

/// Largest number of zero-sets [`enumerate_vertices`] will try.
pub const ENUMERATION_BUDGET: u64 = 10_000_000;

/// The equality system `Lx = 1` describing `Ω_n^d`.
#[derive(Clone, Debug)]
pub struct LineSystem {
    pub shape: Shape,
    /// Cell offsets of each line, in [`line_ids`] order.
    pub lines: Vec<Vec<usize>>,
    /// Line indices through each cell.
    pub cell_lines: Vec<Vec<usize>>,
}

impl LineSystem {
    pub fn new(n: usize, d: usize) -> Self {
        let shape = Shape::new(n, d);
        let lines = line_ids(n, d).iter().map(|l| shape.line_cells(l)).collect();
        let cell_lines = (0..shape.cells()).map(|k| shape.lines_through(k)).collect();
        LineSystem {
            shape,
            lines,
            cell_lines,
        }
    }

    pub fn cells(&self) -> usize {
        self.shape.cells()
    }

    /// `n^d − (n−1)^d`.
    pub fn rank(&self) -> usize {
        self.cells() - Shape::new(self.shape.n - 1, self.shape.d).cells()
    }

    /// Dense 0/1 form, rows = lines, columns = cells.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        self.lines
            .iter()
            .map(|cells| {
                let mut row = vec![false; self.cells()];
                cells.iter().for_each(|&k| row[k] = true);
                row
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSolution {
    /// Basic columns, increasing.
    pub basis: Vec<usize>,
    pub values: Vec<Rational>,
    pub objective_value: Rational,
}

impl BasicSolution {
    pub fn to_matrix(&self, sys: &LineSystem) -> MultiMatrix {
        MultiMatrix::new(sys.shape.n, sys.shape.d, self.values.clone()).expect("shape")
    }
}

#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    /// Worker threads; `0` or `1` runs on the calling thread.
    pub threads: usize,
    /// Order in which cells are fed to the zero-set generator.
    pub cell_order: Option<Vec<usize>>,
}

const PRIME: u64 = 4_294_967_291;

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % PRIME, PRIME - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % PRIME;
        }
        base = base * base % PRIME;
        exp >>= 1;
    }
    acc
}

/// Whether every minor of `[L_B | 1]` is smaller than [`PRIME`] in absolute
/// value, so that rank modulo the prime equals rank over the rationals.
/// Columns of `L` have `d` ones and the right-hand side has one per line,
/// so Hadamard's inequality bounds minors by `d^{r/2} · √lines`.
fn modular_rank_is_exact(sys: &LineSystem) -> bool {
    let r = sys.rank() as f64;
    let log_bound = r / 2.0 * (sys.shape.d as f64).ln() + 0.5 * (sys.lines.len() as f64).ln();
    log_bound < (PRIME as f64).ln() - 1.0
}

/// Incremental echelon form of a set of columns of `L`, modulo [`PRIME`].
/// Each stored vector is reduced against the earlier ones, so it vanishes
/// at their pivot rows, and is scaled to one at its own pivot.
struct ModEchelon {
    rows: usize,
    vectors: Vec<(usize, Vec<u64>)>,
}

impl ModEchelon {
    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (p, u) in &self.vectors {
            let f = v[*p];
            if f == 0 {
                continue;
            }
            for (x, y) in v.iter_mut().zip(u) {
                if *y != 0 {
                    *x = (*x + PRIME - f * y % PRIME) % PRIME;
                }
            }
        }
        v
    }

    /// Pushes the column if it is independent of the stored ones.
    fn push(&mut self, column: Vec<u64>) -> bool {
        let mut v = self.reduce(column);
        match v.iter().position(|&x| x != 0) {
            Some(p) => {
                let inv = inv_mod(v[p]);
                v.iter_mut().for_each(|x| *x = *x * inv % PRIME);
                self.vectors.push((p, v));
                true
            }
            None => false,
        }
    }

    fn spans_ones(&self) -> bool {
        self.reduce(vec![1; self.rows]).iter().all(|&x| x == 0)
    }
}

/// Solves `L_B x = 1` in floating point for a basis known to be independent
/// and consistent; used only to discard clearly infeasible bases early.
fn float_solution(sys: &LineSystem, basis: &[usize]) -> Vec<f64> {
    let rows = sys.lines.len();
    let width = basis.len() + 1;
    let mut m = vec![0f64; rows * width];
    for (c, &cell) in basis.iter().enumerate() {
        for &line in &sys.cell_lines[cell] {
            m[line * width + c] = 1.0;
        }
    }
    for row in 0..rows {
        m[row * width + basis.len()] = 1.0;
    }
    for c in 0..basis.len() {
        let p = (c..rows)
            .max_by(|&i, &j| m[i * width + c].abs().total_cmp(&m[j * width + c].abs()))
            .expect("rows remain");
        for j in 0..width {
            m.swap(p * width + j, c * width + j);
        }
        let pivot = m[c * width + c];
        for i in 0..rows {
            if i == c {
                continue;
            }
            let f = m[i * width + c] / pivot;
            if f != 0.0 {
                for j in c..width {
                    m[i * width + j] -= f * m[c * width + j];
                }
            }
        }
    }
    (0..basis.len())
        .map(|c| m[c * width + basis.len()] / m[c * width + c])
        .collect()
}

/// Exact unique solution of `L_B x = 1`, or `None` when the basis columns
/// are dependent or the system is inconsistent.
fn solve_on_basis<F: Field>(sys: &LineSystem, basis: &[usize]) -> Option<Option<Vec<F>>> {
    let width = basis.len() + 1;
    let mut m: Vec<Vec<F>> = vec![vec![F::zero(); width]; sys.lines.len()];
    for (c, &cell) in basis.iter().enumerate() {
        for &line in &sys.cell_lines[cell] {
            m[line][c] = F::one();
        }
    }
    for row in m.iter_mut() {
        row[basis.len()] = F::one();
    }
    let pivots = rref(&mut m)?;
    if pivots.len() != basis.len() || pivots.last() == Some(&basis.len()) {
        return Some(None);
    }
    Some(Some(m.into_iter().take(basis.len()).map(|row| row[basis.len()].clone()).collect()))
}

fn basic_point(sys: &LineSystem, basis: &[usize]) -> Option<Vec<Rational>> {
    let values: Vec<Rational> = match solve_on_basis::<Small>(sys, basis) {
        Some(sol) => sol?.iter().map(Field::to_rational).collect(),
        None => solve_on_basis::<BigRational>(sys, basis).expect("no overflow")?,
    };
    if values.iter().any(|v| v < &int(0)) {
        return None;
    }
    let mut point = vec![int(0); sys.cells()];
    for (&cell, v) in basis.iter().zip(values) {
        point[cell] = v;
    }
    Some(point)
}

/// Depth-first search over include/exclude decisions for each cell, in
/// `order`. A branch dies when the excluded cells cover a whole line or,
/// in modular mode, when an included column is dependent on earlier ones.
struct BasisSearch<'a> {
    sys: &'a LineSystem,
    order: &'a [usize],
    rank: usize,
    zero_size: usize,
    modular: bool,
    line_zeros: Vec<usize>,
    basis: Vec<usize>,
    echelon: ModEchelon,
    found: HashSet<Vec<Rational>>,
    /// Supports of `found` as bit sets over cells.
    found_supports: Vec<Vec<u64>>,
}

impl<'a> BasisSearch<'a> {
    fn new(sys: &'a LineSystem, order: &'a [usize], modular: bool) -> Self {
        BasisSearch {
            sys,
            order,
            rank: sys.rank(),
            zero_size: sys.cells() - sys.rank(),
            modular,
            line_zeros: vec![0; sys.lines.len()],
            basis: Vec::new(),
            echelon: ModEchelon {
                rows: sys.lines.len(),
                vectors: Vec::new(),
            },
            found: HashSet::new(),
            found_supports: Vec::new(),
        }
    }

    fn excluded(&self, pos: usize) -> usize {
        pos - self.basis.len()
    }

    fn include(&mut self, pos: usize) -> bool {
        if self.basis.len() == self.rank {
            return false;
        }
        let cell = self.order[pos];
        if self.modular {
            let mut column = vec![0u64; self.sys.lines.len()];
            self.sys.cell_lines[cell].iter().for_each(|&l| column[l] = 1);
            if !self.echelon.push(column) {
                return false;
            }
        }
        self.basis.push(cell);
        true
    }

    fn undo_include(&mut self) {
        self.basis.pop();
        if self.modular {
            self.echelon.vectors.pop();
        }
    }

    /// Marks the cell zero; the caller must undo even when this fails.
    fn exclude(&mut self, pos: usize) -> bool {
        let n = self.sys.shape.n;
        let mut ok = self.excluded(pos) < self.zero_size;
        for &line in &self.sys.cell_lines[self.order[pos]] {
            self.line_zeros[line] += 1;
            ok &= self.line_zeros[line] < n;
        }
        ok
    }

    fn undo_exclude(&mut self, pos: usize) {
        for &line in &self.sys.cell_lines[self.order[pos]] {
            self.line_zeros[line] -= 1;
        }
    }

    /// Applies a decision prefix; false if it is pruned.
    fn replay(&mut self, prefix: &[bool]) -> bool {
        prefix.iter().enumerate().all(|(pos, &inc)| {
            if inc {
                self.include(pos)
            } else {
                self.exclude(pos)
            }
        })
    }

    fn descend(&mut self, pos: usize) {
        if pos == self.order.len() {
            self.leaf();
            return;
        }
        if self.include(pos) {
            self.descend(pos + 1);
            self.undo_include();
        }
        if self.exclude(pos) {
            self.descend(pos + 1);
        }
        self.undo_exclude(pos);
    }

    /// Feasible decision prefixes of length `depth`, in search order.
    fn prefixes(&mut self, pos: usize, depth: usize, acc: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if pos == depth {
            out.push(acc.clone());
            return;
        }
        if self.include(pos) {
            acc.push(true);
            self.prefixes(pos + 1, depth, acc, out);
            acc.pop();
            self.undo_include();
        }
        if self.exclude(pos) {
            acc.push(false);
            self.prefixes(pos + 1, depth, acc, out);
            acc.pop();
        }
        self.undo_exclude(pos);
    }

    fn leaf(&mut self) {
        if self.modular && !self.echelon.spans_ones() {
            return;
        }
        let mut basis = self.basis.clone();
        basis.sort_unstable();
        // A basis containing a known vertex's support solves to that vertex.
        let mask = bit_set(self.sys.cells(), &basis);
        let covered = |support: &Vec<u64>| support.iter().zip(&mask).all(|(s, b)| s & !b == 0);
        if self.found_supports.iter().any(covered) {
            return;
        }
        if self.modular && float_solution(self.sys, &basis).iter().any(|&x| x < -1e-6) {
            return;
        }
        if let Some(point) = basic_point(self.sys, &basis) {
            let support: Vec<usize> = (0..point.len()).filter(|&k| point[k] != int(0)).collect();
            self.found_supports.push(bit_set(self.sys.cells(), &support));
            self.found.insert(point);
        }
    }
}

fn bit_set(len: usize, members: &[usize]) -> Vec<u64> {
    let mut bits = vec![0u64; len.div_ceil(64)];
    members.iter().for_each(|&k| bits[k / 64] |= 1 << (k % 64));
    bits
}

fn enumeration_size(n: usize, d: usize) -> BigUint {
    let cells = pow(n, d);
    binomial(&cells, &pow(n.saturating_sub(1), d))
}

/// Every vertex of `Ω_n^d`, each once, sorted by serialized form.
pub fn enumerate_vertices(n: usize, d: usize) -> Result<Vec<MultiMatrix>> {
    enumerate_vertices_with(n, d, &EnumerateOptions::default())
}

pub fn enumerate_vertices_with(
    n: usize,
    d: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<MultiMatrix>> {
    if n == 0 || d == 0 {
        return Err(Error::Input("order and dimension must be at least 1".into()));
    }
    let size = enumeration_size(n, d);
    if size > BigUint::from(ENUMERATION_BUDGET) {
        return Err(Error::Capacity {
            what: "zero-set candidates C(n^d, (n-1)^d)",
            actual: size.to_string(),
            bound: ENUMERATION_BUDGET.to_string(),
        });
    }
    let sys = LineSystem::new(n, d);
    let cells = sys.cells();
    let order: Vec<usize> = match &opts.cell_order {
        Some(o) => {
            let mut sorted = o.clone();
            sorted.sort_unstable();
            if sorted != (0..cells).collect::<Vec<_>>() {
                return Err(Error::Input("cell order is not a permutation of the cells".into()));
            }
            o.clone()
        }
        None => (0..cells).collect(),
    };
    let modular = modular_rank_is_exact(&sys);

    let mut prefixes = Vec::new();
    BasisSearch::new(&sys, &order, modular).prefixes(0, cells.min(10), &mut Vec::new(), &mut prefixes);
    let run = |prefix: &Vec<bool>| -> HashSet<Vec<Rational>> {
        let mut s = BasisSearch::new(&sys, &order, modular);
        if s.replay(prefix) {
            s.descend(prefix.len());
        }
        s.found
    };
    let threads = opts.threads.max(1);
    let found: Vec<HashSet<Vec<Rational>>> = if threads == 1 {
        prefixes.iter().map(run).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Input(format!("thread pool: {e}")))?
            .install(|| prefixes.par_iter().map(run).collect())
    };

    let mut merged: BTreeMap<String, MultiMatrix> = BTreeMap::new();
    for point in found.into_iter().flatten() {
        let m = MultiMatrix::new(n, d, point)?;
        merged.entry(serialize_matrix(&m)).or_insert(m);
    }
    Ok(merged.into_values().collect())
}

/// Dense simplex tableau in canonical form with respect to `basis`.
struct Tableau<F> {
    rows: Vec<Vec<F>>,
    rhs: Vec<F>,
    basis: Vec<usize>,
}

impl<F: Field> Tableau<F> {
    fn pivot(&mut self, row: usize, col: usize) -> Option<()> {
        let inv = F::one().div(&self.rows[row][col])?;
        for v in self.rows[row].iter_mut() {
            if !v.is_zero() {
                *v = v.mul(&inv)?;
            }
        }
        self.rhs[row] = self.rhs[row].mul(&inv)?;
        let prow = self.rows[row].clone();
        let prhs = self.rhs[row].clone();
        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for (v, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v = v.sub(&f.mul(p)?)?;
                }
            }
            self.rhs[i] = self.rhs[i].sub(&f.mul(&prhs)?)?;
        }
        self.basis[row] = col;
        Some(())
    }
}

/// Starting tableau: the support of the cyclic permutation extended to `r`
/// independent columns; redundant line equations drop out.
fn initial_tableau<F: Field>(sys: &LineSystem) -> Option<Tableau<F>> {
    let cells = sys.cells();
    let mut rows: Vec<Vec<F>> = sys
        .lines
        .iter()
        .map(|line| {
            let mut row = vec![F::zero(); cells];
            line.iter().for_each(|&k| row[k] = F::one());
            row
        })
        .collect();
    let mut rhs = vec![F::one(); rows.len()];
    let start = MultiMatrix::cyclic_permutation(sys.shape.n, sys.shape.d).support_offsets();
    let candidates = start
        .iter()
        .copied()
        .chain((0..cells).filter(|k| !start.contains(k)));

    let mut t = Tableau {
        rows: std::mem::take(&mut rows),
        rhs: std::mem::take(&mut rhs),
        basis: vec![usize::MAX; sys.lines.len()],
    };
    let mut pivoted = vec![false; t.rows.len()];
    let target = sys.rank();
    let mut count = 0;
    for col in candidates {
        if count == target {
            break;
        }
        let Some(row) = (0..t.rows.len()).find(|&i| !pivoted[i] && !t.rows[i][col].is_zero())
        else {
            continue;
        };
        t.pivot(row, col)?;
        pivoted[row] = true;
        count += 1;
    }
    debug_assert_eq!(count, target);
    let keep: Vec<usize> = (0..t.rows.len()).filter(|&i| pivoted[i]).collect();
    Some(Tableau {
        rows: keep.iter().map(|&i| t.rows[i].clone()).collect(),
        rhs: keep.iter().map(|&i| t.rhs[i].clone()).collect(),
        basis: keep.iter().map(|&i| t.basis[i]).collect(),
    })
}

fn simplex<F: Field>(sys: &LineSystem, objective: &[Rational]) -> Option<BasicSolution> {
    let c: Vec<F> = objective.iter().map(F::from_rational).collect::<Option<_>>()?;
    let mut t = initial_tableau::<F>(sys)?;
    let cells = sys.cells();
    loop {
        let mut in_basis = vec![false; cells];
        t.basis.iter().for_each(|&b| in_basis[b] = true);
        // Bland: lowest-index improving column enters.
        let mut entering = None;
        for j in (0..cells).filter(|&j| !in_basis[j]) {
            let mut reduced = c[j].clone();
            for (row, &b) in t.rows.iter().zip(&t.basis) {
                if !row[j].is_zero() && !c[b].is_zero() {
                    reduced = reduced.sub(&c[b].mul(&row[j])?)?;
                }
            }
            if reduced.is_positive() {
                entering = Some(j);
                break;
            }
        }
        let Some(col) = entering else { break };
        // Ratio test; ties go to the lowest-index basic variable.
        let mut leave: Option<(usize, F)> = None;
        for i in 0..t.rows.len() {
            if !t.rows[i][col].is_positive() {
                continue;
            }
            let ratio = t.rhs[i].div(&t.rows[i][col])?;
            let better = match &leave {
                None => true,
                Some((li, lr)) => {
                    let diff = ratio.sub(lr)?;
                    diff.is_negative() || (diff.is_zero() && t.basis[i] < t.basis[*li])
                }
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (row, _) = leave.expect("Ω_n^d is bounded");
        t.pivot(row, col)?;
    }
    let mut values = vec![crate::rational::int(0); cells];
    for (&b, v) in t.basis.iter().zip(&t.rhs) {
        values[b] = v.to_rational();
    }
    let objective_value = values
        .iter()
        .zip(objective)
        .fold(crate::rational::int(0), |acc, (x, c)| acc + x * c);
    let mut basis = t.basis.clone();
    basis.sort_unstable();
    Some(BasicSolution {
        basis,
        values,
        objective_value,
    })
}

/// Maximizes `objective · x` over `Ω_n^d` with Bland's rule in exact
/// arithmetic.
pub fn simplex_solve(sys: &LineSystem, objective: &[Rational]) -> Result<BasicSolution> {
    if objective.len() != sys.cells() {
        return Err(Error::Shape(format!(
            "objective has {} entries, expected {}",
            objective.len(),
            sys.cells()
        )));
    }
    Ok(simplex::<Small>(sys, objective)
        .or_else(|| simplex::<BigRational>(sys, objective))
        .expect("big rational simplex cannot overflow"))
}

/// Objective with entries drawn uniformly from `[-1000, 1000]`, in storage order.
pub fn random_objective(cells: usize, seed: u64) -> Vec<Rational> {
    let mut rng = SplitMix64::new(seed);
    (0..cells).map(|_| int(rng.range_i64(-1000, 1000))).collect()
}

pub fn sample_vertex(n: usize, d: usize, seed: u64) -> MultiMatrix {
    sample_vertex_in(&LineSystem::new(n, d), seed)
}

fn sample_vertex_in(sys: &LineSystem, seed: u64) -> MultiMatrix {
    let objective = random_objective(sys.cells(), seed);
    simplex_solve(sys, &objective)
        .expect("objective length matches")
        .to_matrix(sys)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyClass {
    pub representative: MultiMatrix,
    pub support_size: usize,
    pub count: usize,
    /// Catalog entry in the same class, if any.
    pub matches_catalog: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyReport {
    pub n: usize,
    pub d: usize,
    pub samples: usize,
    pub classes: Vec<SurveyClass>,
    pub support_histogram: BTreeMap<usize, usize>,
}

/// Samples `seed_count` vertices with seeds `seed0, seed0 + 1, …` and groups
/// them into equivalence classes.
pub fn sample_survey(
    n: usize,
    d: usize,
    seed_count: usize,
    seed0: u64,
    threads: usize,
) -> Result<SurveyReport> {
    match group_order(n, d) {
        Some(g) if g <= CANONICAL_GROUP_LIMIT => {}
        g => {
            return Err(Error::Capacity {
                what: "equivalence group order (n!)^d·d!",
                actual: g.map_or_else(|| "overflow".into(), |v| v.to_string()),
                bound: CANONICAL_GROUP_LIMIT.to_string(),
            })
        }
    }
    let sys = LineSystem::new(n, d);
    let seeds: Vec<u64> = (0..seed_count as u64).map(|k| seed0.wrapping_add(k)).collect();
    let sample_all = || -> Vec<MultiMatrix> {
        seeds.par_iter().map(|&s| sample_vertex_in(&sys, s)).collect()
    };
    let (samples, classes) = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Input(format!("thread pool: {e}")))?
        .install(|| -> Result<_> {
            let samples = sample_all();
            let classes = classify(&samples)?;
            Ok((samples, classes))
        })?;

    let known: Vec<(&str, MultiMatrix)> = CATALOG_NAMES
        .iter()
        .filter_map(|&name| {
            let m = catalog(name).ok()?;
            (m.shape() == sys.shape).then_some((name, m))
        })
        .map(|(name, m)| canonical_form(&m).map(|c| (name, c)))
        .collect::<Result<_>>()?;

    let mut support_histogram = BTreeMap::new();
    for m in &samples {
        *support_histogram.entry(m.support_size()).or_insert(0) += 1;
    }
    let classes = classes
        .into_iter()
        .map(|c| SurveyClass {
            support_size: c.support_size(),
            count: c.size(),
            matches_catalog: known
                .iter()
                .find(|(_, k)| k == &c.canonical)
                .map(|(name, _)| name.to_string()),
            representative: c.representative,
        })
        .collect();
    Ok(SurveyReport {
        n,
        d,
        samples: samples.len(),
        classes,
        support_histogram,
    })
}

impl SurveyReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n: {}\nd: {}\nsamples: {}\nclasses: {}\n",
            self.n,
            self.d,
            self.samples,
            self.classes.len()
        );
        for (i, c) in self.classes.iter().enumerate() {
            let label = c
                .matches_catalog
                .clone()
                .unwrap_or_else(|| "new candidate class".to_string());
            out.push_str(&format!(
                "class {}: count {} support {} matches {}\n",
                i + 1,
                c.count,
                c.support_size,
                label
            ));
        }
        for (support, count) in &self.support_histogram {
            out.push_str(&format!("support {support}: {count}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let classes: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                format!(
                    "{{\"representative\":{},\"support_size\":{},\"count\":{},\"matches_catalog\":{}}}",
                    serialize_matrix(&c.representative),
                    c.support_size,
                    c.count,
                    c.matches_catalog
                        .as_ref()
                        .map_or_else(|| "null".to_string(), |s| format!("\"{s}\""))
                )
            })
            .collect();
        let histogram: Vec<String> = self
            .support_histogram
            .iter()
            .map(|(k, v)| format!("\"{k}\":{v}"))
            .collect();
        format!(
            "{{\"n\":{},\"d\":{},\"samples\":{},\"classes\":[{}],\"support_histogram\":{{{}}}}}",
            self.n,
            self.d,
            self.samples,
            classes.join(","),
            histogram.join(",")
        )
    }
}

/// `C(n^d, (n−1)^d)` as a plain number when it fits.
pub fn enumeration_candidates(n: usize, d: usize) -> Option<u64> {
    enumeration_size(n, d).to_u64()
}
