//! The equivalence group: axis permutations (transposes) combined with
//! permutations of parallel hyperplanes along each axis.
//!
//! A transform `g = (σ, π_0, …, π_{d−1})` sends the index `α` to `γ` where
//! `β_{σ(i)} = α_i` and `γ_j = π_j(β_j)`: axes move first, then coordinates
//! are relabelled. `apply(A, g)[g(α)] = A[α]`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::io::serialize_matrix;
use crate::rational::Rational;
use crate::rng::SplitMix64;
use crate::tensor::{MultiMatrix, Shape};

/// Largest group that [`canonical_form`] will scan.
pub const CANONICAL_GROUP_LIMIT: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquivalenceTransform {
    pub axis_perm: Vec<usize>,
    pub hyperplane_perms: Vec<Vec<usize>>,
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

fn is_permutation_of(p: &[usize], len: usize) -> bool {
    let mut seen = vec![false; len];
    p.len() == len && p.iter().all(|&v| v < len && !std::mem::replace(&mut seen[v], true))
}

impl EquivalenceTransform {
    pub fn new(axis_perm: Vec<usize>, hyperplane_perms: Vec<Vec<usize>>) -> Result<Self> {
        let d = axis_perm.len();
        if !is_permutation_of(&axis_perm, d) || hyperplane_perms.len() != d {
            return Err(Error::Input("axis permutation is not a permutation".into()));
        }
        let n = hyperplane_perms.first().map_or(0, Vec::len);
        if hyperplane_perms.iter().any(|p| !is_permutation_of(p, n)) {
            return Err(Error::Input("hyperplane permutation is not a permutation".into()));
        }
        Ok(EquivalenceTransform {
            axis_perm,
            hyperplane_perms,
        })
    }

    pub fn identity(n: usize, d: usize) -> Self {
        EquivalenceTransform {
            axis_perm: (0..d).collect(),
            hyperplane_perms: vec![(0..n).collect(); d],
        }
    }

    /// Exchanges two axes, leaving coordinates alone.
    pub fn transpose(n: usize, d: usize, a: usize, b: usize) -> Self {
        let mut g = EquivalenceTransform::identity(n, d);
        g.axis_perm.swap(a, b);
        g
    }

    /// Permutes the hyperplanes orthogonal to one axis.
    pub fn hyperplanes(n: usize, d: usize, axis: usize, perm: Vec<usize>) -> Self {
        let mut g = EquivalenceTransform::identity(n, d);
        g.hyperplane_perms[axis] = perm;
        g
    }

    pub fn random(n: usize, d: usize, rng: &mut SplitMix64) -> Self {
        let axis_perm = rng.permutation(d);
        let hyperplane_perms = (0..d).map(|_| rng.permutation(n)).collect();
        EquivalenceTransform {
            axis_perm,
            hyperplane_perms,
        }
    }

    pub fn n(&self) -> usize {
        self.hyperplane_perms.first().map_or(0, Vec::len)
    }

    pub fn d(&self) -> usize {
        self.axis_perm.len()
    }

    pub fn map_index(&self, alpha: &[usize]) -> Vec<usize> {
        let mut gamma = vec![0; alpha.len()];
        for (i, &a) in alpha.iter().enumerate() {
            let j = self.axis_perm[i];
            gamma[j] = self.hyperplane_perms[j][a];
        }
        gamma
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &EquivalenceTransform) -> EquivalenceTransform {
        let axis_perm: Vec<usize> = other.axis_perm.iter().map(|&k| self.axis_perm[k]).collect();
        let self_axis_inv = invert(&self.axis_perm);
        let hyperplane_perms = (0..self.d())
            .map(|k| {
                let inner = &other.hyperplane_perms[self_axis_inv[k]];
                inner.iter().map(|&v| self.hyperplane_perms[k][v]).collect()
            })
            .collect();
        EquivalenceTransform {
            axis_perm,
            hyperplane_perms,
        }
    }

    pub fn inverse(&self) -> EquivalenceTransform {
        let axis_perm = invert(&self.axis_perm);
        let hyperplane_perms = (0..self.d())
            .map(|k| invert(&self.hyperplane_perms[self.axis_perm[k]]))
            .collect();
        EquivalenceTransform {
            axis_perm,
            hyperplane_perms,
        }
    }
}

pub fn apply_transform(a: &MultiMatrix, g: &EquivalenceTransform) -> Result<MultiMatrix> {
    if g.d() != a.d() || (a.d() > 0 && g.n() != a.n()) {
        return Err(Error::Shape(format!(
            "transform for order {}, dimension {} applied to order {}, dimension {}",
            g.n(),
            g.d(),
            a.n(),
            a.d()
        )));
    }
    let shape = a.shape();
    let mut out = vec![Rational::default(); a.entries().len()];
    for (k, v) in a.entries().iter().enumerate() {
        out[shape.offset(&g.map_index(&shape.coords(k)))] = v.clone();
    }
    MultiMatrix::new(a.n(), a.d(), out)
}

/// `(n!)^d · d!`, or `None` on overflow.
pub fn group_order(n: usize, d: usize) -> Option<u128> {
    let fact = |k: usize| (1..=k as u128).try_fold(1u128, |acc, v| acc.checked_mul(v));
    let nf = fact(n)?;
    (0..d).try_fold(fact(d)?, |acc, _| acc.checked_mul(nf))
}

pub(crate) fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Every element of the group, axis permutation outermost.
pub fn group_elements(n: usize, d: usize) -> Vec<EquivalenceTransform> {
    let perms = all_permutations(n);
    let mut out = Vec::new();
    for axis_perm in all_permutations(d) {
        let mut digits = vec![0usize; d];
        loop {
            out.push(EquivalenceTransform {
                axis_perm: axis_perm.clone(),
                hyperplane_perms: digits.iter().map(|&i| perms[i].clone()).collect(),
            });
            if !advance(&mut digits, perms.len()) {
                break;
            }
        }
    }
    out
}

/// Odometer increment, last digit fastest. Returns false after wrapping.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for slot in digits.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

fn check_group(n: usize, d: usize) -> Result<()> {
    match group_order(n, d) {
        Some(size) if size <= CANONICAL_GROUP_LIMIT => Ok(()),
        size => Err(Error::Capacity {
            what: "equivalence group order (n!)^d·d!",
            actual: size.map_or_else(|| "overflow".to_string(), |s| s.to_string()),
            bound: CANONICAL_GROUP_LIMIT.to_string(),
        }),
    }
}

/// Lexicographically smallest entry sequence (in numeric order) over the
/// whole orbit of `a`.
pub fn canonical_form(a: &MultiMatrix) -> Result<MultiMatrix> {
    let (n, d) = (a.n(), a.d());
    check_group(n, d)?;
    // Order-preserving relabelling of values to small integers.
    let mut values: Vec<&Rational> = a.entries().iter().collect();
    values.sort();
    values.dedup();
    let ranks: Vec<u32> = a
        .entries()
        .iter()
        .map(|v| values.binary_search(&v).expect("value present") as u32)
        .collect();

    let shape = a.shape();
    let perms = all_permutations(n);
    let inverse_perms: Vec<Vec<usize>> = perms.iter().map(|p| invert(p)).collect();

    let best = all_permutations(d)
        .par_iter()
        .map(|axis_perm| {
            let mut moved = vec![0u32; ranks.len()];
            let transpose = EquivalenceTransform {
                axis_perm: axis_perm.clone(),
                hyperplane_perms: vec![(0..n).collect(); d],
            };
            for (k, &r) in ranks.iter().enumerate() {
                moved[shape.offset(&transpose.map_index(&shape.coords(k)))] = r;
            }
            minimize_over_hyperplanes(&moved, shape, &inverse_perms)
        })
        .min()
        .unwrap_or_default();

    let entries = best.into_iter().map(|r| values[r as usize].clone()).collect();
    MultiMatrix::new(n, d, entries)
}

/// Minimum over all hyperplane relabellings of `src`, where the candidate
/// at `γ` reads `src[π⁻¹(γ)]`.
fn minimize_over_hyperplanes(src: &[u32], shape: Shape, inverse_perms: &[Vec<usize>]) -> Vec<u32> {
    let (n, d) = (shape.n, shape.d);
    let cells = src.len();
    let strides: Vec<usize> = (0..d).map(|j| shape.stride(j)).collect();
    let mut best: Vec<u32> = src.to_vec();
    let mut candidate = vec![0u32; cells];
    let mut digits = vec![0usize; d];
    // contrib[j][c] = stride_j · π_j⁻¹(c)
    let mut contrib = vec![vec![0usize; n]; d];
    let mut coords = vec![0usize; d];
    loop {
        for j in 0..d {
            for c in 0..n {
                contrib[j][c] = strides[j] * inverse_perms[digits[j]][c];
            }
        }
        coords.iter_mut().for_each(|c| *c = 0);
        let mut state = Ordering::Equal;
        for k in 0..cells {
            let offset: usize = (0..d).map(|j| contrib[j][coords[j]]).sum();
            candidate[k] = src[offset];
            if state == Ordering::Equal {
                state = candidate[k].cmp(&best[k]);
                if state == Ordering::Greater {
                    break;
                }
            }
            advance(&mut coords, n);
        }
        if state == Ordering::Less {
            best.copy_from_slice(&candidate);
        }
        if !advance(&mut digits, inverse_perms.len()) {
            break;
        }
    }
    best
}

pub fn are_equivalent(a: &MultiMatrix, b: &MultiMatrix) -> Result<bool> {
    if a.shape() != b.shape() {
        return Err(Error::Shape(format!(
            "cannot compare order {} dimension {} with order {} dimension {}",
            a.n(),
            a.d(),
            b.n(),
            b.d()
        )));
    }
    if a.support_size() != b.support_size() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub canonical: MultiMatrix,
    /// Smallest member in numeric lexicographic order.
    pub representative: MultiMatrix,
    /// Positions of the members in the input sequence.
    pub members: Vec<usize>,
}

impl EquivalenceClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn support_size(&self) -> usize {
        self.canonical.support_size()
    }
}

/// Partitions `ms` into equivalence classes, ordered by support size and
/// then by canonical form.
pub fn classify(ms: &[MultiMatrix]) -> Result<Vec<EquivalenceClass>> {
    if let Some(first) = ms.first() {
        if ms.iter().any(|m| m.shape() != first.shape()) {
            return Err(Error::Shape("classify needs matrices of one shape".into()));
        }
    }
    let canon: Vec<MultiMatrix> = ms
        .par_iter()
        .map(canonical_form)
        .collect::<Result<_>>()?;
    let mut groups: BTreeMap<(usize, Vec<Rational>), Vec<usize>> = BTreeMap::new();
    for (i, c) in canon.iter().enumerate() {
        groups
            .entry((c.support_size(), c.entries().to_vec()))
            .or_default()
            .push(i);
    }
    Ok(groups
        .into_values()
        .map(|members| {
            let representative = members
                .iter()
                .map(|&i| &ms[i])
                .min_by(|x, y| x.entries().cmp(y.entries()))
                .expect("class is nonempty")
                .clone();
            EquivalenceClass {
                canonical: canon[members[0]].clone(),
                representative,
                members,
            }
        })
        .collect())
}

/// A multidimensional permutation drawn from the orbit of the cyclic one
/// (`a_α = 1` iff `Σ α_i ≡ 0 mod n`) by a seeded random group element.
pub fn random_multidim_permutation(n: usize, d: usize, seed: u64) -> MultiMatrix {
    let g = EquivalenceTransform::random(n, d, &mut SplitMix64::new(seed));
    apply_transform(&MultiMatrix::cyclic_permutation(n, d), &g).expect("shapes agree")
}

/// Canonical text key, handy for sets and maps.
pub fn canonical_key(a: &MultiMatrix) -> Result<String> {
    Ok(serialize_matrix(&canonical_form(a)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, OMEGA_3_4_REPRESENTATIVES};
    use crate::vertex::is_vertex;
    use std::collections::BTreeSet;

    fn v33() -> MultiMatrix {
        catalog("V3_3").unwrap()
    }

    #[test]
    fn identity_and_transpose() {
        let a = v33();
        assert_eq!(apply_transform(&a, &EquivalenceTransform::identity(3, 3)).unwrap(), a);
        let p = MultiMatrix::permutation_matrix(&[1, 2, 0]);
        let pt = apply_transform(&p, &EquivalenceTransform::transpose(3, 2, 0, 1)).unwrap();
        assert_eq!(pt, MultiMatrix::permutation_matrix(&[2, 0, 1]));
    }

    #[test]
    fn hyperplane_swap_keeps_vertex() {
        let g = EquivalenceTransform::hyperplanes(3, 3, 0, vec![1, 0, 2]);
        let img = apply_transform(&v33(), &g).unwrap();
        assert_ne!(img, v33());
        assert!(img.is_polystochastic());
        assert!(is_vertex(&img).unwrap());
    }

    #[test]
    fn action_law_and_inverse() {
        let mut rng = SplitMix64::new(99);
        let a = catalog("A3").unwrap();
        for _ in 0..30 {
            let g = EquivalenceTransform::random(3, 4, &mut rng);
            let h = EquivalenceTransform::random(3, 4, &mut rng);
            let lhs = apply_transform(&a, &g.compose(&h)).unwrap();
            let rhs = apply_transform(&apply_transform(&a, &h).unwrap(), &g).unwrap();
            assert_eq!(lhs, rhs);
            let back = apply_transform(&apply_transform(&a, &g).unwrap(), &g.inverse()).unwrap();
            assert_eq!(back, a);
            assert_eq!(g.compose(&g.inverse()), EquivalenceTransform::identity(3, 4));
        }
    }

    #[test]
    fn shape_mismatch() {
        let g = EquivalenceTransform::identity(3, 4);
        assert!(matches!(apply_transform(&v33(), &g), Err(Error::Shape(_))));
        assert!(are_equivalent(&v33(), &catalog("A1").unwrap()).is_err());
        assert!(EquivalenceTransform::new(vec![0, 0], vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(EquivalenceTransform::new(vec![1, 0], vec![vec![0, 1], vec![1, 0]]).is_ok());
    }

    #[test]
    fn group_order_and_guard() {
        assert_eq!(group_order(3, 3), Some(1296));
        assert_eq!(group_order(3, 4), Some(31104));
        assert_eq!(group_elements(2, 2).len(), 8);
        let big = MultiMatrix::cyclic_permutation(5, 4);
        assert!(matches!(canonical_form(&big), Err(Error::Capacity { .. })));
    }

    #[test]
    fn canonical_form_is_orbit_minimum() {
        // Brute force over the materialized group.
        let a = v33();
        let brute = group_elements(3, 3)
            .iter()
            .map(|g| apply_transform(&a, g).unwrap())
            .min_by(|x, y| x.entries().cmp(y.entries()))
            .unwrap();
        assert_eq!(canonical_form(&a).unwrap(), brute);
    }

    #[test]
    fn canonical_form_properties() {
        let a = v33();
        let c = canonical_form(&a).unwrap();
        assert_eq!(canonical_form(&c).unwrap(), c);
        let t = apply_transform(&a, &EquivalenceTransform::transpose(3, 3, 0, 2)).unwrap();
        assert_eq!(canonical_form(&t).unwrap(), c);
        assert_ne!(
            canonical_form(&catalog("M3_4").unwrap()).unwrap(),
            canonical_form(&catalog("A1").unwrap()).unwrap()
        );
    }

    #[test]
    fn invariance_over_group_sample() {
        let mut rng = SplitMix64::new(5);
        for name in ["A2", "A4"] {
            let a = catalog(name).unwrap();
            let c = canonical_form(&a).unwrap();
            for _ in 0..100 {
                let g = EquivalenceTransform::random(3, 4, &mut rng);
                let img = apply_transform(&a, &g).unwrap();
                assert_eq!(img.support_size(), a.support_size());
                let mut x: Vec<_> = img.entries().to_vec();
                let mut y: Vec<_> = a.entries().to_vec();
                x.sort();
                y.sort();
                assert_eq!(x, y);
                assert_eq!(canonical_form(&img).unwrap(), c);
            }
        }
    }

    #[test]
    fn six_representatives_are_distinct() {
        let ms: Vec<MultiMatrix> = OMEGA_3_4_REPRESENTATIVES
            .iter()
            .map(|n| catalog(n).unwrap())
            .collect();
        for i in 0..6 {
            for j in i + 1..6 {
                assert!(!are_equivalent(&ms[i], &ms[j]).unwrap());
            }
        }
        assert_eq!(classify(&ms).unwrap().len(), 6);
    }

    #[test]
    fn order_three_permutations_are_all_equivalent() {
        let m = catalog("M3_4").unwrap();
        for seed in 0..20 {
            let p = random_multidim_permutation(3, 4, seed);
            assert!(p.is_permutation());
            assert!(are_equivalent(&p, &m).unwrap());
        }
    }

    #[test]
    fn random_permutations_of_order_two() {
        // Brute force: 0/1 cubes of order 2 with all line sums 1.
        let brute: BTreeSet<String> = (0u32..256)
            .map(|bits| {
                MultiMatrix::from_fn(2, 3, |c| {
                    Rational::from_integer(((bits >> (c[0] * 4 + c[1] * 2 + c[2])) & 1).into())
                })
            })
            .filter(|m| m.is_polystochastic())
            .map(|m| serialize_matrix(&m))
            .collect();
        assert_eq!(brute.len(), 2);
        let sampled: BTreeSet<String> = (0..64)
            .map(|s| serialize_matrix(&random_multidim_permutation(2, 3, s)))
            .collect();
        assert_eq!(sampled, brute);
        let p = random_multidim_permutation(3, 3, 1);
        assert!(p.is_permutation());
        assert_eq!(p, random_multidim_permutation(3, 3, 1));
    }

    #[test]
    fn equivalence_relation_spot_checks() {
        let mut rng = SplitMix64::new(17);
        let a = catalog("A3").unwrap();
        let b = apply_transform(&a, &EquivalenceTransform::random(3, 4, &mut rng)).unwrap();
        let c = apply_transform(&b, &EquivalenceTransform::random(3, 4, &mut rng)).unwrap();
        assert!(are_equivalent(&a, &a).unwrap());
        assert_eq!(are_equivalent(&a, &b).unwrap(), are_equivalent(&b, &a).unwrap());
        assert!(are_equivalent(&a, &b).unwrap() && are_equivalent(&b, &c).unwrap());
        assert!(are_equivalent(&a, &c).unwrap());
        let other = catalog("A4").unwrap();
        assert!(!are_equivalent(&a, &other).unwrap());
        assert!(!are_equivalent(&other, &a).unwrap());
    }

    #[test]
    fn v33_orbit() {
        let a = v33();
        let orbit: BTreeSet<String> = group_elements(3, 3)
            .iter()
            .map(|g| serialize_matrix(&apply_transform(&a, g).unwrap()))
            .collect();
        assert_eq!(1296 % orbit.len(), 0);
        assert_eq!(orbit.len(), 54);
        let classes = classify(std::slice::from_ref(&a)).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].size(), 1);
    }
}
