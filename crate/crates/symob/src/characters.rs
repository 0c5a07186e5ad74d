//! Character theory of the symmetric groups: hook-length dimensions,
//! Murnaghan–Nakayama character values, central idempotents, isotypic and
//! adjoint projections, induced permutation characters, and tensor-square
//! multiplicities. All values exact.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::error::{Result, SymobError};
use crate::perm::{all_permutations, factorial, list_partitions, Partition};
use crate::rational::{int, ratio};

/// The full character table of S_k over the rationals.
///
/// `partitions` is in reverse-lexicographic (descending) order, so index 0 is
/// the one-row partition (k); `values[i][j]` is χ indexed by `partitions[i]`
/// on the class of `partitions[j]`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CharacterTable {
    k: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
    class_sizes: Vec<u64>,
}

impl CharacterTable {
    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn index_of(&self, lambda: &Partition) -> Result<usize> {
        self.partitions
            .iter()
            .position(|p| p == lambda)
            .ok_or_else(|| SymobError::InvalidPartition(format!("{lambda} is not a partition of {}", self.k)))
    }

    /// χ_λ(C_μ).
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        Ok(self.values[self.index_of(lambda)?][self.index_of(mu)?])
    }

    /// Row of χ_λ over the classes, in table order.
    pub fn row(&self, lambda: &Partition) -> Result<&[i64]> {
        Ok(&self.values[self.index_of(lambda)?])
    }
}

fn table_cache() -> &'static Mutex<HashMap<usize, Arc<CharacterTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Build (or fetch) the character table of S_k by the Murnaghan–Nakayama
/// recursion.
pub fn character_table(k: usize) -> Arc<CharacterTable> {
    if let Some(found) = table_cache().lock().unwrap().get(&k) {
        return Arc::clone(found);
    }
    let partitions = list_partitions(k);
    let mut memo = HashMap::new();
    let values: Vec<Vec<i64>> = partitions
        .iter()
        .map(|lambda| {
            partitions
                .iter()
                .map(|mu| mn_value(lambda.parts(), mu.parts(), &mut memo))
                .collect()
        })
        .collect();
    let class_sizes = partitions.iter().map(|mu| mu.class_size() as u64).collect();
    let table = Arc::new(CharacterTable {
        k,
        partitions,
        values,
        class_sizes,
    });
    table_cache().lock().unwrap().insert(k, Arc::clone(&table));
    table
}

/// Murnaghan–Nakayama: peel the largest cycle of mu as a border strip.
///
/// Border strips of size t are found through beta-numbers (first-column hook
/// lengths): removing a strip is subtracting t from one beta-number while
/// keeping them distinct, with sign (−1)^(number of beta-numbers jumped over).
fn mn_value(lambda: &[usize], mu: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let t = mu[0];
    let rest = &mu[1..];
    let m = lambda.len();
    let betas: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + (m - 1 - i)).collect();
    let mut total = 0i64;
    for (i, &b) in betas.iter().enumerate() {
        if b < t || betas.contains(&(b - t)) {
            continue;
        }
        let height = betas.iter().filter(|&&c| c < b && c > b - t).count();
        let mut new_betas: Vec<usize> = betas.clone();
        new_betas[i] = b - t;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        // Convert back to a partition, dropping trailing zeros.
        let new_lambda: Vec<usize> = new_betas
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (m - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_value(&new_lambda, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// dim V_λ by the hook length formula.
pub fn irrep_dim(lambda: &Partition) -> u64 {
    let k = lambda.weight();
    let conj = lambda.conjugate();
    let mut product: u128 = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j) + (conj.parts()[j] - (i + 1));
            product *= hook as u128;
        }
    }
    (factorial(k) as u128 / product) as u64
}

/// χ_λ(C_μ) without materializing the whole table.
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(SymobError::DegreeMismatch(lambda.weight(), mu.weight()));
    }
    character_table(lambda.weight()).value(lambda, mu)
}

/// The central idempotent z_λ = (dim V_λ / k!) Σ_g χ_λ(type g) · g.
pub fn central_idempotent(lambda: &Partition) -> Result<AlgebraElement> {
    central_combination(lambda.weight(), &[lambda.clone()])
}

/// Σ_{λ∈S} z_λ, built in one pass over S_k.
fn central_combination(k: usize, which: &[Partition]) -> Result<AlgebraElement> {
    let table = character_table(k);
    // Coefficient per conjugacy class: Σ_λ dim(λ) χ_λ(class) / k!.
    let mut class_coef: HashMap<Partition, BigRational> = HashMap::new();
    for (j, mu) in table.partitions().iter().enumerate() {
        let mut c = BigRational::zero();
        for lambda in which {
            let i = table.index_of(lambda)?;
            c += int(irrep_dim(lambda) as i64) * int(table.values[i][j]);
        }
        class_coef.insert(mu.clone(), c / int(factorial(k) as i64));
    }
    let mut terms = Vec::new();
    for g in all_permutations(k) {
        let coef = class_coef[&g.cycle_type()].clone();
        if !coef.is_zero() {
            terms.push((g, coef));
        }
    }
    AlgebraElement::from_terms(k, terms)
}

/// Project x onto the matrix blocks of the partitions in `which`:
/// `x · Σ_{λ∈which} z_λ` (the projector is central, so side-independent).
pub fn isotypic_project(x: &AlgebraElement, which: &[Partition]) -> Result<AlgebraElement> {
    for lambda in which {
        if lambda.weight() != x.degree() {
            return Err(SymobError::DegreeMismatch(lambda.weight(), x.degree()));
        }
    }
    if which.is_empty() {
        return Ok(AlgebraElement::zero(x.degree()));
    }
    let z = central_combination(x.degree(), which)?;
    x.multiply(&z)
}

/// The μ-isotypic projector of the conjugation (adjoint) action:
/// `(dim V_μ / k!) Σ_g χ_μ(type g) · g x g^{-1}`.
pub fn adjoint_project(x: &AlgebraElement, mu: &Partition) -> Result<AlgebraElement> {
    let k = x.degree();
    if mu.weight() != k {
        return Err(SymobError::DegreeMismatch(mu.weight(), k));
    }
    let table = character_table(k);
    let scale_all = ratio(irrep_dim(mu) as i64, factorial(k) as i64);
    let mut out = AlgebraElement::zero(k);
    for g in all_permutations(k) {
        let chi = table.value(mu, &g.cycle_type())?;
        if chi == 0 {
            continue;
        }
        let moved = x.conjugate_by(&g)?;
        out = out.add(&moved.scale(&int(chi)))?;
    }
    Ok(out.scale(&scale_all))
}

/// ψ_λ(C_μ) = (1/|C_μ|) [S_k : S_λ] |C_μ ∩ S_λ|: the permutation character
/// induced from the trivial character of the Young subgroup S_λ.
pub fn induced_character(lambda: &Partition, mu: &Partition) -> Result<BigRational> {
    let k = lambda.weight();
    if mu.weight() != k {
        return Err(SymobError::DegreeMismatch(mu.weight(), k));
    }
    let class_count = class_intersection_count(lambda, mu);
    let index = lambda
        .parts()
        .iter()
        .fold(int(factorial(k) as i64), |acc, &p| acc / int(factorial(p) as i64));
    Ok(index * int(class_count as i64) / int(mu.class_size() as i64))
}

/// |C_μ ∩ S_λ|: elements of the Young subgroup with total cycle type μ,
/// counted by distributing the multiset of cycles of μ over the blocks of λ.
pub fn class_intersection_count(lambda: &Partition, mu: &Partition) -> u64 {
    // Remaining cycles per length, as (length, count) pairs.
    let mut pool: Vec<(usize, usize)> = mu.multiplicities();
    fn go(blocks: &[usize], pool: &mut Vec<(usize, usize)>) -> u64 {
        let Some((&block, rest)) = blocks.split_first() else {
            return 1;
        };
        // Choose a sub-multiset of the pool with total size `block`.
        fn choose(
            idx: usize,
            remaining: usize,
            pool: &mut Vec<(usize, usize)>,
            taken: &mut Vec<(usize, usize)>,
            rest: &[usize],
            acc: &mut u64,
        ) {
            if remaining == 0 || idx == pool.len() {
                if remaining != 0 {
                    return;
                }
                let block_type = Partition::new(
                    taken
                        .iter()
                        .flat_map(|&(len, cnt)| std::iter::repeat(len).take(cnt))
                        .collect(),
                )
                .expect("cycle lengths are positive");
                let here = block_type.class_size() as u64;
                *acc += here * go(rest, pool);
                return;
            }
            let (len, avail) = pool[idx];
            let max_take = (remaining / len).min(avail);
            for take in 0..=max_take {
                pool[idx].1 = avail - take;
                if take > 0 {
                    taken.push((len, take));
                }
                choose(idx + 1, remaining - take * len, pool, taken, rest, acc);
                if take > 0 {
                    taken.pop();
                }
            }
            pool[idx].1 = avail;
        }
        let mut acc = 0u64;
        let mut taken = Vec::new();
        choose(0, block, pool, &mut taken, rest, &mut acc);
        acc
    }
    go(lambda.parts(), &mut pool)
}

/// Brute-force oracle for [`class_intersection_count`]: enumerate the class
/// of μ and count the elements preserving each consecutive block of λ.
pub fn class_intersection_count_naive(lambda: &Partition, mu: &Partition) -> Result<u64> {
    let mut count = 0u64;
    for g in mu.enumerate_class(mu.weight())? {
        let mut inside = true;
        let mut start = 1usize;
        for &part in lambda.parts() {
            let end = start + part;
            if (start..end).any(|i| g.apply(i) < start || g.apply(i) >= end) {
                inside = false;
                break;
            }
            start = end;
        }
        if inside {
            count += 1;
        }
    }
    Ok(count)
}

/// ⟨χ_λ · χ_λ, χ_μ⟩ = (1/k!) Σ_ν |C_ν| χ_λ(ν)² χ_μ(ν).
pub fn tensor_square_multiplicity(lambda: &Partition, mu: &Partition) -> Result<u64> {
    let k = lambda.weight();
    if mu.weight() != k {
        return Err(SymobError::DegreeMismatch(mu.weight(), k));
    }
    let table = character_table(k);
    let li = table.index_of(lambda)?;
    let mi = table.index_of(mu)?;
    let mut total = 0i128;
    for j in 0..table.partitions.len() {
        let chl = table.values[li][j] as i128;
        let chm = table.values[mi][j] as i128;
        total += table.class_sizes[j] as i128 * chl * chl * chm;
    }
    let k_fact = factorial(k) as i128;
    assert!(total % k_fact == 0 && total >= 0, "inner product must be a nonnegative integer");
    Ok((total / k_fact) as u64)
}
