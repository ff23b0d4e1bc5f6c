//! Class groups of negative discriminants and their characters.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::forms::{compose, reduced_forms, QuadForm};
use super::{is_fundamental, QuadError};
use crate::exact_algebra::Cyclo;

/// Smith normal form of an integer matrix, keeping the column transform.
///
/// Returns the nonzero diagonal entries `d₁ | d₂ | …` (without the trivial
/// 1s dropped) and the unimodular `V` with `U·A·V = diag(…)`.
fn smith_columns(mut a: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<BigInt>, Vec<Vec<BigInt>>) {
    let nrows = a.len();
    let mut v: Vec<Vec<BigInt>> = (0..ncols)
        .map(|i| (0..ncols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let col_op = |a: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, k: &BigInt| {
        // column dst += k · column src
        for row in a.iter_mut() {
            let t = &row[src] * k;
            row[dst] += t;
        }
        for row in v.iter_mut() {
            let t = &row[src] * k;
            row[dst] += t;
        }
    };
    let swap_cols = |a: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
    };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < ncols.min(nrows) {
        // smallest nonzero entry of the remaining block
        let pivot = (t..nrows)
            .flat_map(|i| (t..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        swap_cols(&mut a, &mut v, t, pj);
        loop {
            let mut done = true;
            // clear column t with row operations
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let k = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(head[t].iter()) {
                    *x -= &k * y;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    done = false;
                }
            }
            // clear row t with column operations
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let k = -a[t][j].div_floor(&a[t][t]);
                col_op(&mut a, &mut v, j, t, &k);
                if !a[t][j].is_zero() {
                    swap_cols(&mut a, &mut v, t, j);
                    done = false;
                }
            }
            if !done {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..nrows)
                .flat_map(|i| (t + 1..ncols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    // row t += row i, then repeat
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[t].iter_mut().zip(tail[0].iter()) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for row in a.iter_mut() {
                row[t] = -&row[t];
            }
            for row in v.iter_mut() {
                row[t] = -&row[t];
            }
        }
        diag.push(a[t][t].clone());
        t += 1;
    }
    (diag, v)
}

/// The class group of a negative discriminant.
#[derive(Clone, Debug)]
pub struct QuadClassGroup {
    disc: i64,
    classes: Vec<QuadForm>,
    index: HashMap<QuadForm, usize>,
    table: Vec<Vec<usize>>,
    invariant_factors: Vec<u64>,
    generators: Vec<QuadForm>,
    /// Coordinates of each class in `⊕ Z/nᵢ`.
    coords: Vec<Vec<u64>>,
}

impl QuadClassGroup {
    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn classes(&self) -> &[QuadForm] {
        &self.classes
    }

    pub fn order(&self) -> usize {
        self.classes.len()
    }

    /// `n₁ | n₂ | …`, all greater than 1 (empty for the trivial group).
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn generators(&self) -> &[QuadForm] {
        &self.generators
    }

    /// Largest invariant factor (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.invariant_factors.last().copied().unwrap_or(1)
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Position of a reduced form in [`Self::classes`].
    pub fn index_of(&self, f: &QuadForm) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Product of two classes by index.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.index[&self.classes[i].inverse().normalized()]
    }

    /// Coordinates of class `i` with respect to the generators.
    pub fn coords(&self, i: usize) -> &[u64] {
        &self.coords[i]
    }
}

impl QuadForm {
    fn normalized(&self) -> QuadForm {
        super::forms::reduce(*self).expect("class-group forms are positive definite")
    }
}

/// The class group of a negative fundamental discriminant, with its
/// multiplication table and invariant factors.
pub fn class_group(d: i64) -> Result<QuadClassGroup, QuadError> {
    if d >= 0 || !is_fundamental(d) {
        return Err(QuadError::NotFundamental(d));
    }
    let classes = reduced_forms(d);
    let h = classes.len();
    let index: HashMap<QuadForm, usize> = classes.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut table = vec![vec![0; h]; h];
    for i in 0..h {
        for j in i..h {
            let f = compose(classes[i], classes[j])?;
            let k = *index.get(&f).ok_or(QuadError::NotReduced(f))?;
            table[i][j] = k;
            table[j][i] = k;
        }
    }

    // Z^h modulo the relations e_i + e_j − e_{ij} and e_identity
    let mut rows = Vec::with_capacity(h * (h + 1) / 2 + 1);
    let mut unit = vec![BigInt::zero(); h];
    unit[0] = BigInt::one();
    rows.push(unit);
    for i in 0..h {
        for j in i..h {
            let mut r = vec![BigInt::zero(); h];
            r[i] += 1;
            r[j] += 1;
            r[table[i][j]] -= 1;
            if r.iter().any(|x| !x.is_zero()) {
                rows.push(r);
            }
        }
    }
    let (diag, v) = smith_columns(rows, h);
    debug_assert_eq!(diag.len(), h, "relations have full rank");
    let keep: Vec<usize> = (0..diag.len()).filter(|&i| !diag[i].is_one()).collect();
    let invariant_factors: Vec<u64> = keep.iter().map(|&i| diag[i].to_u64().unwrap()).collect();
    let coords: Vec<Vec<u64>> = (0..h)
        .map(|c| {
            keep.iter()
                .zip(&invariant_factors)
                .map(|(&i, &n)| v[c][i].mod_floor(&BigInt::from(n)).to_u64().unwrap())
                .collect()
        })
        .collect();
    let generators = (0..invariant_factors.len())
        .map(|g| {
            let target: Vec<u64> = (0..invariant_factors.len()).map(|i| u64::from(i == g)).collect();
            let c = coords.iter().position(|x| *x == target).expect("coordinates are a bijection");
            classes[c]
        })
        .collect();
    Ok(QuadClassGroup { disc: d, classes, index, table, invariant_factors, generators, coords })
}

/// `h(d)` by counting reduced forms.
pub fn class_number(d: i64) -> i64 {
    reduced_forms(d).len() as i64
}

/// A character of the class group, with exact values.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassCharacter {
    /// `Λ(gᵢ) = ζ_{nᵢ}^{tᵢ}` on the generators.
    pub exponents: Vec<u64>,
    /// `Λ(gᵢ)` as exact roots of unity.
    pub images: Vec<Cyclo>,
    factors: Vec<u64>,
    values: Vec<Cyclo>,
}

impl ClassCharacter {
    /// `Λ(c)` for the class with index `c`.
    pub fn value(&self, c: usize) -> &Cyclo {
        &self.values[c]
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&t| t == 0)
    }

    pub fn conj(&self) -> ClassCharacter {
        ClassCharacter {
            exponents: self.exponents.iter().zip(&self.factors).map(|(&t, &n)| (n - t) % n).collect(),
            images: self.images.iter().map(Cyclo::conj).collect(),
            factors: self.factors.clone(),
            values: self.values.iter().map(Cyclo::conj).collect(),
        }
    }
}

/// All `h` characters, the trivial one first. Values live in `Q(ζ_e)` for
/// `e` the exponent of the group.
pub fn characters(g: &QuadClassGroup) -> Vec<ClassCharacter> {
    let e = g.exponent();
    let factors = g.invariant_factors();
    let mut out = Vec::with_capacity(g.order());
    let mut t = vec![0u64; factors.len()];
    loop {
        let images = t
            .iter()
            .zip(factors)
            .map(|(&ti, &n)| Cyclo::root(e as u32, (ti * (e / n)) as i64))
            .collect();
        let values = (0..g.order())
            .map(|c| {
                let k: u64 = g
                    .coords(c)
                    .iter()
                    .zip(&t)
                    .zip(factors)
                    .map(|((&x, &ti), &n)| x * ti % n * (e / n))
                    .sum();
                Cyclo::root(e as u32, (k % e) as i64)
            })
            .collect();
        out.push(ClassCharacter { exponents: t.clone(), images, factors: factors.to_vec(), values });
        // odometer over ⊕ Z/nᵢ
        let mut i = 0;
        loop {
            if i == t.len() {
                return out;
            }
            t[i] += 1;
            if t[i] < factors[i] {
                break;
            }
            t[i] = 0;
            i += 1;
        }
    }
}
