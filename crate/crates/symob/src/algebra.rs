//! Sparse exact arithmetic in the rational group algebra QS_k.
//!
//! Elements are finitely supported maps from permutations to rationals,
//! stored in a `BTreeMap` keyed by one-line lexicographic order so that
//! equal elements have identical (and canonically serializable) term maps.
//! Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, SymobError};
use crate::perm::{Partition, Permutation};
use crate::rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, BigRational>,
}

impl AlgebraElement {
    pub fn zero(degree: usize) -> Self {
        AlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity 1·id of QS_k.
    pub fn one(degree: usize) -> Self {
        Self::single(Permutation::identity(degree), BigRational::one())
    }

    pub fn single(perm: Permutation, coef: BigRational) -> Self {
        let mut el = AlgebraElement::zero(perm.degree());
        el.add_term(perm, coef);
        el
    }

    pub fn basis(perm: Permutation) -> Self {
        Self::single(perm, BigRational::one())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigRational)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, perm: &Permutation) -> BigRational {
        self.terms.get(perm).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients; the scalar by which the element acts on the
    /// trivial representation.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, b| a + b)
    }

    fn add_term(&mut self, perm: Permutation, coef: BigRational) {
        debug_assert_eq!(perm.degree(), self.degree);
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(perm);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coef;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, BigRational)>,
    {
        let mut el = AlgebraElement::zero(degree);
        for (perm, coef) in terms {
            if perm.degree() != degree {
                return Err(SymobError::DegreeMismatch(degree, perm.degree()));
            }
            el.add_term(perm, coef);
        }
        Ok(el)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (perm, coef) in &other.terms {
            out.add_term(perm.clone(), coef.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (perm, coef) in &other.terms {
            out.add_term(perm.clone(), -coef.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return AlgebraElement::zero(self.degree);
        }
        AlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Sum of scaled elements with zero-coefficient pruning.
    pub fn linear_combine(pairs: &[(BigRational, &AlgebraElement)]) -> Result<Self> {
        let degree = match pairs.first() {
            Some((_, el)) => el.degree,
            None => return Ok(AlgebraElement::zero(0)),
        };
        let mut out = AlgebraElement::zero(degree);
        for (c, el) in pairs {
            if el.degree != degree {
                return Err(SymobError::DegreeMismatch(degree, el.degree));
            }
            for (perm, coef) in &el.terms {
                out.add_term(perm.clone(), coef * c);
            }
        }
        Ok(out)
    }

    /// Group-ring convolution product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = AlgebraElement::zero(self.degree);
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g.compose(h)?, a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut out = AlgebraElement::one(self.degree);
        for _ in 0..n {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// Conjugation of `self` by the single permutation g: g · self · g^{-1}.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Self> {
        let mut out = AlgebraElement::zero(self.degree);
        for (h, c) in &self.terms {
            out.add_term(g.conjugate(h)?, c.clone());
        }
        Ok(out)
    }

    /// The conjugation action: `a * x = sum_g a_g (g x g^{-1})`, a left action.
    pub fn conjugation_act(a: &Self, x: &Self) -> Result<Self> {
        if a.degree != x.degree {
            return Err(SymobError::DegreeMismatch(a.degree, x.degree));
        }
        let mut out = AlgebraElement::zero(x.degree);
        for (g, c) in &a.terms {
            let conj = x.conjugate_by(g)?;
            for (perm, coef) in conj.terms {
                out.add_term(perm, coef * c);
            }
        }
        Ok(out)
    }

    /// `sum c_sigma sigma  ->  sum sign(sigma) c_sigma sigma^{-1}`; an involution
    /// exchanging the unsigned and signed Eulerian families.
    pub fn signed_inverse_transform(&self) -> Self {
        let mut out = AlgebraElement::zero(self.degree);
        for (perm, coef) in &self.terms {
            let sign = rational::int(perm.sign() as i64);
            out.add_term(perm.inverse(), coef * sign);
        }
        out
    }

    /// Restriction of the term map to support of cycle type lambda.
    pub fn class_component(&self, lambda: &Partition) -> Result<Self> {
        if lambda.weight() != self.degree {
            return Err(SymobError::DegreeMismatch(self.degree, lambda.weight()));
        }
        Ok(AlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| &p.cycle_type() == lambda)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        })
    }

    /// The cycle type shared by every support permutation, if there is one.
    pub fn single_class_type(&self) -> Option<Partition> {
        let mut iter = self.terms.keys();
        let first = iter.next()?.cycle_type();
        if iter.all(|p| p.cycle_type() == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Block embedding of elements on S_{m_1} x ... x S_{m_s} into
    /// QS_{m_1+..+m_s}, each factor acting on its consecutive index block.
    pub fn tensor_embed(factors: &[&AlgebraElement]) -> Result<Self> {
        let degree: usize = factors.iter().map(|f| f.degree).sum();
        let mut acc = vec![(Permutation::identity(degree), BigRational::one())];
        let mut offset = 0usize;
        for factor in factors {
            let mut next = Vec::with_capacity(acc.len() * factor.terms.len().max(1));
            for (perm, coef) in &factor.terms {
                for (base, c) in &acc {
                    let mut images: Vec<u8> = base.images().to_vec();
                    for j in 1..=factor.degree {
                        images[offset + j - 1] = (perm.apply(j) + offset) as u8;
                    }
                    next.push((Permutation::from_images(images)?, c * coef));
                }
            }
            acc = next;
            offset += factor.degree;
        }
        AlgebraElement::from_terms(degree, acc)
    }

    /// Embed an element of QS_m into QS_k with S_m fixing the points m+1..k.
    pub fn embed_trailing(&self, k: usize) -> Result<Self> {
        if k < self.degree {
            return Err(SymobError::DegreeMismatch(self.degree, k));
        }
        let pad = AlgebraElement::one(k - self.degree);
        AlgebraElement::tensor_embed(&[self, &pad])
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            Err(SymobError::DegreeMismatch(self.degree, other.degree))
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (QS_{})", self.degree);
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| format!("{}·{:?}", c, p))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    perm: Vec<u8>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    k: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = ElementRepr {
            k: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermRepr {
                    perm: p.images().to_vec(),
                    coef: rational::to_exact_string(c),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let perm = Permutation::from_images(t.perm).map_err(D::Error::custom)?;
            let coef = rational::from_exact_string(&t.coef)
                .ok_or_else(|| D::Error::custom(format!("bad rational {:?}", t.coef)))?;
            terms.push((perm, coef));
        }
        AlgebraElement::from_terms(repr.k, terms).map_err(D::Error::custom)
    }
}
