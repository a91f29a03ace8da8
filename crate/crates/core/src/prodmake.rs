//! Guessing infinite products from series.
//!
//! Given a series `s = 1 + c q^e + ...` whose smallest nonconstant term sits
//! at `q^e`, multiplying by `(1 - q^e)^c` cancels that term. Repeating until
//! nothing is left up to the truncation order writes `s` as a finite product
//! `prod (1 - q^e)^{m_e}`. When the exponents that show up fall into a few
//! residue classes, that is a conjecture for an infinite product identity.
//! Nothing here proves anything: a conjecture is only checked up to the
//! order it was computed at.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fps::QSeries;

/// `prod_e (1 - q^e)^{m_e}` over finitely many exponents `e >= 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ProductForm {
    // no zero multiplicities, no exponent 0
    factors: BTreeMap<usize, BigInt>,
}

impl ProductForm {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from `(exponent, multiplicity)` pairs; repeated exponents accumulate.
    pub fn from_factors<I, M>(factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, M)>,
        M: Into<BigInt>,
    {
        let mut pf = Self::new();
        for (e, m) in factors {
            pf.insert(e, m.into())?;
        }
        Ok(pf)
    }

    /// Multiplies in `(1 - q^e)^m`.
    pub fn insert(&mut self, e: usize, m: BigInt) -> Result<()> {
        if e == 0 {
            return Err(Error::ZeroExponent);
        }
        let entry = self.factors.entry(e).or_default();
        *entry += m;
        if entry.is_zero() {
            self.factors.remove(&e);
        }
        Ok(())
    }

    pub fn factors(&self) -> &BTreeMap<usize, BigInt> {
        &self.factors
    }

    pub fn multiplicity(&self, e: usize) -> BigInt {
        self.factors.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.factors.keys().copied()
    }

    /// Factors with exponent `<= limit`.
    pub fn restricted(&self, limit: usize) -> Self {
        ProductForm {
            factors: self
                .factors
                .range(..=limit)
                .map(|(&e, m)| (e, m.clone()))
                .collect(),
        }
    }

    /// The product expanded as a power series truncated at `order`.
    pub fn expand(&self, order: usize) -> QSeries {
        let mut s = QSeries::one(order);
        for (&e, m) in self.factors.range(..=order) {
            s.mul_one_minus_qpow_pow(e, m).expect("e >= 1");
        }
        s
    }
}

/// Rendered as `1/((1-q)(1-q^4))`, with numerator factors ahead of the slash
/// and powers written as `(1-q^e)^m`.
impl fmt::Display for ProductForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn factor(f: &mut fmt::Formatter<'_>, e: usize, m: &BigInt) -> fmt::Result {
            match e {
                1 => f.write_str("(1-q)")?,
                _ => write!(f, "(1-q^{e})")?,
            }
            if !m.is_one() {
                write!(f, "^{m}")?;
            }
            Ok(())
        }
        let (num, den): (Vec<_>, Vec<_>) = self.factors.iter().partition(|(_, m)| m.is_positive());
        if num.is_empty() {
            f.write_str("1")?;
        }
        for (e, m) in &num {
            factor(f, **e, m)?;
        }
        if !den.is_empty() {
            f.write_str("/")?;
            if den.len() > 1 {
                f.write_str("(")?;
            }
            for (e, m) in &den {
                factor(f, **e, &-*m)?;
            }
            if den.len() > 1 {
                f.write_str(")")?;
            }
        }
        Ok(())
    }
}

/// Truncated expansion of `pf`; factors with `e > order` contribute nothing.
pub fn expand_product(pf: &ProductForm, order: usize) -> QSeries {
    pf.expand(order)
}

/// One round of stripping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripStep {
    /// Smallest index `>= 1` with a nonzero coefficient before the step.
    pub exponent: usize,
    /// That coefficient.
    pub coefficient: BigInt,
    /// `s * (1 - q^exponent)^coefficient`, zero at indices `1..=exponent`.
    pub residual: QSeries,
}

/// Cancels the smallest nonconstant term of `s`.
pub fn strip_step(s: &QSeries) -> Result<StripStep> {
    if !s.coeffs()[0].is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    let (exponent, coefficient) = s
        .lowest_nonconstant_term()
        .map(|(e, c)| (e, c.clone()))
        .ok_or(Error::NothingToStrip)?;
    let mut residual = s.clone();
    residual.mul_one_minus_qpow_pow(exponent, &coefficient)?;
    Ok(StripStep {
        exponent,
        coefficient,
        residual,
    })
}

/// Iterator over successive [`StripStep`]s until the residual is `1`.
#[derive(Clone, Debug)]
pub struct StripTrace {
    current: Option<QSeries>,
}

impl Iterator for StripTrace {
    type Item = StripStep;

    fn next(&mut self) -> Option<StripStep> {
        let s = self.current.take()?;
        let step = strip_step(&s).ok()?;
        self.current = Some(step.residual.clone());
        Some(step)
    }
}

/// Lazily strips `s`. The constant term must be `1`.
pub fn strip_trace(s: &QSeries) -> Result<StripTrace> {
    if !s.coeffs()[0].is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    Ok(StripTrace {
        current: Some(s.clone()),
    })
}

/// Strips `s` down to `1` and returns the product that reproduces it:
/// `expand_product(&conjecture_product(s)?, s.order()) == *s`.
pub fn conjecture_product(s: &QSeries) -> Result<ProductForm> {
    let mut pf = ProductForm::new();
    for step in strip_trace(s)? {
        pf.insert(step.exponent, -step.coefficient)?;
    }
    Ok(pf)
}

/// Exponents `e >= 1` with `e mod modulus` in `residues`, all sharing one multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResiduePattern {
    modulus: usize,
    residues: BTreeSet<usize>,
    multiplicity: BigInt,
}

impl ResiduePattern {
    pub fn new(
        modulus: usize,
        residues: impl IntoIterator<Item = usize>,
        multiplicity: BigInt,
    ) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("modulus must be positive"));
        }
        let residues: BTreeSet<usize> = residues.into_iter().collect();
        if residues.is_empty() {
            return Err(Error::InvalidArgument("residue set is empty"));
        }
        if residues.iter().any(|&r| r >= modulus) {
            return Err(Error::InvalidArgument("residue not reduced mod modulus"));
        }
        if multiplicity.is_zero() {
            return Err(Error::InvalidArgument("multiplicity must be nonzero"));
        }
        Ok(ResiduePattern {
            modulus,
            residues,
            multiplicity,
        })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn residues(&self) -> &BTreeSet<usize> {
        &self.residues
    }

    pub fn multiplicity(&self) -> &BigInt {
        &self.multiplicity
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && self.residues.contains(&(e % self.modulus))
    }

    /// The pattern's factors with exponent `<= limit`.
    pub fn product_form(&self, limit: usize) -> ProductForm {
        ProductForm {
            factors: (1..=limit)
                .filter(|&e| self.contains(e))
                .map(|e| (e, self.multiplicity.clone()))
                .collect(),
        }
    }
}

/// Rendered as `1/((1-q^(5m+1))(1-q^(5m+4)))`; residue 0 is written as
/// `Mm+M` so that `m` starts at 0 throughout.
impl fmt::Display for ResiduePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mag = self.multiplicity.abs();
        let inverted = self.multiplicity.is_negative();
        if inverted {
            f.write_str("1/")?;
            if self.residues.len() > 1 {
                f.write_str("(")?;
            }
        }
        for &r in &self.residues {
            let offset = if r == 0 { self.modulus } else { r };
            match self.modulus {
                1 => write!(f, "(1-q^(m+{offset}))")?,
                m => write!(f, "(1-q^({m}m+{offset}))")?,
            }
            if !mag.is_one() {
                write!(f, "^{mag}")?;
            }
        }
        if inverted && self.residues.len() > 1 {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Looks for the smallest modulus `M <= max_modulus` and residue set `R`
/// such that the exponents of `pf` are exactly the `e` in
/// `1..=max exponent` with `e mod M` in `R`.
///
/// Every multiplicity must be equal, and each residue class in `R` has to
/// be witnessed by at least two exponents: a single exponent fits any
/// modulus and is no evidence of a progression.
pub fn detect_progressions(pf: &ProductForm, max_modulus: usize) -> Option<ResiduePattern> {
    let mut mults = pf.factors.values();
    let multiplicity = mults.next()?.clone();
    if mults.any(|m| *m != multiplicity) {
        return None;
    }
    let top = *pf.factors.keys().next_back()?;
    (1..=max_modulus).find_map(|modulus| {
        let mut witnesses: BTreeMap<usize, usize> = BTreeMap::new();
        for e in pf.exponents() {
            *witnesses.entry(e % modulus).or_default() += 1;
        }
        if witnesses.values().any(|&n| n < 2) {
            return None;
        }
        let fits = (1..=top)
            .all(|e| witnesses.contains_key(&(e % modulus)) == pf.factors.contains_key(&e));
        fits.then(|| ResiduePattern {
            modulus,
            residues: witnesses.into_keys().collect(),
            multiplicity: multiplicity.clone(),
        })
    })
}
