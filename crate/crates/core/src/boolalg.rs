//! Squarefree monomials as bitmask subsets, graded-lex monomial bases and the
//! Boolean polynomial algebra `F[x]/(x_i^2 - x_i)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;

/// A set of variable indices; bit `i` stands for `x_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_elems(elems: &[usize]) -> Subset {
        Subset(elems.iter().fold(0, |acc, &i| acc | (1u64 << i)))
    }

    pub fn single(i: usize) -> Subset {
        Subset(1u64 << i)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && (self.0 >> i) & 1 == 1
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn elems(self) -> impl Iterator<Item = usize> {
        let mut b = self.0;
        std::iter::from_fn(move || {
            if b == 0 {
                None
            } else {
                let i = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(i)
            }
        })
    }

    pub fn max_elem(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }
}

/// Graded order: by size, then lexicographically on sorted elements.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let names: Vec<String> = self.elems().map(|i| format!("x{i}")).collect();
        write!(f, "{}", names.join("*"))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.elems().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", e.join(","))
    }
}

/// `U`: symbols `0..=n`, empty set excluded. `V`: symbols `1..=n`, empty set
/// included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Variant {
    U,
    V,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", match self {
            Variant::U => "U",
            Variant::V => "V",
        })
    }
}

/// Variable universe: `x_0..x_n` for `U`, `x_1..x_n` for `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    pub variant: Variant,
    pub n: usize,
}

pub const MAX_VARS: usize = 63;

impl Universe {
    pub fn new(variant: Variant, n: usize) -> Result<Universe> {
        if n == 0 {
            return Err(Error::pre("at least one variable is required"));
        }
        if n > MAX_VARS - 1 + (variant == Variant::V) as usize {
            return Err(Error::pre(format!("at most {MAX_VARS} variables are supported")));
        }
        Ok(Universe { variant, n })
    }

    pub fn first(&self) -> usize {
        match self.variant {
            Variant::U => 0,
            Variant::V => 1,
        }
    }

    pub fn symbols(&self) -> std::ops::RangeInclusive<usize> {
        self.first()..=self.n
    }

    /// Number of symbols, which is also the length of an evaluation point.
    pub fn size(&self) -> usize {
        self.n + 1 - self.first()
    }

    pub fn mask(&self) -> u64 {
        let all = if self.n == 63 { u64::MAX } else { (1u64 << (self.n + 1)) - 1 };
        all & !((1u64 << self.first()) - 1)
    }

    pub fn contains(&self, s: Subset) -> bool {
        s.bits() & !self.mask() == 0
    }

    /// Position of `x_i` in an evaluation point.
    pub fn slot(&self, i: usize) -> usize {
        i - self.first()
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Size of the basis `U_{n,d}` or `V_{n,d}` (sets beyond the universe count 0).
pub fn basis_size(variant: Variant, n: usize, d: usize) -> u128 {
    match variant {
        Variant::U => (1..=d).map(|j| binomial(n as u64 + 1, j as u64)).sum(),
        Variant::V => (0..=d).map(|j| binomial(n as u64, j as u64)).sum(),
    }
}

#[derive(Clone, Debug)]
enum RankIndex {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

/// The ordered monomial set `U_{n,d}` or `V_{n,d}`.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    universe: Universe,
    degree: usize,
    sets: Vec<Subset>,
    /// `prefix[e]` = number of sets of size at most `e`.
    prefix: Vec<usize>,
    index: RankIndex,
}

const DENSE_LIMIT_BITS: usize = 22;

impl MonomialBasis {
    /// Strict constructor: `d` may not exceed the number of symbols.
    pub fn new(n: usize, d: usize, variant: Variant) -> Result<MonomialBasis> {
        let u = Universe::new(variant, n)?;
        if d > u.size() {
            return Err(Error::pre(format!(
                "degree {d} exceeds the {} available symbols",
                u.size()
            )));
        }
        Ok(MonomialBasis::build(u, d))
    }

    /// Like [`MonomialBasis::new`] but a degree beyond the universe simply
    /// yields every admissible subset; the nominal degree is kept.
    pub fn covering(n: usize, d: usize, variant: Variant) -> Result<MonomialBasis> {
        let u = Universe::new(variant, n)?;
        Ok(MonomialBasis::build(u, d))
    }

    fn build(universe: Universe, degree: usize) -> MonomialBasis {
        let syms: Vec<usize> = universe.symbols().collect();
        let min = match universe.variant {
            Variant::U => 1,
            Variant::V => 0,
        };
        let top = degree.min(syms.len());
        let mut sets = Vec::new();
        let mut prefix = vec![0usize; degree + 1];
        for k in 0..=top {
            if k >= min {
                push_combinations(&syms, k, &mut sets);
            }
            prefix[k] = sets.len();
        }
        for e in top + 1..=degree {
            prefix[e] = sets.len();
        }
        let top_bit = universe.n + 1;
        let index = if top_bit <= DENSE_LIMIT_BITS {
            let mut t = vec![u32::MAX; 1usize << top_bit];
            for (i, s) in sets.iter().enumerate() {
                t[s.bits() as usize] = i as u32;
            }
            RankIndex::Dense(t)
        } else {
            RankIndex::Sparse(sets.iter().enumerate().map(|(i, s)| (s.bits(), i as u32)).collect())
        };
        MonomialBasis {
            universe,
            degree,
            sets,
            prefix,
            index,
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn variant(&self) -> Variant {
        self.universe.variant
    }

    pub fn n(&self) -> usize {
        self.universe.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn unrank(&self, i: usize) -> Subset {
        self.sets[i]
    }

    pub fn rank(&self, s: Subset) -> Option<usize> {
        let r = match &self.index {
            RankIndex::Dense(t) => t.get(s.bits() as usize).copied(),
            RankIndex::Sparse(m) => m.get(&s.bits()).copied(),
        };
        r.filter(|&r| r != u32::MAX).map(|r| r as usize)
    }

    /// Number of sets of size at most `e`: the level-`e` basis is this prefix.
    pub fn prefix_len(&self, e: usize) -> usize {
        self.prefix[e.min(self.degree)]
    }
}

fn push_combinations(syms: &[usize], k: usize, out: &mut Vec<Subset>) {
    let n = syms.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(Subset(idx.iter().fold(0, |acc, &i| acc | (1u64 << syms[i]))));
        let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + n - k) else {
            return;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// A squarefree polynomial: coefficients keyed by monomial, zeros pruned.
#[derive(Clone, PartialEq, Eq)]
pub struct SquarefreePoly {
    field: FieldSpec,
    universe: Universe,
    terms: BTreeMap<Subset, u32>,
}

impl fmt::Debug for SquarefreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl SquarefreePoly {
    pub fn zero(field: &FieldSpec, universe: Universe) -> Self {
        SquarefreePoly {
            field: field.clone(),
            universe,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &FieldSpec, universe: Universe, c: u32) -> Self {
        SquarefreePoly::monomial(field, universe, Subset::EMPTY, c)
    }

    pub fn one(field: &FieldSpec, universe: Universe) -> Self {
        SquarefreePoly::constant(field, universe, 1)
    }

    pub fn monomial(field: &FieldSpec, universe: Universe, s: Subset, c: u32) -> Self {
        let mut p = SquarefreePoly::zero(field, universe);
        p.add_term(s, c);
        p
    }

    pub fn var(field: &FieldSpec, universe: Universe, i: usize) -> Self {
        SquarefreePoly::monomial(field, universe, Subset::single(i), 1)
    }

    pub fn from_terms(
        field: &FieldSpec,
        universe: Universe,
        terms: impl IntoIterator<Item = (Subset, u32)>,
    ) -> Result<Self> {
        let mut p = SquarefreePoly::zero(field, universe);
        for (s, c) in terms {
            if !universe.contains(s) {
                return Err(Error::pre(format!("monomial {s} outside the variable universe")));
            }
            if !field.contains(c) {
                return Err(Error::InvalidField(format!("coefficient code {c}")));
            }
            p.add_term(s, c);
        }
        Ok(p)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// Accumulates `c * x^s`.
    pub fn add_term(&mut self, s: Subset, c: u32) {
        if c == 0 {
            return;
        }
        let f = &self.field;
        let entry = self.terms.entry(s).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&s);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Subset, u32)> + '_ {
        self.terms.iter().map(|(&s, &c)| (s, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, s: Subset) -> u32 {
        self.terms.get(&s).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> u32 {
        self.coeff(Subset::EMPTY)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|s| s.len()).max()
    }

    fn compatible(&self, other: &SquarefreePoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.descriptor(),
                right: other.field.descriptor(),
            });
        }
        if self.universe != other.universe {
            return Err(Error::pre("polynomials over different variable universes"));
        }
        Ok(())
    }

    pub fn add(&self, other: &SquarefreePoly) -> Result<SquarefreePoly> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> SquarefreePoly {
        self.scale(self.field.neg(1))
    }

    pub fn sub(&self, other: &SquarefreePoly) -> Result<SquarefreePoly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u32) -> SquarefreePoly {
        let mut out = SquarefreePoly::zero(&self.field, self.universe);
        for (s, a) in self.terms() {
            out.add_term(s, self.field.mul(a, c));
        }
        out
    }

    pub fn mul(&self, other: &SquarefreePoly) -> Result<SquarefreePoly> {
        self.compatible(other)?;
        let f = &self.field;
        let mut out = SquarefreePoly::zero(f, self.universe);
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                out.add_term(s.union(t), f.mul(a, b));
            }
        }
        Ok(out)
    }

    /// `x^s * self`.
    pub fn shift(&self, s: Subset) -> SquarefreePoly {
        let mut out = SquarefreePoly::zero(&self.field, self.universe);
        for (t, c) in self.terms() {
            out.add_term(s.union(t), c);
        }
        out
    }

    /// Evaluates at `point`, whose entry `universe.slot(i)` holds `x_i`.
    pub fn eval(&self, point: &[u32]) -> Result<u32> {
        if point.len() != self.universe.size() {
            return Err(Error::DimensionMismatch {
                expected: self.universe.size(),
                found: point.len(),
            });
        }
        let f = &self.field;
        let mut acc = 0;
        for (s, c) in self.terms() {
            let v = s
                .elems()
                .fold(c, |v, i| f.mul(v, point[self.universe.slot(i)]));
            acc = f.add(acc, v);
        }
        Ok(acc)
    }

    /// Parses `c*x1*x2 + x3 - 2 + ...`; coefficients use the field's element
    /// text, repeated variables collapse.
    pub fn parse(field: &FieldSpec, universe: Universe, text: &str) -> Result<SquarefreePoly> {
        let mut out = SquarefreePoly::zero(field, universe);
        let mut saw_term = false;
        for (negative, term) in split_signed_terms(text)? {
            saw_term = true;
            let mut coeff = 1u32;
            let mut mono = Subset::EMPTY;
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(Error::pre(format!("empty factor in {term:?}")));
                }
                if let Some(rest) = factor.strip_prefix('x') {
                    let base = rest.split('^').next().unwrap_or("");
                    let i: usize = base
                        .parse()
                        .map_err(|_| Error::pre(format!("bad variable {factor:?}")))?;
                    if i > MAX_VARS || !universe.symbols().contains(&i) {
                        return Err(Error::pre(format!("variable x{i} outside the universe")));
                    }
                    if let Some(exp) = rest.split_once('^').map(|(_, e)| e) {
                        let k: u32 = exp
                            .parse()
                            .map_err(|_| Error::pre(format!("bad exponent in {factor:?}")))?;
                        if k == 0 {
                            continue;
                        }
                    }
                    mono = mono.union(Subset::single(i));
                } else {
                    coeff = field.mul(coeff, field.parse_elem(factor)?);
                }
            }
            if negative {
                coeff = field.neg(coeff);
            }
            out.add_term(mono, coeff);
        }
        if !saw_term {
            return Err(Error::pre("empty polynomial"));
        }
        Ok(out)
    }
}

fn split_signed_terms(text: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    let mut depth = 0i32;
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if cur.trim().is_empty() {
                    if !out.is_empty() || negative {
                        return Err(Error::pre(format!("dangling sign in {text:?}")));
                    }
                } else {
                    out.push((negative, std::mem::take(&mut cur).trim().to_string()));
                }
                negative = ch == '-';
                cur.clear();
            }
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if depth != 0 {
        return Err(Error::pre(format!("unbalanced parentheses in {text:?}")));
    }
    if cur.trim().is_empty() {
        if negative || !out.is_empty() {
            return Err(Error::pre(format!("dangling sign in {text:?}")));
        }
    } else {
        out.push((negative, cur.trim().to_string()));
    }
    Ok(out)
}

impl fmt::Display for SquarefreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(s, c)| {
                if s.is_empty() {
                    self.field.format_elem(c)
                } else if c == 1 {
                    s.to_string()
                } else {
                    format!("{}*{s}", self.field.format_elem(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf2() -> FieldSpec {
        FieldSpec::gf2()
    }

    fn u(n: usize) -> Universe {
        Universe::new(Variant::U, n).unwrap()
    }

    #[test]
    fn basis_examples() {
        let v = MonomialBasis::new(2, 1, Variant::V).unwrap();
        assert_eq!(
            v.sets(),
            &[Subset::EMPTY, Subset::from_elems(&[1]), Subset::from_elems(&[2])]
        );
        let uu = MonomialBasis::new(1, 1, Variant::U).unwrap();
        assert_eq!(uu.sets(), &[Subset::from_elems(&[0]), Subset::from_elems(&[1])]);
        assert!(MonomialBasis::new(2, 3, Variant::V).is_err());
        assert!(MonomialBasis::new(2, 3, Variant::U).is_ok());
    }

    #[test]
    fn basis_sizes_match_binomial_sums() {
        for n in 1..=7 {
            for d in 0..=n {
                let bu = MonomialBasis::new(n, d, Variant::U).unwrap();
                let expect: u128 = (1..=d as u64).map(|j| binomial(n as u64 + 1, j)).sum();
                assert_eq!(bu.len() as u128, expect);
                let bv = MonomialBasis::new(n, d, Variant::V).unwrap();
                let expect: u128 = (0..=d as u64).map(|j| binomial(n as u64, j)).sum();
                assert_eq!(bv.len() as u128, expect);
            }
        }
    }

    #[test]
    fn graded_order_and_prefixes() {
        let b = MonomialBasis::new(4, 3, Variant::V).unwrap();
        for w in b.sets().windows(2) {
            assert!(w[0] < w[1]);
            let (a, c) = (w[0], w[1]);
            if a.len() == c.len() {
                let ae: Vec<usize> = a.elems().collect();
                let ce: Vec<usize> = c.elems().collect();
                assert!(ae < ce);
            }
        }
        let low = MonomialBasis::new(4, 1, Variant::V).unwrap();
        assert_eq!(&b.sets()[..b.prefix_len(1)], low.sets());
        for (i, &s) in b.sets().iter().enumerate() {
            assert_eq!(b.rank(s), Some(i));
            assert_eq!(b.unrank(i), s);
        }
    }

    #[test]
    fn mul_examples() {
        let f = gf2();
        let un = u(1);
        let s = SquarefreePoly::parse(&f, un, "x0 + x1").unwrap();
        let x1 = SquarefreePoly::var(&f, un, 1);
        assert_eq!(s.mul(&x1).unwrap(), SquarefreePoly::parse(&f, un, "x0*x1 + x1").unwrap());
        assert_eq!(s.mul(&s).unwrap(), s);
        assert_eq!(s.mul(&SquarefreePoly::one(&f, un)).unwrap(), s);
    }

    #[test]
    fn mixed_fields_rejected() {
        let f3 = FieldSpec::prime(3).unwrap();
        let a = SquarefreePoly::one(&gf2(), u(1));
        let b = SquarefreePoly::one(&f3, u(1));
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn eval_examples() {
        let f = gf2();
        let p = SquarefreePoly::parse(&f, u(1), "x0 + x1").unwrap();
        assert_eq!(p.eval(&[1, 0]).unwrap(), 1);
        assert_eq!(SquarefreePoly::one(&f, u(3)).eval(&[0, 1, 0, 1]).unwrap(), 1);
        let v = Universe::new(Variant::V, 3).unwrap();
        let q = SquarefreePoly::parse(&f, v, "x1*x2").unwrap();
        assert_eq!(q.eval(&[1, 1, 1]).unwrap(), 1);
        assert!(q.eval(&[1, 1]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let f = FieldSpec::new(3, 2, None).unwrap();
        let v = Universe::new(Variant::V, 4).unwrap();
        let p = SquarefreePoly::parse(&f, v, "2*x1*x3 + (1,2)*x4 - 1 + x2^2*x2").unwrap();
        assert_eq!(p.coeff(Subset::EMPTY), 2);
        assert_eq!(p.coeff(Subset::from_elems(&[2])), 1);
        let again = SquarefreePoly::parse(&f, v, &p.to_string()).unwrap();
        assert_eq!(again, p);
        assert!(SquarefreePoly::parse(&f, v, "x0").is_err());
        assert!(SquarefreePoly::parse(&f, v, "x1 +").is_err());
    }

    fn arb_poly(field: FieldSpec, n: usize) -> impl Strategy<Value = SquarefreePoly> {
        let q = field.order();
        let un = u(n);
        prop::collection::vec((0u64..(1u64 << (n + 1)), 0..q), 0..6).prop_map(move |terms| {
            SquarefreePoly::from_terms(&field, un, terms.into_iter().map(|(s, c)| (Subset(s), c)))
                .unwrap()
        })
    }

    fn ring_laws(a: &SquarefreePoly, b: &SquarefreePoly, c: &SquarefreePoly) -> bool {
        let ab = a.mul(b).unwrap();
        ab == b.mul(a).unwrap()
            && ab.mul(c).unwrap() == a.mul(&b.mul(c).unwrap()).unwrap()
            && a.mul(&b.add(c).unwrap()).unwrap() == ab.add(&a.mul(c).unwrap()).unwrap()
    }

    proptest! {
        #[test]
        fn gf2_ring_laws(a in arb_poly(gf2(), 5), b in arb_poly(gf2(), 5), c in arb_poly(gf2(), 5)) {
            prop_assert!(ring_laws(&a, &b, &c));
        }

        #[test]
        fn gf3_ring_laws(
            a in arb_poly(FieldSpec::prime(3).unwrap(), 6),
            b in arb_poly(FieldSpec::prime(3).unwrap(), 6),
            c in arb_poly(FieldSpec::prime(3).unwrap(), 6),
        ) {
            prop_assert!(ring_laws(&a, &b, &c));
        }

        #[test]
        fn eval_is_multiplicative_on_boolean_points(
            a in arb_poly(FieldSpec::prime(3).unwrap(), 4),
            b in arb_poly(FieldSpec::prime(3).unwrap(), 4),
            pt in 0u32..32,
        ) {
            let point: Vec<u32> = (0..5).map(|i| (pt >> i) & 1).collect();
            let f = a.field().clone();
            let lhs = a.mul(&b).unwrap().eval(&point).unwrap();
            let rhs = f.mul(a.eval(&point).unwrap(), b.eval(&point).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn variables_are_idempotent(i in 0usize..6) {
            let x = SquarefreePoly::var(&gf2(), u(5), i);
            prop_assert_eq!(x.mul(&x).unwrap(), x);
        }
    }
}
