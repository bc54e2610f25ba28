//! Finite commutative rings (with or without identity) stored as explicit
//! addition and multiplication tables over the indices `0..order`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::guard::check_order;

/// Shared handle to an immutable ring. Ideals, homomorphisms and every other
/// derived object hold one of these.
pub type Ring = Arc<FiniteRng>;

/// How a ring was produced. Informational only: it does not take part in
/// structural equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Zmod,
    Product,
    Quotient,
    Subring,
    Amalgam,
    Table,
    TruncPoly,
    Localization,
    DottedSum,
    Idealization,
}

/// Operation tables supplied from outside, before validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTables {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: Option<usize>,
    /// Defaults to `"0".."N-1"` when absent.
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    MulAssociative,
    MulCommutative,
    Distributive,
    MulIdentity,
    DistinctLabels,
}

/// One violated axiom together with the first witness tuple found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

/// A finite commutative rng given by its Cayley tables.
#[derive(Clone)]
pub struct FiniteRng {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: Option<usize>,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    provenance: Provenance,
}

impl PartialEq for FiniteRng {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
            && self.labels == other.labels
    }
}

impl Eq for FiniteRng {}

impl fmt::Debug for FiniteRng {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRng")
            .field("order", &self.order)
            .field("provenance", &self.provenance)
            .field("one", &self.one.map(|i| &self.labels[i]))
            .finish_non_exhaustive()
    }
}

fn check_shape(raw: &RawTables) -> Result<usize> {
    let n = raw.add.len();
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    for (name, table) in [("add", &raw.add), ("mul", &raw.mul)] {
        if table.len() != n {
            return Err(Error::MalformedTable(format!(
                "{name} table has {} rows, expected {n}",
                table.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "{name} row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(|&e| e >= n) {
                return Err(Error::MalformedTable(format!(
                    "{name}[{i}][{j}] = {} is out of range",
                    row[j]
                )));
            }
        }
    }
    if raw.zero >= n || raw.one.is_some_and(|o| o >= n) {
        return Err(Error::MalformedTable("zero or one out of range".into()));
    }
    if let Some(labels) = &raw.labels {
        if labels.len() != n {
            return Err(Error::MalformedTable(format!(
                "{} labels for {n} elements",
                labels.len()
            )));
        }
    }
    Ok(n)
}

/// Checks every rng axiom on candidate tables by full enumeration.
///
/// Shape problems (non-square tables, out-of-range entries) are errors; axiom
/// failures are reported, one entry per violated axiom.
pub fn validate_rng(raw: &RawTables) -> Result<ValidationReport> {
    let n = check_shape(raw)?;
    let add = |x: usize, y: usize| raw.add[x][y];
    let mul = |x: usize, y: usize| raw.mul[x][y];
    let labels: Vec<String> = raw
        .labels
        .clone()
        .unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
    Ok(validate_with(n, add, mul, raw.zero, raw.one, &labels))
}

fn validate_with(
    n: usize,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
    zero: usize,
    one: Option<usize>,
    labels: &[String],
) -> ValidationReport {
    let mut violations = Vec::new();
    let mut record = |axiom, witness: Option<Vec<usize>>| {
        if let Some(witness) = witness {
            violations.push(Violation { axiom, witness });
        }
    };
    let triples = || (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))));
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));

    record(
        Axiom::AddAssociative,
        triples()
            .find(|&(x, y, z)| add(add(x, y), z) != add(x, add(y, z)))
            .map(|(x, y, z)| vec![x, y, z]),
    );
    record(
        Axiom::AddCommutative,
        pairs().find(|&(x, y)| add(x, y) != add(y, x)).map(|(x, y)| vec![x, y]),
    );
    record(
        Axiom::AddIdentity,
        (0..n).find(|&x| add(zero, x) != x || add(x, zero) != x).map(|x| vec![x]),
    );
    record(
        Axiom::AddInverse,
        (0..n).find(|&x| (0..n).all(|y| add(x, y) != zero)).map(|x| vec![x]),
    );
    record(
        Axiom::MulAssociative,
        triples()
            .find(|&(x, y, z)| mul(mul(x, y), z) != mul(x, mul(y, z)))
            .map(|(x, y, z)| vec![x, y, z]),
    );
    record(
        Axiom::MulCommutative,
        pairs().find(|&(x, y)| mul(x, y) != mul(y, x)).map(|(x, y)| vec![x, y]),
    );
    record(
        Axiom::Distributive,
        triples()
            .find(|&(x, y, z)| {
                mul(x, add(y, z)) != add(mul(x, y), mul(x, z))
                    || mul(add(y, z), x) != add(mul(y, x), mul(z, x))
            })
            .map(|(x, y, z)| vec![x, y, z]),
    );
    if let Some(one) = one {
        record(
            Axiom::MulIdentity,
            (0..n).find(|&x| mul(one, x) != x || mul(x, one) != x).map(|x| vec![x]),
        );
    }
    let mut seen: HashMap<&str, usize> = HashMap::new();
    let mut duplicate = None;
    for (i, l) in labels.iter().enumerate() {
        if let Some(&j) = seen.get(l.as_str()) {
            duplicate = Some(vec![j, i]);
            break;
        }
        seen.insert(l, i);
    }
    record(Axiom::DistinctLabels, duplicate);
    ValidationReport { violations }
}

impl FiniteRng {
    /// Builds a ring from tables computed by closures. Trusted path used by
    /// the constructors in this crate; the tables are not axiom-checked.
    pub(crate) fn build(
        order: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: Option<usize>,
        labels: Vec<String>,
        provenance: Provenance,
    ) -> Ring {
        let mut add_t = Vec::with_capacity(order * order);
        let mut mul_t = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                add_t.push(add(x, y) as u32);
                mul_t.push(mul(x, y) as u32);
            }
        }
        Self::from_flat(order, add_t, mul_t, zero, one, labels, provenance)
    }

    fn from_flat(
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: Option<usize>,
        labels: Vec<String>,
        provenance: Provenance,
    ) -> Ring {
        debug_assert_eq!(labels.len(), order);
        let mut neg = vec![0u32; order];
        for x in 0..order {
            let row = &add[x * order..(x + 1) * order];
            neg[x] = row.iter().position(|&s| s as usize == zero).unwrap_or(zero) as u32;
        }
        let label_index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Arc::new(FiniteRng {
            order,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
            label_index,
            provenance,
        })
    }

    /// Validates user-supplied tables and wraps them as a ring.
    pub fn from_tables(raw: RawTables) -> Result<Ring> {
        let report = validate_rng(&raw)?;
        if let Some(v) = report.violations.first() {
            return Err(Error::NotARing(format!("{:?} fails at {:?}", v.axiom, v.witness)));
        }
        let n = raw.add.len();
        check_order("table ring", n as u128)?;
        let labels = raw
            .labels
            .unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        let flat = |t: &Vec<Vec<usize>>| t.iter().flatten().map(|&e| e as u32).collect();
        Ok(Self::from_flat(
            n,
            flat(&raw.add),
            flat(&raw.mul),
            raw.zero,
            raw.one,
            labels,
            Provenance::Table,
        ))
    }

    /// The restriction of this ring's tables to `members` (which must be a
    /// subrng), re-indexed in increasing original index order.
    pub(crate) fn restrict(
        &self,
        members: &[usize],
        keep_one: bool,
        provenance: Provenance,
    ) -> Ring {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let one = if keep_one { self.one.map(|o| pos[o]) } else { None };
        Self::build(
            members.len(),
            |x, y| pos[self.add(members[x], members[y])],
            |x, y| pos[self.mul(members[x], members[y])],
            pos[self.zero],
            one,
            members.iter().map(|&m| self.labels[m].clone()).collect(),
            provenance,
        )
    }

    pub fn to_raw(&self) -> RawTables {
        let rows = |t: &Vec<u32>| {
            t.chunks(self.order)
                .map(|r| r.iter().map(|&e| e as usize).collect())
                .collect()
        };
        RawTables {
            add: rows(&self.add),
            mul: rows(&self.mul),
            zero: self.zero,
            one: self.one,
            labels: Some(self.labels.clone()),
        }
    }

    /// Re-checks every axiom on this ring's own tables.
    pub fn validate(&self) -> ValidationReport {
        validate_with(
            self.order,
            |x, y| self.add(x, y),
            |x, y| self.mul(x, y),
            self.zero,
            self.one,
            &self.labels,
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn has_one(&self) -> bool {
        self.one.is_some()
    }

    pub(crate) fn require_one(&self) -> Result<usize> {
        self.one.ok_or(Error::MissingIdentity)
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element(&self, index: usize) -> Element<'_> {
        assert!(index < self.order, "element index {index} out of range");
        Element { ring: self, index }
    }

    /// Looks an element up by its label.
    pub fn el(&self, label: &str) -> Option<Element<'_>> {
        self.index_of(label).map(|index| Element { ring: self, index })
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y] as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// `x` added to itself `k` times.
    pub fn times(&self, k: usize, x: usize) -> usize {
        let mut acc = self.zero;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// `x^k` for `k >= 1`.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1, "pow exponent must be positive");
        let mut acc = x;
        for _ in 1..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn additive_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.zero {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    pub fn is_nilpotent(&self, x: usize) -> bool {
        let mut acc = x;
        for _ in 0..self.order {
            if acc == self.zero {
                return true;
            }
            acc = self.mul(acc, x);
        }
        acc == self.zero
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn is_unit(&self, x: usize) -> bool {
        match self.one {
            Some(one) => (0..self.order).any(|y| self.mul(x, y) == one),
            None => false,
        }
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        let one = self.one?;
        (0..self.order).find(|&y| self.mul(x, y) == one)
    }

    /// `x` is a zero divisor when `x·y = 0` for some nonzero `y`
    /// (so `0` is a zero divisor of every nonzero ring).
    pub fn is_zero_divisor(&self, x: usize) -> bool {
        (0..self.order).any(|y| y != self.zero && self.mul(x, y) == self.zero)
    }

    /// Additive exponent: least `n` with `n·x = 0` for every `x`.
    pub fn characteristic(&self) -> usize {
        self.elements()
            .map(|x| self.additive_order(x))
            .fold(1, lcm)
    }

    pub fn is_domain(&self) -> Result<bool> {
        self.require_one()?;
        Ok(!self.is_zero_ring() && (0..self.order).all(|x| x == self.zero || !self.is_zero_divisor(x)))
    }

    pub fn is_field(&self) -> Result<bool> {
        self.require_one()?;
        Ok(!self.is_zero_ring() && (0..self.order).all(|x| x == self.zero || self.is_unit(x)))
    }

    pub fn is_reduced(&self) -> bool {
        (0..self.order).all(|x| x == self.zero || !self.is_nilpotent(x))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn nilpotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_nilpotent(x)).collect()
    }

    pub fn units(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_unit(x)).collect()
    }

    /// True when the tables coincide, ignoring labels.
    pub fn same_tables(&self, other: &FiniteRng) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// An element of a specific ring, with operator overloading.
///
/// ```
/// use amalgam_core::ring::zmod;
/// let z6 = zmod(6).unwrap();
/// let x = z6.el("4").unwrap();
/// assert_eq!((x * x).to_string(), "4");
/// assert_eq!((x + x + x).to_string(), "0");
/// ```
#[derive(Clone, Copy)]
pub struct Element<'r> {
    ring: &'r FiniteRng,
    index: usize,
}

impl<'r> Element<'r> {
    pub fn index(self) -> usize {
        self.index
    }

    pub fn ring(self) -> &'r FiniteRng {
        self.ring
    }

    pub fn pow(self, k: usize) -> Self {
        Element {
            ring: self.ring,
            index: self.ring.pow(self.index, k),
        }
    }

    pub fn is_zero(self) -> bool {
        self.index == self.ring.zero
    }

    fn same_ring(self, other: Self) {
        assert!(
            std::ptr::eq(self.ring, other.ring),
            "elements belong to different rings"
        );
    }
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.ring, other.ring) && self.index == other.index
    }
}

impl Eq for Element<'_> {}

impl fmt::Debug for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.label(self.index))
    }
}

impl fmt::Display for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ring.label(self.index))
    }
}

impl<'r> Add for Element<'r> {
    type Output = Element<'r>;
    fn add(self, rhs: Self) -> Self::Output {
        self.same_ring(rhs);
        Element {
            ring: self.ring,
            index: self.ring.add(self.index, rhs.index),
        }
    }
}

impl<'r> Sub for Element<'r> {
    type Output = Element<'r>;
    fn sub(self, rhs: Self) -> Self::Output {
        self.same_ring(rhs);
        Element {
            ring: self.ring,
            index: self.ring.sub(self.index, rhs.index),
        }
    }
}

impl<'r> Mul for Element<'r> {
    type Output = Element<'r>;
    fn mul(self, rhs: Self) -> Self::Output {
        self.same_ring(rhs);
        Element {
            ring: self.ring,
            index: self.ring.mul(self.index, rhs.index),
        }
    }
}

impl<'r> Neg for Element<'r> {
    type Output = Element<'r>;
    fn neg(self) -> Self::Output {
        Element {
            ring: self.ring,
            index: self.ring.neg(self.index),
        }
    }
}

/// The integers modulo `n`, elements labeled by their residues.
pub fn zmod(n: usize) -> Result<Ring> {
    if n == 0 {
        return Err(Error::InvalidParameter("zmod needs n >= 1".into()));
    }
    check_order(format!("zmod({n})"), n as u128)?;
    Ok(FiniteRng::build(
        n,
        |x, y| (x + y) % n,
        |x, y| (x * y) % n,
        0,
        Some(1 % n),
        (0..n).map(|i| i.to_string()).collect(),
        Provenance::Zmod,
    ))
}

fn product_label(parts: &[&str]) -> String {
    format!("({})", parts.join(","))
}

/// Componentwise product of one or more rings. Element indices are
/// lexicographic in the factor indices (first factor most significant).
pub fn direct_product(factors: &[&FiniteRng]) -> Result<Ring> {
    if factors.is_empty() {
        return Err(Error::InvalidParameter("direct_product needs at least one factor".into()));
    }
    let requested = factors
        .iter()
        .try_fold(1u128, |acc, r| acc.checked_mul(r.order() as u128))
        .unwrap_or(u128::MAX);
    let order = check_order("direct product", requested)?;
    let k = factors.len();
    let mut strides = vec![1usize; k];
    for i in (0..k.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * factors[i + 1].order();
    }
    let digits: Vec<Vec<usize>> = (0..order)
        .map(|x| {
            (0..k)
                .map(|i| (x / strides[i]) % factors[i].order())
                .collect()
        })
        .collect();
    let combine = |op: &dyn Fn(&FiniteRng, usize, usize) -> usize, x: usize, y: usize| {
        (0..k)
            .map(|i| op(factors[i], digits[x][i], digits[y][i]) * strides[i])
            .sum()
    };
    let encode = |d: &dyn Fn(usize) -> usize| (0..k).map(|i| d(i) * strides[i]).sum::<usize>();
    let zero = encode(&|i| factors[i].zero());
    let one = if factors.iter().all(|f| f.has_one()) {
        Some(encode(&|i| factors[i].one().unwrap()))
    } else {
        None
    };
    let labels = digits
        .iter()
        .map(|d| {
            let parts: Vec<&str> = (0..k).map(|i| factors[i].label(d[i])).collect();
            product_label(&parts)
        })
        .collect();
    Ok(FiniteRng::build(
        order,
        |x, y| combine(&|r, a, b| r.add(a, b), x, y),
        |x, y| combine(&|r, a, b| r.mul(a, b), x, y),
        zero,
        one,
        labels,
        Provenance::Product,
    ))
}

/// Exponent vectors of total degree `<= degree` in `vars` variables, ordered
/// by total degree and then lexicographically descending, so the constant
/// monomial comes first followed by `X1, …, Xr`.
pub fn monomials(vars: usize, degree: usize) -> Vec<Vec<usize>> {
    fn rec(vars: usize, remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == vars {
            out.push(prefix.clone());
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            rec(vars, remaining - e, prefix, out);
            prefix.pop();
        }
    }
    let mut all = Vec::new();
    rec(vars, degree, &mut Vec::new(), &mut all);
    all.sort_by(|a, b| {
        let (da, db): (usize, usize) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    all
}

fn monomial_label(exps: &[usize]) -> String {
    let single = exps.len() == 1;
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let var = if single { "X".to_string() } else { format!("X{}", i + 1) };
            if e == 1 {
                var
            } else {
                format!("{var}^{e}")
            }
        })
        .collect();
    parts.join("*")
}

fn coefficient_prefix(label: &str) -> String {
    if label.chars().all(|c| c.is_ascii_alphanumeric()) {
        label.to_string()
    } else {
        format!("({label})")
    }
}

/// `B[X1..Xr]` modulo every monomial of total degree above `degree`.
///
/// Elements are coefficient vectors over [`monomials`]; the index is the
/// mixed-radix number of the vector with the constant coefficient most
/// significant, so `degree = 0` reproduces `B` exactly.
pub fn trunc_poly(base: &FiniteRng, vars: usize, degree: usize) -> Result<Ring> {
    let base_one = base.require_one()?;
    if vars == 0 {
        return Err(Error::InvalidParameter("trunc_poly needs at least one variable".into()));
    }
    let monos = monomials(vars, degree);
    let m = monos.len();
    let q = base.order();
    let requested = (0..m).try_fold(1u128, |acc, _| acc.checked_mul(q as u128)).unwrap_or(u128::MAX);
    let order = check_order(format!("trunc_poly(r={vars}, k={degree})"), requested)?;
    let position: HashMap<&Vec<usize>, usize> = monos.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mono_mul: Vec<Vec<Option<usize>>> = monos
        .iter()
        .map(|a| {
            monos
                .iter()
                .map(|b| {
                    let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    position.get(&s).copied()
                })
                .collect()
        })
        .collect();
    let decode = |x: usize| -> Vec<usize> {
        let mut c = vec![0; m];
        let mut rest = x;
        for i in (0..m).rev() {
            c[i] = rest % q;
            rest /= q;
        }
        c
    };
    let encode = |c: &[usize]| c.iter().fold(0, |acc, &d| acc * q + d);
    let coeffs: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let labels = coeffs
        .iter()
        .map(|c| {
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|&(_, &d)| d != base.zero())
                .map(|(i, &d)| {
                    if i == 0 {
                        base.label(d).to_string()
                    } else if d == base_one {
                        monomial_label(&monos[i])
                    } else {
                        format!("{}{}", coefficient_prefix(base.label(d)), monomial_label(&monos[i]))
                    }
                })
                .collect();
            if terms.is_empty() {
                base.label(base.zero()).to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();
    let zero_vec = vec![base.zero(); m];
    let mut one_vec = zero_vec.clone();
    one_vec[0] = base_one;
    Ok(FiniteRng::build(
        order,
        |x, y| {
            let c: Vec<usize> = coeffs[x].iter().zip(&coeffs[y]).map(|(&a, &b)| base.add(a, b)).collect();
            encode(&c)
        },
        |x, y| {
            let mut c = zero_vec.clone();
            for (i, &a) in coeffs[x].iter().enumerate() {
                if a == base.zero() {
                    continue;
                }
                for (j, &b) in coeffs[y].iter().enumerate() {
                    if let Some(t) = mono_mul[i][j] {
                        c[t] = base.add(c[t], base.mul(a, b));
                    }
                }
            }
            encode(&c)
        },
        encode(&zero_vec),
        Some(encode(&one_vec)),
        labels,
        Provenance::TruncPoly,
    ))
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|&d| q.is_multiple_of(d))?;
    let mut k = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// The field with `q = p^k` elements, realized as `Z/p[t]/(g)` for the first
/// monic `g` of degree `k` (in coefficient order) whose quotient is a field.
/// Index `Σ c_i p^i`, so the prime subfield sits at `0..p`.
pub fn galois_field(q: usize) -> Result<Ring> {
    let (p, k) = prime_power(q)
        .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
    if k == 1 {
        return zmod(p);
    }
    check_order(format!("GF({q})"), q as u128)?;
    let decode = |x: usize| -> Vec<usize> {
        let mut c = vec![0; k];
        let mut rest = x;
        for ci in c.iter_mut() {
            *ci = rest % p;
            rest /= p;
        }
        c
    };
    let encode = |c: &[usize]| c.iter().rev().fold(0, |acc, &d| acc * p + d);
    let labels: Vec<String> = (0..q)
        .map(|x| {
            let c = decode(x);
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != 0)
                .map(|(i, &d)| match (i, d) {
                    (0, d) => d.to_string(),
                    (1, 1) => "t".to_string(),
                    (1, d) => format!("{d}t"),
                    (i, 1) => format!("t^{i}"),
                    (i, d) => format!("{d}t^{i}"),
                })
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join("+")
            }
        })
        .collect();
    // lower coefficients of the modulus t^k + g_{k-1} t^{k-1} + … + g_0
    for g in 0..q {
        let low = decode(g);
        let mul = |x: usize, y: usize| -> usize {
            let (a, b) = (decode(x), decode(y));
            let mut prod = vec![0; 2 * k - 1];
            for i in 0..k {
                for j in 0..k {
                    prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
                }
            }
            for d in (k..2 * k - 1).rev() {
                let c = prod[d];
                if c != 0 {
                    prod[d] = 0;
                    for (i, &gi) in low.iter().enumerate() {
                        let t = d - k + i;
                        prod[t] = (prod[t] + p * p - c * gi % p) % p;
                    }
                }
            }
            encode(&prod[..k])
        };
        let candidate = FiniteRng::build(
            q,
            |x, y| {
                let (a, b) = (decode(x), decode(y));
                let c: Vec<usize> = a.iter().zip(&b).map(|(u, v)| (u + v) % p).collect();
                encode(&c)
            },
            mul,
            0,
            Some(1),
            labels.clone(),
            Provenance::Table,
        );
        if candidate.is_field()? {
            return Ok(candidate);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod_raw(n: usize) -> RawTables {
        RawTables {
            add: (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect(),
            mul: (0..n).map(|x| (0..n).map(|y| (x * y) % n).collect()).collect(),
            zero: 0,
            one: Some(1 % n),
            labels: None,
        }
    }

    #[test]
    fn z6_tables_validate() {
        assert!(validate_rng(&zmod_raw(6)).unwrap().is_valid());
    }

    #[test]
    fn single_mutation_breaks_distributivity() {
        let mut raw = zmod_raw(6);
        raw.mul[2][3] = 1;
        let report = validate_rng(&raw).unwrap();
        let v = report.violated(Axiom::Distributive).expect("distributivity violation");
        let (x, y, z) = (v.witness[0], v.witness[1], v.witness[2]);
        let lhs = raw.mul[x][raw.add[y][z]];
        let rhs = raw.add[raw.mul[x][y]][raw.mul[x][z]];
        let lhs_r = raw.mul[raw.add[y][z]][x];
        let rhs_r = raw.add[raw.mul[y][x]][raw.mul[z][x]];
        assert!(lhs != rhs || lhs_r != rhs_r);
        assert!(report.violated(Axiom::MulCommutative).is_some());
    }

    #[test]
    fn even_residues_of_z4_form_a_rng_without_identity() {
        // {0,2} ⊂ Z4 re-indexed as 0 ↦ 0, 2 ↦ 1
        let raw = RawTables {
            add: vec![vec![0, 1], vec![1, 0]],
            mul: vec![vec![0, 0], vec![0, 0]],
            zero: 0,
            one: None,
            labels: Some(vec!["0".into(), "2".into()]),
        };
        assert!(validate_rng(&raw).unwrap().is_valid());
        let r = FiniteRng::from_tables(raw).unwrap();
        assert!(!r.has_one());
        assert_eq!(r.characteristic(), 2);
    }

    #[test]
    fn malformed_tables_are_errors() {
        let mut raw = zmod_raw(3);
        raw.add[1].pop();
        assert!(matches!(validate_rng(&raw), Err(Error::MalformedTable(_))));
        let mut raw = zmod_raw(3);
        raw.mul[0][0] = 7;
        assert!(matches!(validate_rng(&raw), Err(Error::MalformedTable(_))));
    }

    #[test]
    fn duplicate_labels_are_reported() {
        let mut raw = zmod_raw(2);
        raw.labels = Some(vec!["a".into(), "a".into()]);
        let report = validate_rng(&raw).unwrap();
        assert_eq!(report.violated(Axiom::DistinctLabels).unwrap().witness, vec![0, 1]);
    }

    #[test]
    fn zmod_examples() {
        let z1 = zmod(1).unwrap();
        assert_eq!(z1.order(), 1);
        assert_eq!(z1.one(), Some(z1.zero()));
        let z4 = zmod(4).unwrap();
        assert_eq!(z4.mul(2, 2), 0);
        assert_eq!(zmod(6).unwrap().characteristic(), 6);
        assert!(matches!(zmod(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn characteristic_of_zmod_up_to_24() {
        for n in 1..=24 {
            assert_eq!(zmod(n).unwrap().characteristic(), n);
        }
    }

    #[test]
    fn product_examples() {
        let z2 = zmod(2).unwrap();
        let z4 = zmod(4).unwrap();
        let p = direct_product(&[&z2, &z2]).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.label(p.one().unwrap()), "(1,1)");
        assert_eq!(p.idempotents().len(), 4);
        assert!(p.is_reduced());
        assert!(!p.is_domain().unwrap());
        assert_eq!(direct_product(&[&z2, &z4]).unwrap().characteristic(), 4);
        let single = direct_product(&[&z4]).unwrap();
        assert!(single.same_tables(&z4));
    }

    #[test]
    fn product_is_associative_under_canonical_indexing() {
        let (a, b, c) = (zmod(2).unwrap(), zmod(3).unwrap(), zmod(4).unwrap());
        let ab = direct_product(&[&a, &b]).unwrap();
        let left = direct_product(&[&ab, &c]).unwrap();
        let flat = direct_product(&[&a, &b, &c]).unwrap();
        assert!(left.same_tables(&flat));
    }

    #[test]
    fn predicates_on_small_rings() {
        let z7 = zmod(7).unwrap();
        assert!(z7.is_domain().unwrap() && z7.is_field().unwrap());
        assert!(!zmod(4).unwrap().is_reduced());
        assert!(zmod(1).unwrap().is_domain().is_ok_and(|d| !d));
    }

    #[test]
    fn trunc_poly_examples() {
        let z2 = zmod(2).unwrap();
        let t = trunc_poly(&z2, 1, 1).unwrap();
        assert_eq!(t.order(), 4);
        let x = t.el("X").unwrap();
        assert!((x * x).is_zero());
        assert_eq!(trunc_poly(&z2, 1, 0).unwrap().as_ref(), z2.as_ref());
        let z4 = zmod(4).unwrap();
        let t4 = trunc_poly(&z4, 1, 1).unwrap();
        assert_eq!(t4.order(), 16);
        let two_x = t4.el("2X").unwrap();
        assert!((two_x * two_x).is_zero());
        let t2 = trunc_poly(&z2, 2, 2).unwrap();
        assert_eq!(t2.order(), 64);
        let (x1, x2) = (t2.el("X1").unwrap(), t2.el("X2").unwrap());
        assert_eq!((x1 * x2).to_string(), "X1*X2");
        assert!((x1 * x1 * x2).is_zero());
        assert!(t2.validate().is_valid());
    }

    #[test]
    fn galois_fields() {
        for q in [4, 8, 9] {
            let f = galois_field(q).unwrap();
            assert_eq!(f.order(), q);
            assert!(f.is_field().unwrap());
            assert!(f.validate().is_valid());
        }
        assert!(galois_field(6).is_err());
        let f4 = galois_field(4).unwrap();
        assert_eq!(f4.labels(), &["0", "1", "t", "1+t"]);
    }

    #[test]
    fn size_guard_applies() {
        crate::guard::with_size_guard(100, || {
            let z4 = zmod(4).unwrap();
            assert!(matches!(
                trunc_poly(&z4, 1, 3),
                Err(Error::SizeGuardExceeded { requested: 256, .. })
            ));
            assert!(direct_product(&[&z4, &z4, &z4, &z4]).is_err());
        });
    }
}
