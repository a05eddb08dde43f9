//! Multivariate polynomials with exact rational coefficients.
//!
//! Monomials are ordered graded-lexicographically (total degree first,
//! then exponent vectors), which keeps every derived object — kernel
//! bases in particular — deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};

use crate::exact::{rat_to_f64, Rat};

/// Exponent vector of a monomial. Ordering: total degree, then lex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Scalar polynomial in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl ScalarPoly {
    pub fn zero(nvars: usize) -> Self {
        ScalarPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; nvars]), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    /// The coordinate variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial(exps), Rat::one());
        p
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coeff: Rat) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exps), coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    fn insert_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.clone() * c;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.insert_term(Monomial(exps), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        assert!(i < self.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] = e - 1;
            out.insert_term(Monomial(exps), c.clone() * Rat::from_integer(e.into()));
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval_exact(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    term = term * x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Floating-point evaluation.
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        debug_assert_eq!(point.len(), self.nvars);
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut term = rat_to_f64(c);
            for (x, &e) in point.iter().zip(&m.0) {
                term *= x.powi(e as i32);
            }
            acc += term;
        }
        acc
    }

    /// Substitute each variable by a polynomial (all in `target_vars` vars).
    pub fn substitute(&self, images: &[ScalarPoly]) -> ScalarPoly {
        assert_eq!(images.len(), self.nvars);
        let target_vars = images.first().map_or(0, |p| p.nvars);
        let mut out = ScalarPoly::zero(target_vars);
        // Cache powers of each image polynomial as needed.
        let mut powers: Vec<Vec<ScalarPoly>> = images
            .iter()
            .map(|p| vec![ScalarPoly::one(target_vars), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut term = ScalarPoly::constant(target_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Coefficient vector over a fixed monomial list.
    pub fn coeff_vector(&self, monomials: &[Monomial]) -> Vec<Rat> {
        monomials
            .iter()
            .map(|m| self.terms.get(m).cloned().unwrap_or_else(Rat::zero))
            .collect()
    }

    /// Rename variables: the result has `new_nvars` variables and variable
    /// `i` of `self` becomes `map[i]`.
    pub fn remap_vars(&self, new_nvars: usize, map: &[usize]) -> ScalarPoly {
        assert_eq!(map.len(), self.nvars);
        let mut out = ScalarPoly::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; new_nvars];
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    exps[map[i]] += e;
                }
            }
            out.insert_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Human-readable form using the given variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(names[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[i], e));
                }
            }
            let coeff_str = if factors.is_empty() {
                format!("{}", c)
            } else if c.is_one() {
                String::new()
            } else if (-c.clone()).is_one() {
                "-".to_string()
            } else {
                format!("{}*", c)
            };
            parts.push(format!("{}{}", coeff_str, factors.join("*")));
        }
        let mut s = String::new();
        for (i, part) in parts.iter().enumerate() {
            if i == 0 {
                s.push_str(part);
            } else if let Some(stripped) = part.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(stripped);
            } else {
                s.push_str(" + ");
                s.push_str(part);
            }
        }
        s
    }
}

impl fmt::Display for ScalarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{}", i + 1)).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

/// Vector-valued polynomial map on the group, in exponential coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPolynomial {
    pub components: Vec<ScalarPoly>,
}

impl GroupPolynomial {
    pub fn scalar(p: ScalarPoly) -> Self {
        GroupPolynomial { components: vec![p] }
    }

    pub fn nvars(&self) -> usize {
        self.components.first().map_or(0, |p| p.nvars())
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    pub fn degree(&self) -> u32 {
        self.components.iter().map(|p| p.degree()).max().unwrap_or(0)
    }

    pub fn eval_f64(&self, point: &[f64]) -> Vec<f64> {
        self.components.iter().map(|p| p.eval_f64(point)).collect()
    }

    /// Euclidean norm squared of the value, as a float.
    pub fn eval_norm_sq(&self, point: &[f64]) -> f64 {
        self.components
            .iter()
            .map(|p| {
                let v = p.eval_f64(point);
                v * v
            })
            .sum()
    }

    /// Compose with a polynomial substitution applied to every component.
    pub fn substitute(&self, images: &[ScalarPoly]) -> GroupPolynomial {
        GroupPolynomial {
            components: self.components.iter().map(|p| p.substitute(images)).collect(),
        }
    }
}

/// Kind of a first-order polynomial-coefficient differential operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    /// Derivative along `x · exp(t E_j)` at t = 0.
    LeftInvariant(usize),
    /// Derivative along `exp(t E_j) · x` at t = 0.
    RightInvariant(usize),
    General,
}

/// First-order differential operator `sum_i a_i(x) d/dx_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorFieldOp {
    pub coefficients: Vec<ScalarPoly>,
    pub kind: FieldKind,
}

impl VectorFieldOp {
    pub fn nvars(&self) -> usize {
        self.coefficients.len()
    }

    /// Apply to a scalar polynomial: `sum_i a_i d_i p`.
    pub fn apply_scalar(&self, p: &ScalarPoly) -> ScalarPoly {
        let mut out = ScalarPoly::zero(p.nvars());
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let d = p.derivative(i);
            if !d.is_zero() {
                out = out.add(&a.mul(&d));
            }
        }
        out
    }

    /// Apply componentwise to a vector-valued polynomial.
    pub fn apply(&self, p: &GroupPolynomial) -> GroupPolynomial {
        GroupPolynomial {
            components: p.components.iter().map(|c| self.apply_scalar(c)).collect(),
        }
    }

    /// Linear combination of fields with rational weights.
    pub fn linear_combination(fields: &[VectorFieldOp], weights: &[Rat]) -> VectorFieldOp {
        assert_eq!(fields.len(), weights.len());
        let n = fields[0].nvars();
        let mut coeffs = vec![ScalarPoly::zero(n); n];
        for (f, w) in fields.iter().zip(weights) {
            if w.is_zero() {
                continue;
            }
            for (acc, c) in coeffs.iter_mut().zip(&f.coefficients) {
                *acc = acc.add(&c.scale(w));
            }
        }
        VectorFieldOp {
            coefficients: coeffs,
            kind: FieldKind::General,
        }
    }

    /// Commutator as a vector field: coefficients of `[A, B]` obtained by
    /// applying each operator to the coordinate functions.
    pub fn commutator(&self, other: &VectorFieldOp) -> VectorFieldOp {
        let n = self.nvars();
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let xi = ScalarPoly::var(n, i);
            let ab = self.apply_scalar(&other.apply_scalar(&xi));
            let ba = other.apply_scalar(&self.apply_scalar(&xi));
            coeffs.push(ab.sub(&ba));
        }
        VectorFieldOp {
            coefficients: coeffs,
            kind: FieldKind::General,
        }
    }

    /// Evaluate the coefficient vector at a point.
    pub fn coefficients_at(&self, point: &[f64]) -> Vec<f64> {
        self.coefficients.iter().map(|c| c.eval_f64(point)).collect()
    }
}

/// Collect the sorted list of monomials appearing in any of the given
/// polynomials.
pub fn monomial_support(polys: &[&ScalarPoly]) -> Vec<Monomial> {
    let mut set = std::collections::BTreeSet::new();
    for p in polys {
        for (m, _) in p.terms() {
            set.insert(m.clone());
        }
    }
    set.into_iter().collect()
}

/// Signed decimal-free display of a rational vector, used in reports.
pub fn format_rat_vec(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|r| format!("{}", r)).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_from_i64};

    fn p_x2_plus_y2() -> ScalarPoly {
        // x^2 + y^2 in 3 variables (x, y, t)
        ScalarPoly::var(3, 0).pow(2).add(&ScalarPoly::var(3, 1).pow(2))
    }

    #[test]
    fn arithmetic_and_degree() {
        let p = p_x2_plus_y2();
        assert_eq!(p.degree(), 2);
        let q = p.mul(&p);
        assert_eq!(q.degree(), 4);
        assert!(p.sub(&p).is_zero());
        assert_eq!(
            p.eval_exact(&[rat_from_i64(1), rat_from_i64(2), rat_from_i64(7)]),
            rat_from_i64(5)
        );
    }

    #[test]
    fn derivative_matches_hand_computation() {
        let p = p_x2_plus_y2();
        let dx = p.derivative(0);
        assert_eq!(dx, ScalarPoly::var(3, 0).scale(&rat_from_i64(2)));
        assert!(p.derivative(2).is_zero());
    }

    #[test]
    fn substitution_composes() {
        // p(x, y) = x*y; substitute x -> u + v, y -> u - v gives u^2 - v^2
        let p = ScalarPoly::var(2, 0).mul(&ScalarPoly::var(2, 1));
        let u_plus_v = ScalarPoly::var(2, 0).add(&ScalarPoly::var(2, 1));
        let u_minus_v = ScalarPoly::var(2, 0).sub(&ScalarPoly::var(2, 1));
        let q = p.substitute(&[u_plus_v, u_minus_v]);
        let expect = ScalarPoly::var(2, 0).pow(2).sub(&ScalarPoly::var(2, 1).pow(2));
        assert_eq!(q, expect);
    }

    #[test]
    fn field_application() {
        // (d_x - 1/2 y d_t) applied to x^2 + y^2 is 2x
        let n = 3;
        let field = VectorFieldOp {
            coefficients: vec![
                ScalarPoly::one(n),
                ScalarPoly::zero(n),
                ScalarPoly::var(n, 1).scale(&rat(-1, 2)),
            ],
            kind: FieldKind::LeftInvariant(0),
        };
        let out = field.apply_scalar(&p_x2_plus_y2());
        assert_eq!(out, ScalarPoly::var(n, 0).scale(&rat_from_i64(2)));
    }

    #[test]
    fn graded_lex_order_is_degree_first() {
        let low = Monomial(vec![2, 0]);
        let high = Monomial(vec![0, 3]);
        assert!(low < high);
        let a = Monomial(vec![1, 1]);
        let b = Monomial(vec![2, 0]);
        assert!(a < b);
    }
}
