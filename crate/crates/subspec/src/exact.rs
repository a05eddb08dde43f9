//! Exact rational linear algebra: row reduction, nullspaces, span tracking.
//!
//! All symbolic decision paths in the crate reduce to small rational
//! matrices, so a dense representation over `BigRational` is enough.

use num::{BigRational, Zero};

pub type Rat = BigRational;

/// Dense matrix over the rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        debug_assert!(rows.iter().all(|row| row.len() == c));
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// In-place reduced row echelon form. Returns the pivot column of each
    /// pivot row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(sel) = (pivot_row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, sel);
            let inv = {
                let p = self.get(pivot_row, col).clone();
                p.recip()
            };
            for j in col..self.cols {
                let v = self.get(pivot_row, j).clone() * &inv;
                self.set(pivot_row, j, v);
            }
            for r in 0..self.rows {
                if r != pivot_row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for j in col..self.cols {
                        let v = self.get(r, j).clone() - factor.clone() * self.get(pivot_row, j);
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the nullspace {x : M x = 0}, one vector per free column.
    ///
    /// Deterministic given the column order: row reduction runs left to
    /// right, and each basis vector has a 1 in its free column.
    pub fn nullspace(mut self) -> Vec<Vec<Rat>> {
        let pivots = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::from_integer(1.into());
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -self.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Incrementally maintained row-reduced span of rational vectors.
#[derive(Debug, Clone)]
pub struct RatSpan {
    dim: usize,
    rows: Vec<Vec<Rat>>,
}

impl RatSpan {
    pub fn new(dim: usize) -> Self {
        RatSpan { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Reduce `v` against the current basis; insert if independent.
    /// Returns true when the span grew.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        for row in &self.rows {
            let lead = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let factor = v[lead].clone() / row[lead].clone();
                for (vi, ri) in v.iter_mut().zip(row.iter()) {
                    *vi = vi.clone() - factor.clone() * ri;
                }
            }
        }
        if let Some(lead) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[lead].clone().recip();
            for vi in v.iter_mut() {
                *vi = vi.clone() * &inv;
            }
            self.rows.push(v);
            self.rows.sort_by_key(|r| r.iter().position(|x| !x.is_zero()).unwrap());
            true
        } else {
            false
        }
    }

    /// Does the span contain `v`?
    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut v = v.to_vec();
        for row in &self.rows {
            let lead = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let factor = v[lead].clone() / row[lead].clone();
                for (vi, ri) in v.iter_mut().zip(row.iter()) {
                    *vi = vi.clone() - factor.clone() * ri;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

/// Parse a rational from a string like `3`, `-1/2`, or `0.25`.
pub fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: num::BigInt = num.trim().parse().ok()?;
        let d: num::BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int_part.trim_start().starts_with('-');
        let int: num::BigInt = if int_part.is_empty() || int_part == "-" {
            0.into()
        } else {
            int_part.parse().ok()?
        };
        let frac: num::BigInt = frac_part.parse().ok()?;
        let scale = num::BigInt::from(10u32).pow(frac_part.len() as u32);
        let mag = Rat::from_integer(int.clone()).abs()
            + Rat::new(frac, scale);
        return Some(if neg || int < 0.into() { -mag } else { mag });
    }
    let n: num::BigInt = s.parse().ok()?;
    Some(Rat::from_integer(n))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn rat_from_i64(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_simple_map() {
        // M = [[1, 2, 3], [0, 0, 1]]: kernel spanned by (-2, 1, 0)
        let m = RatMatrix::from_rows(vec![
            vec![rat_from_i64(1), rat_from_i64(2), rat_from_i64(3)],
            vec![rat_from_i64(0), rat_from_i64(0), rat_from_i64(1)],
        ]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![rat_from_i64(-2), rat_from_i64(1), rat_from_i64(0)]);
    }

    #[test]
    fn span_growth_and_membership() {
        let mut span = RatSpan::new(3);
        assert!(span.insert(vec![rat_from_i64(1), rat_from_i64(1), rat_from_i64(0)]));
        assert!(span.insert(vec![rat_from_i64(0), rat_from_i64(2), rat_from_i64(0)]));
        assert!(!span.insert(vec![rat_from_i64(3), rat_from_i64(-1), rat_from_i64(0)]));
        assert_eq!(span.rank(), 2);
        assert!(span.contains(&[rat_from_i64(5), rat_from_i64(7), rat_from_i64(0)]));
        assert!(!span.contains(&[rat_from_i64(0), rat_from_i64(0), rat_from_i64(1)]));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3").unwrap(), rat_from_i64(3));
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_none());
    }
}
