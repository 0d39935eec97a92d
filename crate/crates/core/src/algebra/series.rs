use std::fmt;

use num_bigint::BigInt;

use super::{AlgebraError, Monomial, Polynomial};

/// A polynomial standing in for a power series: every stored term has
/// x-degree at most `x_cap` and t-degree at most `t_cap`, and products
/// discard whatever would exceed either cap.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: Polynomial,
    x_cap: u32,
    t_cap: u32,
}

impl TruncatedSeries {
    /// Wraps `poly`, dropping terms above the caps.
    pub fn new(poly: Polynomial, x_cap: u32, t_cap: u32) -> Self {
        TruncatedSeries {
            poly: poly.truncate(x_cap, t_cap),
            x_cap,
            t_cap,
        }
    }

    pub fn zero(nx: usize, nt: usize, x_cap: u32, t_cap: u32) -> Self {
        Self::new(Polynomial::zero(nx, nt), x_cap, t_cap)
    }

    pub fn one(nx: usize, nt: usize, x_cap: u32, t_cap: u32) -> Self {
        Self::new(Polynomial::one(nx, nt), x_cap, t_cap)
    }

    /// `x_i / (1 - t_j x_i) = sum_k t_j^k x_i^(k+1)` truncated to the caps.
    /// With `j = None` the factor is just `x_i`.
    pub fn geometric_factor(
        nx: usize,
        nt: usize,
        i: usize,
        j: Option<usize>,
        x_cap: u32,
        t_cap: u32,
    ) -> Self {
        let mut poly = Polynomial::zero(nx, nt);
        let mut k = 0u32;
        loop {
            if k + 1 > x_cap || (j.is_none() && k > 0) || k > t_cap {
                break;
            }
            let mut x = vec![0; nx];
            x[i] = k + 1;
            let mut t = vec![0; nt];
            if let Some(j) = j {
                t[j] = k;
            }
            poly.add_term(Monomial::new(x, t), BigInt::from(1));
            k += 1;
        }
        TruncatedSeries { poly, x_cap, t_cap }
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }

    pub fn x_cap(&self) -> u32 {
        self.x_cap
    }

    pub fn t_cap(&self) -> u32 {
        self.t_cap
    }

    pub fn nx(&self) -> usize {
        self.poly.nx()
    }

    pub fn nt(&self) -> usize {
        self.poly.nt()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn check_caps(&self, other: &TruncatedSeries) -> Result<(), AlgebraError> {
        if self.x_cap != other.x_cap || self.t_cap != other.t_cap {
            return Err(AlgebraError::CapMismatch {
                left: (self.x_cap, self.t_cap),
                right: (other.x_cap, other.t_cap),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, AlgebraError> {
        self.check_caps(other)?;
        Ok(TruncatedSeries {
            poly: self.poly.checked_add(&other.poly)?,
            ..*self
        })
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, AlgebraError> {
        self.check_caps(other)?;
        Ok(TruncatedSeries {
            poly: self.poly.checked_sub(&other.poly)?,
            ..*self
        })
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, AlgebraError> {
        self.check_caps(other)?;
        let (xc, tc) = (self.x_cap, self.t_cap);
        let poly = self
            .poly
            .mul_filtered(&other.poly, |m| m.x_degree() <= xc && m.t_degree() <= tc)?;
        Ok(TruncatedSeries { poly, ..*self })
    }

    /// Multiplies by an ordinary polynomial, truncating the result.
    pub fn mul_poly(&self, p: &Polynomial) -> Result<TruncatedSeries, AlgebraError> {
        let (xc, tc) = (self.x_cap, self.t_cap);
        let poly = self
            .poly
            .mul_filtered(p, |m| m.x_degree() <= xc && m.t_degree() <= tc)?;
        Ok(TruncatedSeries { poly, ..*self })
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            poly: -&self.poly,
            ..*self
        }
    }

    pub fn scalar_mul(&self, c: &BigInt) -> TruncatedSeries {
        TruncatedSeries {
            poly: self.poly.scalar_mul(c),
            ..*self
        }
    }

    pub fn apply_permutation(&self, sigma: &[usize]) -> Result<TruncatedSeries, AlgebraError> {
        Ok(TruncatedSeries {
            poly: self.poly.apply_permutation(sigma)?,
            ..*self
        })
    }

    /// Lowers both caps, dropping terms that no longer fit.
    pub fn with_caps(&self, x_cap: u32, t_cap: u32) -> TruncatedSeries {
        TruncatedSeries::new(self.poly.clone(), x_cap, t_cap)
    }

    /// Header line of the text serialization.
    pub fn header(&self) -> String {
        format!(
            "# nx={} nt={} xcap={} tcap={}",
            self.nx(),
            self.nt(),
            self.x_cap,
            self.t_cap
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = self.header();
        out.push('\n');
        for line in self.poly.to_lines() {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<TruncatedSeries, AlgebraError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| AlgebraError::Parse("missing header".into()))?;
        let bad = || AlgebraError::Parse(header.to_string());
        let fields = header.strip_prefix("# ").ok_or_else(bad)?;
        let mut vals = [0u32; 4];
        for (slot, (field, key)) in vals
            .iter_mut()
            .zip(fields.split_whitespace().zip(["nx", "nt", "xcap", "tcap"]))
        {
            let (k, v) = field.split_once('=').ok_or_else(bad)?;
            if k != key {
                return Err(bad());
            }
            *slot = v.parse().map_err(|_| bad())?;
        }
        let poly = Polynomial::from_lines(vals[0] as usize, vals[1] as usize, lines)?;
        Ok(TruncatedSeries::new(poly, vals[2], vals[3]))
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TruncatedSeries[xcap={},tcap={}]({})",
            self.x_cap, self.t_cap, self.poly
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_factor_respects_caps() {
        let g = TruncatedSeries::geometric_factor(1, 1, 0, Some(0), 3, 5);
        assert_eq!(g.poly().to_string(), "x1^3*t1^2 + x1^2*t1 + x1");
        let g = TruncatedSeries::geometric_factor(1, 1, 0, Some(0), 1, 5);
        assert_eq!(g.poly().to_string(), "x1");
        let g = TruncatedSeries::geometric_factor(1, 1, 0, Some(0), 2, 0);
        assert_eq!(g.poly().to_string(), "x1");
        let g = TruncatedSeries::geometric_factor(1, 1, 0, Some(0), 4, 2);
        assert_eq!(g.poly().to_string(), "x1^3*t1^2 + x1^2*t1 + x1");
    }

    #[test]
    fn product_drops_overflow() {
        let g = TruncatedSeries::geometric_factor(2, 1, 0, Some(0), 3, 1);
        let h = TruncatedSeries::geometric_factor(2, 1, 1, Some(0), 3, 1);
        let p = g.mul(&h).unwrap();
        for (m, _) in p.poly().terms() {
            assert!(m.x_degree() <= 3 && m.t_degree() <= 1);
        }
        assert_eq!(p.poly().to_string(), "x1^2*x2*t1 + x1*x2^2*t1 + x1*x2");
    }

    #[test]
    fn cap_mismatch_is_an_error() {
        let a = TruncatedSeries::one(1, 1, 3, 1);
        let b = TruncatedSeries::one(1, 1, 3, 2);
        assert!(matches!(a.add(&b), Err(AlgebraError::CapMismatch { .. })));
    }

    #[test]
    fn text_round_trip() {
        let g = TruncatedSeries::geometric_factor(2, 1, 1, Some(0), 3, 2);
        let text = g.to_text();
        assert!(text.starts_with("# nx=2 nt=1 xcap=3 tcap=2\n"));
        assert_eq!(TruncatedSeries::from_text(&text).unwrap(), g);
    }
}
