//! Truncated bivariate power series over exact rationals.
//!
//! A [`Series`] carries the coefficients `c[r][s]` of `x^r y^s` for
//! `0 <= r <= nx`, `0 <= s <= ny`. Nothing outside that window is known, so
//! binary operations work on the intersection of the operands' windows and
//! equality only compares that intersection.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{a_value, binomial, factorial, k_closed};
use crate::report::Check;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("window {nx}x{ny} too small for this operation")]
    WindowTooSmall { nx: usize, ny: usize },
    #[error("divisor has zero constant term")]
    ZeroConstantTerm,
    #[error("window {nx}x{ny} is not square")]
    NotSquare { nx: usize, ny: usize },
    #[error("malformed series dump: {0}")]
    Malformed(String),
}

fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn inv_fact(n: usize) -> BigRational {
    rat(1, factorial(n))
}

#[derive(Clone)]
pub struct Series {
    nx: usize,
    ny: usize,
    coeffs: Vec<Vec<BigRational>>,
}

impl Series {
    pub fn from_fn(nx: usize, ny: usize, f: impl Fn(usize, usize) -> BigRational) -> Self {
        let coeffs = (0..=nx).map(|r| (0..=ny).map(|s| f(r, s)).collect()).collect();
        Self { nx, ny, coeffs }
    }

    pub fn zero(nx: usize, ny: usize) -> Self {
        Self::from_fn(nx, ny, |_, _| BigRational::zero())
    }

    pub fn constant(c: BigRational, nx: usize, ny: usize) -> Self {
        let mut out = Self::zero(nx, ny);
        out.coeffs[0][0] = c;
        out
    }

    pub fn one(nx: usize, ny: usize) -> Self {
        Self::constant(BigRational::one(), nx, ny)
    }

    /// `c · x^r y^s`, truncated away if outside the window.
    pub fn monomial(r: usize, s: usize, c: BigRational, nx: usize, ny: usize) -> Self {
        let mut out = Self::zero(nx, ny);
        if r <= nx && s <= ny {
            out.coeffs[r][s] = c;
        }
        out
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn coeff(&self, r: usize, s: usize) -> Option<&BigRational> {
        self.coeffs.get(r).and_then(|row| row.get(s))
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.coeffs
    }

    /// Restricts to a smaller window.
    pub fn truncate(&self, nx: usize, ny: usize) -> Self {
        let (nx, ny) = (nx.min(self.nx), ny.min(self.ny));
        Self::from_fn(nx, ny, |r, s| self.coeffs[r][s].clone())
    }

    fn common(&self, other: &Series) -> (usize, usize) {
        (self.nx.min(other.nx), self.ny.min(other.ny))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_fn(self.nx, self.ny, |r, s| &self.coeffs[r][s] * c)
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ny, self.nx, |r, s| self.coeffs[s][r].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Cells of the common window where the two series differ.
    pub fn mismatches(&self, other: &Series) -> Vec<(usize, usize)> {
        let (nx, ny) = self.common(other);
        (0..=nx)
            .flat_map(|r| (0..=ny).map(move |s| (r, s)))
            .filter(|&(r, s)| self.coeffs[r][s] != other.coeffs[r][s])
            .collect()
    }

    /// `∬ S dx dy` with zero constants of integration. The result is known
    /// one step further in each variable than the input.
    pub fn integrate_xy(&self) -> Self {
        Self::from_fn(self.nx + 1, self.ny + 1, |r, s| {
            if r == 0 || s == 0 {
                BigRational::zero()
            } else {
                &self.coeffs[r - 1][s - 1] / BigRational::from_integer(BigInt::from(r * s))
            }
        })
    }

    /// `∂²S / ∂x∂y`; the window shrinks by one in each variable.
    pub fn partial_xy(&self) -> Result<Self, SeriesError> {
        if self.nx == 0 || self.ny == 0 {
            return Err(SeriesError::WindowTooSmall { nx: self.nx, ny: self.ny });
        }
        Ok(Self::from_fn(self.nx - 1, self.ny - 1, |r, s| {
            &self.coeffs[r + 1][s + 1] * BigRational::from_integer(BigInt::from((r + 1) * (s + 1)))
        }))
    }

    /// `Q` with `Q · den = self` on the common window, solved cell by cell
    /// in order of total degree.
    pub fn divide_by_unit(&self, den: &Series) -> Result<Self, SeriesError> {
        let lead = &den.coeffs[0][0];
        if lead.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let (nx, ny) = self.common(den);
        let mut q = Self::zero(nx, ny);
        for d in 0..=nx + ny {
            for r in d.saturating_sub(ny)..=d.min(nx) {
                let s = d - r;
                let mut acc = self.coeffs[r][s].clone();
                for p in 0..=r {
                    for t in 0..=s {
                        if p == 0 && t == 0 {
                            continue;
                        }
                        let dc = &den.coeffs[p][t];
                        if !dc.is_zero() {
                            acc -= dc * &q.coeffs[r - p][s - t];
                        }
                    }
                }
                q.coeffs[r][s] = acc / lead;
            }
        }
        Ok(q)
    }

    /// Sums along anti-diagonals: the `m`-th entry is `Σ_{r+s=m} c[r][s]`,
    /// i.e. the specialisation `x = y`. Needs a square window.
    pub fn diagonal_collapse(&self) -> Result<Vec<BigRational>, SeriesError> {
        if self.nx != self.ny {
            return Err(SeriesError::NotSquare { nx: self.nx, ny: self.ny });
        }
        Ok((0..=self.nx)
            .map(|m| (0..=m).map(|r| &self.coeffs[r][m - r]).sum())
            .collect())
    }

    /// `{"nx":…, "ny":…, "coeffs":[[["num","den"],…],…]}`, rows indexed by `r`.
    pub fn to_json(&self) -> String {
        let dump = SeriesDump {
            nx: self.nx,
            ny: self.ny,
            coeffs: self
                .coeffs
                .iter()
                .map(|row| row.iter().map(|c| [c.numer().to_string(), c.denom().to_string()]).collect())
                .collect(),
        };
        serde_json::to_string(&dump).expect("series dump serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, SeriesError> {
        let bad = |m: String| SeriesError::Malformed(m);
        let dump: SeriesDump = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        if dump.coeffs.len() != dump.nx + 1 || dump.coeffs.iter().any(|row| row.len() != dump.ny + 1) {
            return Err(bad("grid shape does not match nx, ny".into()));
        }
        let coeffs = dump
            .coeffs
            .iter()
            .map(|row| {
                row.iter()
                    .map(|[n, d]| {
                        let n: BigInt = n.parse().map_err(|_| bad(format!("numerator {n:?}")))?;
                        let d: BigInt = d.parse().map_err(|_| bad(format!("denominator {d:?}")))?;
                        if d.is_zero() {
                            return Err(bad("zero denominator".into()));
                        }
                        Ok(BigRational::new(n, d))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { nx: dump.nx, ny: dump.ny, coeffs })
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesDump {
    nx: usize,
    ny: usize,
    coeffs: Vec<Vec<[String; 2]>>,
}

impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        self.mismatches(other).is_empty()
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Series {}x{} [", self.nx, self.ny)?;
        for row in &self.coeffs {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let (nx, ny) = self.common(rhs);
        Series::from_fn(nx, ny, |r, s| &self.coeffs[r][s] + &rhs.coeffs[r][s])
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let (nx, ny) = self.common(rhs);
        Series::from_fn(nx, ny, |r, s| &self.coeffs[r][s] - &rhs.coeffs[r][s])
    }
}

/// Truncated Cauchy product.
impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let (nx, ny) = self.common(rhs);
        let mut out = Series::zero(nx, ny);
        for p in 0..=nx {
            for q in 0..=ny {
                let a = &self.coeffs[p][q];
                if a.is_zero() {
                    continue;
                }
                for r in p..=nx {
                    for s in q..=ny {
                        let b = &rhs.coeffs[r - p][s - q];
                        if !b.is_zero() {
                            out.coeffs[r][s] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}

/// `e^{x+y}`: `c[a][b] = 1/(a! b!)`.
pub fn exp_sum_series(nx: usize, ny: usize) -> Series {
    Series::from_fn(nx, ny, |a, b| inv_fact(a) * inv_fact(b))
}

/// `I_0(2√(xy)) = Σ_m (xy)^m / (m!)²`.
pub fn bessel_i0_series(nx: usize, ny: usize) -> Series {
    Series::from_fn(nx, ny, |r, s| {
        if r == s {
            inv_fact(r) * inv_fact(r)
        } else {
            BigRational::zero()
        }
    })
}

/// `Σ C(r+s, r) x^r y^s / (r! s!)`.
pub fn binomial_egf_series(nx: usize, ny: usize) -> Series {
    Series::from_fn(nx, ny, |r, s| {
        BigRational::from_integer(binomial((r + s) as u64, r as i64)) * inv_fact(r) * inv_fact(s)
    })
}

/// `1 / ((1-x)(1-y))`: every coefficient is 1.
pub fn geometric_series(nx: usize, ny: usize) -> Series {
    Series::from_fn(nx, ny, |_, _| BigRational::one())
}

/// The polynomial `1 - x - y + xy`.
pub fn bilinear_denominator(nx: usize, ny: usize) -> Series {
    Series::from_fn(nx, ny, |r, s| match (r, s) {
        (0, 0) | (1, 1) => BigRational::one(),
        (1, 0) | (0, 1) => -BigRational::one(),
        _ => BigRational::zero(),
    })
}

/// `Σ_{r,s>=1} C(r+s-2, r-1) x^r y^s / (r! s!)`, vanishing on both axes.
pub fn l_series(nx: usize, ny: usize) -> Series {
    Series::from_fn(nx, ny, |r, s| {
        if r == 0 || s == 0 {
            BigRational::zero()
        } else {
            BigRational::from_integer(binomial((r + s - 2) as u64, (r - 1) as i64)) * inv_fact(r) * inv_fact(s)
        }
    })
}

/// `l_series` with the axes replaced by `e^x` and `e^y` (both 1 at the
/// origin).
pub fn l_series_exp_boundary(nx: usize, ny: usize) -> Series {
    let base = l_series(nx, ny);
    Series::from_fn(nx, ny, |r, s| match (r, s) {
        (r, 0) => inv_fact(r),
        (0, s) => inv_fact(s),
        _ => base.coeffs[r][s].clone(),
    })
}

/// `Σ k(r, r+s) x^r y^s / (r! s!)`.
pub fn k_series(nx: usize, ny: usize) -> Series {
    Series::from_fn(nx, ny, |r, s| {
        let k = k_closed(r, r + s).expect("r <= r + s");
        rat(k, factorial(r) * factorial(s))
    })
}

/// `Σ a(r, s) x^r y^s`.
pub fn a_series(nx: usize, ny: usize) -> Series {
    Series::from_fn(nx, ny, a_value)
}

/// Where `K - (L_e + 1)/(1-x-y+xy)` is nonzero, `L_e` being
/// [`l_series_exp_boundary`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryResidual {
    pub nonzero: usize,
    pub cells: usize,
    pub first: Option<(usize, usize, BigRational)>,
}

impl fmt::Display for BoundaryResidual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} of {} coefficients nonzero", self.nonzero, self.cells)?;
        if let Some((r, s, v)) = &self.first {
            write!(f, "; first at x^{r}y^{s}: {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub order: usize,
    pub checks: Vec<Check>,
    pub exp_boundary: BoundaryResidual,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        crate::report::all_passed(&self.checks)
    }
}

fn compare(name: &str, lhs: &Series, rhs: &Series) -> Check {
    let bad = lhs.mismatches(rhs);
    let (nx, ny) = lhs.common(rhs);
    let detail = match bad.first() {
        None => format!("{} coefficients exact", (nx + 1) * (ny + 1)),
        Some(&(r, s)) => format!(
            "{} mismatches, first at x^{r}y^{s}: {} vs {}",
            bad.len(),
            lhs.coeffs[r][s],
            rhs.coeffs[r][s]
        ),
    };
    Check::new(name, bad.is_empty(), detail)
}

/// `K - (L_e + 1)/(1-x-y+xy)` on the window.
pub fn exp_boundary_residual(order: usize) -> BoundaryResidual {
    let den = bilinear_denominator(order, order);
    let alt = (&l_series_exp_boundary(order, order) + &Series::one(order, order))
        .divide_by_unit(&den)
        .expect("unit constant term");
    let residual = &k_series(order, order) - &alt;
    let nonzero: Vec<(usize, usize)> = residual.mismatches(&Series::zero(order, order));
    BoundaryResidual {
        nonzero: nonzero.len(),
        cells: (order + 1) * (order + 1),
        first: nonzero.first().map(|&(r, s)| (r, s, residual.coeffs[r][s].clone())),
    }
}

/// The product form of the binomial EGF and its collapse at `x = y` to
/// `C(2m, m)/m!`.
pub fn bessel_checks(order: usize) -> Vec<Check> {
    let n = order;
    let egf = binomial_egf_series(n, n);
    let product = &exp_sum_series(n, n) * &bessel_i0_series(n, n);
    let diag = egf.diagonal_collapse().expect("square window");
    let bad: Vec<usize> = (0..=n)
        .filter(|&m| diag[m] != rat(binomial(2 * m as u64, m as i64), factorial(m)))
        .collect();
    let detail = if bad.is_empty() {
        format!("m = 0..={n}")
    } else {
        format!("fails at m = {bad:?}")
    };
    vec![
        compare("binomial_egf = e^{x+y} I0(2sqrt(xy))", &egf, &product),
        Check::new("x=y collapse = C(2m,m)/m!", bad.is_empty(), detail),
    ]
}

/// Derivative and integral of `L`, the `A`/`L` relation and the closed
/// form of `K`.
pub fn generating_function_checks(order: usize) -> Vec<Check> {
    let n = order;
    let egf = binomial_egf_series(n, n);
    let l = l_series(n, n);
    let a = a_series(n, n);
    let k = k_series(n, n);
    let den = bilinear_denominator(n, n);
    let quotient = (&l + &Series::one(n, n)).divide_by_unit(&den).expect("unit constant term");
    vec![
        compare("d2/dxdy L = binomial_egf", &l.partial_xy().expect("order >= 1"), &egf),
        compare("integral of binomial_egf = L", &egf.integrate_xy(), &l),
        compare("(1-x-y+xy) A = L", &(&den * &a), &l),
        compare("K = (L + 1)/(1-x-y+xy)", &k, &quotient),
        compare("K = A + 1/((1-x)(1-y))", &k, &(&a + &geometric_series(n, n))),
    ]
}

/// Every series identity, compared coefficient by coefficient on
/// `[0, order]²`, plus the residual of the `e^x`-boundary variant.
pub fn verify_identities(order: usize) -> IdentityReport {
    let mut checks = bessel_checks(order);
    checks.extend(generating_function_checks(order));
    IdentityReport { order, checks, exp_boundary: exp_boundary_residual(order) }
}

/// `Σ_m C(r,m) C(s,s-m) = C(r+s,s)` on `0..=max × 0..=max`.
pub fn vandermonde_check(max: usize) -> Check {
    let mut bad = Vec::new();
    for r in 0..=max as u64 {
        for s in 0..=max as u64 {
            let lhs: BigInt = (0..=r.min(s))
                .map(|m| binomial(r, m as i64) * binomial(s, (s - m) as i64))
                .sum();
            if lhs != binomial(r + s, s as i64) {
                bad.push(format!("({r},{s})"));
            }
        }
    }
    let detail = if bad.is_empty() { format!("r, s <= {max}") } else { bad.join(" ") };
    Check::new("Vandermonde convolution", bad.is_empty(), detail)
}

/// Invariance of each named series under `x <-> y`.
pub fn symmetry_checks(order: usize) -> Vec<Check> {
    let n = order;
    let named: [(&str, Series); 6] = [
        ("binomial_egf", binomial_egf_series(n, n)),
        ("bessel_i0", bessel_i0_series(n, n)),
        ("geometric", geometric_series(n, n)),
        ("L", l_series(n, n)),
        ("K", k_series(n, n)),
        ("A", a_series(n, n)),
    ];
    named
        .into_iter()
        .map(|(name, s)| Check::new(format!("{name} symmetric in x, y"), s.is_symmetric(), format!("order {n}")))
        .collect()
}
