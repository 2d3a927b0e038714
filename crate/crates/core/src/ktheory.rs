//! Ordered K₀ of a stationary AF system.
//!
//! With stable incidence matrix `T` (rows: level `n + 1`, columns: level `n`)
//! and `|det T| = 1`, `K₀ = Z^k` and
//!
//! ```text
//! K₀₊ = ⋃_m T^{-m}(Z₊^k) = { v : T^m v ≥ 0 for some m }.
//! ```
//!
//! Since `T ≥ 0` entrywise, once `T^m v ≥ 0` it stays so, which makes "first
//! nonnegative power" a well defined witness. Three descriptions of the cone
//! are offered: symbolic for unipotent `T` (entries of `T^m` are polynomials
//! in `m`), a half-space for primitive `T` (Perron functional), and plain
//! iteration otherwise.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// `K₁` of an AF algebra is trivial.
pub const K1_RANK: usize = 0;

pub const DEFAULT_M_MAX: usize = 64;
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
/// Relative width of the band around the Perron hyperplane that is routed
/// to iteration instead of being decided by sign.
pub const PERRON_BAND: f64 = 1e-6;

const MAX_POWER_ITERATIONS: usize = 1_000_000;

/// Square nonnegative integer matrix with no zero row or column, plus a name
/// for each coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    matrix: IntMatrix,
    labels: Vec<String>,
}

impl IncidenceMatrix {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        let labels = default_labels(matrix.rows());
        Self::with_labels(matrix, labels)
    }

    pub fn with_labels(matrix: IntMatrix, labels: Vec<String>) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() == 0 {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let k = matrix.rows();
        if labels.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: labels.len(),
            });
        }
        for i in 0..k {
            for j in 0..k {
                if matrix[(i, j)] < 0 {
                    return Err(Error::NegativeEntry {
                        row: i,
                        col: j,
                        value: matrix[(i, j)],
                    });
                }
            }
        }
        if let Some(i) = (0..k).find(|&i| (0..k).all(|j| matrix[(i, j)] == 0)) {
            return Err(Error::ZeroLine { kind: "row", index: i });
        }
        if let Some(j) = (0..k).find(|&j| (0..k).all(|i| matrix[(i, j)] == 0)) {
            return Err(Error::ZeroLine { kind: "column", index: j });
        }
        Ok(IncidenceMatrix { matrix, labels })
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let k = rows.len();
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::NotSquare {
                rows: k,
                cols: rows.first().map_or(0, Vec::len),
            });
        }
        Self::new(IntMatrix::from_rows(rows))
    }

    pub fn identity(k: usize) -> Self {
        Self::new(IntMatrix::identity(k)).expect("identity is a valid incidence matrix")
    }

    pub fn k(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Same matrix under a simultaneous row/column permutation: entry
    /// `(perm[i], perm[j])` of the result is entry `(i, j)` here.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let k = self.k();
        let mut m = IntMatrix::zeros(k, k);
        let mut labels = vec![String::new(); k];
        for i in 0..k {
            labels[perm[i]] = self.labels[i].clone();
            for j in 0..k {
                m[(perm[i], perm[j])] = self.matrix[(i, j)];
            }
        }
        Self::with_labels(m, labels)
    }

    fn check_dim(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// `T - I`.
    pub fn nilpotent_part(&self) -> IntMatrix {
        self.matrix
            .sub(&IntMatrix::identity(self.k()))
            .expect("entries are small")
    }

    /// Smallest `s ≥ 1` with `(T - I)^s = 0`, if any.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let n = self.nilpotent_part();
        let mut power = n.clone();
        for s in 1..=self.k() {
            if power.is_zero() {
                return Some(s);
            }
            power = power.mul(&n).ok()?;
        }
        None
    }

    pub fn is_unipotent(&self) -> bool {
        self.nilpotency_index().is_some()
    }

    /// Some power of `T` is strictly positive. Powers up to the Wielandt
    /// bound `k² - 2k + 2` are checked on the zero pattern.
    pub fn is_primitive(&self) -> bool {
        let k = self.k();
        let pattern: Vec<Vec<bool>> = (0..k)
            .map(|i| (0..k).map(|j| self.matrix[(i, j)] > 0).collect())
            .collect();
        let mut power = pattern.clone();
        let bound = k * k + 2 - 2 * k;
        for _ in 0..bound {
            if power.iter().all(|row| row.iter().all(|&b| b)) {
                return true;
            }
            power = bool_mul(&power, &pattern);
        }
        false
    }
}

pub(crate) fn bool_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).any(|l| a[i][l] && b[l][j]))
                .collect()
        })
        .collect()
}

/// `a, b, c, ...` for up to 26 coordinates, `v1, v2, ...` beyond.
pub fn default_labels(k: usize) -> Vec<String> {
    if k <= 26 {
        (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (1..=k).map(|i| format!("v{i}")).collect()
    }
}

/// Exact inverse of a unimodular integer matrix via the adjugate.
pub fn integer_inverse(t: &IntMatrix) -> Result<IntMatrix> {
    let det = t.determinant()?;
    if det.abs() != 1 {
        return Err(Error::NotUnimodular(det));
    }
    let adj = t.adjugate()?;
    if det == 1 {
        return Ok(adj);
    }
    let rows = adj
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.checked_neg().ok_or(Error::Overflow)).collect())
        .collect::<Result<Vec<Vec<i64>>>>()?;
    Ok(IntMatrix::from_rows(rows))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K0Result {
    pub rank: usize,
    pub determinant: i64,
    /// One generator per stable node.
    pub basis: Vec<String>,
}

impl fmt::Display for K0Result {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K0 = Z^{}, det(T) = {}", self.rank, self.determinant)
    }
}

/// `K₀ = Z^k` when `T` is a bijection of `Z^k`; anything else is refused.
pub fn k0_group(t: &IncidenceMatrix) -> Result<K0Result> {
    let determinant = t.matrix().determinant()?;
    if determinant.abs() != 1 {
        return Err(Error::NotUnimodular(determinant));
    }
    Ok(K0Result {
        rank: t.k(),
        determinant,
        basis: t.labels().to_vec(),
    })
}

/// Why a vector was certified outside the cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// Some component of `T^m v` is a polynomial in `m` with negative
    /// leading coefficient (unipotent `T`).
    Symbolic,
    /// `⟨u, v⟩ < 0` for the positive left Perron vector `u` of a primitive
    /// `T`, so `⟨u, T^m v⟩ = λ^m ⟨u, v⟩ < 0` for every `m`.
    PerronFunctional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipVerdict {
    /// `T^m v ≥ 0` and `m` is the first such power.
    InCone { m: usize },
    NotInCone(Certificate),
    /// Not nonnegative up to `m_max` and no certificate available.
    Unknown { m_max: usize },
}

impl MembershipVerdict {
    pub fn is_in(&self) -> bool {
        matches!(self, MembershipVerdict::InCone { .. })
    }
}

impl fmt::Display for MembershipVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MembershipVerdict::InCone { m } => write!(f, "in-cone({m})"),
            MembershipVerdict::NotInCone(_) => write!(f, "not-in-cone"),
            MembershipVerdict::Unknown { m_max } => write!(f, "unknown({m_max})"),
        }
    }
}

/// First `m ≤ m_max` with `T^m v ≥ 0`, by exact iteration.
pub fn first_nonnegative_power(t: &IncidenceMatrix, v: &[i64], m_max: usize) -> Result<Option<usize>> {
    t.check_dim(v)?;
    let mut w = v.to_vec();
    for m in 0..=m_max {
        if w.iter().all(|&x| x >= 0) {
            return Ok(Some(m));
        }
        if m < m_max {
            w = t.matrix().mul_vec(&w)?;
        }
    }
    Ok(None)
}

/// Iterate `w ← T w` from `v`; on failure within `m_max` steps, look for a
/// certificate of non-membership. Never reports a false negative.
pub fn cone_membership(t: &IncidenceMatrix, v: &[i64], m_max: usize) -> Result<MembershipVerdict> {
    describe_cone(t, DEFAULT_TOLERANCE, m_max)?.verdict(v, m_max)
}

/// Pick the strongest available description: symbolic for unipotent `T`,
/// half-space for primitive `T`, iteration otherwise.
pub fn describe_cone(t: &IncidenceMatrix, tolerance: f64, m_max: usize) -> Result<ConeDescription> {
    let mut cone = if t.is_unipotent() {
        unipotent_cone(t)?
    } else if t.is_primitive() {
        perron_cone(t, tolerance)?
    } else {
        ConeDescription {
            matrix: t.clone(),
            kind: ConeKind::IterativeOnly,
            fallback_m_max: DEFAULT_M_MAX,
        }
    };
    cone.fallback_m_max = m_max;
    Ok(cone)
}

#[derive(Debug, Clone)]
pub struct ConeDescription {
    pub matrix: IncidenceMatrix,
    pub kind: ConeKind,
    /// Iteration bound used when the description itself cannot decide.
    pub fallback_m_max: usize,
}

#[derive(Debug, Clone)]
pub enum ConeKind {
    UnipotentSymbolic(UnipotentCone),
    PerronHalfspace(PerronCone),
    IterativeOnly,
}

impl ConeDescription {
    /// Membership according to the description alone; `None` when it cannot
    /// decide (Perron boundary band, or no closed form).
    pub fn contains(&self, v: &[i64]) -> Result<Option<bool>> {
        self.matrix.check_dim(v)?;
        Ok(match &self.kind {
            ConeKind::UnipotentSymbolic(u) => Some(u.contains(v)),
            ConeKind::PerronHalfspace(p) => p.side(v),
            ConeKind::IterativeOnly => None,
        })
    }

    /// Iterate up to `m_max` for a witness, then fall back on the
    /// description for a negative certificate.
    pub fn verdict(&self, v: &[i64], m_max: usize) -> Result<MembershipVerdict> {
        if let Some(m) = first_nonnegative_power(&self.matrix, v, m_max)? {
            return Ok(MembershipVerdict::InCone { m });
        }
        Ok(match (&self.kind, self.contains(v)?) {
            (ConeKind::UnipotentSymbolic(_), Some(false)) => {
                MembershipVerdict::NotInCone(Certificate::Symbolic)
            }
            (ConeKind::PerronHalfspace(_), Some(false)) => {
                MembershipVerdict::NotInCone(Certificate::PerronFunctional)
            }
            _ => MembershipVerdict::Unknown { m_max },
        })
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            ConeKind::UnipotentSymbolic(_) => "unipotent-symbolic",
            ConeKind::PerronHalfspace(_) => "perron-halfspace",
            ConeKind::IterativeOnly => "iterative-only",
        }
    }

    /// Canonical piecewise text.
    pub fn render(&self) -> String {
        let labels = self.matrix.labels();
        let vars = labels.join(", ");
        let mut out = String::new();
        let _ = writeln!(out, "# cone: {}", self.kind_name());
        match &self.kind {
            ConeKind::UnipotentSymbolic(u) => {
                let _ = writeln!(out, "# nilpotency index of T - I: {}", u.nilpotency);
                let _ = writeln!(out, "K0+ = {{ ({vars}) in Z^{} :", self.matrix.k());
                for clause in u.clauses() {
                    let _ = writeln!(out, "  {}", clause.render(labels));
                }
                out.push_str("}\n");
            }
            ConeKind::PerronHalfspace(p) => {
                let _ = writeln!(out, "# lambda = {:.10}", p.lambda);
                let scale = p.u.iter().cloned().fold(f64::INFINITY, f64::min);
                let terms: Vec<String> = p
                    .u
                    .iter()
                    .zip(labels)
                    .map(|(c, l)| format!("{:.10}*{l}", c / scale))
                    .collect();
                let _ = writeln!(out, "K0+ = {{ ({vars}) in Z^{} :", self.matrix.k());
                let _ = writeln!(out, "  {} > 0", terms.join(" + "));
                let _ = writeln!(
                    out,
                    "  or |{}| <= {:e}*|v|_1 and T^m v >= 0 for some m <= {}",
                    terms.join(" + "),
                    PERRON_BAND,
                    self.fallback_m_max
                );
                out.push_str("}\n");
            }
            ConeKind::IterativeOnly => {
                let _ = writeln!(
                    out,
                    "K0+ = {{ ({vars}) in Z^{} : T^m v >= 0 for some m }}  (checked up to m = {})",
                    self.matrix.k(),
                    self.fallback_m_max
                );
            }
        }
        out
    }
}

/// Symbolic cone of a unipotent `T = I + N`.
///
/// `T^m = Σ_{j < s} C(m, j) N^j`, so component `i` of `T^m v` is
/// `p_i(m) = Σ_j C(m, j) ⟨N^j[i], v⟩`. Each `C(m, j)` is a degree-`j`
/// polynomial with positive leading coefficient, so `p_i` is eventually
/// nonnegative iff its highest nonvanishing coefficient is positive, or it
/// is the constant `v_i ≥ 0`.
#[derive(Debug, Clone)]
pub struct UnipotentCone {
    pub nilpotency: usize,
    /// `forms[i][j]` is row `i` of `N^j`: the linear form multiplying `C(m, j)`.
    pub forms: Vec<Vec<Vec<i64>>>,
}

pub fn unipotent_cone(t: &IncidenceMatrix) -> Result<ConeDescription> {
    let s = t.nilpotency_index().ok_or(Error::NotUnipotent)?;
    let n = t.nilpotent_part();
    let k = t.k();
    let mut powers = vec![IntMatrix::identity(k)];
    for j in 1..s {
        powers.push(powers[j - 1].mul(&n)?);
    }
    let forms = (0..k)
        .map(|i| powers.iter().map(|p| p.row(i).to_vec()).collect())
        .collect();
    Ok(ConeDescription {
        matrix: t.clone(),
        kind: ConeKind::UnipotentSymbolic(UnipotentCone {
            nilpotency: s,
            forms,
        }),
        fallback_m_max: DEFAULT_M_MAX,
    })
}

fn dot(form: &[i64], v: &[i64]) -> i64 {
    form.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn binomial(m: u64, j: u64) -> Option<i64> {
    if j > m {
        return Some(0);
    }
    let mut acc: i128 = 1;
    for i in 0..j {
        acc = acc * (m - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(acc).ok()
}

impl UnipotentCone {
    /// Coefficients of `p_i` in the basis `C(m, 0), C(m, 1), ...`.
    pub fn component_polynomial(&self, i: usize, v: &[i64]) -> Vec<i64> {
        self.forms[i].iter().map(|f| dot(f, v)).collect()
    }

    /// `T^m v` from the closed form.
    pub fn evaluate(&self, v: &[i64], m: u64) -> Result<Vec<i64>> {
        (0..self.forms.len())
            .map(|i| {
                self.component_polynomial(i, v)
                    .iter()
                    .enumerate()
                    .try_fold(0i64, |acc, (j, &c)| {
                        binomial(m, j as u64)
                            .and_then(|b| b.checked_mul(c))
                            .and_then(|t| acc.checked_add(t))
                            .ok_or(Error::Overflow)
                    })
            })
            .collect()
    }

    /// Leading-coefficient criterion.
    pub fn contains(&self, v: &[i64]) -> bool {
        (0..self.forms.len()).all(|i| {
            let p = self.component_polynomial(i, v);
            match p.iter().rposition(|&c| c != 0) {
                None => true,
                Some(j) => p[j] > 0,
            }
        })
    }

    fn known_nonneg(&self, zero: &[bool]) -> Vec<bool> {
        (0..self.forms.len())
            .map(|i| {
                zero[i]
                    || self.forms[i][1..]
                        .iter()
                        .all(|f| restrict(f, zero).iter().all(|&c| c == 0))
            })
            .collect()
    }

    /// Case split, component by component, over which leading forms vanish.
    ///
    /// A form with nonnegative coefficients whose variables are all forced
    /// nonnegative vanishes exactly when those variables do; such forms
    /// split on "variables all zero or not" and the zeros are substituted
    /// into the lower-order forms.
    pub fn clauses(&self) -> Vec<Clause> {
        let k = self.forms.len();
        let mut out = Vec::new();
        for i in 0..k {
            let mut zero = vec![false; k];
            let mut conds = Vec::new();
            let mut j = self.forms[i].len();
            while j > 1 {
                j -= 1;
                let form = restrict(&self.forms[i][j], &zero);
                if form.iter().all(|&c| c == 0) {
                    continue;
                }
                let nonneg = self.known_nonneg(&zero);
                let support: Vec<usize> = (0..k).filter(|&x| form[x] != 0).collect();
                if form.iter().all(|&c| c >= 0) && support.iter().all(|&x| nonneg[x]) {
                    let mut c = conds.clone();
                    c.push(Condition::VarsNonzero(support.clone()));
                    out.push(Clause {
                        component: i,
                        conditions: c,
                        requirement: Requirement::Free,
                    });
                    conds.push(Condition::VarsZero(support.clone()));
                    for x in support {
                        zero[x] = true;
                    }
                } else {
                    let mut c = conds.clone();
                    c.push(Condition::FormNonzero(form.clone()));
                    out.push(Clause {
                        component: i,
                        conditions: c,
                        requirement: Requirement::FormPositive(form.clone()),
                    });
                    conds.push(Condition::FormZero(form));
                }
            }
            out.push(Clause {
                component: i,
                conditions: conds,
                requirement: Requirement::NonNegative,
            });
        }
        out
    }

    /// Membership decided by walking [`Self::clauses`]; agrees with
    /// [`Self::contains`] on every input.
    pub fn contains_by_clauses(&self, v: &[i64]) -> bool {
        let clauses = self.clauses();
        (0..self.forms.len()).all(|i| {
            clauses
                .iter()
                .filter(|c| c.component == i)
                .find(|c| c.conditions.iter().all(|cond| cond.holds(v)))
                .is_some_and(|c| c.requirement.holds(i, v))
        })
    }
}

fn restrict(form: &[i64], zero: &[bool]) -> Vec<i64> {
    form.iter()
        .zip(zero)
        .map(|(&c, &z)| if z { 0 } else { c })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    VarsZero(Vec<usize>),
    VarsNonzero(Vec<usize>),
    FormZero(Vec<i64>),
    FormNonzero(Vec<i64>),
}

impl Condition {
    pub fn holds(&self, v: &[i64]) -> bool {
        match self {
            Condition::VarsZero(xs) => xs.iter().all(|&x| v[x] == 0),
            Condition::VarsNonzero(xs) => xs.iter().any(|&x| v[x] != 0),
            Condition::FormZero(f) => dot(f, v) == 0,
            Condition::FormNonzero(f) => dot(f, v) != 0,
        }
    }

    fn render(&self, labels: &[String]) -> String {
        let tuple = |xs: &[usize], zero: bool| {
            let op = if zero { "=" } else { "!=" };
            if xs.len() == 1 {
                format!("{} {op} 0", labels[xs[0]])
            } else {
                let names: Vec<&str> = xs.iter().map(|&x| labels[x].as_str()).collect();
                let zeros = vec!["0"; xs.len()].join(", ");
                format!("({}) {op} ({zeros})", names.join(", "))
            }
        };
        match self {
            Condition::VarsZero(xs) => tuple(xs, true),
            Condition::VarsNonzero(xs) => tuple(xs, false),
            Condition::FormZero(f) => format!("{} = 0", render_form(f, labels)),
            Condition::FormNonzero(f) => format!("{} != 0", render_form(f, labels)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Requirement {
    /// Component unconstrained.
    Free,
    FormPositive(Vec<i64>),
    NonNegative,
}

impl Requirement {
    fn holds(&self, i: usize, v: &[i64]) -> bool {
        match self {
            Requirement::Free => true,
            Requirement::FormPositive(f) => dot(f, v) > 0,
            Requirement::NonNegative => v[i] >= 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub component: usize,
    pub conditions: Vec<Condition>,
    pub requirement: Requirement,
}

impl Clause {
    pub fn render(&self, labels: &[String]) -> String {
        let name = &labels[self.component];
        let req = match &self.requirement {
            Requirement::Free => format!("{name} in Z"),
            Requirement::FormPositive(f) => {
                format!("{name} in Z, {} > 0", render_form(f, labels))
            }
            Requirement::NonNegative => format!("{name} >= 0"),
        };
        if self.conditions.is_empty() {
            req
        } else {
            let conds: Vec<String> = self.conditions.iter().map(|c| c.render(labels)).collect();
            format!("{req}  if {}", conds.join(" and "))
        }
    }
}

fn render_form(form: &[i64], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in form.iter().zip(labels).filter(|(c, _)| **c != 0) {
        let mag = c.unsigned_abs();
        let term = if mag == 1 { l.clone() } else { format!("{mag}*{l}") };
        if out.is_empty() {
            if *c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if *c < 0 { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Half-space cone of a primitive `T`: dominant eigenvalue `λ` and the
/// positive left eigenvector `u` (normalized to unit 1-norm).
#[derive(Debug, Clone)]
pub struct PerronCone {
    pub lambda: f64,
    pub u: Vec<f64>,
}

impl PerronCone {
    pub fn functional(&self, v: &[i64]) -> f64 {
        self.u.iter().zip(v).map(|(a, &b)| a * b as f64).sum()
    }

    /// `Some(true)` above the band, `Some(false)` below, `None` inside.
    pub fn side(&self, v: &[i64]) -> Option<bool> {
        let f = self.functional(v);
        let norm: f64 = v.iter().map(|x| x.unsigned_abs() as f64).sum();
        let band = PERRON_BAND * norm;
        if f > band {
            Some(true)
        } else if f < -band {
            Some(false)
        } else {
            None
        }
    }
}

/// Left Perron eigenvector by power iteration on `Tᵀ`.
pub fn perron_cone(t: &IncidenceMatrix, tolerance: f64) -> Result<ConeDescription> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::BadTolerance);
    }
    if !t.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let k = t.k();
    let m = t.matrix();
    let mut u = vec![1.0 / k as f64; k];
    let mut lambda = 0.0;
    let mut converged = false;
    for _ in 0..MAX_POWER_ITERATIONS {
        let w: Vec<f64> = (0..k)
            .map(|j| (0..k).map(|i| m[(i, j)] as f64 * u[i]).sum())
            .collect();
        let norm: f64 = w.iter().sum();
        let next: Vec<f64> = w.iter().map(|x| x / norm).collect();
        let delta = next
            .iter()
            .zip(&u)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        lambda = norm;
        u = next;
        if delta < tolerance {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_POWER_ITERATIONS));
    }
    Ok(ConeDescription {
        matrix: t.clone(),
        kind: ConeKind::PerronHalfspace(PerronCone { lambda, u }),
        fallback_m_max: DEFAULT_M_MAX,
    })
}

/// `T^{-m}` for the Penrose matrix:
/// `(-1)^m [[F_{m-1}, -F_m], [-F_m, F_{m+1}]]`.
pub fn fibonacci_inverse_power(m: i64) -> Result<IntMatrix> {
    if m < 1 {
        return Err(Error::BadExponent(m));
    }
    // (F_{m-1}, F_m, F_{m+1})
    let (mut prev, mut cur) = (0i64, 1i64);
    for _ in 1..m {
        let next = prev.checked_add(cur).ok_or(Error::Overflow)?;
        prev = cur;
        cur = next;
    }
    let next = prev.checked_add(cur).ok_or(Error::Overflow)?;
    let sign = if m % 2 == 0 { 1 } else { -1 };
    Ok(IntMatrix::from_rows(vec![
        vec![sign * prev, -sign * cur],
        vec![-sign * cur, sign * next],
    ]))
}
