//! Structure-constant tensors and matrices of linear forms.
//!
//! A [`CubicTensor`] of dimension `n` stores `gamma[(i, j, k)]`, the
//! coefficient of `e_k` in the product `e_i e_j`. Indices are 0-based in the
//! API; the file format and all printed output use 1-based indices.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::exact::{invert, Matrix, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubicTensor {
    dim: usize,
    gamma: BTreeMap<(usize, usize, usize), Rational>,
}

impl CubicTensor {
    pub fn zero(dim: usize) -> Self {
        CubicTensor {
            dim,
            gamma: BTreeMap::new(),
        }
    }

    /// Builds a tensor from products `e_i e_j = sum_k v[k] e_k`. Pairs that
    /// are not listed multiply to zero; repeated pairs accumulate.
    pub fn from_products<I>(dim: usize, products: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    {
        let mut t = CubicTensor::zero(dim);
        for (i, j, v) in products {
            for idx in [i, j] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            check_dim(dim, v.len())?;
            for (k, c) in v.into_iter().enumerate() {
                let cur = t.get(i, j, k).clone();
                t.set(i, j, k, cur + c);
            }
        }
        Ok(t)
    }

    /// Builds a tensor from explicit `(i, j, k, value)` entries. Repeating an
    /// index triple is an error.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let mut t = CubicTensor::zero(dim);
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::DuplicateEntry(i + 1, j + 1, k + 1));
            }
            t.set(i, j, k, c);
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        static ZERO: std::sync::OnceLock<Rational> = std::sync::OnceLock::new();
        self.gamma
            .get(&(i, j, k))
            .unwrap_or_else(|| ZERO.get_or_init(Rational::zero))
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        assert!(i < self.dim && j < self.dim && k < self.dim, "index out of range");
        if value.is_zero() {
            self.gamma.remove(&(i, j, k));
        } else {
            self.gamma.insert((i, j, k), value);
        }
    }

    /// Nonzero entries in lexicographic `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), &Rational)> {
        self.gamma.iter().map(|(&idx, v)| (idx, v))
    }

    pub fn nnz(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.is_empty()
    }

    /// The coefficient vector of `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.get(i, j, k).clone()).collect()
    }
}

/// Serialized as `{"dim": n, "gamma": [[i, j, k, "value"], ...]}` with
/// 1-based indices, matching the general algebra file layout.
impl Serialize for CubicTensor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let gamma: Vec<(usize, usize, usize, &Rational)> = self
            .entries()
            .map(|((i, j, k), v)| (i + 1, j + 1, k + 1, v))
            .collect();
        let mut s = serializer.serialize_struct("CubicTensor", 2)?;
        s.serialize_field("dim", &self.dim)?;
        s.serialize_field("gamma", &gamma)?;
        s.end()
    }
}

impl fmt::Debug for CubicTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubicTensor(dim={}", self.dim)?;
        for ((i, j, k), v) in self.entries() {
            write!(f, ", g[{},{},{}]={}", i + 1, j + 1, k + 1, v)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for CubicTensor {
    /// Lists the nonzero products `e_i e_j = ...`, one per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.product(i, j);
                if v.iter().all(Rational::is_zero) {
                    continue;
                }
                any = true;
                writeln!(f, "e{}e{} = {}", i + 1, j + 1, format_combination(&v, "e"))?;
            }
        }
        if !any {
            writeln!(f, "(all products zero)")?;
        }
        Ok(())
    }
}

/// Renders `sum_k c_k <sym>_k` with 1-based subscripts, e.g. `2x1 - x3`.
pub fn format_combination(coeffs: &[Rational], sym: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            if !num_traits::One::is_one(mag.denom()) {
                out.push('*');
            }
        }
        out.push_str(&format!("{sym}{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Structure constants of the same algebra in the basis
/// `e'_i = sum_a p[i][a] e_a`:
/// `gamma'_{ij,d} = sum_{a,b,c} p[i][a] p[j][b] gamma_{ab,c} pinv[c][d]`.
pub fn apply_basis_change(t: &CubicTensor, p: &Matrix) -> Result<CubicTensor> {
    let n = t.dim();
    check_dim(n, p.rows())?;
    check_dim(n, p.cols())?;
    let pinv = invert(p)?;
    // Product of the new basis vectors, expressed in the old basis, then
    // converted back with pinv.
    let mut out = CubicTensor::zero(n);
    for i in 0..n {
        for j in 0..n {
            let mut old = vec![Rational::zero(); n];
            for ((a, b, c), g) in t.entries() {
                let pa = &p[(i, a)];
                let pb = &p[(j, b)];
                if pa.is_zero() || pb.is_zero() {
                    continue;
                }
                old[c] += pa * pb * g;
            }
            if old.iter().all(Rational::is_zero) {
                continue;
            }
            for d in 0..n {
                let v: Rational = (0..n).map(|c| &old[c] * &pinv[(c, d)]).sum();
                out.set(i, j, d, v);
            }
        }
    }
    Ok(out)
}

/// Sup-norm distance `max_{i,j,k} |gamma^a - gamma^b|`.
pub fn sup_distance(a: &CubicTensor, b: &CubicTensor) -> Result<Rational> {
    check_dim(a.dim(), b.dim())?;
    let keys: std::collections::BTreeSet<_> = a.gamma.keys().chain(b.gamma.keys()).collect();
    Ok(keys
        .into_iter()
        .map(|&(i, j, k)| (a.get(i, j, k) - b.get(i, j, k)).abs())
        .max()
        .unwrap_or_else(Rational::zero))
}

/// True when `b` lies within sup-norm distance `eps` of `a`.
pub fn is_eps_approximation(a: &CubicTensor, b: &CubicTensor, eps: &Rational) -> Result<bool> {
    Ok(sup_distance(a, b)? <= *eps)
}

/// Homogeneous linear form `sum_i coeffs[i] x_i`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LinearForm {
    pub coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn zero(n: usize) -> Self {
        LinearForm {
            coeffs: vec![Rational::zero(); n],
        }
    }

    pub fn new(coeffs: Vec<Rational>) -> Self {
        LinearForm { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        check_dim(self.coeffs.len(), x.len())?;
        Ok(self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(&self.coeffs, "x"))
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Square grid of linear forms in `x_1..x_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct LinearFormMatrix {
    dim: usize,
    entries: Vec<LinearForm>,
}

impl LinearFormMatrix {
    pub fn zero(dim: usize) -> Self {
        LinearFormMatrix {
            dim,
            entries: vec![LinearForm::zero(dim); dim * dim],
        }
    }

    /// Rows of forms; each form must have `rows.len()` coefficients.
    pub fn from_rows(rows: Vec<Vec<LinearForm>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            check_dim(dim, row.len())?;
            for form in row {
                check_dim(dim, form.coeffs.len())?;
                entries.push(form);
            }
        }
        Ok(LinearFormMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, p: usize, k: usize) -> &LinearForm {
        &self.entries[p * self.dim + k]
    }

    pub fn get_mut(&mut self, p: usize, k: usize) -> &mut LinearForm {
        &mut self.entries[p * self.dim + k]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LinearForm::is_zero)
    }

    /// Evaluates every form at `x`.
    pub fn specialize(&self, x: &[Rational]) -> Result<Matrix> {
        check_dim(self.dim, x.len())?;
        let mut m = Matrix::zeros(self.dim, self.dim);
        for p in 0..self.dim {
            for k in 0..self.dim {
                m[(p, k)] = self.get(p, k).eval(x)?;
            }
        }
        Ok(m)
    }
}

impl fmt::Display for LinearFormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.dim {
            let cells: Vec<String> = (0..self.dim).map(|k| self.get(p, k).to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
