//! Exact arithmetic in GF(2), GF(3), GF(4) and evaluation of the forms
//! that define the classical polar spaces.
//!
//! Field elements are the integers `0..q`. In GF(4) the encoding is the
//! binary polynomial representation over GF(2) modulo `x^2 + x + 1`:
//! `0, 1, ω = 2, ω² = 3`, so addition is XOR.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Field element, an integer in `0..q`.
pub type Elem = u8;

/// `ω` in GF(4).
pub const OMEGA: Elem = 2;
/// `ω²` in GF(4).
pub const OMEGA2: Elem = 3;

const MAX_Q: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("unsupported field order {0}; supported orders are 2, 3 and 4")]
    UnsupportedOrder(u32),
    #[error("vector length {got} does not match form dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point classification {0} is not defined for this form")]
    UnsupportedClassification(&'static str),
    #[error("invalid form parameter: {0}")]
    InvalidParameter(String),
}

/// Addition, multiplication, inversion and conjugation tables of GF(q).
#[derive(Clone, PartialEq, Eq)]
pub struct FieldTable {
    order: u8,
    characteristic: u8,
    add: [[Elem; MAX_Q]; MAX_Q],
    mul: [[Elem; MAX_Q]; MAX_Q],
    neg: [Elem; MAX_Q],
    inv: [Elem; MAX_Q],
    conj: [Elem; MAX_Q],
}

impl std::fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.order)
    }
}

/// Builds the arithmetic tables of GF(q).
pub fn make_field(q: u32) -> Result<FieldTable, FieldError> {
    let (order, characteristic) = match q {
        2 => (2u8, 2u8),
        3 => (3, 3),
        4 => (4, 2),
        _ => return Err(FieldError::UnsupportedOrder(q)),
    };
    let n = order as usize;
    let mut add = [[0; MAX_Q]; MAX_Q];
    let mut mul = [[0; MAX_Q]; MAX_Q];
    for a in 0..n {
        for b in 0..n {
            let (s, p) = if order == 4 {
                (a ^ b, gf4_mul(a as u8, b as u8) as usize)
            } else {
                ((a + b) % n, (a * b) % n)
            };
            add[a][b] = s as Elem;
            mul[a][b] = p as Elem;
        }
    }
    let mut neg = [0; MAX_Q];
    let mut inv = [0; MAX_Q];
    for a in 0..n {
        neg[a] = (0..n).find(|&b| add[a][b] == 0).unwrap() as Elem;
        if a != 0 {
            inv[a] = (1..n).find(|&b| mul[a][b] == 1).unwrap() as Elem;
        }
    }
    let mut conj = [0; MAX_Q];
    for (a, c) in conj.iter_mut().enumerate().take(n) {
        // x -> x^sqrt(q) for square q, identity otherwise
        *c = if order == 4 { mul[a][a] } else { a as Elem };
    }
    Ok(FieldTable {
        order,
        characteristic,
        add,
        mul,
        neg,
        inv,
        conj,
    })
}

fn gf4_mul(a: u8, b: u8) -> u8 {
    // carry-less product reduced modulo x^2 + x + 1
    let mut r = 0u8;
    for i in 0..2 {
        if b >> i & 1 == 1 {
            r ^= a << i;
        }
    }
    if r & 4 != 0 {
        r ^= 0b111;
    }
    r
}

impl FieldTable {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic as usize
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize][b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize][b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    /// `x^sqrt(q)` when `q` is a square, identity otherwise.
    #[inline]
    pub fn conj(&self, a: Elem) -> Elem {
        self.conj[a as usize]
    }

    /// Whether the conjugation map is nontrivial.
    pub fn has_conjugation(&self) -> bool {
        self.order == 4
    }

    /// Maps a signed integer into the prime field.
    pub fn from_int(&self, x: i64) -> Elem {
        let p = self.characteristic as i64;
        x.rem_euclid(p) as Elem
    }
}

/// The kind of a form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormKind {
    SymmetricBilinear,
    Alternating,
    Hermitian,
    /// A quadratic form; `gram` holds its polarization.
    Quadratic,
}

/// A nondegenerate reflexive form, optionally carrying a quadratic form
/// whose polarization it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    kind: FormKind,
    dim: usize,
    gram: Vec<Elem>,
    /// Upper-triangular coefficients `c[i][j]` (i <= j) of `Q(x) = Σ c_ij x_i x_j`.
    quadratic: Option<Vec<Elem>>,
    field: FieldTable,
}

/// Class of a projective point under a form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointClass {
    Isotropic,
    Plus,
    Minus,
    Nonisotropic,
}

impl Form {
    /// Builds a form from an explicit Gram matrix (row-major, `dim*dim`).
    pub fn from_gram(
        field: FieldTable,
        kind: FormKind,
        dim: usize,
        gram: Vec<Elem>,
    ) -> Result<Form, FieldError> {
        if gram.len() != dim * dim {
            return Err(FieldError::DimensionMismatch {
                expected: dim * dim,
                got: gram.len(),
            });
        }
        if kind == FormKind::Quadratic {
            return Err(FieldError::InvalidParameter(
                "quadratic forms are built with Form::from_quadratic".into(),
            ));
        }
        let form = Form {
            kind,
            dim,
            gram,
            quadratic: None,
            field,
        };
        form.check_symmetry()?;
        if form.determinant() == 0 {
            return Err(FieldError::InvalidParameter("degenerate Gram matrix".into()));
        }
        Ok(form)
    }

    /// Builds a quadratic form from upper-triangular coefficients, given as
    /// `(i, j, c)` triples with `i <= j`.
    pub fn from_quadratic(
        field: FieldTable,
        dim: usize,
        terms: &[(usize, usize, Elem)],
    ) -> Result<Form, FieldError> {
        let mut coeffs = vec![0; dim * dim];
        for &(i, j, c) in terms {
            if i > j || j >= dim {
                return Err(FieldError::InvalidParameter(format!(
                    "bad quadratic term ({i},{j})"
                )));
            }
            coeffs[i * dim + j] = field.add(coeffs[i * dim + j], c);
        }
        // polarization B(x,y) = Q(x+y) - Q(x) - Q(y)
        let mut gram = vec![0; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let c = coeffs[i * dim + j];
                if i == j {
                    let d = field.add(c, c);
                    gram[i * dim + i] = field.add(gram[i * dim + i], d);
                } else {
                    gram[i * dim + j] = field.add(gram[i * dim + j], c);
                    gram[j * dim + i] = field.add(gram[j * dim + i], c);
                }
            }
        }
        let form = Form {
            kind: FormKind::Quadratic,
            dim,
            gram,
            quadratic: Some(coeffs),
            field,
        };
        if form.singular_radical_dim() != 0 {
            return Err(FieldError::InvalidParameter("degenerate quadratic form".into()));
        }
        Ok(form)
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn gram(&self) -> &[Elem] {
        &self.gram
    }

    pub fn quadratic_coefficients(&self) -> Option<&[Elem]> {
        self.quadratic.as_deref()
    }

    #[inline]
    fn sigma(&self, x: Elem) -> Elem {
        if self.kind == FormKind::Hermitian {
            self.field.conj(x)
        } else {
            x
        }
    }

    fn check_symmetry(&self) -> Result<(), FieldError> {
        let f = &self.field;
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let a = self.gram[i * n + j];
                let b = self.gram[j * n + i];
                let ok = match self.kind {
                    FormKind::SymmetricBilinear | FormKind::Quadratic => a == b,
                    FormKind::Alternating => a == f.neg(b) && (i != j || a == 0),
                    FormKind::Hermitian => a == f.conj(b),
                };
                if !ok {
                    return Err(FieldError::InvalidParameter(format!(
                        "Gram matrix fails {:?} symmetry at ({i},{j})",
                        self.kind
                    )));
                }
            }
        }
        Ok(())
    }

    /// Determinant of the Gram matrix by Gaussian elimination.
    pub fn determinant(&self) -> Elem {
        determinant(&self.field, self.dim, &self.gram)
    }

    /// Dimension of the radical of `Q` restricted to the radical of the polar form.
    fn singular_radical_dim(&self) -> usize {
        let f = &self.field;
        let n = self.dim;
        let rad = kernel_basis(f, n, &self.gram);
        if rad.is_empty() {
            return 0;
        }
        // in characteristic 2 and odd dimension the polar form has a 1-dim
        // radical; Q is nondegenerate iff Q does not vanish on it
        let mut count = 0;
        for v in rad.iter() {
            if self.quadratic_value(v) == 0 {
                count += 1;
            }
        }
        count.max(rad.len().saturating_sub(1))
    }

    /// `Σ u_i G_ij σ(v_j)`, checked.
    pub fn eval(&self, u: &[Elem], v: &[Elem]) -> Result<Elem, FieldError> {
        for x in [u, v] {
            if x.len() != self.dim {
                return Err(FieldError::DimensionMismatch {
                    expected: self.dim,
                    got: x.len(),
                });
            }
        }
        Ok(self.eval_unchecked(u, v))
    }

    #[inline]
    pub fn eval_unchecked(&self, u: &[Elem], v: &[Elem]) -> Elem {
        let f = &self.field;
        let n = self.dim;
        let mut acc = 0;
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            let row = &self.gram[i * n..(i + 1) * n];
            for (j, &vj) in v.iter().enumerate() {
                let g = row[j];
                if g != 0 && vj != 0 {
                    acc = f.add(acc, f.mul(f.mul(ui, g), self.sigma(vj)));
                }
            }
        }
        acc
    }

    /// Coefficients `c` with `f(u, v) = Σ_j c_j σ(v_j)` for fixed `u`.
    pub fn functional(&self, u: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let n = self.dim;
        let mut c = vec![0; n];
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, cj) in c.iter_mut().enumerate() {
                *cj = f.add(*cj, f.mul(ui, self.gram[i * n + j]));
            }
        }
        c
    }

    /// Applies a functional from [`Form::functional`].
    #[inline]
    pub fn apply_functional(&self, c: &[Elem], v: &[Elem]) -> Elem {
        let f = &self.field;
        let mut acc = 0;
        for (&cj, &vj) in c.iter().zip(v) {
            if cj != 0 && vj != 0 {
                acc = f.add(acc, f.mul(cj, self.sigma(vj)));
            }
        }
        acc
    }

    /// Value of the quadratic form (only for [`FormKind::Quadratic`]).
    pub fn quadratic_value(&self, v: &[Elem]) -> Elem {
        let f = &self.field;
        let n = self.dim;
        let q = self
            .quadratic
            .as_ref()
            .expect("quadratic_value on a form without quadratic part");
        let mut acc = 0;
        for i in 0..n {
            if v[i] == 0 {
                continue;
            }
            for j in i..n {
                let c = q[i * n + j];
                if c != 0 && v[j] != 0 {
                    acc = f.add(acc, f.mul(c, f.mul(v[i], v[j])));
                }
            }
        }
        acc
    }

    /// Whether `v` spans a point of the associated polar space: `Q(v) = 0` for
    /// quadrics, `f(v,v) = 0` otherwise.
    pub fn is_singular(&self, v: &[Elem]) -> bool {
        match self.kind {
            FormKind::Quadratic => self.quadratic_value(v) == 0,
            FormKind::Alternating => true,
            _ => self.eval_unchecked(v, v) == 0,
        }
    }
}

/// Classifies a projective point by the value of the form on a representative.
pub fn point_class(form: &Form, p: &[Elem]) -> Result<PointClass, FieldError> {
    if p.len() != form.dim {
        return Err(FieldError::DimensionMismatch {
            expected: form.dim,
            got: p.len(),
        });
    }
    let value = match form.kind {
        FormKind::Quadratic => form.quadratic_value(p),
        _ => form.eval_unchecked(p, p),
    };
    if value == 0 {
        return Ok(PointClass::Isotropic);
    }
    let three_way = form.field.order() == 3
        && matches!(form.kind, FormKind::SymmetricBilinear | FormKind::Quadratic);
    if three_way {
        return Ok(if value == 1 {
            PointClass::Plus
        } else {
            PointClass::Minus
        });
    }
    if form.kind == FormKind::Alternating {
        return Err(FieldError::UnsupportedClassification(
            "nonisotropic (alternating forms are totally isotropic)",
        ));
    }
    Ok(PointClass::Nonisotropic)
}

/// Returns a fixed model of the requested form.
///
/// * `SymmetricBilinear` over GF(3): `diag(1,…,1,d)` with `d = 1` for
///   `parameter = +1` and `d = 2 = -1` for `parameter = -1`.
/// * `Alternating`, even `n`: hyperbolic pairs `x_{2i} y_{2i+1} - x_{2i+1} y_{2i}`.
/// * `Hermitian` over GF(4): identity Gram.
/// * `Quadratic` over GF(2)/GF(4), even `n`: hyperbolic pairs, with an
///   anisotropic last pair `x² + xy + c y²` when `parameter = -1`; odd `n`:
///   parabolic `x_0² + hyperbolic pairs` (`parameter` ignored).
pub fn standard_gram(
    kind: FormKind,
    q: u32,
    n: usize,
    parameter: i8,
) -> Result<Form, FieldError> {
    let field = make_field(q)?;
    let bad = |msg: String| Err(FieldError::InvalidParameter(msg));
    match kind {
        FormKind::SymmetricBilinear => {
            if q != 3 {
                return bad(format!("symmetric bilinear model only over GF(3), got q={q}"));
            }
            let last = match parameter {
                1 => 1,
                -1 => 2,
                _ => return bad(format!("discriminant must be ±1, got {parameter}")),
            };
            let mut gram = vec![0; n * n];
            for i in 0..n {
                gram[i * n + i] = 1;
            }
            gram[n * n - 1] = last;
            Form::from_gram(field, kind, n, gram)
        }
        FormKind::Alternating => {
            if n % 2 != 0 || n == 0 {
                return bad(format!("alternating forms need even dimension, got {n}"));
            }
            let mut gram = vec![0; n * n];
            for i in (0..n).step_by(2) {
                gram[i * n + i + 1] = 1;
                gram[(i + 1) * n + i] = field.neg(1);
            }
            Form::from_gram(field, kind, n, gram)
        }
        FormKind::Hermitian => {
            if q != 4 {
                return bad(format!("hermitian forms only over GF(4), got q={q}"));
            }
            let mut gram = vec![0; n * n];
            for i in 0..n {
                gram[i * n + i] = 1;
            }
            Form::from_gram(field, kind, n, gram)
        }
        FormKind::Quadratic => {
            let mut terms = Vec::new();
            let mut start = 0;
            if n % 2 == 1 {
                terms.push((0, 0, 1));
                start = 1;
            }
            let mut i = start;
            while i + 1 < n {
                terms.push((i, i + 1, 1));
                i += 2;
            }
            if n % 2 == 0 {
                match parameter {
                    1 => {}
                    -1 => {
                        if q == 3 {
                            return bad("elliptic quadrics over GF(3) use SymmetricBilinear".into());
                        }
                        // x² + xy + c y² irreducible: c = 1 over GF(2), ω over GF(4)
                        let c = if q == 4 { OMEGA } else { 1 };
                        terms.push((n - 2, n - 2, 1));
                        terms.push((n - 1, n - 1, c));
                    }
                    _ => return bad(format!("quadric type must be ±1, got {parameter}")),
                }
            }
            Form::from_quadratic(field, n, &terms)
        }
    }
}

/// The alternating form `x1y4 - x2y3 + x3y2 - x4y1` on GF(s)^4 defining W(s).
pub fn w_form(s: u32) -> Result<Form, FieldError> {
    let field = make_field(s)?;
    let one = 1;
    let m1 = field.neg(1);
    let mut gram = vec![0; 16];
    gram[3] = one; // x1 y4
    gram[4 + 2] = m1; // -x2 y3
    gram[2 * 4 + 1] = one; // x3 y2
    gram[3 * 4] = m1; // -x4 y1
    Form::from_gram(field, FormKind::Alternating, 4, gram)
}

fn determinant(f: &FieldTable, n: usize, m: &[Elem]) -> Elem {
    let mut a = m.to_vec();
    let mut det = 1;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return 0;
        };
        if piv != col {
            for k in 0..n {
                a.swap(piv * n + k, col * n + k);
            }
            det = f.neg(det);
        }
        let p = a[col * n + col];
        det = f.mul(det, p);
        let pinv = f.inv(p);
        for r in col + 1..n {
            let factor = f.mul(a[r * n + col], pinv);
            if factor == 0 {
                continue;
            }
            for k in col..n {
                let t = f.mul(factor, a[col * n + k]);
                a[r * n + k] = f.sub(a[r * n + k], t);
            }
        }
    }
    det
}

/// Basis of `{x : M x = 0}` (right kernel).
fn kernel_basis(f: &FieldTable, n: usize, m: &[Elem]) -> Vec<Vec<Elem>> {
    let mut a = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(piv) = (row..n).find(|&r| a[r * n + col] != 0) else {
            continue;
        };
        for k in 0..n {
            a.swap(piv * n + k, row * n + k);
        }
        let pinv = f.inv(a[row * n + col]);
        for k in 0..n {
            a[row * n + k] = f.mul(a[row * n + k], pinv);
        }
        for r in 0..n {
            if r != row && a[r * n + col] != 0 {
                let factor = a[r * n + col];
                for k in 0..n {
                    let t = f.mul(factor, a[row * n + k]);
                    a[r * n + k] = f.sub(a[r * n + k], t);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; n];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(a[r * n + fc]);
            }
            v
        })
        .collect()
}

/// Normalizes a nonzero vector so that its first nonzero coordinate is 1.
/// Returns `None` for the zero vector.
pub fn normalize(f: &FieldTable, v: &[Elem]) -> Option<Vec<Elem>> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = f.inv(lead);
    Some(v.iter().map(|&x| f.mul(x, inv)).collect())
}

/// All normalized representatives of the points of PG(n-1, q), in
/// lexicographic order.
pub fn projective_points(f: &FieldTable, n: usize) -> Vec<Vec<Elem>> {
    let q = f.order();
    let total = q.pow(n as u32);
    let mut out = Vec::with_capacity((total - 1) / (q - 1));
    for code in 1..total {
        let v = decode(q, n, code);
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

/// Base-`q` encoding with the first coordinate most significant, so that
/// numeric order equals lexicographic order.
#[inline]
pub fn encode(q: usize, v: &[Elem]) -> usize {
    v.iter().fold(0, |acc, &x| acc * q + x as usize)
}

pub fn decode(q: usize, n: usize, mut code: usize) -> Vec<Elem> {
    let mut v = vec![0; n];
    for i in (0..n).rev() {
        v[i] = (code % q) as Elem;
        code /= q;
    }
    v
}

/// Product of the coordinates of a vector.
pub fn coordinate_product(f: &FieldTable, v: &[Elem]) -> Elem {
    v.iter().fold(1, |acc, &x| f.mul(acc, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_field_examples() {
        let f3 = make_field(3).unwrap();
        assert_eq!(f3.add(2, 2), 1);
        let f4 = make_field(4).unwrap();
        assert_eq!(f4.mul(OMEGA, OMEGA2), 1);
        assert_eq!(f4.conj(OMEGA), OMEGA2);
        assert_eq!(f4.add(OMEGA, OMEGA2), 1);
        assert!(matches!(make_field(5), Err(FieldError::UnsupportedOrder(5))));
        assert!(matches!(make_field(9), Err(FieldError::UnsupportedOrder(9))));
    }

    #[test]
    fn field_axioms_hold_exhaustively() {
        for q in [2, 3, 4] {
            let f = make_field(q).unwrap();
            let els: Vec<Elem> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                assert_eq!(f.conj(f.conj(a)), a);
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.conj(f.add(a, b)), f.add(f.conj(a), f.conj(b)));
                    assert_eq!(f.conj(f.mul(a, b)), f.mul(f.conj(a), f.conj(b)));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            let fixed: Vec<Elem> = els.iter().copied().filter(|&a| f.conj(a) == a).collect();
            if q == 4 {
                assert_eq!(fixed, vec![0, 1]);
            } else {
                assert_eq!(fixed.len(), q as usize);
            }
        }
    }

    #[test]
    fn eval_form_examples() {
        let w = w_form(3).unwrap();
        let e = |i: usize| {
            let mut v = vec![0; 4];
            v[i] = 1;
            v
        };
        assert_eq!(w.eval(&e(0), &e(3)).unwrap(), 1);
        assert_eq!(w.eval(&e(3), &e(0)).unwrap(), 2);
        let h = standard_gram(FormKind::Hermitian, 4, 6, 0).unwrap();
        let e1 = [1, 0, 0, 0, 0, 0];
        assert_eq!(h.eval(&e1, &e1).unwrap(), 1);
        assert_eq!(h.eval(&[0; 6], &e1).unwrap(), 0);
        assert!(matches!(
            h.eval(&[1, 0], &e1),
            Err(FieldError::DimensionMismatch { expected: 6, got: 2 })
        ));
    }

    #[test]
    fn point_class_examples() {
        let g = standard_gram(FormKind::SymmetricBilinear, 3, 6, 1).unwrap();
        assert_eq!(point_class(&g, &[1, 0, 0, 0, 0, 0]).unwrap(), PointClass::Plus);
        assert_eq!(point_class(&g, &[1, 1, 1, 0, 0, 0]).unwrap(), PointClass::Isotropic);
        assert_eq!(point_class(&g, &[1, 1, 0, 0, 0, 0]).unwrap(), PointClass::Minus);
        let h4 = standard_gram(FormKind::Hermitian, 4, 4, 0).unwrap();
        let pts = projective_points(h4.field(), 4);
        assert_eq!(pts.len(), 85);
        let iso = pts
            .iter()
            .filter(|p| point_class(&h4, p).unwrap() == PointClass::Isotropic)
            .count();
        assert_eq!(iso, 45);
        let alt = w_form(3).unwrap();
        assert!(point_class(&alt, &[1, 0, 0, 0]).is_ok());
    }

    #[test]
    fn standard_gram_examples() {
        let plus = standard_gram(FormKind::SymmetricBilinear, 3, 6, 1).unwrap();
        assert_eq!(plus.determinant(), 1);
        let minus = standard_gram(FormKind::SymmetricBilinear, 3, 6, -1).unwrap();
        assert_eq!(minus.determinant(), 2);
        assert_eq!(minus.gram()[35], 2);
        let h = standard_gram(FormKind::Hermitian, 4, 6, 0).unwrap();
        let iso = projective_points(h.field(), 6)
            .iter()
            .filter(|p| h.is_singular(p))
            .count();
        assert_eq!(iso, 693);
        assert!(standard_gram(FormKind::SymmetricBilinear, 3, 6, 0).is_err());
        assert!(standard_gram(FormKind::Alternating, 4, 5, 0).is_err());
        assert!(standard_gram(FormKind::Hermitian, 3, 4, 0).is_err());
    }

    #[test]
    fn quadric_point_counts() {
        let count = |q: u32, n: usize, t: i8| {
            let form = standard_gram(FormKind::Quadratic, q, n, t).unwrap();
            projective_points(form.field(), n)
                .iter()
                .filter(|p| form.is_singular(p))
                .count()
        };
        // (q^2+1)(q^2+q+1) for Q+(5,4), (q^4+1)(q^3-1)/(q-1) for Q-(7,4)
        assert_eq!(count(4, 6, 1), 357);
        assert_eq!(count(4, 6, -1), 325);
        assert_eq!(count(2, 6, 1), 35);
        assert_eq!(count(4, 5, 0), 85);
    }

    #[test]
    fn plus_point_count_gf3() {
        let g = standard_gram(FormKind::SymmetricBilinear, 3, 6, 1).unwrap();
        let plus = projective_points(g.field(), 6)
            .iter()
            .filter(|p| point_class(&g, p).unwrap() == PointClass::Plus)
            .count();
        assert_eq!(plus, 126);
    }

    #[test]
    fn form_symmetry_on_basis_pairs() {
        let forms = vec![
            standard_gram(FormKind::SymmetricBilinear, 3, 7, -1).unwrap(),
            standard_gram(FormKind::Alternating, 4, 6, 0).unwrap(),
            standard_gram(FormKind::Alternating, 2, 6, 0).unwrap(),
            standard_gram(FormKind::Hermitian, 4, 7, 0).unwrap(),
            standard_gram(FormKind::Quadratic, 4, 6, -1).unwrap(),
            w_form(3).unwrap(),
        ];
        for form in &forms {
            let n = form.dim();
            let f = form.field();
            for i in 0..n {
                for j in 0..n {
                    let mut u = vec![0; n];
                    let mut v = vec![0; n];
                    u[i] = 1;
                    v[j] = 1;
                    let a = form.eval(&u, &v).unwrap();
                    let b = form.eval(&v, &u).unwrap();
                    let expected = match form.kind() {
                        FormKind::Alternating => f.neg(b),
                        FormKind::Hermitian => f.conj(b),
                        _ => b,
                    };
                    assert_eq!(a, expected, "{:?} at ({i},{j})", form.kind());
                }
            }
        }
    }

    #[test]
    fn point_class_is_scale_invariant() {
        let forms = vec![
            standard_gram(FormKind::SymmetricBilinear, 3, 5, 1).unwrap(),
            standard_gram(FormKind::Hermitian, 4, 4, 0).unwrap(),
            standard_gram(FormKind::Quadratic, 4, 6, 1).unwrap(),
        ];
        for form in &forms {
            let f = form.field();
            for p in projective_points(f, form.dim()) {
                let c = point_class(form, &p).unwrap();
                for s in 1..f.order() as Elem {
                    let scaled: Vec<Elem> = p.iter().map(|&x| f.mul(s, x)).collect();
                    assert_eq!(point_class(form, &scaled).unwrap(), c);
                }
            }
        }
    }
}
