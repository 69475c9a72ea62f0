use crate::error::Error;

/// Dense square `f64` matrix, row-major. Only what the interior point method needs.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMatrix {
    n: usize,
    data: Vec<f64>,
}

impl FloatMatrix {
    pub fn new(n: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), n * n, "float matrix data has wrong length");
        FloatMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        Self::new(n, rows.iter().flat_map(|r| r.iter().copied()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Self::new(n, data)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    /// `Ax` with compensated dot products.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.data.chunks(self.n).map(|r| dot2(r, x)).collect()
    }

    /// `Aᵀx` with compensated dot products.
    pub fn transpose_mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n;
        (0..n)
            .map(|j| dot2(&self.data[j..].iter().step_by(n).copied().collect::<Vec<_>>(), x))
            .collect()
    }

    pub fn add_diagonal(&mut self, d: &[f64]) {
        for (i, v) in d.iter().enumerate() {
            self.data[i * self.n + i] += v;
        }
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dot product evaluated as if in twice the working precision, then rounded
/// (the Dot2 algorithm: error-free products and sums with a running
/// compensation term).
pub fn dot2(a: &[f64], b: &[f64]) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for (x, y) in a.iter().zip(b) {
        let p = x * y;
        let p_err = x.mul_add(*y, -p);
        let t = sum + p;
        let z = t - sum;
        let s_err = (sum - (t - z)) + (p - z);
        sum = t;
        comp += p_err + s_err;
    }
    sum + comp
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Solves `Hx = r` for symmetric positive definite `H` by Cholesky
/// factorization `H = LLᵀ`. A non-positive pivot aborts with the 1-based
/// pivot index.
pub fn spd_solve(h: &FloatMatrix, r: &[f64]) -> Result<Vec<f64>, Error> {
    let n = h.dim();
    assert_eq!(r.len(), n, "right-hand side length differs from matrix dimension");
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let mut d = h.get(j, j);
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::NumericalBreakdown { pivot: j + 1 });
        }
        let d = d.sqrt();
        l[j * n + j] = d;
        for i in j + 1..n {
            let mut s = h.get(i, j);
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / d;
        }
    }
    let mut y = vec![0.0; n];
    for i in 0..n {
        let s: f64 = (0..i).map(|k| l[i * n + k] * y[k]).sum();
        y[i] = (r[i] - s) / l[i * n + i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| l[k * n + i] * x[k]).sum();
        x[i] = (y[i] - s) / l[i * n + i];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_dot_survives_cancellation() {
        let a = [1e16, 1.0, -1e16, 1e-3];
        let b = [1.0, 1.0, 1.0, 1.0];
        assert_eq!(dot(&a, &b), 1e-3);
        assert_eq!(dot2(&a, &b), 1.001);
    }

    #[test]
    fn identity_and_diagonal() {
        assert_eq!(
            spd_solve(&FloatMatrix::identity(2), &[1.0, 2.0]).unwrap(),
            vec![1.0, 2.0]
        );
        let h = FloatMatrix::from_rows(&[vec![4.0, 0.0], vec![0.0, 9.0]]);
        assert_eq!(spd_solve(&h, &[8.0, 18.0]).unwrap(), vec![2.0, 2.0]);
    }

    #[test]
    fn indefinite_reports_pivot() {
        let h = FloatMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]);
        match spd_solve(&h, &[1.0, 1.0]) {
            Err(Error::NumericalBreakdown { pivot }) => assert_eq!(pivot, 2),
            other => panic!("expected breakdown, got {other:?}"),
        }
        let h = FloatMatrix::from_rows(&[vec![-1.0]]);
        assert!(matches!(
            spd_solve(&h, &[1.0]),
            Err(Error::NumericalBreakdown { pivot: 1 })
        ));
    }
}
