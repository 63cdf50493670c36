//! Dense matrices over a prime field `F_p` with small `p`.

use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    p: u32,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{}", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

fn inverse_mod(x: u32, p: u32) -> u32 {
    // Fermat; p is prime and small
    let mut result = 1u64;
    let mut base = x as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, p: u32) -> Self {
        assert!(p >= 2, "field characteristic must be prime");
        Matrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], cols: usize, p: u32) -> Self {
        let mut m = Self::zeros(rows.len(), cols, p);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (c, &x) in row.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u32) {
        self.data[r * self.cols + c] = x % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        assert_eq!(self.p, other.p);
        let mut out = Matrix::zeros(self.rows, other.cols, self.p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = (out.data[idx] + x * other.get(k, j)) % self.p;
                }
            }
        }
        out
    }

    /// Rows stacked vertically.
    pub fn vstack(blocks: &[&Matrix], cols: usize, p: u32) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(rows, cols, p);
        let mut r0 = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            out.data[r0 * cols..(r0 + b.rows) * cols].copy_from_slice(&b.data);
            r0 += b.rows;
        }
        out
    }

    /// Reduced row echelon form, with the transform `T` such that
    /// `T * self = rref`, and the pivot columns.
    pub fn rref_with_transform(&self) -> (Matrix, Matrix, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut t = Matrix::identity(self.rows, p);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, piv);
            t.swap_rows(r, piv);
            let inv = inverse_mod(m.get(r, c), p);
            m.scale_row(r, inv);
            t.scale_row(r, inv);
            for i in 0..self.rows {
                if i != r {
                    let f = m.get(i, c);
                    if f != 0 {
                        m.add_row_multiple(i, r, p - f);
                        t.add_row_multiple(i, r, p - f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, t, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_with_transform().2.len()
    }

    /// Basis (as rows) of `{ x : x * self = 0 }`.
    pub fn left_nullspace(&self) -> Matrix {
        let (_, t, pivots) = self.rref_with_transform();
        let rank = pivots.len();
        let mut out = Matrix::zeros(self.rows - rank, self.rows, self.p);
        for i in rank..self.rows {
            out.data[(i - rank) * self.rows..(i - rank + 1) * self.rows].copy_from_slice(t.row(i));
        }
        out
    }

    /// Solves `x * self = y` for `x`, one row of `y` at a time; `None` if
    /// some row of `y` is outside the row space.
    pub fn left_solve(&self, y: &Matrix) -> Option<Matrix> {
        assert_eq!(y.cols, self.cols);
        let (rref, t, pivots) = self.rref_with_transform();
        let mut x = Matrix::zeros(y.rows, self.rows, self.p);
        for r in 0..y.rows {
            // coefficients on the rref rows are read off the pivot columns
            let coeffs: Vec<u32> = pivots.iter().map(|&c| y.get(r, c)).collect();
            let mut check = vec![0u32; self.cols];
            for (i, &k) in coeffs.iter().enumerate() {
                for c in 0..self.cols {
                    check[c] = (check[c] + k * rref.get(i, c)) % self.p;
                }
            }
            if check != y.row(r) {
                return None;
            }
            for (i, &k) in coeffs.iter().enumerate() {
                for c in 0..self.rows {
                    let idx = r * x.cols + c;
                    x.data[idx] = (x.data[idx] + k * t.get(i, c)) % self.p;
                }
            }
        }
        Some(x)
    }

    /// Indices of standard basis vectors completing the row space to the
    /// whole space.
    pub fn complement_of_row_space(&self) -> Vec<usize> {
        let (_, _, pivots) = self.rref_with_transform();
        (0..self.cols).filter(|c| !pivots.contains(c)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, k: u32) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.data[idx] = self.data[idx] * k % self.p;
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: u32) {
        for c in 0..self.cols {
            let v = self.get(src, c);
            let idx = dst * self.cols + c;
            self.data[idx] = (self.data[idx] + k * v) % self.p;
        }
    }
}
