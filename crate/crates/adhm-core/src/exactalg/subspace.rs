//! Subspaces of Q(i)^n given by explicit column bases.

use super::matrix::Matrix;
use super::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    /// Columns form a basis (linearly independent by construction).
    pub basis: Matrix,
}

impl Subspace {
    /// Build from spanning columns; reduces to an independent subset.
    pub fn from_spanning(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Subspace { ambient_dim, basis: Matrix::zeros(ambient_dim, 0) };
        }
        let m = Matrix::from_columns(ambient_dim, vectors);
        let (_, pivots) = m.rref();
        let cols: Vec<Vec<Scalar>> = pivots.iter().map(|&c| m.column(c)).collect();
        Subspace { ambient_dim, basis: Matrix::from_columns(ambient_dim, &cols) }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(ambient_dim, 0) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::identity(ambient_dim) }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.iter().all(Scalar::is_zero) {
            return true;
        }
        self.basis.hstack(&Matrix::from_columns(self.ambient_dim, &[v.to_vec()])).rank()
            == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|c| self.contains(&other.basis.column(c)))
    }

    pub fn equals(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|c| self.basis.column(c))
            .chain((0..other.dim()).map(|c| other.basis.column(c)))
            .collect();
        Subspace::from_spanning(self.ambient_dim, &cols)
    }

    /// Intersection, via the kernel of [S | -T].
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        let k = self.basis.hstack(&(-&other.basis));
        let vecs: Vec<Vec<Scalar>> = k
            .kernel_basis()
            .into_iter()
            .map(|w| self.basis.mul_vec(&w[..self.dim()]))
            .collect();
        Subspace::from_spanning(self.ambient_dim, &vecs)
    }

    /// Preimage {v : Bv in self} for B mapping into the ambient space.
    pub fn preimage(&self, b: &Matrix) -> Subspace {
        assert_eq!(b.rows, self.ambient_dim);
        if self.dim() == 0 {
            return Subspace::from_spanning(
                b.cols,
                &b.kernel_basis(),
            );
        }
        let k = b.hstack(&(-&self.basis));
        let vecs: Vec<Vec<Scalar>> = k
            .kernel_basis()
            .into_iter()
            .map(|w| w[..b.cols].to_vec())
            .collect();
        Subspace::from_spanning(b.cols, &vecs)
    }

    /// Image {Bv : v in self} for B defined on the ambient space.
    pub fn image(&self, b: &Matrix) -> Subspace {
        assert_eq!(b.cols, self.ambient_dim);
        let vecs: Vec<Vec<Scalar>> =
            (0..self.dim()).map(|c| b.mul_vec(&self.basis.column(c))).collect();
        Subspace::from_spanning(b.rows, &vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(data: &[i64]) -> Vec<Scalar> {
        data.iter().map(|&n| Scalar::from_int(n)).collect()
    }

    #[test]
    fn spanning_reduction() {
        let s = Subspace::from_spanning(3, &[v(&[1, 0, 0]), v(&[2, 0, 0]), v(&[0, 1, 0])]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[3, 5, 0])));
        assert!(!s.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::from_spanning(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_spanning(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[0, 7, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn preimage_of_zero_is_kernel() {
        let b = Matrix::from_ints(2, 3, &[1, 0, 0, 0, 1, 0]);
        let p = Subspace::zero(2).preimage(&b);
        assert_eq!(p.dim(), 1);
        assert!(p.contains(&v(&[0, 0, 5])));
    }
}
