//! Implicitly represented N-dimensional complex vectors.
//!
//! The dimension is a parameter, not an allocation: uniform and indicator
//! vectors carry closed-form arithmetic in N, so overlaps cost O(nnz) no
//! matter how large the space is. Dense coefficient storage is reserved for
//! oracle-scale checks.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{AqcError, Result};

/// Largest dimension for which closed-form arithmetic in N stays exact
/// (integers up to 2^53 are exactly representable in f64).
pub const MAX_DIM: u64 = 1 << 53;

/// Largest dimension admitted for dense coefficient storage.
pub const MAX_DENSE_DIM: u64 = 1 << 16;

#[derive(Debug, Clone)]
pub struct StructuredVector {
    dim: u64,
    repr: Repr,
}

#[derive(Debug, Clone)]
enum Repr {
    /// Every coordinate equals the amplitude.
    Uniform(Complex64),
    /// Sparse support: strictly increasing indices with per-index amplitudes.
    Indicator(Vec<(u64, Complex64)>),
    /// Explicit coefficients (oracle scale only).
    Dense(Vec<Complex64>),
    /// Flat weighted sum of shared atoms; atoms are never combinations.
    Combination(Vec<(Complex64, Arc<StructuredVector>)>),
}

impl StructuredVector {
    fn check_dim(dim: u64) -> Result<()> {
        if dim == 0 {
            return Err(AqcError::InvalidVector("dimension must be positive".into()));
        }
        if dim > MAX_DIM {
            return Err(AqcError::DimensionTooLarge { dim, what: "closed-form", cap: MAX_DIM });
        }
        Ok(())
    }

    /// Vector with all coordinates equal to `amplitude`.
    pub fn uniform(dim: u64, amplitude: Complex64) -> Result<Self> {
        Self::check_dim(dim)?;
        Ok(Self { dim, repr: Repr::Uniform(amplitude) })
    }

    /// The normalized uniform superposition, amplitude 1/sqrt(N).
    pub fn uniform_normalized(dim: u64) -> Result<Self> {
        Self::uniform(dim, Complex64::new(1.0 / (dim as f64).sqrt(), 0.0))
    }

    /// Sparse vector from (index, amplitude) pairs; indices must be strictly
    /// increasing and below the dimension.
    pub fn indicator(dim: u64, pairs: Vec<(u64, Complex64)>) -> Result<Self> {
        Self::check_dim(dim)?;
        for w in pairs.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(AqcError::InvalidVector(
                    "indicator indices must be strictly increasing".into(),
                ));
            }
        }
        if let Some(&(last, _)) = pairs.last() {
            if last >= dim {
                return Err(AqcError::InvalidVector(format!(
                    "indicator index {last} out of range for dimension {dim}"
                )));
            }
        }
        Ok(Self { dim, repr: Repr::Indicator(pairs) })
    }

    /// Standard basis vector e_index.
    pub fn basis_state(dim: u64, index: u64) -> Result<Self> {
        Self::indicator(dim, vec![(index, Complex64::new(1.0, 0.0))])
    }

    /// Indicator with the same amplitude on every listed index.
    pub fn indicator_uniform(dim: u64, indices: &[u64], amplitude: Complex64) -> Result<Self> {
        Self::indicator(dim, indices.iter().map(|&i| (i, amplitude)).collect())
    }

    /// The zero vector.
    pub fn zero(dim: u64) -> Result<Self> {
        Self::indicator(dim, Vec::new())
    }

    /// Dense coefficient vector (oracle scale).
    pub fn dense(coeffs: Vec<Complex64>) -> Result<Self> {
        let dim = coeffs.len() as u64;
        Self::check_dim(dim)?;
        if dim > MAX_DENSE_DIM {
            return Err(AqcError::DimensionTooLarge { dim, what: "dense", cap: MAX_DENSE_DIM });
        }
        Ok(Self { dim, repr: Repr::Dense(coeffs) })
    }

    /// Weighted sum of shared vectors. Nested combinations are flattened and
    /// duplicate atoms are merged by identity (shared pointer), so repeated
    /// arithmetic over a fixed atom set does not grow the representation.
    pub fn combination(dim: u64, terms: Vec<(Complex64, Arc<StructuredVector>)>) -> Result<Self> {
        Self::check_dim(dim)?;
        let mut atoms: Vec<(Complex64, Arc<StructuredVector>)> = Vec::new();
        let mut push = |w: Complex64, atom: &Arc<StructuredVector>| {
            for (aw, a) in atoms.iter_mut() {
                if Arc::ptr_eq(a, atom) {
                    *aw += w;
                    return;
                }
            }
            atoms.push((w, atom.clone()));
        };
        for (w, v) in &terms {
            if v.dim != dim {
                return Err(AqcError::DimensionMismatch { left: dim, right: v.dim });
            }
            match &v.repr {
                Repr::Combination(inner) => {
                    for (iw, atom) in inner {
                        push(w * iw, atom);
                    }
                }
                _ => push(*w, v),
            }
        }
        atoms.retain(|(w, _)| w.norm_sqr() != 0.0);
        Ok(Self { dim, repr: Repr::Combination(atoms) })
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// Number of terms when this vector is a combination; 1 otherwise.
    pub fn term_count(&self) -> usize {
        match &self.repr {
            Repr::Combination(terms) => terms.len(),
            _ => 1,
        }
    }

    pub fn is_combination(&self) -> bool {
        matches!(self.repr, Repr::Combination(_))
    }

    /// Inner product with conjugation on `self`: <self|other>.
    ///
    /// Exact closed form for structured pairs; no loop over N ever occurs for
    /// uniform/indicator representations.
    pub fn inner(&self, other: &StructuredVector) -> Result<Complex64> {
        if self.dim != other.dim {
            return Err(AqcError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(inner_repr(&self.repr, &other.repr, self.dim))
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        let sq = inner_repr(&self.repr, &self.repr, self.dim).re;
        sq.max(0.0).sqrt()
    }

    /// Same vector scaled by `w`.
    pub fn scaled(&self, w: Complex64) -> StructuredVector {
        let repr = match &self.repr {
            Repr::Uniform(a) => Repr::Uniform(w * a),
            Repr::Indicator(pairs) => {
                Repr::Indicator(pairs.iter().map(|&(i, a)| (i, w * a)).collect())
            }
            Repr::Dense(c) => Repr::Dense(c.iter().map(|&a| w * a).collect()),
            Repr::Combination(terms) => {
                Repr::Combination(terms.iter().map(|(tw, v)| (w * tw, v.clone())).collect())
            }
        };
        Self { dim: self.dim, repr }
    }

    /// Coordinate at `index` (closed form; no expansion).
    pub fn component(&self, index: u64) -> Complex64 {
        match &self.repr {
            Repr::Uniform(a) => *a,
            Repr::Indicator(pairs) => pairs
                .binary_search_by_key(&index, |&(i, _)| i)
                .map(|pos| pairs[pos].1)
                .unwrap_or(Complex64::new(0.0, 0.0)),
            Repr::Dense(c) => c[index as usize],
            Repr::Combination(terms) => {
                terms.iter().map(|(w, v)| w * v.component(index)).sum()
            }
        }
    }

    /// Expand into a full coefficient array (oracle scale only).
    pub fn to_dense_coeffs(&self) -> Result<Vec<Complex64>> {
        if self.dim > MAX_DENSE_DIM {
            return Err(AqcError::DimensionTooLarge {
                dim: self.dim,
                what: "dense expansion",
                cap: MAX_DENSE_DIM,
            });
        }
        let n = self.dim as usize;
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        match &self.repr {
            Repr::Uniform(a) => out.fill(*a),
            Repr::Indicator(pairs) => {
                for &(i, a) in pairs {
                    out[i as usize] = a;
                }
            }
            Repr::Dense(c) => out.copy_from_slice(c),
            Repr::Combination(terms) => {
                for (w, v) in terms {
                    for (o, x) in out.iter_mut().zip(v.to_dense_coeffs()?) {
                        *o += w * x;
                    }
                }
            }
        }
        Ok(out)
    }
}

fn sum_amplitudes(pairs: &[(u64, Complex64)]) -> Complex64 {
    pairs.iter().map(|&(_, a)| a).sum()
}

fn inner_repr(u: &Repr, v: &Repr, dim: u64) -> Complex64 {
    use Repr::*;
    match (u, v) {
        (Uniform(a), Uniform(b)) => a.conj() * b * (dim as f64),
        (Uniform(a), Indicator(pv)) => a.conj() * sum_amplitudes(pv),
        (Indicator(pu), Uniform(b)) => sum_amplitudes(pu).conj() * b,
        (Uniform(a), Dense(c)) => a.conj() * c.iter().sum::<Complex64>(),
        (Dense(c), Uniform(b)) => c.iter().sum::<Complex64>().conj() * b,
        (Indicator(pu), Indicator(pv)) => {
            // merge join over sorted supports
            let (mut i, mut j) = (0, 0);
            let mut acc = Complex64::new(0.0, 0.0);
            while i < pu.len() && j < pv.len() {
                match pu[i].0.cmp(&pv[j].0) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        acc += pu[i].1.conj() * pv[j].1;
                        i += 1;
                        j += 1;
                    }
                }
            }
            acc
        }
        (Indicator(pu), Dense(c)) => {
            pu.iter().map(|&(i, a)| a.conj() * c[i as usize]).sum()
        }
        (Dense(c), Indicator(pv)) => {
            pv.iter().map(|&(i, a)| c[i as usize].conj() * a).sum()
        }
        (Dense(cu), Dense(cv)) => cu.iter().zip(cv).map(|(a, b)| a.conj() * b).sum(),
        (Combination(terms), other) => terms
            .iter()
            .map(|(w, a)| w.conj() * inner_repr(&a.repr, other, dim))
            .sum(),
        (other, Combination(terms)) => terms
            .iter()
            .map(|(w, a)| w * inner_repr(other, &a.repr, dim))
            .sum(),
    }
}
