//! Small dense structure-constant tensors with their antisymmetries enforced
//! at construction time.

use crate::error::Error;
use crate::Result;

/// Bilinear antisymmetric map as a tensor `c[i][j][k]` with `i, j < dim_in`,
/// `k < dim_out` and `c[i][j][k] = -c[j][i][k]` exactly.
///
/// Used for loop/algebra brackets (`dim_in = dim_out`), for the `psi` part of
/// a quasi-double bracket (`dim_out` the subalgebra dimension) and for the
/// `mu` of a bialgebra.
#[derive(Debug, Clone, PartialEq)]
pub struct Antisym2Tensor {
    dim_in: usize,
    dim_out: usize,
    data: Vec<f64>,
}

impl Antisym2Tensor {
    pub fn zeros(dim_in: usize, dim_out: usize) -> Self {
        Antisym2Tensor {
            dim_in,
            dim_out,
            data: vec![0.0; dim_in * dim_in * dim_out],
        }
    }

    /// Builds from raw data, rejecting antisymmetry violations.
    pub fn from_data(dim_in: usize, dim_out: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim_in * dim_in * dim_out {
            return Err(Error::invalid(format!(
                "tensor data has length {}, expected {}",
                data.len(),
                dim_in * dim_in * dim_out
            )));
        }
        let t = Antisym2Tensor {
            dim_in,
            dim_out,
            data,
        };
        for i in 0..dim_in {
            for j in i..dim_in {
                for k in 0..dim_out {
                    if t.get(i, j, k) != -t.get(j, i, k) {
                        return Err(Error::invalid(format!(
                            "antisymmetry violated at [{i}][{j}][{k}]"
                        )));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.data[(i * self.dim_in + j) * self.dim_out + k]
    }

    /// Sets `c[i][j][k]` and its antisymmetric mirror.
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: f64) {
        self.data[(i * self.dim_in + j) * self.dim_out + k] = v;
        self.data[(j * self.dim_in + i) * self.dim_out + k] = -v;
        if i == j {
            self.data[(i * self.dim_in + j) * self.dim_out + k] = 0.0;
        }
    }

    /// Applies the map to coordinate vectors: `(x, y) -> sum c[i][j][k] x_i y_j`.
    pub fn apply(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim_out];
        for i in 0..self.dim_in {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..self.dim_in {
                let c = x[i] * y[j];
                if c == 0.0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += c * self.get(i, j, k);
                }
            }
        }
        out
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Antisym2Tensor) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Zeroes entries below the threshold; used to scrub roundoff from
    /// structure constants computed out of matrix commutators.
    pub fn snap(&mut self, threshold: f64) {
        for v in &mut self.data {
            if v.abs() < threshold {
                *v = 0.0;
            }
        }
    }
}

/// Cobracket tensor `g[i][j][k]`, antisymmetric in `(j, k)`, encoding
/// `gamma(x_i) = 1/2 sum g[i][j][k] x_j /\ x_k`.
///
/// Equivalently the structure constants of the dual bracket
/// `[xi^j, xi^k] = sum_i g[i][j][k] xi^i`.
#[derive(Debug, Clone, PartialEq)]
pub struct CobracketTensor {
    dim: usize,
    data: Vec<f64>,
}

impl CobracketTensor {
    pub fn zeros(dim: usize) -> Self {
        CobracketTensor {
            dim,
            data: vec![0.0; dim * dim * dim],
        }
    }

    pub fn from_data(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim * dim {
            return Err(Error::invalid(format!(
                "cobracket data has length {}, expected {}",
                data.len(),
                dim * dim * dim
            )));
        }
        let t = CobracketTensor { dim, data };
        for i in 0..dim {
            for j in 0..dim {
                for k in j..dim {
                    if t.get(i, j, k) != -t.get(i, k, j) {
                        return Err(Error::invalid(format!(
                            "cobracket antisymmetry violated at [{i}][{j}][{k}]"
                        )));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: f64) {
        self.data[(i * self.dim + j) * self.dim + k] = v;
        self.data[(i * self.dim + k) * self.dim + j] = -v;
        if j == k {
            self.data[(i * self.dim + j) * self.dim + k] = 0.0;
        }
    }

    /// Dual bracket on coordinate vectors of the dual space.
    pub fn dual_bracket(&self, xi: &[f64], eta: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        for j in 0..self.dim {
            for k in 0..self.dim {
                let c = xi[j] * eta[k];
                if c == 0.0 {
                    continue;
                }
                for (i, o) in out.iter_mut().enumerate() {
                    *o += c * self.get(i, j, k);
                }
            }
        }
        out
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &CobracketTensor) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Totally antisymmetric 3-tensor `psi[i][j][k]` on the dual space.
#[derive(Debug, Clone, PartialEq)]
pub struct Trivector {
    dim: usize,
    data: Vec<f64>,
}

impl Trivector {
    pub fn zeros(dim: usize) -> Self {
        Trivector {
            dim,
            data: vec![0.0; dim * dim * dim],
        }
    }

    pub fn from_data(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim * dim {
            return Err(Error::invalid(format!(
                "trivector data has length {}, expected {}",
                data.len(),
                dim * dim * dim
            )));
        }
        let t = Trivector { dim, data };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = t.get(i, j, k);
                    if t.get(j, i, k) != -v && i != j {
                        return Err(Error::invalid(format!(
                            "trivector antisymmetry violated at [{i}][{j}][{k}]"
                        )));
                    }
                    if t.get(i, k, j) != -v && j != k {
                        return Err(Error::invalid(format!(
                            "trivector antisymmetry violated at [{i}][{j}][{k}]"
                        )));
                    }
                    if (i == j || j == k || i == k) && v != 0.0 {
                        return Err(Error::invalid(format!(
                            "trivector has a non-zero repeated-index entry at [{i}][{j}][{k}]"
                        )));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.data[(i * self.dim + j) * self.dim + k]
    }

    /// Sets the component and all its signed permutations.
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: f64) {
        if i == j || j == k || i == k {
            return;
        }
        let d = self.dim;
        let perms: [(usize, usize, usize, f64); 6] = [
            (i, j, k, 1.0),
            (j, k, i, 1.0),
            (k, i, j, 1.0),
            (j, i, k, -1.0),
            (i, k, j, -1.0),
            (k, j, i, -1.0),
        ];
        for (a, b, c, s) in perms {
            self.data[(a * d + b) * d + c] = s * v;
        }
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Trivector) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Plain bilinear tensor `t[i][a][k]` mixing two different input spaces, used
/// for the action `x^xi` (output in the loop tangent) and the coaction
/// `xi^x` (output in the subalgebra).
#[derive(Debug, Clone, PartialEq)]
pub struct MixedTensor {
    dim_x: usize,
    dim_xi: usize,
    dim_out: usize,
    data: Vec<f64>,
}

impl MixedTensor {
    pub fn zeros(dim_x: usize, dim_xi: usize, dim_out: usize) -> Self {
        MixedTensor {
            dim_x,
            dim_xi,
            dim_out,
            data: vec![0.0; dim_x * dim_xi * dim_out],
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.dim_x, self.dim_xi, self.dim_out)
    }

    #[inline]
    pub fn get(&self, i: usize, a: usize, k: usize) -> f64 {
        self.data[(i * self.dim_xi + a) * self.dim_out + k]
    }

    pub fn set(&mut self, i: usize, a: usize, k: usize, v: f64) {
        self.data[(i * self.dim_xi + a) * self.dim_out + k] = v;
    }

    pub fn apply(&self, x: &[f64], xi: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim_out];
        for i in 0..self.dim_x {
            if x[i] == 0.0 {
                continue;
            }
            for a in 0..self.dim_xi {
                let c = x[i] * xi[a];
                if c == 0.0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += c * self.get(i, a, k);
                }
            }
        }
        out
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// Euclidean norm of a coordinate vector.
pub fn vec_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Euclidean distance between coordinate vectors.
pub fn vec_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

pub fn vec_add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisym_set_mirrors() {
        let mut t = Antisym2Tensor::zeros(3, 2);
        t.set(0, 1, 1, 2.5);
        assert_eq!(t.get(1, 0, 1), -2.5);
        t.set(1, 1, 0, 7.0);
        assert_eq!(t.get(1, 1, 0), 0.0);
    }

    #[test]
    fn antisym_from_data_rejects_violation() {
        let mut data = vec![0.0; 2 * 2 * 1];
        data[0 * 2 + 1] = 1.0; // c[0][1][0] = 1 but c[1][0][0] stays 0
        assert!(Antisym2Tensor::from_data(2, 1, data).is_err());
    }

    #[test]
    fn trivector_set_fills_orbit() {
        let mut t = Trivector::zeros(3);
        t.set(0, 1, 2, -2.0_f64.sqrt());
        assert_eq!(t.get(1, 2, 0), -2.0_f64.sqrt());
        assert_eq!(t.get(1, 0, 2), 2.0_f64.sqrt());
        assert_eq!(t.get(2, 1, 0), 2.0_f64.sqrt());
    }
}
