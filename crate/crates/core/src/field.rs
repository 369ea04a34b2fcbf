//! Nodal scalar functions on a mesh.
//!
//! A `Field` plays every coordinate role of the problem: the solution `u`,
//! the convex variable `w = u^q`, the optimization variable `v = w^(1/q)`,
//! the potential `h(t, .)` and coefficient fields. All norms carry the
//! cell-measure weight so refinement converges to the continuum L2 norm.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::mesh::Mesh;

/// One real value per interior mesh node. Boundary values are implicit zeros.
#[derive(Debug, Clone)]
pub struct Field {
    mesh: Arc<Mesh>,
    values: Vec<f64>,
}

impl Field {
    /// Wraps nodal values, rejecting length mismatches and non-finite entries.
    pub fn new(mesh: Arc<Mesh>, values: Vec<f64>) -> Result<Field> {
        if values.len() != mesh.node_count() {
            return Err(Error::InvalidField(format!(
                "expected {} nodal values, got {}",
                mesh.node_count(),
                values.len()
            )));
        }
        if let Some(j) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidField(format!(
                "non-finite value {} at node {j}",
                values[j]
            )));
        }
        Ok(Field { mesh, values })
    }

    pub fn zeros(mesh: Arc<Mesh>) -> Field {
        let n = mesh.node_count();
        Field {
            mesh,
            values: vec![0.0; n],
        }
    }

    pub fn constant(mesh: Arc<Mesh>, value: f64) -> Result<Field> {
        let n = mesh.node_count();
        Field::new(mesh, vec![value; n])
    }

    /// Evaluates `f(x, y)` at every node (`y = 0` on 1D meshes).
    pub fn from_fn(mesh: Arc<Mesh>, f: impl Fn(f64, f64) -> f64) -> Result<Field> {
        let values = (0..mesh.node_count())
            .map(|j| f(mesh.node_x(j), mesh.node_y(j)))
            .collect();
        Field::new(mesh, values)
    }

    pub fn mesh(&self) -> &Arc<Mesh> {
        &self.mesh
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn check_same_mesh(&self, other: &Field) -> Result<()> {
        if Arc::ptr_eq(&self.mesh, &other.mesh) || *self.mesh == *other.mesh {
            Ok(())
        } else {
            Err(Error::MeshMismatch)
        }
    }

    /// Cell-measure weighted L2 norm: `sqrt(sum_j m_j f_j^2)`.
    pub fn l2_norm(&self) -> f64 {
        let m = self.mesh.cell_measure();
        self.values.iter().map(|v| m * v * v).sum::<f64>().sqrt()
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().fold(f64::NEG_INFINITY, |a, &v| a.max(v))
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().fold(f64::INFINITY, |a, &v| a.min(v))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|&v| v >= 0.0)
    }

    /// Nodal `max(f_j, 0)`.
    pub fn positive_part(&self) -> Field {
        Field {
            mesh: Arc::clone(&self.mesh),
            values: self.values.iter().map(|v| v.max(0.0)).collect(),
        }
    }

    pub fn nodal_min(&self, other: &Field) -> Result<Field> {
        self.check_same_mesh(other)?;
        Ok(Field {
            mesh: Arc::clone(&self.mesh),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.min(*b))
                .collect(),
        })
    }

    pub fn nodal_max(&self, other: &Field) -> Result<Field> {
        self.check_same_mesh(other)?;
        Ok(Field {
            mesh: Arc::clone(&self.mesh),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.max(*b))
                .collect(),
        })
    }

    /// Nodal power map `f_j^alpha` with the convention `0^alpha = 0`.
    ///
    /// Fractional exponents require a nonnegative field; integer exponents
    /// accept any sign.
    pub fn power(&self, alpha: f64) -> Result<Field> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidField(format!(
                "power exponent must be positive and finite, got {alpha}"
            )));
        }
        let integer_exponent = alpha.fract() == 0.0;
        let mut values = Vec::with_capacity(self.values.len());
        for (j, &v) in self.values.iter().enumerate() {
            if v < 0.0 && !integer_exponent {
                return Err(Error::InvalidField(format!(
                    "negative base {v} at node {j} with fractional exponent {alpha}"
                )));
            }
            values.push(if v == 0.0 {
                0.0
            } else if v < 0.0 {
                // integer exponent
                let mag = (-v).powf(alpha);
                if (alpha as i64) % 2 == 0 {
                    mag
                } else {
                    -mag
                }
            } else {
                v.powf(alpha)
            });
        }
        Field::new(Arc::clone(&self.mesh), values)
    }

    pub fn add(&self, other: &Field) -> Result<Field> {
        self.check_same_mesh(other)?;
        Field::new(
            Arc::clone(&self.mesh),
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Field) -> Result<Field> {
        self.check_same_mesh(other)?;
        Field::new(
            Arc::clone(&self.mesh),
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, factor: f64) -> Result<Field> {
        Field::new(
            Arc::clone(&self.mesh),
            self.values.iter().map(|v| factor * v).collect(),
        )
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: f64, other: &Field) -> Result<Field> {
        self.check_same_mesh(other)?;
        Field::new(
            Arc::clone(&self.mesh),
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }
}
