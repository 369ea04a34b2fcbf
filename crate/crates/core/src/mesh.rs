//! Structured tensor grids on an interval or rectangle with homogeneous
//! Dirichlet boundary.
//!
//! Only interior nodes are stored as unknowns; the boundary values are
//! implicit zeros (a ghost layer). In 1D the interior nodes of an interval
//! of length `L` with `n` unknowns sit at `x_j = j * h`, `h = L / (n + 1)`,
//! `j = 1..n`. The 2D rectangle is the tensor product of two such lines,
//! indexed row-major: `node = iy * nx + ix`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

/// Immutable structured grid. Safe to share across concurrent solves.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    dim: usize,
    len_x: f64,
    len_y: f64,
    nx: usize,
    ny: usize,
    hx: f64,
    hy: f64,
}

impl Mesh {
    /// 1D interval (0, L) with `n` interior nodes.
    pub fn interval(len: f64, n: usize) -> Result<Arc<Mesh>> {
        if !(len > 0.0) || !len.is_finite() {
            return Err(Error::InvalidMesh(format!(
                "interval length must be positive and finite, got {len}"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidMesh(
                "interval needs at least one interior node".into(),
            ));
        }
        Ok(Arc::new(Mesh {
            dim: 1,
            len_x: len,
            len_y: 0.0,
            nx: n,
            ny: 1,
            hx: len / (n as f64 + 1.0),
            hy: 1.0,
        }))
    }

    /// 2D rectangle (0, Lx) x (0, Ly) with `nx * ny` interior nodes.
    pub fn rectangle(len_x: f64, len_y: f64, nx: usize, ny: usize) -> Result<Arc<Mesh>> {
        for (name, len) in [("Lx", len_x), ("Ly", len_y)] {
            if !(len > 0.0) || !len.is_finite() {
                return Err(Error::InvalidMesh(format!(
                    "rectangle side {name} must be positive and finite, got {len}"
                )));
            }
        }
        if nx == 0 || ny == 0 {
            return Err(Error::InvalidMesh(
                "rectangle needs at least one interior node per direction".into(),
            ));
        }
        Ok(Arc::new(Mesh {
            dim: 2,
            len_x,
            len_y,
            nx,
            ny,
            hx: len_x / (nx as f64 + 1.0),
            hy: len_y / (ny as f64 + 1.0),
        }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn node_count(&self) -> usize {
        self.nx * self.ny
    }

    pub fn counts(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn lengths(&self) -> (f64, f64) {
        (self.len_x, self.len_y)
    }

    pub fn spacing(&self) -> (f64, f64) {
        (self.hx, self.hy)
    }

    /// Integration weight attached to every interior node.
    pub fn cell_measure(&self) -> f64 {
        if self.dim == 1 {
            self.hx
        } else {
            self.hx * self.hy
        }
    }

    pub fn node_x(&self, node: usize) -> f64 {
        ((node % self.nx) as f64 + 1.0) * self.hx
    }

    /// Zero for 1D meshes.
    pub fn node_y(&self, node: usize) -> f64 {
        if self.dim == 1 {
            0.0
        } else {
            ((node / self.nx) as f64 + 1.0) * self.hy
        }
    }

    /// Node index mirrored across the vertical midline.
    pub fn reflect_x(&self, node: usize) -> usize {
        let ix = node % self.nx;
        let iy = node / self.nx;
        iy * self.nx + (self.nx - 1 - ix)
    }

    /// Node index mirrored across the horizontal midline (identity in 1D).
    pub fn reflect_y(&self, node: usize) -> usize {
        let ix = node % self.nx;
        let iy = node / self.nx;
        (self.ny - 1 - iy) * self.nx + ix
    }
}

/// Exact Euclidean distance from each interior node to the boundary.
pub fn boundary_distance(mesh: &Arc<Mesh>) -> Field {
    let values = (0..mesh.node_count())
        .map(|j| {
            let x = mesh.node_x(j);
            let dx = x.min(mesh.len_x - x);
            if mesh.dim() == 1 {
                dx
            } else {
                let y = mesh.node_y(j);
                dx.min(y.min(mesh.len_y - y))
            }
        })
        .collect();
    Field::new(Arc::clone(mesh), values).expect("distances are finite")
}
