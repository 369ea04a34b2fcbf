//! Discrete p-Dirichlet energy, its exact gradient and the p-Laplacian
//! stencil with homogeneous Dirichlet boundary.
//!
//! In 2D the energy is the anisotropic edge form `sum_e m_e |D_e v|^p`
//! (x-edges and y-edges summed separately), not the isotropic
//! `(Dx^2 + Dy^2)^(p/2)`. The edge form keeps the nodal submodularity
//! inequality exact under min/max, which is what the contraction estimates
//! of the resolvent rest on; this is a deliberate modeling choice.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::mesh::Mesh;

/// Diffusion exponent, restricted to 1 < p < infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PExponent(f64);

impl PExponent {
    pub fn new(p: f64) -> Result<PExponent> {
        if !(p > 1.0) || !p.is_finite() {
            return Err(Error::InvalidSpec(format!(
                "diffusion exponent must satisfy 1 < p < inf, got {p}"
            )));
        }
        Ok(PExponent(p))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Odd power `|d|^(p-2) d`, with the convention `phi(0) = 0` (the energy is
/// C1 for every p > 1, including p < 2 where `|d|^(p-2)` alone blows up).
#[inline]
fn phi(d: f64, p: f64) -> f64 {
    if d == 0.0 {
        0.0
    } else if d > 0.0 {
        d.powf(p - 1.0)
    } else {
        -(-d).powf(p - 1.0)
    }
}

/// Walks every edge of the mesh, calling `visit(a, b, h_e, m_e)` with the
/// endpoint node indices (`usize::MAX` for a boundary ghost), the edge
/// length and the edge measure weight.
fn for_each_edge(mesh: &Mesh, mut visit: impl FnMut(usize, usize, f64, f64)) {
    let (nx, ny) = mesh.counts();
    let (hx, hy) = mesh.spacing();
    if mesh.dim() == 1 {
        for e in 0..=nx {
            let a = if e == 0 { usize::MAX } else { e - 1 };
            let b = if e == nx { usize::MAX } else { e };
            visit(a, b, hx, hx);
        }
        return;
    }
    // x-oriented edges, one chain per row
    for iy in 0..ny {
        for e in 0..=nx {
            let a = if e == 0 { usize::MAX } else { iy * nx + e - 1 };
            let b = if e == nx { usize::MAX } else { iy * nx + e };
            visit(a, b, hx, hx * hy);
        }
    }
    // y-oriented edges, one chain per column
    for ix in 0..nx {
        for e in 0..=ny {
            let a = if e == 0 { usize::MAX } else { (e - 1) * nx + ix };
            let b = if e == ny { usize::MAX } else { e * nx + ix };
            visit(a, b, hy, hx * hy);
        }
    }
}

#[inline]
fn value_at(v: &[f64], node: usize) -> f64 {
    if node == usize::MAX {
        0.0
    } else {
        v[node]
    }
}

/// Discrete `(1/p) int |grad v|^p` with implicit Dirichlet zeros.
pub fn p_energy(v: &Field, p: PExponent) -> f64 {
    let pv = p.get();
    let vals = v.values();
    let mut acc = 0.0;
    for_each_edge(v.mesh(), |a, b, h, m| {
        let d = (value_at(vals, b) - value_at(vals, a)) / h;
        acc += m * d.abs().powf(pv);
    });
    acc / pv
}

/// Exact nodal gradient of [`p_energy`]; equals `-m_j (Delta_p v)_j`.
pub fn p_energy_gradient(v: &Field, p: PExponent) -> Field {
    let pv = p.get();
    let vals = v.values();
    let mut grad = vec![0.0; vals.len()];
    for_each_edge(v.mesh(), |a, b, h, m| {
        let flux = m / h * phi((value_at(vals, b) - value_at(vals, a)) / h, pv);
        if a != usize::MAX {
            grad[a] -= flux;
        }
        if b != usize::MAX {
            grad[b] += flux;
        }
    });
    Field::new(Arc::clone(v.mesh()), grad).expect("gradient of finite field is finite")
}

/// Nodal `(Delta_p v)_j`; satisfies
/// `p_energy_gradient(v) = -cell_measure * apply_p_laplacian(v)` exactly.
pub fn apply_p_laplacian(v: &Field, p: PExponent) -> Field {
    let measure = v.mesh().cell_measure();
    let grad = p_energy_gradient(v, p);
    grad.scale(-1.0 / measure)
        .expect("scaled gradient stays finite")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::Mesh;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn field(mesh: &Arc<Mesh>, vals: &[f64]) -> Field {
        Field::new(Arc::clone(mesh), vals.to_vec()).unwrap()
    }

    fn random_field(mesh: &Arc<Mesh>, rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Field {
        let vals: Vec<f64> = (0..mesh.node_count())
            .map(|_| rng.random_range(lo..hi))
            .collect();
        Field::new(Arc::clone(mesh), vals).unwrap()
    }

    #[test]
    fn energy_hand_values() {
        let m = Mesh::interval(1.0, 1).unwrap();
        let z = Field::zeros(Arc::clone(&m));
        assert_eq!(p_energy(&z, PExponent::new(2.0).unwrap()), 0.0);

        let v = field(&m, &[1.0]);
        assert!((p_energy(&v, PExponent::new(2.0).unwrap()) - 2.0).abs() < 1e-15);
        assert!((p_energy(&v, PExponent::new(3.0).unwrap()) - 8.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn gradient_hand_values() {
        let m = Mesh::interval(1.0, 3).unwrap();
        let z = Field::zeros(Arc::clone(&m));
        let g = p_energy_gradient(&z, PExponent::new(1.5).unwrap());
        assert_eq!(g.values(), &[0.0, 0.0, 0.0]);

        let v = field(&m, &[1.0, 2.0, 1.0]);
        let g = p_energy_gradient(&v, PExponent::new(2.0).unwrap());
        assert!((g.values()[1] - 8.0).abs() < 1e-12);
    }

    #[test]
    fn laplacian_hand_values() {
        let m = Mesh::interval(1.0, 3).unwrap();
        // linear profile is discretely harmonic away from the boundary
        let v = field(&m, &[0.25, 0.5, 0.75]);
        let lap = apply_p_laplacian(&v, PExponent::new(2.0).unwrap());
        assert!(lap.values()[1].abs() < 1e-12);

        let v = field(&m, &[1.0, 2.0, 1.0]);
        let lap = apply_p_laplacian(&v, PExponent::new(2.0).unwrap());
        assert!((lap.values()[1] - (-32.0)).abs() < 1e-10);
    }

    #[test]
    fn gradient_is_minus_measure_times_laplacian() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for mesh in [Mesh::interval(1.3, 7).unwrap(), Mesh::rectangle(1.0, 2.0, 4, 3).unwrap()] {
            let v = random_field(&mesh, &mut rng, -1.0, 1.0);
            for p in [1.5, 2.0, 3.0] {
                let p = PExponent::new(p).unwrap();
                let g = p_energy_gradient(&v, p);
                let lap = apply_p_laplacian(&v, p);
                let m = mesh.cell_measure();
                for j in 0..mesh.node_count() {
                    let back = -m * lap.values()[j];
                    assert!((g.values()[j] - back).abs() <= 1e-14 * back.abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for mesh in [Mesh::interval(1.0, 6).unwrap(), Mesh::rectangle(1.0, 1.0, 3, 4).unwrap()] {
            for p_val in [1.5, 2.0, 2.5, 3.0, 4.0] {
                let p = PExponent::new(p_val).unwrap();
                let v = random_field(&mesh, &mut rng, 0.2, 1.2);
                let grad = p_energy_gradient(&v, p);
                let scale = v.sup_norm();
                let step = 1e-6 * scale;
                for j in 0..mesh.node_count() {
                    let mut hi = v.clone();
                    hi.values_mut()[j] += step;
                    let mut lo = v.clone();
                    lo.values_mut()[j] -= step;
                    let fd = (p_energy(&hi, p) - p_energy(&lo, p)) / (2.0 * step);
                    let denom = grad.values()[j].abs().max(1e-8);
                    assert!(
                        (fd - grad.values()[j]).abs() / denom <= 1e-6,
                        "p={p_val} node {j}: fd={fd} grad={}",
                        grad.values()[j]
                    );
                }
            }
        }
    }

    #[test]
    fn laplacian_homogeneity_degree_p_minus_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mesh = Mesh::interval(1.0, 9).unwrap();
        let v = random_field(&mesh, &mut rng, -1.0, 1.0);
        for (p_val, r) in [(3.0, 2.0), (2.5, 0.5), (1.5, 4.0)] {
            let p = PExponent::new(p_val).unwrap();
            let scaled = apply_p_laplacian(&v.scale(r).unwrap(), p);
            let base = apply_p_laplacian(&v, p);
            let factor = r.powf(p_val - 1.0);
            for j in 0..mesh.node_count() {
                let expect = factor * base.values()[j];
                assert!(
                    (scaled.values()[j] - expect).abs() <= 1e-12 * expect.abs().max(1e-300),
                    "p={p_val} r={r} node {j}"
                );
            }
        }
    }

    #[test]
    fn energy_submodular_under_min_max() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for mesh in [Mesh::interval(1.0, 8).unwrap(), Mesh::rectangle(1.0, 1.0, 3, 3).unwrap()] {
            for p_val in [1.5, 2.0, 3.0] {
                let p = PExponent::new(p_val).unwrap();
                for _ in 0..200 {
                    let a = random_field(&mesh, &mut rng, -1.0, 1.0);
                    let b = random_field(&mesh, &mut rng, -1.0, 1.0);
                    let lhs = p_energy(&a.nodal_min(&b).unwrap(), p)
                        + p_energy(&a.nodal_max(&b).unwrap(), p);
                    let rhs = p_energy(&a, p) + p_energy(&b, p);
                    assert!(lhs <= rhs + 1e-12 * rhs, "p={p_val}");
                }
            }
        }
    }
}
