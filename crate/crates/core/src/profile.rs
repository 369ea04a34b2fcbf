//! Named spatial profiles used by configs for initial data, forcing shapes
//! and reaction coefficients.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::Field;
use crate::mesh::Mesh;

/// Closed catalog of spatial shapes. All vanish on the Dirichlet boundary
/// except `Constant`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Profile {
    Zero,
    Constant {
        value: f64,
    },
    /// Product of first Dirichlet eigenfunction shapes, peak `amplitude`.
    Sin {
        #[serde(default = "one")]
        amplitude: f64,
    },
    /// Product of normalized parabolas `4 (x/L)(1 - x/L)`, peak `amplitude`.
    Bump {
        #[serde(default = "one")]
        amplitude: f64,
    },
}

fn one() -> f64 {
    1.0
}

impl Profile {
    pub fn materialize(&self, mesh: &Arc<Mesh>) -> Result<Field> {
        let (lx, ly) = mesh.lengths();
        let dim = mesh.dim();
        match *self {
            Profile::Zero => Ok(Field::zeros(Arc::clone(mesh))),
            Profile::Constant { value } => Field::constant(Arc::clone(mesh), value),
            Profile::Sin { amplitude } => Field::from_fn(Arc::clone(mesh), |x, y| {
                let mut v = amplitude * (std::f64::consts::PI * x / lx).sin();
                if dim == 2 {
                    v *= (std::f64::consts::PI * y / ly).sin();
                }
                v
            }),
            Profile::Bump { amplitude } => Field::from_fn(Arc::clone(mesh), |x, y| {
                let mut v = amplitude * 4.0 * (x / lx) * (1.0 - x / lx);
                if dim == 2 {
                    v *= 4.0 * (y / ly) * (1.0 - y / ly);
                }
                v
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_profile_peaks_at_center() {
        let m = Mesh::interval(2.0, 3).unwrap();
        let f = Profile::Sin { amplitude: 3.0 }.materialize(&m).unwrap();
        assert!((f.values()[1] - 3.0).abs() < 1e-14);
        mirror_symmetric(&f);
    }

    fn mirror_symmetric(f: &Field) {
        let m = f.mesh();
        for j in 0..f.len() {
            assert!((f.values()[j] - f.values()[m.reflect_x(j)]).abs() < 1e-14);
        }
    }

    #[test]
    fn bump_profile_2d() {
        let m = Mesh::rectangle(1.0, 1.0, 3, 3).unwrap();
        let f = Profile::Bump { amplitude: 2.0 }.materialize(&m).unwrap();
        // center node (0.5, 0.5): 2 * 4*0.25 * 4*0.25 = 2
        assert!((f.values()[4] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn json_round_trip() {
        let p: Profile = serde_json::from_str(r#"{"kind":"sin","amplitude":0.5}"#).unwrap();
        assert_eq!(p, Profile::Sin { amplitude: 0.5 });
        let p: Profile = serde_json::from_str(r#"{"kind":"zero"}"#).unwrap();
        assert_eq!(p, Profile::Zero);
        assert!(serde_json::from_str::<Profile>(r#"{"kind":"sin","amp":1}"#).is_err());
    }
}
