//! A concrete `(family, M, N)` and the model built from it.

use std::fmt;

use supercas_core::casimir_engine::{merge_roots, AdjointIdentity, OperatorBundle, PictureMaps, ProjectorSystem};
use supercas_core::osp_algebra::{osp_expected_dims, OspModel};
use supercas_core::sl_algebra::{sl_expected_dims, SlModel};
use supercas_core::vogel_universal::Family;
use supercas_core::{GradedSpace, Rational, Result, StorageKind, SuperMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Instance {
    pub family: Family,
    pub m: usize,
    pub n: usize,
}

impl Instance {
    pub const fn osp(m: usize, n: usize) -> Self {
        Instance { family: Family::Osp, m, n }
    }

    pub const fn sl(m: usize, n: usize) -> Self {
        Instance { family: Family::Sl, m, n }
    }

    pub fn omega(&self) -> i64 {
        self.m as i64 - self.n as i64
    }

    pub fn build(&self) -> Result<Model> {
        Ok(match self.family {
            Family::Osp => Model::Osp(OspModel::new(self.m, self.n)?),
            Family::Sl => Model::Sl(SlModel::new(self.m, self.n)?),
        })
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}|{})", self.family, self.m, self.n)
    }
}

pub enum Model {
    Osp(OspModel),
    Sl(SlModel),
}

impl Model {
    pub fn family(&self) -> Family {
        match self {
            Model::Osp(_) => Family::Osp,
            Model::Sl(_) => Family::Sl,
        }
    }

    /// `(M, N)` after any `sl` swap.
    pub fn mn(&self) -> (usize, usize) {
        match self {
            Model::Osp(m) => (m.m(), m.n()),
            Model::Sl(m) => (m.m(), m.n()),
        }
    }

    pub fn omega(&self) -> i64 {
        match self {
            Model::Osp(m) => m.omega(),
            Model::Sl(m) => m.omega(),
        }
    }

    pub fn space(&self) -> &GradedSpace {
        match self {
            Model::Osp(m) => m.space(),
            Model::Sl(m) => m.space(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Model::Osp(m) => m.dim(),
            Model::Sl(m) => m.dim(),
        }
    }

    pub fn sdim(&self) -> Rational {
        match self {
            Model::Osp(m) => m.sdim(),
            Model::Sl(m) => m.sdim(),
        }
    }

    pub fn algebra(&self) -> &supercas_core::lie::LieSuperalgebra {
        match self {
            Model::Osp(m) => m.algebra(),
            Model::Sl(m) => m.algebra(),
        }
    }

    pub fn perm(&self) -> SuperMatrix {
        match self {
            Model::Osp(m) => m.perm(),
            Model::Sl(m) => m.perm(),
        }
    }

    pub fn k_def(&self) -> SuperMatrix {
        match self {
            Model::Osp(m) => m.k_def(),
            Model::Sl(m) => m.k_def(),
        }
    }

    pub fn casimir_defining(&self, kind: StorageKind) -> SuperMatrix {
        match self {
            Model::Osp(m) => m.casimir_defining(kind),
            Model::Sl(m) => m.casimir_defining(kind),
        }
    }

    pub fn casimir_defining_closed(&self) -> SuperMatrix {
        match self {
            Model::Osp(m) => m.casimir_defining_closed(),
            Model::Sl(m) => m.casimir_defining_closed(),
        }
    }

    /// Roots of the defining identity with multiplicities.
    pub fn defining_roots(&self) -> Vec<(Rational, u32)> {
        match self {
            Model::Osp(m) => merge_roots(&m.defining_roots()),
            Model::Sl(m) => merge_roots(&m.defining_roots()),
        }
    }

    pub fn defining_projectors(&self) -> Result<ProjectorSystem> {
        match self {
            Model::Osp(m) => m.defining_projectors(),
            Model::Sl(m) => Ok(m.defining_projectors()),
        }
    }

    pub fn r_matrix(&self, u: &Rational) -> Result<SuperMatrix> {
        match self {
            Model::Osp(m) => m.r_matrix(u),
            Model::Sl(m) => m.r_matrix(u),
        }
    }

    pub fn r_matrix_spectral(&self, u: &Rational) -> Result<SuperMatrix> {
        match self {
            Model::Osp(m) => m.r_matrix_spectral(u),
            Model::Sl(m) => m.r_matrix_spectral(u),
        }
    }

    pub fn r_matrix_cayley(&self, u: &Rational) -> Result<SuperMatrix> {
        match self {
            Model::Osp(m) => m.r_matrix_cayley(u),
            Model::Sl(m) => m.r_matrix_cayley(u),
        }
    }

    pub fn pair_space_checks(&self) -> Vec<(String, bool)> {
        match self {
            Model::Osp(m) => m.pair_space_checks(),
            Model::Sl(m) => m.pair_space_checks(),
        }
    }

    pub fn adjoint_bundle(&self, kind: StorageKind) -> OperatorBundle {
        match self {
            Model::Osp(m) => m.adjoint_bundle(kind),
            Model::Sl(m) => m.adjoint_bundle(kind),
        }
    }

    pub fn embedded_bundle(&self) -> OperatorBundle {
        match self {
            Model::Osp(m) => m.embedded_bundle(),
            Model::Sl(m) => m.embedded_bundle(),
        }
    }

    pub fn picture_maps(&self) -> PictureMaps {
        match self {
            Model::Osp(m) => m.picture_maps(),
            Model::Sl(m) => m.picture_maps(),
        }
    }

    pub fn char_identity(&self) -> AdjointIdentity {
        match self {
            Model::Osp(m) => m.char_identity(),
            Model::Sl(m) => m.char_identity(),
        }
    }

    /// The adjoint projector system on the restricted bundle. `osp` at
    /// `ω = 8` needs the embedded bundle, passed as `embedded`.
    pub fn adjoint_projectors(
        &self,
        b: &OperatorBundle,
        embedded: impl FnOnce() -> OperatorBundle,
    ) -> Result<ProjectorSystem> {
        match self {
            Model::Osp(m) if m.omega() == 8 => m.projectors_omega_eight(&embedded()),
            Model::Osp(m) => m.adjoint_projectors(b),
            Model::Sl(m) => m.adjoint_projectors(b),
        }
    }

    pub fn expected_dims(&self) -> Option<Vec<(String, (i64, i64))>> {
        let (m, n) = self.mn();
        match self {
            Model::Osp(_) => osp_expected_dims(m, n).ok(),
            Model::Sl(_) => sl_expected_dims(m, n).ok(),
        }
    }

    pub fn is_ad_invariant(&self, op: &SuperMatrix) -> bool {
        match self {
            Model::Osp(m) => m.is_ad_invariant(op),
            Model::Sl(m) => m.is_ad_invariant(op),
        }
    }

    /// Whether the `V^{⊗4}` picture is small enough to build.
    pub fn embedded_feasible(&self) -> bool {
        self.space().dim().pow(4) <= 4096
    }
}
