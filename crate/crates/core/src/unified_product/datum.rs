use crate::error::Error;
use crate::exact_linear::{BilMap, Field, LinMap, Scalar, TwoVectorSpace};
use crate::zinbiel_core::ZinbielTwoAlgebra;

/// Argument and output levels of the index-j maps: (left, right, output).
pub const LEVELS: [(usize, usize, usize); 4] = [(0, 0, 0), (1, 1, 1), (0, 1, 1), (1, 0, 1)];

/// The six families of maps in an extending datum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapKind {
    /// ⇀ⱼ : V × Z → Z
    HarpoonR,
    /// ↼ⱼ : Z × V → Z
    HarpoonL,
    /// ⊳ⱼ : Z × V → V
    TriR,
    /// ⊲ⱼ : V × Z → V
    TriL,
    /// ωⱼ : V × V → Z
    Omega,
    /// *ⱼ : V × V → V
    Star,
}

impl MapKind {
    pub const ALL: [MapKind; 6] =
        [MapKind::HarpoonR, MapKind::HarpoonL, MapKind::TriR, MapKind::TriL, MapKind::Omega, MapKind::Star];

    /// Whether the left argument, right argument and output live in V (true) or Z (false).
    pub fn shape(self) -> (bool, bool, bool) {
        match self {
            MapKind::HarpoonR => (true, false, false),
            MapKind::HarpoonL => (false, true, false),
            MapKind::TriR => (false, true, true),
            MapKind::TriL => (true, false, true),
            MapKind::Omega => (true, true, false),
            MapKind::Star => (true, true, true),
        }
    }

    pub fn json_name(self) -> &'static str {
        match self {
            MapKind::HarpoonR => "harpoon_r",
            MapKind::HarpoonL => "harpoon_l",
            MapKind::TriR => "tri_r",
            MapKind::TriL => "tri_l",
            MapKind::Omega => "omega",
            MapKind::Star => "star",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            MapKind::HarpoonR => "⇀",
            MapKind::HarpoonL => "↼",
            MapKind::TriR => "⊳",
            MapKind::TriL => "⊲",
            MapKind::Omega => "ω",
            MapKind::Star => "*",
        }
    }
}

/// Twenty-four bilinear maps and σ: V₁ → Z₀ over a fixed crossed module Z and 2-vector space V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendingDatum {
    pub z: ZinbielTwoAlgebra,
    pub v: TwoVectorSpace,
    pub harpoon_r: [BilMap; 4],
    pub harpoon_l: [BilMap; 4],
    pub tri_r: [BilMap; 4],
    pub tri_l: [BilMap; 4],
    pub omega: [BilMap; 4],
    pub star: [BilMap; 4],
    pub sigma: LinMap,
}

impl ExtendingDatum {
    /// All maps zero.
    pub fn trivial(z: ZinbielTwoAlgebra, v: TwoVectorSpace) -> Self {
        let f = z.field();
        let zd = [z.z0.dim, z.z1.dim];
        let vd = [v.dim0, v.dim1];
        let mk = |kind: MapKind| {
            std::array::from_fn(|j| {
                let (la, lb, lo) = LEVELS[j];
                let (a, b, c) = kind.shape();
                let pick = |is_v: bool, l: usize| if is_v { vd[l] } else { zd[l] };
                BilMap::zero(f, pick(a, la), pick(b, lb), pick(c, lo))
            })
        };
        ExtendingDatum {
            harpoon_r: mk(MapKind::HarpoonR),
            harpoon_l: mk(MapKind::HarpoonL),
            tri_r: mk(MapKind::TriR),
            tri_l: mk(MapKind::TriL),
            omega: mk(MapKind::Omega),
            star: mk(MapKind::Star),
            sigma: LinMap::zero(f, zd[0], vd[1]),
            z,
            v,
        }
    }

    pub fn field(&self) -> Field {
        self.z.field()
    }

    pub fn map(&self, kind: MapKind, j: usize) -> &BilMap {
        match kind {
            MapKind::HarpoonR => &self.harpoon_r[j],
            MapKind::HarpoonL => &self.harpoon_l[j],
            MapKind::TriR => &self.tri_r[j],
            MapKind::TriL => &self.tri_l[j],
            MapKind::Omega => &self.omega[j],
            MapKind::Star => &self.star[j],
        }
    }

    pub fn map_mut(&mut self, kind: MapKind, j: usize) -> &mut BilMap {
        match kind {
            MapKind::HarpoonR => &mut self.harpoon_r[j],
            MapKind::HarpoonL => &mut self.harpoon_l[j],
            MapKind::TriR => &mut self.tri_r[j],
            MapKind::TriL => &mut self.tri_l[j],
            MapKind::Omega => &mut self.omega[j],
            MapKind::Star => &mut self.star[j],
        }
    }

    /// Dimensions of Z₀, Z₁, V₀, V₁ indexed by level.
    pub fn zdims(&self) -> [usize; 2] {
        [self.z.z0.dim, self.z.z1.dim]
    }
    pub fn vdims(&self) -> [usize; 2] {
        [self.v.dim0, self.v.dim1]
    }

    /// Expected (dimA, dimB, dimC) of a map.
    pub fn expected_dims(&self, kind: MapKind, j: usize) -> (usize, usize, usize) {
        let (zd, vd) = (self.zdims(), self.vdims());
        let (la, lb, lo) = LEVELS[j];
        let (a, b, c) = kind.shape();
        let pick = |is_v: bool, l: usize| if is_v { vd[l] } else { zd[l] };
        (pick(a, la), pick(b, lb), pick(c, lo))
    }

    pub fn check_dims(&self) -> Result<(), Error> {
        self.z.check_dims()?;
        if self.v.d.cols() != self.v.dim1 || self.v.d.rows() != self.v.dim0 {
            return Err(Error::Shape("d must map V1 to V0".into()));
        }
        for kind in MapKind::ALL {
            for j in 0..4 {
                let want = self.expected_dims(kind, j);
                let got = self.map(kind, j).dims();
                if want != got {
                    return Err(Error::Shape(format!(
                        "{}_{j} must be {}×{}→{}, got {}×{}→{}",
                        kind.json_name(),
                        want.0,
                        want.1,
                        want.2,
                        got.0,
                        got.1,
                        got.2
                    )));
                }
            }
        }
        if self.sigma.cols() != self.v.dim1 || self.sigma.rows() != self.z.z0.dim {
            return Err(Error::Shape("sigma must map V1 to Z0".into()));
        }
        Ok(())
    }

    /// Positions of every free coefficient, in canonical order: the 24 maps (kind-major,
    /// then j, then (k, i, j) lexicographic) followed by σ (row-major).
    pub fn slots(&self) -> Vec<Slot> {
        let mut out = Vec::new();
        for kind in MapKind::ALL {
            for j in 0..4 {
                let (a, b, c) = self.expected_dims(kind, j);
                for k in 0..c {
                    for ia in 0..a {
                        for ib in 0..b {
                            out.push(Slot::Map { kind, j, k, i: ia, l: ib });
                        }
                    }
                }
            }
        }
        for r in 0..self.sigma.rows() {
            for c in 0..self.sigma.cols() {
                out.push(Slot::Sigma { r, c });
            }
        }
        out
    }

    pub fn get_slot(&self, s: &Slot) -> Scalar {
        match *s {
            Slot::Map { kind, j, k, i, l } => self.map(kind, j).get(k, i, l),
            Slot::Sigma { r, c } => self.sigma.get(r, c).clone(),
        }
    }

    pub fn set_slot(&mut self, s: &Slot, v: Scalar) {
        match *s {
            Slot::Map { kind, j, k, i, l } => self.map_mut(kind, j).set(k, i, l, v),
            Slot::Sigma { r, c } => self.sigma.set(r, c, v),
        }
    }

    /// True when all four maps of the family vanish.
    pub fn maps_zero(&self, kind: MapKind) -> bool {
        (0..4).all(|j| self.map(kind, j).is_zero())
    }
}

/// One free coefficient of a datum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Map { kind: MapKind, j: usize, k: usize, i: usize, l: usize },
    Sigma { r: usize, c: usize },
}
