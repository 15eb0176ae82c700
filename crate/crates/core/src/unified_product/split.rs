use super::{build_unified_product, ExtendingDatum, MapKind, LEVELS};
use crate::error::Error;
use crate::exact_linear::{is_zero, BilMap, Field, LinMap, TwoVectorSpace};
use crate::report::{ConditionReport, Violation};
use crate::zinbiel_core::{
    check_2alg_morphism, check_crossed_module, check_grid, BimodulePair, TwoMorphism, ZinbielAlgebra,
    ZinbielTwoAlgebra,
};

/// E with Eᵢ = ιᵢ(Zᵢ) ⊕ ker pᵢ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementSplit {
    pub e: ZinbielTwoAlgebra,
    /// ι₀, ι₁ : Zᵢ → Eᵢ, indexed by level.
    pub iota: [LinMap; 2],
    /// p₀, p₁ : Eᵢ → Zᵢ, indexed by level.
    pub proj: [LinMap; 2],
}

/// Coordinates adapted to a split: `basis = [ι | κ]` and its inverse `coords = [p; q]`.
pub(crate) struct Frame {
    pub basis: [LinMap; 2],
    pub coords: [LinMap; 2],
    pub zdims: [usize; 2],
    pub vdims: [usize; 2],
}

impl ComplementSplit {
    pub fn new(e: ZinbielTwoAlgebra, iota: [LinMap; 2], proj: [LinMap; 2]) -> Result<Self, Error> {
        let s = ComplementSplit { e, iota, proj };
        s.validate()?;
        Ok(s)
    }

    pub fn field(&self) -> Field {
        self.e.field()
    }

    /// pᵢ∘ιᵢ = id and the dimension bookkeeping.
    pub fn validate(&self) -> Result<(), Error> {
        self.e.check_dims()?;
        let edims = [self.e.z0.dim, self.e.z1.dim];
        for l in 0..2 {
            let (i, p) = (&self.iota[l], &self.proj[l]);
            if i.rows() != edims[l] || p.cols() != edims[l] || p.rows() != i.cols() {
                return Err(Error::Shape(format!("iota{l}/p{l} do not match E{l}")));
            }
            if !p.compose(i)?.is_identity() {
                return Err(Error::Shape(format!("p{l}∘iota{l} is not the identity")));
            }
        }
        Ok(())
    }

    pub(crate) fn frame(&self) -> Frame {
        let f = self.field();
        let mut basis = [LinMap::zero(f, 0, 0), LinMap::zero(f, 0, 0)];
        let mut coords = basis.clone();
        let mut zdims = [0; 2];
        let mut vdims = [0; 2];
        for l in 0..2 {
            let kappa = self.proj[l].kernel();
            let n = self.proj[l].cols();
            let mut cols: Vec<_> = (0..self.iota[l].cols()).map(|c| self.iota[l].column(c)).collect();
            zdims[l] = cols.len();
            vdims[l] = kappa.len();
            cols.extend(kappa);
            let m = LinMap::from_columns(f, n, &cols);
            coords[l] = m.inverse().expect("iota and ker p are complementary");
            basis[l] = m;
        }
        Frame { basis, coords, zdims, vdims }
    }
}

fn block_zero(t: &BilMap, zd: [usize; 3], ed: [usize; 3]) -> Option<Vec<usize>> {
    let sub = t.sub_block(0..zd[0], 0..zd[1], zd[2]..ed[2]);
    let w = sub.entries().next().map(|(&(_, i, j), _)| vec![i + 1, j + 1]);
    w
}

pub(crate) const OP_NAMES: [&str; 4] = ["∘0", "∘1", "⊳", "⊲"];

/// The four products of E and φ_E written in the frame's coordinates.
pub(crate) struct Adapted {
    pub tensors: Vec<BilMap>,
    pub phi: LinMap,
    pub zd: [usize; 2],
    pub ed: [usize; 2],
}

impl Frame {
    pub(crate) fn from_basis(basis: [LinMap; 2], zdims: [usize; 2]) -> Option<Frame> {
        let coords = [basis[0].inverse()?, basis[1].inverse()?];
        let vdims = [basis[0].cols() - zdims[0], basis[1].cols() - zdims[1]];
        Some(Frame { basis, coords, zdims, vdims })
    }

    pub(crate) fn adapt(&self, e: &ZinbielTwoAlgebra) -> Result<Adapted, Error> {
        let ops = [&e.z0.mult, &e.z1.mult, &e.act.left, &e.act.right];
        let mut tensors = Vec::new();
        for (j, t) in ops.iter().enumerate() {
            let (la, lb, lo) = LEVELS[j];
            tensors.push(t.pullback(&self.coords[lo], &self.basis[la], &self.basis[lb])?);
        }
        let phi = self.coords[0].compose(&e.phi)?.compose(&self.basis[1])?;
        let zd = self.zdims;
        Ok(Adapted { tensors, phi, zd, ed: [zd[0] + self.vdims[0], zd[1] + self.vdims[1]] })
    }
}

impl Adapted {
    /// First basis pair (1-based) where Z × Z leaves Z under product j.
    pub(crate) fn z_escape(&self, j: usize) -> Option<Vec<usize>> {
        let (la, lb, lo) = LEVELS[j];
        let (zd, ed) = (self.zd, self.ed);
        block_zero(&self.tensors[j], [zd[la], zd[lb], zd[lo]], [ed[la], ed[lb], ed[lo]])
    }

    /// First Z₁ basis vector whose φ_E image leaves Z₀.
    pub(crate) fn phi_escape(&self) -> Option<Vec<usize>> {
        (0..self.zd[1]).find(|&c| !is_zero(&self.phi.column(c)[self.zd[0]..])).map(|c| vec![c + 1])
    }

    /// The datum read off by projecting every product onto Z and V.
    pub(crate) fn datum(&self) -> ExtendingDatum {
        let (zd, ed) = (self.zd, self.ed);
        let zpart = |j: usize| {
            let (la, lb, lo) = LEVELS[j];
            self.tensors[j].sub_block(0..zd[la], 0..zd[lb], 0..zd[lo])
        };
        let z = ZinbielTwoAlgebra {
            z1: ZinbielAlgebra { dim: zd[1], mult: zpart(1) },
            z0: ZinbielAlgebra { dim: zd[0], mult: zpart(0) },
            phi: self.phi.row_slice(0, zd[0]).col_slice(0, zd[1]),
            act: BimodulePair { left: zpart(2), right: zpart(3) },
        };
        let d = self.phi.row_slice(zd[0], ed[0]).col_slice(zd[1], ed[1]);
        let mut datum = ExtendingDatum::trivial(z, TwoVectorSpace::new(d));
        datum.sigma = self.phi.row_slice(0, zd[0]).col_slice(zd[1], ed[1]);
        for (j, t) in self.tensors.iter().enumerate() {
            let (la, lb, lo) = LEVELS[j];
            for kind in MapKind::ALL {
                let (a, b, c) = kind.shape();
                let range = |is_v: bool, l: usize| if is_v { zd[l]..ed[l] } else { 0..zd[l] };
                *datum.map_mut(kind, j) = t.sub_block(range(a, la), range(b, lb), range(c, lo));
            }
        }
        datum
    }
}

/// Reads off the extending datum of a split by projecting every product of E onto Z and V.
pub fn extract_datum(split: &ComplementSplit) -> Result<ExtendingDatum, Error> {
    split.validate()?;
    let a = split.frame().adapt(&split.e)?;
    for j in 0..4 {
        if let Some(w) = a.z_escape(j) {
            return Err(Error::Subalgebra { op: OP_NAMES[j].to_string(), witness: w });
        }
    }
    if let Some(w) = a.phi_escape() {
        return Err(Error::Subalgebra { op: "φ".into(), witness: w });
    }
    Ok(a.datum())
}

/// Checks that ψ(x, u) = ι(x) + κ(u) is an isomorphism Z♮V → E fixing Z and inducing the identity on V.
pub fn verify_psi(split: &ComplementSplit, datum: &ExtendingDatum) -> Result<ConditionReport, Error> {
    split.validate()?;
    let fr = split.frame();
    if fr.zdims != datum.zdims() || fr.vdims != datum.vdims() {
        return Err(Error::Shape("datum does not match the split".into()));
    }
    let built = build_unified_product(datum)?;
    let psi = TwoMorphism { phi1: fr.basis[1].clone(), phi0: fr.basis[0].clone() };
    let mut rep = check_2alg_morphism(&built, &split.e, &psi)?;
    let f = split.field();
    let mut extra = Vec::new();
    for l in [1usize, 0] {
        let (zd, vd) = (fr.zdims[l], fr.vdims[l]);
        let stab = format!("STAB{l}");
        extra.extend(check_grid(&stab, &[zd], |w| {
            (fr.basis[l].column(w[0]), split.iota[l].column(w[0]))
        }));
        let costab = format!("COSTAB{l}");
        // q∘ψ is the projection Z♮V → V.
        let q = fr.coords[l].row_slice(zd, zd + vd).compose(&fr.basis[l])?;
        let pi_v = LinMap::block(
            &LinMap::zero(f, 0, zd),
            &LinMap::zero(f, 0, vd),
            &LinMap::zero(f, vd, zd),
            &LinMap::identity(f, vd),
        );
        extra.extend(check_grid(&costab, &[zd + vd], |w| (q.column(w[0]), pi_v.column(w[0]))));
        if !fr.basis[l].is_invertible() {
            extra.push(Violation {
                id: format!("BIJ{l}"),
                instance: None,
                witness: vec![],
                lhs: vec![],
                rhs: vec![],
            });
        }
    }
    rep = rep.merge(ConditionReport::from_violations(extra));
    // E itself must be a crossed module for the iso to mean anything.
    let e_rep = check_crossed_module(&split.e)?.tagged("E");
    Ok(rep.merge(e_rep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::Field;
    use crate::unified_product::build_unified_product;

    #[test]
    fn direct_product_split_has_trivial_datum() {
        let f = Field::Prime(7);
        let mut m = BilMap::zero(f, 2, 2, 2);
        m.set(1, 0, 0, f.one());
        let a = ZinbielAlgebra::new(m).unwrap();
        let w = ZinbielTwoAlgebra::from_algebra_identity(&a);
        let z = ZinbielTwoAlgebra::from_two_vector_space(&LinMap::identity(f, 1));
        let mut d = ExtendingDatum::trivial(z, TwoVectorSpace::new(w.phi.clone()));
        d.star[0] = w.z0.mult.clone();
        d.star[1] = w.z1.mult.clone();
        d.star[2] = w.act.left.clone();
        d.star[3] = w.act.right.clone();
        let e = build_unified_product(&d).unwrap();
        let inc = LinMap::from_ints(f, 3, 1, &[1, 0, 0]);
        let p = LinMap::from_ints(f, 1, 3, &[1, 0, 0]);
        let split = ComplementSplit::new(e.clone(), [inc.clone(), inc], [p.clone(), p]).unwrap();
        let got = extract_datum(&split).unwrap();
        assert_eq!(got, d);
        assert!(verify_psi(&split, &got).unwrap().ok());
    }

    #[test]
    fn empty_v_split() {
        let f = Field::Prime(7);
        let e = ZinbielTwoAlgebra::from_two_vector_space(&LinMap::identity(f, 2));
        let id = LinMap::identity(f, 2);
        let split = ComplementSplit::new(e.clone(), [id.clone(), id.clone()], [id.clone(), id]).unwrap();
        let d = extract_datum(&split).unwrap();
        assert_eq!(d.vdims(), [0, 0]);
        assert_eq!(build_unified_product(&d).unwrap(), e);
        assert!(verify_psi(&split, &d).unwrap().ok());
    }

    #[test]
    fn non_closed_z_is_rejected() {
        // E0 = span(a, b) with a·a = b; Z0 = span(a) is not closed.
        let f = Field::Prime(7);
        let mut m = BilMap::zero(f, 2, 2, 2);
        m.set(1, 0, 0, f.one());
        let e = ZinbielTwoAlgebra::from_algebra_zero(&ZinbielAlgebra::new(m).unwrap());
        let split = ComplementSplit::new(
            e,
            [LinMap::from_ints(f, 2, 1, &[1, 0]), LinMap::zero(f, 0, 0)],
            [LinMap::from_ints(f, 1, 2, &[1, 0]), LinMap::zero(f, 0, 0)],
        )
        .unwrap();
        assert!(matches!(extract_datum(&split), Err(Error::Subalgebra { .. })));
    }
}
