//! Crossed products (⊳ⱼ = ⊲ⱼ = 0) and bicrossed products (ωⱼ = 0, σ = 0), the ideal
//! criterion and factorization through two complementary sub-2-algebras.

use crate::conditions::{self, CheckOptions, ListId};
use crate::error::Error;
use crate::exact_linear::{BilMap, LinMap, TwoVectorSpace};
use crate::report::ConditionReport;
use crate::unified_product::{ComplementSplit, ExtendingDatum, Frame, MapKind, LEVELS, OP_NAMES};
use crate::zinbiel_core::{
    check_2alg_morphism, check_crossed_module, BimodulePair, TwoMorphism, ZinbielAlgebra, ZinbielTwoAlgebra,
};

/// An extending datum without ⊳ⱼ and ⊲ⱼ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedSystem {
    pub z: ZinbielTwoAlgebra,
    pub v: TwoVectorSpace,
    pub harpoon_r: [BilMap; 4],
    pub harpoon_l: [BilMap; 4],
    pub omega: [BilMap; 4],
    pub star: [BilMap; 4],
    pub sigma: LinMap,
}

/// Two full 2-algebras Z and V with mutual actions ⇀ⱼ, ↼ⱼ, ⊳ⱼ, ⊲ⱼ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairDatum {
    pub z: ZinbielTwoAlgebra,
    pub v: ZinbielTwoAlgebra,
    pub harpoon_r: [BilMap; 4],
    pub harpoon_l: [BilMap; 4],
    pub tri_r: [BilMap; 4],
    pub tri_l: [BilMap; 4],
}

/// V's products as the *ⱼ maps of a datum, indexed like the other families.
fn v_products(v: &ZinbielTwoAlgebra) -> [BilMap; 4] {
    [v.z0.mult.clone(), v.z1.mult.clone(), v.act.left.clone(), v.act.right.clone()]
}

/// (V₁, V₀, d, *ⱼ) read as a candidate 2-algebra.
pub fn star_algebra(v: &TwoVectorSpace, star: &[BilMap; 4]) -> ZinbielTwoAlgebra {
    ZinbielTwoAlgebra {
        z1: ZinbielAlgebra { dim: v.dim1, mult: star[1].clone() },
        z0: ZinbielAlgebra { dim: v.dim0, mult: star[0].clone() },
        phi: v.d.clone(),
        act: BimodulePair { left: star[2].clone(), right: star[3].clone() },
    }
}

impl CrossedSystem {
    /// The system with every map zero.
    pub fn trivial(z: ZinbielTwoAlgebra, v: TwoVectorSpace) -> Self {
        Self::from_datum(&ExtendingDatum::trivial(z, v)).unwrap()
    }

    pub fn embed(&self) -> ExtendingDatum {
        let mut d = ExtendingDatum::trivial(self.z.clone(), self.v.clone());
        d.harpoon_r = self.harpoon_r.clone();
        d.harpoon_l = self.harpoon_l.clone();
        d.omega = self.omega.clone();
        d.star = self.star.clone();
        d.sigma = self.sigma.clone();
        d
    }

    /// Fails with a shape error when some ⊳ⱼ or ⊲ⱼ is nonzero.
    pub fn from_datum(d: &ExtendingDatum) -> Result<Self, Error> {
        d.check_dims()?;
        for kind in [MapKind::TriR, MapKind::TriL] {
            if !d.maps_zero(kind) {
                return Err(Error::Shape(format!("a crossed system has no {} maps", kind.json_name())));
            }
        }
        Ok(CrossedSystem {
            z: d.z.clone(),
            v: d.v.clone(),
            harpoon_r: d.harpoon_r.clone(),
            harpoon_l: d.harpoon_l.clone(),
            omega: d.omega.clone(),
            star: d.star.clone(),
            sigma: d.sigma.clone(),
        })
    }

    pub fn check_dims(&self) -> Result<(), Error> {
        self.embed().check_dims()
    }
}

impl MatchedPairDatum {
    /// Z and V with no interaction: the direct product.
    pub fn trivial(z: ZinbielTwoAlgebra, v: ZinbielTwoAlgebra) -> Self {
        let d = ExtendingDatum::trivial(z.clone(), TwoVectorSpace::new(v.phi.clone()));
        MatchedPairDatum {
            z,
            v,
            harpoon_r: d.harpoon_r,
            harpoon_l: d.harpoon_l,
            tri_r: d.tri_r,
            tri_l: d.tri_l,
        }
    }

    pub fn embed(&self) -> ExtendingDatum {
        let mut d = ExtendingDatum::trivial(self.z.clone(), TwoVectorSpace::new(self.v.phi.clone()));
        d.harpoon_r = self.harpoon_r.clone();
        d.harpoon_l = self.harpoon_l.clone();
        d.tri_r = self.tri_r.clone();
        d.tri_l = self.tri_l.clone();
        d.star = v_products(&self.v);
        d
    }

    /// Fails with a shape error when some ωⱼ or σ is nonzero.
    pub fn from_datum(d: &ExtendingDatum) -> Result<Self, Error> {
        d.check_dims()?;
        if !d.maps_zero(MapKind::Omega) || !d.sigma.is_zero() {
            return Err(Error::Shape("a matched pair has no omega or sigma".into()));
        }
        Ok(MatchedPairDatum {
            z: d.z.clone(),
            v: star_algebra(&d.v, &d.star),
            harpoon_r: d.harpoon_r.clone(),
            harpoon_l: d.harpoon_l.clone(),
            tri_r: d.tri_r.clone(),
            tri_l: d.tri_l.clone(),
        })
    }

    pub fn check_dims(&self) -> Result<(), Error> {
        self.v.check_dims()?;
        self.embed().check_dims()
    }
}

/// Places each (map, kind) at its block of the product-j tensor on Z ⊕ V.
fn assemble(zd: [usize; 2], vd: [usize; 2], j: usize, zop: &BilMap, parts: &[(MapKind, &BilMap)]) -> BilMap {
    let (la, lb, lo) = LEVELS[j];
    let f = zop.field();
    let mut t = BilMap::zero(f, zd[la] + vd[la], zd[lb] + vd[lb], zd[lo] + vd[lo]);
    zop.add_block_into(&mut t, 0, 0, 0);
    for (kind, m) in parts {
        let (a, b, c) = kind.shape();
        let off = |is_v: bool, l: usize| if is_v { zd[l] } else { 0 };
        m.add_block_into(&mut t, off(a, la), off(b, lb), off(c, lo));
    }
    t
}

fn assemble_all(
    z: &ZinbielTwoAlgebra,
    vd: [usize; 2],
    parts: impl Fn(usize) -> Vec<(MapKind, BilMap)>,
    phi: LinMap,
) -> ZinbielTwoAlgebra {
    let zd = [z.z0.dim, z.z1.dim];
    let zops = [&z.z0.mult, &z.z1.mult, &z.act.left, &z.act.right];
    let t: Vec<BilMap> = (0..4)
        .map(|j| {
            let p = parts(j);
            let refs: Vec<(MapKind, &BilMap)> = p.iter().map(|(k, m)| (*k, m)).collect();
            assemble(zd, vd, j, zops[j], &refs)
        })
        .collect();
    ZinbielTwoAlgebra {
        z1: ZinbielAlgebra { dim: zd[1] + vd[1], mult: t[1].clone() },
        z0: ZinbielAlgebra { dim: zd[0] + vd[0], mult: t[0].clone() },
        phi,
        act: BimodulePair { left: t[2].clone(), right: t[3].clone() },
    }
}

/// Z # V: products (x, u)·(y, v) = (x·y + x↼v + u⇀y + ω(u, v), u*v).
pub fn build_crossed_product(cs: &CrossedSystem) -> Result<ZinbielTwoAlgebra, Error> {
    cs.check_dims()?;
    let f = cs.z.field();
    let phi = LinMap::block(&cs.z.phi, &cs.sigma, &LinMap::zero(f, cs.v.dim0, cs.z.z1.dim), &cs.v.d);
    Ok(assemble_all(
        &cs.z,
        [cs.v.dim0, cs.v.dim1],
        |j| {
            vec![
                (MapKind::HarpoonL, cs.harpoon_l[j].clone()),
                (MapKind::HarpoonR, cs.harpoon_r[j].clone()),
                (MapKind::Omega, cs.omega[j].clone()),
                (MapKind::Star, cs.star[j].clone()),
            ]
        },
        phi,
    ))
}

/// Z ⋈ V: products (x, u)·(y, v) = (x·y + x↼v + u⇀y, x⊳v + u⊲y + u·v).
pub fn build_bicrossed_product(mp: &MatchedPairDatum) -> Result<ZinbielTwoAlgebra, Error> {
    mp.check_dims()?;
    let f = mp.z.field();
    let (n1, n0) = mp.v.dims();
    let phi = LinMap::block(&mp.z.phi, &LinMap::zero(f, mp.z.z0.dim, n1), &LinMap::zero(f, n0, mp.z.z1.dim), &mp.v.phi);
    let vp = v_products(&mp.v);
    Ok(assemble_all(
        &mp.z,
        [n0, n1],
        |j| {
            vec![
                (MapKind::HarpoonL, mp.harpoon_l[j].clone()),
                (MapKind::HarpoonR, mp.harpoon_r[j].clone()),
                (MapKind::TriR, mp.tri_r[j].clone()),
                (MapKind::TriL, mp.tri_l[j].clone()),
                (MapKind::Star, vp[j].clone()),
            ]
        },
        phi,
    ))
}

fn require_valid(t: &ZinbielTwoAlgebra, what: &str) -> Result<(), Error> {
    let rep = check_crossed_module(t)?;
    if !rep.ok() {
        return Err(Error::Precondition { what: format!("{what} is not a Zinbiel 2-algebra"), report: Box::new(rep) });
    }
    Ok(())
}

/// (CZ1)–(CZ61) plus the axioms of (V, d, *ⱼ), the latter tagged "V".
pub fn check_crossed_system(cs: &CrossedSystem) -> Result<ConditionReport, Error> {
    check_crossed_system_with(cs, &CheckOptions::default())
}

pub fn check_crossed_system_with(cs: &CrossedSystem, opts: &CheckOptions) -> Result<ConditionReport, Error> {
    cs.check_dims()?;
    require_valid(&cs.z, "Z")?;
    let rep = conditions::check_list(ListId::CZ, &cs.embed(), opts);
    let side = check_crossed_module(&star_algebra(&cs.v, &cs.star))?.tagged("V");
    Ok(rep.merge(side).cap(opts.cap))
}

/// (BZ1)–(BZ106). Z and V must both be valid.
pub fn check_matched_pair(mp: &MatchedPairDatum) -> Result<ConditionReport, Error> {
    check_matched_pair_with(mp, &CheckOptions::default())
}

pub fn check_matched_pair_with(mp: &MatchedPairDatum, opts: &CheckOptions) -> Result<ConditionReport, Error> {
    mp.check_dims()?;
    require_valid(&mp.z, "Z")?;
    require_valid(&mp.v, "V")?;
    Ok(conditions::check_list(ListId::BZ, &mp.embed(), opts))
}

/// Reads off the crossed system of E when the split's Z is an ideal.
///
/// Ideal means: every product or action with at least one argument in Z lands in Z.
pub fn check_ideal_extension(split: &ComplementSplit) -> Result<CrossedSystem, Error> {
    split.validate()?;
    require_valid(&split.e, "E")?;
    let fr = split.frame();
    let a = fr.adapt(&split.e)?;
    let zd = a.zd;
    for (j, t) in a.tensors.iter().enumerate() {
        let (la, lb, lo) = LEVELS[j];
        for (&(k, i, l), _) in t.entries() {
            if k >= zd[lo] && (i < zd[la] || l < zd[lb]) {
                return Err(Error::NotAnIdeal { op: OP_NAMES[j].to_string(), witness: vec![i + 1, l + 1] });
            }
        }
    }
    if let Some(w) = a.phi_escape() {
        return Err(Error::Subalgebra { op: "φ".into(), witness: w });
    }
    CrossedSystem::from_datum(&a.datum())
}

fn inclusion_frame(
    e: &ZinbielTwoAlgebra,
    iota_z: &[LinMap; 2],
    iota_v: &[LinMap; 2],
) -> Result<Frame, Error> {
    let f = e.field();
    let edims = [e.z0.dim, e.z1.dim];
    let mut basis = [LinMap::zero(f, 0, 0), LinMap::zero(f, 0, 0)];
    for l in 0..2 {
        if iota_z[l].rows() != edims[l] || iota_v[l].rows() != edims[l] {
            return Err(Error::Shape(format!("inclusions at level {l} must land in E{l}")));
        }
        let cols: Vec<_> = (0..iota_z[l].cols())
            .map(|c| iota_z[l].column(c))
            .chain((0..iota_v[l].cols()).map(|c| iota_v[l].column(c)))
            .collect();
        let m = LinMap::from_columns(f, edims[l], &cols);
        if cols.len() != edims[l] || !m.is_invertible() {
            return Err(Error::NotComplementary { level: l, rank: m.rank(), expected: edims[l] });
        }
        basis[l] = m;
    }
    Ok(Frame::from_basis(basis, [iota_z[0].cols(), iota_z[1].cols()]).expect("checked invertible"))
}

/// Writes E as Z ⋈ V for complementary sub-2-algebras with the given inclusions.
pub fn factorize(
    e: &ZinbielTwoAlgebra,
    iota_z: &[LinMap; 2],
    iota_v: &[LinMap; 2],
) -> Result<MatchedPairDatum, Error> {
    e.check_dims()?;
    let fr = inclusion_frame(e, iota_z, iota_v)?;
    let a = fr.adapt(e)?;
    for j in 0..4 {
        if let Some(w) = a.z_escape(j) {
            return Err(Error::NotSubalgebra { factor: "Z".into(), op: OP_NAMES[j].into(), witness: w });
        }
    }
    if let Some(w) = a.phi_escape() {
        return Err(Error::NotSubalgebra { factor: "Z".into(), op: "φ".into(), witness: w });
    }
    let d = a.datum();
    for j in 0..4 {
        if let Some((&(_, i, l), _)) = d.omega[j].entries().next() {
            return Err(Error::ObstructionNonzero { map: format!("omega_{j}"), witness: vec![i + 1, l + 1] });
        }
    }
    if let Some((r, c, _)) = d.sigma.entries().next() {
        return Err(Error::ObstructionNonzero { map: "sigma".into(), witness: vec![c + 1, r + 1] });
    }
    MatchedPairDatum::from_datum(&d)
}

/// Checks that (x, u) ↦ ι_Z(x) + ι_V(u) is an isomorphism Z ⋈ V → E.
pub fn verify_factorization(
    e: &ZinbielTwoAlgebra,
    iota_z: &[LinMap; 2],
    iota_v: &[LinMap; 2],
    mp: &MatchedPairDatum,
) -> Result<ConditionReport, Error> {
    let fr = inclusion_frame(e, iota_z, iota_v)?;
    let built = build_bicrossed_product(mp)?;
    let psi = TwoMorphism { phi1: fr.basis[1].clone(), phi0: fr.basis[0].clone() };
    check_2alg_morphism(&built, e, &psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::Field;
    use crate::unified_product::build_unified_product;

    fn line_algebra(f: Field) -> ZinbielTwoAlgebra {
        let mut m = BilMap::zero(f, 2, 2, 2);
        m.set(1, 0, 0, f.one());
        ZinbielTwoAlgebra::from_algebra_identity(&ZinbielAlgebra::new(m).unwrap())
    }

    #[test]
    fn trivial_crossed_system_with_valid_v_is_the_direct_product() {
        let f = Field::Prime(5);
        let z = ZinbielTwoAlgebra::from_two_vector_space(&LinMap::identity(f, 1));
        let w = line_algebra(f);
        let mut cs = CrossedSystem::trivial(z.clone(), TwoVectorSpace::new(w.phi.clone()));
        cs.star = v_products(&w);
        assert!(check_crossed_system(&cs).unwrap().ok());
        let e = build_crossed_product(&cs).unwrap();
        assert_eq!(e, build_unified_product(&cs.embed()).unwrap());
        assert!(check_crossed_module(&e).unwrap().ok());
        let mp = MatchedPairDatum::trivial(z, w);
        assert!(check_matched_pair(&mp).unwrap().ok());
        assert_eq!(build_bicrossed_product(&mp).unwrap(), e);
    }

    #[test]
    fn crossed_system_side_condition_is_reported() {
        let f = Field::Prime(5);
        let z = ZinbielTwoAlgebra::from_two_vector_space(&LinMap::zero(f, 1, 0));
        let mut cs = CrossedSystem::trivial(z, TwoVectorSpace::zero_map(f, 0, 1));
        cs.star[0].set(0, 0, 0, f.one());
        let rep = check_crossed_system(&cs).unwrap();
        assert_eq!(rep.ids(), ["ZIN"]);
        assert_eq!(rep.violations[0].instance.as_deref(), Some("V, Z0"));
    }

    #[test]
    fn direct_product_factorizes_trivially() {
        let f = Field::Prime(5);
        let z = ZinbielTwoAlgebra::from_two_vector_space(&LinMap::identity(f, 1));
        let w = line_algebra(f);
        let mp = MatchedPairDatum::trivial(z, w);
        let e = build_bicrossed_product(&mp).unwrap();
        let iz = LinMap::from_ints(f, 3, 1, &[1, 0, 0]);
        let iv = LinMap::from_ints(f, 3, 2, &[0, 0, 1, 0, 0, 1]);
        let got = factorize(&e, &[iz.clone(), iz.clone()], &[iv.clone(), iv.clone()]).unwrap();
        assert_eq!(got, mp);
        assert!(verify_factorization(&e, &[iz.clone(), iz], &[iv.clone(), iv], &got).unwrap().ok());
    }

    #[test]
    fn overlapping_factors_are_not_complementary() {
        let f = Field::Prime(5);
        let e = line_algebra(f);
        let i = LinMap::from_ints(f, 2, 1, &[1, 0]);
        let err = factorize(&e, &[i.clone(), i.clone()], &[i.clone(), i]).unwrap_err();
        assert!(matches!(err, Error::NotComplementary { level: 0, rank: 1, expected: 2 }));
    }

    #[test]
    fn omega_blocks_factorization() {
        // Z0 = span(e), V0 = span(u) with u·u = e: V is not closed.
        let f = Field::Prime(5);
        let z = ZinbielTwoAlgebra::from_two_vector_space(&LinMap::zero(f, 1, 0));
        let mut cs = CrossedSystem::trivial(z, TwoVectorSpace::zero_map(f, 0, 1));
        cs.omega[0].set(0, 0, 0, f.one());
        let e = build_crossed_product(&cs).unwrap();
        assert!(check_crossed_module(&e).unwrap().ok());
        let iz = [LinMap::from_ints(f, 2, 1, &[1, 0]), LinMap::zero(f, 0, 0)];
        let iv = [LinMap::from_ints(f, 2, 1, &[0, 1]), LinMap::zero(f, 0, 0)];
        let err = factorize(&e, &iz, &iv).unwrap_err();
        assert!(matches!(err, Error::ObstructionNonzero { ref map, .. } if map == "omega_0"));
        // Z is an ideal, so the split is a crossed product again.
        let p = [LinMap::from_ints(f, 1, 2, &[1, 0]), LinMap::zero(f, 0, 0)];
        let split = ComplementSplit::new(e, iz, p).unwrap();
        assert_eq!(check_ideal_extension(&split).unwrap(), cs);
    }

    #[test]
    fn non_ideal_is_rejected() {
        // Z0 = span(x), V0 = span(u1, u2) with x ⊳0 u1 = u2: Z is a subalgebra, not an ideal.
        let f = Field::Prime(5);
        let z = ZinbielTwoAlgebra::from_two_vector_space(&LinMap::zero(f, 1, 0));
        let v = ZinbielTwoAlgebra::from_two_vector_space(&LinMap::zero(f, 2, 0));
        let mut mp = MatchedPairDatum::trivial(z, v);
        mp.tri_r[0].set(1, 0, 0, f.one());
        assert!(check_matched_pair(&mp).unwrap().ok());
        let e = build_bicrossed_product(&mp).unwrap();
        assert!(check_crossed_module(&e).unwrap().ok());
        let iz = [LinMap::from_ints(f, 3, 1, &[1, 0, 0]), LinMap::zero(f, 0, 0)];
        let p = [LinMap::from_ints(f, 1, 3, &[1, 0, 0]), LinMap::zero(f, 0, 0)];
        let split = ComplementSplit::new(e, iz, p).unwrap();
        let err = check_ideal_extension(&split).unwrap_err();
        assert!(matches!(err, Error::NotAnIdeal { ref op, ref witness } if op == "∘0" && *witness == vec![1, 2]));
    }
}
