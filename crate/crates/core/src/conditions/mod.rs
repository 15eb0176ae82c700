//! The printed condition lists, compiled from their textual form and evaluated on basis tuples.

pub mod audit;
pub mod dsl;
mod tables;

use std::sync::OnceLock;

use dsl::{compile_equation, parse, BilRef, Env, Equation, Kind, LinRef, Space};

use crate::exact_linear::{BilMap, Field, LinMap};
use crate::par;
use crate::report::{ConditionReport, TypoFlag, Violation, DEFAULT_VIOLATION_CAP};
use crate::unified_product::ExtendingDatum;
use crate::zinbiel_core::check_grid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ListId {
    /// General extending data.
    Z,
    /// Z₁ = 0.
    ZZ,
    /// Crossed products.
    CZ,
    /// Bicrossed products.
    BZ,
    /// Morphisms between unified products fixing Z.
    H,
}

impl ListId {
    pub const ALL: [ListId; 5] = [ListId::Z, ListId::ZZ, ListId::CZ, ListId::BZ, ListId::H];

    fn raw(self) -> &'static [(&'static str, &'static str)] {
        match self {
            ListId::Z => tables::Z_LIST,
            ListId::ZZ => tables::ZZ_LIST,
            ListId::CZ => tables::CZ_LIST,
            ListId::BZ => tables::BZ_LIST,
            ListId::H => tables::H_LIST,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Corrected forms of printed conditions that are malformed or disagree with the axioms.
const CORRECTIONS: &[(&str, &str, &str)] = &[
    (
        "Z26",
        "om2(u0, u1) |>1 v1 + (u0 *2 u1) *1 v1=u0 <|2 ( om1(u1, v1)+ om1(v1, u1)) + u0 *2 (u1 *1 v1+v1 *1 u1)",
        "unbalanced parenthesis",
    ),
    ("Z108", "d(u1 *3 u0)= sig(u1) |>0 u0 + d(u1) *0 u0", "unbalanced parenthesis"),
    (
        "ZZ12",
        "om0(u0, v0) |>0 w0+(u0 *0 v0) *0 w0 =u0 <|0 ( om0(v0, w0)+ om0(w0,v0))+u0 *0 (v0 *0 w0+w0 *0 v0)",
        "stray token inside the ⊲0 argument",
    ),
    ("ZZ14", "(u0 *2 u1) *1 v1=u0 *2 (u1 *1 v1+v1 *1 u1)", "unbalanced parenthesis"),
    (
        "ZZ19",
        "(u1 <|3 x0) *3 u0=u1 <|3 (x0 <-0 u0+u0 ->0 x0)+u1 *3 (x0 |>0 u0+u0 <|0 x0)",
        "missing the term u1 ⊲3 (x0 ↼0 u0 + u0 ⇀0 x0)",
    ),
    ("ZZ38", "d(u1 *3 u0)= sig(u1) |>0 u0 + d(u1) *0 u0", "unbalanced parenthesis"),
    ("BZ94", "d(u1 *3 u0)= sig(u1) |>0 u0 + d(u1) *0 u0", "unbalanced parenthesis"),
    ("H6", "si(ui *i vi)=ri(ui) |>'i si(vi)+si(ui) <|'i ri(vi)+ si(ui) *'i si(vi)", "unbalanced parenthesis"),
    (
        "H7",
        "phi(r1(u1)) + sig'(s1(u1)) = sig(u1) + r0(d(u1))",
        "σ' must be applied to s1(u1); the printed σ'(x1) term is ill-typed",
    ),
    ("H8", "d'(s1(u1)) = s0(d(u1))", "the differential on the left is that of V'"),
    (
        "H14",
        "s1(u0 *2 u1)-r0(u0) |>'2 s1(u1)-s0(u0) <|'2 r1(u1) -s0(u0) *'2 s1(u1)=0",
        "unbalanced parenthesis",
    ),
    (
        "H20",
        "s1(u1 *3 u0)=r1(u1) |>'3 s0(u0)+s1(u1) <|'3 r0(u0) + s1(u1) *'3 s0(u0)",
        "unbalanced parenthesis",
    ),
];

/// One compiled equation and its instance label (`i=0`, `eq2`, ...).
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: Option<String>,
    pub eq: Equation,
}

#[derive(Clone, Debug)]
pub struct Condition {
    pub id: &'static str,
    pub printed: &'static str,
    /// Corrected text and the reason, when the printed form is not used.
    pub fix: Option<(&'static str, &'static str)>,
    /// What is evaluated: the corrected form if any, else the printed one.
    pub instances: Vec<Instance>,
    /// The printed form, compiled for comparison when a fix exists.
    pub printed_instances: Option<Result<Vec<Instance>, String>>,
}

/// Parses, expands `i` to 0 and 1, and typechecks a condition.
pub fn compile_text(text: &str, two_data: bool) -> Result<Vec<Instance>, String> {
    let eqs = parse(text).map_err(|e| e.to_string())?;
    let multi = eqs.len() > 1;
    let mut out = Vec::new();
    for (k, (l, r)) in eqs.iter().enumerate() {
        let part = multi.then(|| format!("eq{}", k + 1));
        if l.is_generic() || r.is_generic() {
            for lvl in ['0', '1'] {
                let eq = compile_equation(&l.instantiate(lvl), &r.instantiate(lvl), two_data)?;
                let tag = format!("i={lvl}");
                let label = match &part {
                    Some(p) => format!("{p}, {tag}"),
                    None => tag,
                };
                out.push(Instance { label: Some(label), eq });
            }
        } else {
            out.push(Instance { label: part.clone(), eq: compile_equation(l, r, two_data)? });
        }
    }
    Ok(out)
}

fn compile_list(list: ListId) -> Vec<Condition> {
    let two = list == ListId::H;
    list.raw()
        .iter()
        .map(|&(id, printed)| {
            let fix = CORRECTIONS.iter().find(|c| c.0 == id).map(|c| (c.1, c.2));
            let text = fix.map_or(printed, |f| f.0);
            let instances = compile_text(text, two).unwrap_or_else(|e| panic!("condition {id}: {e}"));
            let printed_instances = fix.map(|_| compile_text(printed, two));
            Condition { id, printed, fix, instances, printed_instances }
        })
        .collect()
}

/// The compiled list, built once.
pub fn conditions(list: ListId) -> &'static [Condition] {
    static CACHE: OnceLock<Vec<Vec<Condition>>> = OnceLock::new();
    &CACHE.get_or_init(|| ListId::ALL.iter().map(|&l| compile_list(l)).collect())[list.index()]
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub cap: usize,
    /// Also evaluate the printed form of corrected conditions and flag disagreements.
    pub compare_printed: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { cap: DEFAULT_VIOLATION_CAP, compare_printed: true }
    }
}

fn run_instances<E: Env>(id: &str, insts: &[Instance], env: &E) -> Vec<Violation> {
    let mut out = Vec::new();
    for inst in insts {
        let eq = &inst.eq;
        let dims = eq.dims(env);
        let f = env.field();
        let mut vs = check_grid(id, &dims, |w| {
            let vals: Vec<_> = w
                .iter()
                .zip(&dims)
                .map(|(&i, &n)| crate::exact_linear::basis(f, n, i))
                .collect();
            eq.sides(env, &vals)
        });
        for v in &mut vs {
            v.instance = inst.label.clone();
        }
        out.extend(vs);
    }
    out
}

/// Evaluates every condition of `list` against `env`.
pub fn evaluate<E: Env>(list: ListId, env: &E, opts: &CheckOptions) -> ConditionReport {
    let per = par::map_slice(conditions(list), |c| {
        let vs = run_instances(c.id, &c.instances, env);
        let mut flags = Vec::new();
        if let (true, Some((_, note)), Some(Ok(printed))) = (opts.compare_printed, c.fix, &c.printed_instances) {
            let printed_ok = run_instances(c.id, printed, env).is_empty();
            if printed_ok != vs.is_empty() {
                let verdict = |ok: bool| if ok { "holds" } else { "fails" };
                flags.push(TypoFlag {
                    id: c.id.to_string(),
                    instance: None,
                    note: format!(
                        "printed form {} but corrected form {} ({note})",
                        verdict(printed_ok),
                        verdict(vs.is_empty())
                    ),
                });
            }
        }
        (vs, flags)
    });
    let mut rep = ConditionReport::default();
    for (vs, flags) in per {
        rep.violations.extend(vs);
        rep.typo_suspects.extend(flags);
    }
    rep.conforming_field = !matches!(env.field(), Field::Prime(2 | 3));
    rep.canonicalize();
    rep.cap(opts.cap)
}

/// A single extending datum as an evaluation environment.
pub struct DatumEnv<'a> {
    pub d: &'a ExtendingDatum,
}

fn z_bil(d: &ExtendingDatum, b: BilRef) -> Option<&BilMap> {
    Some(match b {
        BilRef::ZMult(0) => &d.z.z0.mult,
        BilRef::ZMult(_) => &d.z.z1.mult,
        BilRef::ZLeft => &d.z.act.left,
        BilRef::ZRight => &d.z.act.right,
        BilRef::Datum { .. } => return None,
    })
}

fn z_dim(d: &ExtendingDatum, s: Space) -> Option<usize> {
    match s.kind {
        Kind::Z => Some(d.zdims()[s.level as usize]),
        Kind::V => Some(d.vdims()[s.level as usize]),
        Kind::W => None,
    }
}

impl Env for DatumEnv<'_> {
    fn field(&self) -> Field {
        self.d.field()
    }
    fn dim(&self, s: Space) -> usize {
        z_dim(self.d, s).expect("single-datum condition")
    }
    fn bil(&self, b: BilRef) -> &BilMap {
        match b {
            BilRef::Datum { kind, j, .. } => self.d.map(kind, j as usize),
            _ => z_bil(self.d, b).unwrap(),
        }
    }
    fn lin(&self, l: LinRef) -> &LinMap {
        match l {
            LinRef::Phi => &self.d.z.phi,
            LinRef::Sigma { .. } => &self.d.sigma,
            LinRef::D { .. } => &self.d.v.d,
            _ => panic!("single-datum condition uses {l:?}"),
        }
    }
}

/// Two data over the same Z and the maps r: V → Z, s: V → V' of a candidate morphism.
pub struct MorphismEnv<'a> {
    pub d1: &'a ExtendingDatum,
    pub d2: &'a ExtendingDatum,
    pub r: &'a [LinMap; 2],
    pub s: &'a [LinMap; 2],
}

impl Env for MorphismEnv<'_> {
    fn field(&self) -> Field {
        self.d1.field()
    }
    fn dim(&self, s: Space) -> usize {
        z_dim(self.d1, s).unwrap_or_else(|| self.d2.vdims()[s.level as usize])
    }
    fn bil(&self, b: BilRef) -> &BilMap {
        match b {
            BilRef::Datum { kind, j, second } => (if second { self.d2 } else { self.d1 }).map(kind, j as usize),
            _ => z_bil(self.d1, b).unwrap(),
        }
    }
    fn lin(&self, l: LinRef) -> &LinMap {
        match l {
            LinRef::Phi => &self.d1.z.phi,
            LinRef::Sigma { second } => &(if second { self.d2 } else { self.d1 }).sigma,
            LinRef::D { second } => &(if second { self.d2 } else { self.d1 }).v.d,
            LinRef::R(l) => &self.r[l as usize],
            LinRef::S(l) => &self.s[l as usize],
        }
    }
}

/// Evaluates a single-datum list (Z, ZZ, CZ or BZ) on `d`. No preconditions are checked here.
pub fn check_list(list: ListId, d: &ExtendingDatum, opts: &CheckOptions) -> ConditionReport {
    assert!(list != ListId::H, "the H list needs two data");
    evaluate(list, &DatumEnv { d }, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_list_compiles() {
        let counts: Vec<usize> = ListId::ALL.iter().map(|&l| conditions(l).len()).collect();
        assert_eq!(counts, vec![120, 40, 61, 106, 20]);
    }

    #[test]
    fn printed_forms_that_fail_to_compile_are_exactly_the_corrected_ones() {
        for list in ListId::ALL {
            for c in conditions(list) {
                let printed = compile_text(c.printed, list == ListId::H);
                if c.fix.is_none() {
                    assert!(printed.is_ok(), "{}: {:?}", c.id, printed.err());
                }
            }
        }
        let broken: Vec<&str> = ListId::ALL
            .iter()
            .flat_map(|&l| conditions(l))
            .filter(|c| matches!(c.printed_instances, Some(Err(_))))
            .map(|c| c.id)
            .collect();
        assert_eq!(broken, ["Z26", "Z108", "ZZ12", "ZZ14", "ZZ38", "BZ94", "H6", "H7", "H8", "H14", "H20"]);
    }

    #[test]
    fn generic_conditions_expand_to_two_levels() {
        let z1 = &conditions(ListId::Z)[0];
        assert_eq!(z1.instances.len(), 6);
        assert_eq!(z1.instances[5].label.as_deref(), Some("eq3, i=1"));
    }
}
