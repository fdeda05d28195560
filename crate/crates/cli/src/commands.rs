use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use hom_leibniz::cohomology::{apply_d1, apply_d2, check_2_cocycle, Cochain2, Complex, D0Strategy, Dims};
use hom_leibniz::deform::{
    check_formal_deformation, check_infinitesimal_deformation, deformation_from_nijenhuis, is_nijenhuis,
    is_trivial_deformation, nijenhuis_cochain, DeformationData,
};
use hom_leibniz::dialg::{check_left_dialgebra, check_symmetric, dialgebra_from_lm, symmetric_lm_products};
use hom_leibniz::extensions::{
    are_equivalent, canonical_splitting, check_extension, extension_from_cocycle, extract_cocycle,
    induced_representation, AbelianExtension,
};
use hom_leibniz::homcore::{check_left_hom_leibniz, check_right_hom_leibniz};
use hom_leibniz::lmcat::{
    adjoint_representation, check_lm_object, check_lm_representation, check_via_semidirect_hom, tensor_square_lm,
    LmObject, LmRepresentation,
};
use hom_leibniz::{Error, Matrix};

use crate::instance::{CochainSection, InstanceFile, InputError, PairSection, RepSection};
use crate::report::{Check, Report};
use crate::Common;

pub enum Failure {
    /// Unreadable or malformed input: exit 2.
    Input(String),
    /// A refusal by the mathematics (for instance an invalid object where a
    /// valid one is required): exit 1.
    Math(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Shape(_) | Error::Parse(_) | Error::DegreeOutOfRange(_) => Failure::Input(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

type Res<T> = Result<T, Failure>;

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

struct Ctx<'a> {
    args: &'a Common,
    file: InstanceFile,
    object: LmObject,
}

impl Ctx<'_> {
    /// `--rep`, then the `rep` section; `None` means adjoint coefficients.
    fn explicit_rep(&self) -> Res<Option<LmRepresentation>> {
        let section = match &self.args.rep {
            Some(p) => Some(RepSection::parse(&read(p)?)?),
            None => None,
        };
        match section.as_ref().or(self.file.rep.as_ref()) {
            Some(s) => Ok(Some(s.build(&self.object)?)),
            None => Ok(None),
        }
    }

    fn rep(&self) -> Res<LmRepresentation> {
        match self.explicit_rep()? {
            Some(r) => Ok(r),
            None => Ok(adjoint_representation(&self.object)?),
        }
    }

    fn embedded_cochain(&self, r: &LmRepresentation) -> Res<Cochain2> {
        let s = self.file.cochain.as_ref().ok_or_else(|| Failure::Input("the instance has no cochain section".into()))?;
        Ok(s.build(Dims::of(&self.object, r), "cochain")?)
    }

    fn flag_cochain(&self, r: &LmRepresentation) -> Res<Option<Cochain2>> {
        match &self.args.cochain {
            Some(p) => Ok(Some(CochainSection::parse(&read(p)?)?.build(Dims::of(&self.object, r), "cochain")?)),
            None => Ok(None),
        }
    }

    /// `--cochain`, then the `cochain` section.
    fn cochain(&self, r: &LmRepresentation) -> Res<Cochain2> {
        match self.flag_cochain(r)? {
            Some(c) => Ok(c),
            None => self.embedded_cochain(r),
        }
    }

    fn pair(&self) -> Res<hom_leibniz::deform::NijenhuisPair> {
        let flag = match &self.args.pair {
            Some(p) => Some(PairSection::parse(&read(p)?)?),
            None => None,
        };
        let section = flag.as_ref().or(self.file.pair.as_ref());
        let section = section.ok_or_else(|| Failure::Input("no pair: pass --pair or add a pair section".into()))?;
        Ok(section.build(&self.object)?)
    }
}

/// Reports the object checks and returns whether the object is valid;
/// commands that need a valid object stop there otherwise.
fn gate(rep: &mut Report, o: &LmObject) -> bool {
    let r = check_lm_object(o);
    let ok = r.passed();
    if !ok {
        rep.absorb("object", &r);
    }
    ok
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(|c| Value::String(c.to_string())).collect())).collect())
}

pub fn run(command: &str, args: &Common) -> Res<Report> {
    let text = read(&args.instance)?;
    let digest = format!("{:x}", Sha256::digest(text.as_bytes()));
    let file = InstanceFile::parse(&text)?;
    let object = file.object()?;
    let cx = Ctx { args, file, object };
    let mut rep = Report::new(command, digest);
    rep.number("dims", json!({"g": cx.object.n(), "M": cx.object.m()}));
    match command {
        "check" => check(&cx, &mut rep)?,
        "tensor-square" => tensor_square(&cx, &mut rep)?,
        _ if !gate(&mut rep, &cx.object) => {}
        "cohomology" => cohomology(&cx, &mut rep)?,
        "cocycle" => cocycle(&cx, &mut rep)?,
        "deform" => deform(&cx, &mut rep)?,
        "nijenhuis" => nijenhuis(&cx, &mut rep)?,
        "dialgebra" => dialgebra(&cx, &mut rep)?,
        "extend" => extend(&cx, &mut rep)?,
        "equivalent" => equivalent(&cx, &mut rep)?,
        other => return Err(Failure::Input(format!("unknown command {other}"))),
    }
    Ok(rep)
}

fn check(cx: &Ctx, rep: &mut Report) -> Res<()> {
    let o = &cx.object;
    rep.absorb("object", &check_lm_object(o));
    rep.advise("semidirect", &check_via_semidirect_hom(o));
    if let Some(r) = cx.explicit_rep()? {
        rep.absorb("representation", &check_lm_representation(o, &r));
    }
    Ok(())
}

fn cohomology(cx: &Ctx, rep: &mut Report) -> Res<()> {
    let r = cx.rep()?;
    let c = Complex::new(&cx.object, &r, !cx.args.no_alpha_compat)?;
    let k = cx.args.degree;
    let h = c.cohomology(k, D0Strategy::Zero)?;
    let (d1, d2) = (c.d1()?, c.d2()?);
    rep.push(Check::flag("d2-d1-vanishes", d2.compose(&d1).is_zero()));
    let cdims: Vec<usize> = c.spaces.iter().map(|s| s.dim()).collect();
    rep.number("cochainDims", cdims);
    rep.number("ranks", vec![d1.rank(), d2.rank()]);
    rep.number("alphaCompat", !cx.args.no_alpha_compat);
    rep.number("hDims", json!({ k.to_string(): h.h }));
    rep.number("zDims", json!({ k.to_string(): h.z }));
    rep.number("bDims", json!({ k.to_string(): h.b }));
    Ok(())
}

fn cocycle(cx: &Ctx, rep: &mut Report) -> Res<()> {
    let r = cx.rep()?;
    let c = cx.cochain(&r)?;
    rep.absorb("cocycle", &check_2_cocycle(&cx.object, &r, &c));
    rep.number("d2Vanishes", apply_d2(&cx.object, &r, &c).is_zero());
    Ok(())
}

fn adjoint_cochain(cx: &Ctx) -> Res<(DeformationData, LmRepresentation)> {
    let r = adjoint_representation(&cx.object)?;
    let c = cx.cochain(&r)?;
    Ok((DeformationData::infinitesimal(cx.object.clone(), c), r))
}

fn deform(cx: &Ctx, rep: &mut Report) -> Res<()> {
    let (d, _) = adjoint_cochain(cx)?;
    let inf = check_infinitesimal_deformation(&d)?;
    rep.absorb("cocycle", &inf.cocycle);
    rep.absorb("structure", &inf.structure);
    rep.absorb("deformation", &inf.deformation);
    rep.number("cocycleOK", inf.cocycle_ok());
    rep.number("structureOK", inf.structure_ok());
    rep.number("deformationOK", inf.deformation_ok());
    if let Some(n) = cx.args.order {
        rep.absorb("formal", &check_formal_deformation(&d, n)?);
    }
    Ok(())
}

fn nijenhuis(cx: &Ctx, rep: &mut Report) -> Res<()> {
    let o = &cx.object;
    let p = cx.pair()?;
    let nij = is_nijenhuis(o, &p)?;
    rep.absorb("nijenhuis", &nij);
    let r = adjoint_representation(o)?;
    rep.push(Check::flag("cochain-is-coboundary", nijenhuis_cochain(o, &p)? == apply_d1(o, &r, &p.as_cochain())));
    if nij.passed() {
        let d = deformation_from_nijenhuis(o, &p)?;
        rep.absorb("trivial", &is_trivial_deformation(&d, &p)?);
    }
    Ok(())
}

fn dialgebra(cx: &Ctx, rep: &mut Report) -> Res<()> {
    let o = &cx.object;
    rep.absorb("left-dialgebra", &check_left_dialgebra(&dialgebra_from_lm(o)?));
    let sym = check_symmetric(o);
    rep.number("symmetric", sym.passed());
    if sym.passed() {
        let (l, r) = symmetric_lm_products(o)?;
        rep.absorb("left-product", &check_left_hom_leibniz(&l));
        rep.absorb("right-product", &check_right_hom_leibniz(&r));
    }
    Ok(())
}

fn tensor_square(cx: &Ctx, rep: &mut Report) -> Res<()> {
    let t = tensor_square_lm(&cx.object.algebra)?;
    rep.number("tensorSquareDims", json!({"g": t.n(), "M": t.m()}));
    rep.absorb("tensor-square", &check_lm_object(&t));
    Ok(())
}

/// The extension of a cochain, reporting the cocycle check and the total
/// object check when either refuses.
fn build(rep: &mut Report, prefix: &str, o: &LmObject, r: &LmRepresentation, c: &Cochain2) -> Res<Option<AbelianExtension>> {
    let coc = check_2_cocycle(o, r, c);
    if !coc.passed() {
        rep.absorb(&format!("{prefix}cocycle"), &coc);
        return Ok(None);
    }
    match extension_from_cocycle(o, r, c) {
        Ok(e) => Ok(Some(e)),
        Err(Error::AxiomFailure { context, .. }) if context == "total object" => {
            rep.push(Check::flag(format!("{prefix}total-object"), false));
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

fn extend(cx: &Ctx, rep: &mut Report) -> Res<()> {
    let (o, r) = (&cx.object, cx.rep()?);
    rep.advise("representation", &check_lm_representation(o, &r));
    let c = cx.cochain(&r)?;
    let Some(e) = build(rep, "", o, &r, &c)? else {
        return Ok(());
    };
    rep.absorb("extension", &check_extension(&e));
    let s = canonical_splitting(&e)?;
    rep.push(Check::flag("round-trip", extract_cocycle(&e, &s)? == c));
    rep.push(Check::flag("induced-representation", induced_representation(&e, &s)? == r));
    rep.number("totalDims", json!({"g": e.total.n(), "M": e.total.m()}));
    Ok(())
}

fn equivalent(cx: &Ctx, rep: &mut Report) -> Res<()> {
    let (o, r) = (&cx.object, cx.rep()?);
    let a = cx.embedded_cochain(&r)?;
    let b = cx.flag_cochain(&r)?.ok_or_else(|| Failure::Input("pass the second cochain with --cochain".into()))?;
    let (Some(e1), Some(e2)) = (build(rep, "first/", o, &r, &a)?, build(rep, "second/", o, &r, &b)?) else {
        return Ok(());
    };
    let f = are_equivalent(&e1, &e2, !cx.args.no_alpha_compat)?;
    rep.push(Check::flag("equivalent", f.is_some()));
    if let Some(f) = f {
        rep.number("morphism", json!({"phi0": matrix_json(&f.phi0), "phi1": matrix_json(&f.phi1)}));
    }
    Ok(())
}
