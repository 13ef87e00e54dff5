//! The lax limit of a lax symmetric monoidal functor φ: U → Z — the
//! category of triples (u, z, α: z → φ(u)) — with its tensor structure,
//! the projection-formula morphisms, and the structural dualizability
//! criterion with explicit witness construction.

use std::collections::HashMap;

use crate::duality::{self, DualityDatum};
use crate::error::{Error, Limits, Result};
use crate::fincat::{FinCategory, Functor, MorId, ObjId};
use crate::monoidal::{LaxSMFunctor, SymMonCategory};

/// An object (u, z, α: z → φ(u)) of the lax limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LaxLimitObject {
    pub u: ObjId,
    pub z: ObjId,
    pub alpha: MorId,
}

/// The lax limit as a symmetric monoidal category, with the bookkeeping
/// tying its interned ids back to the components, the projections j*, i*,
/// and copies of the boundary data.
#[derive(Debug, Clone)]
pub struct LaxLimitCategory {
    pub cat: SymMonCategory,
    /// Component data of object `i` of `cat`.
    pub objects: Vec<LaxLimitObject>,
    /// Component pair (f in U, g in Z) of morphism `m` of `cat`.
    pub mor_pairs: Vec<(MorId, MorId)>,
    pub dom: SymMonCategory,
    pub cod: SymMonCategory,
    pub phi: LaxSMFunctor,
    /// Projection to U on base categories.
    pub jstar: Functor,
    /// Projection to Z on base categories.
    pub istar: Functor,
    obj_index: HashMap<LaxLimitObject, ObjId>,
    mor_index: HashMap<(ObjId, ObjId, MorId, MorId), MorId>,
}

impl LaxLimitCategory {
    pub fn obj_id(&self, x: &LaxLimitObject) -> Option<ObjId> {
        self.obj_index.get(x).copied()
    }

    pub fn obj(&self, i: ObjId) -> &LaxLimitObject {
        &self.objects[i.idx()]
    }

    /// Morphism of the lax limit with the given endpoints and components.
    pub fn mor_id(&self, src: ObjId, tgt: ObjId, f: MorId, g: MorId) -> Option<MorId> {
        self.mor_index.get(&(src, tgt, f, g)).copied()
    }

    /// The section j_* on objects: u ↦ (u, φ(u), id).
    pub fn j_section_obj(&self, u: ObjId) -> ObjId {
        let fu = self.phi.on_obj(u);
        self.obj_id(&LaxLimitObject { u, z: fu, alpha: self.cod.base.identity(fu) })
            .expect("section objects exist by enumeration")
    }
}

/// Builds the lax limit of φ: U → Z with the pointwise tensor
/// (u, z, α)⊗(u', z', α') = (u⊗u', z⊗z', μ_{u,u'}∘(α⊗α')) and unit
/// (1_U, 1_Z, ι).
pub fn lax_limit(
    dom: &SymMonCategory,
    cod: &SymMonCategory,
    phi: &LaxSMFunctor,
    limits: &Limits,
) -> Result<LaxLimitCategory> {
    let ub = &dom.base;
    let zb = &cod.base;
    let mut objects = Vec::new();
    let mut obj_index = HashMap::new();
    let mut obj_names = Vec::new();
    for u in ub.objects() {
        for z in zb.objects() {
            for &alpha in zb.hom(z, phi.on_obj(u)) {
                let x = LaxLimitObject { u, z, alpha };
                obj_index.insert(x, ObjId(objects.len() as u32));
                obj_names.push(format!(
                    "({},{},{})",
                    ub.obj_name(u),
                    zb.obj_name(z),
                    zb.mor_name(alpha)
                ));
                objects.push(x);
            }
        }
    }
    if objects.is_empty() {
        return Err(Error::EmptyLimit);
    }
    limits.check_objects(objects.len(), "lax limit")?;
    let mut morphisms = Vec::new();
    let mut mor_pairs = Vec::new();
    let mut mor_index = HashMap::new();
    for (i, x) in objects.iter().enumerate() {
        for (j, y) in objects.iter().enumerate() {
            for &f in ub.hom(x.u, y.u) {
                for &g in zb.hom(x.z, y.z) {
                    if zb.compose(phi.on_mor(f), x.alpha)? == zb.compose(y.alpha, g)? {
                        let m = MorId(morphisms.len() as u32);
                        mor_index.insert((ObjId(i as u32), ObjId(j as u32), f, g), m);
                        morphisms.push((
                            format!("[{i}->{j}:{},{}]", ub.mor_name(f), zb.mor_name(g)),
                            ObjId(i as u32),
                            ObjId(j as u32),
                        ));
                        mor_pairs.push((f, g));
                    }
                }
            }
        }
    }
    limits.check_morphisms(morphisms.len(), "lax limit")?;
    let identity: Vec<MorId> = objects
        .iter()
        .enumerate()
        .map(|(i, x)| {
            mor_index[&(ObjId(i as u32), ObjId(i as u32), ub.identity(x.u), zb.identity(x.z))]
        })
        .collect();
    let mut composition = Vec::new();
    for (m1, &(_, s1, t1)) in morphisms.iter().enumerate() {
        for (m2, &(_, s2, t2)) in morphisms.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let (f1, g1) = mor_pairs[m1];
            let (f2, g2) = mor_pairs[m2];
            let key = (s1, t2, ub.compose(f2, f1)?, zb.compose(g2, g1)?);
            composition.push((MorId(m2 as u32), MorId(m1 as u32), mor_index[&key]));
        }
    }
    let names_only: Vec<String> = obj_names;
    let base = FinCategory::new(names_only, morphisms, identity, composition)?;

    let tensor_obj_of = |x: &LaxLimitObject, y: &LaxLimitObject| -> Result<ObjId> {
        let alpha = zb.compose(phi.mu(dom, x.u, y.u), cod.tensor_mor(x.alpha, y.alpha))?;
        let t = LaxLimitObject { u: dom.tensor(x.u, y.u), z: cod.tensor(x.z, y.z), alpha };
        obj_index.get(&t).copied().ok_or_else(|| {
            Error::MalformedTable("tensor of lax limit objects not found".into())
        })
    };
    let n = objects.len();
    let mut tensor_obj = Vec::with_capacity(n * n);
    for x in &objects {
        for y in &objects {
            tensor_obj.push(tensor_obj_of(x, y)?);
        }
    }
    let m = base.n_morphisms();
    let mut tensor_mor = Vec::with_capacity(m * m);
    for m1 in 0..m {
        let (s1, t1) = (base.source(MorId(m1 as u32)), base.target(MorId(m1 as u32)));
        let (f1, g1) = mor_pairs[m1];
        for m2 in 0..m {
            let (s2, t2) = (base.source(MorId(m2 as u32)), base.target(MorId(m2 as u32)));
            let (f2, g2) = mor_pairs[m2];
            let key = (
                tensor_obj[s1.idx() * n + s2.idx()],
                tensor_obj[t1.idx() * n + t2.idx()],
                dom.tensor_mor(f1, f2),
                cod.tensor_mor(g1, g2),
            );
            let t = mor_index.get(&key).copied().ok_or_else(|| {
                Error::MalformedTable("tensor of lax limit morphisms not a morphism".into())
            })?;
            tensor_mor.push(t);
        }
    }
    let mut symmetry = Vec::with_capacity(n * n);
    for (i, x) in objects.iter().enumerate() {
        for (j, y) in objects.iter().enumerate() {
            let key = (
                tensor_obj[i * n + j],
                tensor_obj[j * n + i],
                dom.sym(x.u, y.u),
                cod.sym(x.z, y.z),
            );
            let s = mor_index.get(&key).copied().ok_or_else(|| {
                Error::MalformedTable("componentwise symmetry not a morphism".into())
            })?;
            symmetry.push(s);
        }
    }
    let unit = obj_index[&LaxLimitObject {
        u: dom.unit,
        z: cod.unit,
        alpha: phi.unit_cell,
    }];
    let cat = SymMonCategory::new(base, unit, tensor_obj, tensor_mor, symmetry)?;
    let jstar = Functor {
        object_map: objects.iter().map(|x| x.u).collect(),
        morphism_map: mor_pairs.iter().map(|&(f, _)| f).collect(),
    };
    let istar = Functor {
        object_map: objects.iter().map(|x| x.z).collect(),
        morphism_map: mor_pairs.iter().map(|&(_, g)| g).collect(),
    };
    Ok(LaxLimitCategory {
        cat,
        objects,
        mor_pairs,
        dom: dom.clone(),
        cod: cod.clone(),
        phi: phi.clone(),
        jstar,
        istar,
        obj_index,
        mor_index,
    })
}

/// The projection-formula composite z⊗φ(w) → φ(u)⊗φ(w) → φ(u⊗w) for an
/// object x = (u, z, α) and a test object w of U. Invertibility of this
/// morphism is the projection formula at w.
pub fn projection_formula_map(l: &LaxLimitCategory, x: &LaxLimitObject, w: ObjId) -> Result<MorId> {
    let fw = l.phi.on_obj(w);
    let first = l.cod.tensor_mor(x.alpha, l.cod.base.identity(fw));
    l.cod.base.compose(l.phi.mu(&l.dom, x.u, w), first)
}

/// Which projection-formula tests the criterion runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Test only at 1_U and at the chosen dual u^∨.
    AtTwoObjects,
    /// Test at every object w of U.
    AtAllW,
}

/// Result of the structural criterion at an object of the lax limit.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub u_dualizable: bool,
    pub z_dualizable: bool,
    /// Projection formula at 1_U.
    pub gamma_invertible: bool,
    /// Projection formula at u^∨ (or at every w in `AtAllW` mode).
    pub g_invertible: bool,
    /// First failing test object, for diagnostics.
    pub failing_w: Option<ObjId>,
    pub is_dualizable: bool,
    /// Constructed duality datum in the lax limit, when dualizable.
    pub witness: Option<DualityDatum>,
}

/// The structural dualizability criterion for x = (u, z, α): u and z must
/// be dualizable and the projection formula must hold at 1_U and u^∨
/// (equivalently at every w). On success, builds the explicit dual
/// x^∨ = (u^∨, z^∨, β) and verifies the triangle identities.
pub fn criterion_dualizable(
    l: &LaxLimitCategory,
    x: &LaxLimitObject,
    mode: Mode,
    limits: &Limits,
) -> Result<Verdict> {
    let u_datum = duality::first_dual(&l.dom, x.u, limits)?;
    let z_datum = duality::first_dual(&l.cod, x.z, limits)?;
    let mut verdict = Verdict {
        u_dualizable: u_datum.is_some(),
        z_dualizable: z_datum.is_some(),
        gamma_invertible: false,
        g_invertible: false,
        failing_w: None,
        is_dualizable: false,
        witness: None,
    };
    let gamma = projection_formula_map(l, x, l.dom.unit)?;
    verdict.gamma_invertible = l.cod.base.is_iso(gamma);
    let (u_datum, z_datum) = match (u_datum, z_datum) {
        (Some(u), Some(z)) => (u, z),
        _ => return Ok(verdict),
    };
    match mode {
        Mode::AtTwoObjects => {
            let g = projection_formula_map(l, x, u_datum.x_dual)?;
            verdict.g_invertible = l.cod.base.is_iso(g);
            if !verdict.g_invertible {
                verdict.failing_w = Some(u_datum.x_dual);
            }
        }
        Mode::AtAllW => {
            verdict.g_invertible = true;
            for w in l.dom.base.objects() {
                let p = projection_formula_map(l, x, w)?;
                if !l.cod.base.is_iso(p) {
                    verdict.g_invertible = false;
                    verdict.failing_w = Some(w);
                    break;
                }
            }
        }
    }
    if !(verdict.gamma_invertible && verdict.g_invertible) {
        return Ok(verdict);
    }
    verdict.is_dualizable = true;
    verdict.witness = Some(build_witness(l, x, &u_datum, &z_datum)?);
    Ok(verdict)
}

/// Builds the dual datum for x from chosen duality data for u and z:
/// x^∨ = (u^∨, z^∨, β) with β the adjunct of g⁻¹∘φ(η_u)∘ι, and
/// (ε, η) = ((ε_u, ε_z), (η_u, η_z)). The returned datum is verified to
/// pass the triangle identities.
pub fn build_witness(
    l: &LaxLimitCategory,
    x: &LaxLimitObject,
    u_datum: &DualityDatum,
    z_datum: &DualityDatum,
) -> Result<DualityDatum> {
    let zb = &l.cod.base;
    let u_dual = u_datum.x_dual;
    let z_dual = z_datum.x_dual;
    let g = projection_formula_map(l, x, u_dual)?;
    let g_inv = zb
        .inverse(g)
        .ok_or_else(|| Error::MissingDual("projection composite at u^∨ is not invertible".into()))?;
    // β† : 1_Z → z⊗φ(u^∨)
    let beta_dagger =
        zb.compose_all(&[g_inv, l.phi.on_mor(u_datum.coev), l.phi.unit_cell])?;
    // β : z^∨ → φ(u^∨), the adjunct (ε_z⊗id)∘(id_{z^∨}⊗β†).
    let fu_dual = l.phi.on_obj(u_dual);
    let beta = zb.compose(
        l.cod.tensor_mor(z_datum.ev, zb.identity(fu_dual)),
        l.cod.tensor_mor(zb.identity(z_dual), beta_dagger),
    )?;
    let xd = LaxLimitObject { u: u_dual, z: z_dual, alpha: beta };
    let x_id = l
        .obj_id(x)
        .ok_or_else(|| Error::MalformedTable("object not in this lax limit".into()))?;
    let xd_id = l.obj_id(&xd).ok_or_else(|| {
        Error::MalformedTable("constructed dual triple is not an object of the lax limit".into())
    })?;
    let pair_mor = |src: ObjId, tgt: ObjId, f: MorId, g: MorId, what: &str| {
        l.mor_id(src, tgt, f, g).ok_or_else(|| {
            Error::MalformedTable(format!("{what} is not a morphism of the lax limit"))
        })
    };
    let unit = l.cat.unit;
    let ev = pair_mor(
        l.cat.tensor(xd_id, x_id),
        unit,
        u_datum.ev,
        z_datum.ev,
        "componentwise evaluation",
    )?;
    let coev = pair_mor(
        unit,
        l.cat.tensor(x_id, xd_id),
        u_datum.coev,
        z_datum.coev,
        "componentwise coevaluation",
    )?;
    let datum = DualityDatum { x: x_id, x_dual: xd_id, ev, coev };
    if !duality::verify_triangle(&l.cat, &datum)? {
        return Err(Error::MalformedTable(
            "constructed witness fails the triangle identities".into(),
        ));
    }
    Ok(datum)
}

/// Shortcut verdict valid when φ is strict: x = (u, z, α) is dualizable
/// iff u is dualizable and α is invertible.
pub fn strict_shortcut(l: &LaxLimitCategory, x: &LaxLimitObject, limits: &Limits) -> Result<bool> {
    Ok(duality::is_right_dualizable(&l.dom, x.u, limits)? && l.cod.base.is_iso(x.alpha))
}

/// Sign of a tensor factor in a mixed-power word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// The mixed-power projection composite
/// z^{⊗M}⊗φ(w) → φ(u_1)⊗…⊗φ(u_k)⊗φ(w) → φ(u^{⊗M}⊗w), using α for
/// positive and β for negative factors and folding the μ cells from the
/// left. For the empty word, the ι-prefixed composite is returned (which
/// the unit law makes an identity).
pub fn genzd_projection_map(
    l: &LaxLimitCategory,
    d: &DualityDatum,
    word: &[Sign],
    w: ObjId,
) -> Result<MorId> {
    let x = *l.obj(d.x);
    let xd = *l.obj(d.x_dual);
    let zb = &l.cod.base;
    let fw = l.phi.on_obj(w);
    let mut alphas: Vec<MorId> = Vec::with_capacity(word.len() + 1);
    let mut us: Vec<ObjId> = Vec::with_capacity(word.len() + 1);
    for &s in word {
        match s {
            Sign::Plus => {
                alphas.push(x.alpha);
                us.push(x.u);
            }
            Sign::Minus => {
                alphas.push(xd.alpha);
                us.push(xd.u);
            }
        }
    }
    if word.is_empty() {
        alphas.push(l.phi.unit_cell);
        us.push(l.dom.unit);
    }
    let spread = l.cod.tensor_mor(l.cod.tensor_mor_all(&alphas), zb.identity(fw));
    us.push(w);
    // Fold μ from the left over φ(u_1)⊗…⊗φ(u_k)⊗φ(w).
    let mut composite = spread;
    let mut acc = us[0];
    for i in 1..us.len() {
        let rest: Vec<ObjId> = us[i + 1..].iter().map(|&v| l.phi.on_obj(v)).collect();
        let rest_obj = l.cod.tensor_all(&rest);
        let step = l
            .cod
            .tensor_mor(l.phi.mu(&l.dom, acc, us[i]), zb.identity(rest_obj));
        composite = zb.compose(step, composite)?;
        acc = l.dom.tensor(acc, us[i]);
    }
    Ok(composite)
}

/// True iff the mixed-power composite for the word and test object is
/// invertible.
pub fn genzd_projection_check(
    l: &LaxLimitCategory,
    d: &DualityDatum,
    word: &[Sign],
    w: ObjId,
) -> Result<bool> {
    Ok(l.cod.base.is_iso(genzd_projection_map(l, d, word, w)?))
}

/// Commutative algebra data in a symmetric monoidal category: an object
/// with multiplication and unit morphisms.
#[derive(Debug, Clone, Copy)]
pub struct AlgebraData {
    pub obj: ObjId,
    /// a⊗a → a
    pub mult: MorId,
    /// 1 → a
    pub unit: MorId,
}

/// Validates commutative-algebra laws: typing, associativity,
/// unitality, commutativity.
pub fn validate_algebra(v: &SymMonCategory, a: &AlgebraData) -> Result<()> {
    let b = &v.base;
    let aa = v.tensor(a.obj, a.obj);
    if b.source(a.mult) != aa || b.target(a.mult) != a.obj {
        return Err(Error::InvalidAlgebra("multiplication must run a⊗a → a".into()));
    }
    if b.source(a.unit) != v.unit || b.target(a.unit) != a.obj {
        return Err(Error::InvalidAlgebra("unit must run 1 → a".into()));
    }
    let id_a = b.identity(a.obj);
    let assoc_l = b.compose(a.mult, v.tensor_mor(a.mult, id_a))?;
    let assoc_r = b.compose(a.mult, v.tensor_mor(id_a, a.mult))?;
    if assoc_l != assoc_r {
        return Err(Error::InvalidAlgebra("multiplication is not associative".into()));
    }
    let unit_l = b.compose(a.mult, v.tensor_mor(a.unit, id_a))?;
    let unit_r = b.compose(a.mult, v.tensor_mor(id_a, a.unit))?;
    if unit_l != id_a || unit_r != id_a {
        return Err(Error::InvalidAlgebra("unit law fails".into()));
    }
    if b.compose(a.mult, v.sym(a.obj, a.obj))? != a.mult {
        return Err(Error::InvalidAlgebra("multiplication is not commutative".into()));
    }
    Ok(())
}

/// The overcategory V_{/a} as the lax limit of the one-object-domain lax
/// functor selecting the algebra a: objects are arrows X → a, tensor uses
/// the multiplication of a.
pub fn overcategory(
    v: &SymMonCategory,
    a: &AlgebraData,
    limits: &Limits,
) -> Result<(SymMonCategory, LaxSMFunctor, LaxLimitCategory)> {
    validate_algebra(v, a)?;
    let term = crate::corpus::discrete_group_smc(&[]);
    let phi = LaxSMFunctor {
        functor: Functor {
            object_map: vec![a.obj],
            morphism_map: vec![v.base.identity(a.obj)],
        },
        unit_cell: a.unit,
        mult: vec![a.mult],
    };
    let l = lax_limit(&term, v, &phi, limits)?;
    Ok((term, phi, l))
}
