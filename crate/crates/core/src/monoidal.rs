//! Strict symmetric monoidal structure on finite categories, and lax
//! symmetric monoidal functors with exhaustively checked coherence.
//!
//! Associativity and unitality of the tensor are strict: the tables must
//! satisfy `(a⊗b)⊗c = a⊗(b⊗c)` and `1⊗a = a = a⊗1` on the nose. The
//! symmetry is explicit data, so non-trivial braidings on finite groupoids
//! are expressible. Posetal categories (hom-sets of size ≤ 1) take a fast
//! path: once typing is verified, every coherence equality holds
//! automatically.

use crate::error::{Error, Limits, Result};
use crate::fincat::{ArrowCategory, FinCategory, Functor, MorId, NatTransform, ObjId, ValidationReport};

/// A strict symmetric monoidal category: a finite base category with total
/// tensor tables on objects and morphisms, a strict unit, and a symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMonCategory {
    pub base: FinCategory,
    pub unit: ObjId,
    /// `tensor_obj[a * n_obj + b]` = a⊗b.
    tensor_obj: Vec<ObjId>,
    /// `tensor_mor[f * n_mor + g]` = f⊗g.
    tensor_mor: Vec<MorId>,
    /// `symmetry[a * n_obj + b]` = σ_{a,b}: a⊗b → b⊗a.
    symmetry: Vec<MorId>,
}

impl SymMonCategory {
    pub fn new(
        base: FinCategory,
        unit: ObjId,
        tensor_obj: Vec<ObjId>,
        tensor_mor: Vec<MorId>,
        symmetry: Vec<MorId>,
    ) -> Result<SymMonCategory> {
        let n_obj = base.n_objects();
        let n_mor = base.n_morphisms();
        if unit.idx() >= n_obj {
            return Err(Error::MalformedTable("unit object out of range".into()));
        }
        if tensor_obj.len() != n_obj * n_obj
            || tensor_mor.len() != n_mor * n_mor
            || symmetry.len() != n_obj * n_obj
        {
            return Err(Error::MalformedTable("tensor or symmetry table has wrong size".into()));
        }
        if tensor_obj.iter().any(|o| o.idx() >= n_obj)
            || tensor_mor.iter().any(|m| m.idx() >= n_mor)
            || symmetry.iter().any(|m| m.idx() >= n_mor)
        {
            return Err(Error::MalformedTable("tensor or symmetry entry out of range".into()));
        }
        Ok(SymMonCategory { base, unit, tensor_obj, tensor_mor, symmetry })
    }

    pub fn tensor(&self, a: ObjId, b: ObjId) -> ObjId {
        self.tensor_obj[a.idx() * self.base.n_objects() + b.idx()]
    }

    pub fn tensor_mor(&self, f: MorId, g: MorId) -> MorId {
        self.tensor_mor[f.idx() * self.base.n_morphisms() + g.idx()]
    }

    pub fn sym(&self, a: ObjId, b: ObjId) -> MorId {
        self.symmetry[a.idx() * self.base.n_objects() + b.idx()]
    }

    /// Iterated tensor, left to right; the empty product is the unit.
    pub fn tensor_all(&self, objs: &[ObjId]) -> ObjId {
        objs.iter().fold(self.unit, |acc, &o| self.tensor(acc, o))
    }

    pub fn tensor_mor_all(&self, mors: &[MorId]) -> MorId {
        mors.iter().fold(self.base.identity(self.unit), |acc, &m| self.tensor_mor(acc, m))
    }

    pub fn is_posetal(&self) -> bool {
        self.base.is_posetal()
    }

    /// Exhaustive check of all monoidal axioms. Typing of the tables is
    /// always checked; in the posetal case the remaining equalities hold
    /// automatically and are skipped.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.base.validate();
        if !report.is_ok() {
            return report;
        }
        let b = &self.base;
        // Typing of the tensor and symmetry tables.
        for f in b.morphisms() {
            for g in b.morphisms() {
                let fg = self.tensor_mor(f, g);
                if b.source(fg) != self.tensor(b.source(f), b.source(g))
                    || b.target(fg) != self.tensor(b.target(f), b.target(g))
                {
                    report.push(
                        "tensor endpoint",
                        format!("({}, {})", b.mor_name(f), b.mor_name(g)),
                    );
                }
            }
        }
        for a in b.objects() {
            for c in b.objects() {
                let s = self.sym(a, c);
                if b.source(s) != self.tensor(a, c) || b.target(s) != self.tensor(c, a) {
                    report.push(
                        "symmetry endpoint",
                        format!("({}, {})", b.obj_name(a), b.obj_name(c)),
                    );
                }
            }
        }
        // Strict unit and associativity on objects.
        for a in b.objects() {
            if self.tensor(self.unit, a) != a || self.tensor(a, self.unit) != a {
                report.push("strict unit (objects)", b.obj_name(a).to_string());
            }
        }
        for a in b.objects() {
            for c in b.objects() {
                for d in b.objects() {
                    if self.tensor(self.tensor(a, c), d) != self.tensor(a, self.tensor(c, d)) {
                        report.push(
                            "strict associativity (objects)",
                            format!("({}, {}, {})", b.obj_name(a), b.obj_name(c), b.obj_name(d)),
                        );
                    }
                }
            }
        }
        if !report.is_ok() {
            return report;
        }
        if self.is_posetal() {
            // All remaining laws are equalities between parallel morphisms,
            // automatic when hom-sets have at most one element.
            for a in b.objects() {
                if self.sym(a, self.unit) != b.identity(a) {
                    report.push("symmetry at unit", b.obj_name(a).to_string());
                }
            }
            return report;
        }
        // Strict unit on morphisms.
        let unit_id = b.identity(self.unit);
        for f in b.morphisms() {
            if self.tensor_mor(unit_id, f) != f || self.tensor_mor(f, unit_id) != f {
                report.push("strict unit (morphisms)", b.mor_name(f).to_string());
            }
        }
        // Tensor preserves identities.
        for a in b.objects() {
            for c in b.objects() {
                if self.tensor_mor(b.identity(a), b.identity(c)) != b.identity(self.tensor(a, c)) {
                    report.push(
                        "tensor of identities",
                        format!("({}, {})", b.obj_name(a), b.obj_name(c)),
                    );
                }
            }
        }
        // Strict associativity on morphisms.
        for f in b.morphisms() {
            for g in b.morphisms() {
                let fg = self.tensor_mor(f, g);
                for h in b.morphisms() {
                    if self.tensor_mor(fg, h) != self.tensor_mor(f, self.tensor_mor(g, h)) {
                        report.push(
                            "strict associativity (morphisms)",
                            format!("({}, {}, {})", b.mor_name(f), b.mor_name(g), b.mor_name(h)),
                        );
                    }
                }
            }
        }
        // Interchange: (g∘f) ⊗ (g'∘f') = (g⊗g') ∘ (f⊗f').
        let mut composable: Vec<(MorId, MorId, MorId)> = Vec::new();
        for g in b.morphisms() {
            for f in b.morphisms() {
                if b.target(f) == b.source(g) {
                    composable.push((g, f, b.compose(g, f).unwrap()));
                }
            }
        }
        for &(g, f, gf) in &composable {
            for &(g2, f2, gf2) in &composable {
                let lhs = self.tensor_mor(gf, gf2);
                let rhs = b.compose(self.tensor_mor(g, g2), self.tensor_mor(f, f2)).unwrap();
                if lhs != rhs {
                    report.push(
                        "interchange",
                        format!(
                            "(({},{}), ({},{}))",
                            b.mor_name(g),
                            b.mor_name(f),
                            b.mor_name(g2),
                            b.mor_name(f2)
                        ),
                    );
                }
            }
        }
        // Symmetry: unit, involutivity, naturality, hexagon.
        for a in b.objects() {
            if self.sym(a, self.unit) != b.identity(a) {
                report.push("symmetry at unit", b.obj_name(a).to_string());
            }
            for c in b.objects() {
                let s = self.sym(a, c);
                if b.compose(self.sym(c, a), s).unwrap() != b.identity(self.tensor(a, c)) {
                    report.push(
                        "symmetry involutivity",
                        format!("({}, {})", b.obj_name(a), b.obj_name(c)),
                    );
                }
            }
        }
        for f in b.morphisms() {
            for g in b.morphisms() {
                let lhs = b
                    .compose(self.sym(b.target(f), b.target(g)), self.tensor_mor(f, g))
                    .unwrap();
                let rhs = b
                    .compose(self.tensor_mor(g, f), self.sym(b.source(f), b.source(g)))
                    .unwrap();
                if lhs != rhs {
                    report.push(
                        "symmetry naturality",
                        format!("({}, {})", b.mor_name(f), b.mor_name(g)),
                    );
                }
            }
        }
        for a in b.objects() {
            for c in b.objects() {
                for d in b.objects() {
                    // σ_{a,c⊗d} = (id_c ⊗ σ_{a,d}) ∘ (σ_{a,c} ⊗ id_d)
                    let lhs = self.sym(a, self.tensor(c, d));
                    let step1 = self.tensor_mor(self.sym(a, c), b.identity(d));
                    let step2 = self.tensor_mor(b.identity(c), self.sym(a, d));
                    if lhs != b.compose(step2, step1).unwrap() {
                        report.push(
                            "symmetry hexagon",
                            format!("({}, {}, {})", b.obj_name(a), b.obj_name(c), b.obj_name(d)),
                        );
                    }
                }
            }
        }
        report
    }
}

/// A lax symmetric monoidal functor: an underlying functor φ with a unit
/// comparison cell ι: 1 → φ(1) and multiplication cells
/// μ_{u,u'}: φ(u)⊗φ(u') → φ(u⊗u'), none required invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxSMFunctor {
    pub functor: Functor,
    pub unit_cell: MorId,
    /// `mult[u * n_obj(dom) + u']` = μ_{u,u'}, a morphism of the codomain.
    pub mult: Vec<MorId>,
}

impl LaxSMFunctor {
    /// The identity functor with identity comparison cells.
    pub fn identity(c: &SymMonCategory) -> LaxSMFunctor {
        let mut mult = Vec::with_capacity(c.base.n_objects() * c.base.n_objects());
        for a in c.base.objects() {
            for b in c.base.objects() {
                mult.push(c.base.identity(c.tensor(a, b)));
            }
        }
        LaxSMFunctor {
            functor: Functor::identity(&c.base),
            unit_cell: c.base.identity(c.unit),
            mult,
        }
    }

    pub fn on_obj(&self, u: ObjId) -> ObjId {
        self.functor.on_obj(u)
    }

    pub fn on_mor(&self, f: MorId) -> MorId {
        self.functor.on_mor(f)
    }

    pub fn mu(&self, dom: &SymMonCategory, u: ObjId, up: ObjId) -> MorId {
        self.mult[u.idx() * dom.base.n_objects() + up.idx()]
    }

    /// Full coherence validation against explicit domain and codomain.
    pub fn validate(&self, dom: &SymMonCategory, cod: &SymMonCategory) -> ValidationReport {
        let mut report = self.functor.validate(&dom.base, &cod.base);
        if !report.is_ok() {
            return report;
        }
        let n = dom.base.n_objects();
        if self.mult.len() != n * n {
            report.push("mult table size", format!("{} entries for {n} objects", self.mult.len()));
            return report;
        }
        if self.unit_cell.idx() >= cod.base.n_morphisms()
            || self.mult.iter().any(|m| m.idx() >= cod.base.n_morphisms())
        {
            report.push("cell range", "unit or mult cell out of range");
            return report;
        }
        let zb = &cod.base;
        if zb.source(self.unit_cell) != cod.unit
            || zb.target(self.unit_cell) != self.on_obj(dom.unit)
        {
            report.push("unit cell endpoints", "ι: 1 → φ(1)");
        }
        for u in dom.base.objects() {
            for up in dom.base.objects() {
                let m = self.mu(dom, u, up);
                if zb.source(m) != cod.tensor(self.on_obj(u), self.on_obj(up))
                    || zb.target(m) != self.on_obj(dom.tensor(u, up))
                {
                    report.push(
                        "mult cell endpoints",
                        format!("({}, {})", dom.base.obj_name(u), dom.base.obj_name(up)),
                    );
                }
            }
        }
        if !report.is_ok() || cod.is_posetal() {
            return report;
        }
        // Naturality of μ in both variables.
        for f in dom.base.morphisms() {
            for g in dom.base.morphisms() {
                let (u, up) = (dom.base.source(f), dom.base.source(g));
                let (v, vp) = (dom.base.target(f), dom.base.target(g));
                let lhs = zb
                    .compose(self.on_mor(dom.tensor_mor(f, g)), self.mu(dom, u, up))
                    .unwrap();
                let rhs = zb
                    .compose(self.mu(dom, v, vp), cod.tensor_mor(self.on_mor(f), self.on_mor(g)))
                    .unwrap();
                if lhs != rhs {
                    report.push(
                        "mult naturality",
                        format!("({}, {})", dom.base.mor_name(f), dom.base.mor_name(g)),
                    );
                }
            }
        }
        // Associativity: μ_{u⊗u',u''} ∘ (μ_{u,u'} ⊗ id) = μ_{u,u'⊗u''} ∘ (id ⊗ μ_{u',u''}).
        for u in dom.base.objects() {
            for up in dom.base.objects() {
                for upp in dom.base.objects() {
                    let lhs = zb
                        .compose(
                            self.mu(dom, dom.tensor(u, up), upp),
                            cod.tensor_mor(self.mu(dom, u, up), zb.identity(self.on_obj(upp))),
                        )
                        .unwrap();
                    let rhs = zb
                        .compose(
                            self.mu(dom, u, dom.tensor(up, upp)),
                            cod.tensor_mor(zb.identity(self.on_obj(u)), self.mu(dom, up, upp)),
                        )
                        .unwrap();
                    if lhs != rhs {
                        report.push(
                            "mult associativity",
                            format!(
                                "({}, {}, {})",
                                dom.base.obj_name(u),
                                dom.base.obj_name(up),
                                dom.base.obj_name(upp)
                            ),
                        );
                    }
                }
            }
        }
        // Unit laws: μ_{1,u} ∘ (ι ⊗ id_{φu}) = id_{φu} and symmetrically.
        for u in dom.base.objects() {
            let fu_id = zb.identity(self.on_obj(u));
            let left = zb
                .compose(self.mu(dom, dom.unit, u), cod.tensor_mor(self.unit_cell, fu_id))
                .unwrap();
            let right = zb
                .compose(self.mu(dom, u, dom.unit), cod.tensor_mor(fu_id, self.unit_cell))
                .unwrap();
            if left != fu_id || right != fu_id {
                report.push("mult unit law", dom.base.obj_name(u).to_string());
            }
        }
        // Symmetry compatibility: φ(σ_{u,u'}) ∘ μ_{u,u'} = μ_{u',u} ∘ σ_{φu,φu'}.
        for u in dom.base.objects() {
            for up in dom.base.objects() {
                let lhs = zb.compose(self.on_mor(dom.sym(u, up)), self.mu(dom, u, up)).unwrap();
                let rhs = zb
                    .compose(self.mu(dom, up, u), cod.sym(self.on_obj(u), self.on_obj(up)))
                    .unwrap();
                if lhs != rhs {
                    report.push(
                        "mult symmetry compatibility",
                        format!("({}, {})", dom.base.obj_name(u), dom.base.obj_name(up)),
                    );
                }
            }
        }
        report
    }

    /// A lax functor is strict when ι and every μ are isomorphisms.
    pub fn is_strict(&self, dom: &SymMonCategory, cod: &SymMonCategory) -> bool {
        cod.base.is_iso(self.unit_cell)
            && dom
                .base
                .objects()
                .all(|u| dom.base.objects().all(|up| cod.base.is_iso(self.mu(dom, u, up))))
    }
}

/// Composite ψ∘φ of lax symmetric monoidal functors, with
/// ι = ψ(ι_φ)∘ι_ψ and μ = ψ(μ_φ)∘μ_ψ.
pub fn compose_lax_functors(
    psi: &LaxSMFunctor,
    phi: &LaxSMFunctor,
    u_cat: &SymMonCategory,
    z_cat: &SymMonCategory,
    w_cat: &SymMonCategory,
) -> Result<LaxSMFunctor> {
    if phi.functor.object_map.len() != u_cat.base.n_objects()
        || psi.functor.object_map.len() != z_cat.base.n_objects()
        || phi.functor.object_map.iter().any(|o| o.idx() >= z_cat.base.n_objects())
        || psi.functor.object_map.iter().any(|o| o.idx() >= w_cat.base.n_objects())
    {
        return Err(Error::DomainMismatch(
            "lax functor composition: codomain of inner is not the domain of outer".into(),
        ));
    }
    let functor = phi.functor.compose(&psi.functor);
    let unit_cell = w_cat.base.compose(psi.on_mor(phi.unit_cell), psi.unit_cell)?;
    let mut mult = Vec::with_capacity(u_cat.base.n_objects().pow(2));
    for u in u_cat.base.objects() {
        for up in u_cat.base.objects() {
            let inner = psi.on_mor(phi.mu(u_cat, u, up));
            let outer = psi.mu(z_cat, phi.on_obj(u), phi.on_obj(up));
            mult.push(w_cat.base.compose(inner, outer)?);
        }
    }
    Ok(LaxSMFunctor { functor, unit_cell, mult })
}

/// A monoidal natural transformation between lax symmetric monoidal
/// functors: a natural transformation whose components commute with the
/// unit and multiplication cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxSMNatTransform {
    pub transform: NatTransform,
}

impl LaxSMNatTransform {
    pub fn at(&self, u: ObjId) -> MorId {
        self.transform.at(u)
    }

    pub fn validate(
        &self,
        source: &LaxSMFunctor,
        target: &LaxSMFunctor,
        dom: &SymMonCategory,
        cod: &SymMonCategory,
    ) -> ValidationReport {
        let mut report =
            self.transform.validate(&source.functor, &target.functor, &dom.base, &cod.base);
        if !report.is_ok() || cod.is_posetal() {
            return report;
        }
        let zb = &cod.base;
        if zb.compose(self.at(dom.unit), source.unit_cell).unwrap() != target.unit_cell {
            report.push("monoidal naturality (unit)", "θ_1 ∘ ι_F ≠ ι_G");
        }
        for u in dom.base.objects() {
            for up in dom.base.objects() {
                let lhs = zb.compose(self.at(dom.tensor(u, up)), source.mu(dom, u, up)).unwrap();
                let rhs = zb
                    .compose(target.mu(dom, u, up), cod.tensor_mor(self.at(u), self.at(up)))
                    .unwrap();
                if lhs != rhs {
                    report.push(
                        "monoidal naturality (mult)",
                        format!("({}, {})", dom.base.obj_name(u), dom.base.obj_name(up)),
                    );
                }
            }
        }
        report
    }
}

/// The arrow category of a symmetric monoidal category with the pointwise
/// tensor: objects are arrows, f⊗g is the tensor of arrows, the unit is
/// id_1, and the symmetry square has the base symmetries as components.
pub fn pointwise_smc_on_arrows(
    z: &SymMonCategory,
    limits: &Limits,
) -> Result<(SymMonCategory, ArrowCategory)> {
    let arrows = z.base.arrow_category(limits)?;
    let n_obj = arrows.cat.n_objects();
    let mut tensor_obj = Vec::with_capacity(n_obj * n_obj);
    for f in z.base.morphisms() {
        for g in z.base.morphisms() {
            tensor_obj.push(arrows.obj_of(z.tensor_mor(f, g)));
        }
    }
    let missing = || Error::MalformedTable("tensor of commuting squares does not commute".into());
    let mut tensor_mor = Vec::with_capacity(arrows.squares.len().pow(2));
    for &(f1, f2, p1, q1) in &arrows.squares {
        for &(g1, g2, p2, q2) in &arrows.squares {
            let sq = arrows
                .square(
                    z.tensor_mor(f1, g1),
                    z.tensor_mor(f2, g2),
                    z.tensor_mor(p1, p2),
                    z.tensor_mor(q1, q2),
                )
                .ok_or_else(missing)?;
            tensor_mor.push(sq);
        }
    }
    let mut symmetry = Vec::with_capacity(n_obj * n_obj);
    for f in z.base.morphisms() {
        for g in z.base.morphisms() {
            let sq = arrows
                .square(
                    z.tensor_mor(f, g),
                    z.tensor_mor(g, f),
                    z.sym(z.base.source(f), z.base.source(g)),
                    z.sym(z.base.target(f), z.base.target(g)),
                )
                .ok_or_else(missing)?;
            symmetry.push(sq);
        }
    }
    let unit = arrows.obj_of(z.base.identity(z.unit));
    let smc = SymMonCategory::new(arrows.cat.clone(), unit, tensor_obj, tensor_mor, symmetry)?;
    Ok((smc, arrows))
}
