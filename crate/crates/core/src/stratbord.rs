//! The stratified bordism object over the 2-element chain, in truncated
//! form: its category of sections is the arrow category of the bordism
//! category times finite sets, the tautological object is τ = (id₊, ∅),
//! and a dualizable object of a lax limit classifies a functor out of the
//! sections. This module builds that classifying data constructively and
//! verifies the round trip back to the chosen object.

use crate::bordism::{
    eval_bordism, eval_word, Bordism, End, SignedWord, Strategy,
};
use crate::duality::{self, DualityDatum};
use crate::error::{Error, Limits, Result};
use crate::fincat::{FinCategory, MorId, ObjId};
use crate::laxlim::{self, LaxLimitCategory, LaxLimitObject, Mode, Sign};

/// An object of the sections of the stratified bordism object: a bordism
/// viewed as an object of the arrow category, plus a finite-set
/// cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratBordObject {
    pub arrow: Bordism,
    pub finset: u32,
}

impl StratBordObject {
    /// The tautological object τ = (id₊, ∅).
    pub fn tau() -> StratBordObject {
        StratBordObject {
            arrow: Bordism::identity(SignedWord(vec![Sign::Plus])),
            finset: 0,
        }
    }
}

/// All matchings between the two words, recursively: the first unmatched
/// point is paired with every compatible later point.
fn enumerate_matchings(source: &SignedWord, target: &SignedWord) -> Vec<Vec<(End, End)>> {
    let n = source.len();
    let m = target.len();
    let points: Vec<End> =
        (0..n).map(End::Src).chain((0..m).map(End::Tgt)).collect();
    let sign = |e: End| match e {
        End::Src(i) => source.0[i],
        End::Tgt(j) => target.0[j],
    };
    let compatible = |a: End, b: End| match (a, b) {
        (End::Src(_), End::Tgt(_)) | (End::Tgt(_), End::Src(_)) => sign(a) == sign(b),
        _ => sign(a) != sign(b),
    };
    let mut out = Vec::new();
    let mut used = vec![false; points.len()];
    let mut acc: Vec<(End, End)> = Vec::new();
    fn rec(
        points: &[End],
        used: &mut Vec<bool>,
        acc: &mut Vec<(End, End)>,
        compatible: &dyn Fn(End, End) -> bool,
        out: &mut Vec<Vec<(End, End)>>,
    ) {
        let Some(first) = used.iter().position(|&u| !u) else {
            out.push(acc.clone());
            return;
        };
        used[first] = true;
        for second in first + 1..points.len() {
            if used[second] || !compatible(points[first], points[second]) {
                continue;
            }
            used[second] = true;
            acc.push((points[first], points[second]));
            rec(points, used, acc, compatible, out);
            acc.pop();
            used[second] = false;
        }
        used[first] = false;
    }
    rec(&points, &mut used, &mut acc, &compatible, &mut out);
    out
}

/// All words over {+, −} of length ≤ bound, shortest first.
pub fn signed_words(bound: usize) -> Vec<Vec<Sign>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<Sign>> = vec![vec![]];
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &frontier {
            for s in [Sign::Plus, Sign::Minus] {
                let mut w2 = w.clone();
                w2.push(s);
                out.push(w2.clone());
                next.push(w2);
            }
        }
        frontier = next;
    }
    out
}

/// All truncated section objects: bordisms with word lengths ≤ bound and
/// no free circles, paired with finite-set cardinalities ≤ bound.
pub fn strat_bord_objects(bound: usize, limits: &Limits) -> Result<Vec<StratBordObject>> {
    let words = signed_words(bound);
    let mut out = Vec::new();
    for src in &words {
        for tgt in &words {
            let source = SignedWord(src.clone());
            let target = SignedWord(tgt.clone());
            for pairs in enumerate_matchings(&source, &target) {
                let arrow = Bordism::new(source.clone(), target.clone(), pairs, 0)
                    .expect("enumerated matchings are valid");
                for finset in 0..=bound as u32 {
                    limits.check_objects(out.len() + 1, "truncated section objects")?;
                    out.push(StratBordObject { arrow: arrow.clone(), finset });
                }
            }
        }
    }
    Ok(out)
}

/// The classifying data of a dualizable lax-limit object: duality data in
/// the two factors and in the lax limit, the designated image of the
/// finite-sets summand, and the invertible square cells — one per bounded
/// signed word — realizing the commuting square of the classification.
#[derive(Debug, Clone)]
pub struct StratMorphismData {
    pub u_datum: DualityDatum,
    pub z_datum: DualityDatum,
    /// Duality datum of x in the lax limit itself.
    pub witness: DualityDatum,
    /// The object the finite-sets summand evaluates to (a commutative
    /// algebra object; canonically j_*(1_U)).
    pub fin_component: ObjId,
    /// Per bounded word M: the composite z^{⊗M}⊗φ(1) → φ(u^{⊗M}).
    pub square_cells: Vec<(Vec<Sign>, MorId)>,
}

fn is_isomorphic(base: &FinCategory, a: ObjId, b: ObjId) -> bool {
    base.hom(a, b).iter().any(|&m| base.is_iso(m))
}

/// Builds the classifying data for a dualizable object, verifying every
/// square cell invertible along the way.
pub fn classify_dualizable(
    l: &LaxLimitCategory,
    x: &LaxLimitObject,
    bound: usize,
    limits: &Limits,
) -> Result<StratMorphismData> {
    let verdict = laxlim::criterion_dualizable(l, x, Mode::AtTwoObjects, limits)?;
    let Some(witness) = verdict.witness else {
        return Err(Error::NotDualizable(format!(
            "object ({}, {}) fails the dualizability criterion",
            l.dom.base.obj_name(x.u),
            l.cod.base.obj_name(x.z)
        )));
    };
    let u_datum = duality::first_dual(&l.dom, x.u, limits)?
        .expect("criterion succeeded, so u is dualizable");
    let z_datum = duality::first_dual(&l.cod, x.z, limits)?
        .expect("criterion succeeded, so z is dualizable");
    let fin_component = l.j_section_obj(l.dom.unit);
    let mut square_cells = Vec::new();
    for word in signed_words(bound) {
        let cell = laxlim::genzd_projection_map(l, &witness, &word, l.dom.unit)?;
        if !l.cod.base.is_iso(cell) {
            return Err(Error::SquareCellFailure(format!(
                "square cell at word of length {} is not invertible",
                word.len()
            )));
        }
        square_cells.push((word, cell));
    }
    Ok(StratMorphismData { u_datum, z_datum, witness, fin_component, square_cells })
}

/// The gluing morphism z^{⊗N} → φ(u^{⊗N}): the square cell at N
/// precomposed with the unit cell ι. At N = (+) this equals α by the lax
/// unit law.
fn gluing_for_word(
    l: &LaxLimitCategory,
    data: &StratMorphismData,
    word: &[Sign],
) -> Result<MorId> {
    let cell = laxlim::genzd_projection_map(l, &data.witness, word, l.dom.unit)?;
    let z_word = eval_word(&l.cod, &data.z_datum, &SignedWord(word.to_vec()));
    let pad = l.cod.tensor_mor(l.cod.base.identity(z_word), l.phi.unit_cell);
    l.cod.base.compose(cell, pad)
}

/// Evaluates the classified functor on a section object: the arrow part
/// contributes (u^{⊗M}, z^{⊗N}, φ(eval(b))∘gluing), the finite-set part
/// contributes a tensor power of `fin_component`.
pub fn eval_object(
    l: &LaxLimitCategory,
    data: &StratMorphismData,
    o: &StratBordObject,
) -> Result<ObjId> {
    let u_obj = eval_word(&l.dom, &data.u_datum, &o.arrow.target);
    let z_obj = eval_word(&l.cod, &data.z_datum, &o.arrow.source);
    let glue = gluing_for_word(l, data, &o.arrow.source.0)?;
    let m_b = eval_bordism(&l.dom, &data.u_datum, &o.arrow, Strategy::CapsFirst)?;
    let alpha = l.cod.base.compose(l.phi.on_mor(m_b), glue)?;
    let ar = l
        .obj_id(&LaxLimitObject { u: u_obj, z: z_obj, alpha })
        .ok_or_else(|| {
            Error::RoundTripMismatch("arrow-part image is not a lax-limit object".into())
        })?;
    let mut obj = ar;
    for _ in 0..o.finset {
        obj = l.cat.tensor(obj, data.fin_component);
    }
    Ok(obj)
}

/// Evaluates the classified functor on a square (p, q): b → b′ of the
/// arrow category (p on sources, q on targets, b′∘p = q∘b). The image
/// must be a lax-limit morphism (eval(q), eval(p)); returns its id.
pub fn eval_square(
    l: &LaxLimitCategory,
    data: &StratMorphismData,
    b: &Bordism,
    b_prime: &Bordism,
    p: &Bordism,
    q: &Bordism,
) -> Result<MorId> {
    let src = eval_object(l, data, &StratBordObject { arrow: b.clone(), finset: 0 })?;
    let tgt = eval_object(l, data, &StratBordObject { arrow: b_prime.clone(), finset: 0 })?;
    let f = eval_bordism(&l.dom, &data.u_datum, q, Strategy::CapsFirst)?;
    let g = eval_bordism(&l.cod, &data.z_datum, p, Strategy::CapsFirst)?;
    l.mor_id(src, tgt, f, g).ok_or_else(|| {
        Error::RoundTripMismatch(
            "square image does not commute with the gluing morphisms".into(),
        )
    })
}

/// Re-derives every stored square cell and compares; detects tampered
/// classification data.
pub fn verify_square_cells(
    l: &LaxLimitCategory,
    data: &StratMorphismData,
) -> Result<()> {
    for (word, cell) in &data.square_cells {
        let expected = laxlim::genzd_projection_map(l, &data.witness, word, l.dom.unit)?;
        if *cell != expected || !l.cod.base.is_iso(*cell) {
            return Err(Error::RoundTripMismatch(format!(
                "square cell at word of length {} does not match its defining composite",
                word.len()
            )));
        }
    }
    Ok(())
}

/// A small deterministic fleet of generating bordisms on ≤ 2 strands.
fn generator_bordisms() -> Vec<Bordism> {
    let wp = SignedWord(vec![Sign::Plus]);
    let wm = SignedWord(vec![Sign::Minus]);
    vec![
        Bordism::identity(SignedWord::default()),
        Bordism::identity(wp.clone()),
        Bordism::identity(wm.clone()),
        Bordism::identity(SignedWord(vec![Sign::Plus, Sign::Minus])),
        Bordism::cup(Sign::Plus),
        Bordism::cup(Sign::Minus),
        Bordism::cap(Sign::Plus),
        Bordism::cap(Sign::Minus),
        Bordism::symmetry(&wp, &wm),
        Bordism::symmetry(&wp, &wp),
        Bordism::circle(),
    ]
}

/// Verifies the round trip of the classification at the tautological
/// object: F(τ) must be isomorphic to x, the finite-set summand must land
/// on j_*(1_U), the stored square cells must match their defining
/// composites, and the generator squares must evaluate to lax-limit
/// morphisms (so the evaluations commute with both projections).
pub fn verify_round_trip_with(
    l: &LaxLimitCategory,
    x: &LaxLimitObject,
    data: &StratMorphismData,
) -> Result<bool> {
    verify_square_cells(l, data)?;
    let x_id = l
        .obj_id(x)
        .ok_or_else(|| Error::RoundTripMismatch("object not in this lax limit".into()))?;
    let f_tau = eval_object(l, data, &StratBordObject::tau())?;
    if !is_isomorphic(&l.cat.base, f_tau, x_id) {
        return Err(Error::RoundTripMismatch(
            "evaluation at τ is not isomorphic to the chosen object".into(),
        ));
    }
    if !is_isomorphic(&l.cat.base, data.fin_component, l.j_section_obj(l.dom.unit)) {
        return Err(Error::RoundTripMismatch(
            "finite-set component is not the pushed-forward unit".into(),
        ));
    }
    // Generator squares: postcomposition squares (id, q) and
    // precomposition squares (p, id).
    let gens = generator_bordisms();
    for b in &gens {
        for q in &gens {
            if q.source != b.target {
                continue;
            }
            let b_prime = crate::bordism::compose_bordisms(b, q)?;
            let p = Bordism::identity(b.source.clone());
            eval_square(l, data, b, &b_prime, &p, q)?;
        }
        for p in &gens {
            if p.target != b.source {
                continue;
            }
            let composed = crate::bordism::compose_bordisms(p, b)?;
            let q = Bordism::identity(b.target.clone());
            eval_square(l, data, &composed, b, p, &q)?;
        }
    }
    Ok(true)
}

/// Classifies and then verifies the round trip at the given bound.
pub fn verify_round_trip(
    l: &LaxLimitCategory,
    x: &LaxLimitObject,
    bound: usize,
    limits: &Limits,
) -> Result<bool> {
    let data = classify_dualizable(l, x, bound, limits)?;
    verify_round_trip_with(l, x, &data)
}

/// The first condition set of the classification: the generator squares
/// factor through both projections and every square cell is invertible.
pub fn dagger_conditions(
    l: &LaxLimitCategory,
    x: &LaxLimitObject,
    data: &StratMorphismData,
) -> bool {
    let squares_ok = verify_round_trip_with(l, x, data).is_ok();
    let cells_ok = data.square_cells.iter().all(|(_, c)| l.cod.base.is_iso(*c));
    squares_ok && cells_ok
}

/// The second condition set: the arrow part factors (generator squares
/// again) and the finite-set summand selects j_*(1_U).
pub fn star_conditions(
    l: &LaxLimitCategory,
    x: &LaxLimitObject,
    data: &StratMorphismData,
) -> bool {
    let squares_ok = verify_round_trip_with(l, x, data).is_ok();
    let fin_ok = is_isomorphic(&l.cat.base, data.fin_component, l.j_section_obj(l.dom.unit));
    squares_ok && fin_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::duality::find_right_duals;
    use crate::laxlim::lax_limit;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn truncated_object_counts() {
        // Bound 0: only (id_∅, 0).
        let o0 = strat_bord_objects(0, &limits()).unwrap();
        assert_eq!(o0.len(), 1);
        assert_eq!(o0[0].arrow, Bordism::identity(SignedWord::default()));
        // τ appears at bound 1.
        let o1 = strat_bord_objects(1, &limits()).unwrap();
        assert!(o1.contains(&StratBordObject::tau()));
        // Every enumerated arrow is a valid bordism (Bordism::new checked).
        assert!(o1.len() > o0.len());
    }

    #[test]
    fn signed_word_counts() {
        assert_eq!(signed_words(0).len(), 1);
        assert_eq!(signed_words(2).len(), 7);
        assert_eq!(signed_words(4).len(), 31);
    }

    #[test]
    fn unit_object_round_trips() {
        for (dom, cod, phi) in corpus::handcrafted_instances() {
            let l = lax_limit(&dom, &cod, &phi, &limits()).unwrap();
            let unit = *l.obj(l.cat.unit);
            assert!(verify_round_trip(&l, &unit, 2, &limits()).unwrap());
        }
    }

    #[test]
    fn classification_succeeds_exactly_on_dualizables() {
        let (dom, cod, phi) = corpus::z2_to_chain_lax();
        let l = lax_limit(&dom, &cod, &phi, &limits()).unwrap();
        for i in l.cat.base.objects() {
            let x = *l.obj(i);
            let dualizable = !find_right_duals(&l.cat, i, &limits()).unwrap().is_empty();
            let classified = classify_dualizable(&l, &x, 3, &limits());
            match (dualizable, classified) {
                (true, Ok(data)) => {
                    assert!(verify_round_trip_with(&l, &x, &data).unwrap());
                }
                (false, Err(Error::NotDualizable(_))) => {}
                (d, c) => panic!("oracle {d} but classification {c:?}"),
            }
        }
    }

    #[test]
    fn square_cell_at_empty_word_is_iota() {
        let (dom, cod, phi) = corpus::z2_to_chain_lax();
        let l = lax_limit(&dom, &cod, &phi, &limits()).unwrap();
        let unit = *l.obj(l.cat.unit);
        let data = classify_dualizable(&l, &unit, 2, &limits()).unwrap();
        let (word, cell) = &data.square_cells[0];
        assert!(word.is_empty());
        // The empty-word cell is μ_{1,1}∘(ι⊗id_{φ1}), which equals the
        // identity of φ(1) by the lax unit law.
        assert!(l.cod.base.is_identity(*cell));
    }

    #[test]
    fn tampered_square_cell_is_detected() {
        let (dom, cod, phi) = corpus::z2_to_chain_lax();
        let l = lax_limit(&dom, &cod, &phi, &limits()).unwrap();
        let unit = *l.obj(l.cat.unit);
        let mut data = classify_dualizable(&l, &unit, 2, &limits()).unwrap();
        // Swap a cell for a mistyped morphism.
        let bogus = l
            .cod
            .base
            .morphisms()
            .find(|&m| m != data.square_cells[1].1)
            .unwrap();
        data.square_cells[1].1 = bogus;
        assert!(matches!(
            verify_round_trip_with(&l, &unit, &data),
            Err(Error::RoundTripMismatch(_))
        ));
    }

    #[test]
    fn tampered_fin_component_is_detected() {
        // A lax limit where some object is not isomorphic to j_*(1).
        let (dom, cod, phi) = corpus::z2_to_chain_lax();
        let l = lax_limit(&dom, &cod, &phi, &limits()).unwrap();
        let unit = *l.obj(l.cat.unit);
        let mut data = classify_dualizable(&l, &unit, 2, &limits()).unwrap();
        let other = l
            .cat
            .base
            .objects()
            .find(|&o| !super::is_isomorphic(&l.cat.base, o, data.fin_component))
            .expect("this lax limit has non-isomorphic objects");
        data.fin_component = other;
        assert!(!star_conditions(&l, &unit, &data));
        assert!(matches!(
            verify_round_trip_with(&l, &unit, &data),
            Err(Error::RoundTripMismatch(_))
        ));
    }

    #[test]
    fn condition_sets_agree_on_corpus() {
        for (dom, cod, phi) in corpus::handcrafted_instances() {
            let l = lax_limit(&dom, &cod, &phi, &limits()).unwrap();
            for i in l.cat.base.objects() {
                let x = *l.obj(i);
                if let Ok(data) = classify_dualizable(&l, &x, 2, &limits()) {
                    assert_eq!(
                        dagger_conditions(&l, &x, &data),
                        star_conditions(&l, &x, &data)
                    );
                    assert!(dagger_conditions(&l, &x, &data));
                }
            }
        }
    }

    #[test]
    fn eval_object_sends_tau_to_x() {
        for (dom, cod, phi) in corpus::handcrafted_instances() {
            let l = lax_limit(&dom, &cod, &phi, &limits()).unwrap();
            for i in l.cat.base.objects() {
                let x = *l.obj(i);
                if let Ok(data) = classify_dualizable(&l, &x, 2, &limits()) {
                    let f_tau = eval_object(&l, &data, &StratBordObject::tau()).unwrap();
                    // F(τ) is literally x: the gluing at (+) is α itself.
                    assert_eq!(f_tau, i);
                }
            }
        }
    }
}
