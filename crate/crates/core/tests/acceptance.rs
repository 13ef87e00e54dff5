//! Acceptance gate: one pass/fail line per criterion, each checked
//! against the brute-force oracle with exact agreement and a wall-clock
//! budget where stated.

use std::time::Instant;

use laxcat::bordism::{
    self, compose_bordisms, eval_bordism, tensor_bordisms, Bordism, SignedWord, Strategy,
};
use laxcat::corpus::{self, SplitMix64};
use laxcat::duality::{self, DualityDatum};
use laxcat::fincat::ObjId;
use laxcat::laxlim::{self, LaxLimitCategory, Mode, Sign};
use laxcat::monoidal::SymMonCategory;
use laxcat::strat::{self, FinPoset};
use laxcat::stratbord;
use laxcat::{Error, Limits};

type CriterionResult = Result<String, String>;

fn limits() -> Limits {
    Limits::default()
}

fn oracle_dualizable(c: &SymMonCategory, i: ObjId) -> bool {
    !duality::find_right_duals(c, i, &limits())
        .expect("oracle search within limits")
        .is_empty()
}

fn budget(start: Instant, secs: u64, what: &str) -> Result<f64, String> {
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed > secs as f64 {
        Err(format!("{what} took {elapsed:.1}s, budget {secs}s"))
    } else {
        Ok(elapsed)
    }
}

/// All signed words of length ≤ bound.
fn words(bound: usize) -> Vec<Vec<Sign>> {
    stratbord::signed_words(bound)
}

fn build_limits(
    instances: &[(SymMonCategory, SymMonCategory, laxcat::monoidal::LaxSMFunctor)],
) -> Result<Vec<LaxLimitCategory>, String> {
    instances
        .iter()
        .map(|(dom, cod, phi)| {
            laxlim::lax_limit(dom, cod, phi, &limits())
                .map_err(|e| format!("lax limit construction failed: {e}"))
        })
        .collect()
}

/// Criterion 1: on every corpus instance and object, the structural
/// criterion agrees with the brute-force oracle, and the two-object form
/// agrees with the all-w form.
fn criterion_1() -> CriterionResult {
    let start = Instant::now();
    let instances = corpus::acceptance_lax_instances();
    if instances.len() < 200 {
        return Err(format!("only {} corpus instances (need ≥200)", instances.len()));
    }
    // The corpus leads with the handcrafted fleet (discrete groups,
    // superline, permutation-symmetry examples) before the enumerated
    // posetal instances.
    let non_posetal = corpus::handcrafted_instances().len();
    if non_posetal < 10 {
        return Err(format!("only {non_posetal} handcrafted instances (need ≥10)"));
    }
    let lims = build_limits(&instances)?;
    let mut objects = 0usize;
    for l in &lims {
        for i in l.cat.base.objects() {
            objects += 1;
            let x = *l.obj(i);
            let v3 = laxlim::criterion_dualizable(&l, &x, Mode::AtTwoObjects, &limits())
                .map_err(|e| e.to_string())?;
            let v2 = laxlim::criterion_dualizable(&l, &x, Mode::AtAllW, &limits())
                .map_err(|e| e.to_string())?;
            let oracle = oracle_dualizable(&l.cat, i);
            if v3.is_dualizable != oracle {
                return Err(format!(
                    "criterion/oracle disagree at `{}`",
                    l.cat.base.obj_name(i)
                ));
            }
            if v2.is_dualizable != v3.is_dualizable {
                return Err(format!(
                    "two-object and all-w forms disagree at `{}`",
                    l.cat.base.obj_name(i)
                ));
            }
        }
    }
    let t = budget(start, 60, "criterion 1")?;
    Ok(format!(
        "{} instances ({non_posetal} handcrafted), {objects} objects, {t:.1}s",
        instances.len()
    ))
}

/// Criterion 2: every constructed duality witness passes the triangle
/// identities in the lax limit.
fn criterion_2() -> CriterionResult {
    let instances = corpus::acceptance_lax_instances();
    let lims = build_limits(&instances)?;
    let mut witnesses = 0usize;
    for l in &lims {
        for i in l.cat.base.objects() {
            let x = *l.obj(i);
            let v = laxlim::criterion_dualizable(&l, &x, Mode::AtTwoObjects, &limits())
                .map_err(|e| e.to_string())?;
            if v.is_dualizable {
                let w = v.witness.ok_or_else(|| {
                    format!("dualizable `{}` has no witness", l.cat.base.obj_name(i))
                })?;
                if !duality::verify_triangle(&l.cat, &w).map_err(|e| e.to_string())? {
                    return Err(format!(
                        "witness fails triangles at `{}`",
                        l.cat.base.obj_name(i)
                    ));
                }
                witnesses += 1;
            }
        }
    }
    Ok(format!("{witnesses} witnesses triangle-verified"))
}

/// Criterion 3: for strict φ the shortcut (u dualizable ∧ α invertible)
/// agrees with the full criterion and the oracle.
fn criterion_3() -> CriterionResult {
    let instances = corpus::acceptance_lax_instances();
    let mut strict_instances = 0usize;
    let mut objects = 0usize;
    for (dom, cod, phi) in &instances {
        if !phi.is_strict(dom, cod) {
            continue;
        }
        strict_instances += 1;
        let l = laxlim::lax_limit(dom, cod, phi, &limits()).map_err(|e| e.to_string())?;
        for i in l.cat.base.objects() {
            objects += 1;
            let x = *l.obj(i);
            let shortcut =
                laxlim::strict_shortcut(&l, &x, &limits()).map_err(|e| e.to_string())?;
            let direct = duality::is_right_dualizable(&l.dom, x.u, &limits())
                .map_err(|e| e.to_string())?
                && l.cod.base.is_iso(x.alpha);
            let full = laxlim::criterion_dualizable(&l, &x, Mode::AtTwoObjects, &limits())
                .map_err(|e| e.to_string())?
                .is_dualizable;
            if shortcut != direct || shortcut != full || shortcut != oracle_dualizable(&l.cat, i)
            {
                return Err(format!(
                    "strict shortcut disagrees at `{}`",
                    l.cat.base.obj_name(i)
                ));
            }
        }
    }
    if strict_instances == 0 {
        return Err("no strict instances in the corpus".into());
    }
    Ok(format!("{strict_instances} strict instances, {objects} objects"))
}

/// Criterion 4: linkwise dualizability agrees with the oracle on every
/// stratified corpus section, over chains, the V poset, and the diamond.
fn criterion_4() -> CriterionResult {
    let start = Instant::now();
    let strats = corpus::acceptance_stratifications();
    if strats.len() < 50 {
        return Err(format!("only {} stratifications (need ≥50)", strats.len()));
    }
    let nontrivial = strats.iter().filter(|s| corpus::has_nonidentity_theta(s)).count();
    if nontrivial < 10 {
        return Err(format!("only {nontrivial} with non-identity θ (need ≥10)"));
    }
    let mut shapes = [false; 4]; // [2]-chain, [3]-chain, V, diamond
    let mut sections = 0usize;
    for s in &strats {
        let chain = s.poset.linear_order().is_ok();
        match (s.poset.n(), chain) {
            (3, true) => shapes[0] = true,
            (4, true) => shapes[1] = true,
            (3, false) => shapes[2] = true,
            (4, false) => shapes[3] = true,
            _ => {}
        }
        let sl = strat::strat_lax_limit(s, &limits()).map_err(|e| e.to_string())?;
        for i in sl.cat.base.objects() {
            sections += 1;
            let x = sl.obj(i).clone();
            let v = strat::linkwise_criterion(&sl, &x, &limits())
                .map_err(|e| e.to_string())?;
            if v.is_dualizable != oracle_dualizable(&sl.cat, i) {
                return Err(format!(
                    "linkwise/oracle disagree at `{}`",
                    sl.cat.base.obj_name(i)
                ));
            }
        }
    }
    if !shapes.iter().all(|&b| b) {
        return Err(format!("poset shapes missing: {shapes:?} ([2], [3], V, diamond)"));
    }
    let t = budget(start, 120, "criterion 4")?;
    Ok(format!(
        "{} stratifications ({nontrivial} with non-identity θ), {sections} sections, {t:.1}s",
        strats.len()
    ))
}

/// Criterion 5: peeling the bottom stratum off every chain-poset corpus
/// instance gives a strict monoidal bijection preserving dualizability.
fn criterion_5() -> CriterionResult {
    let strats = corpus::acceptance_stratifications();
    let mut peeled = 0usize;
    for s in &strats {
        if s.poset.linear_order().is_err() || s.poset.n() < 2 {
            continue;
        }
        let sl = strat::strat_lax_limit(s, &limits()).map_err(|e| e.to_string())?;
        let peel = strat::peel_first(&sl, &limits()).map_err(|e| e.to_string())?;
        if !strat::is_strict_monoidal_bijection(&peel.iso, &sl.cat, &peel.peeled.cat) {
            return Err("comparison is not a strict monoidal bijection".into());
        }
        for i in sl.cat.base.objects() {
            let before = oracle_dualizable(&sl.cat, i);
            let after = oracle_dualizable(&peel.peeled.cat, peel.iso.on_obj(i));
            if before != after {
                return Err(format!(
                    "dualizability not preserved at `{}`",
                    sl.cat.base.obj_name(i)
                ));
            }
        }
        peeled += 1;
    }
    if peeled == 0 {
        return Err("no chain-poset instances in the corpus".into());
    }
    Ok(format!("{peeled} chain instances peeled"))
}

/// Criterion 6: for every dualizable corpus object the mixed-power
/// projection composite is invertible for all words of length ≤ 4 and
/// all test objects w.
fn criterion_6() -> CriterionResult {
    let instances = corpus::acceptance_lax_instances();
    let lims = build_limits(&instances)?;
    let word_list = words(4);
    let mut checked = 0usize;
    for l in &lims {
        for i in l.cat.base.objects() {
            let x = *l.obj(i);
            let v = laxlim::criterion_dualizable(&l, &x, Mode::AtTwoObjects, &limits())
                .map_err(|e| e.to_string())?;
            let Some(d) = v.witness else { continue };
            for word in &word_list {
                for w in l.dom.base.objects() {
                    if !laxlim::genzd_projection_check(&l, &d, word, w)
                        .map_err(|e| e.to_string())?
                    {
                        return Err(format!(
                            "non-invertible composite at `{}`, word length {}, w = `{}`",
                            l.cat.base.obj_name(i),
                            word.len(),
                            l.dom.base.obj_name(w)
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} composites verified invertible"))
}

/// The duality data the bordism evaluation is tested against.
fn corpus_duality_data() -> Vec<(String, SymMonCategory, DualityDatum)> {
    let mut out = Vec::new();
    let mut push = |name: &str, c: SymMonCategory, x: ObjId| {
        let d = duality::first_dual(&c, x, &limits())
            .expect("within limits")
            .expect("object is dualizable");
        out.push((name.to_string(), c, d));
    };
    let z2 = corpus::discrete_group_smc(&[2]);
    push("Z/2 generator", z2, ObjId(1));
    let z3 = corpus::discrete_group_smc(&[3]);
    push("Z/3 generator", z3, ObjId(1));
    let z22 = corpus::discrete_group_smc(&[2, 2]);
    let x = ObjId(3); // the (1,1) element
    push("Z/2×Z/2 diagonal", z22, x);
    let sl = corpus::superline_smc();
    let od = sl.base.obj_by_name("od").expect("superline has `od`");
    push("superline odd", sl, od);
    let chain = corpus::chain_min_smc(3);
    let unit = chain.unit;
    push("chain unit", chain, unit);
    out
}

/// Criterion 7: the bordism evaluation is functorial for composition and
/// tensor on ≥10⁴ random bordisms against every corpus duality datum.
fn criterion_7() -> CriterionResult {
    let start = Instant::now();
    let data = corpus_duality_data();
    let mut rng = SplitMix64::new(0);
    const N: usize = 10_000;
    let mut samples: Vec<(Bordism, Bordism, Bordism)> = Vec::with_capacity(N);
    for _ in 0..N {
        let a = bordism::random_bordism(&mut rng, 8, 3);
        let b = bordism::random_bordism_from(&mut rng, &a.target, 8, 3);
        let c = bordism::random_bordism(&mut rng, 4, 1);
        samples.push((a, b, c));
    }
    let mut checks = 0usize;
    for (name, c, d) in &data {
        for (a, b, extra) in &samples {
            let ab = compose_bordisms(a, b).map_err(|e| e.to_string())?;
            let ea = eval_bordism(c, d, a, Strategy::CapsFirst).map_err(|e| e.to_string())?;
            let eb = eval_bordism(c, d, b, Strategy::CapsFirst).map_err(|e| e.to_string())?;
            let eab =
                eval_bordism(c, d, &ab, Strategy::CapsFirst).map_err(|e| e.to_string())?;
            if eab != c.base.compose(eb, ea).map_err(|e| e.to_string())? {
                return Err(format!("composition functoriality fails on {name}"));
            }
            let t = tensor_bordisms(a, extra);
            let et = eval_bordism(c, d, &t, Strategy::CapsFirst).map_err(|e| e.to_string())?;
            let ee = eval_bordism(c, d, extra, Strategy::CapsFirst)
                .map_err(|e| e.to_string())?;
            if et != c.tensor_mor(ea, ee) {
                return Err(format!("tensor functoriality fails on {name}"));
            }
            checks += 2;
        }
    }
    let t = budget(start, 60, "criterion 7")?;
    Ok(format!(
        "{checks} functoriality checks over {} duality data, {t:.1}s",
        data.len()
    ))
}

/// Criterion 8: classification succeeds with an invertible square-cell
/// family at bound 4 and a verified round trip for every dualizable
/// corpus lax-limit object, and fails exactly on the non-dualizables.
fn criterion_8() -> CriterionResult {
    let instances = corpus::acceptance_lax_instances();
    let lims = build_limits(&instances)?;
    let mut classified = 0usize;
    let mut rejected = 0usize;
    for l in &lims {
        for i in l.cat.base.objects() {
            let x = *l.obj(i);
            let dualizable = oracle_dualizable(&l.cat, i);
            match stratbord::classify_dualizable(&l, &x, 4, &limits()) {
                Ok(data) => {
                    if !dualizable {
                        return Err(format!(
                            "classified non-dualizable `{}`",
                            l.cat.base.obj_name(i)
                        ));
                    }
                    match stratbord::verify_round_trip_with(&l, &x, &data) {
                        Ok(true) => classified += 1,
                        Ok(false) => {
                            return Err(format!(
                                "round trip failed at `{}`",
                                l.cat.base.obj_name(i)
                            ))
                        }
                        Err(e) => {
                            return Err(format!(
                                "round trip error at `{}`: {e}",
                                l.cat.base.obj_name(i)
                            ))
                        }
                    }
                }
                Err(Error::NotDualizable(_)) => {
                    if dualizable {
                        return Err(format!(
                            "failed to classify dualizable `{}`",
                            l.cat.base.obj_name(i)
                        ));
                    }
                    rejected += 1;
                }
                Err(e) => return Err(format!("classification error: {e}")),
            }
        }
    }
    Ok(format!(
        "{classified} objects classified and round-tripped, {rejected} correctly rejected"
    ))
}

/// Criterion 9: subdivision cardinalities of chains, and Zorro moves.
fn criterion_9() -> CriterionResult {
    for n in 0..=6usize {
        // The chain with n+1 elements has 2^(n+1)−1 nonempty chains.
        let p = FinPoset::chain(n + 1);
        let sd = strat::subdivision(&p, &limits()).map_err(|e| e.to_string())?;
        let expected = (1usize << (n + 1)) - 1;
        if sd.n() != expected {
            return Err(format!(
                "subdivision of the {}-element chain has {} elements (expected {expected})",
                n + 1,
                sd.n()
            ));
        }
    }
    for s in [Sign::Plus, Sign::Minus] {
        let w = SignedWord(vec![s]);
        let id = Bordism::identity(w.clone());
        // (ε⊗id)∘(id⊗η) and (id⊗ε)∘(η⊗id) are both the identity strand.
        let left = compose_bordisms(
            &tensor_bordisms(&id, &Bordism::cup(s.flip())),
            &tensor_bordisms(&Bordism::cap(s), &id),
        )
        .map_err(|e| e.to_string())?;
        let right = compose_bordisms(
            &tensor_bordisms(&Bordism::cup(s), &id),
            &tensor_bordisms(&id, &Bordism::cap(s.flip())),
        )
        .map_err(|e| e.to_string())?;
        if left != id || right != id {
            return Err(format!("Zorro composite is not the identity at {s:?}"));
        }
    }
    Ok("subdivision counts for n ≤ 6 and both Zorro moves".into())
}

fn main() {
    let criteria: Vec<(&str, fn() -> CriterionResult)> = vec![
        ("criterion/oracle equivalence", criterion_1),
        ("witness triangles", criterion_2),
        ("strict shortcut", criterion_3),
        ("linkwise stratified criterion", criterion_4),
        ("peel-first comparison", criterion_5),
        ("mixed-power invertibility", criterion_6),
        ("bordism evaluation functoriality", criterion_7),
        ("classification round trip", criterion_8),
        ("subdivision and Zorro moves", criterion_9),
    ];
    let mut failures = 0usize;
    for (i, (label, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {} [{}]: PASS ({})", i + 1, label, detail),
            Err(why) => {
                failures += 1;
                println!("criterion {} [{}]: FAIL ({})", i + 1, label, why);
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} criterion(s) failed");
        std::process::exit(1);
    }
}
