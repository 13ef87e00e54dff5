//! Randomized property tests over the bordism calculus and the lax-limit
//! criterion, driven by seeds so every case is reproducible.

use proptest::prelude::*;

use laxcat::bordism::{
    self, compose_bordisms, eval_bordism, normal_form, parse_bordism, recompose,
    Strategy,
};
use laxcat::corpus::{self, SplitMix64};
use laxcat::duality;
use laxcat::laxlim::{self, Mode};
use laxcat::Limits;

proptest! {
    #[test]
    fn bordism_literal_round_trips(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let b = bordism::random_bordism(&mut rng, 8, 3);
        prop_assert_eq!(parse_bordism(&b.to_literal()).unwrap(), b);
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let a = bordism::random_bordism(&mut rng, 6, 2);
        let b = bordism::random_bordism_from(&mut rng, &a.target, 6, 2);
        let c = bordism::random_bordism_from(&mut rng, &b.target, 6, 2);
        let ab_c = compose_bordisms(&compose_bordisms(&a, &b).unwrap(), &c).unwrap();
        let a_bc = compose_bordisms(&a, &compose_bordisms(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn normal_form_recomposes(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let b = bordism::random_bordism(&mut rng, 8, 2);
        for strategy in [Strategy::CapsFirst, Strategy::CupsFirst] {
            prop_assert_eq!(&recompose(&normal_form(&b, strategy)).unwrap(), &b);
        }
    }

    #[test]
    fn evaluation_is_strategy_independent(seed in any::<u64>()) {
        let limits = Limits::default();
        let sl = corpus::superline_smc();
        let od = sl.base.obj_by_name("od").unwrap();
        let d = duality::first_dual(&sl, od, &limits).unwrap().unwrap();
        let mut rng = SplitMix64::new(seed);
        let b = bordism::random_bordism(&mut rng, 6, 2);
        prop_assert_eq!(
            eval_bordism(&sl, &d, &b, Strategy::CapsFirst).unwrap(),
            eval_bordism(&sl, &d, &b, Strategy::CupsFirst).unwrap()
        );
    }

    #[test]
    fn criterion_matches_oracle_on_sampled_instances(idx in 0usize..200) {
        use std::sync::OnceLock;
        static INSTANCES: OnceLock<Vec<corpus::LaxInstance>> = OnceLock::new();
        let limits = Limits::default();
        let instances = INSTANCES.get_or_init(corpus::acceptance_lax_instances);
        let (dom, cod, phi) = &instances[idx % instances.len()];
        let l = laxlim::lax_limit(dom, cod, phi, &limits).unwrap();
        for i in l.cat.base.objects() {
            let x = *l.obj(i);
            let v = laxlim::criterion_dualizable(&l, &x, Mode::AtTwoObjects, &limits)
                .unwrap();
            let oracle =
                !duality::find_right_duals(&l.cat, i, &limits).unwrap().is_empty();
            prop_assert_eq!(v.is_dualizable, oracle);
        }
    }
}
