use burge_core::burge::{bosonic_eval, condition_check, transform_step, tree_walk, BosonicSpec, Direction, TreeWalker};
use burge_core::fermionic::eval_F;
use burge_core::qcombinat::b_kernel;
use burge_core::verify::{check_identity, find_case, run_cases};
use burge_core::{Budget, CoprimePair, Family, Params};

/// The transform identities hold exactly when neither exclusion chain
/// does: every admitted instance is true and every excluded one is false.
#[test]
fn transform_conditions_are_sharp() {
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            for l in 0..=4 {
                for m in 0..=4 {
                    let rhs = b_kernel(l, m, a + b, b).shift(b * b);
                    let first = transform_step(Direction::B1, |x, y| b_kernel(x, y, a, b), l, m);
                    let second = transform_step(Direction::B2, |x, y| b_kernel(x, y, b, a), l, m);
                    let holds = first == rhs && second == rhs;
                    assert_eq!(holds, condition_check(l, m, a, b), "L={l} M={m} a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn shifted_comp_is_comp_plus_first_identity() {
    let case = find_case("comp2.sum").unwrap();
    for l in 0..=8 {
        for m in 0..=8 {
            let r = check_identity(&case, &Params::new().with("L", l).with("M", m)).unwrap();
            assert!(r.passed(), "L={l} M={m}");
        }
    }
}

#[test]
fn fresh_walker_matches_shared_one() {
    let walker = TreeWalker::new();
    for (a, b) in [(5, 2), (7, 3), (4, 1)] {
        let p = CoprimePair::new(a, b).unwrap();
        for l in 0..=4 {
            for m in 0..=4 {
                let fresh = walker.walk(p, Family::F, l, m).unwrap();
                assert_eq!(fresh, tree_walk(p, Family::F, l, m).unwrap());
                assert_eq!(fresh, eval_F(p, l, m).unwrap());
                assert_eq!(fresh, bosonic_eval(&BosonicSpec::thmmain(p), l, m).unwrap());
            }
        }
    }
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let cases: Vec<_> = ["thmmain", "GF", "AGid", "hookp"]
        .iter()
        .map(|id| find_case(id).unwrap())
        .collect();
    let budget = Budget {
        a_max: 5,
        l_max: 4,
        m_max: 4,
        n_max: 6,
        order: 20,
        hook_max: 4,
    };
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| run_cases(&cases, &budget))
            .iter()
            .map(|r| r.canonical())
            .collect::<Vec<_>>()
    };
    let one = run(1);
    assert!(!one.is_empty() && one.iter().all(|r| r.passed()));
    assert_eq!(one, run(4));
    assert_eq!(one, run(4));
}
