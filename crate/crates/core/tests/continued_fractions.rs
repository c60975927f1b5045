use burge_core::cfmachine::{
    bar_pair, build_cartan, cf_expand, cf_toggle_rep, mn_solve, quad_form, sum_of_squares, QuadVariant,
};
use burge_core::{CoprimePair, Rep};

fn pairs(a_max: i64) -> Vec<CoprimePair> {
    CoprimePair::all_up_to(a_max)
}

#[test]
fn d_is_independent_of_representation() {
    for p in pairs(20) {
        if (p.a(), p.b()) == (2, 1) {
            continue;
        }
        let long = cf_expand(p, Rep::LastAtLeastTwo);
        let short = cf_expand(p, Rep::LastOne);
        assert_eq!(long.d(), short.d(), "{p}");
        assert_eq!(cf_toggle_rep(&long).unwrap(), short);
        assert_eq!(cf_toggle_rep(&short).unwrap(), long);
    }
}

#[test]
fn toggling_touches_only_the_tail() {
    for p in pairs(20) {
        if (p.a(), p.b()) == (2, 1) {
            continue;
        }
        let x = build_cartan(&cf_expand(p, Rep::LastAtLeastTwo));
        let y = build_cartan(&cf_expand(p, Rep::LastOne));
        let d = x.d;
        let mut changed = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if x.incidence[i][j] != y.incidence[i][j] {
                    changed.push((i, j, x.incidence[i][j], y.incidence[i][j]));
                }
            }
        }
        assert_eq!(changed, vec![(d - 2, d - 2, 0, 1), (d - 2, d - 1, 1, -1)], "{p}");
        assert_eq!(x.tau, y.tau);
    }
}

#[test]
fn cartan_is_twice_identity_minus_incidence() {
    for p in pairs(15) {
        for rep in [Rep::LastAtLeastTwo, Rep::LastOne] {
            if rep == Rep::LastOne && (p.a(), p.b()) == (2, 1) {
                continue;
            }
            let c = build_cartan(&cf_expand(p, rep));
            for i in 0..c.d {
                for j in 0..c.d {
                    let id = if i == j { 2 } else { 0 };
                    assert_eq!(c.cartan[i][j], id - c.incidence[i][j]);
                }
            }
        }
    }
}

#[test]
fn mirrored_pairs_share_abar() {
    // (2,1) is its own mirror and falls under both edge rules
    for p in pairs(20).into_iter().filter(|p| p.a() > 2) {
        let q = CoprimePair::new(p.a(), p.a() - p.b()).unwrap();
        let (x, y) = (bar_pair(p), bar_pair(q));
        assert_eq!(x.abar, y.abar, "{p}");
        assert_eq!(x.abar, x.bbar + y.bbar, "{p}");
    }
}

#[test]
fn abar_sits_on_the_same_side_of_twice_bbar() {
    for p in pairs(20) {
        let bp = bar_pair(p);
        if p.a() < 2 * p.b() {
            assert!(bp.abar <= 2 * bp.bbar, "{p}");
        } else {
            assert!(bp.abar >= 2 * bp.bbar, "{p}");
        }
    }
}

#[test]
fn bar_pair_is_a_neighbour() {
    // |a bbar - abar b| = 1 for every pair
    for p in pairs(20) {
        let bp = bar_pair(p);
        assert_eq!((p.a() * bp.bbar - bp.abar * p.b()).abs(), 1, "{p}");
    }
}

#[test]
fn mn_solve_satisfies_the_linear_system() {
    for p in pairs(9) {
        let c = build_cartan(&cf_expand(p, Rep::LastAtLeastTwo));
        let m: Vec<i64> = (0..c.d as i64).map(|k| (k * 7 + 3) % 4).collect();
        let n = mn_solve(&c, 20, &m).unwrap();
        for (j, nj) in n.iter().enumerate() {
            let want = if j == 0 { 20 } else { 0 };
            assert_eq!(nj + c.row_dot(j, &m), want);
        }
        assert!(mn_solve(&c, 20, &m[1..]).is_err());
    }
}

#[test]
fn quadratic_form_is_a_sum_of_squares() {
    for p in pairs(12) {
        let c = build_cartan(&cf_expand(p, Rep::LastAtLeastTwo));
        for seed in 0..20i64 {
            let m: Vec<i64> = (0..c.d as i64).map(|k| (k * 5 + seed * 3) % 7 - 2).collect();
            assert_eq!(
                quad_form(&c, &m, QuadVariant::Full).unwrap(),
                sum_of_squares(&c, &m).unwrap(),
                "{p} {m:?}"
            );
        }
    }
}
