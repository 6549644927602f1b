use tiltglue::bundled::ExampleData;
use tiltglue::homology::{ext_dim, ext_dim_via_cosyzygy, global_dimension, pd, DEFAULT_DIM_CAP};
use tiltglue::modcat::{hom_dim, injective, is_indecomposable, projective, Universe};

fn data() -> ExampleData {
    ExampleData::load(None).unwrap()
}

fn name_of(u: &Universe, m: &tiltglue::modcat::QModule) -> String {
    u.name(u.identify(m).unwrap().expect("member")).to_string()
}

#[test]
fn bundled_universes_verify() {
    let d = data();
    for u in [&d.universe, &d.universe_prime, &d.universe_dprime] {
        assert!(u.verify().unwrap().is_empty(), "{:?}", u.verify());
    }
}

#[test]
fn projectives_and_injectives_of_lambda() {
    let d = data();
    let u = &d.universe;
    let p: Vec<String> = (0..5)
        .map(|v| name_of(u, &projective(&d.lambda, v).unwrap()))
        .collect();
    assert_eq!(
        p,
        [
            "(P(1)|0)",
            "(S(2)|0)",
            "(P(1)|P(3))",
            "(S(2)|P(4))",
            "(0|P(5))"
        ]
    );
    let i: Vec<String> = (0..5)
        .map(|v| name_of(u, &injective(&d.lambda, v).unwrap()))
        .collect();
    assert_eq!(
        i,
        [
            "(S(1)|S(3))",
            "(P(1)|P(3))",
            "(0|S(3))",
            "(0|P(3))",
            "(0|P(4))"
        ]
    );
}

#[test]
fn global_dimensions() {
    let d = data();
    assert_eq!(global_dimension(&d.lambda_prime, DEFAULT_DIM_CAP), Some(1));
    assert_eq!(global_dimension(&d.lambda_dprime, DEFAULT_DIM_CAP), Some(2));
    assert_eq!(global_dimension(&d.lambda, DEFAULT_DIM_CAP), Some(2));
    let s1s3 = d
        .universe
        .member(d.universe.index_of("(S(1)|S(3))").unwrap());
    assert_eq!(pd(s1s3, DEFAULT_DIM_CAP), Some(2));
}

#[test]
fn members_are_indecomposable() {
    let d = data();
    for m in d.universe.members() {
        assert!(is_indecomposable(m).unwrap());
    }
}

#[test]
fn yoneda_dimension_formula() {
    let d = data();
    for u in [&d.universe, &d.universe_prime, &d.universe_dprime] {
        let a = u.algebra();
        for v in 0..a.vertex_count() {
            let p = projective(a, v).unwrap();
            for m in u.members() {
                assert_eq!(hom_dim(&p, m).unwrap(), m.dim_at(v));
            }
        }
    }
}

#[test]
fn syzygy_and_cosyzygy_routes_agree() {
    let d = data();
    for u in [&d.universe, &d.universe_prime, &d.universe_dprime] {
        for x in u.members() {
            for y in u.members() {
                for i in 1..=4 {
                    assert_eq!(
                        ext_dim(x, y, i).unwrap(),
                        ext_dim_via_cosyzygy(x, y, i).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn duality_preserves_ext() {
    let d = data();
    for u in [&d.universe, &d.universe_prime, &d.universe_dprime] {
        for x in u.members() {
            for y in u.members() {
                for i in 1..=3 {
                    let lhs = ext_dim(x, y, i).unwrap();
                    let rhs = ext_dim(&y.dualize(), &x.dualize(), i).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
