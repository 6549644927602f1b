use tiltglue::bundled::ExampleData;
use tiltglue::modcat::{projective, simple, Universe};
use tiltglue::recollement::{audit, Recollement};

fn setup() -> (ExampleData, Recollement) {
    let d = ExampleData::load(None).unwrap();
    let r =
        Recollement::with_algebras(&d.lambda, &[0, 1], &d.lambda_prime, &d.lambda_dprime).unwrap();
    (d, r)
}

fn name(u: &Universe, m: &tiltglue::modcat::QModule) -> String {
    u.name(u.identify(m).unwrap().expect("indecomposable member"))
        .to_string()
}

#[test]
fn functor_values_on_the_example() {
    let (d, r) = setup();
    let u = &d.universe;
    let p1 = projective(&d.lambda_prime, 0).unwrap();
    let s2 = simple(&d.lambda_prime, 1).unwrap();
    assert_eq!(name(u, &r.i_star(&p1).unwrap()), "(P(1)|0)");
    assert_eq!(name(u, &r.i_star(&s2).unwrap()), "(S(2)|0)");
    let p3 = projective(&d.lambda_dprime, 0).unwrap();
    let p4 = projective(&d.lambda_dprime, 1).unwrap();
    let s3 = simple(&d.lambda_dprime, 0).unwrap();
    assert_eq!(name(u, &r.j_lower_shriek(&p3).unwrap()), "(P(1)|P(3))");
    assert_eq!(name(u, &r.j_lower_shriek(&p4).unwrap()), "(S(2)|P(4))");
    assert_eq!(name(u, &r.j_lower_shriek(&s3).unwrap()), "(S(1)|S(3))");
}

#[test]
fn identities_hold_on_all_universes() {
    let (d, r) = setup();
    let lines = audit(&r, &d.universe_prime, &d.universe, &d.universe_dprime).unwrap();
    for l in &lines {
        assert!(l.passed(), "{}: {:?}", l.name, l.failures);
        assert!(l.checked > 0, "{} checked nothing", l.name);
    }
}

#[test]
fn lower_sequence_is_not_left_exact_everywhere() {
    let (d, r) = setup();
    let broken = d
        .universe
        .members()
        .iter()
        .filter(|m| {
            !r.canonical_sequence_lower(m)
                .unwrap()
                .certified
                .left_injective
        })
        .count();
    assert!(broken > 0);
}

#[test]
fn upper_sequence_of_p1_p3() {
    let (d, r) = setup();
    let m = d
        .universe
        .member(d.universe.index_of("(P(1)|P(3))").unwrap());
    let s = r.canonical_sequence_upper(m).unwrap();
    assert!(s.is_short_exact());
    assert_eq!(name(&d.universe, s.left.source()), "(P(1)|0)");
    assert_eq!(
        s.left.source().total_dim() + s.right.target().total_dim(),
        m.total_dim()
    );
}

/// `3 → 4 → 1` with `ea = 0`: `N = e_1 Λ e_C` is spanned by `e` alone and
/// is not projective as a right module over the C-side.
#[test]
fn non_flat_bimodule_makes_j_lower_shriek_inexact() {
    use tiltglue::format::{parse_algebra, AlgebraOptions};
    let text = "vertices 1 3 4\narrow a 3 4\narrow e 4 1\nrelation 1*ea = 0\n";
    let alg = parse_algebra(text, "bad", &AlgebraOptions::default()).unwrap();
    let r = Recollement::build(&alg, &[0]).unwrap();
    assert!(!r.exactness().j_lower_shriek());
}
