use tiltglue::bundled::ExampleData;
use tiltglue::glue::{
    check_glued_pair, glue_cotilting, glue_cotilting_via_duality, glue_tilting, Universes,
};
use tiltglue::recollement::Recollement;

fn setup() -> (ExampleData, Recollement, Universes) {
    let d = ExampleData::load(None).unwrap();
    let r =
        Recollement::with_algebras(&d.lambda, &[0, 1], &d.lambda_prime, &d.lambda_dprime).unwrap();
    let u = Universes {
        a: d.universe_prime.clone(),
        total: d.universe.clone(),
        c: d.universe_dprime.clone(),
    };
    (d, r, u)
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

fn expect(names: &[&str]) -> Vec<String> {
    sorted(names.iter().map(|s| s.to_string()).collect())
}

#[test]
fn glued_tilting_module() {
    let (d, r, u) = setup();
    let out = glue_tilting(&r, &d.tilting_t1, 1, &d.tilting_t3, 2, &u).unwrap();
    assert_eq!(
        sorted(out.summand_names()),
        expect(&[
            "(S(2)|0)",
            "(S(2)|P(4))",
            "(P(1)|0)",
            "(P(1)|P(3))",
            "(S(1)|S(3))"
        ])
    );
    assert_eq!(out.n2, 2);
    assert!(out.verdict.is_accepted());
    assert!(out.matches_core);
    assert!(out.bounds.iter().all(|b| b.holds()), "{:?}", out.bounds);
    assert_eq!(out.split_check, None);
    let cert = check_glued_pair(&out.glued).unwrap();
    assert!(cert.ok());
    for kc in &out.k_constructions {
        assert!(kc.column.is_exact() && kc.row.is_exact());
        assert!(kc.preenvelope.recheck().unwrap());
    }
}

#[test]
fn glued_cotilting_module() {
    let (d, r, u) = setup();
    let out = glue_cotilting(&r, &d.cotilting_t1, 1, &d.cotilting_t3, 2, &u).unwrap();
    assert_eq!(
        sorted(out.summand_names()),
        expect(&[
            "(0|P(5))",
            "(S(1)|0)",
            "(P(1)|P(3))",
            "(P(1)|P(4))",
            "(P(1)|0)"
        ])
    );
    assert!(out.verdict.is_accepted());
    assert!(out.bounds.iter().all(|b| b.holds()), "{:?}", out.bounds);
    assert!(check_glued_pair(&out.glued).unwrap().ok());
}

#[test]
fn duality_route_for_cotilting() {
    let (d, r, u) = setup();
    let (_, mult) =
        glue_cotilting_via_duality(&r, &d.cotilting_t1, 1, &d.cotilting_t3, 2, &u).unwrap();
    eprintln!("duality route: {}", u.total.describe(&mult));
}
