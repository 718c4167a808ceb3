use salient_web::{gamma_lattice, sn_classes, umbral_counts};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn classes_of_s4() {
    let v = parse(sn_classes(4, 0).unwrap());
    assert_eq!(v["count"], 8);
    assert_eq!(v["formula"], "8");
    assert_eq!(v["classes"][0]["representative"], "1234");

    let v = parse(sn_classes(5, 3).unwrap());
    assert_eq!(v["relation"], "geq:3");
    assert_eq!(v["count"], 54);
    assert!(v["formula"].is_null());

    assert!(sn_classes(9, 0).is_err());
}

#[test]
fn lattice_page_data() {
    let v = parse(gamma_lattice("01011").unwrap());
    assert_eq!(v["rank"], 6);
    assert_eq!(v["multiplicity_free"], true);
    assert_eq!(v["extensions"], "11");
    let svg = v["svg"].as_str().unwrap();
    assert!(svg.starts_with("<svg") && svg.ends_with("</svg>"));
    assert_eq!(
        svg.matches("<circle").count(),
        v["elements"].as_u64().unwrap() as usize
    );
    assert!(gamma_lattice("11").is_err());
}

#[test]
fn umbral() {
    assert_eq!(
        parse(umbral_counts(2, 4).unwrap()),
        serde_json::json!(["1", "1", "1", "6", "216"])
    );
    assert!(umbral_counts(0, 3).is_err());
    assert!(umbral_counts(2, 40).is_err());
}
