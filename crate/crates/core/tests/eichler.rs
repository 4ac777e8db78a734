use hklat::eichler::{eichler_transport, random_eu_element, EuSplit};
use hklat::json::{word_from_json, word_to_json, LetterJson};
use hklat::kummer::lattices::kum_lattice;
use hklat::kummer::{kummer_frame, KummerFrame};
use hklat::rational::int;
use hklat::verify::sampling::kum_split;

fn split(k: &KummerFrame) -> EuSplit {
    kum_split(k)
}

#[test]
fn lambda_x_has_fourteen_generators_all_stable() {
    let k = kummer_frame(3).unwrap();
    let s = split(&k);
    let gens = s.generators();
    assert_eq!(gens.len(), 14);
    let lx = kum_lattice(&k);
    for g in &gens {
        let m = hklat::classify::classify(g, &lx).unwrap();
        assert!(m.in_sohat_plus());
        assert!(g.preserves(&hklat::kummer::geometric_lattice(&k)));
    }
}

#[test]
fn transport_between_same_square_vectors() {
    let k = kummer_frame(3).unwrap();
    let s = split(&k);
    let y = &k.e(1) + &k.e(2);
    let x = &k.alpha_tilde() - &k.beta();
    let u = &y.scale(&int(2)) + &k.delta_tilde();
    let v = &x.scale(&int(2)) + &k.delta_tilde();
    let t = eichler_transport(&s, &u, &v).unwrap();
    assert_eq!(t.isometry.apply(&u).unwrap(), v);
    assert_eq!(s.word_isometry(&t.word).unwrap(), t.isometry);
}

#[test]
fn transport_rejects_different_discriminant_classes() {
    let k = kummer_frame(3).unwrap();
    let s = split(&k);
    // Both have square -6 but u/div(u) and v/div(v) lie in different classes.
    let u = k.delta_tilde();
    let v = &k.e(1) - &k.e(2).scale(&int(3));
    assert_eq!(u.square(), v.square());
    assert!(eichler_transport(&s, &u, &v).is_err());
}

#[test]
fn words_serialize_and_replay() {
    let k = kummer_frame(4).unwrap();
    let s = split(&k);
    let (word, g) = random_eu_element(&s, 6, 99, 3).unwrap();
    let text = serde_json::to_string(&word_to_json(&word)).unwrap();
    assert!(text.contains("\"gen\":\"t(e,a)\"") || text.contains("\"gen\":\"t(f,a)\""));
    let parsed: Vec<LetterJson> = serde_json::from_str(&text).unwrap();
    let back = word_from_json(&parsed, k.frame()).unwrap();
    assert_eq!(s.word_isometry(&back).unwrap(), g);
}
