//! Move one primitive vector to another with an explicit Eichler word.

use hklat::eichler::eichler_transport;
use hklat::json::word_to_json;
use hklat::kummer::kummer_frame;
use hklat::rational::int;
use hklat::verify::sampling::kum_split;

fn main() -> hklat::Result<()> {
    let k = kummer_frame(3)?;
    let split = kum_split(&k);
    let u = &(&k.e(1) + &k.e(2)).scale(&int(2)) + &k.delta_tilde();
    let v = &(&k.alpha_tilde() - &k.beta()).scale(&int(2)) + &k.delta_tilde();
    println!("u = {u}\nv = {v}\nu^2 = v^2 = {}", u.square());

    let t = eichler_transport(&split, &u, &v)?;
    println!("word of length {}:", t.word.letters.len());
    println!("{}", serde_json::to_string(&word_to_json(&t.word)).expect("json"));
    assert_eq!(t.isometry.apply(&u)?, v);
    Ok(())
}
