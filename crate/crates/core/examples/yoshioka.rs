//! Mukai vectors as symmetric 2x2 matrices and the action of Ĝ.

use hklat::kummer::yoshioka::{mukai_pairing, yoshioka_matrix, yoshioka_pairing, GhatElement};

fn main() -> hklat::Result<()> {
    let m = 2;
    let v = (1, 0, -3);
    let w = (2, 1, 1);
    let p = yoshioka_matrix(v.0, v.1, v.2, m)?;
    let q = yoshioka_matrix(w.0, w.1, w.2, m)?;
    println!("{p:?}\n{q:?}");
    println!("pairing {} vs Mukai pairing {}", yoshioka_pairing(&p, &q)?, mukai_pairing(v, w, m));

    let g = GhatElement { a: 1, b: 1, c: 0, d: 1, r: 1, s: 2 };
    let gp = g.act(&p)?;
    println!("g·p = {gp:?}, square preserved: {}", yoshioka_pairing(&gp, &gp)? == yoshioka_pairing(&p, &p)?);
    Ok(())
}
