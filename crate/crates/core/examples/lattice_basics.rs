//! Build a small lattice, compute its HNF, dual and an orthogonal complement.

use hklat::lattice::{dual_lattice, orthogonal_complement, span_sublattice};
use hklat::matrix::Matrix;
use hklat::{AmbientFrame, FrameExt, QuadLattice};

fn main() -> hklat::Result<()> {
    // U ⊕ A2(-1)
    let gram = Matrix::from_i64_rows(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, -2, 1], &[0, 0, 1, -2]]);
    let frame = AmbientFrame::new("U+A2(-1)", vec!["e".into(), "f".into(), "a1".into(), "a2".into()], gram)?;
    let l = QuadLattice::standard(&frame);
    println!("rank {} det {} even {}", l.rank(), l.det(), l.is_even());

    let dual = dual_lattice(&l)?;
    println!("index [L^v : L] = {}", dual.index_of(&l).expect("finite index"));

    let e = frame.basis_vector("e");
    let f = frame.basis_vector("f");
    let h = span_sublattice(&frame, &[&e + &f])?;
    let perp = orthogonal_complement(&l, &h)?;
    println!("(e+f)^perp has rank {}, HNF:", perp.rank());
    for row in perp.hnf().rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }
    Ok(())
}
