use qproj::bundles::{ker_el_combinatorial, ker_el_numeric};
use qproj::qarith::{Precision, QParam};

fn main() -> qproj::Result<()> {
    let q = QParam::half();
    for ell in 1..=3 {
        for n in [-2, 0, 1, 3] {
            let blocks = ker_el_numeric(ell, n, 2, &q, Precision::DEFAULT, 20_000)?;
            let per_block: Vec<usize> = blocks.iter().map(|b| b.dim_kernel).collect();
            println!(
                "ell={ell} N={n:>2}: blocks {per_block:?}, total {}, count {}",
                per_block.iter().sum::<usize>(),
                ker_el_combinatorial(ell, n)
            );
        }
    }
    Ok(())
}
