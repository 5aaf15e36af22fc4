use qproj::dolbeault::{cp1_euler_characteristic, HalfInt};
use qproj::qarith::{Precision, QParam};

fn main() -> qproj::Result<()> {
    let q = QParam::new(9, 10)?;
    println!("{:>3} {:>4} {:>6} {:>4}", "N", "ker", "coker", "chi");
    for n in -4..=4 {
        let r = cp1_euler_characteristic(n, HalfInt::from_int(10), &q, Precision::DEFAULT)?;
        println!("{:>3} {:>4} {:>6} {:>4}", n, r.dim_ker, r.dim_coker, r.chi);
    }
    Ok(())
}
