use dashu_ratio::RBig;
use qproj::cocycle::{twisted_coboundary_check, ToyAlgebra};
use qproj::qarith::QParam;

fn main() -> qproj::Result<()> {
    let half = RBig::from_parts(1.into(), 2u8.into());
    let alg = ToyAlgebra::new(&QParam::half(), vec![RBig::from(2), half], 2);
    for n in 0..=4 {
        let r = twisted_coboundary_check(&alg, n, 5, 42)?;
        println!(
            "n={n}: {} tuples/sample, b^2 violations {}, invariance violations {}",
            r.tuples_per_sample, r.b_squared_violations, r.invariance_violations
        );
    }
    Ok(())
}
