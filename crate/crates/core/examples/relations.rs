use qproj::gtrep::{build_irrep, verify_relations};
use qproj::qarith::{Precision, QParam, QScalar};

fn main() -> qproj::Result<()> {
    let p = Precision::DEFAULT;
    let m = build_irrep(&"1,0,1".parse()?, &QParam::half(), p, 20_000)?;
    let report = verify_relations(&m, &QScalar::ten_pow(-40, p));
    for c in &report.checks {
        println!(
            "{:<50} {:>14}  {}",
            c.relation,
            c.max_residual.to_decimal(4),
            c.pass
        );
    }
    println!("dim {}; all relations hold: {}", m.dim(), report.pass);
    Ok(())
}
