use qproj::gtrep::{build_irrep, enumerate_tableaux, weight_exponent, Generator, HighestWeight};
use qproj::qarith::{Precision, QParam};

fn main() -> qproj::Result<()> {
    let w: HighestWeight = "1,1".parse()?;
    let basis = enumerate_tableaux(&w);
    println!("n = {w}: {} tableaux", basis.len());
    for t in &basis {
        let a: Vec<i64> = (1..=w.ell()).map(|k| weight_exponent(k, t)).collect();
        println!("  {t}  a = {a:?}");
    }

    let m = build_irrep(&"0,1".parse()?, &QParam::half(), Precision::DEFAULT, 100)?;
    print!("{}", m.coordinate_list(Generator::E(1)));
    print!("{}", m.coordinate_list(Generator::K(2)));
    Ok(())
}
