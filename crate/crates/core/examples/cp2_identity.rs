use qproj::dolbeault::cp2_coefficient_identity;
use qproj::qarith::{Precision, QParam};

fn main() -> qproj::Result<()> {
    let qs = [QParam::half(), QParam::new(3, 4)?, QParam::new(9, 10)?];
    let ns: Vec<u32> = (1..=20).collect();
    let report = cp2_coefficient_identity(&ns, &qs, Precision::DEFAULT);
    let worst = report
        .rows
        .iter()
        .map(|r| {
            r.cancellation_residual
                .clone()
                .max(r.total_residual.clone())
        })
        .fold(None, |acc: Option<_>, x| {
            Some(acc.map_or(x.clone(), |a: qproj::qarith::QScalar| a.max(x)))
        });
    println!("{} cases, all pass: {}", report.rows.len(), report.pass);
    if let Some(w) = worst {
        println!("largest residual {}", w.to_decimal(4));
    }
    Ok(())
}
