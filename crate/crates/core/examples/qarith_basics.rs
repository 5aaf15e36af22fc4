use qproj::qarith::{q_binomial, q_int, q_multinomial, Precision, QParam};

fn main() -> qproj::Result<()> {
    let q = QParam::new(1, 2)?;
    let p = Precision::DEFAULT;

    let five = q_int(5);
    println!("[5] = {five}");
    println!(
        "[5] at q = {q}: {} = {}",
        five.eval_exact(&q),
        five.eval(&q, p)
    );

    let b = q_binomial(4, 2)?;
    println!("binom(4,2)_q = {b}, palindromic: {}", b.is_palindromic());

    let m = q_multinomial(&[1, 1, 1])?;
    println!("multinomial(1,1,1) = {m}");
    Ok(())
}
