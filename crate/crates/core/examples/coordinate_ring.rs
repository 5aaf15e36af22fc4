use qproj::coordring::{
    graded_dim, normal_order, partitions_under, tensor_factorize_with, QMonomial,
};

fn main() -> qproj::Result<()> {
    let (c, m) = normal_order(3, &[3, 2, 1])?;
    println!("z3 z2 z1 = ({c}) {m}");

    for g in 2..=4 {
        let dims: Vec<usize> = (0..=5).map(|n| graded_dim(g, n)).collect();
        println!("{g} generators: {dims:?}");
    }

    let z = QMonomial::new(vec![1, 2, 1]);
    for r in partitions_under(z.exponents(), 2) {
        let f = tensor_factorize_with(&z, &r)?;
        println!("{} . {} = q^-{} {z}", f.z1, f.z2, f.exponent);
    }
    Ok(())
}
