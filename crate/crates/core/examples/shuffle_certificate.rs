use dashu_ratio::RBig;
use qproj::cocycle::{solve_cocycle_system, verify_membership, verify_membership_spanning_tree};

fn main() {
    for ell in 1..=4 {
        match solve_cocycle_system(ell, &RBig::ONE) {
            Ok(s) => {
                let x: Vec<String> = s.x.iter().map(|v| v.to_string()).collect();
                println!(
                    "ell={ell} r={} bridge={} k={}",
                    s.chains.r(),
                    s.chains.bridge,
                    s.k
                );
                println!("  x = [{}]", x.join(", "));
            }
            Err(e) => println!("ell={ell}: {e}"),
        }
        let m = verify_membership(ell);
        let t = verify_membership_spanning_tree(ell);
        println!(
            "  chain certificate: {} ({} pairs); spanning tree: {} ({} pairs)",
            m.member,
            m.pairs.len(),
            t.member,
            t.pairs.len()
        );
    }
}
