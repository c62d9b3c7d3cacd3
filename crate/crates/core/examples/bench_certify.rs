use std::time::Instant;
fn main() {
    for (n, f, lambda) in [(4u32, 1u32, vec![2u32]), (5, 1, vec![3]), (5, 2, vec![1]), (5, 1, vec![2,1])] {
        let lam = bmw_core::Partition::new(lambda.clone()).unwrap();
        let t0 = Instant::now();
        let rep = bmw_core::construct_rep(n, f, &lam).unwrap();
        let t1 = Instant::now();
        let rpt = bmw_core::certify_relations(&rep);
        let t2 = Instant::now();
        println!("({f},{lambda:?}) n={n} dim={} construct {:?} certify {:?} pass={}", rep.dim(), t1-t0, t2-t1, rpt.all_pass);
        for c in &rpt.checks { if c.millis > 500 { println!("   slow: {} {}ms", c.name, c.millis); } }
    }
}
