fn main() {
    let lam = bmw_core::Partition::new(vec![2]).unwrap();
    let rep = bmw_core::construct_rep(4, 1, &lam).unwrap();
    let rpt = bmw_core::certify_relations(&rep);
    for c in &rpt.checks {
        if !c.pass {
            println!("FAIL {}: {}", c.name, c.detail.clone().unwrap_or_default());
        }
    }
    println!("basis:");
    for (i, t) in rep.basis.iter().enumerate() {
        println!("  {i}: {t}");
    }
}
