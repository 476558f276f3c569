//! Verifies Saito's criterion for every catalog divisor.

use logres::divisor::{catalog, verify_saito, CATALOG_NAMES};

fn main() {
    for template in CATALOG_NAMES {
        // parametrized families are shown with one representative each
        let name = match *template {
            "plane_curve(p,q)" => "plane_curve(3,4)",
            "normal_crossing(k)" => "normal_crossing(3)",
            n => n,
        };
        let d = catalog(name).expect("catalog entry");
        let verdict = verify_saito(&d, 0);
        let constant = verdict.constant().map(|c| c.to_string()).unwrap_or_else(|| "-".into());
        println!(
            "{name:<20} n={} deg f={} ok={} det = {constant}·f",
            d.dim(),
            d.degree(),
            verdict.is_ok()
        );
    }
}
