//! Structure functions, dual log forms and the expansion of df/f for a divisor.
//!
//! Usage: `cargo run --example frame_calculus -- [catalog name]`

use logres::divisor::{catalog, dlog_f_expansion, dual_log_forms, form_structure_equations, StructureFunctions};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "sekiguchi_b5".into());
    let d = catalog(&name).expect("catalog entry");
    let vars = d.variables().to_vec();
    println!("f = {}", d.f().fmt_with(&vars));
    for el in d.frame() {
        println!("{} = {}", el.name, el.field.fmt_with(&vars));
    }
    let sf = StructureFunctions::compute(&d).expect("frame closes");
    let n = d.dim();
    for i in 0..n {
        for j in i + 1..n {
            let terms: Vec<String> = (0..n)
                .filter(|&k| !sf.get(i, j, k).is_zero())
                .map(|k| format!("({})·{}", sf.get(i, j, k).fmt_with(&vars), d.frame()[k].name))
                .collect();
            let rhs = if terms.is_empty() { "0".into() } else { terms.join(" + ") };
            println!("[{}, {}] = {rhs}", d.frame()[i].name, d.frame()[j].name);
        }
    }
    let dl = dlog_f_expansion(&d).expect("expansion");
    let dl: Vec<String> = dl.iter().map(|p| p.fmt_with(&vars)).collect();
    println!("df/f coefficients: {}", dl.join(", "));
    let fs = form_structure_equations(&sf);
    for (row, terms) in fs.rows.iter().enumerate() {
        let t: Vec<String> = terms
            .iter()
            .map(|(a, b, p)| format!("({})·w{a}∧w{b}", p.fmt_with(&vars)))
            .collect();
        println!("dw{row} = {}", if t.is_empty() { "0".into() } else { t.join(" + ") });
    }
    let forms = dual_log_forms(&d).expect("dual forms");
    println!("dual forms share denominator {}·f; pairing ok: {}", forms.constant, forms.pairing_holds(&d));
}
