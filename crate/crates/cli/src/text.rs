use boxtensor_core::derived::FamilyCheck;
use boxtensor_core::sweep::{Family, ProductSummary, SweepRow};

pub fn identified(name: &Option<String>) -> String {
    match name {
        Some(n) => format!("identified as {n}"),
        None => "not identified".to_string(),
    }
}

pub fn family_line(f: &FamilyCheck) -> String {
    let mut s = format!("{:<24} {} / {} tuples hold", f.name, f.tuples - f.failures, f.tuples);
    if let Some(t) = &f.first_failure {
        s.push_str(&format!(", first failure {t:?}"));
    }
    if f.nontrivial_witness {
        s.push_str(", nontrivial witnesses needed");
    }
    if let Some(w) = f.uniform_witness {
        s.push_str(&format!(", uniform witness {w}"));
    }
    s
}

fn product(p: &Option<ProductSummary>) -> String {
    match p {
        Some(p) => match &p.name {
            Some(n) => format!("{} ({n})", p.order),
            None => p.order.to_string(),
        },
        None => "-".to_string(),
    }
}

pub fn sweep_table(family: Family, rows: &[SweepRow]) -> String {
    let mut s = format!("family {}: {} rows\n", family.as_str(), rows.len());
    s.push_str(&format!(
        "{:<16} {:>5} {:<20} {:<22} {:<22} {}\n",
        "index", "size", "regime", "box", "inassaridze", "cyclic-derivative"
    ));
    for r in rows {
        let idx = format!("{:?}", r.index);
        let cd = match r.cyclic_derivative_holds {
            Some(true) => "holds",
            Some(false) => "VIOLATED",
            None => "-",
        };
        s.push_str(&format!(
            "{:<16} {:>5} {:<20} {:<22} {:<22} {}\n",
            idx,
            r.orbit_size,
            r.regime.as_str(),
            product(&r.box_product),
            product(&r.inassaridze),
            cd
        ));
        for n in &r.notes {
            s.push_str(&format!("    note: {n}\n"));
        }
    }
    s
}
