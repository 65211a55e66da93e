use linial_core::ehrhart::QuasiPoly;
use linial_core::linial::AdmissibleReport;
use linial_core::rootdata::RootSystemData;
use linial_core::verify::{LineCheckReport, TrackReport};

use crate::output::LimitRoots;

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn table(rows: &[RootSystemData]) -> String {
    let header = ["Phi", "exponents", "c_0..c_l", "h", "f", "|W|", "period"];
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|d| {
            [
                d.id.to_string(),
                join(&d.exponents, ","),
                join(&d.marks, ","),
                d.coxeter_number.to_string(),
                d.index_of_connection.to_string(),
                d.weyl_order.to_string(),
                d.period.to_string(),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|j| cells.iter().map(|r| r[j].len()).chain([header[j].len()]).max().unwrap())
        .collect();
    let line = |r: &[String]| -> String {
        let s: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        s.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&header.map(String::from));
    for r in &cells {
        out += &line(r);
    }
    out
}

/// Constituents grouped by equal polynomials, e.g. `q = 1,5 mod 6: t^2 - 6t + 11`.
pub fn quasi(q: &QuasiPoly, var: char) -> String {
    let n = q.period();
    let cs = q.constituents();
    let mut seen = vec![false; n];
    let mut out = String::new();
    if cs.iter().all(|c| *c == cs[0]) {
        return format!("{}\n", cs[0].display_in(var));
    }
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let class: Vec<usize> = (i..n).filter(|&j| cs[j] == cs[i]).collect();
        for &j in &class {
            seen[j] = true;
        }
        out += &format!("q = {} mod {n}: {}\n", join(&class, ","), cs[i].display_in(var));
    }
    out
}

pub fn admissible(r: &AdmissibleReport) -> String {
    format!("residues {}\ndivisors {}; m0={}\n", join(&r.residues, ","), join(&r.divisors, ","), r.m0)
}

pub fn line_check(r: &LineCheckReport) -> String {
    let mut out = format!("on line Re t = {}: {}\n", r.center, r.on_line);
    if let Some(g) = &r.reduced {
        out += &format!("reduced G(u) = {}\n", g.display_in('u'));
    }
    for f in &r.sturm {
        out += &format!(
            "  factor degree {} multiplicity {}: {} real roots <= 0\n",
            f.degree, f.multiplicity, f.nonpositive_real_roots
        );
    }
    if let Some(dev) = r.max_deviation {
        out += &format!("max distance from line {dev:.3e}\n");
    }
    out
}

pub fn limit_roots(l: &LimitRoots) -> String {
    let mut out = format!("max real part {:.6}\n", l.max_real_part);
    for z in &l.set.roots {
        out += &format!("  {:+.6} {:+.6}i\n", z.re, z.im);
    }
    out
}

pub fn track(r: &TrackReport) -> String {
    let mut out = format!("residue {}\n", r.residue);
    for p in &r.points {
        out += &format!("  m = {:>6}  distance {:.6e}\n", p.m, p.distance);
    }
    out
}

