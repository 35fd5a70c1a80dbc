//! Classification tables for n = 5, 25 and 125.

use serde_json::{json, Value};

use sylow_core::omega::{capital_m, gap_report, little_m, omega_shape};
use sylow_core::oracle::verify::check_against_shape;
use sylow_core::oracle::Oracle;
use sylow_core::trees::{class_key_0p, enumerate_chars, CharDescriptor, DEFAULT_GUARD};
use sylow_core::Result;

/// Left-aligned columns separated by two spaces.
pub fn render(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            s.push_str(c);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(w - c.chars().count() + 2));
            }
        }
        s.push('\n');
        s
    };
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    let mut out = line(&header);
    out.push_str(&line(&rule));
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

fn pretty(v: Value) -> String {
    serde_json::to_string(&v).expect("json") + "\n"
}

/// Members of each `~_{0,p}` class, in enumeration order of first appearance.
fn classes(thetas: &[CharDescriptor]) -> Vec<(String, Vec<&CharDescriptor>)> {
    let mut out: Vec<(String, Vec<&CharDescriptor>)> = Vec::new();
    for t in thetas {
        let key = class_key_0p(t).iter().map(|o| o.to_string()).collect::<Vec<_>>().join(" * ");
        match out.iter_mut().find(|(k, _)| *k == key) {
            Some((_, v)) => v.push(t),
            None => out.push((key, vec![t])),
        }
    }
    out
}

fn oracle_table(n: u32, json: bool, group: bool, title: &str) -> Result<String> {
    let oracle = Oracle::new(5, n)?;
    let thetas = enumerate_chars(5, n, DEFAULT_GUARD)?;
    let groups = if group { classes(&thetas) } else { thetas.iter().map(|t| (t.to_string(), vec![t])).collect() };
    let first = if group { "class (people as 1)" } else { "θ" };
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for (key, members) in groups {
        let shape = omega_shape(members[0])?;
        let mut agree = 0;
        for t in &members {
            let mults = oracle.multiplicities(t)?;
            agree += check_against_shape(t, &mults)?.is_empty() as usize;
        }
        let degree = members[0].degree().to_string();
        rows.push(vec![
            key.clone(),
            members.len().to_string(),
            degree.clone(),
            shape.to_string(),
            format!("{agree}/{}", members.len()),
        ]);
        items.push(json!({
            "class": key,
            "members": members.len(),
            "degree": degree,
            "omega": shape.to_string(),
            "oracle_agrees": agree,
        }));
    }
    Ok(if json {
        pretty(json!({ "n": n, "p": 5, "rows": items }))
    } else {
        format!("{title}\n\n{}", render(&[first, "size", "θ(1)", "Ω(θ)", "oracle"], &rows))
    })
}

pub fn table_5(json: bool) -> Result<String> {
    oracle_table(5, json, false, "Irr(P_5), p = 5")
}

pub fn table_25(json: bool) -> Result<String> {
    oracle_table(25, json, true, "Irr(P_25), p = 5, grouped up to relabelling people")
}

const RANK_THREE: [&str; 8] =
    ["X(0;0;0)", "X(0;0;1)", "X(0;1;0)", "X(1;0;0)", "X(0;1;1)", "X(1;0;1)", "X(1;1;0)", "X(1;1;1)"];

pub fn table_125(json: bool) -> Result<String> {
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for s in RANK_THREE {
        let t = CharDescriptor::parse(s, 5, None)?;
        let st = t.stats();
        let (m, big) = (little_m(&t)?, capital_m(&t)?);
        let g = gap_report(&t)?;
        rows.push(vec![
            s.to_string(),
            st.gamma(0).to_string(),
            st.gamma(1).to_string(),
            st.gamma(2).to_string(),
            m.to_string(),
            big.to_string(),
            g.gap.to_string(),
            g.c.to_string(),
        ]);
        items.push(json!({
            "theta": s,
            "gamma": [st.gamma(0), st.gamma(1), st.gamma(2)],
            "m": m,
            "M": big,
            "gap": g.gap,
            "c": g.c,
        }));
    }
    Ok(if json {
        pretty(json!({ "n": 125, "p": 5, "source": "formula path only", "rows": items }))
    } else {
        format!(
            "Linear characters of P_125, p = 5 (formula path only, no oracle)\n\n{}",
            render(&["θ", "γ0", "γ1", "γ2", "m", "M", "M-m", "c"], &rows)
        )
    })
}
