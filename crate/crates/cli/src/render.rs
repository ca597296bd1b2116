//! Output formats for computed series. All of them list entries sorted by
//! (size, encoding) and contain nothing that varies between runs.

use anyhow::Result;
use clap::ValueEnum;
use qtree::algebra::cyclotomic::split_q_power;
use qtree::algebra::rational::format_rational;
use qtree::algebra::{factor_cyclotomic, rat, QPoly, QRat, Rational, XPoly};
use serde_json::{json, Map, Value};

use crate::series::AnySeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Tex,
}

pub fn render(
    format: Format,
    name: &str,
    params: &Map<String, Value>,
    series: &AnySeries,
) -> Result<String> {
    match format {
        Format::Json => {
            let mut doc = series.to_json();
            doc["series"] = json!(name);
            doc["params"] = Value::Object(params.clone());
            json_lines(&doc)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["tree", "size", "coefficient"])?;
            for (enc, size, coeff) in rows(series, |c| c.to_string(), |c| c.to_string()) {
                w.write_record([enc, size.to_string(), coeff])?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        Format::Tex => {
            let mut out = format!("% {name}");
            for (k, v) in params {
                out.push_str(&format!(" {k}={v}"));
            }
            out.push_str(&format!(", order {}\n\\begin{{align*}}\n", series.order()));
            for (enc, _, coeff) in rows(series, tex_xpoly, tex_qrat) {
                out.push_str(&format!("\\texttt{{{enc}}} &\\mapsto {coeff} \\\\\n"));
            }
            out.push_str("\\end{align*}\n");
            Ok(out)
        }
    }
}

/// Top-level keys one per line and one entry per line; keys stay sorted.
fn json_lines(doc: &Value) -> Result<String> {
    let obj = doc.as_object().expect("series documents are objects");
    let mut out = String::from("{\n");
    for (i, (k, v)) in obj.iter().enumerate() {
        out.push_str(&format!("  {}: ", serde_json::to_string(k)?));
        match (k.as_str(), v) {
            ("entries", Value::Array(items)) if !items.is_empty() => {
                out.push_str("[\n");
                for (j, e) in items.iter().enumerate() {
                    let sep = if j + 1 < items.len() { "," } else { "" };
                    out.push_str(&format!("    {}{sep}\n", serde_json::to_string(e)?));
                }
                out.push_str("  ]");
            }
            _ => out.push_str(&serde_json::to_string(v)?),
        }
        out.push_str(if i + 1 < obj.len() { ",\n" } else { "\n" });
    }
    out.push_str("}\n");
    Ok(out)
}

fn rows(
    series: &AnySeries,
    fx: impl Fn(&XPoly) -> String,
    fq: impl Fn(&QRat) -> String,
) -> Vec<(String, usize, String)> {
    match series {
        AnySeries::X(s) => s
            .entries()
            .into_iter()
            .map(|(t, c)| (t.encoding().to_string(), t.size(), fx(c)))
            .collect(),
        AnySeries::Q(s) => s
            .entries()
            .into_iter()
            .map(|(t, c)| (t.encoding().to_string(), t.size(), fq(c)))
            .collect(),
    }
}

/// `c · q^a x^b` terms, ascending in `x` then `q`, as TeX.
fn tex_terms(terms: &[(Rational, usize, usize)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, qe, xe)) in terms.iter().enumerate() {
        let neg = *c < rat(0);
        let abs = if neg { -c } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut mono = Vec::new();
        match qe {
            0 => {}
            1 => mono.push("q".to_string()),
            _ => mono.push(format!("q^{{{qe}}}")),
        }
        match xe {
            0 => {}
            1 => mono.push("x".to_string()),
            _ => mono.push(format!("x^{{{xe}}}")),
        }
        let coeff = if *abs.denom() == 1.into() {
            format_rational(&abs)
        } else {
            format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
        };
        if mono.is_empty() {
            out.push_str(&coeff);
        } else {
            if abs != rat(1) {
                out.push_str(&coeff);
                out.push(' ');
            }
            out.push_str(&mono.join(" "));
        }
    }
    out
}

fn qpoly_terms(p: &QPoly, xe: usize) -> Vec<(Rational, usize, usize)> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != rat(0))
        .map(|(i, c)| (c.clone(), i, xe))
        .collect()
}

fn term_count(p: &QPoly) -> usize {
    p.coeffs().iter().filter(|c| **c != rat(0)).count()
}

/// Denominator as `q^k Φ_d^m ... (rest)`, after moving its unit into `num`.
fn tex_denominator(den: &QPoly) -> (Rational, String) {
    let (k, rest) = split_q_power(den);
    let f = factor_cyclotomic(&rest).expect("denominator is nonzero");
    let mut parts = Vec::new();
    match k {
        0 => {}
        1 => parts.push("q".to_string()),
        _ => parts.push(format!("q^{{{k}}}")),
    }
    for (d, m) in &f.factors {
        parts.push(if *m == 1 {
            format!("\\Phi_{{{d}}}")
        } else {
            format!("\\Phi_{{{d}}}^{{{m}}}")
        });
    }
    if !f.remainder.is_one() {
        parts.push(format!("({})", tex_terms(&qpoly_terms(&f.remainder, 0))));
    }
    (f.unit, parts.join(""))
}

fn fraction(num: String, den: String) -> String {
    if den.is_empty() {
        num
    } else {
        format!("\\frac{{{num}}}{{{den}}}")
    }
}

pub fn tex_qrat(c: &QRat) -> String {
    let (unit, den) = tex_denominator(c.denominator());
    let num = c.numerator().scale(&(rat(1) / unit));
    fraction(tex_terms(&qpoly_terms(&num, 0)), den)
}

/// `([i]_q + q^i x)` for `i = 1, 2, ...`, the linear factors that show up in
/// pawn numerators.
fn known_factor(i: usize) -> XPoly {
    XPoly::linear(QRat::q_integer(i as i64), QRat::q_pow(i as i64))
}

pub fn tex_xpoly(c: &XPoly) -> String {
    let Some(deg) = c.degree() else {
        return "0".into();
    };
    let mut den = QPoly::one();
    for k in c.coeffs() {
        let d = k.denominator();
        den = den.mul_ref(&d.exact_div(&den.gcd(d)).expect("gcd divides"));
    }
    let (unit, den_tex) = tex_denominator(&den);
    let scale = QRat::from_poly(den).scale(&(rat(1) / unit));
    let mut rest = c.scale(&scale);
    let mut factors = Vec::new();
    for i in 1..=deg {
        while rest.degree().unwrap_or(0) > 0 {
            match rest.exact_div_linear(&QRat::q_integer(i as i64), &QRat::q_pow(i as i64)) {
                Ok(quot) if quot.coeffs().iter().all(QRat::is_polynomial) => {
                    factors.push(format!("({})", tex_x_terms(&known_factor(i))));
                    rest = quot;
                }
                _ => break,
            }
        }
    }
    let rest_terms = x_terms(&rest);
    let mut num = factors.concat();
    if rest_terms == [(rat(-1), 0, 0)] && !factors.is_empty() {
        num.insert(0, '-');
    } else if factors.is_empty() {
        num = tex_terms(&rest_terms);
    } else if rest_terms != [(rat(1), 0, 0)] {
        let single = rest.degree() == Some(0) && term_count(rest.coeff(0).numerator()) == 1;
        if single {
            num.insert_str(0, &tex_terms(&rest_terms));
        } else {
            num.push_str(&format!("({})", tex_terms(&rest_terms)));
        }
    }
    fraction(num, den_tex)
}

fn x_terms(p: &XPoly) -> Vec<(Rational, usize, usize)> {
    let mut out = Vec::new();
    for (xe, c) in p.coeffs().iter().enumerate() {
        debug_assert!(c.is_polynomial());
        out.extend(qpoly_terms(c.numerator(), xe));
    }
    out
}

fn tex_x_terms(p: &XPoly) -> String {
    tex_terms(&x_terms(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qtree::pawn::solve_pawn;
    use qtree::trees::Tree;

    #[test]
    fn small_pawn_terms() {
        let p = solve_pawn(3);
        assert_eq!(tex_xpoly(&p.coeff(Tree::vertex())), "(1 + q x)");
        assert_eq!(
            tex_xpoly(&p.coeff(Tree::linear(2))),
            "\\frac{(1 + q x)(1 + q + q^{2} x)}{\\Phi_{2}}"
        );
        assert_eq!(
            tex_xpoly(&p.coeff(Tree::corolla(2))),
            "\\frac{(1 + q x)(1 + q + q^{2} x)(1 + q + q^{2} + q^{2} x + q^{3} x)}{\\Phi_{2}\\Phi_{3}}"
        );
    }

    #[test]
    fn rational_functions() {
        let c = QRat::new(QPoly::from_ints(&[1, -1]), QPoly::from_ints(&[-2, -2])).unwrap();
        assert_eq!(tex_qrat(&c), "\\frac{-\\frac{1}{2} + \\frac{1}{2} q}{\\Phi_{2}}");
        assert_eq!(tex_qrat(&QRat::q_pow(-2)), "\\frac{1}{q^{2}}");
        assert_eq!(tex_qrat(&QRat::from_i64(3)), "3");
    }
}
