//! Canonical text form of polynomials. Output is graded-lex ordered with the
//! leading term first and always parses back to the same polynomial.

use num_traits::{One, Signed, Zero};

use crate::poly::{Exponent, SparsePoly};
use crate::scalar::GaussRat;

fn monomial_text<E: Exponent>(exps: &[E], vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (e, v) in exps.iter().zip(vars) {
        match e.to_i64() {
            0 => {}
            1 => parts.push(v.clone()),
            k => parts.push(format!("{v}^{k}")),
        }
    }
    parts.join("*")
}

/// Sign and unsigned body of one term.
fn term_text(c: &GaussRat, mono: &str) -> (bool, String) {
    let join = |coef: String| {
        if mono.is_empty() {
            coef
        } else {
            format!("{coef}*{mono}")
        }
    };
    if c.is_real() {
        let neg = c.re().is_negative();
        let abs = GaussRat::from_real(c.re().abs());
        if abs.is_one() && !mono.is_empty() {
            (neg, mono.to_string())
        } else {
            (neg, join(abs.to_string()))
        }
    } else if c.re().is_zero() {
        let neg = c.im().is_negative();
        let abs = GaussRat::new(Zero::zero(), c.im().abs());
        (neg, join(abs.to_string()))
    } else {
        (false, join(format!("({c})")))
    }
}

/// Formats `p` over the named variables, e.g. `x^2 + 2*i*x*y - y^2`.
pub fn format_poly<E: Exponent>(p: &SparsePoly<E>, vars: &[String]) -> String {
    assert_eq!(vars.len(), p.arity(), "variable names for every variable");
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let (neg, body) = term_text(c, &monomial_text(m, vars));
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

/// Default variable names `x1..xn`, or `x` when `n = 1`.
pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    if n == 1 {
        vec![prefix.to_string()]
    } else {
        (1..=n).map(|k| format!("{prefix}{k}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parser::{parse_laurent, parse_mpoly};
    use crate::poly::MPoly;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn formats_square_of_x_plus_iy() {
        let p = parse_mpoly("(x+i*y)^2", &["x", "y"]).unwrap();
        assert_eq!(format_poly(&p, &names(&["x", "y"])), "x^2 + 2*i*x*y - y^2");
    }

    #[test]
    fn zero_and_constants() {
        assert_eq!(format_poly(&MPoly::zero(2), &names(&["x", "y"])), "0");
        let p = parse_mpoly("-3/2 + x - x", &["x"]).unwrap();
        assert_eq!(format_poly(&p, &names(&["x"])), "-3/2");
    }

    #[test]
    fn complex_and_laurent_terms() {
        let vars = ["z"];
        let p = parse_laurent("(1/2-3*i)*z^-2 - i*z + 7", &vars).unwrap();
        let text = format_poly(&p, &names(&vars));
        assert_eq!(text, "-i*z + 7 + (1/2-3*i)*z^-2");
        assert_eq!(parse_laurent(&text, &vars).unwrap(), p);
    }

    #[test]
    fn default_variable_names() {
        assert_eq!(default_names("z", 1), vec!["z"]);
        assert_eq!(default_names("z", 2), vec!["z1", "z2"]);
    }
}
