use crate::arith::Field;
use crate::error::{Error, Result};
use crate::multipoly::{parse_poly, Monomial, MultiPoly, PolyRing};

/// A univariate polynomial with coefficients in `K[params]`, ascending.
#[derive(Debug, Clone)]
pub struct Univariate<F: Field> {
    pub coeffs: PolyRing<F>,
    pub terms: Vec<MultiPoly<F>>,
}

/// Parse `text` as a polynomial in `var` whose coefficients may involve the
/// given parameter names.
pub fn parse_univariate<F: Field>(field: &F, text: &str, var: &str, params: &[String]) -> Result<Univariate<F>> {
    if params.iter().any(|p| p == var) {
        return Err(Error::InvalidArgument(format!("parameter `{var}` clashes with the polynomial variable")));
    }
    let mut names = vec![var.to_string()];
    names.extend(params.iter().cloned());
    let ring = PolyRing::new(field.clone(), names);
    let p = parse_poly(text, &ring)?;
    let coeffs = PolyRing::new(field.clone(), params.to_vec());
    let degree = p.terms().map(|(m, _)| m.exponents()[0] as usize).max().unwrap_or(0);
    let mut parts: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); degree + 1];
    for (m, c) in p.terms() {
        let e = m.exponents();
        parts[e[0] as usize].push((Monomial::from_exponents(&e[1..]), c.clone()));
    }
    let terms = parts.into_iter().map(|t| coeffs.from_terms(t)).collect();
    Ok(Univariate { coeffs, terms })
}

/// Compact descending form such as `Z^3-14Z^2+49Z-36`.
pub fn format_univariate<F: Field>(terms: &[MultiPoly<F>], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in terms.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let text = c.to_string();
        let (negative, body) = match (c.num_terms(), text.strip_prefix('-')) {
            (1, Some(rest)) => (true, rest.to_string()),
            (1, None) => (false, text),
            (_, Some(_)) => (true, format!("({})", c.neg())),
            (_, None) => (false, format!("({text})")),
        };
        let body = if k > 0 && body == "1" {
            String::new()
        } else if k > 0 && c.num_terms() == 1 && !c.is_constant() {
            format!("{body}*")
        } else {
            body
        };
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&body);
        out.push_str(&power);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rationals;

    #[test]
    fn round_trip_numeric() {
        let u = parse_univariate(&Rationals, "Z^3-6Z^2+11Z-6", "Z", &[]).unwrap();
        assert_eq!(u.terms.len(), 4);
        assert_eq!(format_univariate(&u.terms, "Z"), "Z^3-6Z^2+11Z-6");
        let u = parse_univariate(&Rationals, "-Z + 1/2", "Z", &[]).unwrap();
        assert_eq!(format_univariate(&u.terms, "Z"), "-Z+1/2");
    }

    #[test]
    fn parametric_coefficients() {
        let params: Vec<String> = ["r1", "r2", "r3"].iter().map(|s| s.to_string()).collect();
        let u = parse_univariate(&Rationals, "Z^3 - r1 Z^2 + r2 Z - r3", "Z", &params).unwrap();
        assert_eq!(format_univariate(&u.terms, "Z"), "Z^3-r1*Z^2+r2*Z-r3");
        let u = parse_univariate(&Rationals, "Z^2 - (r1^2 - 2r2)Z + (r2 - r1)", "Z", &params).unwrap();
        assert_eq!(format_univariate(&u.terms, "Z"), "Z^2-(r1^2 - 2*r2)Z-(r1 - r2)");
    }

    #[test]
    fn zero_and_clash() {
        let u = parse_univariate(&Rationals, "Z - Z", "Z", &[]).unwrap();
        assert_eq!(format_univariate(&u.terms, "Z"), "0");
        assert!(parse_univariate(&Rationals, "Z", "Z", &["Z".to_string()]).is_err());
    }
}
