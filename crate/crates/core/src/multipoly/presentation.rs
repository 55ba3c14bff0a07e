use std::fmt;

use crate::arith::{field_create, DynField, FieldDescriptor};
use crate::error::{Error, Result};

use super::parse::{Cursor, PolyParser};
use super::{Monomial, MultiPoly, PolyRing};

/// An algebra given as `field[vars]/(relations)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub field: FieldDescriptor,
    pub variables: Vec<String>,
    pub relations: Vec<MultiPoly<DynField>>,
}

impl AlgebraPresentation {
    /// Build from already separated parts, parsing each relation string.
    pub fn from_parts(field: FieldDescriptor, variables: Vec<String>, relations: &[String]) -> Result<Self> {
        check_variables(&variables)?;
        let ring = PolyRing::new(field_create(&field)?, variables.clone());
        let parser = PolyParser::new(&ring);
        let mut rels = Vec::new();
        for text in relations {
            let mut cur = Cursor::new(text);
            rels.extend(relation_item(&parser, &ring, &mut cur)?);
            if !cur.at_end() {
                return Err(cur.error("unexpected trailing input"));
            }
        }
        Ok(AlgebraPresentation { field, variables, relations: rels })
    }

    pub fn ring(&self) -> PolyRing<DynField> {
        match self.relations.first() {
            Some(r) => r.ring().clone(),
            None => PolyRing::new(field_create(&self.field).expect("validated descriptor"), self.variables.clone()),
        }
    }

    /// The same algebra after extending scalars to a field of equal characteristic.
    pub fn base_change(&self, field: FieldDescriptor) -> Result<Self> {
        let target = field_create(&field)?;
        let ring = PolyRing::new(target.clone(), self.variables.clone());
        let relations = self
            .relations
            .iter()
            .map(|r| r.map_coefficients(&ring, |c| crate::arith::Field::from_scalar(&target, c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraPresentation { field, variables: self.variables.clone(), relations })
    }
}

fn check_variables(vars: &[String]) -> Result<()> {
    for (i, v) in vars.iter().enumerate() {
        let valid = v.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_')
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::Syntax { pos: 0, msg: format!("invalid variable name `{v}`") });
        }
        if vars[..i].contains(v) {
            return Err(Error::Syntax { pos: 0, msg: format!("duplicate variable `{v}`") });
        }
    }
    Ok(())
}

fn parse_field(cur: &mut Cursor<'_>) -> Result<FieldDescriptor> {
    let name = cur.identifier()?;
    let unsupported = |what: String| Error::UnsupportedField(what);
    match name.as_str() {
        "Q" => Ok(FieldDescriptor::Rationals),
        "GF" => {
            cur.expect('(')?;
            let p = cur.small_integer()?;
            cur.expect(',')?;
            let k = cur.small_integer()?;
            cur.expect(')')?;
            FieldDescriptor::galois(p, k as usize).map_err(|_| unsupported(format!("GF({p},{k})")))
        }
        s if s.starts_with('F') && s.len() > 1 && s[1..].bytes().all(|b| b.is_ascii_digit()) => {
            let p: u64 = s[1..].parse().map_err(|_| unsupported(s.to_string()))?;
            if crate::arith::is_prime(p) {
                Ok(FieldDescriptor::Prime(p))
            } else {
                Err(unsupported(format!("{s} ({p} is not prime)")))
            }
        }
        _ => Err(unsupported(name)),
    }
}

impl std::str::FromStr for FieldDescriptor {
    type Err = Error;

    /// `Q`, `F7` or `GF(2,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let field = parse_field(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(field)
    }
}

/// Either `(v1,..,vg)^k` or a single polynomial.
fn relation_item(
    parser: &PolyParser<'_, DynField>,
    ring: &PolyRing<DynField>,
    cur: &mut Cursor<'_>,
) -> Result<Vec<MultiPoly<DynField>>> {
    let save = cur.pos();
    if let Some(expanded) = try_ideal_power(ring, cur)? {
        return Ok(expanded);
    }
    cur.set_pos(save);
    Ok(vec![parser.expr(cur)?])
}

fn try_ideal_power(ring: &PolyRing<DynField>, cur: &mut Cursor<'_>) -> Result<Option<Vec<MultiPoly<DynField>>>> {
    if !cur.eat('(') {
        return Ok(None);
    }
    let mut names = Vec::new();
    loop {
        if !matches!(cur.peek(), Some(c) if c.is_ascii_alphabetic() || c == '_') {
            return Ok(None);
        }
        names.push(cur.identifier()?);
        if cur.eat(',') {
            continue;
        }
        if cur.eat(')') {
            break;
        }
        return Ok(None);
    }
    if !cur.eat('^') {
        return Ok(None);
    }
    let k = cur.small_integer()?;
    if !matches!(cur.peek(), Some(',') | Some(')') | None) {
        return Ok(None);
    }
    let Some(idx) = names.iter().map(|n| ring.var_index(n)).collect::<Option<Vec<_>>>() else {
        return Ok(None);
    };
    // a bare `(x)^2` is also an ordinary polynomial; both readings agree
    let one = crate::arith::Ring::one(ring.field());
    let out = Monomial::all_of_degree(idx.len(), k as u32)
        .into_iter()
        .map(|sub| {
            let mut exps = vec![0u16; ring.nvars()];
            for (j, e) in sub.exponents().iter().enumerate() {
                exps[idx[j]] += e;
            }
            ring.term(one.clone(), Monomial::from_exponents(&exps))
        })
        .collect();
    Ok(Some(out))
}

/// Parse `field[vars]/(relations)`.
pub fn parse_presentation(text: &str) -> Result<AlgebraPresentation> {
    let mut cur = Cursor::new(text);
    let field = parse_field(&mut cur)?;
    cur.expect('[')?;
    let mut variables = Vec::new();
    if !cur.eat(']') {
        loop {
            let at = {
                cur.skip_ws();
                cur.pos()
            };
            let v = cur.identifier()?;
            if variables.contains(&v) {
                return Err(Error::Syntax { pos: at, msg: format!("duplicate variable `{v}`") });
            }
            variables.push(v);
            if cur.eat(']') {
                break;
            }
            cur.expect(',')?;
        }
    }
    cur.expect('/')?;
    cur.expect('(')?;
    let ring = PolyRing::new(field_create(&field)?, variables.clone());
    let parser = PolyParser::new(&ring);
    let mut relations = Vec::new();
    if !cur.eat(')') {
        loop {
            relations.extend(relation_item(&parser, &ring, &mut cur)?);
            if cur.eat(')') {
                break;
            }
            cur.expect(',')?;
        }
    }
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(AlgebraPresentation { field, variables, relations })
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]/(", self.field, self.variables.join(","))?;
        for (i, r) in self.relations.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_descriptors_from_text() {
        assert_eq!("Q".parse::<FieldDescriptor>().unwrap(), FieldDescriptor::Rationals);
        assert_eq!("F7".parse::<FieldDescriptor>().unwrap(), FieldDescriptor::Prime(7));
        assert_eq!("GF(2,2)".parse::<FieldDescriptor>().unwrap().to_string(), "GF(2,2)");
        assert!("F8".parse::<FieldDescriptor>().is_err());
        assert!("Q x".parse::<FieldDescriptor>().is_err());
    }

    #[test]
    fn two_square_relations() {
        let p = parse_presentation("Q[x,y]/(x^2, y^2)").unwrap();
        assert_eq!(p.field, FieldDescriptor::Rationals);
        assert_eq!(p.variables, vec!["x", "y"]);
        assert_eq!(p.relations.len(), 2);
    }

    #[test]
    fn ideal_power_expands() {
        let p = parse_presentation("F2[x1,x2,x3,x4]/((x1,x2,x3,x4)^2)").unwrap();
        assert_eq!(p.field, FieldDescriptor::Prime(2));
        assert_eq!(p.relations.len(), 10);
        assert!(p.relations.iter().all(|r| r.num_terms() == 1 && r.total_degree() == Some(2)));
    }

    #[test]
    fn parenthesised_polynomial_is_not_an_ideal_power() {
        let p = parse_presentation("Q[x,y]/((x+y)^2, (x)^3, (xy)^2)").unwrap();
        assert_eq!(p.relations[0].to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(p.relations[1].to_string(), "x^3");
        assert_eq!(p.relations[2].to_string(), "x^2*y^2");
        assert!(parse_presentation("Q[x,y]/((x,y)^2 - x^2)").is_err());
    }

    #[test]
    fn empty_relations() {
        let p = parse_presentation("Q[x]/()").unwrap();
        assert!(p.relations.is_empty());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_presentation("R[x]/(x)"), Err(Error::UnsupportedField(_))));
        assert!(matches!(parse_presentation("F4[x]/(x)"), Err(Error::UnsupportedField(_))));
        assert_eq!(parse_presentation("Q[x]/(y^2)"), Err(Error::UnknownVariable("y".into())));
        assert!(matches!(parse_presentation("Q[x]/(x^2"), Err(Error::Syntax { pos: 9, .. })));
    }

    #[test]
    fn extension_field_generator() {
        let p = parse_presentation("GF(2,2)[x]/(x^2 + t*x + t + 1)").unwrap();
        assert_eq!(p.to_string(), "GF(2,2)[x]/(x^2 + t*x + (t+1))");
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "Q[x,y]/(x^2+y^3, x*y)",
            "Q[x,y,z]/(x^2, x*y, y^2 - x*z, 1/2*z^3)",
            "F7[x]/(x^4 - 3)",
            "GF(3,2)[a,b]/(a^2 - t, b^3, a*b)",
            "Q[]/()",
        ] {
            let p = parse_presentation(text).unwrap();
            let q = parse_presentation(&p.to_string()).unwrap();
            assert_eq!(p, q, "{text}");
        }
    }

    #[test]
    fn base_change_to_extension() {
        let p = parse_presentation("F2[x,y]/(x^2, y^2+x)").unwrap();
        let q = p.base_change(FieldDescriptor::galois(2, 2).unwrap()).unwrap();
        assert_eq!(q.to_string(), "GF(2,2)[x,y]/(x^2, y^2 + x)");
    }
}
