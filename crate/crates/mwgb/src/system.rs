//! The plain-text system file format.
//!
//! ```text
//! # comment
//! p 101
//! vars 3
//! weights 2
//! 1 1 1
//! 1 2 3
//! gen 1 2 2 0; 1 3 0 1
//! gen 5 2 2 0; 100 3 0 1
//! dmax 12
//! ```
//!
//! Each `gen` line is one generator as `;`-separated terms, a term being a
//! coefficient followed by the `n` exponents. Coefficients are reduced
//! modulo `p` on parsing; terms are stored sorted under the file's own
//! graded order, so emitting reproduces a canonical byte form.

use crate::algebra::{Monomial, Polynomial, PrimeField};
use crate::error::{Error, Result};
use crate::grading::WeightMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemFile {
    pub field: PrimeField,
    pub weights: WeightMatrix,
    pub generators: Vec<Polynomial>,
    pub d_max: Option<i64>,
}

impl SystemFile {
    pub fn new(
        field: PrimeField,
        weights: WeightMatrix,
        generators: Vec<Polynomial>,
        d_max: Option<i64>,
    ) -> Self {
        SystemFile {
            field,
            weights,
            generators,
            d_max,
        }
    }

    pub fn n(&self) -> usize {
        self.weights.n()
    }

    pub fn k(&self) -> usize {
        self.weights.k()
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).parse()
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("p {}\n", self.field.modulus()));
        out.push_str(&format!("vars {}\n", self.n()));
        out.push_str(&format!("weights {}\n", self.k()));
        for row in self.weights.rows() {
            let cells: Vec<String> = row.iter().map(|w| w.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        for g in &self.generators {
            out.push_str("gen ");
            out.push_str(&g.to_term_text(self.n()));
            out.push('\n');
        }
        if let Some(d) = self.d_max {
            out.push_str(&format!("dmax {d}\n"));
        }
        out
    }
}

struct Parser<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Parser { lines, pos: 0 }
    }

    fn next_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let item = self
            .lines
            .get(self.pos)
            .copied()
            .ok_or_else(|| parse_err(self.lines.len() + 1, 1, format!("expected {what}")))?;
        self.pos += 1;
        Ok(item)
    }

    fn keyword_line(&mut self, keyword: &str) -> Result<(usize, &'a str)> {
        let (line, content) = self.next_line(&format!("'{keyword}' line"))?;
        match content.strip_prefix(keyword) {
            Some(rest) if rest.is_empty() || rest.starts_with(char::is_whitespace) => {
                Ok((line, rest.trim()))
            }
            _ => Err(parse_err(line, 1, format!("expected '{keyword}'"))),
        }
    }

    fn parse(mut self) -> Result<SystemFile> {
        let (pl, pv) = self.keyword_line("p")?;
        let p: u64 = pv
            .parse()
            .map_err(|_| parse_err(pl, 3, format!("invalid modulus '{pv}'")))?;
        let field = PrimeField::new(p)?;

        let (vl, vv) = self.keyword_line("vars")?;
        let n: usize = vv
            .parse()
            .map_err(|_| parse_err(vl, 6, format!("invalid variable count '{vv}'")))?;
        if n == 0 {
            return Err(Error::Validation(
                "at least one variable is required".into(),
            ));
        }

        let (kl, kv) = self.keyword_line("weights")?;
        let k: usize = kv
            .parse()
            .map_err(|_| parse_err(kl, 9, format!("invalid weight row count '{kv}'")))?;
        let mut rows = Vec::with_capacity(k);
        for _ in 0..k {
            let (line, content) = self.next_line("a weight row")?;
            let row: Vec<i64> = content
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| parse_err(line, 1, format!("invalid weight '{t}'")))
                })
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(parse_err(
                    line,
                    1,
                    format!("weight row has {} entries, expected {n}", row.len()),
                ));
            }
            rows.push(row);
        }
        let weights = WeightMatrix::new(rows)?;

        let mut generators = Vec::new();
        let mut d_max = None;
        while self.pos < self.lines.len() {
            let (line, content) = self.next_line("a 'gen' or 'dmax' line")?;
            if let Some(rest) = content.strip_prefix("gen") {
                let rest = rest.trim();
                let g = parse_generator(rest, line, n, &field, &weights)?;
                generators.push(g);
            } else if let Some(rest) = content.strip_prefix("dmax") {
                let rest = rest.trim();
                let d: i64 = rest
                    .parse()
                    .map_err(|_| parse_err(line, 6, format!("invalid degree bound '{rest}'")))?;
                d_max = Some(d);
            } else {
                return Err(parse_err(line, 1, format!("unexpected line '{content}'")));
            }
        }

        Ok(SystemFile {
            field,
            weights,
            generators,
            d_max,
        })
    }
}

fn parse_generator(
    text: &str,
    line: usize,
    n: usize,
    field: &PrimeField,
    weights: &WeightMatrix,
) -> Result<Polynomial> {
    let mut terms = Vec::new();
    for term in text.split(';') {
        let tokens: Vec<&str> = term.split_whitespace().collect();
        if tokens.len() != n + 1 {
            return Err(parse_err(
                line,
                1,
                format!(
                    "term '{}' has {} numbers, expected coefficient plus {n} exponents",
                    term.trim(),
                    tokens.len()
                ),
            ));
        }
        let coeff: i64 = tokens[0]
            .parse()
            .map_err(|_| parse_err(line, 1, format!("invalid coefficient '{}'", tokens[0])))?;
        let exps: Vec<u32> = tokens[1..]
            .iter()
            .map(|t| {
                t.parse()
                    .map_err(|_| parse_err(line, 1, format!("invalid exponent '{t}'")))
            })
            .collect::<Result<_>>()?;
        terms.push((Monomial::new(exps), field.normalize(coeff)));
    }
    let g = Polynomial::from_terms(terms, field, weights);
    if g.is_zero() {
        return Err(Error::Validation(format!(
            "generator on line {line} is zero modulo {}",
            field.modulus()
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn minimal_file_parses() {
        let sys = SystemFile::parse("p 101\nvars 1\nweights 1\n1\ngen 1 1\n").unwrap();
        assert_eq!(sys.field.modulus(), 101);
        assert_eq!(sys.n(), 1);
        assert_eq!(sys.generators.len(), 1);
        assert_eq!(sys.d_max, None);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a system\np 101\n\nvars 2 # two variables\nweights 1\n1 1\ngen 1 1 0; 1 0 1\ndmax 4\n";
        let sys = SystemFile::parse(text).unwrap();
        assert_eq!(sys.d_max, Some(4));
        assert_eq!(sys.generators[0].terms().len(), 2);
    }

    #[test]
    fn rank_deficient_weights_are_rejected() {
        let text = "p 101\nvars 2\nweights 2\n1 1\n2 2\ngen 1 1 0\n";
        assert!(matches!(SystemFile::parse(text), Err(Error::Validation(_))));
    }

    #[test]
    fn non_prime_modulus_is_rejected() {
        let text = "p 91\nvars 1\nweights 1\n1\ngen 1 1\n";
        assert!(matches!(SystemFile::parse(text), Err(Error::Validation(_))));
    }

    #[test]
    fn malformed_terms_carry_positions() {
        let text = "p 101\nvars 2\nweights 1\n1 1\ngen 1 1\n";
        match SystemFile::parse(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn coefficients_are_reduced_and_zero_generators_rejected() {
        let text = "p 101\nvars 1\nweights 1\n1\ngen -1 1\n";
        let sys = SystemFile::parse(text).unwrap();
        assert_eq!(sys.generators[0].terms()[0].1, 100);

        let text = "p 101\nvars 1\nweights 1\n1\ngen 101 1\n";
        assert!(matches!(SystemFile::parse(text), Err(Error::Validation(_))));
    }

    #[test]
    fn emit_then_parse_is_identity() {
        let text =
            "p 101\nvars 3\nweights 2\n1 1 1\n1 2 3\ngen 7 2 2 0; 100 3 0 1\ngen 1 0 3 0\ndmax 9\n";
        let sys = SystemFile::parse(text).unwrap();
        let emitted = sys.emit();
        let reparsed = SystemFile::parse(&emitted).unwrap();
        assert_eq!(sys, reparsed);
        assert_eq!(emitted, reparsed.emit());
    }

    proptest! {
        /// Round trip through emit/parse for arbitrary small systems.
        #[test]
        fn random_round_trips(
            seed_terms in prop::collection::vec(
                (1i64..101, prop::collection::vec(0u32..4, 2)),
                1..5,
            ),
            dmax in prop::option::of(1i64..20),
        ) {
            let field = PrimeField::new(101).unwrap();
            let weights = WeightMatrix::new(vec![vec![1, 1], vec![1, 2]]).unwrap();
            let terms: Vec<(Monomial, u64)> = seed_terms
                .into_iter()
                .map(|(c, e)| (Monomial::new(e), field.normalize(c)))
                .collect();
            let poly = Polynomial::from_terms(terms, &field, &weights);
            prop_assume!(!poly.is_zero());
            let sys = SystemFile::new(field, weights, vec![poly], dmax);
            let reparsed = SystemFile::parse(&sys.emit()).unwrap();
            prop_assert_eq!(sys, reparsed);
        }
    }
}
